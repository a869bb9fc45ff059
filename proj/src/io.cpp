#include "ftk/io.hpp"

#include <map>

#include "ftk/errors.hpp"
#include "ftk/parse.hpp"

namespace ftk {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'", 0);
  return j.at(key);
}

}  // namespace

json to_json(const LaurentSeries& s) {
  const CoeffRing& R = s.r();
  json coeffs = json::array();
  for (Elem c : s.stored()) coeffs.push_back(R.format(c));
  return {{"ring", {{"p", R.p()}, {"e", R.k().e()}, {"m", R.m()}}},
          {"val", s.val()},
          {"prec", s.prec()},
          {"coeffs", coeffs},
          {"text", render_series(s)}};
}

LaurentSeries series_from_json(const json& j) {
  const json& ring = require(j, "ring");
  const auto k = FiniteField::get(require(ring, "p").get<std::uint32_t>(), ring.value("e", 1u));
  const RingPtr R = CoeffRing::get(k, ring.value("m", 1));
  std::vector<Elem> coeffs;
  for (const auto& c : require(j, "coeffs")) coeffs.push_back(parse_coefficient(c.get<std::string>(), R));
  return LaurentSeries(R, require(j, "val").get<std::int64_t>(), std::move(coeffs),
                       require(j, "prec").get<std::int64_t>());
}

json to_json(const ASCanonical& c) {
  json support = json::object();
  for (const auto& [s, v] : c.support) support[std::to_string(s)] = c.field->format(v);
  return {{"support", support},
          {"constant_class", c.field->format(c.constant_class)},
          {"p", c.field->p()},
          {"q", c.field->q()}};
}

ASCanonical as_canonical_from_json(const json& j) {
  const auto p = require(j, "p").get<std::uint32_t>();
  const auto q = require(j, "q").get<std::uint32_t>();
  std::uint32_t e = 0;
  for (std::uint64_t x = 1; x < q; x *= p) ++e;
  const auto k = FiniteField::get(p, e);
  if (k->q() != q) throw ParseError("q is not a power of p", 0);
  const RingPtr R = CoeffRing::field(k);
  ASCanonical c{k, {}, parse_coefficient(require(j, "constant_class").get<std::string>(), R)};
  for (const auto& [key, v] : require(j, "support").items()) {
    c.support.emplace(std::stoll(key), parse_coefficient(v.get<std::string>(), R));
  }
  validate(c);
  return c;
}

json to_json(const KummerClass& c) { return {{"n", c.n}, {"q_exp", c.q_exp}, {"unit_class", c.unit_class}}; }

json to_json(const IndPoint& a) {
  json v = json::array();
  for (Elem x : a.value) v.push_back(a.field->format(x));
  return {{"level", a.level}, {"r", a.r}, {"value", v}};
}

json to_json(const SemidirectGroup& g) {
  json psi = json::array();
  for (int i = 0; i < g.r; ++i) {
    json row = json::array();
    for (int j = 0; j < g.r; ++j) row.push_back(g.psi.at(i, j));
    psi.push_back(row);
  }
  return {{"p", g.p}, {"r", g.r}, {"n", g.n}, {"psi", psi}};
}

FpMatrix parse_psi(const std::string& text, std::uint32_t p) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("psi is not a JSON matrix", e.byte > 0 ? e.byte - 1 : 0);
  }
  std::vector<std::vector<std::int64_t>> rows;
  if (j.is_array() && !j.empty() && j[0].is_number()) {
    // A bare list is a 1 x 1 matrix or a diagonal.
    const std::size_t r = j.size();
    rows.assign(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) rows[i][i] = j[i].get<std::int64_t>();
  } else if (j.is_array()) {
    for (const auto& row : j) rows.push_back(row.get<std::vector<std::int64_t>>());
  } else {
    throw ParseError("psi must be a JSON array", 0);
  }
  return FpMatrix::from_rows(p, rows);
}

SemidirectGroup semidirect_group_from_json(const json& j) {
  SemidirectGroup g;
  g.p = require(j, "p").get<std::uint32_t>();
  g.n = require(j, "n").get<std::uint64_t>();
  g.r = require(j, "r").get<int>();
  g.psi = parse_psi(require(j, "psi").dump(), g.p);
  validate(g);
  return g;
}

json to_json(const GTorsorClass& c) {
  json canon = json::array();
  for (const auto& x : c.canon) canon.push_back(to_json(x));
  json u = json::array();
  for (const auto& s : c.zphi.u) u.push_back(render_series(s));
  return {{"canonical", canon},
          {"break", c.break_ ? json(*c.break_) : json(nullptr)},
          {"shift", c.shift_code},
          {"witness", u},
          {"aut_order", c.aut_count}};
}

FiniteGroupoid groupoid_from_json(const json& j) {
  const auto objects = require(j, "objects").get<std::vector<std::string>>();
  std::map<std::string, int> obj_index;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!obj_index.emplace(objects[i], static_cast<int>(i)).second) {
      throw ParseError("duplicate object '" + objects[i] + "'", 0);
    }
  }
  std::vector<Arrow> arrows;
  std::map<std::string, int> arrow_index;
  for (const auto& [key, labels] : require(j, "homs").items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) throw ParseError("hom key '" + key + "' is not of the form x|y", 0);
    const auto src = obj_index.find(key.substr(0, bar));
    const auto dst = obj_index.find(key.substr(bar + 1));
    if (src == obj_index.end() || dst == obj_index.end()) throw ParseError("hom key '" + key + "' names an unknown object", 0);
    for (const auto& l : labels) {
      const std::string label = l.get<std::string>();
      if (!arrow_index.emplace(label, static_cast<int>(arrows.size())).second) {
        throw ParseError("arrow label '" + label + "' is used twice", 0);
      }
      arrows.push_back({src->second, dst->second, label});
    }
  }
  const json& compose = require(j, "compose");
  return {objects, arrows, [&](int g, int f) {
            const std::string key = arrows[static_cast<std::size_t>(g)].label + "|" + arrows[static_cast<std::size_t>(f)].label;
            if (!compose.contains(key)) throw DomainError("composition table lacks " + key);
            const auto it = arrow_index.find(compose.at(key).get<std::string>());
            if (it == arrow_index.end()) throw DomainError("composite of " + key + " is not an arrow");
            return it->second;
          }};
}

json to_json(const FiniteGroupoid& g) {
  json homs = json::object();
  for (const Arrow& a : g.arrows()) homs[g.object(a.src) + "|" + g.object(a.dst)].push_back(a.label);
  json compose = json::object();
  for (int f = 0; f < static_cast<int>(g.arrow_count()); ++f)
    for (int h : g.out(g.arrow(f).dst)) compose[g.arrow(h).label + "|" + g.arrow(f).label] = g.arrow(g.compose(h, f)).label;
  return {{"objects", g.objects()}, {"homs", homs}, {"compose", compose}};
}

CentralAutSubgroup subgroup_from_json(const FiniteGroupoid& g, const json& j) {
  std::map<std::string, int> arrow_index;
  for (int f = 0; f < static_cast<int>(g.arrow_count()); ++f) arrow_index[g.arrow(f).label] = f;
  CentralAutSubgroup h;
  for (const auto& name : g.objects()) {
    std::vector<int> hx;
    for (const auto& l : require(j, name.c_str())) {
      const auto it = arrow_index.find(l.get<std::string>());
      if (it == arrow_index.end()) throw ParseError("unknown arrow '" + l.get<std::string>() + "' in subgroup", 0);
      hx.push_back(it->second);
    }
    h.h.push_back(std::move(hx));
  }
  validate(g, h);
  return h;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace ftk
