// ftk command line: canonical forms, isomorphism witnesses, class censuses
// with optional brute-force cross-checks, groupoid bookkeeping, selftest.
//
// Exit codes: 0 ok, 1 parse error, 2 domain violation, 3 oracle mismatch.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "ftk/acceptance.hpp"
#include "ftk/artin_schreier.hpp"
#include "ftk/errors.hpp"
#include "ftk/io.hpp"
#include "ftk/kummer.hpp"
#include "ftk/oracles.hpp"
#include "ftk/parse.hpp"
#include "ftk/semidirect.hpp"

namespace {

using namespace ftk;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitMismatch = 3;

struct Options {
  std::uint32_t p = 2;
  std::uint32_t e = 0;  // 0: derive from --q, else 1
  std::uint64_t q = 0;
  std::uint64_t n = 1;
  std::optional<int> r;
  std::string psi;
  std::uint64_t q_exp = 1;
  std::int64_t max_break = 0;
  std::optional<std::int64_t> prec;
  std::uint64_t seed = kDefaultSeed;
  bool brute_force = false;
  std::string format = "json";
  std::string series, other;
  std::string groupoid, subgroup;
  int trials = 50;
};

FieldPtr field_of(const Options& o) {
  if (!is_prime(o.p)) throw DomainError("--p must be prime");
  if (o.q == 0) return FiniteField::get(o.p, o.e == 0 ? 1 : o.e);
  std::uint32_t e = 0;
  std::uint64_t x = 1;
  while (x < o.q) {
    x *= o.p;
    ++e;
  }
  if (x != o.q) throw DomainError("--q must be a power of --p");
  if (o.e != 0 && o.e != e) throw DomainError("--q and --e disagree");
  return FiniteField::get(o.p, e);
}

LaurentSeries series_arg(const std::string& text, const FieldPtr& k, const Options& o) {
  return parse_series(text, CoeffRing::field(k), o.prec);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "'", e.byte > 0 ? e.byte - 1 : 0);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Census rows: class_id is the compact canonical-form JSON (key when set,
// else the whole class record).
struct Row {
  json cls;
  std::optional<std::int64_t> brk;
  std::uint64_t aut_order = 1;
  std::uint64_t multiplicity = 1;
  json key = nullptr;
  std::string id() const { return key.is_null() ? cls.dump() : key.dump(); }
};

void sort_rows(std::vector<Row>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    const auto ka = a.brk.value_or(-1), kb = b.brk.value_or(-1);
    if (ka != kb) return ka < kb;
    return a.id() < b.id();
  });
}

void emit_census(const Options& o, json header, const std::vector<Row>& rows) {
  if (o.format == "csv") {
    std::cout << "class_id,break,aut_order,multiplicity\n";
    for (const Row& r : rows)
      std::cout << csv_field(r.id()) << ',' << (r.brk ? std::to_string(*r.brk) : "") << ',' << r.aut_order << ','
                << r.multiplicity << '\n';
    return;
  }
  json list = json::array();
  for (const Row& r : rows)
    list.push_back({{"class_id", r.id()},
                    {"class", r.cls},
                    {"break", r.brk ? json(*r.brk) : json(nullptr)},
                    {"aut_order", r.aut_order},
                    {"multiplicity", r.multiplicity}});
  header["rows"] = list;
  header["classes"] = rows.size();
  std::cout << header.dump() << '\n';
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void require_json_format(const Options& o) {
  if (o.format != "json") throw ParseError("--format csv is only available for census verbs", 0);
}

// ---------------------------------------------------------------- verbs

int as_canon(const Options& o) {
  require_json_format(o);
  const auto k = field_of(o);
  emit(to_json(as_canonicalize(series_arg(o.series, k, o))));
  return kExitOk;
}

int as_iso(const Options& o) {
  require_json_format(o);
  const auto k = field_of(o);
  const auto a = series_arg(o.series, k, o), b = series_arg(o.other, k, o);
  const auto w = as_iso_witness(a, b);
  emit({{"isomorphic", w.has_value()}, {"witness", w ? to_json(*w) : json(nullptr)}});
  return kExitOk;
}

int kummer_canon(const Options& o) {
  require_json_format(o);
  const auto k = field_of(o);
  emit(to_json(kummer_canonicalize(series_arg(o.series, k, o), o.n)));
  return kExitOk;
}

int kummer_iso(const Options& o) {
  require_json_format(o);
  const auto k = field_of(o);
  const auto a = series_arg(o.series, k, o), b = series_arg(o.other, k, o);
  const auto w = kummer_iso_witness(a, b, o.n);
  emit({{"isomorphic", w.has_value()}, {"witness", w ? to_json(*w) : json(nullptr)}});
  return kExitOk;
}

int count_as(const Options& o) {
  const auto k = field_of(o);
  if (o.max_break < 0) throw DomainError("--max-break must be >= 0");
  std::vector<Row> rows;
  for (const auto& c : enumerate_as_classes(k, o.max_break)) rows.push_back({to_json(c), as_break(c), k->p(), 1});
  sort_rows(rows);
  json header = {{"kind", "artin_schreier"}, {"p", k->p()}, {"q", k->q()}, {"max_break", o.max_break}};
  int code = kExitOk;
  if (o.brute_force) {
    const auto orb = oracle::artin_schreier_orbits(k, o.max_break);
    const bool agree = orb.count.orbits == rows.size();
    header["oracle"] = {{"classes", orb.count.orbits}, {"window_elements", orb.count.elements}, {"agrees", agree}};
    if (!agree) code = kExitMismatch;
  }
  emit_census(o, header, rows);
  if (code != kExitOk) std::cerr << "error: brute-force oracle disagrees\n";
  return code;
}

int count_kummer(const Options& o) {
  const auto k = field_of(o);
  require_tame(*k, o.n);
  const std::uint64_t aut = kummer_automorphisms(*k, o.n).size();
  std::vector<Row> rows;
  for (const auto& c : enumerate_kummer_classes(*k, o.n)) rows.push_back({to_json(c), std::nullopt, aut, 1});
  sort_rows(rows);
  json header = {{"kind", "kummer"}, {"p", k->p()}, {"q", k->q()}, {"n", o.n}};
  int code = kExitOk;
  if (o.brute_force) {
    const auto orb = oracle::kummer_orbits(k, o.n);
    const bool agree = orb.orbits == rows.size();
    header["oracle"] = {{"classes", orb.orbits}, {"window_elements", orb.elements}, {"agrees", agree}};
    if (!agree) code = kExitMismatch;
  }
  emit_census(o, header, rows);
  if (code != kExitOk) std::cerr << "error: brute-force oracle disagrees\n";
  return code;
}

int semidirect_enum(const Options& o) {
  const auto k = field_of(o);
  // without --r the rank is read off --psi
  const FpMatrix psi = o.psi.empty() ? FpMatrix::identity(o.p, o.r.value_or(1)) : parse_psi(o.psi, o.p);
  SemidirectGroup g{o.p, o.r.value_or(psi.r()), o.n, psi};
  validate(g);
  const auto red = reduce_to_coprime(g, o.q_exp);
  const TameFrame f = make_frame(k, red.n, red.q_exp);
  const auto classes = enumerate_g_torsors(red.group, f, o.max_break, o.prec.value_or(0));
  std::vector<Row> rows;
  for (const auto& c : classes) {
    const json cj = to_json(c);
    rows.push_back({cj, c.break_, c.aut_count, 1, {{"canonical", cj["canonical"]}, {"shift", c.shift_code}}});
  }
  sort_rows(rows);
  json header = {{"kind", "semidirect"},
                 {"group", to_json(g)},
                 {"q", k->q()},
                 {"q_exp", o.q_exp % o.n},
                 {"break_bound", o.max_break},
                 {"reduction", {{"d", red.d}, {"n", red.n}, {"q_exp", red.q_exp}, {"group", to_json(red.group)}}}};
  int code = kExitOk;
  if (o.brute_force) {
    const auto census = oracle::semidirect_census(g, k, o.q_exp, o.max_break);
    std::vector<std::uint64_t> auts;
    for (const auto& r : rows) auts.push_back(r.aut_order);
    std::sort(auts.begin(), auts.end());
    const bool agree = census.classes == rows.size() && census.aut_orders == auts;
    header["oracle"] = {{"classes", census.classes}, {"objects", census.objects}, {"agrees", agree}};
    if (!agree) code = kExitMismatch;
  }
  emit_census(o, header, rows);
  if (code != kExitOk) std::cerr << "error: brute-force oracle disagrees\n";
  return code;
}

int mass_verb(const Options& o) {
  require_json_format(o);
  const auto g = groupoid_from_json(read_json_file(o.groupoid));
  auto auts = aut_orders(g);
  std::sort(auts.begin(), auts.end());
  emit({{"mass", to_string(groupoid_mass(g))}, {"classes", auts.size()}, {"aut_orders", auts}});
  return kExitOk;
}

int rigidify_verb(const Options& o) {
  require_json_format(o);
  const auto g = groupoid_from_json(read_json_file(o.groupoid));
  const auto h = subgroup_from_json(g, read_json_file(o.subgroup));
  const auto rig = rigidify(g, h);
  emit({{"groupoid", to_json(rig)}, {"mass", to_string(groupoid_mass(rig))}});
  return kExitOk;
}

int check_colim(const Options& o) {
  require_json_format(o);
  if (o.trials < 1) throw DomainError("--trials must be positive");
  std::mt19937_64 rng(o.seed);
  int passed = 0;
  for (int i = 0; i < o.trials; ++i) passed += colim_fiber_product_check(random_cospan_system(rng, 4, 6));
  emit({{"seed", o.seed}, {"trials", o.trials}, {"passed", passed}, {"ok", passed == o.trials}});
  return passed == o.trials ? kExitOk : kExitMismatch;
}

int selftest(const Options& o) {
  int failed = 0;
  json results = json::array();
  run_acceptance(o.seed, {}, [&](const CriterionResult& r) {
    failed += !r.pass;
    if (o.format == "json") {
      results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
    } else {
      std::cout << format_result(r) << std::endl;
    }
  });
  if (o.format == "json") emit({{"seed", o.seed}, {"criteria", results}, {"failed", failed}});
  return failed ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ftk: torsors over the formal punctured disk, exactly"};
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* c) {
    c->add_option("--p", o.p, "characteristic")->required();
    c->add_option("--e", o.e, "extension degree (default 1)");
    c->add_option("--q", o.q, "field size, alternative to --e");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_series = [&](CLI::App* c, bool two) {
    c->add_option("--series", o.series, "series, e.g. \"t^-7 + 3*t^-2 + 1\"")->required();
    if (two) c->add_option("--to", o.other, "second series")->required();
    c->add_option("--prec", o.prec, "precision (drops terms at or above it)");
  };
  auto add_break = [&](CLI::App* c) {
    c->add_option("--max-break,--break-bound", o.max_break, "break bound")->required();
  };

  int (*verb)(const Options&) = nullptr;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (*fn)(const Options&),
                  bool format = true) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&verb, fn] { verb = fn; });
    if (format) add_format(c);
    return c;
  };

  CLI::App* as = app.add_subcommand("as", "Artin-Schreier covers");
  as->require_subcommand(1);
  auto* as_c = leaf(as, "canon", "canonical form of u^p - u = b", as_canon);
  add_field(as_c);
  add_series(as_c, false);
  auto* as_i = leaf(as, "iso", "isomorphism witness between two covers", as_iso);
  add_field(as_i);
  add_series(as_i, true);

  CLI::App* km = app.add_subcommand("kummer", "Kummer covers");
  km->require_subcommand(1);
  auto* km_c = leaf(km, "canon", "canonical class of Y^n = b", kummer_canon);
  add_field(km_c);
  add_series(km_c, false);
  km_c->add_option("--n", o.n, "degree")->required();
  auto* km_i = leaf(km, "iso", "isomorphism witness between two covers", kummer_iso);
  add_field(km_i);
  add_series(km_i, true);
  km_i->add_option("--n", o.n, "degree")->required();

  CLI::App* count = app.add_subcommand("count", "class censuses");
  count->require_subcommand(1);
  auto* ca = leaf(count, "as", "Artin-Schreier classes with break <= bound", count_as);
  add_field(ca);
  add_break(ca);
  ca->add_flag("--brute-force", o.brute_force, "cross-check against exhaustive orbit counting");
  auto* ck = leaf(count, "kummer", "Kummer classes of degree n", count_kummer);
  add_field(ck);
  ck->add_option("--n", o.n, "degree")->required();
  ck->add_flag("--brute-force", o.brute_force, "cross-check against exhaustive orbit counting");

  CLI::App* sd = app.add_subcommand("semidirect", "torsors under (Z/p)^r x| C_n");
  sd->require_subcommand(1);
  auto* se = leaf(sd, "enum", "enumerate classes", semidirect_enum);
  add_field(se);
  add_break(se);
  se->add_option("--r", o.r, "rank of H (default: size of --psi, else 1)");
  se->add_option("--n", o.n, "order of the tame quotient")->required();
  se->add_option("--psi", o.psi, "action matrix as JSON, e.g. \"[-1]\" or \"[[0,1],[1,0]]\"");
  se->add_option("--q-exp", o.q_exp, "tame exponent: Y^n = t^q_exp");
  se->add_option("--prec", o.prec, "working precision (default 2B+32)");
  se->add_flag("--brute-force", o.brute_force, "cross-check against the exhaustive census");

  auto* ms = leaf(&app, "mass", "groupoid cardinality", mass_verb);
  ms->add_option("--groupoid", o.groupoid, "groupoid JSON file")->required();
  auto* rg = leaf(&app, "rigidify", "quotient automorphisms by a central subgroup", rigidify_verb);
  rg->add_option("--groupoid", o.groupoid, "groupoid JSON file")->required();
  rg->add_option("--subgroup", o.subgroup, "subgroup JSON file")->required();
  auto* cc = leaf(&app, "check-colim", "colimits commute with fiber products on random systems", check_colim);
  cc->add_option("--seed", o.seed, "random seed");
  cc->add_option("--trials", o.trials, "number of random systems");
  auto* st = leaf(&app, "selftest", "run the acceptance suite", selftest, false);
  st->add_option("--seed", o.seed, "random seed");
  st->add_option("--format", o.format, "text (default) or json")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }
  // selftest prints plain lines unless --format json was given
  if (verb == selftest && st->count("--format") == 0) o.format = "text";

  try {
    return verb(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
