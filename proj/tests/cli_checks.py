"""CLI checks driven from ctest.

usage: cli_checks.py smoke|schemas CLI SCHEMA_DIR DATA_DIR

smoke   checks documented outputs and exit codes
schemas validates every verb's JSON output against the checked-in schemas
"""

import json
import subprocess
import sys


def run(cli, *args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def smoke(cli, data):
    failures = []

    def expect(args, code, check=None):
        rc, out, err = run(cli, *args)
        if rc != code:
            failures.append(f"{' '.join(args)}: exit {rc}, expected {code} ({err.strip()})")
            return
        if not out.endswith("\n") and out:
            failures.append(f"{' '.join(args)}: output not newline-terminated")
        if check is not None:
            try:
                ok = check(out)
            except Exception as exc:  # a malformed output is a failure too
                ok = False
                err = str(exc)
            if not ok:
                failures.append(f"{' '.join(args)}: unexpected output {out.strip()[:200]}")

    expect(["count", "as", "--p", "2", "--q", "2", "--max-break", "3", "--brute-force"], 0,
           lambda o: json.loads(o)["classes"] == 8 and json.loads(o)["oracle"]["agrees"])
    expect(["kummer", "canon", "--p", "5", "--n", "4", "--series", "2*t^7"], 0,
           lambda o: json.loads(o) == {"n": 4, "q_exp": 3, "unit_class": 1})
    expect(["mass", "--groupoid", f"{data}/bg_z3.json"], 0, lambda o: json.loads(o)["mass"] == "1/3")
    expect(["as", "canon", "--p", "5", "--series", "t^-7 + 3*t^-2 + 1"], 0,
           lambda o: json.loads(o)["support"] == {"2": "3", "7": "1"})
    expect(["as", "canon", "--p", "2", "--e", "2", "--series", "g^2*t^-1"], 0)
    expect(["as", "canon", "--p", "5", "--series", "t^"], 1)
    expect(["as", "canon", "--p", "5", "--series", "g*t^-1"], 1)
    expect(["count", "kummer", "--p", "5", "--n", "5"], 2)
    expect(["count", "kummer", "--p", "7", "--n", "3", "--brute-force"], 0, lambda o: json.loads(o)["classes"] == 9)
    expect(["count", "as", "--p", "2", "--max-break", "3", "--format", "csv"], 0,
           lambda o: o.splitlines()[0] == "class_id,break,aut_order,multiplicity" and len(o.splitlines()) == 9)
    expect(["semidirect", "enum", "--p", "3", "--r", "1", "--n", "2", "--psi", "[-1]", "--q-exp", "1",
            "--break-bound", "4", "--brute-force"], 0, lambda o: json.loads(o)["classes"] == 3)
    expect(["semidirect", "enum", "--p", "5", "--n", "4", "--psi", "[4]", "--q-exp", "2", "--max-break", "2"], 0,
           lambda o: json.loads(o)["classes"] == 25 and json.loads(o)["reduction"]["d"] == 2)
    expect(["semidirect", "enum", "--p", "3", "--n", "2", "--psi", "[1,2", "--max-break", "1"], 1)
    expect(["semidirect", "enum", "--p", "3", "--n", "2", "--psi", "[1]", "--q-exp", "1", "--max-break", "1"], 0)
    expect(["semidirect", "enum", "--p", "3", "--n", "4", "--psi", "[2]", "--q-exp", "1", "--max-break", "1"], 2)
    expect(["rigidify", "--groupoid", f"{data}/bg_z4.json", "--subgroup", f"{data}/z4_sub_z2.json"], 0,
           lambda o: json.loads(o)["mass"] == "1/2")
    expect(["check-colim", "--seed", "3"], 0, lambda o: json.loads(o)["ok"])
    expect(["mass", "--groupoid", f"{data}/missing.json"], 1)
    expect(["frobnicate"], 1)
    # determinism
    a = run(cli, "count", "as", "--p", "3", "--max-break", "2")[1]
    b = run(cli, "count", "as", "--p", "3", "--max-break", "2")[1]
    if a != b:
        failures.append("count as output is not deterministic")
    return failures


def schemas(cli, schema_dir, data):
    import jsonschema

    cases = [
        ("as_canonical", ["as", "canon", "--p", "2", "--e", "2", "--series", "g*t^-5 + t^-3 + 1"]),
        ("kummer_class", ["kummer", "canon", "--p", "5", "--n", "4", "--series", "2*t^7"]),
        ("iso", ["as", "iso", "--p", "2", "--series", "t^-3+t", "--to", "t^-3 + t^2 + t"]),
        ("iso", ["kummer", "iso", "--p", "5", "--n", "4", "--series", "2*t^7", "--to", "t^3"]),
        ("iso", ["kummer", "iso", "--p", "5", "--n", "2", "--series", "t^3", "--to", "4*t^5"]),
        ("census_as", ["count", "as", "--p", "2", "--e", "2", "--max-break", "3", "--brute-force"]),
        ("census_kummer", ["count", "kummer", "--p", "5", "--n", "4", "--brute-force"]),
        ("census_semidirect", ["semidirect", "enum", "--p", "3", "--n", "2", "--psi", "[-1]", "--q-exp", "1",
                               "--max-break", "4", "--brute-force"]),
        ("census_semidirect", ["semidirect", "enum", "--p", "5", "--n", "4", "--psi", "[2]", "--q-exp", "2",
                               "--max-break", "2"]),
        ("mass", ["mass", "--groupoid", f"{data}/two_components.json"]),
        ("rigidify", ["rigidify", "--groupoid", f"{data}/bg_z4.json", "--subgroup", f"{data}/z4_sub_z2.json"]),
        ("check_colim", ["check-colim", "--seed", "11", "--trials", "10"]),
        ("selftest", ["selftest", "--format", "json"]),
    ]
    failures = []
    for schema_name, args in cases:
        with open(f"{schema_dir}/{schema_name}.schema.json") as fh:
            schema = json.load(fh)
        rc, out, err = run(cli, *args)
        if rc != 0:
            failures.append(f"{' '.join(args)}: exit {rc} ({err.strip()})")
            continue
        doc = json.loads(out)
        try:
            jsonschema.validate(doc, schema)
        except jsonschema.ValidationError as exc:
            failures.append(f"{' '.join(args)}: {exc.message}")
            continue
        if out.strip() != json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False):
            failures.append(f"{' '.join(args)}: keys not sorted")
    # the groupoid data files themselves
    with open(f"{schema_dir}/groupoid.schema.json") as fh:
        gschema = json.load(fh)
    for name in ("bg_z3", "bg_z4", "two_components"):
        with open(f"{data}/{name}.json") as fh:
            try:
                jsonschema.validate(json.load(fh), gschema)
            except jsonschema.ValidationError as exc:
                failures.append(f"data/{name}.json: {exc.message}")
    return failures


def main():
    mode, cli, schema_dir, data = sys.argv[1:5]
    failures = smoke(cli, data) if mode == "smoke" else schemas(cli, schema_dir, data)
    for f in failures:
        print("FAIL", f)
    print(f"{mode}: {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
