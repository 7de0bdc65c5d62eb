"""Validates fixtures and CLI reports against the published JSON schemas."""

import hashlib
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ROOT = Path(__file__).resolve().parent.parent
SCHEMAS = ROOT / "schemas" / "v1"
DATA = ROOT / "data"

FIXTURE_SCHEMA = {
    "trefoil.json": "presentation",
    "hopf.json": "presentation",
    "free2.json": "presentation",
    "conic_braids.json": "braids",
    "cubic_cusp_braids.json": "braids",
    "cusp_tree.json": "tree",
    "zariski_sextic_conic.json": "curve",
    "sextic_generic_cusps.json": "curve",
    "sextic_nine_cusps.json": "curve",
    "three_lines.json": "curve",
}

RUNS = [
    ["local", "--germ", "x^2 + y^3"],
    ["local", "--germ", "x^2 - y^3", "--germ", "x^3 - y^2"],
    ["local", "--tree", str(DATA / "cusp_tree.json")],
    ["global", "--curve", str(DATA / "zariski_sextic_conic.json"), "--cyclic", "6"],
    ["global", "--curve", str(DATA / "sextic_nine_cusps.json")],
    ["global", "--curve", str(DATA / "three_lines.json")],
    ["fox", "--presentation", str(DATA / "trefoil.json")],
    ["fox", "--presentation", str(DATA / "hopf.json")],
    ["fox", "--presentation", str(DATA / "free2.json")],
    ["charvar", "--presentation", str(DATA / "trefoil.json"), "--character", "1/6"],
    ["charvar", "--character", "1/3,1/3,1/3", "--koszul", "3,2"],
    ["covers", "--presentation", str(DATA / "trefoil.json"), "--cyclic", "6"],
    ["covers", "--polynomial", "t^2 - t + 1", "--cyclic", "6", "--semisimple"],
    ["quasiadj", "--germ", "x^2 + y^3", "--xi", "1/6", "--member", "x"],
    ["quasiadj", "--newton", "2,3,6,1,1,1"],
    ["lct", "--germ", "x^2 + y^3", "--gamma", "5/6"],
    ["vankampen", "--braids", str(DATA / "conic_braids.json"), "--projective"],
    ["vankampen", "--braids", str(DATA / "cubic_cusp_braids.json")],
    ["faces", "--germ", "x^2 + y^3"],
    ["faces", "--germ", "x^2 - y^3", "--germ", "x^3 - y^2"],
    ["faces", "--curve", str(DATA / "zariski_sextic_conic.json")],
]


def registry():
    reg = Registry()
    for path in SCHEMAS.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        res = Resource.from_contents(schema)
        reg = reg.with_resource(schema["$id"], res)
    return reg


def validator(reg, name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema, registry=reg)


def problems(v, doc):
    return [f"{'/'.join(map(str, e.absolute_path))}: {e.message}" for e in v.iter_errors(doc)]


def run(cli, args):
    p = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True, check=False)
    return p.returncode, p.stdout, p.stderr


def main():
    cli = sys.argv[1]
    reg = registry()
    failures = []

    for name, kind in FIXTURE_SCHEMA.items():
        errs = problems(validator(reg, kind), json.loads((DATA / name).read_text()))
        failures += [f"{name}: {e}" for e in errs]

    report = validator(reg, "report")
    for args in RUNS:
        label = " ".join(args[:3])
        code, out, err = run(cli, args)
        if code != 0:
            failures.append(f"{label}: exit {code}: {err.strip()}")
            continue
        doc = json.loads(out)
        failures += [f"{label}: {e}" for e in problems(report, doc)]
        again = run(cli, args)[1]
        if hashlib.sha256(out.encode()).digest() != hashlib.sha256(again.encode()).digest():
            failures.append(f"{label}: output differs between runs")

    # A presentation printed by vankampen reads back as input.
    _, out, _ = run(cli, ["vankampen", "--braids", str(DATA / "conic_braids.json")])
    pres = json.loads(out)["result"]["presentation"]
    failures += [f"vankampen presentation: {e}" for e in problems(validator(reg, "presentation"), pres)]
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump(pres, f)
    try:
        code, out, err = run(cli, ["fox", "--presentation", f.name])
        if code != 0:
            failures.append(f"fox on printed presentation: exit {code}: {err.strip()}")
    finally:
        os.unlink(f.name)

    for line in failures:
        print("FAIL", line)
    print(f"{len(FIXTURE_SCHEMA)} fixtures, {len(RUNS)} reports checked, {len(failures)} problems")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
