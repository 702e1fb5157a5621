"""Validates superds --json output and the fixtures against docs/schemas."""
import glob
import json
import os
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

exe, root = sys.argv[1], sys.argv[2]
schemas, reg = {}, Registry()
for f in glob.glob(os.path.join(root, "docs/schemas/*.json")):
    s = json.load(open(f))
    schemas[s["$id"]] = s
    reg = reg.with_resource(s["$id"], Resource.from_contents(s))

cases = [
    ("algebra", ["algebra", "--algebra", "B(1|2)"]),
    ("algebra", ["algebra", "--algebra", "A1"]),
    ("ds", ["ds", "--algebra", "B(1|2)", "--appendix", "--restrict", "eps1,del1"]),
    ("ds", ["ds", "--algebra", "D(3|2)", "--rank", "2"]),
    ("levels", ["levels", "--algebra", "C2", "--enumerate", "3", "3"]),
    ("levels", ["levels", "--algebra", "A1", "--k", "-1/2", "--lemtt2"]),
    ("levels", ["levels", "--algebra", "A1", "--k", "-3/2"]),
    ("char", ["--depth", "3", "char", "--algebra", "A1", "--k", "1", "--kind", "ideal"]),
    ("char", ["--depth", "1", "char", "--algebra", "A1", "--k", "1", "--kind", "ideal"]),
    ("char", ["--depth", "2", "char", "--algebra", "A(1|0)", "--k", "-1/2", "--kind", "admissible"]),
    ("char", ["char", "--algebra", "A(1|0)", "--k", "2", "--kind", "vacuum", "--super"]),
    ("oracle", ["--depth", "2", "oracle", "--algebra", "A(1|0)", "--k", "1", "--series"]),
    ("oracle", ["--depth", "2", "oracle", "--algebra", "A(1|0)", "--k", "1", "--ds", "eps1-del1", "--series"]),
    ("verify", ["verify", "--suite", "sl12"]),
    ("verify", ["verify", "--suite", "properties", "--cases", "20"]),
    ("error", ["algebra", "--algebra", "D(2|1)"]),
    ("error", ["levels", "--algebra", "A1", "--k", "x"]),
]
bad = 0
for name, args in cases:
    out = subprocess.run([exe, "--json"] + args, capture_output=True, text=True).stdout
    for e in Draft202012Validator(schemas[name + ".schema.json"], registry=reg).iter_errors(json.loads(out)):
        bad += 1
        print("FAIL", name, args, e.message[:200], list(e.path))
        break
for f in glob.glob(os.path.join(root, "tests/fixtures/*.json")):
    for e in Draft202012Validator(schemas["fixture.schema.json"], registry=reg).iter_errors(json.load(open(f))):
        bad += 1
        print("FAIL", f, e.message[:200])
        break
print(f"{len(cases)} outputs and fixtures checked, {bad} invalid")
sys.exit(1 if bad else 0)
