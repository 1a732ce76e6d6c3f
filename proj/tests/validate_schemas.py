"""Validate CLI JSON output against the shipped schemas."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def check(schema, instance):
    jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(instance)


def run(*args):
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    return json.loads(out)


with tempfile.TemporaryDirectory() as tmp:
    inp = pathlib.Path(tmp) / "in.json"
    doc = {"kind": "g", "coeffs": {"3": "1/10"}, "cap": 9}
    check("diffeo_input.schema.json", doc)
    inp.write_text(json.dumps(doc))
    check("reduction.schema.json", run("reduce", "--family", "tan", "--seq", "2,6,4", "--format", "json"))
    check("tan_in_te.schema.json", run("tan-in-te", "--length", "3", "--format", "json"))
    check("collector.schema.json", run("collector", "--input", str(inp), "--weight", "9", "--format", "json"))
    check("invariants.schema.json", run("invariants", "--input", str(inp), "--weight", "9", "--format", "json"))
    check("oracle.schema.json", run("oracle", "--input", str(inp), "--method", "both"))
for p in (root / "fixtures" / "inputs").glob("*.json"):
    check("diffeo_input.schema.json", json.loads(p.read_text()))
check("manifest.schema.json", json.loads((root / "fixtures" / "manifest.json").read_text()))
print("schemas ok")
