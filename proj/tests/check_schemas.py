#!/usr/bin/env python3
"""Validate sepform --json reports and sample inputs against docs/schemas."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_dir = sys.argv[1], sys.argv[2]
with open(os.path.join(schema_dir, "report.schema.json")) as f:
    report_schema = json.load(f)
with open(os.path.join(schema_dir, "input.schema.json")) as f:
    input_schema = json.load(f)

grid = ["-P", "x^2-3*x+2", "-Q", "y^2-3*y+2"]
runs = [
    (["sepform", "--det", "--verify"] + grid, 0),
    (["sepform", "--las-vegas", "--seed", "7"] + grid, 0),
    (["sepform", "--las-vegas"] + grid, 0),
    (["sepform", "--det", "--max-iterations", "1"] + grid, 1),
    (["sepform", "-P", "x+y", "-Q", "x+y"], 2),
    (["critcount", "-H", "y^2-x", "--verify"], 0),
    (["luckyprime", "-H", "y^2-x^2+37*x", "--verify"], 0),
    (["tridec", "-P", "y^2-x", "-Q", "y-1", "--verify"], 0),
    (["subres", "-P", "y^2-x", "-Q", "y-x", "--verify"], 0),
]

inputs = [
    {"P": "x^2 - 3*x + 2", "Q": [[1, 0, 2], [-3, 0, 1], ["2", 0, 0]]},
    {"H": "y^2 - t"},
]
for doc in inputs:
    jsonschema.validate(doc, input_schema)
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as tmp:
    json.dump(inputs[0], tmp)
runs.append((["sepform", "--input", tmp.name], 0))

failed = 0
for args, want in runs:
    p = subprocess.run([cli] + args + ["--json"], capture_output=True, text=True)
    try:
        if p.returncode != want:
            raise AssertionError(f"exit {p.returncode}, expected {want}")
        jsonschema.validate(json.loads(p.stdout), report_schema)
        print("ok  ", " ".join(args))
    except (AssertionError, jsonschema.ValidationError, json.JSONDecodeError) as e:
        failed += 1
        print("FAIL", " ".join(args), "::", str(e).splitlines()[0])
os.unlink(tmp.name)
sys.exit(1 if failed else 0)
