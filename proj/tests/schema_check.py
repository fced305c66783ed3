"""Runs the CLI over a fixed set of commands and validates every JSON document against its schema.
Also checks that repeated runs produce byte-identical stdout."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

CASES = [
    ("polynomial", ["eval", "type2", "--family", "charlier", "--a", "2", "--n", "1"]),
    ("polynomial", ["eval", "type2", "--family", "hahn", "--alpha", "1/3,7/5", "--beta", "-1/4", "--N", "8", "--n", "2,1", "--rep", "weighted"]),
    ("type1", ["eval", "type1", "--family", "kravchuk", "--pi", "1/3,1/2", "--N", "4", "--n", "2,1"]),
    ("type1", ["eval", "type1", "--family", "meixner1", "--beta", "3/2", "--c", "1/4,2/3", "--n", "2,2", "--form", "alternative"]),
    ("linear_form", ["eval", "linear-form", "--family", "meixner2", "--beta", "3/2,7/3", "--c", "1/3", "--n", "1,2", "--x", "2"]),
    ("linear_form", ["eval", "linear-form", "--family", "kravchuk", "--pi", "1/3", "--N", "5", "--n", "2", "--x", "2"]),
    ("integral", ["eval", "integral", "--family", "charlier", "--a", "2", "--n", "1", "--x", "0", "--integrand", "type1", "--nodes", "128"]),
    ("integral", ["eval", "integral", "--family", "meixner1", "--beta", "3/2", "--c", "1/3", "--n", "2", "--x", "0", "--orientation", "stated"]),
    ("recurrence", ["recur", "--family", "charlier", "--a", "2", "--n", "3"]),
    ("recurrence", ["recur", "--family", "hahn", "--alpha", "1/3,7/5,5/2", "--beta", "-1/4", "--N", "9", "--n", "1,2,1", "--perm", "3,1,2"]),
    ("verification", ["verify", "identities", "--which", "gauss", "--trials", "100", "--seed", "7"]),
    ("verification", ["verify", "closed-vs-oracle", "--sweep", "small", "--family", "kravchuk"]),
    ("verification", ["verify", "biorthogonality", "--sweep", "small", "--family", "charlier", "--all-reports"]),
    ("verification", ["verify", "integrals", "--sweep", "small", "--family", "meixner2", "--max-total", "2"]),
    ("verification", ["verify", "rodrigues", "--sweep", "small", "--family", "charlier", "--sign", "printed"]),
    ("verification", ["moments", "--sweep", "small"]),
    ("limits", ["limits", "--edge", "kravchuk->charlier"]),
    ("limits", ["limits"]),
    ("moments", ["moments", "--family", "charlier", "--a", "3"]),
]

schemas = {}
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    jsonschema.Draft202012Validator.check_schema(doc)
    schemas[path.name.removesuffix(".schema.json")] = doc

failures = 0
for name, args in CASES:
    runs = [subprocess.run([cli, *args], capture_output=True, text=True) for _ in range(2)]
    out = runs[0].stdout
    label = " ".join(args)
    if runs[0].returncode not in (0, 1):
        print(f"FAIL {label}: exit {runs[0].returncode}: {runs[0].stderr.strip()}")
        failures += 1
        continue
    if runs[1].stdout != out:
        print(f"FAIL {label}: stdout differs between runs")
        failures += 1
    try:
        jsonschema.validate(json.loads(out), schemas[name], cls=jsonschema.Draft202012Validator)
        print(f"ok   {name:<13} {label}")
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        print(f"FAIL {label}: {str(e).splitlines()[0]}")
        failures += 1

# the params of every report must be a valid family spec
for p in ["charlier", "hahn"]:
    out = subprocess.run([cli, "verify", "closed-vs-oracle", "--sweep", "small", "--family", p, "--kind", "type2", "--all-reports",
                          "--draws", "1", "--max-total", "1"], capture_output=True, text=True).stdout
    for r in json.loads(out)["reports"]:
        try:
            jsonschema.validate(r["params"], schemas["family_params"], cls=jsonschema.Draft202012Validator)
        except jsonschema.ValidationError as e:
            print(f"FAIL params of {p} report: {str(e).splitlines()[0]}")
            failures += 1
            break

print(f"{len(CASES)} commands, {failures} failure(s)")
sys.exit(1 if failures else 0)
