"""Validate every CLI report against its JSON schema.

Usage: check_schemas.py <gct-binary> <schema-dir>
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CASES = [
    (0, ["isotropy", "--target", "det", "--m", "3"]),
    (0, ["isotropy", "--target", "perm", "--m", "3"]),
    (0, ["isotropy", "--target", "padded", "--m", "4", "--n", "3"]),
    (0, ["isotropy", "--target", "padded", "--m", "4", "--n", "3", "--subalgebra", "levi-LR"]),
    (0, ["quadrics"]),
    (0, ["rigidity", "--n", "3"]),
    (0, ["branch", "--weight", "3,1,-2"]),
    (0, ["multiplicities", "--m", "6", "--n", "3", "--d", "1", "--pieri-check"]),
    (0, ["multiplicities", "--m", "5", "--n", "2", "--d", "2"]),
    (0, ["orbit-dim", "--m", "5", "--n", "3"]),
    (0, ["--timing", "certify", "--m", "6", "--n", "3"]),
    (2, ["certify", "--m", "5", "--n", "3"]),
    (3, ["certify", "--m", "8", "--n", "4"]),
]


def load_schemas(directory):
    schemas = {}
    for name in os.listdir(directory):
        if name.endswith(".schema.json"):
            with open(os.path.join(directory, name)) as f:
                schema = json.load(f)
            jsonschema.Draft202012Validator.check_schema(schema)
            schemas[schema["title"]] = schema
    return schemas


def check(binary, schemas, expected_code, args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != expected_code:
        return f"exit {proc.returncode}, expected {expected_code}"
    report = json.loads(proc.stdout)
    schema = schemas.get(report.get("schema"))
    if schema is None:
        return f"no schema named {report.get('schema')!r}"
    errors = list(jsonschema.Draft202012Validator(schema).iter_errors(report))
    return "; ".join(e.message for e in errors[:3])


def main():
    binary, schema_dir = sys.argv[1], sys.argv[2]
    schemas = load_schemas(schema_dir)
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump({"rank": 3, "entries": [{"weight": w, "mult": 1} for w in
                   ([1, 0, 0], [0, 1, 0], [0, 0, 1])]}, f)
    cases = CASES + [(0, ["decompose", "--input", f.name])]
    failures = 0
    try:
        for code, args in cases:
            problem = check(binary, schemas, code, args)
            print(("FAIL " if problem else "ok   ") + " ".join(args) + (f": {problem}" if problem else ""))
            failures += bool(problem)
    finally:
        os.unlink(f.name)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
