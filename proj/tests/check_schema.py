"""Validates the --json output of representative commands against the report schema."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["word", "abaababaabaababaaba"],
    ["word", "aab"],
    ["--order", "ba", "word", "ba"],
    ["stream", "fibonacci"],
    ["stream", "thue-morse", "--prefix", "512", "--max-qp", "32"],
    ["--order", "ab", "stream", "periodic:ab,a"],
    ["stream", "directive:per=[(1,0)(1,1)]"],
    ["stream", "image:La@fibonacci"],
    ["sturmian", "decide", "per=[(1,0)(1,1)]"],
    ["sturmian", "decide", "per=[(1,0)(1,0)]"],
    ["sturmian", "gen", "per=[(2,0)(1,0)]", "--prefix", "40"],
    ["morphism", "classify", "Rb La Lb Rb"],
    ["morphism", "classify", "La Ra"],
    ["morphism", "classify", "E"],
    ["morphism", "apply", "La,Rb", "abaab"],
    ["morphism", "normalize", "E La E Rb"],
    ["morphism", "equal", "La Lb Ra", "Ra Rb La"],
    ["verify", "fixtures"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, "--json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        if errors:
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].absolute_path)}")
            failures += 1
        else:
            print(f"PASS {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
