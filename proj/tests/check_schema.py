"""Runs an antidim command and validates its JSON output against the schema.

usage: check_schema.py SCHEMA EXPECTED_EXIT -- COMMAND...
"""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    schema_path, expected_exit, sep, *command = sys.argv[1:]
    if sep != "--" or not command:
        print(__doc__, file=sys.stderr)
        return 1
    with open(schema_path) as f:
        schema = json.load(f)
    run = subprocess.run(command, capture_output=True, text=True)
    if run.returncode != int(expected_exit):
        print(f"exit code {run.returncode}, expected {expected_exit}\n{run.stderr}", file=sys.stderr)
        return 1
    try:
        jsonschema.validate(json.loads(run.stdout), schema)
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        print(f"invalid output: {e}\n{run.stdout}", file=sys.stderr)
        return 1
    print("valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
