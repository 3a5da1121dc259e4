#!/usr/bin/env python3
"""Validate unidom JSON output against the schemas in ../schemas.

    validate_json.py KIND [FILE]

KIND is one of bound, certificate, verify, search, iso. FILE defaults to
standard input. Exit status 0 when valid, 1 when not, 2 on usage errors.
"""
import json
import pathlib
import sys

import jsonschema

SCHEMA_DIR = pathlib.Path(__file__).resolve().parent.parent / "schemas"
KINDS = ("bound", "certificate", "verify", "search", "iso")


def load_schema(kind):
    return json.loads((SCHEMA_DIR / f"{kind}.schema.json").read_text())


def validate(kind, document):
    """Raise jsonschema.ValidationError if document does not match."""
    jsonschema.Draft202012Validator(load_schema(kind)).validate(document)


def main(argv):
    if len(argv) not in (2, 3) or argv[1] not in KINDS:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    text = pathlib.Path(argv[2]).read_text() if len(argv) == 3 else sys.stdin.read()
    try:
        validate(argv[1], json.loads(text))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        print(f"invalid: {e}", file=sys.stderr)
        return 1
    print("valid")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
