#!/usr/bin/env python3
"""Validates the golden CLI outputs against the shipped JSON schemas."""
import json
import sys
from pathlib import Path

import jsonschema

def main():
    root = Path(sys.argv[1])
    pairs = [
        ("tests/golden/datum_show_a2.json", "schemas/datum_show.schema.json", None),
        ("tests/golden/datum_show_rank4.json", "schemas/datum_show.schema.json", None),
        ("tests/golden/endoscopy_b2.json", "schemas/endoscopy_compute.schema.json", None),
        ("tests/golden/hecke_mul_b2.json", "schemas/element.schema.json", "result"),
        ("tests/golden/hecke_canonical_b2.json", "schemas/element.schema.json", "result"),
    ]
    for doc_path, schema_path, key in pairs:
        doc = json.loads((root / doc_path).read_text())
        schema = json.loads((root / schema_path).read_text())
        jsonschema.validate(doc[key] if key else doc, schema)
        print(f"ok: {doc_path} against {schema_path}")
    return 0

if __name__ == "__main__":
    sys.exit(main())
