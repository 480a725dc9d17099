"""Validates every command's --json output against docs/report.schema.json."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

cli, root = Path(sys.argv[1]), Path(sys.argv[2])
schema = json.loads((root / "docs" / "report.schema.json").read_text())
jsonschema.Draft202012Validator.check_schema(schema)
corpus = root / "corpus"


def run(args):
    out = subprocess.run([str(cli), *args, "--json"], capture_output=True, text=True)
    if out.returncode != 0:
        sys.exit(f"{args}: exit {out.returncode}\n{out.stderr}")
    return json.loads(out.stdout)


def check(kind, doc):
    # Validate against one definition, and against the top-level anyOf.
    sub = dict(schema, **{"$ref": f"#/$defs/{kind}"})
    sub.pop("anyOf")
    jsonschema.validate(doc, sub, cls=jsonschema.Draft202012Validator)
    jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)


failures = 0
with tempfile.TemporaryDirectory() as tmp:
    spec = Path(tmp) / "spec.json"
    spec.write_text(json.dumps({"base": json.loads((corpus / "example1_phi1.json").read_text())["substitution"]}))
    cases = [
        ("analysis", ["analyze", str(corpus / "thue_morse.json")]),
        ("analysis", ["analyze", str(corpus / "fibonacci.json"), "--assert-lattices-equal", "--max-word-length", "2"]),
        ("analysis", ["analyze", str(corpus / "example1_phi2.json")]),
        ("analysis", ["analyze", str(corpus / "intro_example.json")]),
        ("corpus", ["corpus", str(corpus)]),
        ("cover", ["cover", str(spec)]),
        ("example4", ["cover", "--example4", "--m0", "[[1,1],[1,0]]", "--k", "3"]),
        ("erp", ["erp", str(corpus / "tribonacci.json")]),
        ("measureReport", ["measure", str(corpus / "thue_morse.json"), "--patch", "ab"]),
        ("crReport", ["cr", str(corpus / "example1_phi2.json")]),
    ]
    for kind, args in cases:
        try:
            check(kind, run(args))
            print(f"ok   {kind}: {' '.join(args[:2])}")
        except jsonschema.ValidationError as e:
            failures += 1
            print(f"FAIL {kind}: {' '.join(args[:2])}: {e.message} at {list(e.absolute_path)}")

# Negative control: a corrupted verdict must be rejected.
bad = run(["analyze", str(corpus / "thue_morse.json")])
bad["verdicts"]["crc"] = "MAYBE"
try:
    check("analysis", bad)
    failures += 1
    print("FAIL negative control accepted")
except jsonschema.ValidationError:
    print("ok   negative control rejected")

sys.exit(1 if failures else 0)
