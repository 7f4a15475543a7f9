"""Record backend responses and canonical bytes as frontend test fixtures.

Run from frontend/: python3 tools/gen_fixtures.py
Hits the real HTTP endpoints (via the in-process test client) and the
canonical file format, so the TypeScript tests pin byte-for-byte
compatibility against actual service behavior.
"""

import json
import shutil
import sys
from pathlib import Path

from fastapi.testclient import TestClient

from opendatasheets import parse_datasheet, parse_policy, serialize_datasheet
from opendatasheets.service import create_app

FRONTEND = Path(__file__).resolve().parent.parent
FIXTURES = FRONTEND / "tests" / "fixtures"
PRIMARY_FIXTURES = FRONTEND.parent / "tests" / "fixtures"

FIXTURE_CSV = b"a,b\n1,2\n3,4\n"


def main() -> int:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    policy = parse_policy((PRIMARY_FIXTURES / "policy_require_consent.json").read_text())
    client = TestClient(create_app(policy=policy))

    template = client.get("/api/v1/template")
    (FIXTURES / "template.json").write_bytes(template.content)

    (FIXTURES / "fixture.csv").write_bytes(FIXTURE_CSV)
    infer = client.post("/api/v1/infer", files={"file": ("fixture.csv", FIXTURE_CSV)})
    assert infer.status_code == 200, infer.text
    (FIXTURES / "infer_response.json").write_bytes(infer.content)

    shutil.copy(PRIMARY_FIXTURES / "rai_sample.json", FIXTURES / "rai_sample.json")
    rai_sample_text = (FIXTURES / "rai_sample.json").read_text()
    report = client.post("/api/v1/validate", content=rai_sample_text)
    assert report.status_code == 200
    (FIXTURES / "rai_sample_report.json").write_bytes(report.content)

    error = client.post("/api/v1/validate", content="{}")
    assert error.status_code == 400
    (FIXTURES / "parse_error_empty.json").write_bytes(error.content)

    verdict = client.post(
        "/api/v1/evaluate", json={"datasheet": json.loads(template.content)}
    )
    assert verdict.status_code == 200
    (FIXTURES / "evaluate_template.json").write_bytes(verdict.content)

    # canonical serialization cases: parsed value + exact expected bytes
    docs = [
        json.loads(template.content),
        json.loads((PRIMARY_FIXTURES / "package_only.json").read_text()),
        json.loads(rai_sample_text),
        {
            "name": "extras-and-unicode",
            "title": "énergie 東京 “quotes” \\ back\tslash\n",
            "resources": [
                {
                    "name": "r1",
                    "path": "data/r1.csv",
                    "x-zebra": {"b": 2, "a": [True, None, "x"]},
                    "x-alpha": [],
                }
            ],
            "x-floats": [0.1, 2.5, 1e-05, 1.5e-07, 123456.789, -0.001, 6.02e23],
            "x-ints": [0, -7, 9007199254740991],
            "x-numeric-keys": {"10": "ten", "2": "two", "0": "zero"},
            "x-empty": {},
        },
        {
            "name": "deep-sections",
            "privacy": [
                {
                    "sensitivity": {"description": "", "types": []},
                    "confidentiality": {"description": "kept"},
                    "x-note": "entry extra",
                }
            ],
            "useTerms": {"description": "t", "restrictions": []},
            "dataAccess": {"anonymousAccess": False, "description": ""},
            "procedures": {
                "collection": [
                    {
                        "description": "d",
                        "methods": [{"name": "m", "description": "", "path": "/m.txt"}],
                        "consent": [],
                        "contributors": [{"name": "n", "role": "author"}],
                    }
                ],
                "update": {"isUpdated": True, "periodicity": "monthly"},
            },
            "useCases": [{"title": "u", "kind": "permitted"}],
        },
    ]
    cases = []
    for doc in docs:
        canonical = serialize_datasheet(parse_datasheet(json.dumps(doc)))
        cases.append({"doc": doc, "canonical": canonical})
    (FIXTURES / "canonical_cases.json").write_text(
        json.dumps(cases, ensure_ascii=False, indent=2)
    )
    print(f"wrote fixtures to {FIXTURES}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
