"""Acceptance gate: one test per release criterion, with time budgets.

Each test prints a single PASS line (visible with `pytest -s` or in the
captured output) after asserting the criterion at its stated tolerance.
"""

import hashlib
import io
import json
import random
import time
from pathlib import Path

import pytest

from opendatasheets import (
    CellType,
    Dialect,
    InferenceConfig,
    classify_cell,
    datasheet_to_value,
    evaluate_policy,
    infer_resource,
    join_types,
    new_template,
    parse_datasheet,
    serialize_datasheet,
    serialize_jsonld,
    sniff_dialect,
    to_jsonld,
    validate_datasheet,
)
from opendatasheets.canonical import canonical_json
from opendatasheets.cli import run_cli
from opendatasheets.inference import split_delimited
from opendatasheets.policy import policy_from_value
from dialect_corpus import build_corpus
from generators import rand_datasheet, rand_policy_value, rand_table
from oracles import oracle_column_type, oracle_decision, oracle_join, oracle_samples

CFG = InferenceConfig()


def _report(name: str, elapsed: float, budget: float) -> None:
    print(f"PASS {name}: {elapsed:.2f}s < {budget:.0f}s")
    assert elapsed < budget, f"{name} took {elapsed:.2f}s, budget {budget}s"


def test_fixture_fidelity(package_only_text, rai_sample_text):
    started = time.perf_counter()
    d1 = parse_datasheet(package_only_text)
    assert validate_datasheet(d1).valid
    d2 = parse_datasheet(rai_sample_text)
    assert d2.privacy[0].sensitivity.types[0].name == "political opinions"
    assert d2.procedures.collection[0].methods[0].name == "focus group"
    _report("fixture-fidelity", time.perf_counter() - started, 1.0)


def test_roundtrip_suite():
    started = time.perf_counter()
    rng = random.Random(193)
    for _ in range(200):
        d = rand_datasheet(rng)
        first = serialize_datasheet(d)
        second = serialize_datasheet(d)
        assert first == second, "serialization must be byte-stable"
        assert parse_datasheet(first) == d, "parse(serialize(d)) must equal d"
    _report("roundtrip-suite", time.perf_counter() - started, 10.0)


def test_inference_oracle_equivalence():
    started = time.perf_counter()
    rng = random.Random(829)
    columns_checked = 0
    for i in range(55):
        table = rand_table(rng)
        data = table.text.encode("utf-8")
        resource = infer_resource(f"table_{i}.csv", data, CFG)
        assert resource.bytes == len(data)
        assert resource.hash == "sha256:" + hashlib.sha256(data).hexdigest()
        assert len(resource.schema.fields) == len(table.columns)
        for field, cells in zip(resource.schema.fields, table.columns):
            assert field.type == oracle_column_type(cells, CFG.missing_values)
            assert list(field.sample_values) == oracle_samples(cells, CFG.missing_values, 5)
            columns_checked += 1
    assert columns_checked >= 50
    _report("inference-oracle-equivalence", time.perf_counter() - started, 30.0)


def test_type_lattice_laws():
    started = time.perf_counter()
    types = list(CellType)
    assert len(types) == 8
    for a in types:
        assert join_types(a, a) is a, "idempotence"
        assert join_types(CellType.MISSING, a) is a, "missing is the identity"
        assert join_types(a, CellType.MISSING) is a
        if a is not CellType.MISSING:
            assert join_types(CellType.STRING, a) is CellType.STRING, "string absorbs"
        for b in types:
            assert join_types(a, b) is join_types(b, a), "commutativity"
            assert join_types(a, b).value == oracle_join(a.value, b.value)
            for c in types:
                assert join_types(a, join_types(b, c)) is join_types(
                    join_types(a, b), c
                ), "associativity"
    _report("type-lattice-laws", time.perf_counter() - started, 1.0)


def test_dialect_sniffing_corpus():
    started = time.perf_counter()
    corpus = build_corpus()
    assert len(corpus) == 40
    failures = []
    for entry in corpus:
        dialect = sniff_dialect(entry.text, CFG)
        if (dialect.delimiter, dialect.has_header) != (entry.delimiter, entry.has_header):
            failures.append((entry.label, dialect))
    assert not failures, f"misdetected files: {failures}"
    _report("dialect-sniffing", time.perf_counter() - started, 5.0)


def test_policy_engine():
    started = time.perf_counter()
    rng = random.Random(997)
    for _ in range(100):
        d = rand_datasheet(rng)
        value = rand_policy_value(rng)
        verdict = evaluate_policy(d, policy_from_value(value))
        assert verdict.decision == oracle_decision(datasheet_to_value(d), value)
        if value["rules"]:
            shuffled = dict(value, rules=rng.sample(value["rules"], len(value["rules"])))
            assert evaluate_policy(d, policy_from_value(shuffled)).decision == verdict.decision
    # severity ordering: a failing reject rule plus a failing review rule → reject
    sheet = new_template("demo", "Demo")
    both = policy_from_value(
        {
            "name": "p",
            "version": "1",
            "rules": [
                {"id": "a", "description": "d", "path": "/nonexistent", "check": "exists",
                 "onFail": "review", "message": "m"},
                {"id": "b", "description": "d", "path": "/nonexistent", "check": "exists",
                 "onFail": "reject", "message": "m"},
            ],
        }
    )
    assert evaluate_policy(sheet, both).decision == "reject"
    empty = policy_from_value({"name": "p", "version": "1", "rules": []})
    assert evaluate_policy(sheet, empty).decision == "accept"
    _report("policy-engine", time.perf_counter() - started, 10.0)


def test_jsonld_export(package_only_text, rai_sample_text):
    started = time.perf_counter()
    rng = random.Random(61)
    fixtures = [parse_datasheet(package_only_text), parse_datasheet(rai_sample_text)]
    generated = [rand_datasheet(rng) for _ in range(40)]
    for d in fixtures + generated:
        body = json.loads(serialize_jsonld(to_jsonld(d)))
        assert "@context" in body
        assert body["@type"] == "Dataset"
    # lossless RAI embedding, byte-for-byte after canonicalization
    for d in fixtures + generated:
        body = to_jsonld(d).body
        source = datasheet_to_value(d)
        for key in ("privacy", "useTerms", "dataAccess", "procedures", "useCases"):
            if key in source:
                assert canonical_json(body["ods:" + key]) == canonical_json(source[key])
    _report("jsonld-export", time.perf_counter() - started, 5.0)


def _write_big_csv(path: Path, at_least: int = 10 * 1024 * 1024) -> None:
    buf = io.StringIO()
    buf.write("id,score,when,label\n")
    i = 0
    while buf.tell() < at_least:
        i += 1
        buf.write(
            f"{i},{i % 997 / 7:.3f},2024-{(i % 12) + 1:02d}-{(i % 28) + 1:02d},"
            f"specimen-{i:07d}-{'x' * 40}\n"
        )
    path.write_text(buf.getvalue(), encoding="utf-8", newline="")


def test_cli_end_to_end(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("ODS_POLICY", raising=False)
    _write_big_csv(tmp_path / "big.csv")
    assert (tmp_path / "big.csv").stat().st_size >= 10 * 1024 * 1024
    (tmp_path / "policy.json").write_text(
        json.dumps(
            {
                "name": "baseline",
                "version": "1",
                "rules": [
                    {"id": "has-resources", "description": "at least one resource",
                     "path": "/resources/*", "check": {"kind": "min-count", "n": 1},
                     "onFail": "reject", "message": "no resources"},
                ],
            }
        )
    )

    started = time.perf_counter()
    assert run_cli(["init", "bulk-demo", "-o", "ds.json"]) == 0
    assert run_cli(["infer", "big.csv", "--merge", "ds.json"]) == 0
    assert run_cli(["validate", "ds.json"]) == 0
    assert run_cli(["evaluate", "ds.json", "--policy", "policy.json"]) == 0
    assert run_cli(["convert", "ds.json", "--to", "jsonld", "-o", "ds.jsonld"]) == 0
    elapsed = time.perf_counter() - started

    capsys.readouterr()  # keep pipeline output out of the PASS line
    d = parse_datasheet((tmp_path / "ds.json").read_text())
    types = {f.name: f.type for f in d.resources[0].schema.fields}
    assert types == {"id": "integer", "score": "number", "when": "date", "label": "string"}
    assert json.loads((tmp_path / "ds.jsonld").read_text())["@type"] == "Dataset"
    _report("cli-end-to-end", elapsed, 5.0)


def test_primary_runs_without_secondary(tmp_path):
    started = time.perf_counter()
    # nothing in the library or this suite may reach into the frontend build
    src = Path(__file__).resolve().parent.parent / "src"
    for py in src.rglob("*.py"):
        assert "frontend" not in py.read_text(encoding="utf-8")
    # the service stands up with no wizard assets at all
    from fastapi.testclient import TestClient
    from opendatasheets.service import create_app

    client = TestClient(create_app(assets_dir=tmp_path / "missing"))
    response = client.get("/api/v1/template")
    assert response.status_code == 200
    assert parse_datasheet(response.text).name == "new-dataset"
    _report("primary-standalone", time.perf_counter() - started, 5.0)
