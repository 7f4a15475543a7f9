"""Schema inference: encoding, dialect, classification, lattice, resources."""

import hashlib
import json
import random

import pytest

from opendatasheets import (
    CellType,
    Dialect,
    InferenceConfig,
    InferenceError,
    classify_cell,
    detect_encoding,
    infer_resource,
    infer_table_schema,
    join_types,
    sniff_dialect,
)
from opendatasheets.inference import decode_text, split_delimited
from generators import rand_table
from oracles import (
    CELL_TYPE_NAMES,
    oracle_classify,
    oracle_column_type,
    oracle_join,
    oracle_samples,
    oracle_sniff,
)

CFG = InferenceConfig()


class TestDetectEncoding:
    def test_utf8_bom(self):
        assert detect_encoding(b"\xef\xbb\xbfa") == "utf-8"

    def test_utf16_boms(self):
        assert detect_encoding(b"\xff\xfe" + "ab".encode("utf-16-le")) == "utf-16le"
        assert detect_encoding(b"\xfe\xff" + "ab".encode("utf-16-be")) == "utf-16be"

    def test_plain_ascii_is_utf8(self):
        assert detect_encoding(b"a,b\n") == "utf-8"

    def test_invalid_utf8_falls_back_with_warning(self):
        # 0xE9 alone is invalid UTF-8: a continuation byte must follow
        assert b"\xe9".decode("utf-8", errors="ignore") == ""
        warnings = []
        assert detect_encoding(b"\xe9", warnings) == "latin-1"
        assert warnings

    def test_bom_stripped_for_downstream_text(self):
        assert decode_text(b"\xef\xbb\xbfa,b", "utf-8") == "a,b"
        assert decode_text("a,b".encode("utf-16-le"), "utf-16le") == "a,b"
        # the utf-16-le codec emits no BOM by itself, so add one explicitly
        assert decode_text(b"\xff\xfe" + "x".encode("utf-16-le"), "utf-16le") == "x"


class TestSplit:
    def test_plain(self):
        assert split_delimited("a,b,c", ",") == ["a", "b", "c"]

    def test_quoted_delimiter(self):
        assert split_delimited('a,"x, y",c', ",") == ["a", "x, y", "c"]

    def test_escaped_quote(self):
        assert split_delimited('"he said ""hi""",2', ",") == ['he said "hi"', "2"]

    def test_trailing_empty_cell(self):
        assert split_delimited("a,b,", ",") == ["a", "b", ""]


class TestSniffDialect:
    def test_simple_comma(self):
        d = sniff_dialect("a,b\n1,2\n3,4", CFG)
        assert d.delimiter == "," and d.has_header is True

    def test_tab(self):
        d = sniff_dialect("x\ty\n1\t2", CFG)
        assert d.delimiter == "\t"

    def test_delimiterless_defaults_to_comma_with_header(self):
        d = sniff_dialect("word\nother\n", CFG)
        assert d.delimiter == ","
        assert d.has_header is True

    def test_numeric_first_row_means_no_header(self):
        d = sniff_dialect("1,2\n3,4", CFG)
        assert d.has_header is False

    def test_duplicate_first_row_cells_mean_no_header(self):
        d = sniff_dialect("a,a\nx,y", CFG)
        assert d.has_header is False

    def test_empty_sample_is_an_error(self):
        with pytest.raises(InferenceError, match="no data"):
            sniff_dialect("", CFG)
        with pytest.raises(InferenceError):
            sniff_dialect("\n\n", CFG)

    def test_quoted_cells_do_not_leak_delimiters(self):
        text = 'name;note\n"a;1";"x, y"\n"b;2";"z, w"'
        d = sniff_dialect(text, CFG)
        assert d.delimiter == ";"

    def test_matches_bruteforce_scoring_oracle(self):
        rng = random.Random(99)
        for _ in range(60):
            table = rand_table(rng)
            expected_delim, expected_header = oracle_sniff(table.text, CFG.missing_values)
            got = sniff_dialect(table.text, CFG)
            assert (got.delimiter, got.has_header) == (expected_delim, expected_header)

    def test_dialect_rejects_unknown_delimiter(self):
        with pytest.raises(ValueError):
            Dialect(delimiter="#")


CLASSIFY_CASES = [
    ("42", CellType.INTEGER),
    ("-7", CellType.INTEGER),
    ("+7", CellType.INTEGER),
    ("0", CellType.INTEGER),
    ("-0", CellType.INTEGER),
    ("+0", CellType.STRING),
    ("007", CellType.STRING),
    ("00", CellType.STRING),
    ("3.14", CellType.NUMBER),
    ("-0.5", CellType.NUMBER),
    (".5", CellType.NUMBER),
    ("1e5", CellType.NUMBER),
    ("2.5E-3", CellType.NUMBER),
    ("2023-05-01", CellType.DATE),
    ("2023-02-30", CellType.STRING),
    ("2023-13-01", CellType.STRING),
    ("2023-05-01T10:30:00Z", CellType.DATETIME),
    ("2023-05-01t10:30:00.25+02:00", CellType.DATETIME),
    ("2023-05-01T25:00:00Z", CellType.STRING),
    ("2023-05-01 10:30:00", CellType.STRING),
    ("2023-05-01T10:30:00", CellType.STRING),
    ("10:30", CellType.TIME),
    ("10:30:59", CellType.TIME),
    ("24:00", CellType.STRING),
    ("true", CellType.BOOLEAN),
    ("FALSE", CellType.BOOLEAN),
    ("  True ", CellType.BOOLEAN),
    ("1", CellType.INTEGER),
    ("NA", CellType.MISSING),
    ("", CellType.MISSING),
    ("   ", CellType.MISSING),
    ("-", CellType.MISSING),
    ("hello", CellType.STRING),
    ("12abc", CellType.STRING),
    ("inf", CellType.STRING),
    ("NaN", CellType.STRING),
]


class TestClassifyCell:
    @pytest.mark.parametrize("cell,expected", CLASSIFY_CASES)
    def test_cases(self, cell, expected):
        assert classify_cell(cell, CFG) is expected

    @pytest.mark.parametrize("cell,expected", CLASSIFY_CASES)
    def test_cases_agree_with_oracle(self, cell, expected):
        assert oracle_classify(cell, CFG.missing_values) == expected.value

    def test_custom_missing_values(self):
        cfg = InferenceConfig(missing_values=("0", "x"))
        assert classify_cell("0", cfg) is CellType.MISSING
        assert classify_cell("NA", cfg) is CellType.STRING


class TestJoinTypes:
    def test_examples(self):
        assert join_types(CellType.INTEGER, CellType.NUMBER) is CellType.NUMBER
        assert join_types(CellType.DATE, CellType.DATETIME) is CellType.STRING
        assert join_types(CellType.MISSING, CellType.TIME) is CellType.TIME

    def test_all_pairs_match_oracle(self):
        for a in CellType:
            for b in CellType:
                assert join_types(a, b).value == oracle_join(a.value, b.value)

    def test_laws(self):
        types = list(CellType)
        for a in types:
            assert join_types(a, a) is a
            assert join_types(CellType.MISSING, a) is a
            if a is not CellType.MISSING:
                assert join_types(CellType.STRING, a) is CellType.STRING
            for b in types:
                assert join_types(a, b) is join_types(b, a)
                for c in types:
                    assert join_types(a, join_types(b, c)) is join_types(join_types(a, b), c)


class TestInferTableSchema:
    def test_int_then_float_widen(self):
        rows = [["id", "score"], ["1", "2.5"], ["2", "3"]]
        schema = infer_table_schema(rows, Dialect(",", has_header=True), CFG)
        assert [f.type for f in schema.fields] == ["integer", "number"]
        assert schema.fields[0].name == "id"

    def test_all_missing_column_is_any(self):
        rows = [["x"], ["NA"], ["NA"]]
        schema = infer_table_schema(rows, Dialect(",", has_header=True), CFG)
        assert schema.fields[0].type == "any"
        assert schema.fields[0].sample_values == ()

    def test_no_rows_is_an_error(self):
        with pytest.raises(InferenceError, match="no rows"):
            infer_table_schema([["only", "header"]], Dialect(",", has_header=True), CFG)

    def test_generated_names_without_header(self):
        rows = [["1", "2"], ["3", "4"]]
        schema = infer_table_schema(rows, Dialect(",", has_header=False), CFG)
        assert [f.name for f in schema.fields] == ["field_1", "field_2"]

    def test_ragged_rows_padded_with_warning(self):
        warnings = []
        rows = [["a", "b"], ["1", "2"], ["3"]]
        schema = infer_table_schema(rows, Dialect(",", has_header=True), CFG, warnings)
        assert [f.type for f in schema.fields] == ["integer", "integer"]
        assert warnings

    def test_sample_values_first_distinct(self):
        rows = [["v"], ["a"], ["a"], ["b"], ["NA"], ["c"], ["d"], ["e"], ["f"]]
        schema = infer_table_schema(rows, Dialect(",", has_header=True), CFG)
        assert schema.fields[0].sample_values == ("a", "b", "c", "d", "e")

    def test_matches_independent_oracle_on_random_tables(self):
        rng = random.Random(4242)
        for _ in range(50):
            table = rand_table(rng)
            rows = [split_delimited(ln, table.delimiter) for ln in table.text.splitlines() if ln]
            dialect = Dialect(table.delimiter, has_header=table.has_header)
            schema = infer_table_schema(rows, dialect, CFG)
            assert len(schema.fields) == len(table.columns)
            for field, cells in zip(schema.fields, table.columns):
                assert field.type == oracle_column_type(cells, CFG.missing_values)
                assert list(field.sample_values) == oracle_samples(cells, CFG.missing_values, 5)


class TestInferResource:
    def test_slug_format_and_size(self):
        r = infer_resource("My Data.CSV", b"a,b\n1,2\n3,4\n")
        assert r.name == "my-data"
        assert r.format == "csv"
        assert r.bytes == 12
        assert r.hash == "sha256:" + hashlib.sha256(b"a,b\n1,2\n3,4\n").hexdigest()
        assert r.mediatype == "text/csv"

    def test_tsv_forces_tab(self):
        r = infer_resource("t.tsv", b"a\tb\n1\tx\n")
        assert [f.type for f in r.schema.fields] == ["integer", "string"]

    def test_jsonl_union_of_keys(self):
        data = b'{"a": 1}\n{"a": 2, "b": "x"}\n'
        r = infer_resource("rows.jsonl", data)
        assert [(f.name, f.type) for f in r.schema.fields] == [("a", "integer"), ("b", "string")]

    def test_json_array_of_objects(self):
        data = json.dumps(
            [
                {"id": 1, "ok": True, "tags": ["a"], "meta": {"x": 1}, "note": "NA"},
                {"id": 2, "ok": False, "tags": [], "meta": {}, "when": "2023-01-02"},
            ]
        ).encode()
        r = infer_resource("data.json", data)
        by_name = {f.name: f.type for f in r.schema.fields}
        assert by_name == {
            "id": "integer",
            "ok": "boolean",
            "tags": "array",
            "meta": "object",
            "note": "any",
            "when": "date",
        }

    def test_json_scalar_strings_classify(self):
        data = b'[{"a": "2.5"}, {"a": "3"}]'
        r = infer_resource("x.json", data)
        assert r.schema.fields[0].type == "number"

    def test_json_not_array_of_objects_omits_schema(self):
        warnings = []
        r = infer_resource("x.json", b'{"a": 1}', warnings=warnings)
        assert r.schema is None
        assert warnings

    def test_undecodable_json_is_error(self):
        with pytest.raises(InferenceError) as e:
            infer_resource("x.json", b"{nope")
        assert e.value.code == "undecodable"

    def test_binary_csv_is_error(self):
        with pytest.raises(InferenceError) as e:
            infer_resource("x.csv", b"a,b\x00c,d")
        assert e.value.code == "undecodable"

    def test_oversize_rejected(self):
        cfg = InferenceConfig(max_bytes=4)
        with pytest.raises(InferenceError) as e:
            infer_resource("x.csv", b"a,b\n1,2\n", cfg)
        assert e.value.code == "oversize"

    def test_other_format(self):
        r = infer_resource("notes.txt", b"hello")
        assert r.format == "other"
        assert r.schema is None

    def test_latin1_fallback_still_infers(self):
        data = "name,city\nrené,lyon\n".encode("latin-1")
        warnings = []
        r = infer_resource("x.csv", data, warnings=warnings)
        assert r.encoding == "latin-1"
        assert [f.type for f in r.schema.fields] == ["string", "string"]
        assert warnings

    def test_utf16_csv(self):
        data = b"\xff\xfe" + "a,b\n1,2\n".encode("utf-16-le")
        r = infer_resource("x.csv", data)
        assert r.encoding == "utf-16le"
        assert [f.type for f in r.schema.fields] == ["integer", "integer"]

    def test_determinism(self):
        data = b"a,b\n1,2\n3,x\n"
        assert infer_resource("d.csv", data) == infer_resource("d.csv", data)

    def test_config_invariants(self):
        with pytest.raises(ValueError):
            InferenceConfig(max_sample_values=0)
        with pytest.raises(ValueError):
            InferenceConfig(sniff_lines=1)


class TestSoundness:
    def test_inferred_type_absorbs_every_cell(self):
        # soundness: for T not in {string, any}, join(classify(cell), T) == T
        rng = random.Random(11)
        for _ in range(20):
            table = rand_table(rng)
            rows = [split_delimited(ln, table.delimiter) for ln in table.text.splitlines() if ln]
            schema = infer_table_schema(rows, Dialect(table.delimiter, has_header=table.has_header), CFG)
            for field, cells in zip(schema.fields, table.columns):
                if field.type in ("string", "any"):
                    continue
                t = CellType(field.type)
                for cell in cells:
                    k = classify_cell(cell, CFG)
                    if k is not CellType.MISSING:
                        assert join_types(k, t) is t

    def test_samples_never_missing_and_capped(self):
        rng = random.Random(12)
        for _ in range(20):
            table = rand_table(rng)
            rows = [split_delimited(ln, table.delimiter) for ln in table.text.splitlines() if ln]
            schema = infer_table_schema(rows, Dialect(table.delimiter, has_header=table.has_header), CFG)
            for field in schema.fields:
                assert len(field.sample_values) <= 5
                assert not (set(field.sample_values) & set(CFG.missing_values))
