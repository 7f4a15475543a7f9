"""Parse datasheet JSON into the typed model.

Parsing is strict about *kinds* and lenient about *content*: a known
key holding the wrong kind of value (string where a list belongs, a
float where an integer belongs, an explicit null) is rejected with the
JSON Pointer of the offending spot, while semantically wrong content
(bad slugs, unknown enum values, duplicate names) is accepted here and
reported by validation. Unknown keys go to `extras` untouched.
"""

from __future__ import annotations

import json
from typing import Any, Callable, Dict, List, Optional, Tuple, TypeVar

from . import model as m
from .errors import JsonSyntaxError, ParseError
from .pointers import join_pointer

T = TypeVar("T")

_MISSING = object()


def _no_duplicate_keys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    obj: Dict[str, Any] = {}
    for key, value in pairs:
        if key in obj:
            raise ParseError(f"duplicate key {key!r}")
        obj[key] = value
    return obj


def loads_strict(text: str) -> Any:
    """json.loads that rejects duplicate keys and reports line/column."""
    try:
        return json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as e:
        raise JsonSyntaxError(e.msg, e.lineno, e.colno) from e


def _kind_name(value: Any) -> str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, str):
        return "string"
    if isinstance(value, int):
        return "integer"
    if isinstance(value, float):
        return "number"
    if isinstance(value, list):
        return "array"
    if isinstance(value, dict):
        return "object"
    return "null"


def _wrong_kind(expected: str, value: Any, pointer: str) -> ParseError:
    return ParseError(f"expected {expected}, got {_kind_name(value)}", pointer)


def _as_object(value: Any, pointer: str) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise _wrong_kind("object", value, pointer)
    return dict(value)


def _take_str(obj: Dict[str, Any], key: str, pointer: str) -> Optional[str]:
    value = obj.pop(key, _MISSING)
    if value is _MISSING:
        return None
    if not isinstance(value, str):
        raise _wrong_kind("string", value, join_pointer(pointer, key))
    return value


def _take_bool(obj: Dict[str, Any], key: str, pointer: str) -> Optional[bool]:
    value = obj.pop(key, _MISSING)
    if value is _MISSING:
        return None
    if not isinstance(value, bool):
        raise _wrong_kind("boolean", value, join_pointer(pointer, key))
    return value


def _take_int(obj: Dict[str, Any], key: str, pointer: str) -> Optional[int]:
    value = obj.pop(key, _MISSING)
    if value is _MISSING:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise _wrong_kind("integer", value, join_pointer(pointer, key))
    return value


def _take_str_tuple(obj: Dict[str, Any], key: str, pointer: str) -> Optional[Tuple[str, ...]]:
    value = obj.pop(key, _MISSING)
    if value is _MISSING:
        return None
    if not isinstance(value, list):
        raise _wrong_kind("array", value, join_pointer(pointer, key))
    items = []
    for i, item in enumerate(value):
        if not isinstance(item, str):
            raise _wrong_kind("string", item, join_pointer(join_pointer(pointer, key), i))
        items.append(item)
    return tuple(items)


def _take_list(
    obj: Dict[str, Any],
    key: str,
    pointer: str,
    item_parser: Callable[[Any, str], T],
) -> Optional[Tuple[T, ...]]:
    value = obj.pop(key, _MISSING)
    if value is _MISSING:
        return None
    if not isinstance(value, list):
        raise _wrong_kind("array", value, join_pointer(pointer, key))
    base = join_pointer(pointer, key)
    return tuple(item_parser(item, join_pointer(base, i)) for i, item in enumerate(value))


def _take_record(
    obj: Dict[str, Any],
    key: str,
    pointer: str,
    parser: Callable[[Any, str], T],
) -> Optional[T]:
    value = obj.pop(key, _MISSING)
    if value is _MISSING:
        return None
    return parser(value, join_pointer(pointer, key))


def _license_from(value: Any, pointer: str) -> m.License:
    obj = _as_object(value, pointer)
    return m.License(
        name=_take_str(obj, "name", pointer),
        title=_take_str(obj, "title", pointer),
        path=_take_str(obj, "path", pointer),
        extras=obj,
    )


def _contributor_from(value: Any, pointer: str) -> m.Contributor:
    obj = _as_object(value, pointer)
    return m.Contributor(
        name=_take_str(obj, "name", pointer),
        role=_take_str(obj, "role", pointer),
        organization=_take_str(obj, "organization", pointer),
        email=_take_str(obj, "email", pointer),
        path=_take_str(obj, "path", pointer),
        extras=obj,
    )


def _source_from(value: Any, pointer: str) -> m.Source:
    obj = _as_object(value, pointer)
    return m.Source(
        title=_take_str(obj, "title", pointer),
        path=_take_str(obj, "path", pointer),
        description=_take_str(obj, "description", pointer),
        extras=obj,
    )


def _field_from(value: Any, pointer: str) -> m.Field:
    obj = _as_object(value, pointer)
    return m.Field(
        name=_take_str(obj, "name", pointer),
        type=_take_str(obj, "type", pointer),
        description=_take_str(obj, "description", pointer),
        sample_values=_take_str_tuple(obj, "sampleValues", pointer),
        extras=obj,
    )


def _schema_from(value: Any, pointer: str) -> m.TableSchema:
    obj = _as_object(value, pointer)
    return m.TableSchema(
        fields=_take_list(obj, "fields", pointer, _field_from),
        missing_values=_take_str_tuple(obj, "missingValues", pointer),
        extras=obj,
    )


def _resource_from(value: Any, pointer: str) -> m.Resource:
    obj = _as_object(value, pointer)
    return m.Resource(
        name=_take_str(obj, "name", pointer),
        path=_take_str(obj, "path", pointer),
        format=_take_str(obj, "format", pointer),
        mediatype=_take_str(obj, "mediatype", pointer),
        encoding=_take_str(obj, "encoding", pointer),
        bytes=_take_int(obj, "bytes", pointer),
        hash=_take_str(obj, "hash", pointer),
        schema=_take_record(obj, "schema", pointer, _schema_from),
        extras=obj,
    )


def _sensitivity_type_from(value: Any, pointer: str) -> m.SensitivityType:
    obj = _as_object(value, pointer)
    return m.SensitivityType(
        name=_take_str(obj, "name", pointer),
        description=_take_str(obj, "description", pointer),
        extras=obj,
    )


def _sensitivity_from(value: Any, pointer: str) -> m.Sensitivity:
    obj = _as_object(value, pointer)
    return m.Sensitivity(
        description=_take_str(obj, "description", pointer),
        types=_take_list(obj, "types", pointer, _sensitivity_type_from),
        extras=obj,
    )


def _confidentiality_from(value: Any, pointer: str) -> m.Confidentiality:
    obj = _as_object(value, pointer)
    return m.Confidentiality(
        path=_take_str(obj, "path", pointer),
        description=_take_str(obj, "description", pointer),
        extras=obj,
    )


def _privacy_entry_from(value: Any, pointer: str) -> m.PrivacyEntry:
    obj = _as_object(value, pointer)
    return m.PrivacyEntry(
        sensitivity=_take_record(obj, "sensitivity", pointer, _sensitivity_from),
        confidentiality=_take_record(obj, "confidentiality", pointer, _confidentiality_from),
        extras=obj,
    )


def _use_terms_from(value: Any, pointer: str) -> m.UseTerms:
    obj = _as_object(value, pointer)
    return m.UseTerms(
        description=_take_str(obj, "description", pointer),
        path=_take_str(obj, "path", pointer),
        restrictions=_take_str_tuple(obj, "restrictions", pointer),
        extras=obj,
    )


def _data_access_from(value: Any, pointer: str) -> m.DataAccess:
    obj = _as_object(value, pointer)
    return m.DataAccess(
        anonymous_access=_take_bool(obj, "anonymousAccess", pointer),
        registration_required=_take_bool(obj, "registrationRequired", pointer),
        description=_take_str(obj, "description", pointer),
        path=_take_str(obj, "path", pointer),
        extras=obj,
    )


def _method_from(value: Any, pointer: str) -> m.Method:
    obj = _as_object(value, pointer)
    return m.Method(
        name=_take_str(obj, "name", pointer),
        description=_take_str(obj, "description", pointer),
        path=_take_str(obj, "path", pointer),
        extras=obj,
    )


def _consent_from(value: Any, pointer: str) -> m.ConsentRecord:
    obj = _as_object(value, pointer)
    return m.ConsentRecord(
        title=_take_str(obj, "title", pointer),
        description=_take_str(obj, "description", pointer),
        path=_take_str(obj, "path", pointer),
        extras=obj,
    )


def _collection_procedure_from(value: Any, pointer: str) -> m.CollectionProcedure:
    obj = _as_object(value, pointer)
    return m.CollectionProcedure(
        description=_take_str(obj, "description", pointer),
        path=_take_str(obj, "path", pointer),
        contributors=_take_list(obj, "contributors", pointer, _contributor_from),
        methods=_take_list(obj, "methods", pointer, _method_from),
        consent=_take_list(obj, "consent", pointer, _consent_from),
        extras=obj,
    )


def _processing_procedure_from(value: Any, pointer: str) -> m.ProcessingProcedure:
    obj = _as_object(value, pointer)
    return m.ProcessingProcedure(
        description=_take_str(obj, "description", pointer),
        methods=_take_list(obj, "methods", pointer, _method_from),
        contributors=_take_list(obj, "contributors", pointer, _contributor_from),
        extras=obj,
    )


def _update_procedure_from(value: Any, pointer: str) -> m.UpdateProcedure:
    obj = _as_object(value, pointer)
    return m.UpdateProcedure(
        is_updated=_take_bool(obj, "isUpdated", pointer),
        periodicity=_take_str(obj, "periodicity", pointer),
        method=_take_str(obj, "method", pointer),
        method_description=_take_str(obj, "methodDescription", pointer),
        versioning=_take_str(obj, "versioning", pointer),
        contributors=_take_list(obj, "contributors", pointer, _contributor_from),
        extras=obj,
    )


def _procedures_from(value: Any, pointer: str) -> m.Procedures:
    obj = _as_object(value, pointer)
    return m.Procedures(
        collection=_take_list(obj, "collection", pointer, _collection_procedure_from),
        processing=_take_list(obj, "processing", pointer, _processing_procedure_from),
        update=_take_record(obj, "update", pointer, _update_procedure_from),
        extras=obj,
    )


def _use_case_from(value: Any, pointer: str) -> m.UseCase:
    obj = _as_object(value, pointer)
    return m.UseCase(
        title=_take_str(obj, "title", pointer),
        description=_take_str(obj, "description", pointer),
        kind=_take_str(obj, "kind", pointer),
        extras=obj,
    )


def datasheet_from_value(value: Any) -> m.Datasheet:
    """Build a Datasheet from an already-decoded JSON value."""
    obj = _as_object(value, "")
    name = _take_str(obj, "name", "")
    if name is None:
        raise ParseError('required key "name" missing')
    return m.Datasheet(
        name=name,
        title=_take_str(obj, "title", ""),
        description=_take_str(obj, "description", ""),
        version=_take_str(obj, "version", ""),
        created=_take_str(obj, "created", ""),
        homepage=_take_str(obj, "homepage", ""),
        keywords=_take_str_tuple(obj, "keywords", ""),
        licenses=_take_list(obj, "licenses", "", _license_from),
        contributors=_take_list(obj, "contributors", "", _contributor_from),
        sources=_take_list(obj, "sources", "", _source_from),
        resources=_take_list(obj, "resources", "", _resource_from),
        privacy=_take_list(obj, "privacy", "", _privacy_entry_from),
        use_terms=_take_record(obj, "useTerms", "", _use_terms_from),
        data_access=_take_record(obj, "dataAccess", "", _data_access_from),
        procedures=_take_record(obj, "procedures", "", _procedures_from),
        use_cases=_take_list(obj, "useCases", "", _use_case_from),
        extras=obj,
    )


def parse_datasheet(text: str) -> m.Datasheet:
    """Parse datasheet JSON text; see the module docstring for strictness."""
    return datasheet_from_value(loads_strict(text))
