"""Canonical JSON form for datasheets.

One serialization, byte-identical everywhere: UTF-8, LF line endings,
two-space indent, a trailing newline, and a fixed key order per record
type (the order in which `model` declares the fields). Unknown keys are
appended after the known ones, sorted recursively, so construction
order never leaks into the output.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from . import model as m


def canonical_json(value: Any) -> str:
    """Serialize an already-ordered JSON value using the canonical rules."""
    return json.dumps(value, indent=2, ensure_ascii=False) + "\n"


def sort_extras(value: Any) -> Any:
    """Recursively order object keys; used for unknown-key subtrees."""
    if isinstance(value, dict):
        return {k: sort_extras(value[k]) for k in sorted(value)}
    if isinstance(value, list):
        return [sort_extras(v) for v in value]
    return value


def _record(pairs: List[tuple], extras: Dict[str, Any]) -> Dict[str, Any]:
    out = {k: v for k, v in pairs if v is not None}
    for k in sorted(extras):
        out[k] = sort_extras(extras[k])
    return out


def _opt_list(items, item_to_value) -> Optional[List[Any]]:
    if items is None:
        return None
    return [item_to_value(x) for x in items]


def _str_list(items) -> Optional[List[str]]:
    if items is None:
        return None
    return list(items)


def license_to_value(x: m.License) -> Dict[str, Any]:
    return _record([("name", x.name), ("title", x.title), ("path", x.path)], x.extras)


def contributor_to_value(x: m.Contributor) -> Dict[str, Any]:
    return _record(
        [
            ("name", x.name),
            ("role", x.role),
            ("organization", x.organization),
            ("email", x.email),
            ("path", x.path),
        ],
        x.extras,
    )


def source_to_value(x: m.Source) -> Dict[str, Any]:
    return _record(
        [("title", x.title), ("path", x.path), ("description", x.description)], x.extras
    )


def field_to_value(x: m.Field) -> Dict[str, Any]:
    return _record(
        [
            ("name", x.name),
            ("type", x.type),
            ("description", x.description),
            ("sampleValues", _str_list(x.sample_values)),
        ],
        x.extras,
    )


def schema_to_value(x: m.TableSchema) -> Dict[str, Any]:
    return _record(
        [
            ("fields", _opt_list(x.fields, field_to_value)),
            ("missingValues", _str_list(x.missing_values)),
        ],
        x.extras,
    )


def resource_to_value(x: m.Resource) -> Dict[str, Any]:
    return _record(
        [
            ("name", x.name),
            ("path", x.path),
            ("format", x.format),
            ("mediatype", x.mediatype),
            ("encoding", x.encoding),
            ("bytes", x.bytes),
            ("hash", x.hash),
            ("schema", schema_to_value(x.schema) if x.schema is not None else None),
        ],
        x.extras,
    )


def _sensitivity_type_to_value(x: m.SensitivityType) -> Dict[str, Any]:
    return _record([("name", x.name), ("description", x.description)], x.extras)


def _sensitivity_to_value(x: m.Sensitivity) -> Dict[str, Any]:
    return _record(
        [
            ("description", x.description),
            ("types", _opt_list(x.types, _sensitivity_type_to_value)),
        ],
        x.extras,
    )


def _confidentiality_to_value(x: m.Confidentiality) -> Dict[str, Any]:
    return _record([("path", x.path), ("description", x.description)], x.extras)


def privacy_entry_to_value(x: m.PrivacyEntry) -> Dict[str, Any]:
    return _record(
        [
            ("sensitivity", _sensitivity_to_value(x.sensitivity) if x.sensitivity else None),
            (
                "confidentiality",
                _confidentiality_to_value(x.confidentiality) if x.confidentiality else None,
            ),
        ],
        x.extras,
    )


def use_terms_to_value(x: m.UseTerms) -> Dict[str, Any]:
    return _record(
        [
            ("description", x.description),
            ("path", x.path),
            ("restrictions", _str_list(x.restrictions)),
        ],
        x.extras,
    )


def data_access_to_value(x: m.DataAccess) -> Dict[str, Any]:
    return _record(
        [
            ("anonymousAccess", x.anonymous_access),
            ("registrationRequired", x.registration_required),
            ("description", x.description),
            ("path", x.path),
        ],
        x.extras,
    )


def method_to_value(x: m.Method) -> Dict[str, Any]:
    return _record(
        [("name", x.name), ("description", x.description), ("path", x.path)], x.extras
    )


def consent_to_value(x: m.ConsentRecord) -> Dict[str, Any]:
    return _record(
        [("title", x.title), ("description", x.description), ("path", x.path)], x.extras
    )


def collection_procedure_to_value(x: m.CollectionProcedure) -> Dict[str, Any]:
    return _record(
        [
            ("description", x.description),
            ("path", x.path),
            ("contributors", _opt_list(x.contributors, contributor_to_value)),
            ("methods", _opt_list(x.methods, method_to_value)),
            ("consent", _opt_list(x.consent, consent_to_value)),
        ],
        x.extras,
    )


def processing_procedure_to_value(x: m.ProcessingProcedure) -> Dict[str, Any]:
    return _record(
        [
            ("description", x.description),
            ("methods", _opt_list(x.methods, method_to_value)),
            ("contributors", _opt_list(x.contributors, contributor_to_value)),
        ],
        x.extras,
    )


def update_procedure_to_value(x: m.UpdateProcedure) -> Dict[str, Any]:
    return _record(
        [
            ("isUpdated", x.is_updated),
            ("periodicity", x.periodicity),
            ("method", x.method),
            ("methodDescription", x.method_description),
            ("versioning", x.versioning),
            ("contributors", _opt_list(x.contributors, contributor_to_value)),
        ],
        x.extras,
    )


def procedures_to_value(x: m.Procedures) -> Dict[str, Any]:
    return _record(
        [
            ("collection", _opt_list(x.collection, collection_procedure_to_value)),
            ("processing", _opt_list(x.processing, processing_procedure_to_value)),
            ("update", update_procedure_to_value(x.update) if x.update else None),
        ],
        x.extras,
    )


def use_case_to_value(x: m.UseCase) -> Dict[str, Any]:
    return _record(
        [("title", x.title), ("description", x.description), ("kind", x.kind)], x.extras
    )


def datasheet_to_value(d: m.Datasheet) -> Dict[str, Any]:
    """Datasheet as a JSON value with the canonical top-level key order."""
    return _record(
        [
            ("name", d.name),
            ("title", d.title),
            ("description", d.description),
            ("version", d.version),
            ("created", d.created),
            ("homepage", d.homepage),
            ("keywords", _str_list(d.keywords)),
            ("licenses", _opt_list(d.licenses, license_to_value)),
            ("contributors", _opt_list(d.contributors, contributor_to_value)),
            ("sources", _opt_list(d.sources, source_to_value)),
            ("resources", _opt_list(d.resources, resource_to_value)),
            ("privacy", _opt_list(d.privacy, privacy_entry_to_value)),
            ("useTerms", use_terms_to_value(d.use_terms) if d.use_terms else None),
            ("dataAccess", data_access_to_value(d.data_access) if d.data_access else None),
            ("procedures", procedures_to_value(d.procedures) if d.procedures else None),
            ("useCases", _opt_list(d.use_cases, use_case_to_value)),
        ],
        d.extras,
    )


def serialize_datasheet(d: m.Datasheet) -> str:
    """Deterministic canonical text; byte-identical across runs and platforms."""
    return canonical_json(datasheet_to_value(d))


def serialize_resource(r: m.Resource) -> str:
    return canonical_json(resource_to_value(r))
