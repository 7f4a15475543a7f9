"""Toolkit for machine-readable open-dataset datasheets.

Create, infer, validate, policy-screen, and export datasheets that
pair Datapackage-style foundational metadata with responsible-AI
documentation sections.
"""

from .canonical import datasheet_to_value, serialize_datasheet, serialize_resource
from .errors import (
    DatasheetError,
    InferenceError,
    InvalidSlugError,
    JsonSyntaxError,
    MergeError,
    ParseError,
    PolicyError,
)
from .inference import (
    CellType,
    Dialect,
    InferenceConfig,
    classify_cell,
    detect_encoding,
    infer_resource,
    infer_table_schema,
    join_types,
    sniff_dialect,
)
from .jsonld import JsonLdDocument, serialize_jsonld, to_jsonld
from .model import (
    CollectionProcedure,
    Confidentiality,
    ConsentRecord,
    Contributor,
    DataAccess,
    Datasheet,
    Field,
    License,
    Method,
    PrivacyEntry,
    Procedures,
    ProcessingProcedure,
    Resource,
    Sensitivity,
    SensitivityType,
    Source,
    TableSchema,
    UpdateProcedure,
    UseCase,
    UseTerms,
    merge_inferred,
    new_template,
)
from .parsing import datasheet_from_value, parse_datasheet
from .policy import (
    Check,
    Policy,
    Rule,
    Verdict,
    evaluate_policy,
    parse_policy,
    resolve_path,
    serialize_verdict,
)
from .validation import (
    Issue,
    ValidationReport,
    completeness_score,
    serialize_report,
    validate_datasheet,
)

__version__ = "0.1.0"

__all__ = [
    "CellType",
    "Check",
    "CollectionProcedure",
    "Confidentiality",
    "ConsentRecord",
    "Contributor",
    "DataAccess",
    "Datasheet",
    "DatasheetError",
    "Dialect",
    "Field",
    "InferenceConfig",
    "InferenceError",
    "InvalidSlugError",
    "Issue",
    "JsonLdDocument",
    "JsonSyntaxError",
    "License",
    "MergeError",
    "Method",
    "ParseError",
    "Policy",
    "PolicyError",
    "PrivacyEntry",
    "Procedures",
    "ProcessingProcedure",
    "Resource",
    "Rule",
    "Sensitivity",
    "SensitivityType",
    "Source",
    "TableSchema",
    "UpdateProcedure",
    "UseCase",
    "UseTerms",
    "ValidationReport",
    "Verdict",
    "classify_cell",
    "completeness_score",
    "datasheet_from_value",
    "datasheet_to_value",
    "detect_encoding",
    "evaluate_policy",
    "infer_resource",
    "infer_table_schema",
    "join_types",
    "merge_inferred",
    "new_template",
    "parse_datasheet",
    "parse_policy",
    "resolve_path",
    "serialize_datasheet",
    "serialize_jsonld",
    "serialize_report",
    "serialize_resource",
    "serialize_verdict",
    "sniff_dialect",
    "to_jsonld",
    "validate_datasheet",
]
