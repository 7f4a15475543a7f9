"""Typed document model for dataset datasheets.

A datasheet couples Datapackage-style foundational metadata (name,
licenses, contributors, sources, resources) with responsible-AI
sections (privacy, use terms, data access, procedures, use cases)
at the document top level.

Conventions used throughout the model:

- Every type is an immutable value; repeated fields are tuples.
- `None` means "key absent from the document"; empty strings, empty
  tuples and empty records are *present* values and serialize as such.
- `extras` holds unknown keys verbatim so that documents round-trip
  losslessly; extension keys are allowed, never rejected.
- Constructors do not enforce semantic invariants (slugs, enums,
  uniqueness): validation reports them as located issues instead, so
  that imperfect documents can still be loaded, inspected and fixed.
"""

from __future__ import annotations

import dataclasses
import datetime
import re
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional, Tuple

from .errors import InvalidSlugError, MergeError

SLUG_RE = re.compile(r"[a-z0-9]([a-z0-9._-]*[a-z0-9])?\Z")
HASH_RE = re.compile(r"sha256:[0-9a-f]{64}\Z")
DATE_RE = re.compile(r"(\d{4})-(\d{2})-(\d{2})\Z")

CONTRIBUTOR_ROLES = ("author", "maintainer", "publisher", "wrangler", "contributor")
RESOURCE_FORMATS = ("csv", "tsv", "json", "jsonl", "other")
FIELD_TYPES = (
    "string",
    "integer",
    "number",
    "boolean",
    "date",
    "datetime",
    "time",
    "object",
    "array",
    "any",
)
UPDATE_METHODS = ("incremental", "full-refresh", "other")
USE_CASE_KINDS = ("permitted", "prohibited")

TEMPLATE_VERSION = "0.1.0"


def is_valid_slug(value: Optional[str]) -> bool:
    return value is not None and SLUG_RE.fullmatch(value) is not None


def is_valid_date(value: str) -> bool:
    """True for calendar-valid YYYY-MM-DD strings."""
    m = DATE_RE.fullmatch(value)
    if m is None:
        return False
    try:
        datetime.date(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    except ValueError:
        return False
    return True


@dataclass(frozen=True)
class License:
    """Terms the data is shared under; `name` is an SPDX id when applicable."""

    name: Optional[str] = None
    title: Optional[str] = None
    path: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Contributor:
    name: Optional[str] = None
    role: Optional[str] = None
    organization: Optional[str] = None
    email: Optional[str] = None
    path: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Source:
    title: Optional[str] = None
    path: Optional[str] = None
    description: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Field:
    """One column of a tabular resource."""

    name: Optional[str] = None
    type: Optional[str] = None
    description: Optional[str] = None
    sample_values: Optional[Tuple[str, ...]] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class TableSchema:
    fields: Optional[Tuple[Field, ...]] = None
    missing_values: Optional[Tuple[str, ...]] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Resource:
    """One data file: location, structural metadata, and optional schema."""

    name: Optional[str] = None
    path: Optional[str] = None
    format: Optional[str] = None
    mediatype: Optional[str] = None
    encoding: Optional[str] = None
    bytes: Optional[int] = None
    hash: Optional[str] = None
    schema: Optional[TableSchema] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class SensitivityType:
    name: Optional[str] = None
    description: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Sensitivity:
    description: Optional[str] = None
    types: Optional[Tuple[SensitivityType, ...]] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Confidentiality:
    path: Optional[str] = None
    description: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class PrivacyEntry:
    sensitivity: Optional[Sensitivity] = None
    confidentiality: Optional[Confidentiality] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class UseTerms:
    description: Optional[str] = None
    path: Optional[str] = None
    restrictions: Optional[Tuple[str, ...]] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class DataAccess:
    """How the data is reached. The two flags are tri-state: None = undocumented."""

    anonymous_access: Optional[bool] = None
    registration_required: Optional[bool] = None
    description: Optional[str] = None
    path: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Method:
    name: Optional[str] = None
    description: Optional[str] = None
    path: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ConsentRecord:
    title: Optional[str] = None
    description: Optional[str] = None
    path: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CollectionProcedure:
    description: Optional[str] = None
    path: Optional[str] = None
    contributors: Optional[Tuple[Contributor, ...]] = None
    methods: Optional[Tuple[Method, ...]] = None
    consent: Optional[Tuple[ConsentRecord, ...]] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ProcessingProcedure:
    description: Optional[str] = None
    methods: Optional[Tuple[Method, ...]] = None
    contributors: Optional[Tuple[Contributor, ...]] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class UpdateProcedure:
    is_updated: Optional[bool] = None
    periodicity: Optional[str] = None
    method: Optional[str] = None
    method_description: Optional[str] = None
    versioning: Optional[str] = None
    contributors: Optional[Tuple[Contributor, ...]] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Procedures:
    collection: Optional[Tuple[CollectionProcedure, ...]] = None
    processing: Optional[Tuple[ProcessingProcedure, ...]] = None
    update: Optional[UpdateProcedure] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class UseCase:
    title: Optional[str] = None
    description: Optional[str] = None
    kind: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Datasheet:
    """Root document: package metadata, resources, and the RAI block."""

    name: str
    title: Optional[str] = None
    description: Optional[str] = None
    version: Optional[str] = None
    created: Optional[str] = None
    homepage: Optional[str] = None
    keywords: Optional[Tuple[str, ...]] = None
    licenses: Optional[Tuple[License, ...]] = None
    contributors: Optional[Tuple[Contributor, ...]] = None
    sources: Optional[Tuple[Source, ...]] = None
    resources: Optional[Tuple[Resource, ...]] = None
    privacy: Optional[Tuple[PrivacyEntry, ...]] = None
    use_terms: Optional[UseTerms] = None
    data_access: Optional[DataAccess] = None
    procedures: Optional[Procedures] = None
    use_cases: Optional[Tuple[UseCase, ...]] = None
    extras: Dict[str, Any] = field(default_factory=dict)


def new_template(name: str, title: str, today: Optional[datetime.date] = None) -> Datasheet:
    """Build a DRAFT datasheet: every RAI section present but unfilled.

    Drafts validate with warnings (and an empty-resources error) until a
    publisher fills them in; they parse and serialize like any document.
    """
    if not is_valid_slug(name):
        raise InvalidSlugError(
            f"invalid name {name!r}: use lowercase letters, digits, '.', '_' or '-', "
            "starting and ending with a letter or digit"
        )
    created = (today or datetime.date.today()).isoformat()
    return Datasheet(
        name=name,
        title=title,
        description="",
        version=TEMPLATE_VERSION,
        created=created,
        keywords=(),
        licenses=(),
        contributors=(),
        sources=(),
        resources=(),
        privacy=(),
        use_terms=UseTerms(description="", restrictions=()),
        data_access=DataAccess(description=""),
        procedures=Procedures(collection=(), processing=()),
        use_cases=(),
    )


def _merge_resource(old: Resource, new: Resource) -> Resource:
    """Replace `old` with `new`, keeping human-authored field descriptions."""
    if old.schema is None or new.schema is None or new.schema.fields is None:
        return new
    old_descriptions = {
        f.name: f.description
        for f in (old.schema.fields or ())
        if f.name is not None and f.description is not None
    }
    merged_fields = tuple(
        dataclasses.replace(f, description=old_descriptions[f.name])
        if f.description is None and f.name in old_descriptions
        else f
        for f in new.schema.fields
    )
    return dataclasses.replace(new, schema=dataclasses.replace(new.schema, fields=merged_fields))


def merge_inferred(d: Datasheet, inferred: Iterable[Resource]) -> Datasheet:
    """Fold freshly inferred resources into a datasheet.

    Resources whose names already exist are replaced (descriptions kept,
    see `_merge_resource`); new names are appended. Order is stable:
    existing resources first, then new ones in input order.
    """
    inferred = list(inferred)
    seen: set = set()
    for r in inferred:
        if r.name in seen:
            raise MergeError(f"duplicate resource name in inferred set: {r.name!r}")
        seen.add(r.name)
    if not inferred:
        return d
    by_name = {r.name: r for r in inferred}
    existing = d.resources or ()
    merged = [
        _merge_resource(old, by_name.pop(old.name)) if old.name in by_name else old
        for old in existing
    ]
    merged.extend(r for r in inferred if r.name in by_name)
    return dataclasses.replace(d, resources=tuple(merged))
