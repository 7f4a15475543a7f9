"""Structural validation and RAI completeness scoring.

Validation never fails: problems come back as located issues. Broken
structure (bad slugs, enum misuse, contradictions, duplicate names) is
an error; thin or absent responsible-AI documentation is a warning,
because how much to document is the publisher's call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple

from . import model as m
from .canonical import canonical_json
from .pointers import join_pointer

SECTIONS = ("privacy", "useTerms", "dataAccess", "collection", "processing", "update", "useCases")

_SECTION_POINTERS = {
    "privacy": "/privacy",
    "useTerms": "/useTerms",
    "dataAccess": "/dataAccess",
    "collection": "/procedures/collection",
    "processing": "/procedures/processing",
    "update": "/procedures/update",
    "useCases": "/useCases",
}

_SECTION_WARNING_CODES = {
    "privacy": "empty-privacy",
    "useTerms": "empty-use-terms",
    "dataAccess": "empty-data-access",
    "collection": "empty-collection",
    "processing": "empty-processing",
    "update": "empty-update",
    "useCases": "empty-use-cases",
}

ERROR_CODES = frozenset(
    {
        "name-not-slug",
        "created-not-date",
        "empty-resources",
        "resource-name-not-slug",
        "duplicate-resource-name",
        "resource-format-invalid",
        "resource-bytes-negative",
        "resource-hash-invalid",
        "schema-fields-empty",
        "duplicate-field-name",
        "field-type-invalid",
        "samples-exceed-limit",
        "samples-contain-missing",
        "license-no-reference",
        "contributor-name-empty",
        "contributor-role-invalid",
        "source-title-empty",
        "access-contradiction",
        "update-contradiction",
        "update-method-invalid",
        "usecase-kind-invalid",
    }
)

WARNING_CODES = frozenset(
    set(_SECTION_WARNING_CODES.values())
    | {
        "privacy-type-name-empty",
        "useterms-description-empty",
        "collection-description-empty",
        "processing-description-empty",
        "usecase-title-empty",
    }
)

ISSUE_CODES = ERROR_CODES | WARNING_CODES


@dataclass(frozen=True)
class Issue:
    pointer: str
    severity: str
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    issues: Tuple[Issue, ...]
    completeness: Mapping[str, float]
    overall: float
    valid: bool


def _populated(text: Optional[str]) -> bool:
    return text is not None and text.strip() != ""


def completeness_score(d: m.Datasheet) -> Dict[str, float]:
    """Fraction of recommended fields populated, per RAI section.

    Each section has a fixed list of recommended fields; its score is
    populated/total. Sections score 0.0 when absent. For the update
    section the three schedule fields only count while isUpdated is
    true, so a static dataset is complete with just the flag.
    """
    scores: Dict[str, float] = {}

    privacy = d.privacy or ()
    sens = [e.sensitivity for e in privacy if e.sensitivity is not None]
    conf = [e.confidentiality for e in privacy if e.confidentiality is not None]
    privacy_points = [
        any(_populated(s.description) for s in sens),
        any(len(s.types or ()) > 0 for s in sens),
        any(_populated(c.description) for c in conf),
        any(_populated(c.path) for c in conf),
    ]
    scores["privacy"] = sum(privacy_points) / 4

    ut = d.use_terms
    ut_points = [
        ut is not None and _populated(ut.description),
        ut is not None and len(ut.restrictions or ()) > 0,
    ]
    scores["useTerms"] = sum(ut_points) / 2

    da = d.data_access
    da_points = [
        da is not None and _populated(da.description),
        da is not None and da.anonymous_access is not None,
        da is not None and da.registration_required is not None,
    ]
    scores["dataAccess"] = sum(da_points) / 3

    collection = (d.procedures.collection if d.procedures else None) or ()
    collection_points = [
        any(_populated(p.description) for p in collection),
        any(len(p.methods or ()) > 0 for p in collection),
        any(len(p.consent or ()) > 0 for p in collection),
        any(len(p.contributors or ()) > 0 for p in collection),
    ]
    scores["collection"] = sum(collection_points) / 4

    processing = (d.procedures.processing if d.procedures else None) or ()
    processing_points = [
        any(_populated(p.description) for p in processing),
        any(len(p.methods or ()) > 0 for p in processing),
        any(len(p.contributors or ()) > 0 for p in processing),
    ]
    scores["processing"] = sum(processing_points) / 3

    update = d.procedures.update if d.procedures else None
    if update is None or update.is_updated is None:
        scores["update"] = 0.0
    elif update.is_updated:
        update_points = [
            True,  # isUpdated itself
            _populated(update.periodicity),
            update.method is not None,
            _populated(update.versioning),
        ]
        scores["update"] = sum(update_points) / 4
    else:
        scores["update"] = 1.0

    cases = d.use_cases or ()
    case_points = [
        any(c.kind == "permitted" for c in cases),
        any(c.kind == "prohibited" for c in cases),
    ]
    scores["useCases"] = sum(case_points) / 2

    return scores


def _check_contributors(
    issues: List[Issue], contributors: Optional[Tuple[m.Contributor, ...]], base: str
) -> None:
    for i, c in enumerate(contributors or ()):
        pointer = join_pointer(base, i)
        if not _populated(c.name):
            issues.append(
                Issue(join_pointer(pointer, "name"), "error", "contributor-name-empty",
                      "contributor name must be non-empty")
            )
        if c.role is not None and c.role not in m.CONTRIBUTOR_ROLES:
            issues.append(
                Issue(join_pointer(pointer, "role"), "error", "contributor-role-invalid",
                      f"role must be one of {', '.join(m.CONTRIBUTOR_ROLES)}")
            )


def _check_resource(issues: List[Issue], r: m.Resource, pointer: str, seen_names: set) -> None:
    if not m.is_valid_slug(r.name):
        issues.append(
            Issue(join_pointer(pointer, "name"), "error", "resource-name-not-slug",
                  f"resource name {r.name!r} is not a lowercase slug")
        )
    elif r.name in seen_names:
        issues.append(
            Issue(join_pointer(pointer, "name"), "error", "duplicate-resource-name",
                  f"resource name {r.name!r} appears more than once")
        )
    seen_names.add(r.name)
    if r.format is not None and r.format not in m.RESOURCE_FORMATS:
        issues.append(
            Issue(join_pointer(pointer, "format"), "error", "resource-format-invalid",
                  f"format must be one of {', '.join(m.RESOURCE_FORMATS)}")
        )
    if r.bytes is not None and r.bytes < 0:
        issues.append(
            Issue(join_pointer(pointer, "bytes"), "error", "resource-bytes-negative",
                  "file size cannot be negative")
        )
    if r.hash is not None and m.HASH_RE.fullmatch(r.hash) is None:
        issues.append(
            Issue(join_pointer(pointer, "hash"), "error", "resource-hash-invalid",
                  'hash must look like "sha256:<64 hex digits>"')
        )
    if r.schema is not None:
        _check_schema(issues, r.schema, join_pointer(pointer, "schema"))


def _check_schema(issues: List[Issue], schema: m.TableSchema, pointer: str) -> None:
    fields = schema.fields or ()
    fields_pointer = join_pointer(pointer, "fields")
    if not fields:
        issues.append(
            Issue(fields_pointer, "error", "schema-fields-empty",
                  "a table schema needs at least one field")
        )
        return
    missing = set(schema.missing_values or ())
    seen: set = set()
    for j, f in enumerate(fields):
        fp = join_pointer(fields_pointer, j)
        if f.name in seen:
            issues.append(
                Issue(join_pointer(fp, "name"), "error", "duplicate-field-name",
                      f"field name {f.name!r} appears more than once")
            )
        seen.add(f.name)
        if f.type is not None and f.type not in m.FIELD_TYPES:
            issues.append(
                Issue(join_pointer(fp, "type"), "error", "field-type-invalid",
                      f"type must be one of {', '.join(m.FIELD_TYPES)}")
            )
        samples = f.sample_values or ()
        if len(samples) > 5:
            issues.append(
                Issue(join_pointer(fp, "sampleValues"), "error", "samples-exceed-limit",
                      "at most 5 sample values are allowed")
            )
        overlap = sorted(set(samples) & missing)
        if overlap:
            issues.append(
                Issue(join_pointer(fp, "sampleValues"), "error", "samples-contain-missing",
                      f"sample values {overlap!r} are declared missing markers")
            )


def validate_datasheet(d: m.Datasheet) -> ValidationReport:
    """Check every model invariant and score RAI completeness.

    Deterministic: issues are ordered by pointer then code. The report
    is valid when no error-severity issue was found.
    """
    issues: List[Issue] = []

    if not m.is_valid_slug(d.name):
        issues.append(
            Issue("/name", "error", "name-not-slug",
                  f"name {d.name!r} is not a lowercase slug")
        )
    if d.created is not None and not m.is_valid_date(d.created):
        issues.append(
            Issue("/created", "error", "created-not-date",
                  f"created {d.created!r} is not a valid YYYY-MM-DD date")
        )

    if not (d.resources or ()):
        issues.append(
            Issue("/resources", "error", "empty-resources",
                  "a datasheet needs at least one resource to be valid")
        )
    seen_resources: set = set()
    for i, r in enumerate(d.resources or ()):
        _check_resource(issues, r, f"/resources/{i}", seen_resources)

    for i, lic in enumerate(d.licenses or ()):
        if not _populated(lic.name) and not _populated(lic.path):
            issues.append(
                Issue(f"/licenses/{i}", "error", "license-no-reference",
                      "a license needs a name or a path")
            )
    _check_contributors(issues, d.contributors, "/contributors")
    for i, s in enumerate(d.sources or ()):
        if not _populated(s.title):
            issues.append(
                Issue(f"/sources/{i}/title", "error", "source-title-empty",
                      "source title must be non-empty")
            )

    for i, entry in enumerate(d.privacy or ()):
        if entry.sensitivity is not None:
            for j, t in enumerate(entry.sensitivity.types or ()):
                if not _populated(t.name):
                    issues.append(
                        Issue(f"/privacy/{i}/sensitivity/types/{j}/name", "warning",
                              "privacy-type-name-empty", "sensitivity type has no name")
                    )

    if d.use_terms is not None and not _populated(d.use_terms.description):
        issues.append(
            Issue("/useTerms/description", "warning", "useterms-description-empty",
                  "use terms are present but undescribed")
        )

    if d.data_access is not None:
        if d.data_access.anonymous_access is True and d.data_access.registration_required is True:
            issues.append(
                Issue("/dataAccess", "error", "access-contradiction",
                      "anonymousAccess and registrationRequired cannot both be true")
            )

    if d.procedures is not None:
        for i, p in enumerate(d.procedures.collection or ()):
            base = f"/procedures/collection/{i}"
            if not _populated(p.description):
                issues.append(
                    Issue(f"{base}/description", "warning", "collection-description-empty",
                          "collection procedure has no description")
                )
            _check_contributors(issues, p.contributors, f"{base}/contributors")
        for i, p in enumerate(d.procedures.processing or ()):
            base = f"/procedures/processing/{i}"
            if not _populated(p.description):
                issues.append(
                    Issue(f"{base}/description", "warning", "processing-description-empty",
                          "processing procedure has no description")
                )
            _check_contributors(issues, p.contributors, f"{base}/contributors")
        u = d.procedures.update
        if u is not None:
            if u.is_updated is False and any(
                v is not None for v in (u.periodicity, u.method, u.versioning)
            ):
                issues.append(
                    Issue("/procedures/update", "error", "update-contradiction",
                          "a static dataset cannot carry an update schedule")
                )
            if u.method is not None and u.method not in m.UPDATE_METHODS:
                issues.append(
                    Issue("/procedures/update/method", "error", "update-method-invalid",
                          f"method must be one of {', '.join(m.UPDATE_METHODS)}")
                )
            _check_contributors(issues, u.contributors, "/procedures/update/contributors")

    for i, c in enumerate(d.use_cases or ()):
        if not _populated(c.title):
            issues.append(
                Issue(f"/useCases/{i}/title", "warning", "usecase-title-empty",
                      "use case has no title")
            )
        if c.kind is not None and c.kind not in m.USE_CASE_KINDS:
            issues.append(
                Issue(f"/useCases/{i}/kind", "error", "usecase-kind-invalid",
                      f"kind must be one of {', '.join(m.USE_CASE_KINDS)}")
            )

    completeness = completeness_score(d)
    for section in SECTIONS:
        if completeness[section] == 0.0:
            issues.append(
                Issue(_SECTION_POINTERS[section], "warning", _SECTION_WARNING_CODES[section],
                      f"the {section} section is empty")
            )

    ordered = tuple(sorted(issues, key=lambda i: (i.pointer, i.code)))
    overall = sum(completeness[s] for s in SECTIONS) / len(SECTIONS)
    valid = not any(i.severity == "error" for i in ordered)
    return ValidationReport(
        issues=ordered,
        completeness={s: completeness[s] for s in SECTIONS},
        overall=overall,
        valid=valid,
    )


def report_to_value(report: ValidationReport) -> Dict[str, Any]:
    return {
        "valid": report.valid,
        "overall": report.overall,
        "completeness": {s: report.completeness[s] for s in SECTIONS},
        "issues": [
            {"pointer": i.pointer, "severity": i.severity, "code": i.code, "message": i.message}
            for i in report.issues
        ],
    }


def serialize_report(report: ValidationReport) -> str:
    return canonical_json(report_to_value(report))
