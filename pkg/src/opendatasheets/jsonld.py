"""Export datasheets as JSON-LD using the schema.org Dataset vocabulary.

Package metadata maps onto conventional schema.org terms; the RAI
sections have no schema.org equivalent, so they are embedded verbatim
under an "ods" namespace — extracting those subtrees gives back the
original RAI block unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict

from . import model as m
from .canonical import (
    canonical_json,
    data_access_to_value,
    privacy_entry_to_value,
    procedures_to_value,
    use_case_to_value,
    use_terms_to_value,
)

ODS_NAMESPACE = "https://microsoft.github.io/opendatasheets/ns#"

CONTEXT = {"@vocab": "https://schema.org/", "ods": ODS_NAMESPACE}

_CREATOR_ROLES = ("author", "publisher")


@dataclass(frozen=True)
class JsonLdDocument:
    context: Dict[str, Any]
    body: Dict[str, Any]


def _license_ref(lic: m.License) -> Any:
    return lic.path if lic.path else lic.name


def _creator_node(c: m.Contributor) -> Dict[str, Any]:
    node: Dict[str, Any] = {
        "@type": "Organization" if c.organization else "Person",
        "name": c.name,
    }
    if c.email is not None:
        node["email"] = c.email
    if c.path is not None:
        node["url"] = c.path
    return node


def _distribution_node(r: m.Resource) -> Dict[str, Any]:
    node: Dict[str, Any] = {"@type": "DataDownload"}
    for key, value in (
        ("name", r.name),
        ("contentUrl", r.path),
        ("encodingFormat", r.mediatype),
        ("contentSize", r.bytes),
    ):
        if value is not None:
            node[key] = value
    return node


def to_jsonld(d: m.Datasheet) -> JsonLdDocument:
    """Map a valid datasheet to a schema.org Dataset document."""
    body: Dict[str, Any] = {
        "@context": dict(CONTEXT),
        "@type": "Dataset",
        "identifier": d.name,
        "name": d.title if d.title is not None else d.name,
    }
    if d.description is not None:
        body["description"] = d.description
    if d.version is not None:
        body["version"] = d.version
    if d.created is not None:
        body["dateCreated"] = d.created
    if d.homepage is not None:
        body["url"] = d.homepage
    if d.keywords:
        body["keywords"] = list(d.keywords)
    licenses = [_license_ref(lic) for lic in (d.licenses or ()) if _license_ref(lic)]
    if licenses:
        body["license"] = licenses[0] if len(licenses) == 1 else licenses
    creators = [
        _creator_node(c) for c in (d.contributors or ()) if c.role in _CREATOR_ROLES
    ]
    if creators:
        body["creator"] = creators
    body["distribution"] = [_distribution_node(r) for r in (d.resources or ())]
    if d.privacy is not None:
        body["ods:privacy"] = [privacy_entry_to_value(p) for p in d.privacy]
    if d.use_terms is not None:
        body["ods:useTerms"] = use_terms_to_value(d.use_terms)
    if d.data_access is not None:
        body["ods:dataAccess"] = data_access_to_value(d.data_access)
    if d.procedures is not None:
        body["ods:procedures"] = procedures_to_value(d.procedures)
    if d.use_cases is not None:
        body["ods:useCases"] = [use_case_to_value(c) for c in d.use_cases]
    return JsonLdDocument(context=dict(CONTEXT), body=body)


def serialize_jsonld(doc: JsonLdDocument) -> str:
    return canonical_json(doc.body)
