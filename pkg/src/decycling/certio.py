"""Certificate documents: the JSON wire format read and written by the CLI.

Documents round-trip losslessly; the vertex set is stored sorted ascending.
Loading validates structure only — re-running the verifier is the caller's
job, so tampered files load fine and then fail verification.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import CertificateFormatError
from .graphs import C3XC, C4XC, POWM, FamilySpec
from .verify import FAILED, UNVERIFIED, VERIFIED, DecyclingCertificate, VertexSet

SCHEMA_VERSION = "1"

_STATUSES = (UNVERIFIED, VERIFIED, FAILED)


def _family_order(spec: FamilySpec) -> int:
    if spec.kind == C3XC:
        return 3 * spec.n
    if spec.kind == C4XC:
        return 4 * spec.n
    return spec.n


def certificate_to_document(cert: DecyclingCertificate) -> dict[str, Any]:
    family: dict[str, Any] = {"kind": cert.family.kind, "n": cert.family.n}
    if cert.family.kind == POWM:
        family["m"] = cert.family.m
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "family": family,
        "n_vertices": cert.vertex_set.universe_size,
        "set": cert.vertex_set.sorted_members(),
        "cardinality": cert.cardinality,
        "lower_bound": cert.lower_bound,
        "method": cert.method,
        "status": cert.status,
    }
    rows = cert.family.torus_rows
    if rows is not None:
        doc["torus"] = {"rows": rows, "cols": cert.family.n}
    return doc


def document_to_certificate(doc: Any) -> DecyclingCertificate:
    if not isinstance(doc, dict):
        raise CertificateFormatError("certificate document must be a JSON object")
    try:
        version = doc["schema_version"]
        family = doc["family"]
        n_vertices = doc["n_vertices"]
        members = doc["set"]
        cardinality = doc["cardinality"]
        lower_bound = doc["lower_bound"]
        method = doc["method"]
        status = doc["status"]
    except (KeyError, TypeError) as err:
        raise CertificateFormatError(f"missing certificate field: {err}") from None
    if version != SCHEMA_VERSION:
        raise CertificateFormatError(f"unsupported schema version {version!r}")
    if not isinstance(family, dict) or "kind" not in family or "n" not in family:
        raise CertificateFormatError("family must carry kind and n")
    try:
        spec = FamilySpec(family["kind"], family["n"], family.get("m"))
    except Exception as err:
        raise CertificateFormatError(f"bad family: {err}") from None
    if not isinstance(n_vertices, int) or n_vertices != _family_order(spec):
        raise CertificateFormatError(
            f"n_vertices {n_vertices!r} does not match {spec.describe()}"
        )
    if not isinstance(members, list) or any(not isinstance(v, int) for v in members):
        raise CertificateFormatError("set must be a list of integers")
    if members != sorted(set(members)):
        raise CertificateFormatError("set must be strictly ascending")
    if any(not 0 <= v < n_vertices for v in members):
        raise CertificateFormatError("set member out of vertex range")
    if not isinstance(cardinality, int) or not isinstance(lower_bound, int):
        raise CertificateFormatError("cardinality and lower_bound must be integers")
    if not isinstance(method, str):
        raise CertificateFormatError("method must be a string")
    if status not in _STATUSES:
        raise CertificateFormatError(f"status must be one of {_STATUSES}")
    return DecyclingCertificate(
        family=spec,
        vertex_set=VertexSet.of(n_vertices, members),
        cardinality=cardinality,
        lower_bound=lower_bound,
        method=method,
        status=status,
    )


def dumps(cert: DecyclingCertificate) -> str:
    return json.dumps(certificate_to_document(cert), indent=2) + "\n"


def loads(text: str) -> DecyclingCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise CertificateFormatError(f"invalid JSON: {err}") from None
    return document_to_certificate(doc)


def save(cert: DecyclingCertificate, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(cert))


def load(path: str) -> DecyclingCertificate:
    with open(path, "r", encoding="utf-8") as handle:
        return loads(handle.read())
