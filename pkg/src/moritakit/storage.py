"""One-object-per-file JSON serialization with named references.

Identifiers are written as strings (ints and tuples are stringified
deterministically) and read back as opaque strings, so load∘save is the
identity up to that canonical renaming.  Loading always re-validates through
the constructors; a bad payload surfaces the module's validation report.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .errors import (
    ParseError,
    UnresolvedReference,
    ValidationFailed,
    ValidationReport,
)
from .actions import GroupoidBundle, LeftAction, RightAction
from .bibundles import BiequivariantMap, Bibundle, compose_bibundles, identity_bibundle
from .groupoid import FiniteGroupoid
from .morita import MoritaCertificate, certificate_violations

FORMAT_VERSION = 1


@dataclass(frozen=True)
class ObjectFile:
    """The on-disk shape of one stored object."""

    format_version: int
    kind: str
    payload: dict
    references: dict


def encode_ident(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool) or isinstance(value, int):
        return str(value)
    if isinstance(value, tuple):
        return "(" + ",".join(encode_ident(v) for v in value) + ")"
    return repr(value)


def _encode_groupoid(groupoid: FiniteGroupoid) -> dict:
    enc = encode_ident
    return {
        "objects": [enc(x) for x in groupoid.objects],
        "arrows": [{"id": enc(g), "src": enc(groupoid.src[g]),
                    "tgt": enc(groupoid.tgt[g])} for g in groupoid.arrows],
        "unit": {enc(x): enc(groupoid.unit[x]) for x in groupoid.objects},
        "inv": {enc(g): enc(groupoid.inv[g]) for g in groupoid.arrows},
        "comp": [[enc(g), enc(h), enc(gh)]
                 for (g, h), gh in sorted(groupoid.comp.items(),
                                          key=lambda item: (encode_ident(item[0][0]),
                                                            encode_ident(item[0][1])))],
    }


def _decode_groupoid(payload: dict) -> FiniteGroupoid:
    try:
        objects = list(payload["objects"])
        arrow_records = payload["arrows"]
        arrows = [rec["id"] for rec in arrow_records]
        src = {rec["id"]: rec["src"] for rec in arrow_records}
        tgt = {rec["id"]: rec["tgt"] for rec in arrow_records}
        unit = dict(payload["unit"])
        inv = dict(payload["inv"])
        comp = {(g, h): gh for g, h, gh in payload["comp"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed groupoid payload: {exc!r}") from exc
    return FiniteGroupoid.from_tables(objects, arrows, src, tgt, unit, inv, comp)


def _encode_action(action) -> dict:
    enc = encode_ident
    payload = {
        "side": action.side,
        "carrier": [enc(x) for x in action.carrier],
        "moment": {enc(x): enc(action.moment[x]) for x in action.carrier},
    }
    if action.side == "left":
        payload["act"] = [[enc(g), enc(x), enc(y)]
                          for (g, x), y in sorted(action.act.items(),
                                                  key=lambda i: (enc(i[0][0]), enc(i[0][1])))]
    else:
        payload["act"] = [[enc(x), enc(g), enc(y)]
                          for (x, g), y in sorted(action.act.items(),
                                                  key=lambda i: (enc(i[0][0]), enc(i[0][1])))]
    return payload


def _decode_action(payload: dict, groupoid: FiniteGroupoid):
    try:
        side = payload["side"]
        carrier = list(payload["carrier"])
        moment = dict(payload["moment"])
        if side == "left":
            act = {(g, x): y for g, x, y in payload["act"]}
            return LeftAction.from_tables(groupoid, carrier, moment, act)
        if side == "right":
            act = {(x, g): y for x, g, y in payload["act"]}
            return RightAction.from_tables(groupoid, carrier, moment, act)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed action payload: {exc!r}") from exc
    raise ParseError(f"unknown action side {payload.get('side')!r}")


def _encode_bundle(bundle: GroupoidBundle) -> dict:
    enc = encode_ident
    payload = _encode_action(bundle.action)
    payload["base"] = [enc(b) for b in bundle.base]
    payload["proj"] = {enc(x): enc(bundle.proj[x]) for x in bundle.carrier}
    return payload


def _encode_bibundle(bibundle: Bibundle) -> dict:
    enc = encode_ident
    return {
        "carrier": [enc(x) for x in bibundle.carrier],
        "left": {"moment": {enc(x): enc(bibundle.left.moment[x])
                            for x in bibundle.carrier},
                 "act": [[enc(g), enc(x), enc(y)]
                         for (g, x), y in sorted(bibundle.left.act.items(),
                                                 key=lambda i: (enc(i[0][0]), enc(i[0][1])))]},
        "right": {"moment": {enc(x): enc(bibundle.right.moment[x])
                             for x in bibundle.carrier},
                  "act": [[enc(x), enc(h), enc(y)]
                          for (x, h), y in sorted(bibundle.right.act.items(),
                                                  key=lambda i: (enc(i[0][0]), enc(i[0][1])))]},
    }


def _decode_bibundle(payload: dict, left_groupoid, right_groupoid) -> Bibundle:
    try:
        carrier = list(payload["carrier"])
        left = LeftAction.from_tables(
            left_groupoid, carrier, dict(payload["left"]["moment"]),
            {(g, x): y for g, x, y in payload["left"]["act"]})
        right = RightAction.from_tables(
            right_groupoid, carrier, dict(payload["right"]["moment"]),
            {(x, h): y for x, h, y in payload["right"]["act"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed bibundle payload: {exc!r}") from exc
    return Bibundle.from_actions(left, right)


def _encode_certificate(certificate: MoritaCertificate) -> dict:
    enc = encode_ident
    return {
        "iso_g": [[[enc(rep[0]), enc(rep[1])], enc(value)]
                  for rep, value in sorted(certificate.iso_g.mapping.items(),
                                           key=lambda i: (enc(i[0][0]), enc(i[0][1])))],
        "iso_h": [[[enc(rep[0]), enc(rep[1])], enc(value)]
                  for rep, value in sorted(certificate.iso_h.mapping.items(),
                                           key=lambda i: (enc(i[0][0]), enc(i[0][1])))],
    }


def _decode_certificate(payload: dict, bibundle: Bibundle) -> MoritaCertificate:
    try:
        iso_g_map = {(x1, x2): g for (x1, x2), g in payload["iso_g"]}
        iso_h_map = {(x1, x2): h for (x1, x2), h in payload["iso_h"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate payload: {exc!r}") from exc
    inverse = bibundle.opposite()
    certificate = MoritaCertificate(
        bibundle=bibundle, inverse=inverse,
        iso_g=BiequivariantMap(
            source=compose_bibundles(bibundle, inverse),
            target=identity_bibundle(bibundle.left_groupoid), mapping=iso_g_map),
        iso_h=BiequivariantMap(
            source=compose_bibundles(inverse, bibundle),
            target=identity_bibundle(bibundle.right_groupoid), mapping=iso_h_map))
    problems = certificate_violations(certificate)
    if problems:
        report = ValidationReport("certificate")
        for problem in problems:
            report.add("certificate-invalid", (problem,))
        raise ValidationFailed(report)
    return certificate


def kind_of(obj) -> str:
    if isinstance(obj, FiniteGroupoid):
        return "groupoid"
    if isinstance(obj, (LeftAction, RightAction)):
        return "action"
    if isinstance(obj, GroupoidBundle):
        return "bundle"
    if isinstance(obj, Bibundle):
        return "bibundle"
    if isinstance(obj, MoritaCertificate):
        return "certificate"
    raise ParseError(f"cannot serialize objects of type {type(obj).__name__}")


def save(obj, path, references=None) -> ObjectFile:
    """Write one object to ``path``; constituents go to sidecar files.

    ``references`` may name already-saved constituent files (paths relative to
    the target file); any constituent not named there is written to a sidecar
    ``<stem>.<role>.json`` next to the target.
    """
    references = dict(references or {})
    kind = kind_of(obj)
    directory = os.path.dirname(os.path.abspath(path))
    stem = os.path.splitext(os.path.basename(path))[0]

    def sidecar(role, constituent):
        if role not in references:
            references[role] = f"{stem}.{role}.json"
            save(constituent, os.path.join(directory, references[role]))

    if kind == "groupoid":
        payload = _encode_groupoid(obj)
    elif kind == "action":
        payload = _encode_action(obj)
        sidecar("groupoid", obj.groupoid)
    elif kind == "bundle":
        payload = _encode_bundle(obj)
        sidecar("groupoid", obj.action.groupoid)
    elif kind == "bibundle":
        payload = _encode_bibundle(obj)
        sidecar("left_groupoid", obj.left_groupoid)
        sidecar("right_groupoid", obj.right_groupoid)
    else:
        payload = _encode_certificate(obj)
        sidecar("bibundle", obj.bibundle)

    record = ObjectFile(format_version=FORMAT_VERSION, kind=kind,
                        payload=payload, references=references)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"format_version": record.format_version, "kind": record.kind,
                   "payload": record.payload, "references": record.references},
                  fh, indent=2, sort_keys=True)
        fh.write("\n")
    return record


def read_object_file(path) -> ObjectFile:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except FileNotFoundError:
        raise UnresolvedReference(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}", path=path) from exc
    if not isinstance(raw, dict) or "format_version" not in raw:
        raise ParseError("missing format_version", path=path)
    version = raw["format_version"]
    if not isinstance(version, int) or version > FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}", path=path)
    if raw.get("kind") not in {"groupoid", "action", "bundle", "bibundle",
                               "certificate"}:
        raise ParseError(f"unknown kind {raw.get('kind')!r}", path=path)
    return ObjectFile(format_version=version, kind=raw["kind"],
                      payload=raw.get("payload", {}),
                      references=raw.get("references", {}))


def load(path):
    """Load and validate one object, resolving references relative to the file."""
    record = read_object_file(path)
    directory = os.path.dirname(os.path.abspath(path))

    def resolve(role, expected_kind):
        if role not in record.references:
            raise UnresolvedReference(f"{path}: missing reference {role!r}")
        target = os.path.join(directory, record.references[role])
        loaded = load(target)
        actual = kind_of(loaded)
        if actual != expected_kind:
            raise ParseError(
                f"reference {role!r} resolves to a {actual}, wanted {expected_kind}",
                path=path)
        return loaded

    if record.kind == "groupoid":
        return _decode_groupoid(record.payload)
    if record.kind == "action":
        return _decode_action(record.payload, resolve("groupoid", "groupoid"))
    if record.kind == "bundle":
        action = _decode_action(record.payload, resolve("groupoid", "groupoid"))
        try:
            base = list(record.payload["base"])
            proj = dict(record.payload["proj"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed bundle payload: {exc!r}") from exc
        return GroupoidBundle.from_parts(action, base, proj)
    if record.kind == "bibundle":
        return _decode_bibundle(record.payload,
                                resolve("left_groupoid", "groupoid"),
                                resolve("right_groupoid", "groupoid"))
    return _decode_certificate(record.payload, resolve("bibundle", "bibundle"))
