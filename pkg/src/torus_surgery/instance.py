"""JSON instance documents: parsing, validation and export.

Integers whose magnitude needs more than 53 bits are written as decimal
strings so that consumers using IEEE doubles lose nothing; the parser
accepts either form everywhere an integer is expected.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Optional

from .boundary import Framing, standard_framing, validate_framing
from .catalog import CatalogEntry
from .errors import InstanceFormatError
from .kodaira import HomologyFingerprint, Kappa
from .surgery import AmbientData, ComplementPresentation, LClass, SurgerySpec

SAFE_INT = 2 ** 53
_INT_RE = re.compile(r"-?\d+\Z")
STANDARD = "standard"


def encode_int(x: int):
    return x if -SAFE_INT < x < SAFE_INT else str(x)


def decode_int(value, path: str) -> int:
    if isinstance(value, bool):
        raise InstanceFormatError("expected an integer, got a boolean", path)
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _INT_RE.match(value.strip()):
        return int(value)
    raise InstanceFormatError(f"expected an integer, got {value!r}", path)


def _int_list(value, path: str, length: Optional[int] = None) -> list[int]:
    if not isinstance(value, list):
        raise InstanceFormatError("expected a list of integers", path)
    if length is not None and len(value) != length:
        raise InstanceFormatError(f"expected {length} integers, got {len(value)}", path)
    return [decode_int(x, f"{path}[{i}]") for i, x in enumerate(value)]


def _matrix(value, path: str, ncols: int) -> list[list[int]]:
    if not isinstance(value, list):
        raise InstanceFormatError("expected a list of rows", path)
    return [_int_list(row, f"{path}[{i}]", ncols) for i, row in enumerate(value)]


def _require(obj: dict, key: str, path: str):
    if not isinstance(obj, dict):
        raise InstanceFormatError("expected an object", path)
    if key not in obj:
        raise InstanceFormatError(f"missing required key {key!r}", path)
    return obj[key]


def _opt_bool(value, path: str) -> Optional[bool]:
    if value is None or isinstance(value, bool):
        return value
    raise InstanceFormatError(f"expected true, false or null, got {value!r}", path)


@dataclass(frozen=True)
class SurgeryRequest:
    framing: str
    spec: SurgerySpec
    claimed_after: Optional[tuple[HomologyFingerprint, Optional[str]]] = None


@dataclass(frozen=True)
class Instance:
    complement: ComplementPresentation
    framings: dict[str, Framing] = field(default_factory=dict)
    surgeries: tuple[SurgeryRequest, ...] = ()

    def framing(self, name: str) -> Framing:
        if name in self.framings:
            return self.framings[name]
        if name == STANDARD:
            return standard_framing()
        raise InstanceFormatError(f"unknown framing {name!r}; defined: {sorted(self.framings)}")


def _parse_ambient(a, path: str) -> AmbientData:
    if not isinstance(a, dict):
        raise InstanceFormatError("expected an object", path)
    status = _require(a, "L_class", path)
    try:
        status = LClass(status)
    except ValueError:
        raise InstanceFormatError(
            f"L_class must be one of {[c.value for c in LClass]}, got {status!r}", f"{path}.L_class") from None
    kappa = a.get("kappa")
    if kappa is not None:
        try:
            kappa = Kappa.parse(kappa)
        except ValueError:
            raise InstanceFormatError(f"unknown kappa value {kappa!r}", f"{path}.kappa") from None
    ints = {k: decode_int(_require(a, k, path), f"{path}.{k}")
            for k in ("b2", "b_plus", "signature", "euler")}
    return AmbientData(status, h2_torsion_free=_opt_bool(a.get("h2_torsion_free", True), f"{path}.h2_torsion_free"),
                       intersection_form_odd=_opt_bool(a.get("intersection_form_odd", False),
                                                       f"{path}.intersection_form_odd"),
                       kappa=kappa, **ints)


def _parse_claim(c, path: str) -> tuple[HomologyFingerprint, Optional[str]]:
    fp = HomologyFingerprint(**{k: decode_int(_require(c, k, path), f"{path}.{k}")
                                for k in ("b1", "b2", "b_plus", "euler", "signature")})
    parity = c.get("parity")
    if parity not in (None, "odd", "even"):
        raise InstanceFormatError("parity must be 'odd', 'even' or null", f"{path}.parity")
    return fp, parity


def parse_instance(source) -> Instance:
    """Parse a JSON string (or an already-decoded dict) into an Instance.

    Malformed documents raise InstanceFormatError with a field path or a
    line/column position.  Data that parses but breaks a homological law
    raises the corresponding InputInvariantError from the model classes.
    """
    if isinstance(source, (str, bytes)):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise InstanceFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    else:
        doc = source
    if not isinstance(doc, dict):
        raise InstanceFormatError("top level must be a JSON object")

    comp = _require(doc, "complement", "")
    n = decode_int(_require(comp, "generators", "complement"), "complement.generators")
    if n < 0:
        raise InstanceFormatError("must be non-negative", "complement.generators")
    rels = _matrix(comp.get("relations", []), "complement.relations", n)
    i1 = _require(comp, "i1", "complement")
    imgs = [_int_list(_require(i1, key, "complement.i1"), f"complement.i1.{key}", n)
            for key in ("mu", "g1", "g2")]
    ker2 = comp.get("ker_i2_integral")
    if ker2 is not None:
        ker2 = [tuple(v) for v in _matrix(ker2, "complement.ker_i2_integral", 3)]
    ambient = None
    if doc.get("ambient") is not None:
        ambient = _parse_ambient(doc["ambient"], "ambient")
    complement = ComplementPresentation(n, tuple(map(tuple, rels)), *imgs,
                                        ker_i2_integral=None if ker2 is None else tuple(ker2),
                                        ambient=ambient)

    framings = {}
    raw_f = doc.get("framings")
    raw_f = {} if raw_f is None else raw_f
    if not isinstance(raw_f, dict):
        raise InstanceFormatError("expected an object mapping names to [v1, v2]", "framings")
    for name, pair in raw_f.items():
        vs = _matrix(pair, f"framings.{name}", 3)
        if len(vs) != 2:
            raise InstanceFormatError("a framing is a pair of vectors [v1, v2]", f"framings.{name}")
        framings[name] = validate_framing(*vs)

    surgeries = []
    raw_s = doc.get("surgeries")
    raw_s = [] if raw_s is None else raw_s
    if not isinstance(raw_s, list):
        raise InstanceFormatError("expected a list", "surgeries")
    for i, s in enumerate(raw_s):
        path = f"surgeries[{i}]"
        if not isinstance(s, dict):
            raise InstanceFormatError("expected an object", path)
        name = s.get("framing", STANDARD)
        if not isinstance(name, str):
            raise InstanceFormatError("framing must be a name", f"{path}.framing")
        if name not in framings and name != STANDARD:
            raise InstanceFormatError(f"unknown framing {name!r}", f"{path}.framing")
        spec = SurgerySpec(decode_int(_require(s, "p", path), f"{path}.p"),
                           decode_int(_require(s, "k", path), f"{path}.k"),
                           tuple(_int_list(_require(s, "gamma", path), f"{path}.gamma", 2)))
        claim = None
        if s.get("claimed_after") is not None:
            claim = _parse_claim(s["claimed_after"], f"{path}.claimed_after")
        surgeries.append(SurgeryRequest(name, spec, claim))
    return Instance(complement, framings, tuple(surgeries))


# ---------------------------------------------------------------------------
# export


def _ints(v) -> list:
    return [encode_int(x) for x in v]


def complement_to_dict(C: ComplementPresentation) -> dict[str, Any]:
    out: dict[str, Any] = {
        "generators": encode_int(C.n_generators),
        "relations": [_ints(r) for r in C.relations],
        "i1": {"mu": _ints(C.i1_mu), "g1": _ints(C.i1_g1), "g2": _ints(C.i1_g2)},
    }
    if C.ker_i2_integral is not None:
        out["ker_i2_integral"] = [_ints(c) for c in C.ker_i2_integral]
    return out


def ambient_to_dict(a: AmbientData) -> dict[str, Any]:
    out = {
        "L_class": a.L_class_status.value,
        "b2": encode_int(a.b2), "b_plus": encode_int(a.b_plus),
        "signature": encode_int(a.signature), "euler": encode_int(a.euler),
        "h2_torsion_free": a.h2_torsion_free,
        "intersection_form_odd": a.intersection_form_odd,
    }
    if a.kappa is not None:
        out["kappa"] = a.kappa.value
    return out


def instance_to_dict(inst: Instance) -> dict[str, Any]:
    doc: dict[str, Any] = {"complement": complement_to_dict(inst.complement)}
    if inst.complement.ambient is not None:
        doc["ambient"] = ambient_to_dict(inst.complement.ambient)
    doc["framings"] = {name: [_ints(F.v1), _ints(F.v2)] for name, F in inst.framings.items()}
    surgeries = []
    for req in inst.surgeries:
        item = {"p": encode_int(req.spec.p), "k": encode_int(req.spec.k),
                "gamma": _ints(req.spec.gamma), "framing": req.framing}
        if req.claimed_after is not None:
            fp, parity = req.claimed_after
            item["claimed_after"] = {**{k: encode_int(v) for k, v in vars(fp).items()}, "parity": parity}
        surgeries.append(item)
    doc["surgeries"] = surgeries
    return doc


def entry_to_instance(entry: CatalogEntry) -> Instance:
    reqs = tuple(SurgeryRequest(name, spec) for name, spec in entry.surgeries())
    return Instance(entry.complement, dict(entry.framings), reqs)


def entry_to_document(entry: CatalogEntry) -> dict[str, Any]:
    return instance_to_dict(entry_to_instance(entry))


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"
