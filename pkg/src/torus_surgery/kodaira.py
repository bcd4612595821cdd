"""Symplectic Kodaira dimension bookkeeping and theorem-consistency checks."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Optional

from .errors import (
    InconsistentComplementError,
    RequiresMinimalModelError,
    UnrealizableProfileError,
)


class Kappa(enum.Enum):
    NEG_INF = "-infinity"
    ZERO = "0"
    ONE = "1"
    TWO = "2"

    @classmethod
    def parse(cls, text) -> "Kappa":
        t = str(text).strip().lower()
        if t in ("-inf", "-infinity", "-oo", "neg_inf"):
            return cls.NEG_INF
        return cls(t)

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class KodairaProfile:
    k_squared: int
    k_dot_omega: Fraction
    omega_squared: Fraction
    minimal: bool = True

    def __post_init__(self):
        object.__setattr__(self, "k_dot_omega", Fraction(self.k_dot_omega))
        object.__setattr__(self, "omega_squared", Fraction(self.omega_squared))
        if self.omega_squared <= 0:
            raise ValueError("the volume [w]^2 must be positive")


def classify_kappa(P: KodairaProfile) -> Kappa:
    """Kodaira dimension from the signs of K^2 and K.[w] of a minimal model."""
    if not P.minimal:
        raise RequiresMinimalModelError("pass the invariants of a minimal model")
    k2, kw = P.k_squared, P.k_dot_omega
    if k2 < 0 or kw < 0:
        return Kappa.NEG_INF
    if k2 == 0:
        return Kappa.ZERO if kw == 0 else Kappa.ONE
    if kw > 0:
        return Kappa.TWO
    raise UnrealizableProfileError(f"K^2 = {k2} > 0 with K.[w] = 0 is outside the classification")


@dataclass(frozen=True)
class HomologyFingerprint:
    b1: int
    b2: int
    b_plus: int
    euler: int
    signature: int

    def is_consistent(self) -> bool:
        return (min(self.b1, self.b2, self.b_plus) >= 0
                and self.euler == 2 - 2 * self.b1 + self.b2
                and self.signature == 2 * self.b_plus - self.b2)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return tuple(getattr(self, f.name) for f in fields(self))


# rational homology of symplectic Calabi-Yau surfaces
CY_TABLE: dict[tuple[int, int, int, int, int], str] = {
    (0, 22, 3, 24, -16): "K3-type",
    (0, 10, 1, 12, -8): "Enriques-type",
    (4, 6, 3, 0, 0): "T4-type",
    (3, 4, 2, 0, 0): "T2-bundle-b1-3",
    (2, 2, 1, 0, 0): "T2-bundle-b1-2",
}


def cy_table_lookup(H: HomologyFingerprint) -> Optional[str]:
    """Label of the matching Calabi-Yau row, or None for no match."""
    return CY_TABLE.get(H.as_tuple())


_RULED = "(S^2 x T^2) # n CP^2-bar"
_TWISTED = "(S^2 ~x T^2) # n CP^2-bar"

ALMOST_TORIC: dict[str, tuple[str, ...]] = {
    "disk": ("CP^2 # n CP^2-bar", "S^2 x S^2"),
    "cylinder": (_RULED, _TWISTED),
    "moebius": (_RULED, _TWISTED),
    "sphere": ("K3 surface",),
    "rp2": ("Enriques surface",),
    "torus": ("T^2-bundle over T^2 with monodromy {I, [[1, m], [0, 1]]}, m in Z",),
    "klein": ("T^2-bundle over the Klein bottle with monodromy "
              "{[[1, 0], [0, -1]], [[1, m], [0, 1]]}, m in Z",),
}
CLOSED_BASES = frozenset({"sphere", "rp2", "torus", "klein"})


def almost_toric_lookup(base: str) -> tuple[list[str], Kappa]:
    base = base.strip().lower()
    if base not in ALMOST_TORIC:
        raise KeyError(f"unknown almost toric base {base!r}; expected one of {sorted(ALMOST_TORIC)}")
    kappa = Kappa.ZERO if base in CLOSED_BASES else Kappa.NEG_INF
    return list(ALMOST_TORIC[base]), kappa


# ---------------------------------------------------------------------------
# consistency of surgery outputs

PASS = "PASS"
VIOLATION = "VIOLATION"


@dataclass
class ConsistencyReport:
    verdict: str = PASS
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    checks: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict == PASS

    def flag(self, message: str) -> None:
        self.verdict = VIOLATION
        self.violations.append(message)


def _diff(before: HomologyFingerprint, after: HomologyFingerprint, names) -> list[str]:
    return [f"{n}: {getattr(before, n)} -> {getattr(after, n)}"
            for n in names if getattr(before, n) != getattr(after, n)]


def check_surgery_consistency(before: tuple[Optional[Kappa], HomologyFingerprint, Optional[str]],
                              after: tuple[HomologyFingerprint, Optional[str]],
                              p: int, kappa_claims: bool = True) -> ConsistencyReport:
    """Compare invariants before and after a torus surgery against what must hold.

    Euler number and signature are checked for every surgery.  When the
    surgery is of Luttinger type (p = +-1) and kappa is known, kappa =
    -infinity demands the full fingerprint and parity be unchanged, and
    kappa = 0 with positive Euler number demands b1, b2, Euler number and
    signature be unchanged.  Parity is compared only when both sides know it.
    """
    kappa, fp0, par0 = before
    fp1, par1 = after
    rep = ConsistencyReport()

    rep.checks.append("euler/signature invariance")
    for d in _diff(fp0, fp1, ("euler", "signature")):
        rep.flag(f"Euler number and signature are preserved by every torus surgery; {d}")

    if not kappa_claims or kappa is None:
        return rep
    if abs(p) != 1:
        rep.warnings.append(
            f"guarantee-not-applicable: p={p} is not a Luttinger-type surgery; "
            "kappa-based checks skipped")
        return rep

    if kappa is Kappa.NEG_INF:
        rep.checks.append("kappa=-infinity rigidity")
        for d in _diff(fp0, fp1, ("b1", "b2", "b_plus", "euler", "signature")):
            rep.flag(f"kappa = -infinity: surgered manifold must be symplectomorphic; {d}")
        if par0 is not None and par1 is not None and par0 != par1:
            rep.flag(f"kappa = -infinity: intersection form parity changed {par0} -> {par1}")
    elif kappa is Kappa.ZERO and fp0.euler > 0:
        rep.checks.append("kappa=0, euler>0 integral homology type")
        for d in _diff(fp0, fp1, ("b1", "b2", "euler", "signature")):
            rep.flag(f"kappa = 0 with euler > 0: homology type must be preserved; {d}")
    return rep


# ---------------------------------------------------------------------------
# essentiality of the torus

NULL_HOMOLOGOUS = "null_homologous"
TORSION = "torsion"
ESSENTIAL = "essential"
COMPLETELY_ESSENTIAL = "completely_essential"


def essentiality_class(C) -> str:
    """Classify the torus from its complement data.

    Without ambient data a torus whose meridian survives rationally is
    reported as ``torsion``: its class vanishes rationally but integral
    vanishing cannot be decided from the complement alone.
    """
    from .surgery import LClass, ker_i1_rational

    mu_zero = C.mu_rationally_zero
    amb = C.ambient
    if amb is not None and (amb.L_class_status is LClass.RATIONALLY_NONZERO) != mu_zero:
        # ComplementPresentation already rejects this; guard against hand-built objects
        raise InconsistentComplementError(
            "meridian/essentiality law: declared class of L contradicts i_1(mu)")
    if ker_i1_rational(C).rank == 3:
        return COMPLETELY_ESSENTIAL
    if mu_zero:
        return ESSENTIAL
    if amb is not None and amb.L_class_status is LClass.NULL_HOMOLOGOUS_INTEGRAL:
        return NULL_HOMOLOGOUS
    return TORSION


def fingerprint_before(C) -> HomologyFingerprint:
    """Fingerprint of the ambient manifold described by a complement."""
    from .surgery import derive_b1_of_X

    a = C.ambient
    return HomologyFingerprint(derive_b1_of_X(C), a.b2, a.b_plus, a.euler, a.signature)


def fingerprint_after(profile) -> HomologyFingerprint:
    return HomologyFingerprint(profile.b1_after, profile.b2_after, profile.b_plus_after,
                               profile.euler, profile.signature)
