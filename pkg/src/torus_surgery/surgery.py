"""Torus complements and (p, k) torus surgeries at the level of homology.

A complement Y of a torus L in a closed 4-manifold X is described by a
presentation of H_1(Y; Z) together with the images under the inclusion
Z = dY -> Y of the boundary basis (mu, gamma1, gamma2).  Everything else
follows from two facts:

* H_1(X; Z) = H_1(Y; Z) / <i_1(mu)>, and the same holds after surgery
  with mu replaced by the new meridian p*mu + k*gamma.
* Euler number and signature never change, so b_2 and b^+ after surgery
  are forced by b_1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import TYPE_CHECKING, Optional, Sequence

from .abelian import (
    FgAbGroup,
    Lattice,
    annihilator,
    group_from_presentation,
    integer_kernel,
    quotient_by_element,
    transpose,
    vecmat,
)
from .boundary import MU, Framing, cap_pair, longitudinal_class, standard_framing
from .errors import (
    DimensionError,
    InconsistentAmbientError,
    InconsistentComplementError,
    InvalidSurgeryError,
    NotApplicableError,
    UnsupportedReversalError,
)

if TYPE_CHECKING:
    from .kodaira import Kappa

ODD = "odd"
EVEN = "even"


class LClass(str, enum.Enum):
    """Homology class of the torus in the ambient manifold."""

    NULL_HOMOLOGOUS_INTEGRAL = "null_homologous_integral"
    TORSION = "torsion"
    RATIONALLY_NONZERO = "rationally_nonzero"


@dataclass(frozen=True)
class AmbientData:
    """Invariants of the closed manifold X containing the torus.

    ``h2_torsion_free`` and ``intersection_form_odd`` may be None when they
    are not determined, which happens for manifolds produced by surgery.
    """

    L_class_status: LClass
    b2: int
    b_plus: int
    signature: int
    euler: int
    h2_torsion_free: Optional[bool] = True
    intersection_form_odd: Optional[bool] = False
    kappa: Optional["Kappa"] = None

    def __post_init__(self):
        object.__setattr__(self, "L_class_status", LClass(self.L_class_status))
        if self.b2 < 0 or self.b_plus < 0 or self.b_plus > self.b2:
            raise InconsistentAmbientError(f"need 0 <= b_plus <= b2, got b_plus={self.b_plus}, b2={self.b2}")
        if self.signature != 2 * self.b_plus - self.b2:
            raise InconsistentAmbientError(
                f"signature law: signature {self.signature} != 2*b_plus - b2 = {2 * self.b_plus - self.b2}")
        if self.kappa is not None and self.kappa.value == "-infinity" and self.b_plus != 1:
            raise InconsistentAmbientError("rational/ruled law: kappa = -infinity forces b_plus = 1")


@dataclass(frozen=True)
class SurgerySpec:
    """New meridian p*mu + k*gamma, with gamma = a*v1 + b*v2 in a framing."""

    p: int
    k: int
    gamma: tuple[int, int] = (1, 0)

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(x) for x in self.gamma))
        if len(self.gamma) != 2:
            raise DimensionError("gamma must be an integer pair (a, b)")
        if gcd(self.p, self.k) != 1:
            raise InvalidSurgeryError(f"p={self.p} and k={self.k} are not coprime")
        if gcd(*self.gamma) != 1:
            raise InvalidSurgeryError(f"gamma={self.gamma} is not a primitive class")

    @property
    def is_trivial(self) -> bool:
        # k = 0 forces p = +-1, which leaves the meridian unchanged up to sign
        return self.k == 0

    @property
    def is_luttinger_type(self) -> bool:
        return abs(self.p) == 1


def _vec(v, n, name):
    if len(v) != n:
        raise DimensionError(f"{name} has length {len(v)}, expected {n}")
    return tuple(int(x) for x in v)


@dataclass(frozen=True)
class ComplementPresentation:
    """H_1(Y; Z) = Z^n / rows(relations) and the inclusion of the boundary basis.

    Construction checks the homological laws every genuine complement
    satisfies and raises InconsistentComplementError (naming the law) or
    InconsistentAmbientError otherwise.
    """

    n_generators: int
    relations: tuple[tuple[int, ...], ...]
    i1_mu: tuple[int, ...]
    i1_g1: tuple[int, ...]
    i1_g2: tuple[int, ...]
    ker_i2_integral: Optional[tuple[tuple[int, int, int], ...]] = None
    ambient: Optional[AmbientData] = field(default=None, compare=True)

    def __post_init__(self):
        n = self.n_generators
        if n < 0:
            raise DimensionError("generator count must be non-negative")
        rels = tuple(_vec(r, n, f"relation {i}") for i, r in enumerate(self.relations))
        object.__setattr__(self, "relations", rels)
        for name in ("i1_mu", "i1_g1", "i1_g2"):
            object.__setattr__(self, name, _vec(getattr(self, name), n, name))
        if self.ker_i2_integral is not None:
            object.__setattr__(self, "ker_i2_integral",
                               tuple(_vec(c, 3, "ker_i2_integral entry") for c in self.ker_i2_integral))
        _check_complement(self)

    @property
    def inclusion_matrix(self) -> list[list[int]]:
        """3 x n matrix whose rows are the images of mu, gamma1, gamma2."""
        return [list(self.i1_mu), list(self.i1_g1), list(self.i1_g2)]

    def image(self, x: Sequence[int]) -> list[int]:
        """i_1 of an H_1(Z) vector, as a vector of H_1(Y) generators."""
        return vecmat(_vec(x, 3, "H_1(Z) vector"), self.inclusion_matrix, self.n_generators)

    @cached_property
    def _free_dual(self) -> list[list[int]]:
        # y is rationally zero in H_1(Y) iff y . w = 0 for every w in the right kernel
        return integer_kernel([list(r) for r in self.relations], self.n_generators)

    def rational_image(self, y: Sequence[int]) -> list[int]:
        """Coordinates of y in H_1(Y; Z)/torsion (which is Z^{b_1(Y)})."""
        return [sum(a * b for a, b in zip(y, w)) for w in self._free_dual]

    def is_rationally_zero(self, y: Sequence[int]) -> bool:
        return not any(self.rational_image(y))

    @property
    def b1_Y(self) -> int:
        return len(self._free_dual)

    def h1_Y(self) -> FgAbGroup:
        return group_from_presentation(self.n_generators, self.relations)

    def h1_X(self) -> FgAbGroup:
        return quotient_by_element(self.n_generators, self.relations, self.i1_mu)

    @property
    def mu_rationally_zero(self) -> bool:
        return self.is_rationally_zero(self.i1_mu)


def _check_complement(C: ComplementPresentation) -> None:
    mu_zero = C.mu_rationally_zero
    if ker_i1_rational(C).rank < 1:
        raise InconsistentComplementError(
            "kernel-rank law: i_1 on H_1(Z; Q) is injective, but its kernel must have rank >= 1")
    if C.ker_i2_integral is not None:
        k1 = ker_i1_integral(C)
        for c in C.ker_i2_integral:
            for a in k1.basis:
                if cap_pair(a, c):
                    raise InconsistentComplementError(
                        f"kernel-annihilator law: supplied ker i_2 class {c} pairs to "
                        f"{cap_pair(a, c)} with ker i_1 class {a}")
    amb = C.ambient
    if amb is None:
        return
    essential = amb.L_class_status is LClass.RATIONALLY_NONZERO
    if essential != mu_zero:
        raise InconsistentComplementError(
            "meridian/essentiality law: [L] is rationally nonzero exactly when i_1(mu) is "
            f"rationally zero, but L_class={amb.L_class_status.value} and i_1(mu) is "
            f"{'' if mu_zero else 'not '}rationally zero")
    b1 = derive_b1_of_X(C)
    if amb.b2 != amb.euler - 2 + 2 * b1:
        raise InconsistentAmbientError(
            f"Euler-Betti law: b2={amb.b2} but euler - 2 + 2*b1(X) = {amb.euler - 2 + 2 * b1}"
            f" with b1(X)={b1} derived from the complement")


# ---------------------------------------------------------------------------
# kernels of the boundary inclusion


def ker_i1_rational(C: ComplementPresentation) -> Lattice:
    """Saturated lattice of boundary classes that become torsion in H_1(Y; Z)."""
    images = [C.rational_image(row) for row in C.inclusion_matrix]  # 3 x b1(Y)
    if C.b1_Y == 0:
        return Lattice.full(3)
    return Lattice(3, tuple(map(tuple, integer_kernel(transpose(images, C.b1_Y), 3))))


def ker_i1_integral(C: ComplementPresentation) -> Lattice:
    """Boundary classes that are exactly zero in H_1(Y; Z)."""
    stacked = C.inclusion_matrix + [list(r) for r in C.relations]
    sols = integer_kernel(transpose(stacked, C.n_generators), len(stacked))
    return Lattice(3, tuple(tuple(s[:3]) for s in sols))


def ker_i2_rational(C: ComplementPresentation) -> Lattice:
    """Annihilator of ker i_1 under the cap pairing, in the dual H_2 basis."""
    return annihilator(ker_i1_rational(C))


def derive_b1_of_X(C: ComplementPresentation) -> int:
    return C.b1_Y if C.mu_rationally_zero else C.b1_Y - 1


# ---------------------------------------------------------------------------
# surgery


def meridian_after(F: Framing, S: SurgerySpec) -> tuple[int, int, int]:
    gamma = F.curve(S.gamma)
    return tuple(S.p * m + S.k * g for m, g in zip(MU, gamma))


def surgered_h1(C: ComplementPresentation, F: Framing, S: SurgerySpec) -> FgAbGroup:
    """H_1 of the surgered manifold: H_1(Y) modulo the image of the new meridian."""
    return quotient_by_element(C.n_generators, C.relations, C.image(meridian_after(F, S)))


@dataclass(frozen=True)
class BettiProfile:
    b1_delta: int
    b2_delta: int
    euler: int
    signature: int
    b_plus_after: int
    b1_after: int
    b2_after: int


def _b1_delta(C: ComplementPresentation, F: Framing, S: SurgerySpec) -> int:
    before = C.mu_rationally_zero
    after = C.is_rationally_zero(C.image(meridian_after(F, S)))
    if before == after:
        return 0
    return -1 if before else 1


def _require_ambient(C: ComplementPresentation) -> AmbientData:
    if C.ambient is None:
        raise NotApplicableError("this computation needs ambient invariants of X")
    return C.ambient


def betti_profile_after(C: ComplementPresentation, F: Framing, S: SurgerySpec) -> BettiProfile:
    amb = _require_ambient(C)
    delta = _b1_delta(C, F, S)
    b1_after = derive_b1_of_X(C) + delta
    b2_after = amb.euler - 2 + 2 * b1_after
    twice_bplus = b2_after + amb.signature
    if twice_bplus % 2 or twice_bplus < 0 or b2_after < 0:
        raise InconsistentAmbientError(
            f"b2 after surgery = {b2_after} and signature {amb.signature} give no valid b_plus")
    return BettiProfile(delta, b2_after - amb.b2, amb.euler, amb.signature,
                        twice_bplus // 2, b1_after, b2_after)


def intersection_parity_after(C: ComplementPresentation, F: Framing, S: SurgerySpec) -> Optional[str]:
    """Parity of the surgered intersection form, or None when not forced.

    Odd forms stay odd when [L] is torsion.  An even form is known to stay
    even only if the new torus is torsion too, which by the meridian law
    means the new meridian is rationally nonzero in H_1(Y).
    """
    amb = _require_ambient(C)
    if amb.L_class_status is LClass.RATIONALLY_NONZERO:
        raise NotApplicableError("parity propagation needs [L] torsion or null-homologous")
    if amb.intersection_form_odd is None:
        return None
    if amb.intersection_form_odd:
        return ODD
    new_torsion = not C.is_rationally_zero(C.image(meridian_after(F, S)))
    return EVEN if new_torsion else None


def reverse_spec(S: SurgerySpec) -> SurgerySpec:
    if S.p != 1:
        raise UnsupportedReversalError(f"reversal is only defined for (1, k) surgeries, got p={S.p}")
    return SurgerySpec(1, -S.k, S.gamma)


def induced_complement(C: ComplementPresentation, F: Framing, S: SurgerySpec
                       ) -> tuple[ComplementPresentation, Framing]:
    """Complement data of the surgered torus, with its framing made standard.

    For a (1, k) surgery the regluing fixes the longitudes, so the new
    boundary basis is (new meridian, v1, v2) and the inherited framing is
    the standard one in that basis.  Supplied ker i_2 classes are rewritten
    in the new dual basis; ambient data is replaced by the surgered values.
    """
    if S.p != 1:
        raise UnsupportedReversalError("induced complement data is only tracked for (1, k) surgeries")
    new_mu = meridian_after(F, S)
    B = [list(new_mu), list(F.v1), list(F.v2)]
    ker2 = None
    if C.ker_i2_integral is not None:
        # pairings are preserved: c_new = B @ c_old
        ker2 = tuple(tuple(sum(B[i][j] * c[j] for j in range(3)) for i in range(3))
                     for c in C.ker_i2_integral)
    amb = None
    if C.ambient is not None:
        prof = betti_profile_after(C, F, S)
        mu_zero = C.is_rationally_zero(C.image(new_mu))
        status = LClass.RATIONALLY_NONZERO if mu_zero else LClass.TORSION
        parity = None
        if C.ambient.L_class_status is not LClass.RATIONALLY_NONZERO:
            parity = intersection_parity_after(C, F, S)
        amb = AmbientData(status, prof.b2_after, prof.b_plus_after, prof.signature, prof.euler,
                          h2_torsion_free=None,
                          intersection_form_odd=None if parity is None else parity == ODD,
                          kappa=C.ambient.kappa)
    new = ComplementPresentation(C.n_generators, C.relations, tuple(C.image(new_mu)),
                                 tuple(C.image(F.v1)), tuple(C.image(F.v2)), ker2, amb)
    return new, standard_framing()


# ---------------------------------------------------------------------------
# preferred framings


def _require_rationally_null(C: ComplementPresentation) -> None:
    if C.mu_rationally_zero:
        raise NotApplicableError("preferred framings need [L] = 0 rationally (i_1(mu) rationally nonzero)")


def is_rational_preferred(C: ComplementPresentation, F: Framing) -> bool:
    """Is ker i_1 (over Q) contained in the rational span of H_{1,phi}?"""
    _require_rationally_null(C)
    # H_{1,phi} is saturated, so rational containment is integral containment
    return F.subgroup.contains_lattice(ker_i1_rational(C))


def is_topological_preferred(C: ComplementPresentation, F: Framing) -> bool:
    """Does the longitudinal torus class lie in the supplied integral ker i_2?"""
    _require_rationally_null(C)
    if C.ambient is not None and C.ambient.L_class_status is not LClass.NULL_HOMOLOGOUS_INTEGRAL:
        raise NotApplicableError("topological preferred framings need [L] = 0 in H_2(X; Z)")
    if C.ker_i2_integral is None:
        raise NotApplicableError("integral ker i_2 generators were not supplied")
    return longitudinal_class(F) in Lattice(3, C.ker_i2_integral)
