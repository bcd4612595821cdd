"""The boundary 3-torus Z of a torus neighbourhood and framings on it.

H_1(Z; Z) has the ordered basis (mu, gamma1, gamma2) and H_2(Z; Z) the
dual basis (gamma1 x gamma2, gamma2 x mu, mu x gamma1).  In these
coordinates the cap-product pairing is the ordinary dot product.

A framing is recorded by the two generators of its longitudinal subgroup
H_{1,phi}, a rank-2 complement of <mu>.  Framings with the same subgroup
compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import Lattice, determinant, identity, lattice_membership
from .errors import DimensionError, InvalidFramingError

MU = (1, 0, 0)


@dataclass(frozen=True)
class BoundaryBasis:
    h1_labels: tuple[str, str, str] = ("mu", "gamma1", "gamma2")
    h2_labels: tuple[str, str, str] = ("gamma1 x gamma2", "gamma2 x mu", "mu x gamma1")

    def pairing_matrix(self) -> list[list[int]]:
        """Matrix of cap_pair(e_i, E_j) over the stored bases."""
        e = identity(3)
        return [[cap_pair(e[i], e[j]) for j in range(3)] for i in range(3)]


BOUNDARY_BASIS = BoundaryBasis()


def _vec3(v, name="vector") -> tuple[int, int, int]:
    if len(v) != 3:
        raise DimensionError(f"{name} must have length 3, got {len(v)}")
    return tuple(int(x) for x in v)


@dataclass(frozen=True, eq=False)
class Framing:
    v1: tuple[int, int, int]
    v2: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "v1", _vec3(self.v1, "v1"))
        object.__setattr__(self, "v2", _vec3(self.v2, "v2"))
        det = determinant([list(MU), list(self.v1), list(self.v2)])
        if abs(det) != 1:
            raise InvalidFramingError(
                f"mu, {self.v1}, {self.v2} span a subgroup of index {abs(det)} in H_1(Z)"
                " (need determinant +-1)")

    @property
    def subgroup(self) -> Lattice:
        return Lattice(3, (self.v1, self.v2))

    def curve(self, gamma: Sequence[int]) -> tuple[int, int, int]:
        """Longitudinal class a*v1 + b*v2 of the curve with coordinates (a, b)."""
        a, b = gamma
        return tuple(a * x + b * y for x, y in zip(self.v1, self.v2))

    def __eq__(self, other):
        if not isinstance(other, Framing):
            return NotImplemented
        return self.subgroup == other.subgroup

    def __hash__(self):
        return hash(self.subgroup)


def standard_framing() -> Framing:
    return Framing((0, 1, 0), (0, 0, 1))


def validate_framing(v1: Sequence[int], v2: Sequence[int]) -> Framing:
    """Build a Framing, raising InvalidFramingError unless |det(mu, v1, v2)| = 1."""
    return Framing(tuple(v1), tuple(v2))


def cap_pair(a: Sequence[int], B: Sequence[int]) -> int:
    a = _vec3(a, "H_1 class")
    B = _vec3(B, "H_2 class")
    return sum(x * y for x, y in zip(a, B))


def longitudinal_class(F: Framing) -> tuple[int, int, int]:
    """H_2 class of the longitudinal torus: kills H_{1,phi}, pairs to +1 with mu."""
    (a1, a2, a3), (b1, b2, b3) = F.v1, F.v2
    c = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    s = cap_pair(MU, c)
    return tuple(s * x for x in c)


def lambda_invariant(F_lag: Framing, F_pref: Framing) -> int:
    """Least k > 0 with k*mu + g in H_{1,lag} for some g in H_{1,pref}; 0 if equal.

    Such a k exists iff k*mu lies in the sum lattice H_{1,lag} + H_{1,pref}.
    When the subgroups differ the sum has full rank (both are saturated of
    rank 2, so differing means differing rational spans), hence
    ``index * mu`` is always a member and the scan below terminates.
    """
    if F_lag == F_pref:
        return 0
    total = F_lag.subgroup + F_pref.subgroup
    assert total.rank == 3, "distinct complements of <mu> must span a full-rank lattice"
    bound = total.index()
    for k in range(1, bound + 1):
        if lattice_membership(total, (k, 0, 0))[0]:
            return k
    raise AssertionError("index * mu must lie in a full-rank lattice")  # pragma: no cover
