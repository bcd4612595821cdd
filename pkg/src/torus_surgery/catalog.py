"""Built-in torus complements with their known homological answers.

Every expected value stored here is recomputed by the test suite; nothing
is trusted without recomputation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

from .abelian import FgAbGroup, Lattice
from .boundary import Framing, validate_framing
from .kodaira import Kappa
from .surgery import AmbientData, ComplementPresentation, LClass, SurgerySpec

ExpectedKey = Union[str, tuple[str, SurgerySpec]]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    complement: ComplementPresentation
    framings: dict[str, Framing]
    expected: dict[ExpectedKey, object] = field(default_factory=dict)
    provenance: str = ""
    label: str = ""

    def surgeries(self) -> list[tuple[str, SurgerySpec]]:
        return [k for k in self.expected if isinstance(k, tuple)]


def knot_framing(p: int) -> Framing:
    """Framing whose longitudes are p*mu + a and b."""
    return validate_framing((p, 1, 0), (0, 0, 1))


def framing_name(p: int) -> str:
    return f"phi{p}"


KNOT_PS = range(-3, 4)
KNOT_KS = range(-3, 4)


def lens_h1(p: int, k: int) -> FgAbGroup:
    """H_1(L(1 + pk, k) x S^1): Z/|1+pk| + Z, with Z/0 read as a free Z."""
    order = abs(1 + p * k)
    if order == 0:
        return FgAbGroup(2)
    return FgAbGroup(1, (order,) if order > 1 else ())


def _knot_entry(name: str, label: str, provenance: str) -> CatalogEntry:
    # H_1(Y) = Z<m, t>;  mu -> m, a (longitude) -> 0, b (circle factor) -> t
    ambient = AmbientData(LClass.NULL_HOMOLOGOUS_INTEGRAL, b2=0, b_plus=0, signature=0, euler=0,
                          h2_torsion_free=True, intersection_form_odd=False, kappa=None)
    C = ComplementPresentation(2, (), (1, 0), (0, 0), (0, 1),
                               ker_i2_integral=((1, 0, 0), (0, 0, 1)), ambient=ambient)
    framings = {framing_name(p): knot_framing(p) for p in KNOT_PS}
    expected: dict[ExpectedKey, object] = {
        "h1_X": FgAbGroup(1),
        "b1_X": 1,
        "ker_i1": Lattice(3, ((0, 1, 0),)),
        "ker_i2": Lattice(3, ((1, 0, 0), (0, 0, 1))),
        "ker_i2_rank": 2,
        "topological_preferred": frozenset({framing_name(0)}),
        "rational_preferred": frozenset({framing_name(0)}),
    }
    for p in KNOT_PS:
        for k in KNOT_KS:
            expected[(framing_name(p), SurgerySpec(1, k, (1, 0)))] = lens_h1(p, k)
    return CatalogEntry(name, C, framings, expected, provenance, label)


def entry_trivial_knot() -> CatalogEntry:
    """The torus S^1 x K_0 in S^1 x S^3 for the unknot K_0; surgeries give L(1+pk, k) x S^1."""
    return _knot_entry("trivial_knot", "unknot",
                       "torus S^1 x K_0 in S^1 x S^3; knot-surgery lens space family")


def entry_general_knot(genus_data: str = "any knot") -> CatalogEntry:
    """Same homological shadow as the unknot; ``genus_data`` is a documentation label."""
    return _knot_entry("general_knot", str(genus_data),
                       "torus S^1 x K in S^1 x S^3 for an arbitrary knot K")


def entry_clifford() -> CatalogEntry:
    # H_1(Y) = Z generated by the meridian; both longitudes bound
    ambient = AmbientData(LClass.NULL_HOMOLOGOUS_INTEGRAL, b2=1, b_plus=1, signature=1, euler=3,
                          h2_torsion_free=True, intersection_form_odd=True, kappa=Kappa.NEG_INF)
    C = ComplementPresentation(1, (), (1,), (0,), (0,),
                               ker_i2_integral=((1, 0, 0),), ambient=ambient)
    framings = {"phi0": validate_framing((0, 1, 0), (0, 0, 1))}
    expected: dict[ExpectedKey, object] = {
        "h1_X": FgAbGroup(0),
        "b1_X": 0,
        "ker_i1": Lattice(3, ((0, 1, 0), (0, 0, 1))),
        "ker_i2": Lattice(3, ((1, 0, 0),)),
        "ker_i2_rank": 1,
        "topological_preferred": frozenset({"phi0"}),
        "rational_preferred": frozenset({"phi0"}),
    }
    for gamma in ((1, 0), (0, 1), (1, 1)):
        for k in range(-3, 4):
            expected[("phi0", SurgerySpec(1, k, gamma))] = FgAbGroup(0)
    return CatalogEntry("clifford", C, framings, expected,
                        "Clifford torus in CP^2", "Clifford torus")


CATALOG: dict[str, Callable[[], CatalogEntry]] = {
    "trivial_knot": entry_trivial_knot,
    "clifford": entry_clifford,
    "general_knot": entry_general_knot,
}

# Known examples whose kernels are not given by explicit generators; kept
# for reference only, with no complement presentation.
DOCUMENTED_ONLY: dict[str, str] = {
    "ruled_surface_loop_torus": (
        "torus gamma x b in a ruled surface over a genus-g curve, gamma a lift of an "
        "essential loop and b a fiber circle: ker i_1 = <b>, ker i_2 of rank 2"),
}


def get_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; available: {', '.join(CATALOG)}") from None


def all_entries() -> list[CatalogEntry]:
    return [make() for make in CATALOG.values()]
