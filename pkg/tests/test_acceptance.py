"""Acceptance criteria, one test per criterion.

Run under pytest for a per-criterion PASS/FAIL summary at the end of the
report, or directly (``python3 tests/test_acceptance.py``) for the same
lines on stdout.
"""

import random
import sys
import tempfile
from fractions import Fraction
from itertools import product
from math import gcd
from pathlib import Path

from oracles import (
    brute_force_member,
    det_fraction,
    invariant_factors_by_minors,
    lambda_brute_force,
    unimodular_pair,
)
from torus_surgery.abelian import FgAbGroup, annihilator, matmul, smith_normal_form
from torus_surgery.boundary import lambda_invariant, validate_framing
from torus_surgery.catalog import all_entries, get_entry, knot_framing
from torus_surgery.cli import main
from torus_surgery.errors import UnrealizableProfileError
from torus_surgery.instance import dumps, entry_to_document
from torus_surgery.kodaira import (
    CY_TABLE,
    VIOLATION,
    HomologyFingerprint,
    Kappa,
    KodairaProfile,
    check_surgery_consistency,
    classify_kappa,
    cy_table_lookup,
    fingerprint_after,
    fingerprint_before,
)
from torus_surgery.surgery import (
    EVEN,
    ODD,
    LClass,
    SurgerySpec,
    betti_profile_after,
    induced_complement,
    intersection_parity_after,
    ker_i1_rational,
    ker_i2_rational,
    reverse_spec,
    surgered_h1,
)

CRITERIA = []


def criterion(number, title):
    def tag(fn):
        fn.criterion = (number, title)
        CRITERIA.append(fn)
        return fn
    return tag


def primitive_gammas(bound):
    return [(a, b) for a, b in product(range(-bound, bound + 1), repeat=2) if gcd(a, b) == 1]


def lens_group(order):
    # Z/order + Z, with Z/0 a second free factor and Z/1 trivial
    if order == 0:
        return FgAbGroup(2)
    return FgAbGroup(1, (order,) if order > 1 else ())


# surgeries generated by criteria 1, 4, 5 and 9, collected for criterion 10
GENERATED: list = []


def lens_cases():
    C = get_entry("trivial_knot").complement
    for p, k in product(range(-2, 4), range(-3, 4)):
        yield C, knot_framing(p), SurgerySpec(1, k, (1, 0)), abs(1 + k * p)


@criterion(1, "lens-space family on the trivial-knot entry")
def test_lens_space_family():
    cases = list(lens_cases())
    assert len(cases) == 42
    for C, F, S, order in cases:
        GENERATED.append((C, F, S))
        assert surgered_h1(C, F, S) == lens_group(order), (F, S)


def random_snf_inputs(rng, count=500):
    for i in range(count):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        style = i % 3
        if style == 0:
            draw = lambda: rng.randint(-9, 9)
        elif style == 1:
            step = rng.choice((2, 3))
            draw = lambda: step * rng.randint(-9 // step, 9 // step)
        else:
            draw = lambda: rng.randint(-9, 9) if rng.random() < 0.3 else 0
        yield [[draw() for _ in range(n)] for _ in range(m)]


@criterion(2, "Smith normal form against the gcd-of-minors oracle")
def test_snf_oracle():
    for A in random_snf_inputs(random.Random(20240611)):
        n = len(A[0])
        U, D, V = smith_normal_form(A, n)
        assert matmul(matmul(U, A, n), V, n) == D
        assert abs(det_fraction(U)) == 1 and abs(det_fraction(V)) == 1
        diag = [D[i][i] for i in range(min(len(A), n))]
        assert diag == invariant_factors_by_minors(A), A


@criterion(3, "kernel laws on every catalog complement")
def test_kernel_laws():
    for entry in all_entries():
        k1 = ker_i1_rational(entry.complement)
        assert k1.rank >= 1
        assert k1.rank + ker_i2_rational(entry.complement).rank == 3
        assert annihilator(annihilator(k1)) == k1


def expected_parity(C, F, S):
    # odd stays odd; even stays even when the new torus is torsion too,
    # i.e. when the new meridian kills one free generator of H_1(Y)
    amb = C.ambient
    if amb.intersection_form_odd:
        return ODD
    new_torsion = surgered_h1(C, F, S).free_rank == C.b1_Y - 1
    return EVEN if new_torsion else None


@criterion(4, "Betti and parity bookkeeping")
def test_betti_and_parity():
    checked = 0
    for entry in all_entries():
        C = entry.complement
        torsion_class = C.ambient.L_class_status is not LClass.RATIONALLY_NONZERO
        for F in entry.framings.values():
            for k, gamma in product(range(-5, 6), primitive_gammas(2)):
                S = SurgerySpec(1, k, gamma)
                GENERATED.append((C, F, S))
                prof = betti_profile_after(C, F, S)
                assert abs(prof.b1_delta) <= 1
                assert prof.b1_after == surgered_h1(C, F, S).free_rank
                assert prof.euler == C.ambient.euler and prof.signature == C.ambient.signature
                if torsion_class:
                    assert intersection_parity_after(C, F, S) == expected_parity(C, F, S)
                checked += 1
    assert checked > 0


@criterion(5, "preferred-framing equivalence on the trivial-knot entry")
def test_preferred_framing_equivalence():
    C = get_entry("trivial_knot").complement
    base = C.h1_X()
    grid = [(k, g) for k, g in product(range(-5, 6), primitive_gammas(3))]
    for k, g in grid:
        S = SurgerySpec(1, k, g)
        GENERATED.append((C, knot_framing(0), S))
        assert surgered_h1(C, knot_framing(0), S) == base
    for p in (-3, -2, -1, 1, 2, 3):
        F = knot_framing(p)
        changed = [(k, g) for k, g in grid
                   if surgered_h1(C, F, SurgerySpec(1, k, g)).torsion != base.torsion]
        assert changed, f"phi{p} never changes the torsion"
        GENERATED.append((C, F, SurgerySpec(1, *changed[0])))


def random_framing(rng):
    ops = [(rng.randint(0, 1), rng.randint(-2, 2)) for _ in range(rng.randint(0, 3))]
    return unimodular_pair(ops, (rng.randint(-3, 3), rng.randint(-3, 3)), rng.choice((1, -1)))


@criterion(6, "lambda invariant")
def test_lambda_invariant():
    for p in range(-10, 11):
        assert lambda_invariant(knot_framing(p), knot_framing(0)) == abs(p)
        assert lambda_brute_force([(p, 1, 0), (0, 0, 1)], [(0, 1, 0), (0, 0, 1)]) == abs(p)
    rng = random.Random(6)
    for i in range(100):
        v1, v2 = random_framing(rng)
        F = validate_framing(v1, v2)
        if i % 2:
            # the same subgroup written in another basis
            a, b = random_framing(rng)
            G = validate_framing(*[[x[1] * u + x[2] * w for u, w in zip(v1, v2)] for x in (a, b)])
        else:
            G = validate_framing(*random_framing(rng))
        same = (all(brute_force_member([G.v1, G.v2], v, bound=10)[0] for v in (F.v1, F.v2))
                and all(brute_force_member([F.v1, F.v2], v, bound=10)[0] for v in (G.v1, G.v2)))
        lam = lambda_invariant(F, G)
        assert (lam == 0) == same, (F, G)
        if lam:
            assert lambda_brute_force([F.v1, F.v2], [G.v1, G.v2], box=12, kmax=lam) == lam, (F, G)


@criterion(7, "Calabi-Yau homology table")
def test_cy_table():
    labels = {(0, 22, 3, 24, -16): "K3-type", (0, 10, 1, 12, -8): "Enriques-type",
              (4, 6, 3, 0, 0): "T4-type", (3, 4, 2, 0, 0): "T2-bundle-b1-3", (2, 2, 1, 0, 0): "T2-bundle-b1-2"}
    assert CY_TABLE.keys() == labels.keys()
    perturbations = 0
    for row, label in labels.items():
        assert cy_table_lookup(HomologyFingerprint(*row)) == label
        for i, d in product(range(5), (-1, 1)):
            fp = HomologyFingerprint(*(x + d * (j == i) for j, x in enumerate(row)))
            assert cy_table_lookup(fp) is None or not fp.is_consistent()
            perturbations += 1
    # +-1 on each of five fields for five rows
    assert perturbations == 50


def kappa_by_formula(k2, kw):
    rows = [(k2 < 0 or kw < 0, Kappa.NEG_INF), (k2 == 0 and kw == 0, Kappa.ZERO),
            (k2 == 0 and kw > 0, Kappa.ONE), (k2 > 0 and kw > 0, Kappa.TWO),
            (k2 > 0 and kw == 0, None)]
    hits = [value for cond, value in rows if cond]
    assert len(hits) == 1, (k2, kw)
    return hits[0]


def classify_or_none(k2, kw):
    try:
        return classify_kappa(KodairaProfile(k2, kw, 1))
    except UnrealizableProfileError:
        return None


@criterion(8, "Kodaira dimension classifier")
def test_kappa_classifier():
    for s2, sw in product((-1, 0, 1), repeat=2):
        assert classify_or_none(s2 * 3, Fraction(sw, 2)) is kappa_by_formula(s2, sw)
    rng = random.Random(8)
    for _ in range(1000):
        k2 = rng.randint(-5, 5)
        kw = Fraction(rng.randint(-5, 5), rng.randint(1, 7))
        assert classify_or_none(k2, kw) is kappa_by_formula(k2, kw)


@criterion(9, "reversibility of (1, k) surgeries")
def test_reversibility():
    for entry in all_entries():
        C = entry.complement
        for F in entry.framings.values():
            for k, gamma in product(range(-5, 6), primitive_gammas(1)):
                S = SurgerySpec(1, k, gamma)
                C2, F2 = induced_complement(C, F, S)
                GENERATED.append((C, F, S))
                GENERATED.append((C2, F2, reverse_spec(S)))
                assert surgered_h1(C2, F2, reverse_spec(S)) == C.h1_X()


def _parity(amb):
    if amb.intersection_form_odd is None:
        return None
    return ODD if amb.intersection_form_odd else EVEN


@criterion(10, "theorem-consistency harness")
def test_consistency_harness():
    if not GENERATED:
        for fn in (test_lens_space_family, test_betti_and_parity, test_preferred_framing_equivalence,
                   test_reversibility):
            fn()
    with_kappa = 0
    for C, F, S in GENERATED:
        if C.ambient is None:
            continue
        prof = betti_profile_after(C, F, S)
        parity = None
        if C.ambient.L_class_status is not LClass.RATIONALLY_NONZERO:
            parity = intersection_parity_after(C, F, S)
        rep = check_surgery_consistency((C.ambient.kappa, fingerprint_before(C), _parity(C.ambient)),
                                        (fingerprint_after(prof), parity), S.p)
        assert rep.ok, (S, rep.violations)
        with_kappa += C.ambient.kappa is not None
    assert with_kappa > 0

    # a corrupted after-fingerprint must be caught, directly and through the CLI
    C = get_entry("clifford").complement
    before = (C.ambient.kappa, fingerprint_before(C), ODD)
    corrupted = HomologyFingerprint(1, 3, 1, 3, 1)
    assert check_surgery_consistency(before, (corrupted, ODD), 1).verdict == VIOLATION

    doc = entry_to_document(get_entry("clifford"))
    doc["surgeries"] = [{"p": 1, "k": 1, "gamma": [1, 0], "framing": "phi0",
                         "claimed_after": {**vars(corrupted), "parity": "odd"}}]
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "corrupted.json"
        path.write_text(dumps(doc))
        assert main(["compute", str(path), "--output", str(Path(tmp) / "report.txt")]) == 3


if __name__ == "__main__":
    failed = 0
    for fn in CRITERIA:
        number, title = fn.criterion
        try:
            fn()
            verdict = "PASS"
        except Exception as exc:
            verdict = f"FAIL  ({type(exc).__name__}: {exc})"
            failed += 1
        print(f"criterion {number:2d}  {verdict}  {title}")
    sys.exit(1 if failed else 0)
