"""Exact integer linear algebra and finitely generated abelian groups.

Matrices are plain lists of rows of Python ints, so entries never
overflow.  A matrix with zero rows carries no column count of its own;
functions that need one take an explicit ``ncols``.

>>> group_from_presentation(2, [[3, 0]])
FgAbGroup(free_rank=1, torsion=(3,))
>>> str(_)
'Z + Z/3'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionError

IntMatrix = list[list[int]]


# ---------------------------------------------------------------------------
# matrix plumbing


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    n = _ncols(A, ncols)
    return [[A[i][j] for i in range(len(A))] for j in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Product of an m x k and a k x n matrix; ``ncols`` is n when B has no rows."""
    n = _ncols(B, ncols)
    k = len(B)
    for row in A:
        if len(row) != k:
            raise DimensionError(f"cannot multiply: row of length {len(row)} against {k} rows")
    return [[sum(row[t] * B[t][j] for t in range(k)) for j in range(n)] for row in A]


def vecmat(v: Sequence[int], A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[int]:
    """Row vector times matrix."""
    return matmul([list(v)], A, ncols)[0]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _ncols(A: Sequence[Sequence[int]], ncols: Optional[int]) -> int:
    if ncols is not None:
        for i, row in enumerate(A):
            if len(row) != ncols:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {ncols}")
        return ncols
    if not A:
        raise DimensionError("column count of an empty matrix must be given explicitly")
    n = len(A[0])
    for i, row in enumerate(A):
        if len(row) != n:
            raise DimensionError(f"ragged matrix: row {i} has {len(row)} entries, expected {n}")
    return n


def _check_int_entries(A: Sequence[Sequence[int]]) -> None:
    for row in A:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"matrix entries must be int, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# normal forms


def smith_normal_form(A: Sequence[Sequence[int]], ncols: Optional[int] = None
                      ) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` and U, V unimodular.

    D is diagonal with non-negative entries forming a divisibility chain;
    zero diagonal entries come after the nonzero ones.
    """
    m = len(A)
    n = _ncols(A, ncols)
    _check_int_entries(A)
    D = [list(row) for row in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])

        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            # remainders are strictly smaller than |p|; move the smallest in
            rest = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
            rest += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
            if rest:
                _, i, j = min(rest)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)

        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V


def invariant_factors(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[int]:
    """Diagonal of the Smith normal form, length ``min(rows, cols)``."""
    _, D, _ = smith_normal_form(A, ncols)
    return [D[i][i] for i in range(min(len(D), _ncols(A, ncols)))]


def rank(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> int:
    return sum(1 for d in invariant_factors(A, ncols) if d)


def hermite_normal_form(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Row-style Hermite normal form with zero rows dropped.

    Rows are in echelon order with positive pivots; entries above a pivot
    lie in ``[0, pivot)``.  The result depends only on the row span.
    """
    n = _ncols(A, ncols)
    _check_int_entries(A)
    H = [list(row) for row in A]
    m = len(H)
    r = 0
    for col in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(H[i][col]))
            H[r], H[piv] = H[piv], H[r]
            clean = True
            for i in range(r + 1, m):
                if H[i][col]:
                    q = H[i][col] // H[r][col]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    clean = clean and H[i][col] == 0
            if clean:
                break
        if not H[r][col]:
            continue
        if H[r][col] < 0:
            H[r] = [-x for x in H[r]]
        for i in range(r):
            q = H[i][col] // H[r][col]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
        r += 1
    return H[:r]


def integer_kernel(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[list[int]]:
    """Basis of ``{x in Z^n : A x = 0}``; the span is automatically saturated."""
    n = _ncols(A, ncols)
    _, D, V = smith_normal_form(A, n)
    r = sum(1 for i in range(min(len(D), n)) if D[i][i])
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


# ---------------------------------------------------------------------------
# finitely generated abelian groups


@dataclass(frozen=True)
class FgAbGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_t with every d_i >= 2 and d_i | d_{i+1}."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise ValueError(f"torsion coefficient {d} is not >= 2")
            if i and d % self.torsion[i - 1]:
                raise ValueError(f"torsion coefficients {self.torsion} are not a divisibility chain")

    @classmethod
    def from_diagonal(cls, n_generators: int, diagonal: Sequence[int]) -> "FgAbGroup":
        """Read off Z^n / (relations) from the Smith diagonal of the relations."""
        nonzero = [abs(d) for d in diagonal if d]
        return cls(n_generators - len(nonzero), tuple(d for d in nonzero if d != 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def group_from_presentation(n_generators: int, relations: Sequence[Sequence[int]]) -> FgAbGroup:
    """Canonical form of Z^n modulo the row span of ``relations``."""
    if n_generators < 0:
        raise DimensionError("generator count must be non-negative")
    _ncols(relations, n_generators)
    if not relations:
        return FgAbGroup(n_generators)
    return FgAbGroup.from_diagonal(n_generators, invariant_factors(relations, n_generators))


def quotient_by_element(n_generators: int, relations: Sequence[Sequence[int]],
                        v: Sequence[int]) -> FgAbGroup:
    if len(v) != n_generators:
        raise DimensionError(f"element has length {len(v)}, group has {n_generators} generators")
    return group_from_presentation(n_generators, [*map(list, relations), list(v)])


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class Lattice:
    """Subgroup of Z^ambient_dim, stored by its Hermite-reduced basis.

    Any generating set may be passed; it is canonicalised on construction,
    so two lattices compare equal exactly when they are the same subgroup.
    """

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = [list(v) for v in self.basis]
        H = hermite_normal_form(rows, self.ambient_dim)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in H))

    @classmethod
    def full(cls, dim: int) -> "Lattice":
        return cls(dim, tuple(map(tuple, identity(dim))))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def matrix(self) -> IntMatrix:
        return [list(v) for v in self.basis]

    def __contains__(self, v) -> bool:
        return lattice_membership(self, v)[0]

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(v in self for v in other.basis)

    def __add__(self, other: "Lattice") -> "Lattice":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError("lattices live in different ambient dimensions")
        return Lattice(self.ambient_dim, self.basis + other.basis)

    def index(self) -> int:
        """Index in Z^n; only defined for full-rank lattices."""
        if self.rank != self.ambient_dim:
            raise ValueError("index of a lattice that is not of full rank is infinite")
        out = 1
        for i, row in enumerate(self.basis):
            out *= row[i]
        return out


def lattice_membership(L: Lattice, v: Sequence[int]) -> tuple[bool, Optional[list[int]]]:
    """Decide ``v in L``; on success also return coefficients on ``L.basis``."""
    if len(v) != L.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in a lattice of dimension {L.ambient_dim}")
    residual = list(v)
    coeffs = []
    for row in L.basis:
        col = next(j for j, x in enumerate(row) if x)
        c, rem = divmod(residual[col], row[col])
        if rem:
            return False, None
        coeffs.append(c)
        residual = [a - c * b for a, b in zip(residual, row)]
    if any(residual):
        return False, None
    return True, coeffs


def saturate(L: Lattice) -> Lattice:
    """(L tensor Q) intersected with Z^n."""
    n = L.ambient_dim
    if L.rank == 0:
        return L
    K = integer_kernel(L.matrix(), n)
    if not K:
        return Lattice.full(n)
    return Lattice(n, tuple(map(tuple, integer_kernel(K, n))))


def annihilator(L: Lattice) -> Lattice:
    """``{c : a . c = 0 for every a in L}`` under the standard dot product."""
    n = L.ambient_dim
    if L.rank == 0:
        return Lattice.full(n)
    return Lattice(n, tuple(map(tuple, integer_kernel(L.matrix(), n))))


def is_saturated(L: Lattice) -> bool:
    return saturate(L) == L
