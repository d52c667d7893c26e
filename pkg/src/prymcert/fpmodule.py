"""F_p-valued function spaces on root sets and exact mod-p linear algebra.

The ambient objects are spaces of functions on the signed labels: the full
function space on the 2m nonzero labels, its odd part (dimension m, the
mod-p model of the Prym torsion), its even part and the even sum-zero part,
the constants, and the sum-zero space on all 2m+1 labels.  A signed
permutation acts by phi -> phi o g^(-1); action matrices are signed
permutation matrices in the chosen basis.

All linear algebra is exact Gaussian elimination over residues mod p.  The
arrays are int64 (entries < p, intermediate products < p^2), so numpy is
used purely as a fast exact integer container, never in floating point.
The commutant is computed as the null space of the stacked commutation
constraints; the orbit-counting rule for transitive permutation modules is
computed independently as a cross-check, never assumed.
"""

from __future__ import annotations

import numpy as np

from ._primes import is_prime
from .prymcalc import dim_prym
from .signedperm import (
    LabeledRoots,
    SignedPerm,
    orbits,
    roots_h,
    stabilizer_generators,
)

__all__ = [
    "FpMatrix",
    "FpSpace",
    "function_space_on_roots",
    "odd_space",
    "even_space",
    "even_zero_space",
    "constant_space",
    "vf_space",
    "vf_plus_space",
    "action_matrix",
    "d2_matrix",
    "commutant_dim",
    "orbit_count_formula",
    "heart_f2_irreducible",
    "lambda_rank_check",
]


class FpMatrix:
    """A square matrix over F_p; a thin exact wrapper around an int64 array."""

    __slots__ = ("p", "a")

    def __init__(self, p: int, a):
        self.p = p
        self.a = np.asarray(a, dtype=np.int64) % p

    @classmethod
    def identity(cls, p: int, n: int) -> FpMatrix:
        return cls(p, np.eye(n, dtype=np.int64))

    @property
    def n(self) -> int:
        return self.a.shape[0]

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        if self.p != other.p:
            raise ValueError("mismatched moduli")
        return FpMatrix(self.p, (self.a @ other.a) % self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and np.array_equal(self.a, other.a)
        )

    def __hash__(self):
        return hash((self.p, self.a.tobytes()))

    def to_lists(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.a]

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, {self.to_lists()})"


def _eliminate(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """In-place row reduction mod p; returns (matrix, pivot column list)."""
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if M[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = M[r] * inv % p
        col = M[:, c].copy()
        col[r] = 0
        M -= np.outer(col, M[r])
        M %= p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def _rank(M: np.ndarray, p: int) -> int:
    if M.size == 0:
        return 0
    _, pivots = _eliminate(M.copy() % p, p)
    return len(pivots)


def _solve_in_span(B: np.ndarray, V: np.ndarray, p: int) -> np.ndarray:
    """Solve B X = V mod p where B has full column rank; raises if V not in span."""
    d = B.shape[1]
    M = np.concatenate([B, V], axis=1) % p
    M, pivots = _eliminate(M, p)
    if pivots[: len(pivots)] != list(range(d))[: len(pivots)] or len(pivots) < d:
        if any(c >= d for c in pivots):
            raise ValueError("image vector not in the span of the basis")
        raise ValueError("basis does not have full column rank")
    # rows beyond d must be zero in the V part too
    if M.shape[0] > d and M[d:, d:].any():
        raise ValueError("image vector not in the span of the basis")
    return M[:d, d:] % p


class FpSpace:
    """A based F_p-subspace of functions on a labeled root set.

    The basis is a matrix whose columns are the basis vectors written in the
    delta-function coordinates of the ambient label set.
    """

    def __init__(self, p: int, roots: LabeledRoots, basis: np.ndarray, name: str):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p
        self.roots = roots
        self.labels = roots.labels()
        self.index = {lbl: i for i, lbl in enumerate(self.labels)}
        self.basis = np.asarray(basis, dtype=np.int64) % p
        self.name = name
        if self.basis.shape[0] != len(self.labels):
            raise ValueError("basis rows must match the ambient label count")

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def m(self) -> int:
        return self.roots.m

    def __repr__(self) -> str:
        return f"FpSpace({self.name}, p={self.p}, dim={self.dim})"


def function_space_on_roots(m: int, p: int) -> FpSpace:
    """The full function space F_p^(R_h), delta-function basis, dim 2m."""
    return FpSpace(p, roots_h(m), np.eye(2 * m, dtype=np.int64), "F_p^R_h")


def odd_space(m: int, p: int) -> FpSpace:
    """Odd functions: basis delta(+i) - delta(-i); dim m.

    As a module this is V_f^- (odd functions on all roots vanish at 0, so
    restriction to the nonzero labels is an isomorphism onto W_h^-).
    """
    roots = roots_h(m)
    B = np.zeros((2 * m, m), dtype=np.int64)
    for i in range(m):
        B[i, i] = 1
        B[m + i, i] = -1
    return FpSpace(p, roots, B, "V_f^-")


def even_space(m: int, p: int) -> FpSpace:
    """Even functions on the nonzero labels: basis delta(+i) + delta(-i)."""
    B = np.zeros((2 * m, m), dtype=np.int64)
    for i in range(m):
        B[i, i] = 1
        B[m + i, i] = 1
    return FpSpace(p, roots_h(m), B, "W_h^+")


def even_zero_space(m: int, p: int) -> FpSpace:
    """Even functions with zero value sum; dim m - 1."""
    B = np.zeros((2 * m, m - 1), dtype=np.int64)
    for i in range(m - 1):
        B[i, i] = 1
        B[m + i, i] = 1
        B[i + 1, i] = -1
        B[m + i + 1, i] = -1
    return FpSpace(p, roots_h(m), B, "W_h^+,0")


def constant_space(m: int, p: int) -> FpSpace:
    """The constants F_p . 1 on the nonzero labels."""
    return FpSpace(p, roots_h(m), np.ones((2 * m, 1), dtype=np.int64), "F_p.1")


def vf_space(m: int, p: int) -> FpSpace:
    """Sum-zero functions on all 2m+1 labels; dim 2m."""
    roots = LabeledRoots(m, "R_f")
    labels = roots.labels()
    B = np.zeros((2 * m + 1, 2 * m), dtype=np.int64)
    zero_row = labels.index(0)
    col = 0
    for row, lbl in enumerate(labels):
        if lbl == 0:
            continue
        B[row, col] = 1
        B[zero_row, col] = -1
        col += 1
    return FpSpace(p, roots, B, "V_f")


def vf_plus_space(m: int, p: int) -> FpSpace:
    """Even sum-zero functions on all labels: delta(+i) + delta(-i) - 2 delta(0)."""
    roots = LabeledRoots(m, "R_f")
    labels = roots.labels()
    idx = {lbl: i for i, lbl in enumerate(labels)}
    B = np.zeros((2 * m + 1, m), dtype=np.int64)
    for i in range(1, m + 1):
        B[idx[i], i - 1] = 1
        B[idx[-i], i - 1] = 1
        B[idx[0], i - 1] = -2
    return FpSpace(p, roots, B, "V_f^+")


def _push_forward(space: FpSpace, image_of_label) -> np.ndarray:
    """Matrix of phi -> phi o g^(-1) on the ambient delta coordinates."""
    n = len(space.labels)
    out = np.zeros((n, space.basis.shape[1]), dtype=np.int64)
    for row, lbl in enumerate(space.labels):
        out[space.index[image_of_label(lbl)]] += space.basis[row]
    return out % space.p


def action_matrix(g: SignedPerm, space: FpSpace) -> FpMatrix:
    """Matrix of g on the space in its basis; multiplicative in g."""
    if g.m != space.m:
        raise ValueError(f"element acts on m={g.m}, space has m={space.m}")
    V = _push_forward(space, lambda lbl: space.roots.act(g, lbl))
    X = _solve_in_span(space.basis.copy(), V, space.p)
    return FpMatrix(space.p, X)


def d2_matrix(space: FpSpace) -> FpMatrix:
    """Matrix of the involution phi(alpha) -> phi(-alpha) on the space."""
    V = _push_forward(space, lambda lbl: -lbl)
    X = _solve_in_span(space.basis.copy(), V, space.p)
    return FpMatrix(space.p, X)


def commutant_dim(generators, space: FpSpace) -> int:
    """Dimension over F_p of {X : X A_g = A_g X for all generators g}.

    Computed as the exact null space of the stacked commutation constraints
    (A_g (x) I - I (x) A_g^T) vec(X) = 0; with no generators this is the full
    matrix algebra of dimension dim^2.
    """
    d = space.dim
    gens = list(generators)
    if not gens:
        return d * d
    p = space.p
    eye = np.eye(d, dtype=np.int64)
    blocks = []
    for g in gens:
        A = action_matrix(g, space).a
        blocks.append((np.kron(A, eye) - np.kron(eye, A.T)) % p)
    M = np.concatenate(blocks, axis=0)
    return d * d - _rank(M, p)


def orbit_count_formula(generators, m: int, label: int = 1) -> int:
    """Orbit count on the nonzero labels of the stabilizer of one root.

    For a transitive permutation module this equals the dimension of the
    endomorphism algebra of the full function space; both sides are computed
    independently so the identity is a cross-check, not an assumption.
    """
    roots = roots_h(m)
    stab = stabilizer_generators(generators, label, roots)
    return len(orbits(stab, roots))


# ---------------------------------------------------------------------------
# the F_2 heart and the torsion-rank identity
# ---------------------------------------------------------------------------


def _apply_perm_to_mask(mask: int, s: tuple[int, ...]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << s[i]
        mask >>= 1
        i += 1
    return out


def _spin_dimension_f2(v: int, gens: list[tuple[int, ...]]) -> int:
    """Dimension of the smallest gens-stable F_2-subspace containing v."""
    basis: list[int] = []

    def insert(w: int) -> bool:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            basis.sort(reverse=True)
            return True
        return False

    queue = [v]
    insert(v)
    while queue:
        w = queue.pop()
        for s in gens:
            img = _apply_perm_to_mask(w, s)
            if insert(img):
                queue.append(img)
    return len(basis)


def heart_f2_irreducible(m: int, group: str = "A_m") -> bool:
    """Irreducibility of the sum-zero subspace of F_2^m under A_m or S_m.

    For odd m the heart of the natural permutation module over F_2 is the
    even-weight (sum-zero) subspace, of dimension m - 1.  Decided by
    spinning: the module is irreducible iff every nonzero vector generates
    everything, and by transitivity on supports it is enough to spin one
    vector of each even weight.
    """
    if m % 2 == 0:
        raise ValueError("even m puts the all-ones vector in the sum-zero space")
    if not 3 <= m <= 13:
        raise ValueError(f"spinning budget covers 3 <= m <= 13, got {m}")
    if group not in ("A_m", "S_m"):
        raise ValueError(f"group must be 'A_m' or 'S_m', got {group!r}")
    if group == "A_m" and m == 3:
        gens = [(1, 2, 0)]
    elif group == "A_m":
        three = tuple([1, 2, 0] + list(range(3, m)))
        full = tuple((i + 1) % m for i in range(m))  # m odd: the m-cycle is even
        gens = [three, full]
    else:
        swap = tuple([1, 0] + list(range(2, m)))
        full = tuple((i + 1) % m for i in range(m))
        gens = [swap, full]
    target = m - 1
    for weight in range(2, m, 2):
        v = (1 << weight) - 1
        if _spin_dimension_f2(v, gens) != target:
            return False
    return True


def lambda_rank_check(p: int, m: int) -> bool:
    """Consistency of the torsion rank: 2 (m(p-1)/2) / (p-1) equals m."""
    d = dim_prym(p, m)
    if (2 * d) % (p - 1) != 0:
        return False
    return (2 * d) // (p - 1) == m
