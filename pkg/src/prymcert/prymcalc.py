"""Closed-form invariants of the trinomial curve family and its Prym variety.

For an odd prime p, an integer r >= 2 and m = pr - 1, n = 2m + 1, the degree-n
odd polynomial f defines a cyclic degree-p cover of the line with genus
(n-1)(p-1)/2 and an m(p-1)/2-dimensional Prym variety.  The order-p
automorphism acts on holomorphic differentials x^i dx/y^j with eigenvalue
zeta_p^(-j), and the order-2 automorphism with eigenvalue (-1)^(i+1-j); the
anti-invariant forms are exactly those with i and j of the same parity.  This
module enumerates that basis, tabulates the eigenvalue multiplicities on the
anti-invariant part (rj for even j, rj - 1 for odd j), and evaluates the
gcd/distinctness/inequality facts consumed by the certificate engine.

All comparisons are exact: integers and fractions.Fraction only, never floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._primes import is_prime


@dataclass(frozen=True)
class FamilyParams:
    """Parameter tuple (p, r, c) with derived m = pr - 1 and n = 2m + 1."""

    p: int
    r: int
    c: int = 1

    def __post_init__(self) -> None:
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.r < 2:
            raise ValueError(f"r must be an integer >= 2, got {self.r}")
        if self.c == 0 or self.c % 2 == 0:
            raise ValueError(f"c must be an odd nonzero integer, got {self.c}")

    @property
    def m(self) -> int:
        return self.p * self.r - 1

    @property
    def n(self) -> int:
        return 2 * self.m + 1

    def to_json(self) -> dict:
        return {"p": self.p, "r": self.r, "m": self.m, "n": self.n, "c": self.c}


@dataclass(frozen=True)
class BasisForm:
    """The differential x^i dx/y^j together with its eigenvalue data."""

    i: int
    j: int

    @property
    def delta_p_exponent(self) -> int:
        """Exponent e such that the order-p automorphism scales by zeta_p^e."""
        return -self.j

    @property
    def delta_2_sign(self) -> int:
        """Eigenvalue (-1)^(i+1-j) of the involution."""
        return -1 if (self.i + 1 - self.j) % 2 else 1


@dataclass(frozen=True)
class MultiplicityTable:
    """Multiplicity of the eigenvalue zeta_p^(-j) on the anti-invariant forms."""

    p: int
    r: int
    mult: dict[int, int]

    def values(self) -> tuple[int, ...]:
        return tuple(self.mult[j] for j in sorted(self.mult))

    def total(self) -> int:
        return sum(self.mult.values())

    def gcd(self) -> int:
        return math.gcd(*self.values())

    def to_json(self) -> dict:
        return {str(j): self.mult[j] for j in sorted(self.mult)}


def genus_curve(n: int, p: int) -> int:
    """Genus (n-1)(p-1)/2 of the smooth model of y^p = f(x), deg f = n."""
    if n < 4:
        raise ValueError(f"degree must be >= 4, got {n}")
    if n % p == 0:
        raise ValueError(f"p = {p} must not divide n = {n}")
    return (n - 1) * (p - 1) // 2


def dim_prym(p: int, m: int) -> int:
    """Dimension m(p-1)/2 of the Prym variety of the involution quotient."""
    return m * (p - 1) // 2


def omega_basis(n: int, p: int) -> list[BasisForm]:
    """The differential basis x^i dx/y^j, 1 <= j <= p-1, 0 <= i <= [nj/p]-1.

    The list has exactly genus_curve(n, p) entries.
    """
    genus_curve(n, p)  # validates n, p
    forms = []
    for j in range(1, p):
        for i in range(n * j // p):
            forms.append(BasisForm(i, j))
    return forms


def anti_invariant_partition(p: int, r: int) -> dict[int, tuple[int, ...]]:
    """Exponents i of the involution-anti-invariant forms, grouped by j.

    Derived by enumerating omega_basis for n = 2pr - 1 and keeping the forms
    with delta_2_sign == -1; multiplicity_table gives the closed-form sizes.
    """
    n = 2 * p * r - 1
    parts: dict[int, list[int]] = {j: [] for j in range(1, p)}
    for form in omega_basis(n, p):
        if form.delta_2_sign == -1:
            parts[form.j].append(form.i)
    return {j: tuple(sorted(parts[j])) for j in parts}


def multiplicity_table(p: int, r: int) -> MultiplicityTable:
    """Closed form: multiplicity rj for even j, rj - 1 for odd j."""
    mult = {j: r * j if j % 2 == 0 else r * j - 1 for j in range(1, p)}
    return MultiplicityTable(p, r, mult)


def multiplicities_coprime(p: int, r: int) -> bool:
    """Whether the eigenvalue multiplicities have gcd 1 (holds iff r is even)."""
    return multiplicity_table(p, r).gcd() == 1


def multiplicities_distinct(p: int, r: int) -> bool:
    """Whether the eigenvalue multiplicities are pairwise distinct."""
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    values = multiplicity_table(p, r).values()
    return len(set(values)) == len(values)


def non_jacobian_inequality(p: int, r: int) -> bool:
    """Exact check of r - 1 < (1/p)(2 dim Prym / (p-1)) - (p-2)/p.

    Algebraically this reduces to 0 < 1/p, so it holds for every valid (p, r);
    it is still evaluated per instance because it is a leaf of the certificate.
    """
    d = dim_prym(p, p * r - 1)
    rhs = Fraction(2 * d, p * (p - 1)) - Fraction(p - 2, p)
    return Fraction(r - 1) < rhs
