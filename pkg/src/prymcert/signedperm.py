"""Signed permutations of the labeled root set {0, +-b_1, ..., +-b_m}.

An element (eps, s) sends 0 to 0 and b_i to eps(i) * b_{s(i)}; the signed
labels are the integers +-1..+-m, so 2m points carry the action relevant to
an even polynomial of degree 2m and 2m+1 points the action for its odd
multiple by x.  The group of all such elements is 2^m.S_m; the kernel of the
sign forgetting projection kappa (eps, s) -> s is the sign group E_m = 2^m,
and the elements with sign product +1 form the index-2 subgroup W(D_m) of
order 2^(m-1) m!.

Groups are handled as descriptors plus generator sets.  Orbits and
transitivity use generator closure only; full element enumeration happens
solely under an explicit budget (census), and one-point stabilizers come
from Schreier generators, so no strong-generating-set machinery is needed.

Cycle types serialize as sorted integer lists, e.g. [2, 4]; descriptors as
{"kind": "WDm", "m": 5}.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from ._primes import is_prime
from .intpoly import CycleType

# census / element-enumeration budget: group order at most 2^7 * 8!
DEFAULT_ENUM_BUDGET = 2**7 * math.factorial(8)


class EnumerationBudgetError(RuntimeError):
    """Raised when a group is too large to enumerate; callers fall back to sampling."""


class SignedPerm:
    """An element (eps, s): immutable, hashable, with the label action built in.

    s is a 0-based image tuple (s[i] is the image of i) and eps a tuple of
    +-1.  Products compose label maps: (g1 * g2) acts as g1 after g2.
    """

    __slots__ = ("s", "eps")

    def __init__(self, s, eps):
        s = tuple(s)
        eps = tuple(eps)
        if sorted(s) != list(range(len(s))):
            raise ValueError(f"not a permutation of 0..{len(s) - 1}: {s}")
        if len(eps) != len(s) or any(e not in (1, -1) for e in eps):
            raise ValueError("eps must be a vector of +-1 of matching length")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "eps", eps)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPerm is immutable")

    @classmethod
    def identity(cls, m: int) -> SignedPerm:
        return cls(range(m), (1,) * m)

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> SignedPerm:
        """Swap i and j (1-based), all signs +1."""
        s = list(range(m))
        s[i - 1], s[j - 1] = s[j - 1], s[i - 1]
        return cls(s, (1,) * m)

    @classmethod
    def full_cycle(cls, m: int) -> SignedPerm:
        """The m-cycle 1 -> 2 -> ... -> m -> 1, all signs +1."""
        return cls(tuple((i + 1) % m for i in range(m)), (1,) * m)

    @classmethod
    def three_cycle(cls, m: int) -> SignedPerm:
        """The cycle 1 -> 2 -> 3 -> 1 for m >= 3, all signs +1."""
        s = list(range(m))
        s[0], s[1], s[2] = 1, 2, 0
        return cls(s, (1,) * m)

    @classmethod
    def sign_flip(cls, m: int, i: int) -> SignedPerm:
        """Flip the sign at position i (1-based), identity permutation."""
        eps = [1] * m
        eps[i - 1] = -1
        return cls(range(m), eps)

    @classmethod
    def random(cls, m: int, rng) -> SignedPerm:
        s = list(range(m))
        rng.shuffle(s)
        return cls(s, tuple(rng.choice((1, -1)) for _ in range(m)))

    @property
    def m(self) -> int:
        return len(self.s)

    @property
    def is_identity(self) -> bool:
        return self.s == tuple(range(self.m)) and all(e == 1 for e in self.eps)

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        """Composition of label maps, other applied first."""
        if self.m != other.m:
            raise ValueError(f"mismatched sizes {self.m} and {other.m}")
        s1, e1 = self.s, self.eps
        s2, e2 = other.s, other.eps
        s = tuple(s1[s2[i]] for i in range(len(s1)))
        eps = tuple(e2[i] * e1[s2[i]] for i in range(len(s1)))
        return SignedPerm(s, eps)

    def inverse(self) -> SignedPerm:
        inv = [0] * self.m
        eps = [1] * self.m
        for i, img in enumerate(self.s):
            inv[img] = i
            eps[img] = self.eps[i]
        return SignedPerm(inv, eps)

    def act_label(self, label: int) -> int:
        """Action on the signed labels {0, +-1, ..., +-m}."""
        if label == 0:
            return 0
        i = abs(label) - 1
        image = self.eps[i] * (self.s[i] + 1)
        return image if label > 0 else -image

    def act_point(self, i: int) -> int:
        """Projected action on the base points {1, ..., m}."""
        return self.s[i - 1] + 1

    def sign_product(self) -> int:
        return math.prod(self.eps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedPerm)
            and self.s == other.s
            and self.eps == other.eps
        )

    def __hash__(self) -> int:
        return hash((self.s, self.eps))

    def __repr__(self) -> str:
        s_one = tuple(v + 1 for v in self.s)
        return f"SignedPerm(s={s_one}, eps={self.eps})"

    def to_json(self) -> dict:
        return {"s": [v + 1 for v in self.s], "eps": list(self.eps)}


def compose(g1: SignedPerm, g2: SignedPerm) -> SignedPerm:
    """Group composition matching composition of the induced label maps."""
    return g1 * g2


def in_wdm(g: SignedPerm) -> bool:
    """Whether the product of signs is +1."""
    return g.sign_product() == 1


def kappa_u(g: SignedPerm) -> tuple[int, ...]:
    """The projection (eps, s) -> s, as a 1-based image tuple.

    A group homomorphism onto permutations of the base points; its kernel on
    any group of signed permutations lies in the sign group E_m.
    """
    return tuple(v + 1 for v in g.s)


def _cycles_of(s: tuple[int, ...]) -> list[list[int]]:
    seen = [False] * len(s)
    cycles = []
    for start in range(len(s)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = s[i]
        cycles.append(cyc)
    return cycles


def induced_cycle_type(g: SignedPerm) -> CycleType:
    """Cycle type of the action on the 2m nonzero labels.

    A cycle of s of length L contributes {L, L} when the product of signs
    along it is +1 (the + and - tracks stay separate) and {2L} when it is -1
    (the tracks merge).
    """
    lengths = []
    for cyc in _cycles_of(g.s):
        prod = math.prod(g.eps[i] for i in cyc)
        if prod == 1:
            lengths.extend((len(cyc), len(cyc)))
        else:
            lengths.append(2 * len(cyc))
    return CycleType(lengths)


def cycle_type_from_label_action(g: SignedPerm) -> CycleType:
    """Brute-force oracle: walk the orbits of the label action directly."""
    labels = [i for i in range(1, g.m + 1)] + [-i for i in range(1, g.m + 1)]
    seen: set[int] = set()
    lengths = []
    for start in labels:
        if start in seen:
            continue
        n = 0
        x = start
        while x not in seen:
            seen.add(x)
            n += 1
            x = g.act_label(x)
        lengths.append(n)
    return CycleType(lengths)


# ---------------------------------------------------------------------------
# labeled root sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LabeledRoots:
    """The label set R_f (2m+1 points), R_h (2m) or R_u (m points)."""

    m: int
    kind: str  # "R_f" | "R_h" | "R_u"

    def __post_init__(self):
        if self.kind not in ("R_f", "R_h", "R_u"):
            raise ValueError(f"unknown root-set kind {self.kind!r}")

    def labels(self) -> tuple[int, ...]:
        pm = [i for i in range(1, self.m + 1)] + [-i for i in range(1, self.m + 1)]
        if self.kind == "R_f":
            return tuple([0] + pm)
        if self.kind == "R_h":
            return tuple(pm)
        return tuple(range(1, self.m + 1))

    def act(self, g: SignedPerm, label: int) -> int:
        if self.kind == "R_u":
            return g.act_point(label)
        return g.act_label(label)


def roots_f(m: int) -> LabeledRoots:
    return LabeledRoots(m, "R_f")


def roots_h(m: int) -> LabeledRoots:
    return LabeledRoots(m, "R_h")


def roots_u(m: int) -> LabeledRoots:
    return LabeledRoots(m, "R_u")


# ---------------------------------------------------------------------------
# group descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupDescriptor:
    """A named group of signed permutations, or one given by generators.

    kinds: "Sm" (all permutations, trivial signs), "Am" (even ones), "Em"
    (all sign vectors, identity permutation), "Em0" (even sign vectors),
    "WDm" (sign product +1), "TwoM_Sm" (all of 2^m.S_m), "TwoM_G"
    (2^m.<base gens>), "Generated" (explicit generators).
    """

    kind: str
    m: int
    gens: tuple[SignedPerm, ...] = field(default=())

    @classmethod
    def symmetric(cls, m: int) -> GroupDescriptor:
        return cls("Sm", m)

    @classmethod
    def alternating(cls, m: int) -> GroupDescriptor:
        return cls("Am", m)

    @classmethod
    def sign_group(cls, m: int) -> GroupDescriptor:
        return cls("Em", m)

    @classmethod
    def even_sign_group(cls, m: int) -> GroupDescriptor:
        return cls("Em0", m)

    @classmethod
    def wdm(cls, m: int) -> GroupDescriptor:
        return cls("WDm", m)

    @classmethod
    def perm0(cls, m: int) -> GroupDescriptor:
        """The full group 2^m.S_m of all signed permutations."""
        return cls("TwoM_Sm", m)

    @classmethod
    def two_m(cls, base_gens: list[SignedPerm]) -> GroupDescriptor:
        """2^m.G for the group G generated by the given (sign-free) elements."""
        if not base_gens:
            raise ValueError("need at least one base generator")
        m = base_gens[0].m
        lifted = tuple(SignedPerm(g.s, (1,) * m) for g in base_gens)
        return cls("TwoM_G", m, lifted)

    @classmethod
    def generated(cls, gens: list[SignedPerm], m: int | None = None) -> GroupDescriptor:
        if gens:
            m = gens[0].m
        elif m is None:
            raise ValueError("m required for an empty generating set")
        return cls("Generated", m, tuple(gens))

    def generators(self) -> tuple[SignedPerm, ...]:
        m = self.m
        if self.kind == "Sm":
            if m == 1:
                return (SignedPerm.identity(1),)
            return (SignedPerm.transposition(m, 1, 2), SignedPerm.full_cycle(m))
        if self.kind == "Am":
            if m < 3:
                return (SignedPerm.identity(m),)
            if m == 3:
                return (SignedPerm.three_cycle(m),)
            if m % 2 == 1:
                return (SignedPerm.three_cycle(m), SignedPerm.full_cycle(m))
            # even m: the (m-1)-cycle fixing 1 is even
            s = [0] + [1 + (i % (m - 1)) for i in range(1, m)]
            return (SignedPerm.three_cycle(m), SignedPerm(s, (1,) * m))
        if self.kind == "Em":
            return tuple(SignedPerm.sign_flip(m, i) for i in range(1, m + 1))
        if self.kind == "Em0":
            return tuple(
                SignedPerm.sign_flip(m, i) * SignedPerm.sign_flip(m, i + 1)
                for i in range(1, m)
            )
        if self.kind == "WDm":
            pair = SignedPerm.sign_flip(m, 1) * SignedPerm.sign_flip(m, 2)
            return tuple(GroupDescriptor.symmetric(m).generators()) + (pair,)
        if self.kind == "TwoM_Sm":
            return tuple(GroupDescriptor.symmetric(m).generators()) + (
                SignedPerm.sign_flip(m, 1),
            )
        if self.kind == "TwoM_G":
            return self.gens + tuple(
                SignedPerm.sign_flip(m, i) for i in range(1, m + 1)
            )
        return self.gens

    def order(self) -> int | None:
        """Group order by formula for the named kinds, None otherwise."""
        m = self.m
        return {
            "Sm": math.factorial(m),
            "Am": math.factorial(m) // 2 if m >= 2 else 1,
            "Em": 2**m,
            "Em0": 2 ** (m - 1),
            "WDm": 2 ** (m - 1) * math.factorial(m),
            "TwoM_Sm": 2**m * math.factorial(m),
        }.get(self.kind)

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "m": self.m}
        if self.gens:
            doc["gens"] = [g.to_json() for g in self.gens]
        return doc


def elements(desc: GroupDescriptor, budget: int = DEFAULT_ENUM_BUDGET) -> list[SignedPerm]:
    """All elements, by direct product structure for the named kinds and by
    generator closure otherwise; refuses beyond the budget."""
    known = desc.order()
    if known is not None and known > budget:
        raise EnumerationBudgetError(
            f"group of order {known} exceeds enumeration budget {budget}"
        )
    m = desc.m
    if desc.kind in ("Sm", "Am"):
        parity_all = desc.kind == "Sm"
        out = []
        for s in itertools.permutations(range(m)):
            if parity_all or _perm_is_even(s):
                out.append(SignedPerm(s, (1,) * m))
        return out
    if desc.kind in ("Em", "Em0"):
        ident = tuple(range(m))
        out = []
        for eps in itertools.product((1, -1), repeat=m):
            if desc.kind == "Em" or math.prod(eps) == 1:
                out.append(SignedPerm(ident, eps))
        return out
    if desc.kind in ("WDm", "TwoM_Sm"):
        need_even = desc.kind == "WDm"
        out = []
        for s in itertools.permutations(range(m)):
            for eps in itertools.product((1, -1), repeat=m):
                if not need_even or math.prod(eps) == 1:
                    out.append(SignedPerm(s, eps))
        return out
    # generator closure
    gens = desc.generators()
    ident = SignedPerm.identity(m)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for gen in gens:
                h = gen * g
                if h not in seen:
                    if len(seen) >= budget:
                        raise EnumerationBudgetError(
                            f"generated group exceeds enumeration budget {budget}"
                        )
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen, key=lambda g: (g.s, g.eps))


def _perm_is_even(s) -> bool:
    return (len(s) - len(_cycles_of(tuple(s)))) % 2 == 0


def census(desc: GroupDescriptor, budget: int = DEFAULT_ENUM_BUDGET) -> dict[CycleType, int]:
    """Exact count of every induced cycle type on the 2m nonzero labels.

    Exhaustive: the counts sum to the group order.  For the named kinds the
    enumeration runs over (permutation, per-cycle sign product) pairs with
    multiplicity 2^(m - #cycles) instead of over raw sign vectors, which cuts
    the work by the full sign-group factor; the totals are unchanged.
    """
    known = desc.order()
    if known is not None and known > budget:
        raise EnumerationBudgetError(
            f"group of order {known} exceeds enumeration budget {budget}"
        )
    m = desc.m
    counts: dict[CycleType, int] = {}

    def add(ct: CycleType, n: int) -> None:
        counts[ct] = counts.get(ct, 0) + n

    if desc.kind in ("Sm", "Am"):
        for s in itertools.permutations(range(m)):
            if desc.kind == "Am" and not _perm_is_even(s):
                continue
            lens = [len(c) for c in _cycles_of(s)]
            add(CycleType([v for L in lens for v in (L, L)]), 1)
        return counts
    if desc.kind in ("Em", "Em0"):
        for eps in itertools.product((1, -1), repeat=m):
            if desc.kind == "Em0" and math.prod(eps) != 1:
                continue
            type_lens = []
            for e in eps:
                type_lens.extend((1, 1) if e == 1 else (2,))
            add(CycleType(type_lens), 1)
        return counts
    if desc.kind in ("WDm", "TwoM_Sm"):
        need_even = desc.kind == "WDm"
        for s in itertools.permutations(range(m)):
            lens = [len(c) for c in _cycles_of(s)]
            k = len(lens)
            weight = 2 ** (m - k)
            for sigma in itertools.product((1, -1), repeat=k):
                if need_even and math.prod(sigma) != 1:
                    continue
                type_lens = []
                for L, sg in zip(lens, sigma):
                    if sg == 1:
                        type_lens.extend((L, L))
                    else:
                        type_lens.append(2 * L)
                add(CycleType(type_lens), weight)
        return counts
    for g in elements(desc, budget):
        add(induced_cycle_type(g), 1)
    return counts


# ---------------------------------------------------------------------------
# orbits, stabilizers, transitivity
# ---------------------------------------------------------------------------


def _as_generators(group) -> tuple[SignedPerm, ...]:
    if isinstance(group, GroupDescriptor):
        return group.generators()
    return tuple(group)


def orbits(group, roots: LabeledRoots) -> list[tuple[int, ...]]:
    """Partition of the label set under the generated group (generator closure)."""
    gens = _as_generators(group)
    remaining = list(roots.labels())
    seen: set[int] = set()
    out = []
    for start in remaining:
        if start in seen:
            continue
        orb = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for lbl in frontier:
                for g in gens:
                    img = roots.act(g, lbl)
                    if img not in orb:
                        orb.add(img)
                        nxt.append(img)
            frontier = nxt
        seen |= orb
        out.append(tuple(sorted(orb)))
    return out


def transitivity_degree(group, roots: LabeledRoots) -> int:
    """Largest k <= 2 such that the action is k-transitive (0 if intransitive).

    Checked by orbit closure on points and then on ordered pairs of distinct
    points; degrees beyond 2 are never needed and are reported as 2.
    """
    gens = _as_generators(group)
    labels = roots.labels()
    if len(orbits(group, roots)) != 1:
        return 0
    if len(labels) < 2:
        return 1
    start = (labels[0], labels[1])
    orb = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for pair in frontier:
            for g in gens:
                img = (roots.act(g, pair[0]), roots.act(g, pair[1]))
                if img not in orb:
                    orb.add(img)
                    nxt.append(img)
        frontier = nxt
    n = len(labels)
    return 2 if len(orb) == n * (n - 1) else 1


def stabilizer_generators(group, label: int, roots: LabeledRoots) -> list[SignedPerm]:
    """Schreier generators of the stabilizer of one label.

    Standard orbit/transversal construction: for each generator g and each
    transversal element t_x, the element t_{g(x)}^(-1) g t_x fixes the label,
    and by Schreier's lemma these generate the full stabilizer.
    """
    gens = _as_generators(group)
    m = roots.m
    ident = SignedPerm.identity(m)
    transversal = {label: ident}
    frontier = [label]
    schreier: list[SignedPerm] = []
    seen: set[SignedPerm] = set()
    while frontier:
        nxt = []
        for x in frontier:
            tx = transversal[x]
            for g in gens:
                y = roots.act(g, x)
                if y not in transversal:
                    transversal[y] = g * tx
                    nxt.append(y)
                else:
                    s = transversal[y].inverse() * g * tx
                    if not s.is_identity and s not in seen:
                        seen.add(s)
                        schreier.append(s)
        frontier = nxt
    return schreier


def stabilizer_orbit_count(group, roots: LabeledRoots, label: int | None = None) -> int:
    """Number of orbits on the label set of the stabilizer of one label."""
    labels = roots.labels()
    if label is None:
        label = labels[0]
    stab = stabilizer_generators(group, label, roots)
    return len(orbits(stab, roots))


# ---------------------------------------------------------------------------
# symmetric-group certification
# ---------------------------------------------------------------------------


def sm_normal_index_condition(m: int) -> bool:
    """Whether S_m has no proper normal subgroup of index dividing m.

    For m >= 5 the normal subgroups are 1, A_m, S_m with indices m!, 2, 1;
    m! > m always, so the condition is exactly that 2 does not divide m.
    """
    if m < 5:
        raise ValueError(f"classification argument requires m >= 5, got {m}")
    return m % 2 == 1


@dataclass(frozen=True)
class IsSm:
    """Certified: the Galois group is all of S_m (sound, never a guess)."""

    cycle_length: int
    witness_type: CycleType


@dataclass(frozen=True)
class SmInconclusive:
    reason: str


def sm_certificate(types, disc_is_square: bool, irreducible: bool, m: int):
    """One-sided S_m certificate from Frobenius cycle types.

    IsSm when the polynomial is irreducible (hence the group transitive), the
    discriminant is not a square (hence the group is not inside A_m), and some
    observed type contains a cycle of prime length q with m/2 < q < m - 2:
    such a cycle power is a q-cycle, q > m/2 forces primitivity, and a
    primitive group with a prime cycle of length at most m - 3 contains A_m
    (Jordan).  Anything less returns SmInconclusive; there are no false
    positives, and callers respond to Inconclusive by sampling more primes.
    """
    if not irreducible:
        return SmInconclusive("polynomial not certified irreducible")
    if disc_is_square:
        return SmInconclusive("discriminant is a square: group may lie inside A_m")
    for t in types:
        for length in set(t):
            if 2 * length > m and length < m - 2 and is_prime(length):
                return IsSm(length, CycleType(t))
    return SmInconclusive("no prime-length cycle q with m/2 < q < m-2 observed")
