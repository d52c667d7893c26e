"""Signed permutations: group laws, censuses, orbits, S_m certification."""

import math
import random

import pytest

from prymcert.intpoly import CycleType
from prymcert.signedperm import (
    EnumerationBudgetError,
    GroupDescriptor,
    IsSm,
    SignedPerm,
    SmInconclusive,
    census,
    compose,
    cycle_type_from_label_action,
    elements,
    in_wdm,
    induced_cycle_type,
    kappa_u,
    orbits,
    roots_f,
    roots_h,
    roots_u,
    sm_certificate,
    sm_normal_index_condition,
    stabilizer_generators,
    stabilizer_orbit_count,
    transitivity_degree,
)


# ---------------------------------------------------------------------------
# group structure
# ---------------------------------------------------------------------------


def test_identity_and_inverse():
    rng = random.Random(1)
    e = SignedPerm.identity(7)
    for _ in range(100):
        g = SignedPerm.random(7, rng)
        assert compose(e, g) == g and compose(g, e) == g
        assert (g * g.inverse()).is_identity and (g.inverse() * g).is_identity


def test_composition_matches_label_maps():
    rng = random.Random(2)
    for _ in range(60):
        g, h = SignedPerm.random(5, rng), SignedPerm.random(5, rng)
        gh = g * h
        for lbl in range(-5, 6):
            assert gh.act_label(lbl) == g.act_label(h.act_label(lbl))


def test_mismatched_sizes_rejected():
    with pytest.raises(ValueError):
        compose(SignedPerm.identity(3), SignedPerm.identity(4))


def test_conjugation_moves_signs_along_the_permutation():
    # (1, s) (eps, id) (1, s)^(-1) = (eps o s^(-1), id)
    rng = random.Random(3)
    m = 5
    for _ in range(60):
        s = list(range(m))
        rng.shuffle(s)
        ts = SignedPerm(s, (1,) * m)
        eps = tuple(rng.choice((1, -1)) for _ in range(m))
        conj = ts * SignedPerm(range(m), eps) * ts.inverse()
        sinv = ts.inverse().s
        assert conj == SignedPerm(range(m), tuple(eps[sinv[i]] for i in range(m)))


def test_in_wdm():
    assert in_wdm(SignedPerm.identity(4))
    assert not in_wdm(SignedPerm.sign_flip(4, 1))
    assert in_wdm(SignedPerm.sign_flip(4, 1) * SignedPerm.sign_flip(4, 2))


def test_sign_product_is_a_homomorphism():
    rng = random.Random(4)
    for _ in range(100):
        g, h = SignedPerm.random(6, rng), SignedPerm.random(6, rng)
        assert in_wdm(g * h) == (in_wdm(g) == in_wdm(h))


# ---------------------------------------------------------------------------
# the sign-forgetting projection
# ---------------------------------------------------------------------------


def test_kappa_basics():
    rng = random.Random(5)
    g = SignedPerm((1, 0, 2), (-1, 1, -1))
    assert kappa_u(g) == (2, 1, 3)
    assert kappa_u(SignedPerm(range(6), [-1] * 6)) == (1, 2, 3, 4, 5, 6)
    for _ in range(100):
        a, b = SignedPerm.random(6, rng), SignedPerm.random(6, rng)
        ka, kb, kab = kappa_u(a), kappa_u(b), kappa_u(a * b)
        assert kab == tuple(ka[kb[i] - 1] for i in range(6))


def test_kappa_kernel_on_wdm_is_even_sign_group():
    for m in (3, 4, 5):
        els = elements(GroupDescriptor.wdm(m))
        ident = tuple(range(1, m + 1))
        kernel = [g for g in els if kappa_u(g) == ident]
        assert len(kernel) == 2 ** (m - 1)
        assert all(g.sign_product() == 1 for g in kernel)
        assert len({kappa_u(g) for g in els}) == math.factorial(m)  # surjective


# ---------------------------------------------------------------------------
# induced cycle types
# ---------------------------------------------------------------------------


def test_induced_cycle_type_examples():
    assert induced_cycle_type(SignedPerm.identity(3)) == CycleType([1] * 6)
    assert induced_cycle_type(SignedPerm((1, 2, 0), (1, 1, 1))) == CycleType([3, 3])
    g = SignedPerm((1, 0, 2), (-1, 1, -1))  # swap 1,2 with eps = (-1, +1, -1)
    assert in_wdm(g)
    assert induced_cycle_type(g) == CycleType([4, 2])


def test_induced_cycle_type_against_label_walk():
    rng = random.Random(6)
    for _ in range(10**4):
        g = SignedPerm.random(rng.randint(1, 8), rng)
        assert induced_cycle_type(g) == cycle_type_from_label_action(g)


def test_label_permutation_parity_iff_sign_product():
    # the induced permutation on 2m labels is even iff the sign product is +1
    for m in range(1, 6):
        for g in elements(GroupDescriptor.perm0(m)):
            ct = induced_cycle_type(g)
            is_even = (2 * m - len(ct)) % 2 == 0
            assert is_even == in_wdm(g)


# ---------------------------------------------------------------------------
# censuses
# ---------------------------------------------------------------------------


def test_census_wd3_exact_counts():
    # by hand: identity 1; two flips or a signed transposition with product +1
    # give 2+2+1+1 (3 + 6 of them); odd transposition lifts give 4+2 (6);
    # 3-cycles with positive product give 3+3 (2 * 4 = 8)
    c = census(GroupDescriptor.wdm(3))
    assert c == {
        CycleType([1, 1, 1, 1, 1, 1]): 1,
        CycleType([1, 1, 2, 2]): 9,
        CycleType([2, 4]): 6,
        CycleType([3, 3]): 8,
    }
    assert sum(c.values()) == 24
    assert CycleType([6]) not in c


def test_census_totals_match_order_formulas():
    for m in range(2, 7):
        assert sum(census(GroupDescriptor.wdm(m)).values()) == 2 ** (m - 1) * math.factorial(m)
    assert sum(census(GroupDescriptor.perm0(4)).values()) == 2**4 * 24
    assert sum(census(GroupDescriptor.sign_group(5)).values()) == 32
    assert sum(census(GroupDescriptor.even_sign_group(3)).values()) == 4
    assert sum(census(GroupDescriptor.symmetric(5)).values()) == 120
    assert sum(census(GroupDescriptor.alternating(5)).values()) == 60


def test_census_agrees_with_raw_enumeration():
    for desc in (
        GroupDescriptor.wdm(4),
        GroupDescriptor.perm0(3),
        GroupDescriptor.even_sign_group(4),
        GroupDescriptor.alternating(4),
    ):
        raw: dict[CycleType, int] = {}
        for g in elements(desc):
            ct = induced_cycle_type(g)
            raw[ct] = raw.get(ct, 0) + 1
        assert raw == census(desc)


def test_census_budget_refusal():
    with pytest.raises(EnumerationBudgetError):
        census(GroupDescriptor.wdm(9))
    with pytest.raises(EnumerationBudgetError):
        census(GroupDescriptor.wdm(5), budget=100)


def test_generated_census():
    gens = [SignedPerm((1, 2, 0), (1, 1, 1))]
    c = census(GroupDescriptor.generated(gens))
    assert c == {CycleType([1] * 6): 1, CycleType([3, 3]): 2}


def test_two_m_descriptor_matches_full_signed_group():
    base = [SignedPerm.transposition(3, 1, 2), SignedPerm.full_cycle(3)]
    desc = GroupDescriptor.two_m(base)
    c = census(desc)
    assert sum(c.values()) == 2**3 * 6
    assert c == census(GroupDescriptor.perm0(3))
    assert stabilizer_orbit_count(desc, roots_h(3), 1) == 3


# ---------------------------------------------------------------------------
# orbits, stabilizers, transitivity
# ---------------------------------------------------------------------------


def test_wdm_transitive_on_nonzero_labels():
    assert len(orbits(GroupDescriptor.wdm(5), roots_h(5))) == 1


def test_trivial_group_has_singleton_orbits():
    assert len(orbits([], roots_h(5))) == 10
    assert len(orbits(GroupDescriptor.generated([], m=4), roots_h(4))) == 8


def test_stabilizer_of_a_root_has_three_orbits():
    w5 = GroupDescriptor.wdm(5)
    stab = stabilizer_generators(w5, 1, roots_h(5))
    orbs = orbits(stab, roots_h(5))
    assert len(orbs) == 3
    assert (1,) in orbs and (-1,) in orbs
    assert stabilizer_orbit_count(w5, roots_h(5), 1) == 3
    # stabilizer elements actually fix the root
    assert all(g.act_label(1) == 1 for g in stab)


def test_orbits_on_full_root_set():
    orbs = orbits(GroupDescriptor.wdm(3), roots_f(3))
    assert (0,) in orbs and len(orbs) == 2


def test_transitivity_degrees():
    assert transitivity_degree(GroupDescriptor.symmetric(5), roots_u(5)) == 2
    assert transitivity_degree(GroupDescriptor.alternating(5), roots_u(5)) == 2
    assert transitivity_degree(GroupDescriptor.even_sign_group(3), roots_h(3)) == 0
    assert transitivity_degree(GroupDescriptor.wdm(3), roots_h(3)) == 1
    assert transitivity_degree(GroupDescriptor.sign_group(3), roots_u(3)) == 0


# ---------------------------------------------------------------------------
# S_m certification
# ---------------------------------------------------------------------------


def test_sm_normal_index_condition():
    assert sm_normal_index_condition(11) is True
    assert sm_normal_index_condition(10) is False
    with pytest.raises(ValueError):
        sm_normal_index_condition(4)


def test_sm_certificate():
    good = sm_certificate([CycleType([7, 3, 1])], False, True, 11)
    assert isinstance(good, IsSm) and good.cycle_length == 7
    assert isinstance(sm_certificate([CycleType([7, 3, 1])], True, True, 11), SmInconclusive)
    assert isinstance(sm_certificate([CycleType([7, 3, 1])], False, False, 11), SmInconclusive)
    # m = 5: the window m/2 < q < m-2 is empty, nothing qualifies
    assert isinstance(sm_certificate([CycleType([3, 1, 1])], False, True, 5), SmInconclusive)
    # q = m - 2 is excluded (strict), q = 9 not prime for m = 12
    assert isinstance(sm_certificate([CycleType([9, 2, 1])], False, True, 11), SmInconclusive)


def test_descriptor_serialization():
    assert GroupDescriptor.wdm(5).to_json() == {"kind": "WDm", "m": 5}
    doc = GroupDescriptor.generated([SignedPerm((1, 0), (1, -1))]).to_json()
    assert doc["kind"] == "Generated" and doc["gens"] == [{"s": [2, 1], "eps": [1, -1]}]
