"""Ring core: parsing, arithmetic, zero divisors, annihilators, subrings."""

import math

import pytest

from iagraph.rings import (
    CapExceededError,
    ProductRing,
    RingSpec,
    RingSpecError,
    Subring,
    UnsupportedVariantError,
    big_omega,
    divisors,
    factorize,
    format_element,
    parse_ring_spec,
    product_ring,
    radical,
)

from conftest import (
    oracle_annihilator,
    oracle_classes,
    oracle_mul,
    oracle_zero_divisors,
    ring_elements,
)


# ---------------------------------------------------------------------------
# parsing and number helpers


def test_parse_single_factor():
    assert parse_ring_spec("Z12").factors == (12,)


def test_parse_product():
    assert parse_ring_spec("Z4xZ4").factors == (4, 4)
    assert parse_ring_spec("Z2xZ3xZ5").factors == (2, 3, 5)


def test_parse_case_insensitive():
    assert parse_ring_spec("z2Xz3").factors == (2, 3)


def test_parse_rejects_modulus_below_two():
    with pytest.raises(RingSpecError):
        parse_ring_spec("Z1")
    with pytest.raises(RingSpecError):
        parse_ring_spec("Z0xZ4")


def test_parse_rejects_garbage():
    for bad in ("", "Q5", "Z", "Z12x", "xZ12", "Z-3", "Z4 x Z4x"):
        with pytest.raises(RingSpecError):
            parse_ring_spec(bad)


def test_parse_order_cap():
    with pytest.raises(RingSpecError):
        parse_ring_spec("Z101", max_order=100)


def test_ring_id_round_trip():
    spec = parse_ring_spec("Z4xZ6xZ25")
    assert spec.ring_id() == "Z4xZ6xZ25"
    assert spec.order == 600
    assert spec.arity == 3


def test_factorize_and_friends():
    assert factorize(12) == ((2, 2), (3, 1))
    assert factorize(97) == ((97, 1),)
    assert radical(12) == 6
    assert radical(30) == 30
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert big_omega(12) == 3
    assert big_omega(8) == 3


def test_factorization_remultiplies():
    for n in range(2, 3000):
        assert math.prod(p**e for p, e in factorize(n)) == n


def test_subring_members_must_live_in_parent():
    ring = product_ring("Z4")
    with pytest.raises(ValueError):
        Subring(ring, frozenset({(0,), (9,)}))


def test_format_element():
    assert format_element((7,)) == "7"
    assert format_element((2, 0)) == "(2,0)"


# ---------------------------------------------------------------------------
# arithmetic


def test_mul_z12():
    ring = product_ring("Z12")
    assert ring.mul((4,), (6,)) == (0,)


def test_add_product_coordinatewise():
    ring = product_ring("Z4xZ4")
    assert ring.add((2, 3), (3, 2)) == (1, 1)


def test_add_z6():
    ring = product_ring("Z6")
    assert ring.add((4,), (5,)) == (3,)


def test_neg():
    ring = product_ring("Z12")
    assert ring.neg((5,)) == (7,)
    assert ring.neg((0,)) == (0,)


def test_arity_mismatch_rejected():
    ring = product_ring("Z4xZ4")
    with pytest.raises(ValueError):
        ring.add((1,), (2, 3))
    with pytest.raises(ValueError):
        ring.mul((1, 2, 3), (0, 0))


def test_out_of_range_rejected():
    ring = product_ring("Z4xZ4")
    with pytest.raises(ValueError):
        ring.add((4, 0), (0, 0))


def test_reduce_normalizes_coordinates():
    ring = product_ring("Z4xZ4")
    assert ring.reduce((13, -7)) == (1, 1)


# ---------------------------------------------------------------------------
# zero divisors


def test_is_zero_divisor_z12():
    ring = product_ring("Z12")
    assert ring.is_zero_divisor((8,))
    assert not ring.is_zero_divisor((5,))
    assert ring.is_zero_divisor((0,))


def test_is_zero_divisor_product():
    ring = product_ring("Z3xZ3")
    assert ring.is_zero_divisor((1, 0))
    assert not ring.is_zero_divisor((1, 1))


def test_zero_divisor_lemma_sweep():
    """For 1 < k < n, k is a nonzero zero-divisor iff gcd(k, n) != 1,
    checked against the definition itself."""
    for n in range(2, 120):
        ring = product_ring(f"Z{n}")
        brute = oracle_zero_divisors((n,))
        for k in range(1, n):
            expected = math.gcd(k, n) != 1
            assert ring.is_zero_divisor((k,)) == expected
            assert ((k,) in brute) == expected


def test_zero_divisor_set_z12():
    ring = product_ring("Z12")
    assert ring.zero_divisor_set() == {(0,), (2,), (3,), (4,), (6,), (8,), (9,), (10,)}


def test_zero_divisor_set_field():
    assert product_ring("Z7").zero_divisor_set() == {(0,)}


def test_zero_divisor_set_product():
    got = product_ring("Z3xZ3").zero_divisor_set()
    expected = {(0, 0)} | {(a, 0) for a in (1, 2)} | {(0, b) for b in (1, 2)}
    assert got == expected


def test_zero_divisor_set_matches_oracle(small_ring_ids):
    for rid in small_ring_ids:
        ring = product_ring(rid)
        assert ring.zero_divisor_set() == oracle_zero_divisors(ring.spec.factors), rid


# ---------------------------------------------------------------------------
# annihilators


def test_annihilator_key_values():
    ring = product_ring("Z12")
    assert ring.annihilator_key((2,)) == (6,)
    assert ring.annihilator_key((10,)) == (6,)
    assert ring.annihilator_key((5,)) == (12,)
    assert ring.annihilator_key((0,)) == (1,)


def test_annihilator_key_expansion():
    ring = product_ring("Z12")
    assert ring.expand_annihilator_key((6,)) == {(0,), (6,)}
    assert ring.expand_annihilator_key((12,)) == {(0,)}
    assert ring.expand_annihilator_key((1,)) == set(ring.elements())


def test_annihilator_set_examples():
    ring = product_ring("Z12")
    assert ring.annihilator_set((2,)) == {(0,), (6,)}
    assert ring.annihilator_set((6,)) == {(0,), (2,), (4,), (6,), (8,), (10,)}
    prod = product_ring("Z3xZ3")
    assert prod.annihilator_set((1, 0)) == {(0, 0), (0, 1), (0, 2)}


def test_key_expansion_equals_scan_and_oracle(small_ring_ids):
    for rid in small_ring_ids:
        ring = product_ring(rid)
        for x in ring.elements():
            expanded = ring.expand_annihilator_key(ring.annihilator_key(x))
            assert expanded == ring.annihilator_set(x), (rid, x)
            assert expanded == oracle_annihilator(ring.spec.factors, x), (rid, x)


def test_annihilator_set_numpy_path_matches_oracle():
    # order 300 exercises the vectorized scan
    ring = product_ring("Z300")
    for x in [(0,), (2,), (25,), (30,), (77,), (150,), (299,)]:
        assert ring.annihilator_set(x) == oracle_annihilator((300,), x)


def test_same_gcd_same_annihilator_sweep():
    """k with gcd(k, n) = l > 1 has the same annihilator key as l."""
    for n in range(2, 200):
        ring = product_ring(f"Z{n}")
        for k in range(1, n):
            l = math.gcd(k, n)
            if l > 1:
                assert ring.annihilator_key((k,)) == ring.annihilator_key((l,)), (n, k)


def test_ann_intersection_nonzero():
    ring = product_ring("Z12")
    k2 = ring.annihilator_key((2,))
    k3 = ring.annihilator_key((3,))
    k4 = ring.annihilator_key((4,))
    k0 = ring.annihilator_key((0,))
    assert ring.ann_intersection_nonzero(k2, k4)
    assert not ring.ann_intersection_nonzero(k2, k3)
    assert ring.ann_intersection_nonzero(k2, k0)
    with pytest.raises(ValueError):
        ring.ann_intersection_nonzero((6,), (6, 6))


def test_ann_intersection_matches_set_intersection(small_ring_ids):
    for rid in small_ring_ids:
        ring = product_ring(rid)
        zero = ring.zero
        classes = ring.annihilator_classes()
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                fast = ring.ann_intersection_nonzero(classes[i][0], classes[j][0])
                a = oracle_annihilator(ring.spec.factors, classes[i][1][0])
                b = oracle_annihilator(ring.spec.factors, classes[j][1][0])
                assert fast == (a & b != {zero}), (rid, i, j)


def test_intersection_contained_in_sum_annihilator(small_ring_ids):
    """ann(x) n ann(y) always sits inside ann(x + y)."""
    for rid in small_ring_ids[:8]:
        ring = product_ring(rid)
        mods = ring.spec.factors
        elems = ring.elements()
        for x in elems:
            ax = oracle_annihilator(mods, x)
            for y in elems:
                common = ax & oracle_annihilator(mods, y)
                s = ring.add(x, y)
                assert common <= oracle_annihilator(mods, s), (rid, x, y)


def test_strict_containment_witness_z6():
    ring = product_ring("Z6")
    x, y = (4,), (5,)
    common = ring.annihilator_set(x) & ring.annihilator_set(y)
    target = ring.annihilator_set(ring.add(x, y))
    assert common < target
    assert (2,) in target and (2,) not in common


def test_annihilator_classes_well_defined(small_ring_ids):
    """Adjacency cannot depend on the chosen representatives."""
    for rid in small_ring_ids:
        ring = product_ring(rid)
        mods = ring.spec.factors
        zero = ring.zero
        classes = ring.annihilator_classes()
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                verdicts = {
                    (oracle_annihilator(mods, x) & oracle_annihilator(mods, y)) != {zero}
                    for x in classes[i][1]
                    for y in classes[j][1]
                }
                assert len(verdicts) == 1, (rid, i, j)


def test_annihilator_classes_match_oracle(small_ring_ids):
    for rid in small_ring_ids:
        ring = product_ring(rid)
        got = {members[0]: members for _, members in ring.annihilator_classes()}
        expected = {rep: members for rep, (_, members) in oracle_classes(ring.spec.factors).items()}
        assert got == expected, rid


# ---------------------------------------------------------------------------
# Z(R) as an ideal, common annihilators, nilpotents


def test_zero_divisors_ideal_z8():
    assert product_ring("Z8").is_zero_divisors_ideal()


def test_zero_divisors_not_ideal_z12():
    ring = product_ring("Z12")
    witness = ring.zero_divisor_ideal_witness()
    assert witness is not None
    x, y = witness
    zset = ring.zero_divisor_set()
    assert x in zset and y in zset and ring.add(x, y) not in zset


def test_zero_divisors_not_ideal_product():
    assert not product_ring("Z3xZ3").is_zero_divisors_ideal()


def test_zero_divisors_absorb_multiplication(small_ring_ids):
    """r * z stays a zero-divisor for every ring element r; the ideal test
    therefore only needs additive closure."""
    for rid in small_ring_ids[:8]:
        ring = product_ring(rid)
        zset = ring.zero_divisor_set()
        for z in zset:
            for r in ring.elements():
                assert ring.mul(r, z) in zset, (rid, r, z)


def test_common_annihilator():
    assert product_ring("Z8").common_annihilator_of_zero_divisors() == {(0,), (4,)}
    assert product_ring("Z12").common_annihilator_of_zero_divisors() == {(0,)}
    z7 = product_ring("Z7")
    assert z7.common_annihilator_of_zero_divisors() == set(z7.elements())


def test_nilpotent_set_examples():
    assert product_ring("Z12").nilpotent_set() == {(0,), (6,)}
    assert product_ring("Z30").nilpotent_set() == {(0,)}
    assert product_ring("Z4xZ3").nilpotent_set() == {(0, 0), (2, 0)}


def brute_nilpotents(ring):
    out = set()
    steps = max(1, ring.order.bit_length())
    for x in ring.elements():
        y = x
        for _ in range(steps):
            y = ring.mul(y, y)
            if y == ring.zero:
                break
        if y == ring.zero:
            out.add(x)
    return out


def test_nilpotent_fast_path_equals_powering(small_ring_ids):
    for rid in small_ring_ids:
        ring = product_ring(rid)
        assert ring.nilpotent_set() == brute_nilpotents(ring), rid
    for n in range(2, 80):
        ring = product_ring(f"Z{n}")
        assert ring.nilpotent_set() == brute_nilpotents(ring), n


# ---------------------------------------------------------------------------
# subrings


def test_subring_generated_by_one_is_whole_ring():
    ring = product_ring("Z12")
    sub = ring.subring_generated([(1,)])
    assert sub.order == 12
    assert sub.has_one


def test_subring_diagonal():
    ring = product_ring("Z2xZ2")
    sub = ring.subring_generated([(1, 1)])
    assert sub.members == frozenset({(0, 0), (1, 1)})
    assert sub.has_one


def test_subring_mixed_generators():
    ring = product_ring("Z4xZ4")
    sub = ring.subring_generated([(2, 0), (1, 1)])
    assert sub.order == 8
    assert sub.members == frozenset(
        (a, b) for a in range(4) for b in range(4) if (a - b) % 2 == 0
    )
    sub.validate_closure()


def test_subring_closure_validation_catches_bad_sets():
    ring = product_ring("Z4xZ4")
    bad = Subring(ring, frozenset({(0, 0), (1, 1)}))  # misses (2,2) = (1,1)+(1,1)
    with pytest.raises(ValueError):
        bad.validate_closure()


def test_subring_requires_zero():
    ring = product_ring("Z4")
    with pytest.raises(ValueError):
        Subring(ring, frozenset({(1,)}))


def test_subring_rejects_foreign_generators():
    ring = product_ring("Z4")
    with pytest.raises(ValueError):
        ring.subring_generated([(5,)])


def test_subring_member_checks():
    ring = product_ring("Z4xZ4")
    sub = ring.subring_generated([(2, 0), (1, 1)])
    with pytest.raises(ValueError):
        sub.add((1, 0), (0, 0))
    assert sub.add((2, 0), (1, 1)) == (3, 1)


def test_subring_annihilators_are_relative():
    """ann inside the subring is the parent annihilator cut down to members."""
    ring = product_ring("Z4xZ4")
    sub = ring.subring_generated([(2, 0), (1, 1)])
    for x in sub.elements():
        expected = {
            r for r in sub.elements() if ring.mul(r, x) == ring.zero
        }
        assert sub.annihilator_set(x) == expected, x


def test_subring_key_unsupported():
    ring = product_ring("Z4xZ4")
    sub = ring.subring_generated([(1, 1)])
    with pytest.raises(UnsupportedVariantError):
        sub.annihilator_key((1, 1))


def test_subring_zero_divisors_computed_internally():
    # (1,1) is a unit in the parent and stays a non-zero-divisor inside
    ring = product_ring("Z2xZ2")
    sub = ring.subring_generated([(1, 1)])
    assert sub.zero_divisor_set() == {(0, 0)}


# ---------------------------------------------------------------------------
# direct-sum decompositions of annihilators


def test_decomposition_z2xz2():
    ok, witness = product_ring("Z2xZ2").has_ann_direct_sum_decomposition()
    assert ok
    assert set(witness) == {(0, 1), (1, 0)}


def test_decomposition_z8_and_field():
    assert product_ring("Z8").has_ann_direct_sum_decomposition() == (False, None)
    assert product_ring("Z7").has_ann_direct_sum_decomposition() == (False, None)


def test_decomposition_witness_is_real(small_ring_ids):
    for rid in small_ring_ids:
        ring = product_ring(rid)
        ok, witness = ring.has_ann_direct_sum_decomposition()
        if ok:
            x, y = witness
            a = ring.annihilator_set(x)
            b = ring.annihilator_set(y)
            assert a & b == {ring.zero}
            assert len(a) * len(b) == ring.order
            sums = {ring.add(p, q) for p in a for q in b}
            assert sums == set(ring.elements())


# ---------------------------------------------------------------------------
# caps


def test_element_cap_enforced():
    ring = product_ring("Z7000")
    with pytest.raises(CapExceededError):
        ring.elements()
    with pytest.raises(CapExceededError):
        ring.zero_divisor_set()
    assert len(ring.elements(cap=None)) == 7000


def test_cap_override():
    ring = product_ring("Z12")
    with pytest.raises(CapExceededError):
        ring.elements(cap=10)
