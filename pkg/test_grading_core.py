"""
Regression guard for grading groups, finite graded rings and graded ideals.

Covers constructor rejection (with witnesses), h(R), ideal lattice
enumeration and every ideal predicate on small rings where the answers are
known by hand, plus the exponent-bound check: verdicts under |R| and 2|R|
must agree.

Usage:
    python3 test_grading_core.py      (or: pytest test_grading_core.py)
"""

from grading_core.errors import AxiomViolation, GradingInconsistent, InvalidArgument, NotGraded
from grading_core.group import GradingGroup, cyclic_group
from grading_core.ideals import (
    GradedIdeal,
    PowerWitness,
    enumerate_graded_ideals,
    graded_radical,
    ideal_closure,
    ideal_intersection,
    ideal_power,
    ideal_product,
    is_graded_maximal_ideal,
    is_graded_primary_ideal,
    is_graded_prime_ideal,
    is_graded_semiprime_ideal,
    power_chain,
    prime_ideal_witness,
    semiprime_ideal_witness,
    zero_ideal,
)
from grading_core.ring import homogeneous_elements, make_cyclic_ring, make_quotient_poly_ring

Z2 = cyclic_group(2)


def _ideal(ring, *members):
    return GradedIdeal(ring, frozenset(members))


def test_cyclic_group():
    g = cyclic_group(3)
    assert g.order == 3
    assert g.op(2, 2) == 1
    assert g.inverses == (0, 2, 1)
    try:
        cyclic_group(0)
    except InvalidArgument:
        pass
    else:
        raise AssertionError("order 0 group should be rejected")


def test_group_without_identity_is_rejected():
    try:
        GradingGroup(table=((1, 0), (0, 1)))
    except AxiomViolation as e:
        assert e.witness == (0,)
    else:
        raise AssertionError("table without identity at 0 should be rejected")


def test_cyclic_ring_basics():
    z8 = make_cyclic_ring(8, Z2)
    assert z8.order == 8 and z8.name == "Z8"
    assert z8.homogeneous_values == tuple(range(8))
    assert z8.power(2, 3) == 0
    assert z8.power(3, 2) == 1
    assert z8.power(3, 0) == z8.one
    try:
        make_cyclic_ring(1, Z2)
    except InvalidArgument:
        pass
    else:
        raise AssertionError("Z1 should be rejected")


def test_quotient_poly_ring_grading():
    ring = make_quotient_poly_ring(2, 0, 1, Z2)
    assert ring.name == "Z2[x]/(x^2)"
    assert ring.labels == ("0", "1", "x", "1+x")
    assert ring.homogeneous_values == (0, 1, 2)
    assert ring.degrees[3] is None
    assert [h.degree for h in homogeneous_elements(ring)] == [0, 0, 1]
    assert ring.element((1, 1)) == 3


def test_poly_ring_needs_involutive_degree():
    try:
        make_quotient_poly_ring(2, 0, 1, cyclic_group(3))
    except GradingInconsistent:
        pass
    else:
        raise AssertionError("x of degree 1 in Z3 cannot square into R_0")


def test_ideal_enumeration_z8():
    z8 = make_cyclic_ring(8, Z2)
    labels = [i.label for i in enumerate_graded_ideals(z8)]
    assert labels == ["{0}", "{0, 4}", "{0, 2, 4, 6}", "{0, 1, 2, 3, 4, 5, 6, 7}"]


def test_ideal_enumeration_poly():
    ring = make_quotient_poly_ring(2, 0, 1, Z2)
    labels = [i.label for i in enumerate_graded_ideals(ring)]
    assert labels == ["{0}", "{0, x}", "{0, 1, x, 1+x}"]


def test_non_graded_ideal_has_witness():
    # In Z2[x]/(x^2-1), (1+x)^2 = 0 and (1+x) = {0, 1+x} misses both components.
    ring = make_quotient_poly_ring(2, 1, 1, Z2)
    try:
        ideal_closure(ring, [ring.element((1, 1))])
    except NotGraded as e:
        assert e.witness == (3, 1), e.witness
    else:
        raise AssertionError("(1+x) is not graded")


def test_semiprime_prime_primary_z8():
    z8 = make_cyclic_ring(8, Z2)
    four, two = _ideal(z8, 0, 4), _ideal(z8, 0, 2, 4, 6)
    assert semiprime_ideal_witness(four) == PowerWitness(2, 1, 2)
    assert not is_graded_semiprime_ideal(four)
    assert is_graded_semiprime_ideal(two)
    assert is_graded_prime_ideal(two)
    assert prime_ideal_witness(four) == (2, 2)
    assert is_graded_primary_ideal(four)
    assert not is_graded_semiprime_ideal(_ideal(z8, *range(8)))


def test_zero_ideal_of_z6_is_semiprime_not_prime():
    z6 = make_cyclic_ring(6, Z2)
    zero = zero_ideal(z6)
    assert is_graded_semiprime_ideal(zero)
    assert not is_graded_prime_ideal(zero)
    assert not is_graded_primary_ideal(zero)


def test_maximal_and_radical():
    z8 = make_cyclic_ring(8, Z2)
    assert is_graded_maximal_ideal(_ideal(z8, 0, 2, 4, 6))
    assert not is_graded_maximal_ideal(_ideal(z8, 0, 4))
    assert graded_radical(_ideal(z8, 0, 4)).elements == {0, 2, 4, 6}
    assert graded_radical(zero_ideal(z8)).elements == {0, 2, 4, 6}
    z6 = make_cyclic_ring(6, Z2)
    assert graded_radical(zero_ideal(z6)).elements == {0}


def test_radical_is_idempotent_and_contains_the_ideal():
    rings = [make_cyclic_ring(n, Z2) for n in (4, 8, 12)]
    rings.append(make_quotient_poly_ring(2, 0, 1, Z2))
    for ring in rings:
        for ideal in enumerate_graded_ideals(ring):
            root = graded_radical(ideal)
            assert ideal.elements <= root.elements
            assert graded_radical(root) == root, (ring.name, ideal.label)


def test_products_powers_and_chains():
    z8 = make_cyclic_ring(8, Z2)
    two = _ideal(z8, 0, 2, 4, 6)
    assert ideal_power(two, 2).elements == {0, 4}
    assert [i.label for i in power_chain(two)] == ["{0, 2, 4, 6}", "{0, 4}", "{0}"]
    try:
        ideal_power(two, 0)
    except InvalidArgument:
        pass
    else:
        raise AssertionError("I^0 is not offered")
    z6 = make_cyclic_ring(6, Z2)
    a, b = _ideal(z6, 0, 2, 4), _ideal(z6, 0, 3)
    assert ideal_intersection(a, b).elements == {0}
    assert ideal_product(a, b).elements == {0}


def _sample_rings():
    rings = [make_cyclic_ring(n, Z2) for n in (2, 3, 4, 6, 8, 9, 12)]
    rings += [make_quotient_poly_ring(n, c, 1, Z2) for n, c in ((2, 0), (2, 1), (3, 1), (4, 0))]
    return rings


def test_prime_implies_semiprime_and_primary():
    for ring in _sample_rings():
        for ideal in enumerate_graded_ideals(ring):
            if is_graded_prime_ideal(ideal):
                assert is_graded_semiprime_ideal(ideal), (ring.name, ideal.label)
                assert is_graded_primary_ideal(ideal), (ring.name, ideal.label)


def test_power_chain_descends_and_stabilises():
    for ring in _sample_rings():
        for ideal in enumerate_graded_ideals(ring):
            chain = power_chain(ideal)
            for bigger, smaller in zip(chain, chain[1:]):
                assert smaller.elements < bigger.elements, (ring.name, ideal.label)
            # every strict drop at least halves the subgroup
            assert len(chain) <= ring.order.bit_length(), (ring.name, ideal.label)
            assert ideal_product(chain[-1], ideal) == chain[-1]


def test_exponent_bound_does_not_change_verdicts():
    for ring in _sample_rings():
        for ideal in enumerate_graded_ideals(ring):
            big = 2 * ring.order
            assert is_graded_semiprime_ideal(ideal) == is_graded_semiprime_ideal(ideal, big)
            assert is_graded_primary_ideal(ideal) == is_graded_primary_ideal(ideal, big)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
    print(f"OK: {len(tests)} grading_core checks passed")


if __name__ == "__main__":
    main()
