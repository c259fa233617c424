"""
Regression guard for graded modules, submodules and the derived constructions
(colon ideals, annihilators, IM, quotients, submodules as modules).

The split-degree Z2 x Z2 module is the standard trap: its diagonal is a
submodule but not a graded one, so it must be both rejected by closure and
absent from enumeration.

Usage:
    python3 test_module_core.py      (or: pytest test_module_core.py)
"""

from grading_core.errors import AxiomViolation, GradingInconsistent, InvalidArgument, NotGraded
from grading_core.group import cyclic_group
from grading_core.ideals import (
    CACHE_SIZE,
    GradedIdeal,
    enumerate_graded_ideals,
    power_chain,
    semiprime_ideal_witness,
)
from grading_core.ring import make_cyclic_ring, make_quotient_poly_ring
from module_core.maps import map_violation
from module_core.module import GradedModule, direct_sum, product_module, ring_as_module
from module_core.submodules import (
    GradedSubmodule,
    annihilator,
    colon_ideal,
    enumerate_graded_submodules,
    ideal_times_module,
    intersection,
    quotient_module,
    submodule_as_module,
    submodule_closure,
    submodule_sum,
    whole_module,
    zero_submodule,
)

Z2 = cyclic_group(2)


def _z8():
    return ring_as_module(make_cyclic_ring(8, Z2))


def _split():
    return product_module([(2, 0), (2, 1)], make_cyclic_ring(2, Z2))


def test_ring_as_module_z8():
    m = _z8()
    assert m.order == 8 and m.name == "Z8"
    assert [s.label for s in enumerate_graded_submodules(m)] == [
        "{0}",
        "{0, 4}",
        "{0, 2, 4, 6}",
        "{0, 1, 2, 3, 4, 5, 6, 7}",
    ]


def test_split_module_has_four_graded_submodules():
    m = _split()
    assert m.name == "Z2(0)+Z2(1) over Z2"
    assert m.labels == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
    assert not m.is_homogeneous(m.element((1, 1)))
    subs = enumerate_graded_submodules(m)
    assert len(subs) == 4
    assert m.element((1, 1)) not in {x for s in subs if len(s) == 2 for x in s.elements}


def test_diagonal_is_not_graded():
    m = _split()
    try:
        submodule_closure(m, [m.element((1, 1))])
    except NotGraded as e:
        assert e.witness == (3, 2), e.witness
    else:
        raise AssertionError("the diagonal is not a graded submodule")


def test_incompatible_factor_is_rejected():
    try:
        product_module([(3, 0)], make_cyclic_ring(2, Z2))
    except AxiomViolation:
        pass
    else:
        raise AssertionError("Z3 is not a Z2-module")
    try:
        product_module([(2, 0)], make_quotient_poly_ring(2, 0, 1, Z2))
    except InvalidArgument:
        pass
    else:
        raise AssertionError("product modules need a cyclic ring")


def test_components_must_form_a_direct_sum():
    ring = make_quotient_poly_ring(2, 0, 1, Z2)
    constants = ring.components[0]
    try:
        GradedModule(
            name="bad",
            ring=ring,
            add=ring.add,
            action=ring.mul,
            zero=ring.zero,
            components=(constants, constants),
            labels=ring.labels,
            coords=ring.coords,
        )
    except GradingInconsistent:
        pass
    else:
        raise AssertionError("R_0 + R_0 is not a direct sum decomposition")


def test_shifted_ring_module():
    ring = make_quotient_poly_ring(2, 0, 1, Z2)
    shifted = ring_as_module(ring, shift=1)
    assert shifted.name == "Z2[x]/(x^2)(1)"
    assert shifted.components[0] == ring.components[1]
    assert shifted.components[1] == ring.components[0]


def test_colon_annihilator_and_im():
    m = _z8()
    four = submodule_closure(m, [4])
    assert colon_ideal(four, m).elements == {0, 4}
    assert annihilator(four).elements == {0, 2, 4, 6}
    two = GradedIdeal(m.ring, frozenset({0, 2, 4, 6}))
    assert ideal_times_module(two, m).elements == {0, 2, 4, 6}
    assert colon_ideal(whole_module(m)).elements == set(range(8))

    split = _split()
    first = submodule_closure(split, [split.element((0, 1))])
    assert colon_ideal(first, split).elements == {0}



def _sample_modules():
    z4 = make_cyclic_ring(4, Z2)
    poly = make_quotient_poly_ring(2, 0, 1, Z2)
    return [
        _z8(),
        _split(),
        ring_as_module(make_cyclic_ring(12, Z2)),
        product_module([(4, 0), (2, 1)], z4),
        ring_as_module(poly),
        ring_as_module(poly, shift=1),
    ]


def test_colon_is_monotone_and_proper():
    for m in _sample_modules():
        subs = enumerate_graded_submodules(m)
        colons = {s.elements: colon_ideal(s, m) for s in subs}
        for n in subs:
            if n.is_proper:
                assert colons[n.elements].is_proper, (m.name, n.label)
            for k in subs:
                if n.issubset(k):
                    where = (m.name, n.label, k.label)
                    assert colons[n.elements].issubset(colons[k.elements]), where


def test_annihilator_of_two_z6():
    z6 = ring_as_module(make_cyclic_ring(6, Z2))
    assert annihilator(submodule_closure(z6, [2])).elements == {0, 3}
    assert annihilator(whole_module(z6)).elements == {0}
    assert annihilator(zero_submodule(z6)).elements == set(range(6))



def test_memo_caches_stay_bounded():
    cached = [
        enumerate_graded_ideals,
        power_chain,
        semiprime_ideal_witness,
        enumerate_graded_submodules,
        colon_ideal,
        annihilator,
    ]
    for _ in range(CACHE_SIZE + 8):
        m = ring_as_module(make_cyclic_ring(2, Z2))
        enumerate_graded_ideals(m.ring)
        enumerate_graded_submodules(m)
    for fn in cached:
        info = fn.cache_info()
        assert info.maxsize == CACHE_SIZE, fn.__name__
        assert info.currsize <= CACHE_SIZE, fn.__name__


def test_colon_rejects_foreign_module():
    try:
        colon_ideal(zero_submodule(_z8()), _z8())
    except InvalidArgument:
        pass
    else:
        raise AssertionError("submodule of another module object")


def test_intersection_and_sum():
    m = _split()
    a = submodule_closure(m, [m.element((1, 0))])
    b = submodule_closure(m, [m.element((0, 1))])
    assert intersection(a, b).is_zero
    assert submodule_sum(a, b) == whole_module(m)


def test_quotient_module():
    m = _z8()
    q, proj = quotient_module(m, submodule_closure(m, [4]))
    assert q.order == 4
    assert q.name == "Z8 / {0, 4}"
    assert q.labels == ("[0]", "[1]", "[2]", "[3]")
    assert proj == (0, 1, 2, 3, 0, 1, 2, 3)
    assert map_violation(m, q, proj) is None


def test_split_quotient_keeps_grading():
    m = _split()
    q, proj = quotient_module(m, submodule_closure(m, [m.element((0, 1))]))
    assert q.order == 2
    assert q.components[0] == frozenset({0, 1})
    assert q.components[1] == frozenset({0})


def test_submodule_as_module():
    m = _z8()
    sub = submodule_closure(m, [2])
    restricted, members = submodule_as_module(sub)
    assert restricted.order == 4
    assert members == (0, 2, 4, 6)
    assert map_violation(restricted, m, members) is None


def test_direct_sum():
    z2 = make_cyclic_ring(2, Z2)
    m = direct_sum(ring_as_module(z2), product_module([(2, 1)], z2))
    assert m.order == 4
    assert len(enumerate_graded_submodules(m)) == 4


def test_map_violation_reports_first_broken_law():
    m = _z8()
    assert map_violation(m, m, (0, 2, 0, 0, 0, 0, 0, 0)) == ("additive", (1, 1))
    assert map_violation(m, m, (0,) * 7).law == "shape"


def test_submodule_equality_ignores_generators():
    m = _z8()
    assert submodule_closure(m, [2]) == GradedSubmodule(m, frozenset({0, 2, 4, 6}))
    assert submodule_closure(m, [2]) == submodule_closure(m, [6])


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
    print(f"OK: {len(tests)} module_core checks passed")


if __name__ == "__main__":
    main()
