"""
Regression guard for the Z backend: lattice arithmetic, colon ideals, the
ideal predicates on cZ, witness checking and the exact torsion decision.

The two reference instances are 4Z x 0 in Z x Z (quasi-semiprime because its
colon is 0, yet not semiprime) and <4> in Z8 (colon 4Z, so neither).

Usage:
    python3 test_integer_backend.py      (or: pytest test_integer_backend.py)
"""

from grading_core.errors import InvalidArgument, NotGraded, Unsupported
from grading_core.group import cyclic_group
from integer_backend.lattice import IntegerLattice
from integer_backend.zmodule import (
    ZIdeal,
    ZModuleInstance,
    ZSubmodule,
    ZWitness,
    finite_counterpart,
    z_colon_ideal,
    z_is_maximal_ideal,
    z_is_primary_ideal,
    z_is_prime_ideal,
    z_is_quasi_semiprime,
    z_is_semiprime_ideal,
    z_membership,
    z_radical,
    z_search_witness,
    z_semiprime_ideal_oracle,
    z_semiprime_submodule_torsion,
    z_witness_not_semiprime,
)
from submodule_predicates.predicates import is_graded_semiprime_submodule

Z2 = cyclic_group(2)


def _zz():
    module = ZModuleInstance(2, (), (0, 1), Z2)
    return module, ZSubmodule(module, ((4, 0),))


def _z8(*gens):
    module = ZModuleInstance(0, (8,), (0,), Z2)
    return module, ZSubmodule(module, tuple((g,) for g in gens))


def _expect(error, call):
    try:
        call()
    except error as e:
        return e
    raise AssertionError(f"expected {error.__name__}")


def test_lattice_echelon_and_axes():
    lattice = IntegerLattice(2, [(2, 3), (4, 5)])
    assert (2, 0) in lattice
    assert (0, 7) in lattice
    assert (1, 0) not in lattice
    assert lattice.axis_generator(0) == 2
    assert lattice.axis_generator(1) == 1
    assert IntegerLattice(2, [(4, 0)]).axis_generator(1) == 0
    _expect(InvalidArgument, lambda: IntegerLattice(0))
    _expect(InvalidArgument, lambda: (1, 2, 3) in lattice)


def test_lattice_membership_matches_closed_forms():
    # <(2,3), (4,5)> has index 2 and contains (2,0), (0,1): the x-even vectors
    full = IntegerLattice(2, [(2, 3), (4, 5)])
    # <(2,4,0), (3,6,0)> collapses to the line through (1,2,0)
    line = IntegerLattice(3, [(2, 4, 0), (3, 6, 0)])
    for x in range(-5, 6):
        for y in range(-5, 6):
            assert ((x, y) in full) == (x % 2 == 0), (x, y)
            for z in (-1, 0, 2):
                assert ((x, y, z) in line) == (z == 0 and y == 2 * x), (x, y, z)
    assert line.axis_generator(0) == 0 and line.axis_generator(2) == 0
    empty = IntegerLattice(2, [(0, 0)])
    assert (0, 0) in empty and (1, 0) not in empty
    assert empty.axis_generator(0) == 0


def test_module_instance_validation():
    module, _ = _zz()
    assert module.name == "Z(0)+Z(1) over Z"
    assert module.degree_of((3, 0)) == 0
    assert module.degree_of((0, -2)) == 1
    assert module.degree_of((1, 1)) is None
    _expect(InvalidArgument, lambda: ZModuleInstance(1, (), (5,), Z2))
    _expect(InvalidArgument, lambda: ZModuleInstance(0, (1,), (0,), Z2))
    _expect(InvalidArgument, lambda: ZModuleInstance(0, (), (), Z2))


def test_submodule_must_be_graded():
    module, _ = _zz()
    e = _expect(NotGraded, lambda: ZSubmodule(module, ((1, 1),)))
    assert e.witness == ((1, 1), (1, 0))
    # the diagonal together with an axis vector is graded
    ZSubmodule(module, ((1, 1), (1, 0)))


def test_membership():
    module, sub = _zz()
    assert z_membership(sub, (8, 0))
    assert z_membership(sub, (-4, 0))
    assert not z_membership(sub, (2, 0))
    assert not z_membership(sub, (0, 4))
    _expect(InvalidArgument, lambda: z_membership(sub, (4,)))
    _, torsion = _z8(4)
    assert z_membership(torsion, (12,))
    assert not z_membership(torsion, (2,))


def test_colon_ideals():
    assert z_colon_ideal(_zz()[1]) == ZIdeal(0)
    assert z_colon_ideal(_z8(4)[1]).label == "4Z"
    assert z_colon_ideal(_z8(6)[1]).label == "2Z"
    assert not z_colon_ideal(_z8(1)[1]).is_proper
    module = ZModuleInstance(0, (2, 4), (0, 1), Z2)
    assert z_colon_ideal(ZSubmodule(module, ((0, 2),))).c == 2
    other = ZModuleInstance(0, (8,), (1,), Z2)
    _expect(InvalidArgument, lambda: z_colon_ideal(_z8(4)[1], other))


def test_semiprime_ideals_match_residue_oracle():
    for c in range(2, 61):
        assert z_is_semiprime_ideal(ZIdeal(c)) == z_semiprime_ideal_oracle(ZIdeal(c)), c
    assert z_is_semiprime_ideal(ZIdeal(0))
    assert not z_is_semiprime_ideal(ZIdeal(1))
    assert z_is_semiprime_ideal(ZIdeal(-30))
    _expect(InvalidArgument, lambda: z_semiprime_ideal_oracle(ZIdeal(1)))


def test_other_ideal_predicates():
    assert z_is_prime_ideal(ZIdeal(0)) and z_is_prime_ideal(ZIdeal(7))
    assert not z_is_prime_ideal(ZIdeal(4)) and not z_is_prime_ideal(ZIdeal(1))
    assert z_is_primary_ideal(ZIdeal(8)) and not z_is_primary_ideal(ZIdeal(6))
    assert not z_is_primary_ideal(ZIdeal(1))
    assert z_is_maximal_ideal(ZIdeal(5)) and not z_is_maximal_ideal(ZIdeal(0))
    assert z_radical(ZIdeal(12)) == ZIdeal(6)
    assert z_radical(ZIdeal(0)) == ZIdeal(0)


def test_quasi_semiprime_but_not_semiprime():
    module, sub = _zz()
    assert z_is_quasi_semiprime(sub)
    assert z_witness_not_semiprime(sub, module, 2, (3, 0), 2)
    assert not z_witness_not_semiprime(sub, module, 1, (3, 0), 2)
    _expect(InvalidArgument, lambda: z_witness_not_semiprime(sub, module, 2, (1, 1), 2))
    _expect(InvalidArgument, lambda: z_witness_not_semiprime(sub, module, 2, (3, 0), 0))
    assert z_search_witness(sub) == ZWitness(2, (1, 0), 2)


def test_search_finds_nothing_for_semiprime_submodule():
    module = ZModuleInstance(1, (), (0,), Z2)
    assert z_search_witness(ZSubmodule(module, ((6,),)), bound=6) is None


def test_torsion_decision():
    module, sub = _z8(4)
    assert not z_is_quasi_semiprime(sub)
    assert z_semiprime_submodule_torsion(sub) == (False, ZWitness(2, (1,), 2))
    assert z_semiprime_submodule_torsion(_z8(2)[1]) == (True, None)
    assert z_semiprime_submodule_torsion(_z8(1)[1]) == (False, None)
    _expect(Unsupported, lambda: z_semiprime_submodule_torsion(_zz()[1]))


def test_torsion_decision_matches_finite_engine():
    for n in (4, 6, 8, 9, 12):
        module = ZModuleInstance(0, (n,), (0,), Z2)
        for d in range(1, n + 1):
            if n % d:
                continue
            sub = ZSubmodule(module, ((d,),))
            finite, closure = finite_counterpart(sub, module, n)
            expected = is_graded_semiprime_submodule(closure, finite)
            assert z_semiprime_submodule_torsion(sub)[0] == expected, (n, d)


def test_finite_counterpart():
    module, sub = _z8(4)
    finite, closure = finite_counterpart(sub, module, 8)
    assert finite.order == 8
    assert closure.label == "{0, 4}"
    _expect(InvalidArgument, lambda: finite_counterpart(sub, module, 12))
    _expect(Unsupported, lambda: finite_counterpart(_zz()[1], None, 8))


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
    print(f"OK: {len(tests)} integer_backend checks passed")


if __name__ == "__main__":
    main()
