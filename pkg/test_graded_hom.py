"""
Regression guard for graded homomorphisms: each broken law raises its own
error with the offending elements, and the enumeration of Hom(M, M') finds
exactly the maps fixed by homogeneous generators.

Usage:
    python3 test_graded_hom.py      (or: pytest test_graded_hom.py)
"""

from graded_hom.hom import (
    NotAdditive,
    NotGradedMap,
    NotLinear,
    graded_homomorphisms,
    homogeneous_generators,
    identity_hom,
    image,
    inclusion,
    is_epimorphism,
    kernel,
    make_hom,
    preimage,
    quotient_projection,
    zero_hom,
)
from grading_core.errors import AlgebraError, InvalidArgument, NotGraded
from grading_core.group import cyclic_group
from grading_core.ring import make_cyclic_ring, make_quotient_poly_ring
from module_core.maps import map_violation
from module_core.module import product_module, ring_as_module
from module_core.submodules import (
    GradedSubmodule,
    enumerate_graded_submodules,
    submodule_closure,
    submodule_sum,
)

Z2 = cyclic_group(2)


def _z8():
    return ring_as_module(make_cyclic_ring(8, Z2))


def _split():
    return product_module([(2, 0), (2, 1)], make_cyclic_ring(2, Z2))


def _expect(error, call):
    try:
        call()
    except error as e:
        return e
    raise AssertionError(f"expected {error.__name__}")


def test_not_additive():
    m = _z8()
    e = _expect(NotAdditive, lambda: make_hom(m, m, (0, 2, 0, 0, 0, 0, 0, 0)))
    assert e.witness == (1, 1)
    assert isinstance(e, AlgebraError)


def test_not_linear():
    m = ring_as_module(make_quotient_poly_ring(2, 0, 1, Z2))
    # swaps 1 and x: additive, but x*f(1) = x^2 = 0 while f(x*1) = 1
    e = _expect(NotLinear, lambda: make_hom(m, m, (0, 2, 1, 3)))
    assert e.witness == (2, 1)


def test_not_graded():
    ring = make_quotient_poly_ring(2, 0, 1, Z2)
    plain, shifted = ring_as_module(ring), ring_as_module(ring, shift=1)
    e = _expect(NotGradedMap, lambda: make_hom(plain, shifted, range(4)))
    assert e.witness == (1, 0)


def test_swapping_components_is_not_graded():
    split = _split()
    # (a,b) -> (b,a) is Z2-linear but moves degree 0 into degree 1
    e = _expect(NotGradedMap, lambda: make_hom(split, split, (0, 2, 1, 3)))
    assert e.witness == (2, 0)


def test_ring_mismatch_and_shape():
    z4 = ring_as_module(make_cyclic_ring(4, Z2))
    _expect(InvalidArgument, lambda: make_hom(_z8(), z4, [0] * 8))
    m = _z8()
    _expect(InvalidArgument, lambda: make_hom(m, m, [0] * 7))


def test_projection_kernel_image_preimage():
    m = _z8()
    four = submodule_closure(m, [4])
    q, proj = quotient_projection(m, four)
    assert q.order == 4
    assert kernel(proj) == four
    assert is_epimorphism(proj)
    evens = submodule_closure(m, [2])
    assert image(proj, evens).elements == {0, 2}
    assert preimage(proj, GradedSubmodule(q, frozenset({0, 2}))) == evens
    assert proj(5) == 1


def test_inclusion_and_trivial_maps():
    m = _z8()
    evens = submodule_closure(m, [2])
    incl = inclusion(evens)
    assert kernel(incl).is_zero
    assert image(incl) == evens
    assert not is_epimorphism(incl)
    assert is_epimorphism(identity_hom(m))
    assert identity_hom(m).name == "id"
    assert image(zero_hom(m, m)).is_zero


def test_preimage_of_image_adds_the_kernel():
    m = _z8()
    for f in graded_homomorphisms(m):
        for sub in enumerate_graded_submodules(m):
            assert preimage(f, image(f, sub)) == submodule_sum(sub, kernel(f)), (f.name, sub.label)



def test_image_and_preimage_reject_bad_arguments():
    split = _split()
    identity = identity_hom(split)
    # the diagonal {(0,0), (1,1)} is a submodule but not a graded one
    diagonal = GradedSubmodule(split, frozenset({0, 3}))
    e = _expect(NotGraded, lambda: image(identity, diagonal))
    assert e.witness == (3, 2)
    _expect(NotGraded, lambda: preimage(identity, diagonal))
    m = _z8()
    f = identity_hom(m)
    _expect(InvalidArgument, lambda: image(f, GradedSubmodule(m, frozenset({0, 1}))))
    _expect(InvalidArgument, lambda: preimage(f, submodule_closure(_z8(), [2])))


def test_every_quotient_projection_is_a_graded_epimorphism():
    z4 = make_cyclic_ring(4, Z2)
    poly = make_quotient_poly_ring(2, 0, 1, Z2)
    modules = [_z8(), _split(), product_module([(4, 0), (2, 1)], z4), ring_as_module(poly, shift=1)]
    for m in modules:
        for k in enumerate_graded_submodules(m):
            q, proj = quotient_projection(m, k)
            assert map_violation(m, q, proj.table) is None, (m.name, k.label)
            assert kernel(proj) == k
            assert is_epimorphism(proj)


def test_homogeneous_generators():
    assert homogeneous_generators(_z8()) == (1,)
    assert homogeneous_generators(_split()) == (1, 2)


def test_endomorphisms_of_z8():
    homs = list(graded_homomorphisms(_z8()))
    assert len(homs) == 8
    assert sum(1 for f in homs if is_epimorphism(f)) == 4
    assert [f.table[1] for f in homs] == list(range(8))


def test_endomorphisms_of_split_module():
    m = _split()
    homs = list(graded_homomorphisms(m))
    assert len(homs) == 4
    for f in homs:
        # every hom must survive the checked constructor
        make_hom(m, m, f.table)


def test_homs_between_different_modules():
    z2 = make_cyclic_ring(2, Z2)
    source = ring_as_module(z2)
    target = product_module([(2, 1)], z2)
    homs = list(graded_homomorphisms(source, target))
    # degree-0 generator must land in the degree-0 part of target, which is {0}
    assert len(homs) == 1
    assert image(homs[0]).is_zero


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
    print(f"OK: {len(tests)} graded_hom checks passed")


if __name__ == "__main__":
    main()
