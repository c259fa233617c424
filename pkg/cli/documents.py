"""
Structure-definition documents.

A document is JSON with a versioned "schema" field. Parsing runs in three
layers, each reporting where it failed:
  1. JSON syntax           -> line/column
  2. pydantic schema       -> dotted field path (unknown fields rejected)
  3. domain constructors   -> dotted field path plus the constructor's witness
"""

from __future__ import annotations

import json
import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Annotated, Any, Callable, Iterator, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from graded_hom.hom import GradedHomomorphism, make_hom, quotient_projection
from grading_core.errors import AlgebraError, InvalidArgument
from grading_core.group import GradingGroup, cyclic_group
from grading_core.ideals import GradedIdeal, ideal_closure
from grading_core.ring import FiniteGradedRing, make_cyclic_ring, make_quotient_poly_ring
from integer_backend.zmodule import ZIdeal, ZModuleInstance, ZSubmodule, ZWitness
from module_core.module import GradedModule, direct_sum, product_module, ring_as_module
from module_core.submodules import GradedSubmodule, quotient_module, submodule_closure

SCHEMA_VERSION = "graded-structure/1"


class StructureError(ValueError):
    """A document failed to parse; `position` says where."""

    def __init__(self, position: str, message: str, witness: Any = None) -> None:
        super().__init__(f"{position}: {message}")
        self.position = position
        self.witness = witness


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class GroupSpec(_Strict):
    kind: Literal["cyclic"] = "cyclic"
    order: int = Field(ge=1)


class CyclicRingSpec(_Strict):
    kind: Literal["cyclic"]
    n: int = Field(ge=2)


class PolyRingSpec(_Strict):
    kind: Literal["quotient_poly"]
    n: int = Field(ge=2)
    c: int = 0
    xdeg: int = 1


class IntegerRingSpec(_Strict):
    kind: Literal["z"]


RingSpec = Annotated[
    Union[CyclicRingSpec, PolyRingSpec, IntegerRingSpec], Field(discriminator="kind")
]


class RingModuleSpec(_Strict):
    kind: Literal["ring_as_module"]
    shift: int = 0


class ProductSpec(_Strict):
    kind: Literal["product"]
    factors: list[tuple[int, int]] = Field(min_length=1)


class QuotientSpec(_Strict):
    kind: Literal["quotient"]
    base: "ModuleSpec"
    by: list[list[int]]


class DirectSumSpec(_Strict):
    kind: Literal["direct_sum"]
    parts: list["ModuleSpec"] = Field(min_length=2)


class ZModuleSpec(_Strict):
    kind: Literal["z_module"]
    free: int = Field(default=0, ge=0)
    torsion: list[int] = Field(default_factory=list)
    degrees: list[int]


ModuleSpec = Annotated[
    Union[RingModuleSpec, ProductSpec, QuotientSpec, DirectSumSpec, ZModuleSpec],
    Field(discriminator="kind"),
]
QuotientSpec.model_rebuild()
DirectSumSpec.model_rebuild()


class ProjectionHomSpec(_Strict):
    kind: Literal["projection"]
    kernel: str


class TableHomSpec(_Strict):
    # endomorphism: images[i] are the coordinates of f(element i)
    kind: Literal["table"]
    images: list[list[int]]


HomSpec = Annotated[Union[ProjectionHomSpec, TableHomSpec], Field(discriminator="kind")]


class WitnessSpec(_Strict):
    r: int
    m: list[int]
    n: int = Field(ge=1)


class StructureDocument(_Strict):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    schema_version: Literal["graded-structure/1"] = Field(alias="schema")
    group: GroupSpec
    ring: RingSpec
    module: ModuleSpec
    submodules: dict[str, list[list[int]]] = Field(default_factory=dict)
    ideals: dict[str, list[list[int]]] = Field(default_factory=dict)
    homs: dict[str, HomSpec] = Field(default_factory=dict)
    witnesses: dict[str, list[WitnessSpec]] = Field(default_factory=dict)


@dataclass
class ParsedStructure:
    document: StructureDocument
    group: GradingGroup
    ring: FiniteGradedRing | None
    module: GradedModule | ZModuleInstance
    submodules: dict[str, GradedSubmodule | ZSubmodule] = field(default_factory=dict)
    ideals: dict[str, GradedIdeal | ZIdeal] = field(default_factory=dict)
    homs: dict[str, GradedHomomorphism] = field(default_factory=dict)
    witnesses: dict[str, list[ZWitness]] = field(default_factory=dict)

    @property
    def is_integer(self) -> bool:
        return self.ring is None


@contextmanager
def _at(position: str) -> Iterator[None]:
    try:
        yield
    except AlgebraError as e:
        raise StructureError(position, str(e), e.witness) from e


def _build_ring(spec: Any, group: GradingGroup) -> FiniteGradedRing | None:
    if isinstance(spec, CyclicRingSpec):
        return make_cyclic_ring(spec.n, group)
    if isinstance(spec, PolyRingSpec):
        return make_quotient_poly_ring(spec.n, spec.c, spec.xdeg, group)
    return None


def _build_module(
    spec: Any, ring: FiniteGradedRing, path: str
) -> tuple[GradedModule, Callable[[list[int]], int]]:
    """The module plus a resolver from document coordinates to elements."""
    with _at(path):
        if isinstance(spec, RingModuleSpec):
            module = ring_as_module(ring, shift=spec.shift)
            return module, module.element
        if isinstance(spec, ProductSpec):
            module = product_module(spec.factors, ring)
            return module, module.element
        if isinstance(spec, ZModuleSpec):
            raise InvalidArgument("z_module needs the ring kind 'z'")
    if isinstance(spec, DirectSumSpec):
        built = [_build_module(p, ring, f"{path}.parts.{i}")[0] for i, p in enumerate(spec.parts)]
        with _at(path):
            module = built[0]
            for part in built[1:]:
                module = direct_sum(module, part)
        return module, module.element
    base, resolve = _build_module(spec.base, ring, f"{path}.base")
    with _at(f"{path}.by"):
        kernel = submodule_closure(base, [resolve(v) for v in spec.by])
        module, proj = quotient_module(base, kernel)
    return module, lambda v: proj[resolve(v)]


def _build_z_module(spec: Any, group: GradingGroup, path: str) -> ZModuleInstance:
    with _at(path):
        if not isinstance(spec, ZModuleSpec):
            raise InvalidArgument("ring kind 'z' needs a z_module")
        return ZModuleInstance(spec.free, tuple(spec.torsion), tuple(spec.degrees), group)


def _validated(text: str) -> StructureDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureError(f"line {e.lineno} column {e.colno}", e.msg) from e
    try:
        return StructureDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        position = ".".join(str(p) for p in first["loc"]) or "document"
        raise StructureError(position, first["msg"]) from e


def parse_structure(text: str) -> ParsedStructure:
    doc = _validated(text)
    with _at("group"):
        group = cyclic_group(doc.group.order)
    with _at("ring"):
        ring = _build_ring(doc.ring, group)

    if ring is None:
        module = _build_z_module(doc.module, group, "module")
        parsed = ParsedStructure(doc, group, None, module)
        for name, gens in doc.submodules.items():
            with _at(f"submodules.{name}"):
                parsed.submodules[name] = ZSubmodule(module, tuple(tuple(v) for v in gens))
        for name, gens in doc.ideals.items():
            with _at(f"ideals.{name}"):
                values = [v[0] for v in gens if len(v) == 1]
                if len(values) != len(gens):
                    raise InvalidArgument("ideals of Z take one-coordinate generators")
                parsed.ideals[name] = ZIdeal(_gcd(values))
        if doc.homs:
            raise StructureError("homs", "homomorphisms are only supported on finite modules")
    else:
        module, resolve = _build_module(doc.module, ring, "module")
        parsed = ParsedStructure(doc, group, ring, module)
        for name, gens in doc.submodules.items():
            with _at(f"submodules.{name}"):
                parsed.submodules[name] = submodule_closure(module, [resolve(v) for v in gens])
        for name, gens in doc.ideals.items():
            with _at(f"ideals.{name}"):
                parsed.ideals[name] = ideal_closure(ring, [ring.element(v) for v in gens])
        for name, hom in doc.homs.items():
            with _at(f"homs.{name}"):
                parsed.homs[name] = _build_hom(name, hom, module, resolve, parsed.submodules)

    for name, items in doc.witnesses.items():
        if name not in doc.submodules:
            raise StructureError(f"witnesses.{name}", "no submodule with this name")
        parsed.witnesses[name] = [ZWitness(w.r, tuple(w.m), w.n) for w in items]
    return parsed


def _gcd(values: list[int]) -> int:
    return math.gcd(*values) if values else 0


def _build_hom(
    name: str,
    spec: Any,
    module: GradedModule,
    resolve: Callable[[list[int]], int],
    submodules: dict[str, GradedSubmodule | ZSubmodule],
) -> GradedHomomorphism:
    if isinstance(spec, ProjectionHomSpec):
        kernel = submodules.get(spec.kernel)
        if kernel is None:
            raise InvalidArgument(f"no submodule named {spec.kernel!r}")
        return quotient_projection(module, kernel)[1]
    if len(spec.images) != module.order:
        raise InvalidArgument(f"table needs {module.order} images, got {len(spec.images)}")
    return make_hom(module, module, [resolve(v) for v in spec.images], name=name)


def serialize_structure(doc: StructureDocument) -> str:
    payload = doc.model_dump(by_alias=True, mode="json")
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
