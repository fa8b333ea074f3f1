"""Request and response models for the HTTP service.

All rational scalars travel as exact ``p/q`` strings; integers stay
integers.  Each model knows how to build the corresponding engine
value, funnelling malformed numbers into the engine's own error
hierarchy so the error report shape is uniform.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..errors import ValidationError
from ..groups import GroupPresentation, make_group
from ..verma import HighestWeight, Truncation


def _parse_rational(raw: str, where: str) -> Fraction:
    try:
        return Fraction(str(raw))
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"{where}: expected a rational p/q string, got {raw!r}")


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class InstanceSpec(StrictModel):
    g: str = "1"
    primes: list[int] = Field(default_factory=list)
    m: int = 1
    order: str = "natural"

    def to_group(self) -> GroupPresentation:
        if self.order not in ("natural", "reversed"):
            raise ValidationError(
                f"order must be natural or reversed, got {self.order!r}"
            )
        return make_group(
            g=_parse_rational(self.g, "instance.g"),
            primes=self.primes,
            m=self.m,
            direction=self.order,
        )


def instance_from_group(gp: GroupPresentation) -> InstanceSpec:
    return InstanceSpec(
        g=str(gp.g),
        primes=sorted(gp.primes),
        m=gp.m,
        order=gp.direction.value,
    )


class ModuleSpec(StrictModel):
    c: str = "1"
    h: str = "0"

    def to_hw(self) -> HighestWeight:
        return HighestWeight(
            _parse_rational(self.c, "module.c"), _parse_rational(self.h, "module.h")
        )


def module_from_hw(hw: HighestWeight) -> ModuleSpec:
    return ModuleSpec(c=str(hw.c), h=str(hw.h))


class TruncationSpec(StrictModel):
    max_depth: str = "3"
    lattice: dict[int, int] = Field(default_factory=dict)

    def to_trunc(self) -> Truncation:
        return Truncation(
            _parse_rational(self.max_depth, "trunc.max_depth"), dict(self.lattice)
        )


def trunc_from_engine(trunc: Optional[Truncation]) -> Optional["TruncationSpec"]:
    if trunc is None:
        return None
    return TruncationSpec(max_depth=str(trunc.max_depth), lattice=dict(trunc.caps))


class BracketRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    left: str
    right: str


class ActRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    module: ModuleSpec = Field(default_factory=ModuleSpec)
    expr: str


class WeightsRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    module: ModuleSpec = Field(default_factory=ModuleSpec)
    depth: str
    trunc: Optional[TruncationSpec] = None


class SingularRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    module: ModuleSpec = Field(default_factory=ModuleSpec)
    max_depth: str
    trunc: Optional[TruncationSpec] = None


class ReduceRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    module: ModuleSpec = Field(default_factory=ModuleSpec)
    vector: str


class IsoRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    other: InstanceSpec
    window: str = "3"


class AutApplyRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    automorphism: str
    element: str


class AutResidualRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    automorphism: str
    pairs: Optional[list[tuple[str, str]]] = None
    window: str = "3"
    samples: int = 50
    seed: int = 0


class AutComposeRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    automorphism: str


class CheckRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    module: ModuleSpec = Field(default_factory=ModuleSpec)
    window: Optional[str] = None
    samples: Optional[int] = None
    seed: int = 0
    trunc: Optional[TruncationSpec] = None


class PartitionsRequest(StrictModel):
    instance: InstanceSpec = Field(default_factory=InstanceSpec)
    depth: str
    trunc: Optional[TruncationSpec] = None


class ReportResponse(StrictModel):
    command: str
    instance: dict
    result: Any
    status: str
