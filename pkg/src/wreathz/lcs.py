"""Lower central series of G.

G_i is the set of base-group elements whose coordinates all lie in the
(i-1)-th power of the augmentation ideal.  G_i / G_{i+1} is free abelian on
the basic commutators [b_k, a_j1, ..., a_j(i-1)] with j1 <= ... <= j(i-1);
coordinates are read off the lowest homogeneous part in y_i = a_i - 1.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import BadParameter, NotInLevel
from .laurent import homogeneous_y_part, in_delta_power
from .wreath import GroupContext, WreathElement, comm_left

DEFAULT_LEVEL_CAP = 8


@dataclass(frozen=True)
class LcsCoordinates:
    level: int
    coeffs: dict = field(default_factory=dict)  # (k, (j1..)) -> int, nonzero only

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LcsCoordinates") -> "LcsCoordinates":
        if self.level != other.level:
            raise ValueError("levels differ")
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            out[key] = out.get(key, 0) + v
        return LcsCoordinates(self.level, {k: v for k, v in out.items() if v})


def _check_level(i: int):
    if i < 2:
        raise BadParameter("lower central levels start at i = 2")


def in_lcs(g: WreathElement, i: int) -> bool:
    _check_level(i)
    return g.in_base() and all(in_delta_power(p, i - 1) for p in g.bottom)


def lcs_coords(g: WreathElement, i: int, level_cap: int = DEFAULT_LEVEL_CAP) -> LcsCoordinates:
    _check_level(i)
    if i > level_cap:
        raise BadParameter(f"level {i} exceeds the cap {level_cap}")
    if not in_lcs(g, i):
        raise NotInLevel(f"{g} is not in G_{i}")
    coeffs = {}
    for k, p in enumerate(g.bottom, start=1):
        for f, v in homogeneous_y_part(p, i - 1).items():
            label = tuple(j for j, x in enumerate(f, start=1) for _ in range(x))
            coeffs[(k, label)] = v
    return LcsCoordinates(i, coeffs)


def lcs_rank(m: int, n: int, i: int) -> int:
    _check_level(i)
    return n * math.comb(m + i - 2, i - 1)


def basic_commutator_labels(m: int, n: int, i: int) -> list:
    """All labels (k, (j1 <= ... <= j(i-1))) of basic commutators at level i."""
    _check_level(i)
    return [(k, js) for k in range(1, n + 1)
            for js in itertools.combinations_with_replacement(range(1, m + 1), i - 1)]


def basic_commutator(ctx: GroupContext, k: int, js) -> WreathElement:
    """[b_k, a_j1, ..., a_j(i-1)] built by iterated group commutators."""
    return comm_left(ctx.b(k), *(ctx.a(j) for j in js))
