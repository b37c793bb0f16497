# -*- coding: utf-8 -*-
"""
Affine equivalence of weight vectors and the P-model / C-model duality.

Maps x -> a*x + b*1 with a > 0 act on cost and prize vectors without
changing which attacks are optimal. A scaled prize vector p (entries in
[0, 1]) is dual to the cost vector 1 - p: every m-edge attack satisfies
prize under p plus cost under 1 - p equal to m.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .attack_solver import DominanceReport, min_cost_subtree
from .core_model import ONE, ZERO, SecuritySystem
from .errors import InvalidAffineMap, LengthMismatch, NotScaled, NotUnitCost, NotUnitPrize
from .rational import RationalLike, format_rational, parse_rational

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class AffineMap:
    """x -> a*x + b*1 with a > 0"""
    a: Fraction = ONE
    b: Fraction = ZERO

    def __post_init__(self):
        object.__setattr__(self, 'a', parse_rational(self.a))
        object.__setattr__(self, 'b', parse_rational(self.b))
        if self.a <= 0:
            raise InvalidAffineMap(f"Scale factor must be positive, got {format_rational(self.a)}")

    def __call__(self, value: RationalLike) -> Fraction:
        return self.a * parse_rational(value) + self.b

    def inverse(self) -> "AffineMap":
        return AffineMap(1 / self.a, -self.b / self.a)

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """self after inner"""
        return AffineMap(self.a * inner.a, self.a * inner.b + self.b)

    def __str__(self) -> str:
        return f"x -> {format_rational(self.a)}*x + {format_rational(self.b)}"


IDENTITY = AffineMap()


def apply_affine(alpha: AffineMap, vector: Sequence[RationalLike]) -> Tuple[Vector, bool]:
    """Componentwise image and whether it stays in the nonnegative orthant"""
    image = tuple(alpha(v) for v in vector)
    return image, all(v >= 0 for v in image)


def same_class(x: Sequence[RationalLike], y: Sequence[RationalLike]) -> Optional[AffineMap]:
    """The map alpha with y = alpha(x), if one exists"""
    x = [parse_rational(v) for v in x]
    y = [parse_rational(v) for v in y]
    if len(x) != len(y):
        raise LengthMismatch(f"Vectors have lengths {len(x)} and {len(y)}")
    if not x:
        return IDENTITY
    distinct = next((i for i in range(1, len(x)) if x[i] != x[0]), None)
    if distinct is None:
        if any(v != y[0] for v in y):
            return None
        return AffineMap(ONE, y[0] - x[0])
    a = (y[distinct] - y[0]) / (x[distinct] - x[0])
    if a <= 0:
        return None
    alpha = AffineMap(a, y[0] - a * x[0])
    if any(alpha(u) != v for u, v in zip(x, y)):
        return None
    return alpha


def scale_prizes(prize: Sequence[RationalLike]) -> Tuple[Vector, AffineMap]:
    """Divide by the largest entry so that all entries lie in [0, 1]"""
    prize = tuple(parse_rational(p) for p in prize)
    top = max(prize, default=ZERO)
    if top == 0 or top == 1:
        return prize, IDENTITY
    alpha = AffineMap(1 / top, ZERO)
    return apply_affine(alpha, prize)[0], alpha


def b_threshold(ss: SecuritySystem, m: int) -> Fraction:
    """Least budget at which a unit-prize attacker captures m vertices"""
    if not ss.is_unit_prize:
        raise NotUnitPrize("B_m thresholds are defined for unit-prize systems")
    return min_cost_subtree(ss.tree, ss.cost, m)[0]


def b_thresholds(ss: SecuritySystem) -> List[Fraction]:
    """B_0..B_n"""
    return [b_threshold(ss, m) for m in range(ss.tree.n + 1)]


def b_sequence_dominance(first: SecuritySystem, second: SecuritySystem) -> DominanceReport:
    """
    Compare two unit-prize systems through their B_m sequences

    A larger B_m means a stronger defense; where first's B_m is larger, the
    first system is strictly lower at the budget equal to second's B_m.
    """
    first_lower_at = second_lower_at = None
    for b1, b2 in zip(b_thresholds(first), b_thresholds(second)):
        if b1 > b2 and first_lower_at is None:
            first_lower_at = b2
        elif b2 > b1 and second_lower_at is None:
            second_lower_at = b1
    return DominanceReport.from_witnesses(first_lower_at, second_lower_at)


def is_scaled(prize: Sequence[Fraction]) -> bool:
    return all(0 <= p <= 1 for p in prize)


def dual_P_to_C(ss: SecuritySystem) -> SecuritySystem:
    """(T, 1, p) -> (T, 1 - p, 1) for a scaled prize vector p"""
    if not ss.is_unit_cost:
        raise NotUnitCost("The P-to-C dual requires unit costs")
    if not is_scaled(ss.prize):
        raise NotScaled("The P-to-C dual requires prizes in [0, 1]; scale them first")
    logger.debug("Dualizing P-model security system")
    return SecuritySystem(ss.tree, tuple(ONE - p for p in ss.prize), tuple([ONE] * ss.tree.n))


def dual_C_to_P(ss: SecuritySystem) -> SecuritySystem:
    """(T, c, 1) -> (T, 1, 1 - c/max(c))"""
    if not ss.is_unit_prize:
        raise NotUnitPrize("The C-to-P dual requires unit prizes")
    scaled, _ = scale_prizes(ss.cost)
    logger.debug("Dualizing C-model security system")
    return SecuritySystem(ss.tree, tuple([ONE] * ss.tree.n), tuple(ONE - c for c in scaled))
