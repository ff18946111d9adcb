"""Optimal shelf size for a retailer stocking the top-y best sellers.

Stocking rank i earns profit A * i^-alpha per period (power-law sales),
while list churn costs B per replaced item at the rule-of-thumb turnover
rate y * sqrt(mu). The per-period objective is therefore

    profit(y) = A * sum_{i=1..y} i^-alpha  -  B * y * sqrt(mu)

Two optimizers are provided. ``closed_form_stock`` evaluates the closed
form y = (A / (B*sqrt(mu)))^(1/(alpha+1)). ``bruteforce_stock`` finds the
exact integer argmax of the objective; note that maximizing the discrete
sum directly balances the marginal terms as A * y^-alpha = B*sqrt(mu),
i.e. an exponent of 1/alpha, so the two answers generally differ. The
brute-force result is exact by construction and results are annotated
whenever the closed form disagrees with it.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

DISAGREEMENT_NOTE = (
    "closed form (exponent 1/(alpha+1)) and exact argmax disagree; "
    "y_bruteforce maximizes the stocking objective by construction"
)


@dataclass
class InventoryParams:
    """Inputs to the stocking objective.

    profit_per_item (A) >= 0, turnover_cost (B) > 0, 0 < mu <= 1,
    alpha > 0; y_max bounds the brute-force search.
    """

    profit_per_item: float
    turnover_cost: float
    mu: float
    alpha: float
    y_max: int = 1_000_000

    def __post_init__(self):
        if self.profit_per_item < 0:
            raise ValueError(f"profit_per_item must be >= 0, got {self.profit_per_item}")
        if self.turnover_cost <= 0:
            raise ValueError(f"turnover_cost must be > 0, got {self.turnover_cost}")
        if not 0.0 < self.mu <= 1.0:
            raise ValueError(f"mu must be within (0, 1], got {self.mu}")
        if self.alpha <= 0:
            raise ValueError(f"alpha must be > 0, got {self.alpha}")
        if self.y_max < 1:
            raise ValueError(f"y_max must be >= 1, got {self.y_max}")


@dataclass
class InventoryResult:
    y_closed_form: float
    y_closed_form_floor: int
    y_bruteforce: int
    objective_at_optimum: float
    note: str | None = None


def objective(y: int, params: InventoryParams) -> float:
    """Stocking profit at integer shelf size y (exact partial sum)."""
    if y < 0:
        raise ValueError(f"y must be >= 0, got {y}")
    if y > params.y_max:
        raise ValueError(f"y exceeds y_max={params.y_max}, got {y}")
    if y == 0:
        return 0.0
    ranks = np.arange(1, y + 1, dtype=float)
    head_sales = float(np.power(ranks, -params.alpha).sum())
    return params.profit_per_item * head_sales - params.turnover_cost * y * math.sqrt(params.mu)


def closed_form_stock(params: InventoryParams) -> tuple[float, int]:
    """Closed-form shelf size (A/(B*sqrt(mu)))^(1/(alpha+1)), real and floored."""
    a, b = params.profit_per_item, params.turnover_cost
    if a == 0.0:
        return 0.0, 0
    value = (a / (b * math.sqrt(params.mu))) ** (1.0 / (params.alpha + 1.0))
    return value, max(0, math.floor(value))


def bruteforce_stock(params: InventoryParams) -> InventoryResult:
    """Exact integer argmax of the stocking objective over 0..y_max.

    The marginal gain of rank y is A*y^-alpha - B*sqrt(mu), strictly
    decreasing in y, so the objective is unimodal: the search only needs to
    cover ranks up to the root of the marginal condition. Ties resolve to
    the smaller y. Warns when the objective is still increasing at y_max.
    """
    a, b = params.profit_per_item, params.turnover_cost
    cost = b * math.sqrt(params.mu)
    if a == 0.0:
        limit = 0
    else:
        marginal_root = (a / cost) ** (1.0 / params.alpha)
        if not math.isfinite(marginal_root) or marginal_root >= params.y_max:
            warnings.warn(
                f"objective still increasing at y_max={params.y_max}; result is capped",
                stacklevel=2,
            )
            limit = params.y_max
        else:
            limit = min(params.y_max, math.ceil(marginal_root) + 1)

    if limit == 0:
        y_star, best = 0, 0.0
    else:
        ranks = np.arange(1, limit + 1, dtype=float)
        values = a * np.cumsum(np.power(ranks, -params.alpha)) - cost * ranks
        values = np.concatenate([[0.0], values])
        y_star = int(np.argmax(values))  # first occurrence -> smallest y on ties
        best = float(values[y_star])

    cf_value, cf_floor = closed_form_stock(params)
    return InventoryResult(
        y_closed_form=cf_value,
        y_closed_form_floor=cf_floor,
        y_bruteforce=y_star,
        objective_at_optimum=best,
        note=DISAGREEMENT_NOTE if cf_floor != y_star else None,
    )


@dataclass
class CurvePoint:
    ab_ratio: float
    mu: float
    y_value: float
    y_floor: int


def inventory_curve(
    alpha: float = 3.5,
    ab_ratios: tuple[float, ...] = (10.0, 100.0, 1e3, 1e4, 1e5, 1e6),
    mu_grid: tuple[float, ...] | None = None,
) -> list[CurvePoint]:
    """Closed-form shelf size over a grid of profit/cost ratios and mu values.

    The default alpha of 3.5 matches the commonly cited exponent for book
    sales. Only the ratio A/B matters (the closed form is scale-invariant
    in A and B), so points are evaluated at B = 1.
    """
    if mu_grid is None:
        mu_grid = tuple(np.geomspace(1e-4, 0.5, 25).tolist())
    if any(m <= 0 for m in mu_grid):
        raise ValueError("all mu values must be positive")
    points = []
    for ab in ab_ratios:
        for mu in mu_grid:
            params = InventoryParams(profit_per_item=ab, turnover_cost=1.0, mu=mu, alpha=alpha)
            value, floor = closed_form_stock(params)
            points.append(CurvePoint(ab_ratio=ab, mu=mu, y_value=value, y_floor=floor))
    return points
