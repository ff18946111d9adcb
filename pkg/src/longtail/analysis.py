"""Fitting and turnover statistics for simulated or observed sales data.

Covers the three measurement tasks the simulator feeds: maximum-likelihood
power-law exponents for cumulative sales, turnover of top-y best-seller
lists, and the square-root rule of thumb linking turnover to the innovation
fraction (z ~ y*sqrt(mu)), including its inversion for calibrating mu from
an observed chart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable

import numpy as np

from .model import SimState, TopYSeries, rank_top


class InsufficientDataError(ValueError):
    """Too few (or degenerate) data points for the requested statistic."""


@dataclass
class PowerLawFit:
    alpha: float
    s_min: float
    n_samples: int
    std_error: float


@dataclass
class TurnoverStats:
    z_per_period: list[int]
    z_bar: float
    as_fraction: float  # z_bar / y


@dataclass
class LogLogFit:
    slope: float
    intercept: float
    r_squared: float


def fit_alpha(samples: Iterable[float], s_min: float = 1) -> PowerLawFit:
    """ML estimate of the exponent alpha for P(s) ~ s^-alpha, s >= s_min.

    Uses the continuous-approximation estimator
    ``alpha = 1 + n / sum(ln(s_i / s_min))`` over the samples >= s_min,
    with standard error ``(alpha - 1) / sqrt(n)``. Sales counts are treated
    as continuous values; for heavy-tailed data spanning several decades the
    approximation error is small compared to the sampling error.
    """
    if s_min < 1:
        raise ValueError(f"s_min must be >= 1, got {s_min}")
    s = np.asarray(list(samples) if not isinstance(samples, np.ndarray) else samples, dtype=float)
    s = s[s >= s_min]
    n = int(s.size)
    if n < 2:
        raise InsufficientDataError(f"need at least 2 samples >= s_min={s_min}, got {n}")
    log_sum = float(np.log(s / s_min).sum())
    if log_sum == 0.0:
        raise InsufficientDataError("all samples equal s_min; exponent is undefined")
    alpha = 1.0 + n / log_sum
    return PowerLawFit(alpha=alpha, s_min=s_min, n_samples=n, std_error=(alpha - 1.0) / math.sqrt(n))


def top_y(state: SimState, y: int) -> list[int]:
    """Top-y product ids by current-period sales, ties broken by lower id."""
    if y < 1:
        raise ValueError(f"y must be >= 1, got {y}")
    return rank_top(state.product_ids, state.sales, y).tolist()


def turnover(series: TopYSeries) -> TurnoverStats:
    """Per-period count of list entrants: z_t = |top(t) \\ top(t-1)|."""
    if len(series.lists) < 2:
        raise InsufficientDataError("turnover needs at least 2 recorded periods")
    z = []
    prev = set(series.lists[0])
    for current_list in series.lists[1:]:
        current = set(current_list)
        z.append(len(current - prev))
        prev = current
    z_bar = sum(z) / len(z)
    return TurnoverStats(z_per_period=z, z_bar=z_bar, as_fraction=z_bar / series.y)


def expected_turnover(y: int, mu: float) -> float:
    """Rule-of-thumb turnover for a top-y list: y * sqrt(mu) items/period."""
    if y < 1:
        raise ValueError(f"y must be >= 1, got {y}")
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must be within [0, 1], got {mu}")
    return y * math.sqrt(mu)


def fit_turnover_exponent(points: Iterable[tuple[float, float]]) -> LogLogFit:
    """OLS fit of ln(z_bar) against ln(mu) over (mu, z_bar) pairs."""
    pts = [(float(m), float(z)) for m, z in points]
    if len(pts) < 3:
        raise InsufficientDataError(f"need at least 3 points, got {len(pts)}")
    if any(m <= 0.0 or z <= 0.0 for m, z in pts):
        raise ValueError("all mu and z_bar values must be positive for a log-log fit")
    ln_mu = np.log([m for m, _ in pts])
    ln_z = np.log([z for _, z in pts])
    if np.ptp(ln_mu) == 0.0:
        raise ValueError("mu values are all identical; slope is undefined")
    slope, intercept = np.polyfit(ln_mu, ln_z, 1)
    residual = ln_z - (slope * ln_mu + intercept)
    ss_tot = float(np.sum((ln_z - ln_z.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - float(np.sum(residual**2)) / ss_tot
    r_squared = min(1.0, max(0.0, r_squared))
    return LogLogFit(slope=float(slope), intercept=float(intercept), r_squared=r_squared)


def calibrate_mu(fractional_turnover: float) -> float:
    """Innovation fraction implied by an observed turnover fraction z/y.

    Inverts z ~ y*sqrt(mu) to mu = (z/y)^2. Observed fractions are
    decimal-reported quantities, so the square is taken in decimal
    arithmetic with a single rounding to float: calibrate_mu(0.056)
    returns exactly 0.003136 rather than accumulating two binary
    rounding errors.
    """
    f = float(fractional_turnover)
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"fractional turnover must be within [0, 1], got {f}")
    return float(Decimal(repr(f)) ** 2)
