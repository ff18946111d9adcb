"""Reproducible ensemble experiments over the random-copying market model.

Three bundled studies:

* ``run_sales_distribution`` — cumulative-sales distributions for a set of
  N*mu targets, with log-binned histograms and ML exponent fits.
* ``run_turnover_sweep`` — mean top-y turnover over an (N, mu) grid with
  replicates, plus the pooled log-log fit of z_bar against mu.
* ``run_inventory_curves`` — deterministic closed-form shelf-size curves.

Every run's seed is a pure function of (master_seed, cell index, replicate
index), so results are bit-reproducible and cells can be farmed out to
worker processes without changing the output.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .analysis import (
    InsufficientDataError,
    LogLogFit,
    PowerLawFit,
    fit_alpha,
    fit_turnover_exponent,
    turnover,
)
from .inventory import CurvePoint, inventory_curve
from .model import SimConfig, run

# Default sweep protocol: 60 (N, mu) cells, 10 replicates of 1000 steps each,
# tracking the top-5 list. The mu grid stays above the winner-take-all
# boundary for most N (mu*N >= 1 once N >= 500 at the smallest mu); pushing
# mu much lower makes turnover scale with mu*N instead of sqrt(mu).
DEFAULT_N_GRID = tuple(range(100, 1001, 100))
DEFAULT_MU_GRID = (0.002, 0.003, 0.005, 0.01, 0.02, 0.05)
DEFAULT_NMU_TARGETS = (0.5, 1.0, 2.0, 5.0)


@dataclass(frozen=True)
class SweepSpec:
    """Grid protocol for the turnover sweep."""

    n_grid: tuple[int, ...] = DEFAULT_N_GRID
    mu_grid: tuple[float, ...] = DEFAULT_MU_GRID
    runs_per_cell: int = 10
    steps: int = 1000
    y: int = 5
    master_seed: int = 0
    fit_alpha_per_run: bool = False

    def __post_init__(self):
        if not self.n_grid or not self.mu_grid:
            raise ValueError("n_grid and mu_grid must be non-empty")
        if self.runs_per_cell < 1:
            raise ValueError(f"runs_per_cell must be >= 1, got {self.runs_per_cell}")

    @property
    def cells(self) -> list[tuple[int, int, float]]:
        """(cell_index, n_agents, mu) triples in deterministic order."""
        return [
            (i, n, mu)
            for i, (n, mu) in enumerate((n, mu) for n in self.n_grid for mu in self.mu_grid)
        ]


@dataclass
class CellResult:
    n_agents: int
    mu: float
    z_bar: float  # mean of per-run z_bar over replicates
    z_std: float  # std of per-run z_bar over replicates
    z_bar_runs: tuple[float, ...]
    alpha_runs: tuple[float, ...] | None = None


@dataclass
class SweepResult:
    spec: SweepSpec
    cells: list[CellResult]

    def per_mu_stats(self) -> list[tuple[float, float, float]]:
        """(mu, mean over N, std over N) of cell z_bar values, one row per mu."""
        rows = []
        for mu in self.spec.mu_grid:
            values = np.array([c.z_bar for c in self.cells if c.mu == mu])
            rows.append((mu, float(values.mean()), float(values.std())))
        return rows


def derive_run_seed(master_seed: int, cell_index: int, replicate_index: int) -> int:
    """Deterministic 64-bit run seed for one replicate of one grid cell."""
    seq = np.random.SeedSequence((master_seed, cell_index, replicate_index))
    return int(seq.generate_state(1, np.uint64)[0])


def _run_cell(task: tuple[SweepSpec, int, int, float]) -> CellResult:
    spec, cell_index, n_agents, mu = task
    z_bars = []
    alphas = [] if spec.fit_alpha_per_run else None
    for replicate in range(spec.runs_per_cell):
        seed = derive_run_seed(spec.master_seed, cell_index, replicate)
        config = SimConfig(n_agents=n_agents, mu=mu, steps=spec.steps, seed=seed)
        state, series = run(config, y=spec.y)
        z_bars.append(turnover(series).z_bar)
        if alphas is not None:
            samples = state.cumulative[state.cumulative >= 1]
            try:
                alphas.append(fit_alpha(samples).alpha)
            except InsufficientDataError:
                alphas.append(math.nan)
    values = np.array(z_bars)
    return CellResult(
        n_agents=n_agents,
        mu=mu,
        z_bar=float(values.mean()),
        z_std=float(values.std()),
        z_bar_runs=tuple(z_bars),
        alpha_runs=None if alphas is None else tuple(alphas),
    )


def run_turnover_sweep(spec: SweepSpec, workers: int = 1) -> tuple[SweepResult, LogLogFit]:
    """Mean top-y turnover per (N, mu) cell plus the pooled log-log fit.

    Cells are independent; with ``workers > 1`` they are evaluated in a
    process pool and merged back in cell order, so the result does not
    depend on scheduling.
    """
    tasks = [(spec, i, n, mu) for i, n, mu in spec.cells]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_run_cell, tasks))
    else:
        cells = [_run_cell(t) for t in tasks]
    fit = fit_turnover_exponent([(c.mu, c.z_bar) for c in cells])
    return SweepResult(spec=spec, cells=cells), fit


def log_binned_histogram(
    samples: np.ndarray, ratio: float = 2.0
) -> list[tuple[float, float, int]]:
    """Histogram of positive values in geometric bins [r^k, r^(k+1)) from 1."""
    if ratio <= 1.0:
        raise ValueError(f"bin ratio must be > 1, got {ratio}")
    values = np.asarray(samples, dtype=float)
    if values.size == 0 or values.min() < 1:
        raise ValueError("histogram expects at least one sample, all >= 1")
    n_bins = max(1, math.ceil(math.log(values.max() + 1.0, ratio)))
    edges = ratio ** np.arange(n_bins + 1)
    counts, _ = np.histogram(values, bins=edges)
    return [(float(lo), float(hi), int(c)) for lo, hi, c in zip(edges, edges[1:], counts)]


@dataclass
class DistributionResult:
    """Pooled cumulative-sales distribution for one N*mu target."""

    n_mu: float
    mu: float
    n_agents: int
    total_products: int
    samples: np.ndarray
    histogram: list[tuple[float, float, int]]
    fit: PowerLawFit | None
    winner_take_all: bool


def run_sales_distribution(
    targets: tuple[float, ...] = DEFAULT_NMU_TARGETS,
    n_agents: int = 500,
    steps: int = 1000,
    replicates: int = 10,
    master_seed: int = 0,
    s_min: float = 1,
) -> list[DistributionResult]:
    """Cumulative-sales distributions for a list of N*mu targets.

    Each target is simulated ``replicates`` times at mu = target / n_agents
    and the per-product cumulative sales are pooled across replicates. For
    targets with N*mu <= 1 the market is winner-take-all rather than
    power-law distributed, so the exponent fit is skipped and the result is
    flagged instead.
    """
    results = []
    for cell_index, target in enumerate(targets):
        mu = target / n_agents
        if not 0.0 < mu <= 1.0:
            raise ValueError(
                f"target {target} is not expressible as n_agents*mu with mu in (0, 1]"
            )
        pooled = []
        total_products = 0
        for replicate in range(replicates):
            seed = derive_run_seed(master_seed, cell_index, replicate)
            config = SimConfig(n_agents=n_agents, mu=mu, steps=steps, seed=seed)
            state, _ = run(config, y=1)
            total_products += state.next_product_id
            pooled.append(state.cumulative[state.cumulative >= 1])
        samples = np.concatenate(pooled)
        winner_take_all = target <= 1.0
        fit = None if winner_take_all else fit_alpha(samples, s_min=s_min)
        results.append(
            DistributionResult(
                n_mu=target,
                mu=mu,
                n_agents=n_agents,
                total_products=total_products,
                samples=samples,
                histogram=log_binned_histogram(samples),
                fit=fit,
                winner_take_all=winner_take_all,
            )
        )
    return results


def run_inventory_curves(
    alpha: float = 3.5,
    ab_ratios: tuple[float, ...] = (10.0, 100.0, 1e3, 1e4, 1e5, 1e6),
    mu_grid: tuple[float, ...] | None = None,
) -> list[CurvePoint]:
    """Deterministic shelf-size curves (no randomness involved)."""
    return inventory_curve(alpha=alpha, ab_ratios=ab_ratios, mu_grid=mu_grid)
