"""Parameter sweep over (population size, offspring cap) for the continuous
plant-propagation optimizer.

Every grid cell runs the optimizer several times with seeds derived from
(base seed, function, cell, run index), so any execution order - serial,
shuffled, or a process pool - produces the identical result.  Cells are
aggregated by the median of their per-run best objectives and emitted as
CSV; window statistics compare a parameter sub-rectangle against the rest
of the grid.
"""

from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable

from .benchmarks import get_function
from .ppa import PpaParams, run_ppa
from .seeds import derive_seed

CSV_HEADER = "function,pop_size,n_max,median_best"


@dataclass(frozen=True)
class SweepGrid:
    pop_sizes: tuple[int, ...] = tuple(range(1, 41))
    n_maxes: tuple[int, ...] = tuple(range(1, 11))
    runs_per_cell: int = 10
    evals_per_run: int = 10_000
    base_seed: int = 0

    def __post_init__(self) -> None:
        if not self.pop_sizes or not self.n_maxes:
            raise ValueError("grid axes must be non-empty")
        if min(self.pop_sizes) < 1 or min(self.n_maxes) < 1:
            raise ValueError("grid axes must be positive")
        if self.runs_per_cell < 1 or self.evals_per_run < 1:
            raise ValueError("runs_per_cell and evals_per_run must be positive")

    def cells(self) -> list[tuple[int, int]]:
        return [(p, n) for p in sorted(self.pop_sizes) for n in sorted(self.n_maxes)]


@dataclass(frozen=True)
class SweepCell:
    pop_size: int
    n_max: int
    run_bests: tuple[float, ...]
    median_best: float


@dataclass(frozen=True)
class SweepResult:
    function: str
    grid: SweepGrid
    cells: tuple[SweepCell, ...]


@dataclass(frozen=True)
class WindowStats:
    inside_mean: float
    inside_sd: float
    outside_mean: float
    outside_sd: float
    inside_cells: int
    outside_cells: int


def cell_seed(base_seed: int, function: str, pop_size: int, n_max: int, run: int) -> int:
    return derive_seed("sweep", base_seed, function, pop_size, n_max, run)


def _run_cell(args: tuple[str, int, int, int, int, int]) -> SweepCell:
    fn_name, pop_size, n_max, runs, evals, base_seed = args
    function = get_function(fn_name)
    bests = []
    for run in range(runs):
        params = PpaParams(pop_size=pop_size, n_max=n_max, eval_budget=evals)
        record = run_ppa(function, params, cell_seed(base_seed, fn_name, pop_size, n_max, run))
        bests.append(record.final_best.objective)
    # median of an even count is the mean of the two middle values
    return SweepCell(pop_size, n_max, tuple(bests), statistics.median(bests))


def run_sweep(function_name: str, grid: SweepGrid, jobs: int = 1) -> SweepResult:
    """Run every cell of the grid; ``jobs > 1`` fans cells out to processes
    (the result is identical by construction)."""
    function = get_function(function_name)  # validate the name up front
    tasks = [
        (function.name, p, n, grid.runs_per_cell, grid.evals_per_run, grid.base_seed)
        for p, n in grid.cells()
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(_run_cell, tasks, chunksize=4))
    else:
        cells = [_run_cell(t) for t in tasks]
    return SweepResult(function.name, grid, tuple(cells))


def window_stats(
    result: SweepResult,
    pop_range: tuple[int, int],
    n_max_range: tuple[int, int],
) -> WindowStats:
    """Mean and sample standard deviation of cell medians inside the window
    (both ranges inclusive) versus everywhere else on the grid."""
    inside = []
    outside = []
    for cell in result.cells:
        if pop_range[0] <= cell.pop_size <= pop_range[1] and n_max_range[0] <= cell.n_max <= n_max_range[1]:
            inside.append(cell.median_best)
        else:
            outside.append(cell.median_best)
    if not inside or not outside:
        raise ValueError("window must split the grid into two non-empty parts")

    def sd(xs: list[float]) -> float:
        return statistics.stdev(xs) if len(xs) > 1 else 0.0

    return WindowStats(
        inside_mean=statistics.fmean(inside),
        inside_sd=sd(inside),
        outside_mean=statistics.fmean(outside),
        outside_sd=sd(outside),
        inside_cells=len(inside),
        outside_cells=len(outside),
    )


def format_scientific(value: float) -> str:
    """Shortest scientific-notation string that round-trips exactly."""
    for digits in range(17):
        text = f"{value:.{digits}e}"
        if float(text) == value:
            return text
    return f"{value:.17e}"


def emit_csv(result: SweepResult, out: IO[str]) -> None:
    """Write one row per cell, sorted by (pop_size, n_max)."""
    out.write(CSV_HEADER + "\n")
    for cell in sorted(result.cells, key=lambda c: (c.pop_size, c.n_max)):
        out.write(
            f"{result.function},{cell.pop_size},{cell.n_max},{format_scientific(cell.median_best)}\n"
        )


def load_csv(lines: Iterable[str]) -> list[tuple[str, int, int, float]]:
    """Parse rows emitted by :func:`emit_csv` back into tuples."""
    rows = []
    for i, line in enumerate(lines):
        line = line.strip()
        if not line:
            continue
        if i == 0:
            if line != CSV_HEADER:
                raise ValueError(f"unexpected header: {line!r}")
            continue
        fn, pop, nmax, median = line.split(",")
        rows.append((fn, int(pop), int(nmax), float(median)))
    return rows
