"""Figure rendering for sweep reports.

Presentation only: nothing here feeds back into results.  The heatmap
mirrors the CSV (one coloured cell per grid point, log10 of the median
best objective) and can outline a parameter window with dashes.
"""

from __future__ import annotations

import math

from .sweep import SweepResult

LOG_FLOOR = 1e-16  # exact zeros would otherwise blow up the log scale


def render_sweep_heatmap(
    result: SweepResult,
    path: str,
    window: tuple[tuple[int, int], tuple[int, int]] | None = None,
) -> None:
    """Write a heatmap of log10(median best) per cell to ``path`` (format
    from the extension: .svg, .png, ...)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    pops = sorted(set(c.pop_size for c in result.cells))
    nmaxes = sorted(set(c.n_max for c in result.cells))
    pop_index = {p: i for i, p in enumerate(pops)}
    nmax_index = {n: i for i, n in enumerate(nmaxes)}
    grid = [[math.nan] * len(pops) for _ in nmaxes]
    for cell in result.cells:
        value = math.log10(max(cell.median_best, LOG_FLOOR))
        grid[nmax_index[cell.n_max]][pop_index[cell.pop_size]] = value

    fig, ax = plt.subplots(figsize=(max(6.0, 0.22 * len(pops)), 3.2))
    image = ax.imshow(grid, origin="lower", aspect="auto", cmap="viridis")
    ax.set_xticks(range(0, len(pops), max(1, len(pops) // 10)))
    ax.set_xticklabels([pops[i] for i in range(0, len(pops), max(1, len(pops) // 10))])
    ax.set_yticks(range(len(nmaxes)))
    ax.set_yticklabels(nmaxes)
    ax.set_xlabel("population size")
    ax.set_ylabel("max offspring")
    ax.set_title(f"{result.function}: log10 median best of {result.grid.runs_per_cell} runs")
    fig.colorbar(image, ax=ax, label="log10 median best")

    if window is not None:
        (plo, phi), (nlo, nhi) = window
        in_pops = [p for p in pops if plo <= p <= phi]
        in_nmaxes = [n for n in nmaxes if nlo <= n <= nhi]
        if in_pops and in_nmaxes:
            x0 = pop_index[in_pops[0]] - 0.5
            x1 = pop_index[in_pops[-1]] + 0.5
            y0 = nmax_index[in_nmaxes[0]] - 0.5
            y1 = nmax_index[in_nmaxes[-1]] + 0.5
            ax.add_patch(
                plt.Rectangle(
                    (x0, y0), x1 - x0, y1 - y0,
                    fill=False, linestyle="--", linewidth=1.5, edgecolor="white",
                )
            )

    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
