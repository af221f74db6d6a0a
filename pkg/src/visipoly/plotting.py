"""Coefficient-comparison figures for ``verify`` reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def coefficient_figure(rows, title: str, path) -> None:
    """Plot brute-force coefficients (lines) against closed forms (crosses).

    ``rows`` is a sequence of ``(label, brute, closed)`` with polynomials.
    Coefficients span many orders of magnitude, hence the log scale.
    """
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, brute, closed in rows:
        ks = range(len(brute.coeffs))
        (line,) = ax.plot(ks, brute.coeffs, marker="o", ms=3, lw=1, label=label)
        if closed is not None:
            ax.plot(
                range(len(closed.coeffs)),
                closed.coeffs,
                ls="none",
                marker="x",
                ms=7,
                color=line.get_color(),
            )
    ax.set_yscale("log")
    ax.set_xlabel("set size k")
    ax.set_ylabel("number of mutual-visibility sets")
    ax.set_title(title)
    ax.legend(fontsize=7, ncol=2, frameon=False)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
