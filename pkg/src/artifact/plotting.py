"""Static SVG/PNG renderings of interpolants."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .interpolation import QiPiece, eval_dayan  # noqa: E402
from .piecewise import PiecewiseParabola, eval_piecewise_many  # noqa: E402

# fixed ids and no timestamp so identical inputs give identical files
_RC = {"svg.hashsalt": "artifact", "path.simplify": False}


def _save(fig, path) -> None:
    fig.savefig(path, metadata={"Date": None} if str(path).endswith(".svg") else None)
    plt.close(fig)


def plot_piecewise(pp: PiecewiseParabola, path, samples: int = 2000, title: str | None = None) -> None:
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(8, 4))
        t = np.linspace(0.0, pp.year_length, samples)
        ax.plot(t, eval_piecewise_many(pp, t), lw=1.2, label="piecewise parabola")
        bp = np.asarray(pp.breakpoints)
        ax.plot(bp, eval_piecewise_many(pp, bp), "o", ms=3, label="qi boundaries")
        ax.set_xlabel("days from table start")
        ax.set_ylabel("accumulated deviation (du)")
        if title:
            ax.set_title(title)
        ax.legend(loc="best")
        fig.tight_layout()
        _save(fig, path)


def plot_piece(piece: QiPiece, path, samples: int = 400) -> None:
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(6, 4))
        end = piece.n1 + piece.n2
        x = np.linspace(0.0, end, samples)
        ax.plot(x, [eval_dayan(piece, v) for v in x], lw=1.2)
        ax.plot([0.0, piece.n1, end], [0.0, piece.d1, piece.d1 + piece.d2], "o", ms=4)
        ax.axvspan(0.0, piece.n1, alpha=0.1)
        ax.set_xlabel("days")
        ax.set_ylabel("deviation (du)")
        fig.tight_layout()
        _save(fig, path)
