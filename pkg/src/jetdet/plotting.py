"""Matplotlib figures for the CLI reports.  Always renders to files (Agg backend)."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FAMILY_COLORS = {"A": "#1b9e77", "C": "#d95f02", "D": "#7570b3", "E": "#e7298a", "F": "#66a61e"}


def _figure(width=6.0, height=4.0):
    fig, ax = plt.subplots(figsize=(width, height), facecolor="w")
    ax.tick_params(labelsize=10)
    return fig, ax


def plot_h_by_family(by_family, n, path):
    """Stacked bars of h_j split by facet family."""
    fig, ax = _figure()
    js = list(range(4))
    bottom = [0] * 4
    for tag in ("F", "E", "D", "C", "A"):
        vals = [by_family[tag][j] if j < len(by_family[tag]) else 0 for j in js]
        ax.bar(js, vals, bottom=bottom, color=FAMILY_COLORS[tag], label=tag)
        bottom = [b + v for b, v in zip(bottom, vals)]
    ax.set_xticks(js)
    ax.set_xlabel("j = |c(F)|")
    ax.set_ylabel("h_j")
    ax.set_title(f"h-vector of the shelling, n = {n}")
    ax.legend(title="family", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_hilbert_function(values, predicted, title, path):
    """Computed Hilbert function against a predicted expansion (log scale)."""
    fig, ax = _figure()
    degs = list(range(len(values)))
    ax.semilogy(degs, [max(v, 1) for v in values], "o-", label="computed")
    if predicted:
        ax.semilogy(list(range(len(predicted))), [max(v, 1) for v in predicted], "x--", label="predicted")
    ax.set_xlabel("degree")
    ax.set_ylabel("HF(d)")
    ax.set_title(title)
    ax.legend(fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
