"""Report rendering: byte-stable text/JSON blocks and optional matplotlib figures."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .core import Interpretation, Literal, sorted_lits


def _names(items: Iterable[Literal]) -> list[str]:
    return [str(q) for q in sorted_lits(items)]


def model_record(model: Interpretation, universe: Iterable[Literal]) -> dict:
    universe = frozenset(universe) | model.T | model.F
    return {
        "well_founded": _names(model.T),
        "unfounded": _names(model.F),
        "ambiguous": _names(model.ambiguous(universe)),
    }


def stable_record(sets: Sequence[frozenset]) -> dict:
    rows = sorted((_names(S) for S in sets), key=lambda row: (len(row), row))
    return {"stable_sets": rows}


def render_json(record: dict) -> str:
    return json.dumps(record, indent=2, sort_keys=False) + "\n"


def render_text(record: dict) -> str:
    lines = []
    for key, value in record.items():
        if key == "stable_sets":
            lines.append(f"stable_sets: {len(value)}")
            lines += ["  {" + ", ".join(row) + "}" for row in value]
        elif key == "trace":
            lines.append(f"trace: {len(value)} steps")
            lines += [f"  X{i} = {{{', '.join(row)}}}" for i, row in enumerate(value)]
        elif isinstance(value, list):
            lines.append(f"{key}: [{', '.join(map(str, value))}]")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _finish(fig, ax, path):
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)


def plot_status(model: Interpretation, universe: Iterable[Literal], path, title: str = "") -> None:
    """One bar per literal, coloured by status (true, false, undecided)."""
    plt = _pyplot()
    universe = sorted_lits(frozenset(universe) | model.T | model.F)
    colours = {"true": "#2b8a3e", "false": "#c92a2a", "undecided": "#adb5bd"}
    status = ["true" if q in model.T else "false" if q in model.F else "undecided" for q in universe]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.45 * len(universe) + 1.5), 2.8))
    try:
        ax.bar(range(len(universe)), [1] * len(universe), color=[colours[s] for s in status], width=0.8)
        ax.set_xticks(range(len(universe)))
        ax.set_xticklabels([str(q) for q in universe], rotation=45, ha="right")
        ax.set_yticks([])
        for name, colour in colours.items():
            ax.bar([0], [0], color=colour, label=name)
        ax.legend(loc="upper center", bbox_to_anchor=(0.5, -0.35), ncol=3, frameon=False)
        if title:
            ax.set_title(title)
        _finish(fig, ax, path)
    finally:
        plt.close(fig)


def plot_trace(trace: Sequence[frozenset], path, title: str = "") -> None:
    """Size of each ``X`` set along the squared-operator iteration."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(4.5, 3.0))
    try:
        xs = list(range(len(trace)))
        ax.plot(xs, [len(S) for S in trace], marker="o", color="#1c7ed6")
        ax.set_xlabel("iteration")
        ax.set_ylabel("|X|")
        ax.set_xticks(xs)
        if title:
            ax.set_title(title)
        _finish(fig, ax, path)
    finally:
        plt.close(fig)


def plot_stable(sets: Sequence[frozenset], universe: Iterable[Literal], path, title: str = "") -> None:
    """Membership grid: one row per stable set, one column per literal."""
    plt = _pyplot()
    cols = sorted_lits(frozenset(universe).union(*sets) if sets else frozenset(universe))
    rows = sorted((sorted_lits(S) for S in sets), key=lambda r: (len(r), [q.sort_key for q in r]))
    grid = [[1 if q in row else 0 for q in cols] for row in rows] or [[0] * len(cols)]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.45 * len(cols) + 1.5), 0.5 * len(grid) + 1.8))
    try:
        ax.imshow(grid, cmap="Greens", vmin=0, vmax=1, aspect="auto")
        ax.set_xticks(range(len(cols)))
        ax.set_xticklabels([str(q) for q in cols], rotation=45, ha="right")
        ax.set_yticks(range(len(grid)))
        ax.set_yticklabels([f"S{i + 1}" for i in range(len(rows))] or ["none"])
        if title:
            ax.set_title(title)
        fig.tight_layout()
        fig.savefig(path, dpi=120)
    finally:
        plt.close(fig)
