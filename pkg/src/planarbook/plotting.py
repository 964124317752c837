"""
Figures for reports: the arrangement of curves and arcs in the cut-open
polygon, and coefficient bounds per boundary.
"""
import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np

from .arrangement import Arrangement

SLOT_COLOURS = {'seg': '0.55', 'hole': 'tab:red', 'a': 'tab:blue', 'b': 'tab:cyan'}


def _point_angles(arr):
    """Angle of every strand endpoint, spread evenly inside its polygon side."""
    S = arr.S
    N = S.n_slots
    angles = {}
    for slot in range(N):
        pts = arr.slot_points.get(slot, [])
        for r, p in enumerate(pts):
            frac = (r + 1) / (len(pts) + 1)
            angles[arr.pos[p]] = 2 * np.pi * (slot + frac) / N
    return angles


def plot_arrangement(S, items, path, labels=None, title=None):
    """Draw the polygon sides on a circle and each strand as a chord."""
    arr = Arrangement(S, items)
    N = S.n_slots
    fig, ax = plt.subplots(figsize=(5, 5))
    for slot in range(N):
        kind, idx = S.slot_kind(slot)
        t = np.linspace(2 * np.pi * slot / N, 2 * np.pi * (slot + 1) / N, 40)
        ax.plot(np.cos(t), np.sin(t), color=SLOT_COLOURS[kind], lw=3 if kind in ('seg', 'hole') else 1.5)
        mid = 2 * np.pi * (slot + 0.5) / N
        name = 'B1' if kind == 'seg' else ('B%d' % idx if kind == 'hole' else 'c%d%s' % (idx, '+' if kind == 'a' else '-'))
        ax.text(1.13 * np.cos(mid), 1.13 * np.sin(mid), name, ha='center', va='center', fontsize=8)
    angles = _point_angles(arr)
    colours = plt.rcParams['axes.prop_cycle'].by_key()['color']
    for i, ends in enumerate(arr.ends):
        colour = colours[i % len(colours)]
        for n, (a, b) in enumerate(ends):
            xa, ya = np.cos(angles[int(a)]), np.sin(angles[int(a)])
            xb, yb = np.cos(angles[int(b)]), np.sin(angles[int(b)])
            lab = None
            if n == 0:
                lab = labels[i] if labels else str(i)
            ax.plot([xa, xb], [ya, yb], color=colour, lw=1.2, label=lab)
    ax.set_aspect('equal')
    ax.axis('off')
    if items:
        ax.legend(loc='lower right', fontsize=7, frameon=False)
    if title:
        ax.set_title(title, fontsize=10)
    fig.savefig(path, dpi=120, bbox_inches='tight')
    plt.close(fig)
    return path


def plot_bounds(rows, path, title=None):
    """Bar chart of coefficient values.

    ``rows`` are (name, boundary, kind, value) with value a float or None.
    Exact values are solid, lower bounds hatched, unknown values omitted.
    """
    rows = [r for r in rows if r[3] is not None]
    fig, ax = plt.subplots(figsize=(max(4, 0.35 * len(rows) + 2), 3.2))
    x = np.arange(len(rows))
    for k, (name, B, kind, value) in enumerate(rows):
        ax.bar(k, value, color='tab:blue' if kind == 'exact' else 'white',
               edgecolor='tab:blue', hatch=None if kind == 'exact' else '//')
    ax.set_xticks(x)
    ax.set_xticklabels(['%s B%d' % (name, B) if name else 'B%d' % B for name, B, _, _ in rows],
                       rotation=60, ha='right', fontsize=7)
    ax.axhline(1, color='0.6', lw=0.8, ls='--')
    ax.set_ylabel('coefficient')
    if title:
        ax.set_title(title, fontsize=10)
    fig.savefig(path, dpi=120, bbox_inches='tight')
    plt.close(fig)
    return path
