#!/usr/bin/env python3
"""Plot negativity curves from a sweep CSV (requires matplotlib).

Usage: plot_negativity.py sweep.csv [out.png]

Solid lines: Alice/outgoing channel.  Dashed lines: Alice/infalling channel.
One color per q_r value; the x axis is the mass-frequency product, log scale.
"""

import csv
import sys
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path):
    curves = defaultdict(list)
    with open(path) as fh:
        for row in csv.DictReader(fh):
            curves[(row["channel"], float(row["q_r"]))].append(
                (float(row["m_omega"]), float(row["negativity"]))
            )
    return {k: sorted(v) for k, v in curves.items()}


def main(argv):
    if not 2 <= len(argv) <= 3:
        print(__doc__, file=sys.stderr)
        return 1
    curves = load(argv[1])
    out = argv[2] if len(argv) == 3 else "negativity.png"
    q_values = sorted({q for _, q in curves}, reverse=True)
    colors = plt.cm.viridis([i / max(1, len(q_values) - 1) for i in range(len(q_values))])
    fig, ax = plt.subplots(figsize=(6, 4))
    for q, color in zip(q_values, colors):
        for channel, style in (("A-out", "-"), ("A-hor", "--")):
            pts = curves.get((channel, q))
            if not pts:
                continue
            xs, ys = zip(*pts)
            ax.plot(xs, ys, style, color=color, label=f"{channel}, q_r={q:.3g}")
    ax.set_xscale("log")
    ax.set_xlabel(r"$m\,\Omega$")
    ax.set_ylabel("negativity")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv))
