#!/usr/bin/env python3
"""Plot `lmg gap-scan` CSV output: one curve per J plus the cosh(2 gamma) bound."""
import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv", help="gap-scan CSV file")
    ap.add_argument("-o", "--output", default="gap.png")
    ap.add_argument("--log", action="store_true", help="logarithmic y axis")
    args = ap.parse_args()

    df = pd.read_csv(args.csv)
    df = df[pd.to_numeric(df["gap"], errors="coerce").notna()]
    df["gap"] = df["gap"].astype(float)

    fig, ax = plt.subplots(figsize=(6, 4))
    for j, sub in df.groupby("j"):
        sub = sub.sort_values("gamma")
        ax.plot(sub["gamma"], sub["gap"], marker=".", label=f"J = {j:g}")
    g = np.linspace(df["gamma"].min(), df["gamma"].max(), 400)
    ax.plot(g, np.cosh(2 * g), "g--", label="cosh(2γ)")
    ax.set_xlabel("γ")
    ax.set_ylabel("first excited level")
    if args.log:
        ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)


if __name__ == "__main__":
    main()
