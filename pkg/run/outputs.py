"""
Files written next to each run: diagnostics CSV, summary sidecar, config
echo, and static SVG line charts of the diagnostics.
"""

import logging
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.12e"

CSV_NAME = "diagnostics.csv"
SUMMARY_NAME = "summary.txt"
ECHO_NAME = "config.txt"

SVG_SALT = "boussinesq-lab"


def write_csv(df, path):
    df.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def read_csv(path):
    return pd.read_csv(path)


def write_run(config, df, summary):
    """Write the three run files in ``config.run_dir``; returns the CSV path"""

    os.makedirs(config.run_dir, exist_ok=True)
    csv_path = os.path.join(config.run_dir, CSV_NAME)
    write_csv(df, csv_path)

    with open(os.path.join(config.run_dir, SUMMARY_NAME), "w",
              encoding="utf-8") as f:
        f.write(summary.lines())
    with open(os.path.join(config.run_dir, ECHO_NAME), "w",
              encoding="utf-8") as f:
        f.write(config.echo())

    logger.info(f"wrote {csv_path}")
    return csv_path


def read_summary(path):
    out = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            key, value = line.strip().split("=", 1)
            out[key] = value
    return out


def check_columns(df, columns):
    missing = [c for c in columns if c not in df.columns]
    if missing:
        raise ValueError(f"missing column(s): {', '.join(missing)}")


def series_gid(column):
    return f"series-{column}"


def plot_svg(df, columns, out, log=False, x="t"):
    """Line chart of ``columns`` against ``x``, one line per column"""

    check_columns(df, [x] + list(columns))
    if log:
        for c in columns:
            bad = np.flatnonzero(~(df[c].to_numpy() > 0))
            if len(bad):
                raise ValueError(
                    f"log axis: column {c} has nonpositive value "
                    f"{df[c].iloc[bad[0]]} at row {bad[0]} "
                    f"({x}={df[x].iloc[bad[0]]})")

    with plt.rc_context({"svg.hashsalt": SVG_SALT,
                         "svg.fonttype": "path"}):
        fig, ax = plt.subplots(figsize=(6, 4))
        for c in columns:
            line, = ax.plot(df[x], df[c], label=c)
            line.set_gid(series_gid(c))
        ax.set_xlabel(x)
        if log:
            ax.set_yscale("log")
        ax.legend()
        fig.tight_layout()
        fig.savefig(out, format="svg", metadata={"Date": None})
        plt.close(fig)

    logger.info(f"wrote {out}")
