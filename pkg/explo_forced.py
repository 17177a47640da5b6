"""
Plateau of the vorticity L^p norms for Navier-Stokes driven by a forcing
with |f|_Lp <= p^lambda M, under grid refinement.
"""

import os

import pandas as pd

from analysis.growth import growth_fit
from run.make_data import run_to_frame
from run.outputs import write_csv
from settings.config import RunConfig
import settings.paths as paths

LATE = (10.0, 20.0)


def get_data(grid_n, t_end=20.0, force=False):

    data_file = os.path.join(paths.DATA_DIR, "explo_forced",
                             f"forced-ns-n{grid_n}.csv")
    if os.path.exists(data_file) and not force:
        return pd.read_csv(data_file)

    os.makedirs(os.path.dirname(data_file), exist_ok=True)
    config = RunConfig(grid_n=grid_n, t_end=t_end, preset="zero",
                       forcing="curl_forced", forcing_amplitude=1.0,
                       forcing_lambda=0.5, cadence=10,
                       run_name="explo_forced")
    df, _ = run_to_frame(config, with_tqdm=True)
    write_csv(df, data_file)
    return df


def late_sup(df, p_list=(2, 4, 8, 16)):
    late = df[(df["t"] >= LATE[0]) & (df["t"] <= LATE[1])]
    return {p: late[f"lp_omega_{p}"].max() for p in p_list}


def main():

    sups = {}
    for n in (128, 256):
        df = get_data(n)
        fit = growth_fit(df["t"], df["linf_omega"], window=LATE)
        print(f"n={n}: slope of log |omega|_Linf on {LATE}: "
              f"{fit.linear_slope:.2e}")
        sups[n] = late_sup(df)

    for p, coarse in sups[128].items():
        fine = sups[256][p]
        print(f"p={p}: sup |omega|_Lp n=128 {coarse:.6e}, n=256 {fine:.6e}, "
              f"change {100 * (fine / coarse - 1):+.2f}%")


if __name__ == "__main__":
    main()
