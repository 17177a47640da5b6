#!/bin/python3
"""
Generate the run config files of the named experiments in
config/experiments/. Run them with ``python main.py sweep --jobs k
config/experiments/*.cfg``.
"""

import os
import shutil

from tqdm import tqdm

import settings.paths as paths
from settings.config import parse_config


def delete_config(folder):
    """Delete existing config files if user confirms"""

    if os.path.exists(folder):
        erase = input("Do you want to erase the config folder first? "
                      "('y' or 'yes')")
        if erase in ("y", "yes"):
            shutil.rmtree(folder)
            print("Done!")
        else:
            print("I keep everything as it is")


def write_config(folder, name, **values):
    """Write ``name``.cfg; the text is parsed back before being kept"""

    values.setdefault("run_name", name)
    text = "".join(f"{k}={v}\n" for k, v in values.items())
    parse_config(text)

    path = os.path.join(folder, f"{name}.cfg")
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"# {name}\n")
        f.write(text)
    return path


def experiments():
    """(name, values) of every experiment config"""

    # -------------     SET PARAM HERE      ------------------------ #

    yield "taylor-green", dict(grid_n=64, t_end=0.05, preset="taylor-green",
                               forcing="none", cadence=1, dt_max=1e-4)

    for n in (64, 128, 256):
        yield f"rho-stripe-n{n}", dict(grid_n=n, t_end=2.0,
                                       preset="rho-stripe", cadence=10)

    yield "rho-stripe-growth", dict(grid_n=256, preset="rho-stripe",
                                    amplitude=4e6, perturbation=1.0,
                                    t_end=0.02, cadence=10)

    for n in (64, 128):
        yield f"forced-ns-n{n}", dict(grid_n=n, t_end=20.0, preset="zero",
                                      forcing="curl_forced",
                                      forcing_amplitude=1.0,
                                      forcing_lambda=0.5, cadence=10)

    yield "nonzero-mean", dict(grid_n=128, t_end=2.0, preset="rho-stripe",
                               rho_mean=0.5, nonzero_mean="true", cadence=10)

    for seed in range(4):
        yield f"random-seed{seed}", dict(grid_n=128, t_end=1.0,
                                         preset="random-bandlimited",
                                         seed=seed, cadence=10)


def main():

    folder = paths.EXPERIMENT_CONFIG_DIR
    delete_config(folder)
    paths.make_dirs()

    print("Generating config files...")
    for name, values in tqdm(list(experiments())):
        write_config(folder, name, **values)
    print(f"Config files written in {folder}")


if __name__ == "__main__":
    main()
