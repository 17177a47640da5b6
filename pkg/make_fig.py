import os
from string import ascii_uppercase

import matplotlib.pyplot as plt
import numpy as np
import seaborn as sns

import explo_forced
import explo_growth
import settings.paths as paths


def growth_panel(ax, df):

    window = explo_growth.resolved_window(df)
    sns.lineplot(x="t", y="h1_rho", data=df, ax=ax, color="C0")
    ax.axvspan(*window, color="0.9", zorder=0)
    ax.set_yscale("log")
    ax.set_ylabel(r"$\Vert\rho\Vert_{H^1}$")


def lp_panel(ax, df, p_list=(2, 4, 8, 16)):

    long = df.melt(id_vars="t",
                   value_vars=[f"lp_omega_{p}" for p in p_list],
                   var_name="p", value_name="norm")
    long["p"] = long["p"].str.replace("lp_omega_", "")
    sns.lineplot(x="t", y="norm", hue="p", data=long, ax=ax)
    ax.set_ylabel(r"$\Vert\omega\Vert_{L^p}$")


def profile_panel(ax, df, p_list=(2, 4, 8, 16)):
    """p^(-3/2) |grad omega|_Lp at the last record"""

    last = df.iloc[-1]
    values = [p ** -1.5 * last[f"lp_grad_omega_{p}"] for p in p_list]
    sns.scatterplot(x=np.array(p_list), y=values, ax=ax, color="C2")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("p")
    ax.set_ylabel(r"$p^{-3/2}\Vert\nabla\omega\Vert_{L^p}$")


def tail_panel(ax, df):
    sns.lineplot(x="t", y="tail_fraction_rho", data=df, ax=ax, color="C3")
    ax.set_yscale("symlog", linthresh=1e-12)
    ax.set_ylabel("tail fraction")


def main():

    growth = explo_growth.get_data()
    forced = explo_forced.get_data(128)

    fig, axes = plt.subplots(nrows=2, ncols=2, figsize=(9, 7))
    axes = axes.flatten()

    growth_panel(axes[0], growth)
    tail_panel(axes[1], growth)
    lp_panel(axes[2], forced)
    profile_panel(axes[3], growth)

    for i, ax in enumerate(axes):
        ax.text(-0.15, 1.05, ascii_uppercase[i], transform=ax.transAxes,
                fontsize=16, fontweight="bold", va="bottom")

    fig.tight_layout()
    paths.make_dirs()
    fig_path = os.path.join(paths.FIG_DIR, "experiments.pdf")
    plt.savefig(fig_path)
    print(f"Figure saved at: {fig_path}")


if __name__ == "__main__":
    main()
