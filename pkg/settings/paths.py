"""Project paths settings"""

import os

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

FIG_DIR = os.path.join(BASE_DIR, "fig")

CONFIG_DIR = os.path.join(BASE_DIR, "config")

EXPERIMENT_CONFIG_DIR = os.path.join(CONFIG_DIR, "experiments")

DATA_DIR = os.path.join(BASE_DIR, "data")


def make_dirs():
    for directory in FIG_DIR, EXPERIMENT_CONFIG_DIR, DATA_DIR:
        os.makedirs(directory, exist_ok=True)
