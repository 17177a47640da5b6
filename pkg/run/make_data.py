import logging
import time
from dataclasses import dataclass

import pandas as pd
from tqdm import tqdm

from analysis.record import DiagnosticsRecord, evaluate, is_under_resolved
from model.exceptions import BlowUpError
from model.solver.initial import initial_data
from model.solver.integrator import choose_dt, step
from model.spectral.field import Grid

logger = logging.getLogger(__name__)

T_END = "t_end"
UNDER_RESOLVED = "under_resolved"
BLOW_UP = "blow_up"

END_SNAP = 1e-12


@dataclass(frozen=True)
class RunSummary:

    final_t: float
    stop_reason: str
    steps: int
    n_records: int
    wall_seconds: float

    @property
    def blew_up(self):
        return self.stop_reason == BLOW_UP

    def lines(self):
        return (f"stop_reason={self.stop_reason}\n"
                f"steps={self.steps}\n"
                f"final_t={self.final_t:.12e}\n"
                f"records={self.n_records}\n"
                f"wall_seconds={self.wall_seconds:.3f}\n")


def initial_state(config):
    return initial_data(config.preset, Grid(config.grid_n),
                        seed=config.seed,
                        amplitude=config.amplitude,
                        perturbation=config.perturbation,
                        rho_mean=config.rho_mean)


def run(config, sink=None, with_tqdm=False):
    """
    Integrate from the initial data to t_end, handing a DiagnosticsRecord
    to ``sink`` at step 0, every ``cadence`` steps and at the last step.
    Stops early when the density spectrum reaches the grid scale or on
    blow-up; neither raises.
    """

    start = time.perf_counter()

    forcing = config.forcing_spec()
    policy = config.step_policy()
    state = initial_state(config)

    logger.info(f"run {config.run_name}: n={config.grid_n} "
                f"preset={config.preset} {forcing} t_end={config.t_end}")

    n_records = 0
    emitted_at = None

    def emit(s, dt_used):
        """Record for ``s``, or None if the diagnostics overflow"""
        nonlocal n_records, emitted_at
        emitted_at = s.t
        try:
            record = evaluate(s, forcing, config.p_list, dt_used)
        except BlowUpError as e:
            logger.warning(f"blow-up in diagnostics: {e}")
            return None
        if sink is not None:
            sink(record)
        n_records += 1
        logger.debug(f"t={s.t:.6e} dt={dt_used:.3e} l2_u={record.l2_u:.6e} "
                     f"tail={record.tail_fraction_rho:.3e}")
        return record

    def stop_reason(record):
        if record is None:
            return BLOW_UP
        elif is_under_resolved(record.tail_fraction_rho):
            return UNDER_RESOLVED
        return T_END

    reason = stop_reason(emit(state, 0.0))

    if with_tqdm:
        pbar = tqdm(total=config.t_end)

    steps = 0
    dt = 0.0
    while reason == T_END and state.t < config.t_end:

        dt = choose_dt(state, policy)
        if dt <= 0:
            break
        try:
            new = step(state, dt, forcing)
        except BlowUpError as e:
            logger.warning(f"blow-up: {e}")
            reason = BLOW_UP
            break

        steps += 1
        if config.t_end - new.t <= END_SNAP * max(1.0, config.t_end):
            new = new.at(config.t_end)
        if with_tqdm:
            pbar.update(new.t - state.t)
        state = new

        if steps % config.cadence == 0 or state.t >= config.t_end:
            reason = stop_reason(emit(state, dt))

    if with_tqdm:
        pbar.close()

    # Last state reached, including the last finite one before a blow-up
    if emitted_at != state.t:
        emit(state, dt)

    summary = RunSummary(final_t=state.t, stop_reason=reason, steps=steps,
                         n_records=n_records,
                         wall_seconds=time.perf_counter() - start)
    logger.info(f"run {config.run_name} stopped: {reason} at "
                f"t={state.t:.6e} after {steps} steps")
    return summary


def run_to_frame(config, with_tqdm=False):

    rows = []
    summary = run(config, sink=lambda r: rows.append(r.as_row()),
                  with_tqdm=with_tqdm)
    df = pd.DataFrame(rows, columns=DiagnosticsRecord.columns(config.p_list))
    return df, summary
