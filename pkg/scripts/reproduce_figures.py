#!/usr/bin/env python3
"""
Figure Data Script
Writes the curve data behind the wire-machine figures as CSV tables
"""

import sys
from pathlib import Path

import click
import pandas as pd

# Add project root to path
sys.path.append(str(Path(__file__).parent.parent))

from src.analysis.characteristics import performance_characteristic
from src.analysis.limits import cooling_window_bounds, limit_frequencies_driven
from src.analysis.performance import ENGINE, REFRIGERATOR
from src.analysis.sweep import SweepSpec, sweep, sweep_frame
from src.cli.emitters import OutputTable, emit_csv, write_output
from src.models.absorption_wire import AbsorptionWireParams
from src.models.driven_wire import DrivenWireParams
from src.models.registry import get_model
from src.models.three_level import DirectThreeLevelParams
from src.utils.errors import ModelError
from src.utils.logger import get_logger, setup_logging

logger = get_logger(__name__)


def _characteristic_frame(curve) -> pd.DataFrame:
    return pd.DataFrame({
        "omega_c": curve.omega_c,
        "merit": curve.merit,
        "merit_over_carnot": curve.merit / curve.carnot,
        "normalized_flux": curve.normalized_flux,
    })


def _limits_frame(limits) -> pd.DataFrame:
    rows = [(l.name, l.circuit.vertex_seq, l.closed_form, l.bisection, l.deviation) for l in limits]
    frame = pd.DataFrame(rows, columns=["name", "vertices", "closed_form", "bisection", "deviation"])
    frame["vertices"] = frame["vertices"].map(lambda seq: "-".join(str(v) for v in seq))
    return frame


def _write(frame: pd.DataFrame, path: Path) -> None:
    write_output(emit_csv(OutputTable("figure_data", path.stem, frame)), str(path))
    click.echo(f"  {path.name}")


def absorption_figures(out_dir: Path, points: int) -> None:
    """Cooling currents of the wire and direct absorption machines, circuit limits and characteristics."""
    params = AbsorptionWireParams()
    lo, hi = get_model("absorption_wire").sweep_range
    outputs = frozenset({"totals", "circuits", "representatives"})
    wire = sweep(SweepSpec(params, lo, hi, points, outputs))
    direct = sweep(SweepSpec(DirectThreeLevelParams(), lo, hi, points))

    _write(sweep_frame(wire), out_dir / "absorption_wire_sweep.csv")
    _write(sweep_frame(direct), out_dir / "direct_three_level_sweep.csv")

    window = cooling_window_bounds(params)
    _write(_limits_frame(window.limits), out_dir / "absorption_wire_limits.csv")
    logger.info(
        f"ω_rev = {window.omega_rev:.6f}, dissipation interval "
        f"[{window.dissipation_interval[0]:.6f}, {window.dissipation_interval[1]:.6f}]"
    )

    for source in ("total", "representatives"):
        curve = performance_characteristic(wire, mode=REFRIGERATOR, source=source)
        _write(_characteristic_frame(curve), out_dir / f"absorption_wire_characteristic_{source}.csv")
    curve = performance_characteristic(direct, mode=REFRIGERATOR)
    _write(_characteristic_frame(curve), out_dir / "direct_three_level_characteristic.csv")


def driven_figures(out_dir: Path, points: int) -> None:
    """Heat and power of the driven wire machine, its limit frequencies and both characteristics."""
    params = DrivenWireParams()
    lo, hi = get_model("driven_wire").sweep_range
    result = sweep(SweepSpec(params, lo, hi, points, frozenset({"totals", "representatives"})))
    _write(sweep_frame(result), out_dir / "driven_wire_sweep.csv")

    report = limit_frequencies_driven(params)
    _write(_limits_frame(report.two_edge + report.four_edge), out_dir / "driven_wire_limits.csv")
    logger.info(
        f"ω_c,max = {report.omega_c_max:.6f}, η_C = {report.eta_carnot:.4f}, "
        f"ε_C = {report.cop_carnot:.4f}, half-width = {report.halfwidth:.6f}"
    )

    for mode in (REFRIGERATOR, ENGINE):
        for source in ("total", "representatives"):
            try:
                curve = performance_characteristic(result, mode=mode, source=source)
            except ModelError as e:
                logger.warning(f"No {mode} characteristic from {source} currents: {e}")
                continue
            _write(_characteristic_frame(curve), out_dir / f"driven_wire_{mode}_{source}.csv")


@click.command()
@click.option("--out-dir", default="figure_data", type=click.Path(file_okay=False), help="Directory for the CSV tables")
@click.option("--points", default=200, type=click.IntRange(min=2), help="Sweep points per curve")
@click.option("--log-level", default="INFO", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False))
def main(out_dir, points, log_level):
    """Write the figure data tables for both wire machines."""
    setup_logging(level=log_level)

    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    click.echo(f"Writing figure data to {target}/")

    absorption_figures(target, points)
    driven_figures(target, points)

    click.echo("Done.")


if __name__ == "__main__":
    main()
