"""
Runner - CLI
Command dispatch: builds the model, runs one command and writes its table
"""

import math
from collections import Counter
from typing import Callable, Dict, List, Optional

import click
import numpy as np
import pandas as pd

from .emitters import OutputTable, remove_partial, render, write_output
from .run_config import RunConfig
from ..analysis.breakdown import group_contributions, rank_circuits
from ..analysis.performance import carnot_bounds
from ..analysis.sweep import sweep, sweep_frame
from ..circuit_thermo.cycle_analysis import HEAT_LEAK, TRICYCLE, TRIVIAL, circuit_reports, classify
from ..circuit_thermo.reconciliation import RECONCILIATION_TOLERANCE, total_currents
from ..circuit_thermo.steady_state import analyze_steady_state, relaxed_populations
from ..graph_core.circuits import enumerate_circuits, enumerate_circuits_oracle
from ..models.crosscheck import eigen_crosscheck
from ..models.registry import get_model
from ..utils.errors import CrosscheckError, WireThermoError
from ..utils.logger import get_logger

EIGEN_FREQUENCY_TOLERANCE = 1e-12
EIGEN_COUPLING_TOLERANCE = 1e-10
RELAXATION_TOLERANCE = 1e-9
CROSSCHECK_MODELS = ("absorption_wire", "driven_wire")


def census_line(census: Dict[str, int]) -> str:
    return (
        f"total={census['total']} tricycles={census['tricycles']} "
        f"heat_leaks={census['heat_leaks']} trivial={census['trivial']}"
    )


class CommandRunner:
    """Runs one configured command against one model."""

    def __init__(self, config: RunConfig):
        """
        Initialize command runner.

        Args:
            config: Validated run configuration
        """
        self.config = config
        self.spec = get_model(config.model)
        self.logger = get_logger(__name__)
        self._commands: Dict[str, Callable[[], OutputTable]] = {
            "enumerate": self._enumerate,
            "steady": self._steady,
            "circuits": self._circuits,
            "sweep": self._sweep,
            "representatives": self._sweep,
            "crosscheck": self._crosscheck,
        }
        self.logger.info(f"CommandRunner initialized: {config.command} on {config.model}")

    def execute(self) -> OutputTable:
        """Run the configured command and return its table."""
        return self._commands[self.config.command]()

    def _table(self, frame: pd.DataFrame, summary: Dict) -> OutputTable:
        return OutputTable(self.config.model, self.config.command, frame, summary)

    def _build(self):
        build = self.spec.builder(self.config.params)
        for message in build.warnings:
            self.logger.warning(message)
        return build.graph

    def _enumerate(self) -> OutputTable:
        graph = self._build()
        circuits = enumerate_circuits(graph)
        edges = graph.edge_map()

        rows = []
        classes = Counter()
        by_length: Dict[str, Dict[str, int]] = {}
        for index, circuit in enumerate(circuits, start=1):
            circuit_class = classify(circuit, graph)
            classes[circuit_class] += 1
            bucket = by_length.setdefault(str(len(circuit)), {})
            bucket[circuit_class] = bucket.get(circuit_class, 0) + 1
            rows.append({
                "index": index,
                "label": circuit.label(graph),
                "length": len(circuit),
                "vertices": "-".join(str(v) for v in circuit.vertex_seq),
                "edges": "-".join(str(e) for e in circuit.edge_ids),
                "baths": "".join(edges[e].bath for e in circuit.edge_ids),
                "class": circuit_class,
            })

        census = {
            "total": len(circuits),
            "tricycles": classes[TRICYCLE],
            "heat_leaks": classes[HEAT_LEAK],
            "trivial": classes[TRIVIAL],
        }
        self.logger.info(f"Census {self.config.model}: {census_line(census)}")
        columns = ["index", "label", "length", "vertices", "edges", "baths", "class"]
        return self._table(pd.DataFrame(rows, columns=columns), {"census": census, "by_length": by_length})

    def _bath_columns(self) -> List[str]:
        return list(self.spec.thermal_baths)

    def _steady(self) -> OutputTable:
        graph = self._build()
        steady = analyze_steady_state(graph)

        rows = [(f"p{v.index}", float(p)) for v, p in zip(graph.vertices, steady.populations)]
        rows.append(("D", steady.normalization))
        rows += [(f"Q{b}", steady.per_bath_currents[b]) for b in self._bath_columns()]
        if steady.power is not None:
            rows.append(("P", steady.power))
        rows.append(("S", steady.entropy_rate))

        summary = {"omega_c": self.config.params.omega_c, "vertices": graph.size, "edges": len(graph.edges)}
        return self._table(pd.DataFrame(rows, columns=["quantity", "value"]), summary)

    def _circuits(self) -> OutputTable:
        graph = self._build()
        circuits = enumerate_circuits(graph)
        steady = analyze_steady_state(graph)
        reports = circuit_reports(circuits, graph, steady)
        totals = total_currents(graph, circuits, steady, reports)
        baths = self._bath_columns()

        rows = []
        for report in reports:
            row = {
                "label": report.label,
                "length": report.length,
                "class": report.circuit_class,
                "flux": report.flux,
                "X": report.affinities.total,
            }
            row.update({f"X_{b}": report.affinities.per_bath.get(b, 0.0) for b in baths})
            row.update({f"Q{b}": report.heat.get(b, 0.0) for b in baths})
            if self.spec.driven:
                row["P"] = report.power
            row["S"] = report.entropy
            row["minor_det"] = report.minor_det
            rows.append(row)

        columns = ["label", "length", "class", "flux", "X"] + [f"X_{b}" for b in baths]
        columns += [f"Q{b}" for b in baths] + (["P"] if self.spec.driven else []) + ["S", "minor_det"]

        groups = {
            f"{circuit_class}/{length}": values
            for (circuit_class, length), values in group_contributions(reports, with_power=self.spec.driven).items()
        }
        summary = {
            "omega_c": self.config.params.omega_c,
            "circuit_heat": totals.circuit_heat,
            "direct_heat": totals.direct_heat,
            "circuit_power": totals.circuit_power,
            "direct_power": totals.direct_power,
            "circuit_entropy": totals.circuit_entropy,
            "direct_entropy": totals.direct_entropy,
            "max_relative_discrepancy": totals.max_relative_discrepancy,
            "groups": groups,
            "dominant_cold": [r.label for r in rank_circuits(reports, "c", top=5)],
        }
        return self._table(pd.DataFrame(rows, columns=columns), summary)

    def _sweep(self) -> OutputTable:
        result = sweep(self.config.sweep_spec())
        frame = sweep_frame(result)
        successful = result.successful()

        summary: Dict = {
            "points": len(result.points),
            "failed": len(result.points) - len(successful),
            "modes": dict(sorted(Counter(p.mode for p in result.points).items())),
            "carnot": carnot_bounds(self.config.params),
            "max_relative_discrepancy": max((p.max_discrepancy for p in successful), default=math.nan),
        }
        if successful:
            cold = np.array([p.heat["c"] for p in successful])
            best = int(np.argmax(cold))
            summary["max_Qc"] = float(cold[best])
            summary["argmax_Qc"] = successful[best].omega_c
            merits = [p.merit for p in successful if p.merit is not None]
            summary["max_merit"] = max(merits) if merits else None
        if result.representative_labels:
            summary["representatives"] = list(result.representative_labels)
        return self._table(frame, summary)

    def _crosscheck(self) -> OutputTable:
        params = self.config.params
        graph = self._build()
        rows = []

        if self.config.model in CROSSCHECK_MODELS:
            report = eigen_crosscheck(params, raise_on_failure=False)
            rows.append(("eigenfrequencies", report.max_frequency_deviation, EIGEN_FREQUENCY_TOLERANCE))
            rows.append(("couplings", report.max_coupling_deviation, EIGEN_COUPLING_TOLERANCE))

        tree_set = set(enumerate_circuits(graph))
        oracle_set = set(enumerate_circuits_oracle(graph))
        rows.append(("enumerators", float(len(tree_set ^ oracle_set)), 0.0))

        steady = analyze_steady_state(graph)
        circuits = sorted(tree_set, key=lambda c: (len(c), c.vertex_seq, c.edge_ids))
        totals = total_currents(graph, circuits, steady, tolerance=math.inf)
        rows.append(("reconciliation", totals.max_relative_discrepancy, RECONCILIATION_TOLERANCE))

        relaxed = relaxed_populations(steady.rate_matrix)
        rows.append(("relaxation", float(np.max(np.abs(relaxed - steady.populations))), RELAXATION_TOLERANCE))

        frame = pd.DataFrame(rows, columns=["check", "value", "tolerance"])
        frame["passed"] = frame["value"] <= frame["tolerance"]
        failed = frame.loc[~frame["passed"], "check"].tolist()
        summary = {"omega_c": params.omega_c, "passed": not failed, "failed_checks": failed}
        if self.config.model not in CROSSCHECK_MODELS:
            summary["eigen_crosscheck"] = "not applicable"
        return self._table(frame, summary)


def run(config: RunConfig, echo: Callable[[str], None] = click.echo) -> int:
    """
    Execute a run and write its output.

    The table goes to config.output_path, or to stdout when no path is set.
    enumerate prints its census line; a failed crosscheck keeps its report
    and exits with status 3.

    Args:
        config: Validated run configuration
        echo: Sink for stdout lines

    Returns:
        Process exit status
    """
    logger = get_logger(__name__)
    written: Optional[str] = None
    try:
        table = CommandRunner(config).execute()
        text = render(table, config.output_format)
        if config.output_path:
            write_output(text, config.output_path)
            written = config.output_path
        else:
            echo(text.rstrip("\n"))

        if config.command == "enumerate":
            echo(census_line(table.summary["census"]))
        if config.command == "crosscheck" and not table.summary["passed"]:
            raise CrosscheckError(f"crosscheck failed: {', '.join(table.summary['failed_checks'])}")
    except CrosscheckError as e:
        logger.error(str(e))
        return e.exit_code
    except WireThermoError as e:
        logger.error(f"{config.command} failed: {e}")
        remove_partial(written)
        return e.exit_code

    return 0
