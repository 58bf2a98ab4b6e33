"""
Breakdown - Analysis
Grouped and ranked circuit contributions at one operating point
"""

from typing import Dict, List, Sequence, Tuple

from ..circuit_thermo.cycle_analysis import CircuitReport


def group_contributions(
    reports: Sequence[CircuitReport], with_power: bool = False
) -> Dict[Tuple[str, int], Dict[str, float]]:
    """
    Sum circuit heat currents per (class, length) group.

    Args:
        reports: Circuit reports of one steady state
        with_power: Also sum P(C), for devices driven by a work source

    Returns:
        {(circuit_class, length): {bath: summed Q̇}}, with a "power" entry
        when requested
    """
    groups: Dict[Tuple[str, int], Dict[str, float]] = {}
    for report in reports:
        bucket = groups.setdefault((report.circuit_class, report.length), {})
        for bath, q in report.heat.items():
            bucket[bath] = bucket.get(bath, 0.0) + q
        if with_power:
            bucket["power"] = bucket.get("power", 0.0) + report.power
    return dict(sorted(groups.items()))


def rank_circuits(reports: Sequence[CircuitReport], bath: str = "c", top: int = 5) -> List[CircuitReport]:
    """Largest |Q̇_bath(C)| first; ties broken by label."""
    if top < 1:
        raise ValueError("top must be at least 1")
    ranked = sorted(reports, key=lambda r: (-abs(r.heat.get(bath, 0.0)), r.label))
    return ranked[:top]
