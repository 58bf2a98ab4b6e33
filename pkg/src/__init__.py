"""
Wire Thermo - Circuit decomposition of steady-state quantum thermal machines
Main package initialization
"""

__version__ = "1.0.0"
__author__ = "Wire Thermo Team"
__description__ = "Rate-graph circuit analysis of wire-coupled three-level refrigerators and engines"
