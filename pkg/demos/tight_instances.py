"""Solve the two smallest graphs that meet the (n-2)/4 bound with equality.

Run with ``python3 demos/tight_instances.py``.
"""

from powerdom.exact import gamma_p_exact
from powerdom.generators import named
from powerdom.monitor import format_trace, monitor
from powerdom.solver import power_dominate

for tag in ("octahedron", "triakis"):
    g = named(tag)
    report = power_dominate(g)
    exact = gamma_p_exact(g)
    print(f"{tag}: n={g.n} bound={report.bound:.2f} constructive={report.S} exact={exact.gamma_p}")
    print("  stages:", report.provenance)
    for line in format_trace(monitor(g, report.S).trace).splitlines():
        print("   ", line)
