"""Node-density, jamming-region and jamming-radius sweeps.

Trials are kept low so this finishes in well under a minute; raise
``TRIALS`` (the CLI default is 500) for smoother numbers.

Run with ``python demos/04_monte_carlo_sweeps.py``.
"""

import dataclasses
import sys

from jamloc.experiment import ScenarioConfig, compare, sweep, write_sweep_csv
from jamloc.localizers import CompensationMode

TRIALS = 100

base = ScenarioConfig(trials=TRIALS, master_seed=2024, gjl_mode=CompensationMode.GEOMETRIC_D0)

rows = sweep(base, "density", [50, 100, 150, 200])
rows += sweep(base, "region", ["center", "edge", "corner"])
rows += sweep(base, "radius", [20, 30, 40])
write_sweep_csv(rows, sys.stdout)

# Both offset formulas against the centroid at 100 nodes.
summaries, ratios = compare(dataclasses.replace(base, trials=TRIALS))
print()
for s in summaries:
    mode = s.mode.value if s.mode else ""
    print(f"{s.method.value:4s} {mode:10s} mean error {s.mean_error:7.3f} m")
for mode, r in ratios.items():
    print(f"GJL({mode}) / CL = {r:.3f}")
