"""One jammed field, step by step: deploy, classify, observe, localize.

Run with ``python demos/02_single_jammed_field.py``.
"""

from collections import Counter

import numpy as np

from jamloc.geometry import Point2D
from jamloc.localizers import CompensationMode, Method, localization_error, localize
from jamloc.network import FieldConfig, Jammer, classify_nodes, generate_field, observe_boundary
from jamloc.propagation import RadioParams

# 150 sensors on a 100 x 100 m field.
nodes = generate_field(FieldConfig(node_count=150, placement_seed=11))

# A jammer of radius 30 m; nodes within 10 m of the rim still talk to the outside.
radio = RadioParams(node_comm_range=10.0, shadowing_sigma=0.0)
jammer = Jammer(Point2D(47.0, 53.0), radius=30.0, radio=radio)

classes = classify_nodes(nodes, jammer)
print("node classes:", dict(Counter(c.value for c in classes.values())))

# Boundary nodes report the jamming power they sense.
observations = observe_boundary(nodes, jammer, np.random.default_rng(0), classes)
for o in observations[:5]:
    print(f"  node {o.node_id:3d} at ({o.position.x:6.2f}, {o.position.y:6.2f}) "
          f"senses {o.received_power:7.3f} dBm")

for method, mode in [(Method.CL, None), (Method.CJ, None),
                     (Method.GJL, CompensationMode.PAPER_EQ8),
                     (Method.GJL, CompensationMode.GEOMETRIC_D0)]:
    est = localize(observations, method, mode or CompensationMode.PAPER_EQ8)
    label = method.value + (f"/{mode.value}" if mode else "")
    print(f"{label:14s} -> ({est.x:6.2f}, {est.y:6.2f}), error "
          f"{localization_error(est, jammer.position):.4f} m")

# GJL keeps its construction for inspection.
est = localize(observations, Method.GJL, CompensationMode.GEOMETRIC_D0)
for i, chord in enumerate(est.diagnostics.chords, 1):
    print(f"chord {i}: nodes {chord.node_1.node_id}->{chord.node_2.node_id}, "
          f"d12 {chord.d_12:.2f} m, k {chord.k:.4f}, offset {chord.delta_l:.3f} m, t {chord.t:.4f}")
