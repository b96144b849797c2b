"""The two chord-offset formulas side by side.

With equal powers at both ends of a chord the jammer sits on the bisector,
so the offset should vanish. The "paper" form still shifts by d12/3; the
"geometric" form gives zero and tends to d12 as the power gap grows.

Run with ``python demos/03_compensation_modes.py``.
"""

from jamloc.localizers import CompensationMode, compensation_delta

d12 = 12.0
print(f"chord length {d12} m")
print(f"{'gap dB':>7s} {'k':>8s} {'paper':>8s} {'geometric':>10s}")
for gap in (0.0, 1.0, 3.0, 6.0, 10.0, 20.0, 40.0):
    k = 10 ** (gap / 20)
    paper = compensation_delta(0.0, gap, d12, CompensationMode.PAPER_EQ8)
    geo = compensation_delta(0.0, gap, d12, CompensationMode.GEOMETRIC_D0)
    print(f"{gap:7.1f} {k:8.3f} {paper:8.3f} {geo:10.3f}")
