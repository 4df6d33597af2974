"""Step through the one-hot workspace with hand-set gates and print what it holds.

    python demos/oracle_trace.py 4 7
"""

import sys

import numpy as np

from gwadd.data import AdditionBatch
from gwadd.workspace import GlobalWorkspace, oracle_gate_batch

GATE_NAMES = "VOD"


def main(a_left: int = 4, a_right: int = 7, horizon: int = 12) -> None:
    batch = AdditionBatch.from_pairs([(a_left, a_right)])
    res = GlobalWorkspace.one_hot().evaluate(batch, horizon,
                                             gates=oracle_gate_batch([a_left], horizon),
                                             hidden_source="gw")
    print(f"{a_left} + {a_right} (mod 10) = {(a_left + a_right) % 10}")
    print(" t  gate  workspace digit  output digit")
    for t in range(horizon):
        gate = GATE_NAMES[res.gates[0, t].argmax()]
        gw = res.hidden[0, t]
        held = str(gw.argmax()) if np.any(gw) else "-"
        out = res.outputs[0, t]
        said = str(out.argmax()) if np.ptp(out) > 0 else "-"
        print(f"{t:2d}  {gate:>4}  {held:>15}  {said:>12}")


if __name__ == "__main__":
    main(*(int(v) for v in sys.argv[1:3]))
