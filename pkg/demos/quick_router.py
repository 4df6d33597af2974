"""Train a small router for a few hundred epochs and show the gate program it finds.

About ten seconds on one core. Full-size training is `gwadd train-router`.
"""

import numpy as np

from gwadd.data import make_split
from gwadd.training import TrainConfig, train
from gwadd.workspace import follows_program

GATE_NAMES = "VOD"


def main(epochs: int = 400) -> None:
    split = make_split("1-9→1-9", seed=0)
    cfg = TrainConfig.for_model("gw", hidden=32, epochs=epochs, lr=1e-2)
    out = train(cfg, split.train_batch(), log_every=100)
    test = split.test_batch()
    res = out.model.evaluate(test)
    print(f"best train loss {out.best_loss:.3f} at epoch {out.best_epoch}")
    print(f"test accuracy {res.accuracy():.3f}")
    progs = res.gate_program()
    ok = np.mean([follows_program(p, a) for p, a in zip(progs, test.a_left)])
    print(f"share of test pairs following V, O x A_L, D: {ok:.2f}")
    for a, p in sorted(zip(test.a_left, progs), key=lambda x: x[0])[::3]:
        print(f"A_L={a}: " + "".join(GATE_NAMES[g] for g in p))


if __name__ == "__main__":
    import logging
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    main()
