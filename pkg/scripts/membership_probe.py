#!/usr/bin/env python3
"""Probe the image of the weighted evaluation map on a fixed fan.

Draws random integer ray functions of nonnegative degree and asks the
membership decision procedure for each: member (with a verified witness
polynomial), proven non-member, or inconclusive at the search bound.
"""

import argparse
import json
import random
from collections import Counter
from dataclasses import dataclass

from tropfan import (
    Inconclusive,
    RayFunction,
    WeightedFan,
    eval_map,
    image_membership,
    standard_model,
)


@dataclass
class ProbeConfig:
    seed: int = 11
    trials: int = 300
    span: int = 8          # values drawn from [-span, span]
    bound: int = 64        # |z|_inf cap for the per-ray exponent search
    fan_path: str = ""     # JSON file; empty -> standard model L_{n,r}
    n: int = 2
    r: int = 3


def load_fan(cfg: ProbeConfig) -> WeightedFan:
    if cfg.fan_path:
        with open(cfg.fan_path) as fh:
            return WeightedFan.from_json(json.load(fh))
    return standard_model(cfg.n, cfg.r)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=ProbeConfig.seed)
    ap.add_argument("--trials", type=int, default=ProbeConfig.trials)
    ap.add_argument("--span", type=int, default=ProbeConfig.span)
    ap.add_argument("--bound", type=int, default=ProbeConfig.bound)
    ap.add_argument("--fan", default="", help="path to a fan JSON file")
    ap.add_argument("-n", type=int, default=ProbeConfig.n)
    ap.add_argument("-r", type=int, default=ProbeConfig.r)
    a = ap.parse_args()
    cfg = ProbeConfig(a.seed, a.trials, a.span, a.bound, a.fan, a.n, a.r)

    X = load_fan(cfg)
    rng = random.Random(cfg.seed)
    k = len(X.rays)
    tally = Counter()
    witness_terms = []
    for _ in range(cfg.trials):
        vals = [rng.randint(-cfg.span, cfg.span) for _ in range(k)]
        if sum(vals) < 0:
            vals[rng.randrange(k)] -= sum(vals)  # lift to degree >= 0
        G = RayFunction(X, tuple(vals))
        try:
            w = image_membership(X, G, bound=cfg.bound)
        except Inconclusive:
            tally["inconclusive"] += 1
            continue
        if w is None:
            tally["non-member"] += 1
        else:
            assert eval_map(X, w) == G
            tally["member"] += 1
            witness_terms.append(len(w.terms))

    print(f"fan: {cfg.fan_path or f'L_{{{cfg.n},{cfg.r}}}'}  rays={k}  bound={cfg.bound}")
    print(f"degree >= 0 samples: {cfg.trials}")
    for key in ("member", "non-member", "inconclusive"):
        print(f"  {key:12s} {tally[key]:5d}  ({100.0 * tally[key] / cfg.trials:.1f}%)")
    if witness_terms:
        print(
            f"  witness terms: min={min(witness_terms)} "
            f"max={max(witness_terms)} "
            f"mean={sum(witness_terms) / len(witness_terms):.2f}"
        )


if __name__ == "__main__":
    main()
