"""Agreement of the five class-P conjugacy conditions on random morphisms.

    python scripts/conjugacy_battery.py --samples 5000 --max-letters 4 --max-image 5
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from palmorph.classp import class_p_conjugacy_report
from palmorph.morphism import Morphism, is_cyclic
from palmorph.words import Alphabet


@dataclass(frozen=True)
class BatteryConfig:
    samples: int = 1000
    min_letters: int = 2
    max_letters: int = 4
    max_image: int = 5
    seed: int = 0


def random_acyclic(rng: random.Random, cfg: BatteryConfig) -> Morphism:
    while True:
        d = rng.randint(cfg.min_letters, cfg.max_letters)
        letters = "abcdefgh"[:d]
        images = tuple("".join(rng.choice(letters) for _ in range(rng.randint(1, cfg.max_image)))
                       for _ in range(d))
        phi = Morphism(Alphabet(tuple(letters)), images)
        if not is_cyclic(phi):
            return phi


def run_battery(cfg: BatteryConfig) -> dict:
    rng = random.Random(cfg.seed)
    patterns = Counter()
    disagreements = []
    t0 = time.perf_counter()
    for _ in range(cfg.samples):
        phi = random_acyclic(rng, cfg)
        r = class_p_conjugacy_report(phi)
        patterns[r.conditions] += 1
        if not r.consistent:
            disagreements.append((str(phi), r.conditions))
    return {"patterns": patterns, "disagreements": disagreements,
            "seconds": time.perf_counter() - t0}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(BatteryConfig()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = BatteryConfig(**vars(parser.parse_args()))
    result = run_battery(cfg)
    print(f"{cfg}")
    for pattern, count in sorted(result["patterns"].items(), key=lambda kv: -kv[1]):
        print(f"  {' '.join('T' if c else 'F' for c in pattern)}  {count}")
    print(f"disagreements: {len(result['disagreements'])}")
    for spec, conds in result["disagreements"][:20]:
        print(f"  {spec}  {conds}")
    print(f"elapsed: {result['seconds']:.2f} s")


if __name__ == "__main__":
    main()
