"""Check that bispecial factors are generated from a finite initial set by
``u -> phi_R(u)·w``, for a list of primitive marked morphisms.

    python scripts/bispecial_orbits.py "0->0110;1->1001" "a->bbaba;b->bba" --max-len 80
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Optional

from palmorph.factors import phi_orbit
from palmorph.notation import parse_morphism


@dataclass(frozen=True)
class OrbitConfig:
    specs: tuple[str, ...] = ("0->0110;1->1001", "a->bbaba;b->bba", "0->01;1->0")
    max_len: int = 60
    seed_bound: Optional[int] = None


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("specs", nargs="*", default=list(OrbitConfig.specs))
    parser.add_argument("--max-len", type=int, default=OrbitConfig.max_len)
    parser.add_argument("--seed-bound", type=int, default=None)
    args = parser.parse_args()
    cfg = OrbitConfig(tuple(args.specs), args.max_len, args.seed_bound)
    for spec in cfg.specs:
        orbit = phi_orbit(parse_morphism(spec), cfg.max_len, cfg.seed_bound)
        print(f"{spec}: w = {orbit.w!r}, seed bound {orbit.seed_bound}, "
              f"{len(orbit.bispecials)} bispecials up to {cfg.max_len}")
        print(f"  initial: {orbit.initial}")
        print(f"  misses: {orbit.misses}  not bispecial: {orbit.not_bispecial}  "
              f"speciality violations: {orbit.speciality_violations}")


if __name__ == "__main__":
    main()
