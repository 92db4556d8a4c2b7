"""Palindrome census of fixed-point prefixes, compared with the exact decision.

For every entry of a corpus (the bundled one by default) prints the number of
distinct palindromes per length band of a fixed-point prefix next to the
``hks`` verdict.

    python scripts/palindrome_census.py --length 100000 --bound 4096
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from palmorph.classp import HksPreconditionError, hks_verify, prolongable_power
from palmorph.cli import read_corpus
from palmorph.factors import geometric_bands, palindrome_census
from palmorph.morphism import fixed_point_prefix, power
from palmorph.notation import parse_morphism


@dataclass(frozen=True)
class CensusConfig:
    length: int = 20000
    bound: int = 256
    corpus: Optional[str] = None


def census_rows(cfg: CensusConfig):
    if cfg.corpus:
        with open(cfg.corpus, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = resources.files("palmorph").joinpath("data/worked_examples.corpus").read_text()
    bands = geometric_bands(cfg.bound)
    for _, name, spec, err in read_corpus(text):
        if err:
            continue
        phi = parse_morphism(spec)
        try:
            verdict = "yes" if hks_verify(phi).palindromic else "no"
        except HksPreconditionError:
            verdict = "n/a"
        try:
            j, letter = prolongable_power(phi)
            t0 = time.perf_counter()
            census = palindrome_census(fixed_point_prefix(power(phi, j), letter, cfg.length), bands)
            yield name, verdict, census.counts, census.distinct, time.perf_counter() - t0
        except ValueError as exc:
            yield name, verdict, None, None, str(exc)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--length", type=int, default=CensusConfig.length)
    parser.add_argument("--bound", type=int, default=CensusConfig.bound)
    parser.add_argument("--corpus", default=None)
    cfg = CensusConfig(**vars(parser.parse_args()))
    header = [f"[{lo},{hi})" for lo, hi in geometric_bands(cfg.bound)]
    print(f"{'name':18} {'hks':4} {'distinct':>8}  " + " ".join(f"{h:>10}" for h in header))
    for name, verdict, counts, distinct, extra in census_rows(cfg):
        if counts is None:
            print(f"{name:18} {verdict:4} skipped: {extra}")
            continue
        print(f"{name:18} {verdict:4} {distinct:>8}  " + " ".join(f"{c:>10}" for c in counts)
              + f"   {extra:.2f} s")


if __name__ == "__main__":
    main()
