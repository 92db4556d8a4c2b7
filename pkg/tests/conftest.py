from __future__ import annotations

from importlib import resources

import pytest
from hypothesis import strategies as st

from palmorph.morphism import Morphism
from palmorph.notation import parse_morphism
from palmorph.words import Alphabet


def load_corpus() -> dict[str, Morphism]:
    text = resources.files("palmorph").joinpath("data/worked_examples.corpus").read_text()
    out = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            name, spec = line.split(":", 1)
            out[name.strip()] = parse_morphism(spec)
    return out


CORPUS = load_corpus()
M = parse_morphism

TM = CORPUS["phi_TM"]
TM2 = CORPUS["phi_TM2"]
FIB = CORPUS["phi_F"]
PSI_F = CORPUS["psi_F"]
PHI = {i: CORPUS[f"phi{i}"] for i in range(1, 8)}
XI = CORPUS["xi"]
CYCLIC = CORPUS["f_cyclic"]
TERNARY = CORPUS["periodic_ternary"]
NON_PRIMITIVE = CORPUS["non_primitive"]


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


def words(alphabet: str = "ab", min_size: int = 0, max_size: int = 12):
    return st.text(alphabet=alphabet, min_size=min_size, max_size=max_size)


def palindromes(alphabet: str = "ab", max_half: int = 6):
    def build(half_and_mid):
        half, mid = half_and_mid
        return half + mid + half[::-1]
    return st.tuples(words(alphabet, 0, max_half),
                     st.sampled_from([""] + list(alphabet))).map(build)


@st.composite
def morphisms(draw, min_letters=2, max_letters=3, min_len=1, max_len=4):
    d = draw(st.integers(min_letters, max_letters))
    letters = "abcd"[:d]
    images = tuple(draw(st.text(alphabet=letters, min_size=min_len, max_size=max_len))
                   for _ in range(d))
    return Morphism(Alphabet(tuple(letters)), images)
