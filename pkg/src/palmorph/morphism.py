"""Morphisms of the free monoid and their intrinsic classifications."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Optional

import numpy as np

from .words import Alphabet, primitive_root


@dataclass(frozen=True)
class Morphism:
    """A morphism given by the image of every letter of its alphabet.

    ``images[i]`` is the image of ``alphabet.letters[i]``.
    """
    alphabet: Alphabet
    images: tuple[str, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.alphabet):
            raise ValueError("need exactly one image per letter")
        for img in images:
            self.alphabet.check(img)

    @classmethod
    def from_dict(cls, rules: Mapping[str, str], alphabet: Optional[Alphabet] = None) -> "Morphism":
        if alphabet is None:
            alphabet = Alphabet(tuple(rules))
        missing = [a for a in alphabet if a not in rules]
        if missing or len(rules) != len(alphabet):
            raise ValueError(f"rules do not match alphabet (missing {missing})")
        return cls(alphabet, tuple(rules[a] for a in alphabet))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Morphism":
        return cls(alphabet, alphabet.letters)

    def image(self, letter: str) -> str:
        return self.images[self.alphabet.index(letter)]

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.alphabet.letters, self.images))

    def __call__(self, w: str) -> str:
        return apply(self, w)

    def __str__(self):
        return ";".join(f"{a}->{img}" for a, img in zip(self.alphabet, self.images))

    def __repr__(self):
        return f"Morphism({str(self)!r})"


def _same_alphabet(phi: Morphism, psi: Morphism):
    if phi.alphabet != psi.alphabet:
        raise ValueError("morphisms are defined over different alphabets")


def apply(phi: Morphism, w: str) -> str:
    table = phi.as_dict()
    try:
        return "".join([table[c] for c in w])
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} is not in the alphabet of {phi}") from None


def compose(phi: Morphism, psi: Morphism) -> Morphism:
    """The morphism ``x -> phi(psi(x))``."""
    _same_alphabet(phi, psi)
    return Morphism(phi.alphabet, tuple(apply(phi, img) for img in psi.images))


def power(phi: Morphism, k: int) -> Morphism:
    if k < 1:
        raise ValueError("power must be at least 1")
    result = phi
    for _ in range(k - 1):
        result = compose(phi, result)
    return result


def reverse_morphism(phi: Morphism) -> Morphism:
    return Morphism(phi.alphabet, tuple(img[::-1] for img in phi.images))


def incidence_matrix(phi: Morphism) -> np.ndarray:
    """``M[a, b]`` = number of occurrences of letter ``a`` in ``phi(b)``."""
    letters = phi.alphabet.letters
    m = np.zeros((len(letters), len(letters)), dtype=np.int64)
    for b, img in enumerate(phi.images):
        for a, letter in enumerate(letters):
            m[a, b] = img.count(letter)
    return m


def is_erasing(phi: Morphism) -> bool:
    return any(img == "" for img in phi.images)


def cyclic_root(phi: Morphism) -> Optional[str]:
    """The common primitive root of all images if ``phi`` is cyclic, else None.

    A morphism with only empty images is cyclic with root ``""``.
    """
    root = None
    for img in phi.images:
        if not img:
            continue
        r, _ = primitive_root(img)
        if root is None:
            root = r
        elif r != root:
            return None
    return "" if root is None else root


def is_cyclic(phi: Morphism) -> bool:
    return cyclic_root(phi) is not None


def is_primitive(phi: Morphism) -> bool:
    d = len(phi.alphabet)
    reach = incidence_matrix(phi) > 0
    result = reach.copy()
    # Wielandt: a primitive d x d matrix has a positive power of exponent (d-1)^2 + 1.
    for _ in range((d - 1) ** 2):
        result = (result.astype(np.int64) @ reach.astype(np.int64)) > 0
    return bool(result.all())


def _dangling_suffixes(code: set[str]) -> set[str]:
    """Sardinas-Patterson closure: every dangling suffix reachable from the code."""
    found: set[str] = set()
    frontier = [d[len(c):] for c in code for d in code if c != d and d.startswith(c)]
    while frontier:
        s = frontier.pop()
        if s in found:
            continue
        found.add(s)
        if not s:
            break
        for c in code:
            if c.startswith(s):
                frontier.append(c[len(s):])
            elif s.startswith(c):
                frontier.append(s[len(c):])
    return found


def is_uniquely_decodable(code) -> bool:
    code = set(code)
    if "" in code:
        return False
    return "" not in _dangling_suffixes(code)


def is_injective(phi: Morphism) -> bool:
    """Whether ``phi`` is injective on all finite words.

    An erasing morphism is never injective (it sends a letter and the empty
    word to the same image).
    """
    if is_erasing(phi):
        return False
    if len(set(phi.images)) != len(phi.images):
        return False
    return is_uniquely_decodable(phi.images)


def prolongable_letters(phi: Morphism) -> list[str]:
    return [a for a, img in zip(phi.alphabet, phi.images) if len(img) >= 2 and img[0] == a]


def fixed_point_prefix(phi: Morphism, a: str, n: int) -> str:
    """The length-``n`` prefix of the fixed point of ``phi`` starting with ``a``."""
    if a not in prolongable_letters(phi):
        raise ValueError(f"{phi} is not prolongable on {a!r}")
    if n < 0:
        raise ValueError("length must be nonnegative")
    table = phi.as_dict()
    out = list(table[a])
    i = 1
    while len(out) < n:
        if i >= len(out):
            raise ValueError(f"the fixed point of {phi} at {a!r} is finite ({len(out)} letters)")
        out.extend(table[out[i]])
        i += 1
    return "".join(out[:n])


@dataclass(frozen=True)
class PeriodicityCertificate:
    """Outcome of the periodicity test on a fixed point.

    ``exact`` is False when the morphism is not known to be primitive and
    marked; the verdict is then only a best-effort answer.
    """
    periodic: bool
    period_word: Optional[str] = None
    power: Optional[int] = None
    exact: bool = True

    @property
    def kind(self) -> str:
        return "periodic" if self.periodic else "aperiodic"


def periodicity_certificate(phi: Morphism, a: str) -> PeriodicityCertificate:
    from .conjugacy import markedness  # conjugacy builds on this module

    exact = is_primitive(phi) and not is_erasing(phi) and not is_cyclic(phi) \
        and markedness(phi).marked
    d = len(phi.alphabet)
    prefix = fixed_point_prefix(phi, a, d + 1)
    w = prefix[:d]
    if len(set(w)) == d and prefix[d] == prefix[0]:
        img = apply(phi, w)
        k, r = divmod(len(img), d)
        if r == 0 and k >= 1 and img == w * k:
            return PeriodicityCertificate(True, w, k, exact)
    return PeriodicityCertificate(False, exact=exact)


def lcm_up_to(d: int) -> int:
    out = 1
    for i in range(2, d + 1):
        out = out * i // gcd(out, i)
    return out
