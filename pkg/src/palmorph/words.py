"""Finite-word primitives.

Words are plain Python strings whose characters are letters of an
:class:`Alphabet`.  The alphabet carries the letter order used for every
deterministic tie-break downstream.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("alphabet must contain at least one letter")
        for a in letters:
            if not isinstance(a, str) or len(a) != 1:
                raise ValueError(f"letters must be single characters, got {a!r}")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in alphabet {letters!r}")

    @classmethod
    def from_word(cls, word: Iterable[str]) -> "Alphabet":
        """Alphabet of the letters of ``word`` in order of first appearance."""
        return cls(tuple(dict.fromkeys(word)))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, letter):
        return letter in self.letters

    def index(self, letter: str) -> int:
        return self.letters.index(letter)

    def check(self, word: str) -> str:
        """Return ``word`` unchanged, raising if it uses a foreign letter."""
        bad = set(word) - set(self.letters)
        if bad:
            raise ValueError(
                f"word {word!r} uses letters {sorted(bad)} outside alphabet "
                f"{''.join(self.letters)!r}")
        return word

    def sort_key(self, word: str) -> tuple:
        """Key ordering words by length, then lexicographically in alphabet order."""
        return (len(word), tuple(self.letters.index(c) for c in word))


class OverlapDecomposition(NamedTuple):
    """Solution ``x = uv, w = (uv)^i u, y = vu`` of ``xw = wy``."""
    u: str
    v: str
    i: int


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def kth_right_conjugate(y: str, k: int) -> str:
    """The word ``x`` with ``x·s = s·y`` where ``s`` is the suffix of ``y`` of
    length ``k mod |y|``; i.e. ``y`` with its last ``k`` letters moved to the
    front."""
    if not y:
        raise ValueError("conjugates are defined for nonempty words only")
    if k < 0:
        raise ValueError("k must be nonnegative")
    k %= len(y)
    if k == 0:
        return y
    return y[-k:] + y[:-k]


def primitive_root(w: str) -> tuple[str, int]:
    """Return ``(root, exponent)`` with ``root**exponent == w`` and ``root`` primitive."""
    if not w:
        raise ValueError("the empty word has no primitive root")
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p], n // p
    raise AssertionError("unreachable")


def is_primitive_word(w: str) -> bool:
    return primitive_root(w)[1] == 1


def lothaire_decompose(x: str, w: str, y: str) -> OverlapDecomposition:
    if not x:
        raise ValueError("x must be nonempty")
    if x + w != w + y:
        raise ValueError(f"xw != wy for x={x!r}, w={w!r}, y={y!r}")
    i, r = divmod(len(w), len(x))
    u, v = x[:r], x[r:]
    # Both identities follow from xw = wy, but cost nothing to confirm.
    assert w == (u + v) * i + u and y == v + u
    return OverlapDecomposition(u, v, i)


def overlap_palindromicity(x: str, w: str, y: str) -> dict[str, bool]:
    """Evaluate the five palindromicity conditions attached to ``xw = wy``.

    Keys: ``i`` x is the reversal of y; ``ii`` u and v are palindromes;
    ``iii`` xw is a palindrome; ``iv`` xwy is a palindrome; ``v`` w is a
    palindrome.  Each is computed directly, none derived from another.
    """
    u, v, _ = lothaire_decompose(x, w, y)
    return {
        "i": x == reverse(y),
        "ii": is_palindrome(u) and is_palindrome(v),
        "iii": is_palindrome(x + w),
        "iv": is_palindrome(x + w + y),
        "v": is_palindrome(w),
    }


def longest_common_prefix(words: Iterable[str]) -> str:
    words = list(words)
    if not words:
        return ""
    first = min(words, key=len)
    for i, c in enumerate(first):
        if any(word[i] != c for word in words):
            return first[:i]
    return first


def longest_common_suffix(words: Iterable[str]) -> str:
    return reverse(longest_common_prefix(reverse(word) for word in words))
