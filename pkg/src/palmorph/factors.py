"""Factor languages of morphic fixed points.

Certified bounded-length factor sets, special and bispecial factors, a
palindromic tree (eertree), complete return words and the bispecial map
``u -> phi_R(u)·w``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .conjugacy import conjugacy_extremes, markedness
from .morphism import (Morphism, apply, fixed_point_prefix, is_cyclic,
                       is_erasing, is_primitive, periodicity_certificate,
                       prolongable_letters)
from .words import (is_palindrome, longest_common_prefix,
                    longest_common_suffix, reverse)


@dataclass(frozen=True)
class FactorIndex:
    morphism: Morphism
    letter: Optional[str]
    max_len: int
    factors: frozenset
    certified: bool

    def __contains__(self, w):
        return w in self.factors

    def of_length(self, n: int) -> list[str]:
        return sorted((f for f in self.factors if len(f) == n),
                      key=self.morphism.alphabet.sort_key)

    def complexity(self, n: int) -> int:
        return sum(1 for f in self.factors if len(f) == n)


def two_block_closure(phi: Morphism, seed: str) -> set[str]:
    """Smallest set of length-2 words containing those of ``seed`` and closed
    under ``xy -> length-2 factors of phi(xy)``."""
    blocks = {seed[i:i + 2] for i in range(len(seed) - 1)}
    todo = list(blocks)
    while todo:
        img = apply(phi, todo.pop())
        for i in range(len(img) - 1):
            b = img[i:i + 2]
            if b not in blocks:
                blocks.add(b)
                todo.append(b)
    return blocks


def _certified_factors(phi: Morphism, a: str, n: int) -> set[str]:
    seed = a
    for _ in range(len(phi.alphabet) ** 2 + 2):
        if len(seed) >= 2:
            break
        seed = apply(phi, seed)
    else:
        raise ValueError(f"{phi} does not grow from {a!r}")
    blocks = two_block_closure(phi, seed)

    psi = phi
    while min(len(img) for img in psi.images) < n:
        psi = Morphism(phi.alphabet, tuple(apply(phi, img) for img in psi.images))
    table = psi.as_dict()

    factors = {""}
    for xy in blocks:
        left = table[xy[0]]
        s = left + table[xy[1]]
        # Factors starting in the second image are covered by the block that begins there.
        for i in range(len(left)):
            for length in range(1, min(n, len(s) - i) + 1):
                factors.add(s[i:i + length])
    return factors


def _scraped_factors(text: str, n: int) -> set[str]:
    factors = {""}
    for length in range(1, n + 1):
        factors.update(text[i:i + length] for i in range(len(text) - length + 1))
    return factors


def build_factor_index(phi: Morphism, a: Optional[str] = None, n: int = 8,
                       prefix_length: int = 20000) -> FactorIndex:
    """Factors of length at most ``n`` of the fixed-point language of ``phi``.

    For primitive morphisms the set is exact (``certified``).  Otherwise it is
    scraped from a prefix of the fixed point at ``a`` and may be incomplete.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if a is None:
        letters = prolongable_letters(phi)
        a = letters[0] if letters else phi.alphabet.letters[0]
    if is_primitive(phi) and not (len(phi.alphabet) == 1 and len(phi.images[0]) < 2):
        return FactorIndex(phi, a, n, frozenset(_certified_factors(phi, a, n)), True)
    text = fixed_point_prefix(phi, a, prefix_length)
    return FactorIndex(phi, a, n, frozenset(_scraped_factors(text, n)), False)


def factor_index_from_text(text: str, n: int, phi: Optional[Morphism] = None) -> FactorIndex:
    return FactorIndex(phi, None, n, frozenset(_scraped_factors(text, n)), False)


def _letters_of(idx: FactorIndex) -> Sequence[str]:
    if idx.morphism is not None:
        return idx.morphism.alphabet.letters
    return sorted({f for f in idx.factors if len(f) == 1})


def left_extensions(idx: FactorIndex, w: str) -> list[str]:
    return [c for c in _letters_of(idx) if c + w in idx.factors]


def right_extensions(idx: FactorIndex, w: str) -> list[str]:
    return [c for c in _letters_of(idx) if w + c in idx.factors]


class SpecialFactors(NamedTuple):
    left: frozenset
    right: frozenset
    bispecial: frozenset


def special_factors(idx: FactorIndex, max_length: Optional[int] = None) -> SpecialFactors:
    """Left, right and bispecial factors of length at most ``max_length``
    (default ``idx.max_len - 1``, the longest length whose extensions the
    index can see)."""
    limit = idx.max_len - 1 if max_length is None else max_length
    if limit > idx.max_len - 1:
        raise ValueError(f"length {limit} exceeds what an index of max_len {idx.max_len} can classify")
    left_count = defaultdict(int)
    right_count = defaultdict(int)
    for f in idx.factors:
        if 1 <= len(f) <= limit + 1:
            left_count[f[1:]] += 1
            right_count[f[:-1]] += 1
    left = frozenset(u for u, c in left_count.items() if c > 1)
    right = frozenset(u for u, c in right_count.items() if c > 1)
    return SpecialFactors(left, right, left & right)


# -- palindromic tree ------------------------------------------------------

class PalindromicTree:
    """Eertree over a word: one node per distinct nonempty palindromic factor.

    Node 0 is the imaginary root of length -1, node 1 the empty palindrome.
    Palindromes are stored as (end index, length) into ``text``.
    """

    def __init__(self, text: str = ""):
        self.text = ""
        self.length = [-1, 0]
        self.link = [0, 0]
        self.parent = [0, 0]
        self.end = [-1, -1]
        self.edges: list[dict] = [{}, {}]
        self._last = 1
        self._chars: list[str] = []
        self.extend(text)

    def extend(self, text: str):
        chars = self._chars
        length, link, edges = self.length, self.link, self.edges
        for c in text:
            i = len(chars)
            chars.append(c)
            cur = self._last
            while True:
                k = length[cur]
                if i - 1 - k >= 0 and chars[i - 1 - k] == c:
                    break
                cur = link[cur]
            if c in edges[cur]:
                self._last = edges[cur][c]
                continue
            node = len(length)
            length.append(length[cur] + 2)
            self.parent.append(cur)
            self.end.append(i)
            edges.append({})
            edges[cur][c] = node
            if length[node] == 1:
                link.append(1)
            else:
                s = link[cur]
                while True:
                    k = length[s]
                    if i - 1 - k >= 0 and chars[i - 1 - k] == c:
                        break
                    s = link[s]
                link.append(edges[s][c])
            self._last = node
        self.text = "".join(chars)

    def __len__(self):
        """Number of distinct nonempty palindromes."""
        return len(self.length) - 2

    def palindrome(self, node: int) -> str:
        n = self.length[node]
        if n <= 0:
            return ""
        e = self.end[node]
        return self.text[e - n + 1:e + 1]

    def lengths(self) -> list[int]:
        return self.length[2:]

    def extension_letters(self, node: int) -> list[str]:
        """Letters ``a`` such that ``a·p·a`` is also a node."""
        return sorted(self.edges[node])

    def longest_branch(self) -> tuple[str, str]:
        """``(centre, arm)`` for the deepest chain ``p -> a p a``.

        The deepest palindrome is ``reverse(arm) + centre + arm`` where
        ``centre`` is empty or a single letter.
        """
        if len(self) == 0:
            return "", ""
        node = max(range(2, len(self.length)), key=lambda v: (self.length[v], -v))
        arm = []
        while self.length[node] > 1:
            p = self.palindrome(node)
            arm.append(p[-1])
            node = self.parent[node]
        centre = self.palindrome(node) if self.length[node] == 1 else ""
        return centre, "".join(reversed(arm))


@dataclass
class PalindromeCensus:
    lengths: list[int]
    bands: list[tuple[int, int]]
    counts: list[int]
    branch: tuple[str, str]
    tree: Optional[PalindromicTree] = None

    @property
    def distinct(self) -> int:
        return len(self.lengths)

    @property
    def longest(self) -> int:
        return max(self.lengths, default=0)

    def strictly_increasing(self) -> bool:
        """Every band contributes new palindromes."""
        return all(c > 0 for c in self.counts)

    def saturated(self) -> bool:
        """The last band is empty: no palindromes were found that long."""
        return bool(self.counts) and self.counts[-1] == 0


def geometric_bands(upper: int) -> list[tuple[int, int]]:
    """Half-open bands ``[1,2), [2,4), ...`` covering lengths below ``upper``."""
    bands, lo = [], 1
    while lo < upper:
        hi = min(2 * lo, upper)
        bands.append((lo, hi))
        lo = hi
    return bands


def _branch_from_set(palindromes: set[str]) -> tuple[str, str]:
    if not palindromes:
        return "", ""
    deepest = max(palindromes, key=lambda p: (len(p), p))
    half = len(deepest) // 2
    centre = deepest[half] if len(deepest) % 2 else ""
    return centre, deepest[half + len(centre):]


def palindrome_census(source: Union[str, FactorIndex],
                      bands: Optional[Iterable[tuple[int, int]]] = None) -> PalindromeCensus:
    """Distinct nonempty palindromic factors counted per half-open length band.

    A string source is indexed with an eertree; a factor index is filtered.
    """
    tree = None
    if isinstance(source, FactorIndex):
        pals = {f for f in source.factors if f and is_palindrome(f)}
        lengths = sorted(len(p) for p in pals)
        branch = _branch_from_set(pals)
    else:
        tree = PalindromicTree(source)
        lengths = sorted(tree.lengths())
        branch = tree.longest_branch()
    if bands is None:
        bands = geometric_bands(max(lengths, default=1) + 1)
    bands = list(bands)
    counts = [sum(1 for n in lengths if lo <= n < hi) for lo, hi in bands]
    return PalindromeCensus(lengths, bands, counts, branch, tree)


# -- return words and bispecial extensions ---------------------------------

class ReturnWords(NamedTuple):
    words: frozenset
    complete: bool


def occurrences(text: str, w: str) -> list[int]:
    out, i = [], text.find(w)
    while i != -1:
        out.append(i)
        i = text.find(w, i + 1)
    return out


def complete_return_words(text: str, w: str) -> ReturnWords:
    """Complete return words to ``w`` observed in ``text``.

    ``complete`` is set when the first half of the occurrences already shows
    every return word, a sign the prefix is long enough.
    """
    if not w:
        raise ValueError("w must be nonempty")
    occ = occurrences(text, w)
    if len(occ) < 2:
        raise ValueError(f"{w!r} occurs fewer than twice in the prefix")
    found = [text[i:j + len(w)] for i, j in zip(occ, occ[1:])]
    words = frozenset(found)
    half = frozenset(found[:max(1, len(found) // 2)])
    return ReturnWords(words, half == words and len(found) >= 4)


def smallest_period(text: str) -> int:
    """Smallest ``p > 0`` with ``text[i] == text[i + p]`` throughout (KMP)."""
    n = len(text)
    if n == 0:
        return 0
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and text[i] != text[k]:
            k = fail[k - 1]
        if text[i] == text[k]:
            k += 1
        fail[i] = k
    return n - fail[-1]


def looks_periodic(text: str) -> bool:
    """Heuristic: the prefix repeats a block at least four times."""
    return len(text) > 0 and smallest_period(text) * 4 <= len(text)


class PeriodicSourceError(ValueError):
    pass


def bispecial_extension(text: str, w: str, morphism: Optional[Morphism] = None,
                        letter: Optional[str] = None) -> str:
    """Extend ``w`` to the bispecial factor ``U·w·V`` where ``w·V`` and
    ``U·w`` are the longest common prefix and suffix of its complete return
    words.  For a palindrome ``w`` the result is a palindrome."""
    if morphism is not None and letter is not None:
        periodic = periodicity_certificate(morphism, letter).periodic
    else:
        periodic = looks_periodic(text)
    if periodic:
        raise PeriodicSourceError("source is periodic; factors need not extend to bispecials")
    if w not in text:
        raise ValueError(f"{w!r} is not a factor of the prefix")
    returns = complete_return_words(text, w).words
    wv = longest_common_prefix(returns)
    uw = longest_common_suffix(returns)
    return uw[:len(uw) - len(w)] + wv


# -- bispecial map ----------------------------------------------------------

def _require_primitive_marked(phi: Morphism):
    if is_erasing(phi) or is_cyclic(phi) or not is_primitive(phi):
        raise ValueError(f"{phi} must be non-erasing, acyclic and primitive")
    if not markedness(phi).marked:
        raise ValueError(f"{phi} is not marked")


def phi_map(phi: Morphism, u: str) -> str:
    """``phi_R(u)·w`` for the rightmost conjugate ``phi_R`` and conjugate word ``w``."""
    _require_primitive_marked(phi)
    ext = conjugacy_extremes(phi)
    return apply(ext.rightmost, u) + ext.w


def default_seed_bound(phi: Morphism) -> int:
    ext = conjugacy_extremes(phi)
    return max(len(ext.w), 2 * max(len(img) for img in phi.images)) + len(phi.alphabet)


@dataclass
class BispecialOrbit:
    initial: list[str]
    orbit: dict
    w: str
    seed_bound: int
    max_len: int
    bispecials: frozenset
    misses: list[str] = field(default_factory=list)
    not_bispecial: list[str] = field(default_factory=list)
    speciality_violations: list[str] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not (self.misses or self.not_bispecial or self.speciality_violations)


def phi_orbit(phi: Morphism, max_len: int, seed_bound: Optional[int] = None,
              index: Optional[FactorIndex] = None) -> BispecialOrbit:
    """Bispecial factors up to ``max_len`` generated from a finite initial set.

    Initial bispecials are those of length at most ``seed_bound`` that are not
    the image of a shorter bispecial.  The orbit is checked against the
    certified index: every orbit element must be bispecial, and every
    bispecial must be reached (``misses`` lists the ones that are not).
    """
    _require_primitive_marked(phi)
    ext = conjugacy_extremes(phi)
    right, w = ext.rightmost, ext.w
    if seed_bound is None:
        seed_bound = default_seed_bound(phi)
    if index is None or index.max_len < max_len + 1 or not index.certified:
        index = build_factor_index(phi, None, max_len + 1)
    sp = special_factors(index, max_len)
    bisp = sp.bispecial

    def image(u):
        return apply(right, u) + w

    images_of_short = {image(v) for v in bisp if len(v) < seed_bound and len(image(v)) > len(v)}
    initial = sorted((u for u in bisp if len(u) <= seed_bound and u not in images_of_short),
                     key=phi.alphabet.sort_key)

    orbit: dict = {}
    reached = set(initial)
    frontier = list(initial)
    while frontier:
        u = frontier.pop()
        v = image(u)
        if len(v) > max_len or v == u:
            continue
        orbit[u] = v
        if v not in reached:
            reached.add(v)
            frontier.append(v)

    result = BispecialOrbit(initial, orbit, w, seed_bound, max_len, bisp)
    result.not_bispecial = sorted((v for v in orbit.values() if v not in bisp),
                                  key=phi.alphabet.sort_key)
    result.misses = sorted(bisp - reached, key=phi.alphabet.sort_key)
    for kind, specials in (("left", sp.left), ("right", sp.right)):
        for u in specials:
            v = image(u)
            if len(v) <= max_len and v not in specials:
                result.speciality_violations.append(f"{kind}:{u}")
    return result


# -- empirical language properties -----------------------------------------

def recurrence_window(text: str, factors: Iterable[str]) -> Optional[int]:
    """Smallest ``R`` such that every length-``R`` window of ``text`` contains
    all of ``factors`` (all of one length), or None if no window does."""
    factors = set(factors)
    if not factors:
        return 0
    n = len(next(iter(factors)))
    positions = defaultdict(list)
    for i in range(len(text) - n + 1):
        f = text[i:i + n]
        if f in factors:
            positions[f].append(i)
    if set(positions) != factors:
        return None
    # Windows past the last occurrence are ignored: the prefix is only a sample.
    worst = 0
    for occ in positions.values():
        gaps = [occ[0] + n] + [b - a + n - 1 for a, b in zip(occ, occ[1:])]
        worst = max(worst, max(gaps))
    return worst


def period_as_two_palindromes(w: str) -> Optional[tuple[str, str]]:
    """Split ``w = p·q`` with ``p`` and ``q`` palindromes (``p`` nonempty), if possible."""
    for i in range(1, len(w) + 1):
        if is_palindrome(w[:i]) and is_palindrome(w[i:]):
            return w[:i], w[i:]
    return None


def closed_under_reversal(idx: FactorIndex) -> bool:
    return all(reverse(f) in idx.factors for f in idx.factors)
