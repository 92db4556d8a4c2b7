"""Conjugacy of morphisms: one-letter shifts, extreme conjugates, markedness.

Convention: ``psi`` is a *right conjugate* of ``phi`` with conjugate word
``w`` when ``psi(x)·w = w·phi(x)`` for every word ``x``.  A right shift moves
the common last letter of all images to the front.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .morphism import (Morphism, incidence_matrix, is_cyclic, is_erasing,
                       lcm_up_to, power)


class CyclicMorphismError(ValueError):
    """Raised when an operation needs an acyclic morphism."""


class ErasingMorphismError(ValueError):
    """Raised when an operation needs a non-erasing morphism."""


class NotMarkedError(ValueError):
    pass


@dataclass(frozen=True)
class ConjugacyExtremes:
    leftmost: Morphism
    rightmost: Morphism
    w: str
    left_shift: str
    right_shift: str


@dataclass(frozen=True)
class MarkednessReport:
    marked: bool
    well_marked: bool
    fst_of_leftmost: dict
    lst_of_rightmost: dict


def _require_non_erasing(phi: Morphism):
    if is_erasing(phi):
        raise ErasingMorphismError(f"{phi} is erasing")


def check_right_conjugate(phi: Morphism, psi: Morphism, w: str) -> bool:
    """True iff ``w·psi(a) == phi(a)·w`` for every letter ``a``."""
    if phi.alphabet != psi.alphabet:
        raise ValueError("morphisms are defined over different alphabets")
    return all(w + b == a + w for a, b in zip(phi.images, psi.images))


def shift_right_once(phi: Morphism) -> Optional[tuple[Morphism, str]]:
    _require_non_erasing(phi)
    last = {img[-1] for img in phi.images}
    if len(last) != 1:
        return None
    c = last.pop()
    return Morphism(phi.alphabet, tuple(c + img[:-1] for img in phi.images)), c


def shift_left_once(phi: Morphism) -> Optional[tuple[Morphism, str]]:
    _require_non_erasing(phi)
    first = {img[0] for img in phi.images}
    if len(first) != 1:
        return None
    c = first.pop()
    return Morphism(phi.alphabet, tuple(img[1:] + c for img in phi.images)), c


def _shift_to_end(phi: Morphism, step) -> tuple[Morphism, list[str]]:
    seen = {phi}
    letters = []
    current = phi
    while (nxt := step(current)) is not None:
        current, c = nxt
        if current in seen:
            raise CyclicMorphismError(
                f"{phi} is cyclic: shifting returns to an earlier conjugate, "
                "so it has no leftmost or rightmost conjugate")
        seen.add(current)
        letters.append(c)
    return current, letters


def conjugacy_extremes(phi: Morphism) -> ConjugacyExtremes:
    _require_non_erasing(phi)
    if is_cyclic(phi):
        raise CyclicMorphismError(
            f"{phi} is cyclic; leftmost and rightmost conjugates exist only for acyclic morphisms")
    rightmost, rletters = _shift_to_end(phi, shift_right_once)
    leftmost, lletters = _shift_to_end(phi, shift_left_once)
    right_shift = "".join(reversed(rletters))
    left_shift = "".join(lletters)
    w = right_shift + left_shift
    if not check_right_conjugate(rightmost, leftmost, w):
        raise AssertionError(f"conjugate word assembly failed for {phi}")
    return ConjugacyExtremes(leftmost, rightmost, w, left_shift, right_shift)


def right_conjugates(phi: Morphism, k: int) -> list[Morphism]:
    """``[phi, s(phi), ..., s^k(phi)]`` for the right shift ``s``; raises if a
    shift is impossible before ``k`` steps."""
    chain = [phi]
    for step in range(k):
        nxt = shift_right_once(chain[-1])
        if nxt is None:
            raise ValueError(f"{phi} has no {step + 1}-th right conjugate")
        chain.append(nxt[0])
    return chain


def conjugacy_class(phi: Morphism) -> list[Morphism]:
    """All conjugates of an acyclic morphism, from leftmost to rightmost."""
    ext = conjugacy_extremes(phi)
    return right_conjugates(ext.leftmost, len(ext.w))


def first_letters(phi: Morphism) -> dict:
    return {a: img[0] for a, img in zip(phi.alphabet, phi.images)}


def last_letters(phi: Morphism) -> dict:
    return {a: img[-1] for a, img in zip(phi.alphabet, phi.images)}


def _injective(m: dict) -> bool:
    return len(set(m.values())) == len(m)


def markedness(phi: Morphism, extremes: Optional[ConjugacyExtremes] = None) -> MarkednessReport:
    ext = extremes or conjugacy_extremes(phi)
    fst = first_letters(ext.leftmost)
    lst = last_letters(ext.rightmost)
    marked = _injective(fst) and _injective(lst)
    return MarkednessReport(marked, marked and fst == lst, fst, lst)


def _perm_power(perm: tuple[int, ...], k: int) -> tuple[int, ...]:
    out = tuple(range(len(perm)))
    for _ in range(k):
        out = tuple(perm[i] for i in out)
    return out


def well_marked_power(phi: Morphism) -> tuple[int, Morphism]:
    """Smallest ``k`` such that ``phi**k`` is well-marked, with that power.

    The first-letter map of the leftmost conjugate of ``phi**k`` is the k-th
    power of that of ``phi`` (likewise for last letters of the rightmost one),
    so only the two permutations need iterating.
    """
    report = markedness(phi)
    if not report.marked:
        raise NotMarkedError(f"{phi} is not marked")
    letters = phi.alphabet.letters
    fst = tuple(letters.index(report.fst_of_leftmost[a]) for a in letters)
    lst = tuple(letters.index(report.lst_of_rightmost[a]) for a in letters)
    for k in range(1, lcm_up_to(len(letters)) + 1):
        if _perm_power(fst, k) == _perm_power(lst, k):
            return k, power(phi, k)
    raise AssertionError("permutation powers never agree below lcm(1..d)")


def same_incidence(*morphisms: Morphism) -> bool:
    mats = [incidence_matrix(m) for m in morphisms]
    return all(np.array_equal(mats[0], m) for m in mats[1:])
