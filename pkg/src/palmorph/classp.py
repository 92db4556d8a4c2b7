"""Class P membership, conjugacy to class P, and the palindromicity decision
for primitive marked morphisms."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .conjugacy import (ConjugacyExtremes, CyclicMorphismError, NotMarkedError,
                        conjugacy_class, conjugacy_extremes, markedness,
                        right_conjugates, well_marked_power)
from .morphism import (Morphism, PeriodicityCertificate, apply, is_cyclic,
                       is_erasing, is_primitive, periodicity_certificate, power,
                       prolongable_letters, reverse_morphism)
from .words import is_palindrome, longest_common_prefix, reverse


@dataclass(frozen=True)
class ClassPMembership:
    in_class_p: bool
    witness_p: Optional[str]
    strict_q: bool = False


def _palindromic_prefixes(w: str):
    """Palindromic prefixes of ``w``, longest first, ending with the empty word."""
    for n in range(len(w), -1, -1):
        if is_palindrome(w[:n]):
            yield w[:n]


def is_class_p(phi: Morphism, strict_q: bool = False) -> ClassPMembership:
    """Look for a palindrome ``p``, prefix of every image, with every
    ``image·p`` a palindrome.  Under ``strict_q`` each quotient
    ``p^-1 image`` must also be nonempty."""
    for p in _palindromic_prefixes(longest_common_prefix(phi.images)):
        if strict_q and any(img == p for img in phi.images):
            continue
        if all(is_palindrome(img + p) for img in phi.images):
            return ClassPMembership(True, p, strict_q)
    return ClassPMembership(False, None, strict_q)


def is_class_p_suffix_form(phi: Morphism) -> ClassPMembership:
    """Mirror variant: ``p`` a common palindromic suffix with every ``p·image``
    a palindrome, i.e. images of the shape ``q_a·p``."""
    found = is_class_p(reverse_morphism(phi))
    return ClassPMembership(found.in_class_p, found.witness_p)


def class_p_discrepancy(phi: Morphism) -> bool:
    """True when literal membership holds but only through an empty quotient."""
    return is_class_p(phi).in_class_p and not is_class_p(phi, strict_q=True).in_class_p


@dataclass(frozen=True)
class ClassPReport:
    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool
    cond5: bool
    w: str
    B: tuple[str, ...]
    p_b: dict
    k: int
    extremes: ConjugacyExtremes
    witness: Optional[Morphism] = None
    witness_p: Optional[str] = None

    @property
    def conditions(self) -> tuple[bool, ...]:
        return (self.cond1, self.cond2, self.cond3, self.cond4, self.cond5)

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions)) == 1


def _require_acyclic_non_erasing(phi: Morphism):
    if is_erasing(phi):
        raise ValueError(f"{phi} is erasing")
    if is_cyclic(phi):
        raise CyclicMorphismError(
            f"{phi} is cyclic; leftmost and rightmost conjugates exist only for acyclic morphisms")


def class_p_conjugacy_report(phi: Morphism) -> ClassPReport:
    """Evaluate the five equivalent conditions for ``phi`` to have a conjugate
    in class P, each by its own route."""
    _require_acyclic_non_erasing(phi)
    ext = conjugacy_extremes(phi)
    w = ext.w
    left, right = ext.leftmost, ext.rightmost

    cond4 = left == reverse_morphism(right)

    B = tuple(b for b, img in zip(phi.alphabet, phi.images) if len(img) > len(w))
    p_b = {}
    for b in B:
        img = left.image(b)
        assert img.endswith(w)
        p_b[b] = img[:len(img) - len(w)]
    cond5 = is_palindrome(w) and all(is_palindrome(p) for p in p_b.values())

    cond3 = conjugacy_extremes(reverse_morphism(phi)).leftmost == left

    k = (len(w) + 1) // 2
    candidate = right_conjugates(left, k)[-1]
    membership = is_class_p(candidate)
    cond1 = membership.in_class_p

    # Searched over the whole conjugacy class, not inferred from cond1.
    cond2 = any(is_class_p(psi).in_class_p for psi in conjugacy_class(phi))

    return ClassPReport(
        cond1, cond2, cond3, cond4, cond5, w, B, p_b, k, ext,
        witness=candidate if cond1 else None,
        witness_p=membership.witness_p)


@dataclass(frozen=True)
class HksVerdict:
    palindromic: bool
    power: int
    conjugate_witness: Optional[Morphism]
    class_p_p: Optional[str]
    periodic_case: Optional[PeriodicityCertificate] = None
    well_marked_power: int = 1


class HksPreconditionError(ValueError):
    """The exact decision needs a primitive, marked, non-erasing morphism."""

    def __init__(self, message: str, classification: dict):
        super().__init__(message)
        self.classification = classification


def classify(phi: Morphism) -> dict:
    erasing = is_erasing(phi)
    cyclic = is_cyclic(phi)
    out = {"erasing": erasing, "cyclic": cyclic, "primitive": is_primitive(phi),
           "marked": None, "well_marked": None}
    if not erasing and not cyclic:
        m = markedness(phi)
        out["marked"], out["well_marked"] = m.marked, m.well_marked
    return out


def prolongable_power(phi: Morphism) -> tuple[int, str]:
    """Smallest ``j`` such that ``phi**j`` is prolongable on some letter, and
    the first such letter in alphabet order."""
    psi = phi
    d = len(phi.alphabet)
    for j in range(1, d * d + 2):
        letters = prolongable_letters(psi)
        if letters:
            return j, letters[0]
        psi = power(phi, j + 1)
    raise ValueError(f"no power of {phi} is prolongable")


def hks_verify(phi: Morphism) -> HksVerdict:
    """Decide whether the fixed-point language of a primitive marked morphism
    is palindromic, returning a class P conjugate of a power when it is."""
    cls = classify(phi)
    problems = [name for name, bad in (("erasing", cls["erasing"]), ("cyclic", cls["cyclic"]),
                                       ("not primitive", not cls["primitive"]),
                                       ("not marked", cls["marked"] is False)) if bad]
    if problems:
        raise HksPreconditionError(f"{phi}: {', '.join(problems)}", cls)

    k, psi = well_marked_power(phi)
    j, letter = prolongable_power(phi)
    cert = periodicity_certificate(power(phi, j), letter)
    if cert.periodic:
        if len(phi.alphabet) != 2:
            return HksVerdict(False, k, None, None, cert, k)
        for m in (1, k):
            membership = is_class_p(power(phi, m))
            if membership.in_class_p:
                return HksVerdict(True, m, power(phi, m), membership.witness_p, cert, k)
        raise AssertionError(f"periodic binary {phi} has no class P power")

    report = class_p_conjugacy_report(psi)
    if not report.cond4:
        return HksVerdict(False, k, None, None, cert, k)
    return HksVerdict(True, k, report.witness, report.witness_p, cert, k)


def desubstitute(phi: Morphism, x: str) -> Optional[str]:
    """The unique word ``u`` with ``phi(u) == x`` for an injective ``phi``, or None."""
    n = len(x)
    # back[i] = letter whose image ends a parse of x[:i]
    back: dict[int, tuple[int, str]] = {0: (0, "")}
    for i in range(n):
        if i not in back:
            continue
        for a, img in zip(phi.alphabet, phi.images):
            if img and x.startswith(img, i) and i + len(img) not in back:
                back[i + len(img)] = (i, a)
    if n not in back:
        return None
    out = []
    i = n
    while i:
        i, a = back[i]
        out.append(a)
    return "".join(reversed(out))


def mirror_equation_check(phi: Morphism, u: str, v: str) -> dict[str, bool]:
    """Given ``reverse(phi_R(u)·w) == phi_R(v)·w`` for a well-marked ``phi``,
    report the three consequences: ``w`` palindrome, ``reverse(u) == v``, and
    ``phi_L(a) == reverse(phi_R(a))`` for every letter ``a`` of ``u``."""
    ext = conjugacy_extremes(phi)
    if not markedness(phi, ext).well_marked:
        raise NotMarkedError(f"{phi} is not well-marked")
    w = ext.w
    if reverse(apply(ext.rightmost, u) + w) != apply(ext.rightmost, v) + w:
        raise ValueError("the mirror equation does not hold for the given words")
    return {
        "w_palindrome": is_palindrome(w),
        "u_reverse_of_v": reverse(u) == v,
        "per_letter_mirror": all(ext.leftmost.image(a) == reverse(ext.rightmost.image(a))
                                 for a in set(u)),
    }


class PreconditionError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


def class_p_conjugate_by_shifting(phi: Morphism, w: str) -> Optional[Morphism]:
    """The ``floor((|w|+1)/2)``-th right conjugate of ``phi`` when it is in class P.

    ``w`` must be a palindrome and ``phi`` must admit a right conjugate with
    conjugate word ``w`` (checked by shifting).  When every image is at most
    as long as ``w`` the result is guaranteed to be in class P; otherwise it is
    returned only if it passes the membership test, else None.
    """
    violations = []
    if not is_palindrome(w):
        violations.append(f"conjugate word {w!r} is not a palindrome")
    chain = right_conjugates_with_word(phi, len(w))
    if chain is None or chain[1] != w:
        violations.append(f"{phi} has no right conjugate with conjugate word {w!r}")
    if violations:
        raise PreconditionError(violations)
    k = (len(w) + 1) // 2
    candidate = right_conjugates(phi, k)[-1]
    long_enough = all(len(img) <= len(w) for img in phi.images)
    if is_class_p(candidate).in_class_p:
        return candidate
    if long_enough:
        raise AssertionError(f"class P conjugate of {phi} not found despite |w| >= images")
    return None


def right_conjugates_with_word(phi: Morphism, n: int) -> Optional[tuple[Morphism, str]]:
    """Shift ``phi`` right ``n`` times; return the result and the accumulated
    conjugate word, or None if a shift is impossible."""
    from .conjugacy import shift_right_once
    current, word = phi, ""
    for _ in range(n):
        nxt = shift_right_once(current)
        if nxt is None:
            return None
        current, c = nxt
        word = c + word
    return current, word
