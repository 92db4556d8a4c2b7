"""Structured analysis reports (plain JSON-compatible dicts) and their text rendering."""
from __future__ import annotations

import json
from importlib import resources
from typing import Optional

from .classp import (HksPreconditionError, class_p_conjugacy_report,
                     class_p_discrepancy, hks_verify, is_class_p,
                     is_class_p_suffix_form, prolongable_power)
from .conjugacy import conjugacy_extremes, markedness
from .factors import (build_factor_index, geometric_bands, palindrome_census,
                      special_factors)
from .morphism import (Morphism, cyclic_root, fixed_point_prefix, is_erasing,
                       is_injective, is_primitive, power, prolongable_letters)
from .notation import format_morphism

CENSUS_PREFIX = 20000
CENSUS_BOUND = 256


def load_schema() -> dict:
    return json.loads(resources.files("palmorph").joinpath("data/report.schema.json").read_text())


def _membership(phi: Morphism) -> dict:
    literal = is_class_p(phi)
    strict = is_class_p(phi, strict_q=True)
    return {
        "literal": {"in_class_p": literal.in_class_p, "p": literal.witness_p},
        "strict": {"in_class_p": strict.in_class_p, "p": strict.witness_p},
    }


def classification_section(phi: Morphism) -> dict:
    erasing = is_erasing(phi)
    root = cyclic_root(phi)
    out = {
        "erasing": erasing,
        "cyclic": root is not None,
        "cyclic_root": root,
        "primitive": is_primitive(phi),
        "injective": is_injective(phi),
        "marked": None,
        "well_marked": None,
        "prolongable": prolongable_letters(phi),
    }
    if not erasing and root is None:
        m = markedness(phi)
        out["marked"], out["well_marked"] = m.marked, m.well_marked
    return out


def conjugacy_section(phi: Morphism) -> Optional[dict]:
    if is_erasing(phi) or cyclic_root(phi) is not None:
        return None
    ext = conjugacy_extremes(phi)
    m = markedness(phi, ext)
    letters = phi.alphabet.letters
    return {
        "leftmost": format_morphism(ext.leftmost),
        "rightmost": format_morphism(ext.rightmost),
        "w": ext.w,
        "left_shift": ext.left_shift,
        "right_shift": ext.right_shift,
        "fst_of_leftmost": [m.fst_of_leftmost[a] for a in letters],
        "lst_of_rightmost": [m.lst_of_rightmost[a] for a in letters],
        "marked": m.marked,
        "well_marked": m.well_marked,
    }


def classp_section(phi: Morphism) -> dict:
    suffix = is_class_p_suffix_form(phi)
    out = _membership(phi)
    out["suffix_form"] = {"in_class_p": suffix.in_class_p, "p": suffix.witness_p}
    out["discrepancy"] = class_p_discrepancy(phi)
    out["suffix_form_mismatch"] = suffix.in_class_p != out["literal"]["in_class_p"]
    out["conjugacy_report"] = None
    if not is_erasing(phi) and cyclic_root(phi) is None:
        r = class_p_conjugacy_report(phi)
        out["conjugacy_report"] = {
            "conditions": list(r.conditions),
            "w": r.w,
            "w_palindrome": r.w == r.w[::-1],
            "B": list(r.B),
            "p_b": [r.p_b[b] for b in r.B],
            "k": r.k,
            "witness": format_morphism(r.witness) if r.witness else None,
            "witness_p": r.witness_p,
            "witness_membership": _membership(r.witness) if r.witness else None,
        }
    return out


def empirical_palindromicity(phi: Morphism) -> Optional[dict]:
    """Palindrome census on a fixed-point prefix; None when no fixed point is reachable."""
    try:
        j, letter = prolongable_power(phi)
        text = fixed_point_prefix(power(phi, j), letter, CENSUS_PREFIX)
    except ValueError:
        return None
    census = palindrome_census(text, geometric_bands(CENSUS_BOUND))
    return {
        "prefix_length": CENSUS_PREFIX,
        "bands": [list(b) for b in census.bands],
        "counts": census.counts,
        "palindromic": census.strictly_increasing(),
    }


def hks_section(phi: Morphism) -> dict:
    try:
        v = hks_verify(phi)
    except HksPreconditionError as exc:
        empirical = empirical_palindromicity(phi)
        return {
            "status": "heuristic" if empirical else "unavailable",
            "reason": str(exc),
            "palindromic": empirical["palindromic"] if empirical else None,
            "power": None, "witness": None, "witness_p": None, "witness_membership": None,
            "well_marked_power": None, "periodicity": None, "census": empirical,
        }
    cert = v.periodic_case
    return {
        "status": "exact",
        "reason": None,
        "palindromic": v.palindromic,
        "power": v.power,
        "witness": format_morphism(v.conjugate_witness) if v.conjugate_witness else None,
        "witness_p": v.class_p_p,
        "witness_membership": _membership(v.conjugate_witness) if v.conjugate_witness else None,
        "well_marked_power": v.well_marked_power,
        "periodicity": None if cert is None else {
            "kind": cert.kind, "period_word": cert.period_word, "power": cert.power},
        "census": None,
    }


def factors_section(phi: Morphism, n: int) -> dict:
    idx = build_factor_index(phi, None, n + 1)
    sp = special_factors(idx, n)
    key = phi.alphabet.sort_key
    return {
        "max_len": n,
        "certified": idx.certified,
        "complexity": [idx.complexity(k) for k in range(n + 1)],
        "bispecial": sorted(sp.bispecial, key=key),
        "palindromes": [sum(1 for f in idx.factors if len(f) == k and f == f[::-1])
                        for k in range(n + 1)],
    }


def analysis_report(phi: Morphism, name: Optional[str] = None,
                    factors: Optional[int] = None) -> dict:
    return {
        "name": name,
        "morphism": format_morphism(phi),
        "alphabet": list(phi.alphabet.letters),
        "classification": classification_section(phi),
        "conjugacy": conjugacy_section(phi),
        "class_p": classp_section(phi),
        "hks": hks_section(phi),
        "factors": factors_section(phi, factors) if factors else None,
    }


# -- text rendering ---------------------------------------------------------

def arrow(spec: Optional[str]) -> str:
    if spec is None:
        return "-"
    return ", ".join(rule.replace("->", " ↦ ") for rule in spec.split(";"))


def fmt_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value if value else "ε"
    if isinstance(value, list):
        return "[" + ", ".join(fmt_value(v) for v in value) + "]"
    return str(value)


def render_rows(rows: list[tuple[str, object]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {fmt_value(v)}" for k, v in rows)


def membership_rows(prefix: str, m: Optional[dict]) -> list:
    if m is None:
        return []
    return [(f"{prefix} (literal)", f"{fmt_value(m['literal']['in_class_p'])}  p = {fmt_value(m['literal']['p'])}"),
            (f"{prefix} (strict)", f"{fmt_value(m['strict']['in_class_p'])}  p = {fmt_value(m['strict']['p'])}")]
