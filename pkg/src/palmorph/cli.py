"""Command-line interface.

    palmorph analyze "a->bbaba;b->bba" [--json] [--factors N]
    palmorph conjugates SPEC
    palmorph classp SPEC
    palmorph hks SPEC
    palmorph fixpoint SPEC --letter a --length n
    palmorph palindromes SPEC --length n
    palmorph bispecials SPEC --max-len n [--seed-bound k]
    palmorph batch CORPUS

Exit codes: 0 success, 1 a checked property is false (only with --assert),
2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, TextIO

from .classp import prolongable_power
from .conjugacy import CyclicMorphismError, ErasingMorphismError
from .factors import geometric_bands, palindrome_census, phi_orbit
from .morphism import fixed_point_prefix, power, prolongable_letters
from .notation import MorphismSyntaxError, parse_morphism
from .report import (analysis_report, arrow, classp_section,
                     conjugacy_section, fmt_value, hks_section,
                     membership_rows, render_rows)


class InputError(ValueError):
    pass


def _require_acyclic(phi, command):
    if any(img == "" for img in phi.images):
        raise InputError(f"{command}: {phi} is erasing; conjugates are defined for non-erasing morphisms")
    section = conjugacy_section(phi)
    if section is None:
        raise InputError(
            f"{command}: {phi} is cyclic; leftmost and rightmost conjugates (and everything "
            "built on them) exist only for acyclic morphisms")
    return section


# Each command returns (json payload, text, headline property or None).

def cmd_analyze(phi, args):
    rep = analysis_report(phi, factors=args.factors)
    text = render_analysis(rep)
    return rep, text, _analysis_headline(rep)


def _analysis_headline(rep) -> bool:
    return rep["hks"]["status"] == "exact"


def render_analysis(rep: dict) -> str:
    c = rep["classification"]
    rows = [("morphism", arrow(rep["morphism"]))]
    if rep.get("name"):
        rows.insert(0, ("name", rep["name"]))
    rows += [(k, c[k]) for k in ("erasing", "cyclic", "primitive", "injective", "marked", "well_marked")]
    conj = rep["conjugacy"]
    if conj:
        rows += [("leftmost", arrow(conj["leftmost"])), ("rightmost", arrow(conj["rightmost"])),
                 ("conjugate word", conj["w"])]
    cp = rep["class_p"]
    rows += membership_rows("class P", cp)
    rows.append(("class P discrepancy", cp["discrepancy"]))
    sf = cp["suffix_form"]
    rows.append(("class P suffix form", f"{_b(sf['in_class_p'])}  p = {fmt_value(sf['p'])}"))
    rep_c = cp["conjugacy_report"]
    if rep_c:
        rows.append(("conditions 1-5", " ".join(_b(x) for x in rep_c["conditions"])))
        rows.append(("class P conjugate", arrow(rep_c["witness"])))
    h = rep["hks"]
    rows += [("palindromic", f"{_b(h['palindromic'])} ({h['status']})")]
    if h["status"] == "exact" and h["palindromic"]:
        rows += [("power", h["power"]), ("witness", arrow(h["witness"]))]
    if rep.get("factors"):
        f = rep["factors"]
        rows += [("complexity", f["complexity"]), ("bispecial", f["bispecial"])]
    return render_rows(rows)


def _b(x):
    return "-" if x is None else ("true" if x else "false")


def cmd_conjugates(phi, args):
    section = _require_acyclic(phi, "conjugates")
    rows = [("morphism", arrow(str(phi))),
            ("leftmost", arrow(section["leftmost"])),
            ("rightmost", arrow(section["rightmost"])),
            ("conjugate word", section["w"]),
            ("marked", section["marked"]),
            ("well_marked", section["well_marked"])]
    return {"morphism": str(phi), "conjugacy": section}, render_rows(rows), section["marked"]


def cmd_classp(phi, args):
    _require_acyclic(phi, "classp")
    section = classp_section(phi)
    r = section["conjugacy_report"]
    rows = [("morphism", arrow(str(phi)))]
    rows += [(f"condition {i}", v) for i, v in enumerate(r["conditions"], 1)]
    rows += [("conjugate word", r["w"]), ("w palindrome", r["w_palindrome"]), ("k", r["k"]),
             ("witness", arrow(r["witness"])), ("witness p", r["witness_p"])]
    rows += membership_rows("witness in class P", r["witness_membership"])
    rows += membership_rows("morphism in class P", section)
    rows.append(("discrepancy", section["discrepancy"]))
    return {"morphism": str(phi), "class_p": section}, render_rows(rows), r["conditions"][1]


def cmd_hks(phi, args):
    section = hks_section(phi)
    rows = [("morphism", arrow(str(phi))), ("status", section["status"]),
            ("palindromic", section["palindromic"])]
    if section["reason"]:
        rows.append(("reason", section["reason"]))
    if section["status"] == "exact":
        per = section["periodicity"]
        rows += [("well-marked power", section["well_marked_power"]),
                 ("periodicity", per["kind"] if per else None)]
        if per and per["kind"] == "periodic":
            rows.append(("period", f"{per['period_word']}^{per['power']}"))
        if section["palindromic"]:
            rows += [("power", section["power"]), ("witness", arrow(section["witness"])),
                     ("witness p", section["witness_p"])]
            rows += membership_rows("witness in class P", section["witness_membership"])
    return {"morphism": str(phi), "hks": section}, render_rows(rows), section["palindromic"]


def _fixpoint_letter(phi, letter):
    if letter is not None:
        if letter not in prolongable_letters(phi):
            raise InputError(f"{phi} is not prolongable on {letter!r}")
        return phi, letter
    try:
        j, letter = prolongable_power(phi)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return power(phi, j), letter


def cmd_fixpoint(phi, args):
    psi, letter = _fixpoint_letter(phi, args.letter)
    try:
        prefix = fixed_point_prefix(psi, letter, args.length)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload = {"morphism": str(phi), "fixpoint": {"letter": letter, "length": args.length,
                                                  "prefix": prefix}}
    return payload, prefix, None


def cmd_palindromes(phi, args):
    psi, letter = _fixpoint_letter(phi, args.letter)
    try:
        text = fixed_point_prefix(psi, letter, args.length)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    bound = args.bound or max(2, int(args.length ** 0.5))
    census = palindrome_census(text, geometric_bands(bound))
    centre, arm = census.branch
    section = {"letter": letter, "length": args.length,
               "bands": [list(b) for b in census.bands], "counts": census.counts,
               "distinct": census.distinct, "longest": census.longest,
               "strictly_increasing": census.strictly_increasing(),
               "branch_centre": centre, "branch_arm_length": len(arm)}
    rows = [("morphism", arrow(str(phi))), ("prefix length", args.length),
            ("distinct palindromes", census.distinct), ("longest", census.longest)]
    rows += [(f"[{lo}, {hi})", c) for (lo, hi), c in zip(census.bands, census.counts)]
    return {"morphism": str(phi), "palindromes": section}, render_rows(rows), \
        census.strictly_increasing()


def cmd_bispecials(phi, args):
    _require_acyclic(phi, "bispecials")
    try:
        orbit = phi_orbit(phi, args.max_len, args.seed_bound)
    except ValueError as exc:
        raise InputError(f"bispecials: {exc}") from None
    key = phi.alphabet.sort_key
    section = {"max_len": orbit.max_len, "seed_bound": orbit.seed_bound, "w": orbit.w,
               "initial": orbit.initial,
               "orbit": [[u, orbit.orbit[u]] for u in sorted(orbit.orbit, key=key)],
               "bispecial": sorted(orbit.bispecials, key=key),
               "misses": orbit.misses, "not_bispecial": orbit.not_bispecial,
               "speciality_violations": sorted(orbit.speciality_violations),
               "complete": orbit.complete}
    rows = [("morphism", arrow(str(phi))), ("conjugate word", orbit.w),
            ("seed bound", orbit.seed_bound), ("initial", orbit.initial),
            ("bispecials", len(orbit.bispecials)), ("misses", orbit.misses),
            ("complete", orbit.complete)]
    return {"morphism": str(phi), "bispecials": section}, render_rows(rows), orbit.complete


COMMANDS = {
    "analyze": cmd_analyze, "conjugates": cmd_conjugates, "classp": cmd_classp,
    "hks": cmd_hks, "fixpoint": cmd_fixpoint, "palindromes": cmd_palindromes,
    "bispecials": cmd_bispecials,
}


# -- batch ----------------------------------------------------------------

def read_corpus(text: str):
    """Yield ``(line_number, name, spec, error)`` for each non-comment line."""
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, spec = line.partition(":")
        if not sep or not name.strip():
            yield n, None, None, "expected 'name: spec'"
            continue
        yield n, name.strip(), spec.strip(), None


def batch(text: str, factors: Optional[int] = None) -> dict:
    reports, errors = [], []
    for n, name, spec, err in read_corpus(text):
        if err is None:
            try:
                reports.append(analysis_report(parse_morphism(spec), name, factors))
                continue
            except ValueError as exc:
                err = str(exc)
        errors.append({"line": n, "name": name, "error": err})
    summary = [{"name": r["name"], "morphism": r["morphism"],
                "primitive": r["classification"]["primitive"],
                "marked": r["classification"]["marked"],
                "class_p_conjugate": (r["class_p"]["conjugacy_report"] or {}).get("conditions", [None] * 2)[1],
                "palindromic": r["hks"]["palindromic"],
                "status": r["hks"]["status"]} for r in reports]
    return {"reports": reports, "errors": errors, "summary": summary}


def render_batch(result: dict) -> str:
    blocks = [render_analysis(r) for r in result["reports"]]
    cols = ["name", "primitive", "marked", "class_p_conjugate", "palindromic", "status"]
    table = [cols] + [[_b(s[c]) if isinstance(s[c], bool) or s[c] is None else str(s[c])
                       for c in cols] for s in result["summary"]]
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    for e in result["errors"]:
        lines.append(f"line {e['line']}: {e['error']}")
    lines.append(f"{len(result['reports'])} analysed, {len(result['errors'])} failed")
    return "\n\n".join(blocks + ["\n".join(lines)])


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the structured report")
    common.add_argument("--assert", dest="check", action="store_true",
                        help="exit 1 when the command's property is false")

    parser = argparse.ArgumentParser(prog="palmorph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common], help="full report")
    p.add_argument("spec")
    p.add_argument("--factors", type=int, default=None, metavar="N",
                   help="include factor statistics up to length N")
    for name, help_ in (("conjugates", "leftmost/rightmost conjugates and markedness"),
                        ("classp", "class P membership and conjugacy conditions"),
                        ("hks", "palindromicity decision")):
        sub.add_parser(name, parents=[common], help=help_).add_argument("spec")
    p = sub.add_parser("fixpoint", parents=[common], help="fixed-point prefix")
    p.add_argument("spec")
    p.add_argument("--letter", default=None)
    p.add_argument("--length", type=int, required=True)
    p = sub.add_parser("palindromes", parents=[common], help="palindrome census of a prefix")
    p.add_argument("spec")
    p.add_argument("--letter", default=None)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--bound", type=int, default=None, help="upper end of the length bands")
    p = sub.add_parser("bispecials", parents=[common], help="bispecial orbit check")
    p.add_argument("spec")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--seed-bound", type=int, default=None)
    p = sub.add_parser("batch", parents=[common], help="analyse every entry of a corpus file")
    p.add_argument("corpus")
    p.add_argument("--factors", type=int, default=None, metavar="N")
    return parser


def run(argv, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2

    if args.command == "batch":
        try:
            with open(args.corpus, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=err)
            return 2
        result = batch(text, args.factors)
        out.write((json.dumps(result, indent=2, ensure_ascii=False) if args.json
                   else render_batch(result)) + "\n")
        if result["errors"]:
            return 2
        if args.check and not all(s["palindromic"] for s in result["summary"]):
            return 1
        return 0

    try:
        phi = parse_morphism(args.spec)
        payload, text, headline = COMMANDS[args.command](phi, args)
    except (MorphismSyntaxError, InputError, CyclicMorphismError, ErasingMorphismError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    out.write((json.dumps(payload, indent=2, ensure_ascii=False) if args.json else text) + "\n")
    if args.check and headline is False:
        return 1
    return 0


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
