import pytest
from hypothesis import HealthCheck, given, settings

from conftest import (CORPUS, CYCLIC, FIB, NON_PRIMITIVE, PHI, PSI_F, TERNARY,
                      TM, TM2, XI, M, morphisms)
from palmorph.classp import (HksPreconditionError, PreconditionError,
                             class_p_conjugacy_report, class_p_discrepancy,
                             class_p_conjugate_by_shifting, desubstitute, hks_verify,
                             is_class_p, is_class_p_suffix_form,
                             mirror_equation_check, prolongable_power,
                             right_conjugates_with_word)
from palmorph.conjugacy import (CyclicMorphismError, NotMarkedError,
                                check_right_conjugate, conjugacy_class,
                                conjugacy_extremes, markedness)
from palmorph.factors import build_factor_index, geometric_bands, palindrome_census
from palmorph.morphism import (apply, fixed_point_prefix, is_cyclic,
                               is_primitive, power, reverse_morphism)
from palmorph.words import is_palindrome, reverse

acyclic = morphisms(min_len=1, max_len=5, max_letters=4).filter(lambda m: not is_cyclic(m))
ACYCLIC_CORPUS = {k: v for k, v in CORPUS.items() if not is_cyclic(v)}


def test_is_class_p_examples():
    m = is_class_p(TM2)
    assert m.in_class_p and m.witness_p == ""
    m = is_class_p(PSI_F)
    assert m.in_class_p and m.witness_p == "1"
    assert not is_class_p(TM).in_class_p and is_class_p(TM).witness_p is None
    m = is_class_p(PHI[4])
    assert m.in_class_p and m.witness_p == ""


def test_fibonacci_literal_versus_strict():
    literal, strict = is_class_p(FIB), is_class_p(FIB, strict_q=True)
    assert literal.in_class_p and literal.witness_p == "0"
    assert not strict.in_class_p and strict.strict_q
    assert class_p_discrepancy(FIB)
    assert not class_p_discrepancy(TM2)


def test_suffix_form_variant():
    assert not is_class_p(NON_PRIMITIVE).in_class_p
    m = is_class_p_suffix_form(NON_PRIMITIVE)
    assert m.in_class_p and m.witness_p == "00"


def test_report_phi3_with_shift_trace():
    r = class_p_conjugacy_report(PHI[3])
    assert r.conditions == (True,) * 5
    assert r.w == "babbab" and is_palindrome(r.w)
    assert r.k == 3
    # phi7 -> phi6 -> phi5 -> phi4: three right shifts, each moving the common last letter to the front
    trace = [PHI[7]]
    for expected in (PHI[6], PHI[5], PHI[4]):
        images = trace[-1].images
        assert len({img[-1] for img in images}) == 1
        trace.append(M(";".join(f"{a}->{img[-1] + img[:-1]}" for a, img in zip("ab", images))))
        assert trace[-1] == expected
    assert r.witness == PHI[4] and r.witness_p == ""


def test_report_thue_morse():
    assert class_p_conjugacy_report(TM).conditions == (False,) * 5
    r = class_p_conjugacy_report(TM2)
    assert r.conditions == (True,) * 5
    assert r.w == "" and r.witness == TM2 and r.witness_p == ""


def test_report_p_b_factorisation():
    r = class_p_conjugacy_report(PHI[3])
    for b in r.B:
        assert r.extremes.leftmost.image(b) == r.p_b[b] + r.w


def test_report_rejects_cyclic_and_erasing():
    with pytest.raises(CyclicMorphismError):
        class_p_conjugacy_report(CYCLIC)
    with pytest.raises(ValueError):
        class_p_conjugacy_report(M("a->;b->ab"))


@pytest.mark.parametrize("name", sorted(ACYCLIC_CORPUS))
def test_conditions_agree_on_corpus(name):
    assert class_p_conjugacy_report(ACYCLIC_CORPUS[name]).consistent


@settings(max_examples=300, deadline=None)
@given(acyclic)
def test_conditions_agree_random(phi):
    r = class_p_conjugacy_report(phi)
    assert r.consistent, r.conditions


def _word_from_leftmost(phi, psi):
    """Conjugate word linking leftmost(phi) to psi along the right-shift chain."""
    left = conjugacy_extremes(phi).leftmost
    chain = conjugacy_class(phi)
    step = chain.index(psi)
    shifted, word = right_conjugates_with_word(left, step)
    assert shifted == psi
    return left, word


@settings(max_examples=200, deadline=None)
@given(acyclic)
def test_witness_is_valid(phi):
    r = class_p_conjugacy_report(phi)
    if r.witness is None:
        return
    left, word = _word_from_leftmost(phi, r.witness)
    assert check_right_conjugate(r.witness, left, word)
    assert is_class_p(r.witness).in_class_p


@settings(max_examples=200, deadline=None)
@given(acyclic)
def test_self_duality(phi):
    assert class_p_conjugacy_report(phi).cond2 == class_p_conjugacy_report(reverse_morphism(phi)).cond2


def test_hks_examples():
    v = hks_verify(TM)
    assert v.palindromic and v.power == 2
    assert v.conjugate_witness == TM2 and v.class_p_p == ""
    v = hks_verify(TERNARY)
    assert not v.palindromic and v.periodic_case.period_word == "abc"
    v = hks_verify(PHI[3])
    assert v.palindromic and v.power == 1 and v.conjugate_witness == PHI[4]
    v = hks_verify(XI)
    assert v.palindromic and is_class_p(XI).in_class_p


def test_hks_preconditions():
    with pytest.raises(HksPreconditionError) as exc:
        hks_verify(NON_PRIMITIVE)
    assert exc.value.classification["primitive"] is False
    with pytest.raises(HksPreconditionError) as exc:
        hks_verify(CYCLIC)
    assert exc.value.classification["cyclic"]
    with pytest.raises(HksPreconditionError):
        hks_verify(M("a->ab;b->ab;c->abc"))


HKS_FIXTURES = [phi for phi in CORPUS.values()
                if not is_cyclic(phi) and is_primitive(phi) and markedness(phi).marked]


def _verdict_witness_is_conjugate(phi, v):
    psi = power(phi, v.power)
    assert v.conjugate_witness in conjugacy_class(psi)
    left, word = _word_from_leftmost(psi, v.conjugate_witness)
    assert check_right_conjugate(v.conjugate_witness, left, word)
    assert is_class_p(v.conjugate_witness).witness_p == v.class_p_p


@pytest.mark.parametrize("phi", HKS_FIXTURES, ids=str)
def test_hks_witness_and_census(phi):
    v = hks_verify(phi)
    if v.palindromic:
        _verdict_witness_is_conjugate(phi, v)
    j, a = prolongable_power(phi)
    census = palindrome_census(fixed_point_prefix(power(phi, j), a, 20000), geometric_bands(256))
    if v.palindromic:
        assert census.strictly_increasing()
    else:
        assert census.saturated()


@settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(acyclic.filter(is_primitive))
def test_hks_random(phi):
    try:
        v = hks_verify(phi)
    except HksPreconditionError:
        return
    if v.palindromic:
        _verdict_witness_is_conjugate(phi, v)
    j, a = prolongable_power(phi)
    census = palindrome_census(fixed_point_prefix(power(phi, j), a, 20000), geometric_bands(256))
    assert census.strictly_increasing() == v.palindromic
    assert census.saturated() != v.palindromic


def test_desubstitute():
    assert desubstitute(PHI[1], "babbabab") == "ab"
    assert desubstitute(TM, "0110") == "01"
    assert desubstitute(TM, "011") is None


def test_mirror_equation_examples():
    assert reverse(apply(TM2, "01")) == apply(TM2, "10")
    assert all(mirror_equation_check(TM2, "01", "10").values())
    assert all(mirror_equation_check(TM2, "", "").values())
    assert all(mirror_equation_check(PHI[3], "", "").values())
    with pytest.raises(ValueError):
        mirror_equation_check(TM2, "01", "01")
    with pytest.raises(NotMarkedError):
        mirror_equation_check(TM, "", "")


def test_mirror_equation_from_phi3_language():
    ext = conjugacy_extremes(PHI[3])
    idx = build_factor_index(PHI[3], None, 40)
    pairs = 0
    palindromic_bispecial = 0
    for u in idx.factors:
        if not u or len(u) > 5:
            continue
        x = apply(ext.rightmost, u) + ext.w
        assert x in idx
        v = desubstitute(ext.rightmost, reverse(x)[:len(x) - len(ext.w)])
        if v is None or not reverse(x).endswith(ext.w):
            continue
        assert all(mirror_equation_check(PHI[3], u, v).values())
        pairs += 1
        palindromic_bispecial += is_palindrome(x)
    assert pairs >= 20 and palindromic_bispecial > 0


def test_class_p_conjugate_by_shifting():
    assert class_p_conjugate_by_shifting(PHI[7], "babbab") == PHI[4]
    assert class_p_conjugate_by_shifting(TM2, "") == TM2
    with pytest.raises(PreconditionError) as exc:
        class_p_conjugate_by_shifting(PHI[7], "babba")
    assert any("palindrome" in v for v in exc.value.violations)
    with pytest.raises(PreconditionError):
        class_p_conjugate_by_shifting(PHI[1], "bab")
