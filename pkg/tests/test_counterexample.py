import time

from conftest import QQ
from leonardz.counterexample import (
    KNOWN_FORMS,
    KNOWN_ORDER,
    base_matrices,
    certificate_forms,
    counterexample_d2,
    render_report,
    run_elimination,
    tridiagonal_patterns_hold,
)
from leonardz.realization import primitive_idempotents


def test_full_report_passes_quickly():
    start = time.perf_counter()
    report = counterexample_d2()
    elapsed = time.perf_counter() - start
    assert report.idempotents_match
    assert report.patterns_hold
    assert report.g0g0star_vanishes
    assert len(report.elimination_steps) == 6
    assert elapsed < 1.0


def test_recorded_scales():
    report = counterexample_d2()
    assert report.form_scales[(2, 2)] == QQ(3)
    assert report.form_scales[(2, 1)] == QQ("1/12")
    assert report.form_scales[(2, 0)] == QQ("1/12")
    assert report.form_scales[(0, 1)] == QQ("1/16")
    assert report.form_scales[(1, 0)] == QQ("1/16")


def test_span_facts_are_as_computed():
    # the five normalized entry forms are independent, and the g0*g0star
    # form is NOT in their plain linear span; the vanishing conclusion
    # genuinely needs the nonvanishing constraints used by the elimination
    report = counterexample_d2()
    assert report.rank_five_forms == 5
    assert report.rank_with_g0g0star == 6
    assert report.g0g0star_in_span is False


def test_entry_22_form_is_antisymmetric_pair():
    a, a_star, eigs = base_matrices()
    e = primitive_idempotents(a, eigs, QQ)
    estar = primitive_idempotents(a_star, eigs, QQ)
    form = certificate_forms(a, a_star, e, estar)[(2, 2)]
    assert form[1][2] == QQ(3)
    assert form[2][1] == QQ(-3)
    assert sum(1 for i in range(3) for j in range(3) if form[i][j]) == 2


def test_entry_10_form_matches_known_coefficients():
    a, a_star, eigs = base_matrices()
    e = primitive_idempotents(a, eigs, QQ)
    estar = primitive_idempotents(a_star, eigs, QQ)
    form = certificate_forms(a, a_star, e, estar)[(1, 0)]
    scale_text, known = KNOWN_FORMS[(1, 0)]
    scale = QQ(scale_text)
    for i in range(3):
        for j in range(3):
            assert form[i][j] == scale * QQ(known[i][j])


def test_patterns_hold():
    a, a_star, eigs = base_matrices()
    e = primitive_idempotents(a, eigs, QQ)
    estar = primitive_idempotents(a_star, eigs, QQ)
    assert tridiagonal_patterns_hold(a, a_star, e, estar)


def test_elimination_runs_on_known_forms():
    normalized = {key: [[QQ(x) for x in row] for row in KNOWN_FORMS[key][1]]
                  for key in KNOWN_ORDER}
    steps = run_elimination(normalized)
    assert steps[-1].relation.startswith("so g*0 = 0")


def test_displayed_idempotent_rows():
    _, a_star, eigs = base_matrices()
    estar = primitive_idempotents(a_star, eigs, QQ)
    assert estar[0][0] == [QQ(1), QQ(1), QQ("9/4")]
    assert estar[2][1] == [QQ(0), QQ(0), QQ(-3)]


def test_render_contains_key_lines():
    text = render_report(counterexample_d2())
    assert "E_star0 row 0 = 1, 1, 9/4" in text
    assert "g0*g0star in linear span of five forms: no" in text
    assert "g0*g0star vanishes given invertibility: yes" in text
    assert "conclusion: certificate pair impossible, no spin" in text
