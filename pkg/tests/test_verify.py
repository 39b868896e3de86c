import json
from pathlib import Path

import pytest

from satbound.corpus import FAMILIES, ExampleSpec, UnknownExample, build_example, default_corpus
from satbound.field import Field
from satbound.ideal_ops import ideal_power, sat_degree, saturate, symbolic_power
from satbound.resolution import arith_reg
from satbound.schur import thm_bound
from satbound.verify import (
    NA,
    PASS,
    REPORT_KEYS,
    Case,
    NotACurve,
    caviglia_values,
    default_cases,
    run_case,
    run_suite,
    summary_table,
    validate_report_dict,
    verify_corollaryC,
    verify_macaulay,
    verify_thmA,
    verify_thmB,
    verify_zariski,
)

GOLDEN = Path(__file__).parent / "golden"


def stable(report):
    d = report.to_dict()
    d.pop("elapsed_ms")
    return d


def test_build_example_examples():
    R = build_example("coord_points", r=2).ring
    x, y, z = R.gens()
    assert set(build_example("coord_points", r=2).ideal.gens) == {x * y, y * z, z * x}
    cav = build_example("caviglia", d=3).ideal
    x, y, z, w = cav.ring.gens()
    assert set(cav.gens) == {x**3, y**3, x * z**2 - y * w**2}
    hyp = build_example("hyperplane", r=2, d=2).ideal
    x, y, z = hyp.ring.gens()
    ell = x + y + z
    assert set(hyp.gens) == {x * ell, y * ell, z * ell}
    with pytest.raises(UnknownExample):
        build_example("cubic_surface")
    with pytest.raises(ValueError):
        build_example("rnc", r=1)


def test_build_example_is_deterministic():
    spec = ExampleSpec.make("complete_intersection", degrees=(2, 3), r=4, generic=True, seed=3)
    a = build_example(spec).ideal
    b = build_example(spec).ideal
    assert [str(g) for g in a.gens] == [str(g) for g in b.gens]
    assert all(g.is_homogeneous()[0] for g in a.gens)


def test_corpus_metadata(corpus):
    assert {ex.spec.name for ex in corpus} <= set(FAMILIES)
    for ex in corpus:
        assert all(g.is_homogeneous()[0] for g in ex.ideal.gens)
        assert ex.degrees.d == sorted((g.degree() for g in ex.ideal.gens), reverse=True)


def test_thmA_examples():
    rep = verify_thmA(ExampleSpec.make("hyperplane", r=2, d=2), 2)
    assert (rep.computed_value, rep.bound_value, rep.status) == (4, 6, PASS)
    rep = verify_thmA(ExampleSpec.make("coord_points", r=2), 2)
    assert (rep.computed_value, rep.bound_value, rep.status) == (4, 6, PASS)
    assert rep.witness["gap_dims"] == {"3": 1}
    rep = verify_thmA(ExampleSpec.make("caviglia", d=4), 1)
    assert rep.computed_value > rep.bound_value == 9
    assert rep.status == NA and not rep.passed


def test_thmB_examples():
    rep = verify_thmB(ExampleSpec.make("rnc", r=4), 2)
    assert rep.status == PASS and rep.bound_value == 4 and rep.computed_value <= 4
    assert rep.witness["m"] == 2
    assert rep.witness["sharp"] == (rep.computed_value == 4)
    rep = verify_thmB(ExampleSpec.make("twisted_cubic"), 2)
    assert rep.status == PASS and rep.computed_value <= 4
    rep = verify_thmB(ExampleSpec.make("rnc", r=4), 1)
    assert rep.computed_value == 0
    with pytest.raises(NotACurve):
        verify_thmB(ExampleSpec.make("coord_points", r=2), 1)


def test_thmB_symbolic_agreement_witness():
    ex = build_example("twisted_cubic")
    rep = verify_thmB(ex, 2)
    t0 = rep.witness["symbolic_agrees_from"]
    P = symbolic_power(ex.ideal, 2, smooth_checked=True)
    J = ideal_power(ex.ideal, 2)
    for t in range(t0, t0 + 4):
        assert P.graded_dim(t) == J.graded_dim(t)


def test_macaulay_examples():
    rep = verify_macaulay([2, 2, 2], 1)
    assert rep.passed and rep.bound_value == 4
    assert rep.witness["dim_below_bound"] == 9 and rep.witness["full_below_bound"] == 10
    rep = verify_macaulay([2, 2, 2], 2)
    assert rep.passed and rep.bound_value == 6
    rep = verify_macaulay([1, 1, 1], 1)
    assert rep.passed and rep.bound_value == 1 and rep.witness["dim_at_bound"] == 3


def test_corollaryC_examples():
    rep = verify_corollaryC(ExampleSpec.make("coord_points", r=2), 2)
    assert (rep.computed_value, rep.bound_value, rep.status) == (4, 6, PASS)
    rep = verify_corollaryC(ExampleSpec.make("hyperplane", r=2, d=2), 2)
    assert rep.computed_value <= 6 and rep.status == PASS


def test_corollaryC_padded_bound_fails_for_short_complete_intersections():
    """Two generic quadrics in P^3: regularity 2a+1 against the zero-padded value 2a-1."""
    spec = ExampleSpec.make("complete_intersection", degrees=(2, 2), r=3, generic=True, seed=0)
    ex = build_example(spec)
    assert ex.smooth
    for a in (1, 2):
        rep = verify_corollaryC(ex, a)
        assert rep.bound_value == 2 * a - 1
        assert rep.computed_value == 2 * a + 1
        assert sat_degree(ideal_power(ex.ideal, a)).sat_degree == 0
        assert not rep.passed and rep.status == NA
        assert "padded" in rep.note


def test_zariski_examples():
    for spec in (
        ExampleSpec.make("complete_intersection", degrees=(2, 2), r=3),
        ExampleSpec.make("complete_intersection", degrees=(3, 2), r=4, generic=True, seed=1),
    ):
        for a in (1, 2, 3):
            rep = verify_zariski(spec, a)
            assert rep.passed and rep.computed_value == 0


def test_report_schema_and_json():
    rep = verify_thmA(ExampleSpec.make("coord_points", r=2), 2)
    d = json.loads(rep.to_json())
    assert tuple(sorted(d)) == tuple(sorted(REPORT_KEYS))
    validate_report_dict(d)
    assert d["field"]["characteristic"] == Field().p
    assert "caveat" in d["field"]
    bad = dict(d)
    bad.pop("pass")
    with pytest.raises(ValueError):
        validate_report_dict(bad)
    with pytest.raises(ValueError):
        validate_report_dict({**d, "status": "maybe"})


def test_reports_are_reproducible():
    case = Case("thmA", ExampleSpec.make("complete_intersection", degrees=(2, 2), r=3, generic=True, seed=0), 2)
    assert stable(run_case(case)) == stable(run_case(case))


def test_run_suite_edge_cases():
    assert run_suite(names=[]) == []
    reports = run_suite(names=["caviglia"])
    assert len(reports) == 3
    assert all(r.status == NA for r in reports)
    assert [r.computed_value for r in reports] == [8, 15, 24]


def test_run_suite_order_is_input_order_with_jobs():
    cases = [c for c in default_cases(2) if c.kind in ("thmA", "zariski")][:8]
    serial = run_suite(cases=cases)
    parallel = run_suite(cases=cases, jobs=3)
    assert [stable(r) for r in serial] == [stable(r) for r in parallel]


def test_errors_are_carried_in_reports():
    rep = run_case(Case("thmB", ExampleSpec.make("coord_points", r=2), 1))
    assert rep.status == "error" and rep.witness == {"error": "NotACurve"}
    assert rep.is_failure
    validate_report_dict(rep.to_dict())


def test_summary_table_has_one_row_per_report():
    reports = run_suite(names=["coord_points"], a_max=1)
    text = summary_table(reports)
    assert len(text.splitlines()) == len(reports)
    assert all("coord_points" in line for line in text.splitlines())


def test_caviglia_golden_values():
    golden = {int(k): v for k, v in json.loads((GOLDEN / "caviglia.json").read_text()).items()}
    assert caviglia_values() == golden


def test_smooth_members_symbolic_agreement_from_thmA_bound(corpus):
    for ex in corpus:
        if not ex.smooth or ex.ring.nvars > 5:
            continue
        S = saturate(ex.ideal)
        for a in (1, 2):
            bound = thm_bound("thmA", a, ex.degrees)
            P = symbolic_power(S, a, smooth_checked=True)
            J = ideal_power(ex.ideal, a)
            for t in range(max(bound, 0), max(bound, 0) + 3):
                assert P.graded_dim(t) == J.graded_dim(t), (ex.spec.label(), a, t)


def test_corollaryC_on_members_with_enough_generators(corpus):
    for ex in corpus:
        if not ex.smooth or ex.degrees.p < ex.degrees.r:
            continue
        for a in (1, 2):
            assert arith_reg(ideal_power(ex.ideal, a)) <= thm_bound("thmA", a, ex.degrees), ex.spec.label()


def test_rational_field_agrees_on_small_cases():
    for name, params in [("coord_points", {"r": 2}), ("hyperplane", {"r": 2, "d": 2})]:
        for a in (1, 2):
            vals = [verify_thmA(build_example(name, fld, **params), a).computed_value for fld in (Field(), Field(0))]
            assert vals[0] == vals[1]


def test_default_corpus_is_stable():
    a = default_corpus()
    b = default_corpus()
    assert [e.spec for e in a] == [e.spec for e in b]
    assert [[str(g) for g in e.ideal.gens] for e in a] == [[str(g) for g in e.ideal.gens] for e in b]


def test_thmA_negative_bound_with_saturated_power():
    ex = build_example("complete_intersection", degrees=[1], r=2)
    rep = verify_thmA(ex, 1)
    assert rep.bound_value == -1 and rep.computed_value == 0
    assert rep.passed and rep.status == PASS
