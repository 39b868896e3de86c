import json
import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from satbound.corpus import build_example
from satbound.ideal_ops import ideal_power
from satbound.resolution import minimal_betti
from satbound.schur import (
    EMPTY,
    ContractViolation,
    DegreeSequence,
    GradedMultiset,
    RegularityPreconditionError,
    be_complex,
    be_euler_char,
    complex_json,
    complex_table,
    ext_power,
    hook_graded,
    hook_rank_oracle,
    resolution_modules,
    sym_power,
    thm_bound,
    weyman_reg_check,
    weyman_terms,
)

GM = GradedMultiset
degree_lists = st.lists(st.integers(0, 4), min_size=1, max_size=4)


def test_sym_and_ext_examples():
    assert sym_power(GM([2, 1]), 2) == GM([4, 3, 2])
    assert ext_power(GM([2, 2, 2]), 3) == GM([6])
    assert ext_power(GM([1, 1]), 3) == EMPTY
    assert sym_power(GM([5]), 0) == GM([0])
    assert ext_power(GM([1, 2, 3]), 2) == GM([3, 4, 5])


def test_hook_examples():
    h = hook_graded(2, 2, GM([1, 1]))
    assert h.rank == 2 and h.degrees == [3, 3]
    V = GM([3, 2, 1, 1])
    for k in range(1, 5):
        assert hook_graded(1, k, V) == ext_power(V, k)
    for a in range(1, 5):
        assert hook_graded(a, 1, V) == sym_power(V, a)
    assert hook_graded(3, 5, V) == EMPTY
    with pytest.raises(ValueError):
        hook_graded(0, 1, V)


def test_oracle_examples():
    assert hook_rank_oracle(2, 2, 2) == 2
    for a in range(1, 5):
        for n in range(1, 5):
            assert hook_rank_oracle(a, 1, n) == comb(n + a - 1, a)
            assert hook_rank_oracle(1, a, n) == comb(n, a)


def test_hook_rank_matches_tableau_count():
    for a in range(1, 6):
        for k in range(1, 6):
            for n in range(1, 7):
                assert hook_graded(a, k, GM([1] * n)).rank == hook_rank_oracle(a, k, n), (a, k, n)


@given(degree_lists, st.integers(2, 5), st.integers(1, 5))
def test_pieri_identity(ds, a, k):
    V = GM(ds)
    lhs = sym_power(V, a - 1).tensor(ext_power(V, k))
    assert lhs == hook_graded(a, k, V) + hook_graded(a - 1, k + 1, V)


def test_pieri_identity_on_corpus_modules(corpus):
    for ex in corpus:
        V = ex.degrees.module()
        for a in range(2, 6):
            for k in range(1, 6):
                lhs = sym_power(V, a - 1) * ext_power(V, k)
                assert lhs == hook_graded(a, k, V) + hook_graded(a - 1, k + 1, V)


@given(degree_lists, st.integers(1, 4), st.integers(1, 4), st.integers(-3, 3))
def test_twist_rule(ds, a, k, c):
    V = GM(ds)
    assert hook_graded(a, k, V.shift(c)) == hook_graded(a, k, V).shift((a + k - 1) * c)


def test_max_degree_formula():
    rng = random.Random(2024)
    for _ in range(20):
        D = DegreeSequence([rng.randint(1, 6) for _ in range(rng.randint(1, 5))], r=4)
        d = D.d
        for a in range(1, 5):
            for k in range(1, len(d) + 1):
                assert hook_graded(a, k, D.module()).max_degree() == a * d[0] + sum(d[1:k])


def test_graded_multiset_contract():
    with pytest.raises(ContractViolation):
        GM([1]) - GM([2])
    with pytest.raises(ContractViolation):
        GM({1: -1})
    assert GM([1, 1, 2]) - GM([1]) == GM([1, 2])
    assert GM([1, 2]).to_json() == {"rank": 2, "degrees": [1, 2]}
    assert (GM([0, 1]) * GM([1, 1])).degrees == [1, 1, 2, 2]


def test_degree_sequence_padding():
    D = DegreeSequence([2, 3], r=3)
    assert D.d == [3, 2] and D.p == 1
    assert D.padded() == [3, 2, 0, 0]
    assert DegreeSequence([2] * 6, r=4).padded() == [2] * 5
    with pytest.raises(ValueError):
        DegreeSequence([0, 1], r=2)


def test_thm_bound_examples():
    assert thm_bound("thmA", 1, DegreeSequence([2, 2, 2], 2)) == 4
    for r, d in [(2, 2), (2, 3), (3, 2)]:
        for a in (1, 2, 3):
            assert thm_bound("thmA", a, DegreeSequence([d] * (r + 1), r)) == (a + r) * d - r
    assert thm_bound("macaulay", 2, DegreeSequence([2, 2, 2], 2)) == 6
    for a in (1, 2, 3):
        assert thm_bound("thmB", a, m=2) == 2 * a
    with pytest.raises(ValueError):
        thm_bound("thmC", 1, DegreeSequence([1], 1))


def test_weyman_labels():
    U = [GM([2, 2, 2]), GM([3, 3])]
    summands, total = weyman_terms(3, 0, U)
    assert [lab for lab, _ in summands] == ["S^3 U0"]
    assert total == sym_power(U[0], 3)
    summands, total = weyman_terms(3, 1, U)
    assert [lab for lab, _ in summands] == ["S^2 U0 * L^1 U1"]
    assert total == sym_power(U[0], 2) * U[1]
    U3 = U + [GM([4])]
    labels = sorted(lab for lab, _ in weyman_terms(3, 2, U3)[0])
    assert labels == ["S^1 U0 * L^2 U1", "S^2 U0 * S^1 U2"]


def test_weyman_short_resolution_has_fewer_terms():
    U = [GM([2, 2, 2]), GM([3, 3])]
    summands, _ = weyman_terms(2, 3, U)
    assert summands == []
    summands, total = weyman_terms(2, 2, U)
    assert [lab for lab, _ in summands] == ["L^2 U1"]
    assert total == GM([6])


def test_weyman_reg_check_on_resolutions():
    for name, params in [("twisted_cubic", {}), ("coord_points", {"r": 2})]:
        ex = build_example(name, **params)
        U = resolution_modules(minimal_betti(ex.ideal))
        for a in (1, 2, 3):
            for i in range(5):
                assert weyman_reg_check(a, i, 2, U)
        assert weyman_terms(2, 0, U)[1].max_degree() == 4


def test_weyman_precondition():
    with pytest.raises(RegularityPreconditionError):
        weyman_reg_check(2, 1, 2, [GM([2]), GM([5])])
    assert weyman_reg_check(2, 0, 2, [GM([2])]) is True


def test_be_complex_examples():
    D = DegreeSequence([2, 2, 2], 2)
    C = be_complex(1, D)
    assert C == [ext_power(D.module(), k) for k in (1, 2, 3)]
    C = be_complex(2, D)
    assert len(C) == 3
    assert C[0] == GM([4] * 6)
    d = D.d
    for i, Ci in enumerate(C):
        assert Ci.max_degree() == 2 * d[0] + sum(d[1 : i + 1])


def test_be_euler_char_examples():
    D = DegreeSequence([2, 2, 2], 2)
    assert be_euler_char(1, D, 4) == 15
    assert be_euler_char(1, D, 3) == 9
    assert be_euler_char(1, D, 1) == 0
    assert be_euler_char(3, DegreeSequence([3, 2], 3), 5) == 0


@pytest.mark.parametrize("degrees,r", [([2, 2, 2], 2), ([1, 2, 3], 2), ([2, 2], 3), ([3, 2, 2], 3)])
def test_be_euler_char_matches_graded_dim(degrees, r):
    ex = build_example("generic_regseq", degrees=degrees, r=r, seed=0)
    D = DegreeSequence(degrees, r)
    for a in (1, 2):
        J = ideal_power(ex.ideal, a)
        top = thm_bound("thmA", a, D) + 3
        for t in range(max(top, 0) + 1):
            assert be_euler_char(a, D, t) == J.graded_dim(t), (a, t)


def test_be_complex_betti_match_for_complete_intersection():
    ex = build_example("generic_regseq", degrees=[2, 3], r=3, seed=0)
    for a in (1, 2, 3):
        table = minimal_betti(ideal_power(ex.ideal, a))
        C = be_complex(a, DegreeSequence([2, 3], 3))
        assert resolution_modules(table) == C


def test_table_and_json_output():
    C = be_complex(2, DegreeSequence([2, 2, 2], 2))
    text = complex_table(C)
    assert text.splitlines()[0].startswith("C0")
    assert "4^6" in text
    data = json.loads(complex_json(C))
    assert data[0] == {"i": 0, "rank": 6, "degrees": [4] * 6}
    assert [row["rank"] for row in data] == [6, 8, 3]
