import pytest

from dtknots.diophantine import solve_quad, solve_triple_system
from dtknots.invariants import GramForm, goeritz_pair, tridiagonal
from dtknots.lattice import (OracleBudgetExceeded, PathGraphSpec, embed_gram, is_normalized_chain,
                             iter_embeddings, jk_embedding_exists, jk_form, scaled_charge_monotonicity_check)


def test_path_graph_examples():
    assert embed_gram(PathGraphSpec(2, 0).form(), 4) is not None
    assert embed_gram(PathGraphSpec(4, 0).form(), 6) is None


def test_path_graph_table():
    for k in range(1, 6):
        for ell in (0, 2, 4):
            spec = PathGraphSpec(k, ell)
            exists = embed_gram(spec.form(), spec.codomain_rank) is not None
            assert exists == ((k, ell) == (3, 0) or k == 2 or ell == 2), (k, ell)


def test_plus_form_with_det_has_no_embedding():
    g = goeritz_pair(3, 2, 1).direct_sum(7)
    assert embed_gram(g, 3) is None


@pytest.mark.parametrize("pair, case, eps, exists", [
    ((3, 2), 2, -1, True),
    ((2, 2), 4, 1, True),
])
def test_jk_examples(pair, case, eps, exists):
    assert jk_embedding_exists(pair, case, eps) is exists


def test_jk_rank_two_obstruction_for_22_62():
    for eps in (1, -1):
        assert not jk_embedding_exists((22, 62), 4, eps, max_rank=64)


def test_jk_form_case_sign_rules():
    with pytest.raises(ValueError):
        jk_form((3, 2), 1, -1)
    with pytest.raises(ValueError):
        jk_form((3, 2), 2, 1)


def test_positive_n_equivalence():
    for m in range(2, 9):
        for n in (2, 4, 6):
            assert jk_embedding_exists((m, n), 1, 1) == (solve_quad(m, n) is not None)
            assert jk_embedding_exists((m, n), 2, -1) == (solve_quad(n, m) is not None)


def test_negative_n_plus_equivalence():
    for m in range(2, 7):
        for n in (-2, -4, -6, -8):
            g = goeritz_pair(m, n, 1).direct_sum(abs(m * n + 1))
            assert (embed_gram(g, 3) is not None) == (solve_triple_system(m, -n) is not None)


def test_negative_n_minus_equivalence():
    for m in range(2, 10):
        for n in range(-2, -(12 - m), -2):
            g = goeritz_pair(m, n, -1).direct_sum(-abs(m * n + 1))
            expected = (m, n) == (5, -2) or 4 in (m, -n)
            assert (embed_gram(g, g.rank) is not None) == expected, (m, n)


@pytest.mark.parametrize("pair, ell", [((2, 2), 5), ((3, 4), 13)])
def test_scaled_charge_examples(pair, ell):
    assert scaled_charge_monotonicity_check(goeritz_pair(*pair, 1), ell, 2)


def test_scaled_charge_vacuous():
    g = goeritz_pair(3, 2, 1)
    assert embed_gram(g.direct_sum(7), 3) is None
    assert scaled_charge_monotonicity_check(g, 7, 3)


def test_path_graph_chains_are_normalized():
    for k in range(1, 6):
        for ell in (0, 2, 4):
            spec = PathGraphSpec(k, ell)
            for w in iter_embeddings(spec.form(), spec.codomain_rank + 1):
                head, tail = w.rows[:k], w.rows[k + 1:]
                assert is_normalized_chain(head), (k, ell, w.rows)
                if tail:
                    assert is_normalized_chain(tail), (k, ell, w.rows)
                    used = {c for r in head for c, v in enumerate(r) if v}
                    assert not any(r[c] for r in tail for c in used)


def test_bare_three_chain_has_exotic_embedding():
    # A_3 = D_3: without a further vertex the third vector may be -f1 - f2
    chain = GramForm(tuple(map(tuple, tridiagonal([2] * 3, -1))))
    rows = [w.rows for w in iter_embeddings(chain, 4)]
    assert any(not is_normalized_chain(r) for r in rows)
    assert all(is_normalized_chain(w.rows) for r in (1, 2, 4, 5)
               for w in iter_embeddings(GramForm(tuple(map(tuple, tridiagonal([2] * r, -1)))), r + 1))


def test_witnesses_reproduce_target():
    g = goeritz_pair(4, 6, -1)
    for w in iter_embeddings(g, g.rank + 2):
        assert w.reproduces(g)


def test_budget_exceeded_is_distinct():
    with pytest.raises(OracleBudgetExceeded):
        embed_gram(PathGraphSpec(5, 4).form(), 11, node_budget=10)


def test_validation():
    with pytest.raises(ValueError):
        embed_gram(GramForm(((1, 2), (2, 1))), 2)
    with pytest.raises(ValueError):
        embed_gram(GramForm(((2,),)), 0)
    with pytest.raises(ValueError):
        embed_gram(GramForm(((500,),)), 1)


def test_diagonal_form_embeds_trivially():
    w = embed_gram(GramForm(((1, 0), (0, 4))), 2)
    assert w is not None and w.gram() == ((1, 0), (0, 4))
