from fractions import Fraction

import pytest

from derivrecon.derivspace import derivative, e_space
from derivrecon.errors import (AmbientMismatch, DegenerateBasis, NotContained,
                               OrderOutOfRange, SymmetryViolated)
from derivrecon.exactla import ExactMatrix, row_space, subspace_contains
from derivrecon.genericity import certify_generic, sample_certified
from derivrecon.multiindex import dim_S, enumerate_indices
from derivrecon.polyring import HomPoly, euler_lhs, parse
from derivrecon.reconstruct import (AMBIGUOUS, EMPTY, UNIQUE, RelationMatrix, check_symmetry,
                                    constraint_matrix, descend, extract_relations,
                                    proportionality, solve_from_span, verify_theorem)
from oracles import sym_solution_dim

F14 = "x0^4 + x0*x1^3"


def generic(n, d, k, trial=0, seed=11):
    f, _, _ = sample_certified(n, d, k, 1000, seed, trial)
    return f


def test_k0_is_the_line():
    f = parse("3*x0^2 - x0*x1 + 5*x2^2", 2)
    res = solve_from_span(e_space(f, 0), 2, 2, 0)
    assert res.verdict == UNIQUE and res.solution_dim == 1
    assert proportionality(res.basis[0], f) is not None


def test_unique_binary_quartic():
    f = parse(F14, 1)
    V = e_space(f, 1)
    assert constraint_matrix(V, 1, 4, 1).rows == 4  # 2 partials x 2 annihilators
    res = solve_from_span(V, 1, 4, 1)
    assert res.solution_dim == 1 == sym_solution_dim(f, 1)
    assert res.verdict == UNIQUE
    assert proportionality(res.basis[0], f) is not None


def test_half_degree_is_ambiguous():
    f = generic(1, 4, 2)
    V = e_space(f, 2)
    assert V.is_full()
    res = solve_from_span(V, 1, 4, 2)
    assert res.solution_dim == 5 == dim_S(1, 4) and res.verdict == AMBIGUOUS


def test_fermat_quartic_is_ambiguous():
    f = parse("x0^4 + x1^4", 1)
    res = solve_from_span(e_space(f, 1), 1, 4, 1)
    assert res.solution_dim == 2 == sym_solution_dim(f, 1)
    assert res.verdict == AMBIGUOUS


def test_pure_power_reconstructs_even_without_hypothesis():
    # oracle: solution dim 1 for x0^d at every 1 <= k < d
    for d in range(2, 6):
        f = parse(f"x0^{d}", 1)
        for k in range(1, d):
            rep = verify_theorem(f, k)
            assert not rep.hypothesis
            assert rep.solution_dim == 1 == sym_solution_dim(f, k)


def test_empty_verdict_and_errors():
    V = e_space(HomPoly.zero(1, 3), 1)
    assert V.dim == 0
    res = solve_from_span(V, 1, 3, 1)
    assert res.verdict == EMPTY and res.solution_dim == 0
    with pytest.raises(AmbientMismatch):
        solve_from_span(e_space(parse(F14, 1), 1), 1, 5, 1)
    with pytest.raises(OrderOutOfRange):
        solve_from_span(e_space(parse(F14, 1), 1), 1, 4, 7)


@pytest.mark.parametrize("n, d, k", [(1, 4, 1), (1, 5, 1), (2, 4, 1), (1, 6, 2), (2, 5, 1)])
def test_soundness(n, d, k):
    for trial in range(3):
        f = generic(n, d, 0, trial)
        for kk in range(k + 1):
            res = solve_from_span(e_space(f, kk), n, d, kk)
            span = [g.coeff_vector() for g in res.basis]
            S = row_space(ExactMatrix(span, dim_S(n, d)), n, d)
            assert subspace_contains(S, f.coeff_vector())


def test_scaling_equivariance():
    f = generic(2, 4, 2)
    a = solve_from_span(e_space(f, 1), 2, 4, 1)
    b = solve_from_span(e_space(f.scale(Fraction(-7, 3)), 1), 2, 4, 1)
    assert a.basis == b.basis


def test_monotone_information():
    for trial in range(4):
        f = generic(1, 6, 3, trial)
        verdicts = [solve_from_span(e_space(f, k), 1, 6, k).verdict for k in range(4)]
        for k in range(1, 4):
            if verdicts[k] == UNIQUE:
                assert all(v == UNIQUE for v in verdicts[:k])
        assert verdicts[3] == AMBIGUOUS


def test_extract_relations_scalar_cases():
    f = parse(F14, 1)
    assert extract_relations(f, f, 1) == RelationMatrix.scalar(1, 1, 1)
    assert extract_relations(f, f.scale(3), 1).as_matrix() == RelationMatrix.scalar(1, 1, 3).as_matrix()
    g = generic(2, 5, 2)
    a = extract_relations(g, g.scale(-2), 2)
    idx = enumerate_indices(2, 2)
    assert len(idx) == 6
    assert all(a[I, J] == (-2 if I == J else 0) for I in idx for J in idx)
    # substitute back: D_I(-2g) = sum a[I, J] D_J g
    for I in idx:
        total = HomPoly.zero(2, 3)
        for J in idx:
            total = total + derivative(g, J).scale(a[I, J])
        assert total == derivative(g.scale(-2), I)


def test_extract_relations_errors():
    f = parse("x0^4 + x1^4", 1)
    with pytest.raises(DegenerateBasis):
        extract_relations(f, f, 2)
    with pytest.raises(NotContained):
        extract_relations(parse(F14, 1), parse("x0^3*x1", 1), 1)


def test_non_scalar_relations_fail_symmetry():
    # E_1(x0^2 + x1^2) is all of S_{1,1}, so any g has relations, but with
    # dim E_2(f) = 1 < 3 the shift rule need not hold
    f = parse("x0^2 + x1^2", 1)
    g = parse("x0*x1", 1)
    a = extract_relations(f, g, 1)
    half = Fraction(1, 2)
    assert a.as_matrix().tolist() == [[0, half], [half, 0]]
    ok, violations = check_symmetry(a)
    assert not ok and violations


def test_check_symmetry():
    a = RelationMatrix.scalar(2, 2, 5)
    assert check_symmetry(a) == (True, [])
    bad = a.perturbed((2, 0, 0), (0, 1, 1), 1)
    ok, violations = check_symmetry(bad)
    assert not ok and violations
    assert all(v.lhs != v.rhs for v in violations)
    with pytest.raises(SymmetryViolated):
        descend(parse("x0^5 + x1^5 + x2^5", 2), bad, 2)


def test_descend_examples():
    f = parse(F14, 1)
    out = descend(f, RelationMatrix.scalar(1, 1, 3), 1)
    assert out == {(0, 0): f.scale(3)}
    g = generic(1, 6, 2)
    a = extract_relations(g, g.scale(3), 2)
    assert check_symmetry(a)[0]
    out = descend(g, a, 2)
    assert set(out) == set(enumerate_indices(1, 1))
    for K, h in out.items():
        assert h == derivative(g.scale(3), K)
        assert euler_lhs(h) == h.scale(6 - 2 + 1)
    with pytest.raises(OrderOutOfRange):
        descend(g, RelationMatrix.scalar(1, 0, 1), 0)


def test_relation_coherence_on_solutions():
    for n, d, k in [(1, 5, 1), (2, 4, 1), (1, 6, 2)]:
        f = generic(n, d, k + 1)
        res = solve_from_span(e_space(f, k), n, d, k)
        for g in res.basis:
            a = extract_relations(f, g, k)
            assert check_symmetry(a)[0]
            for K, h in descend(f, a, k).items():
                assert h == derivative(g, K)


def test_verify_theorem_reports():
    rep = verify_theorem(parse(F14, 1), 1)
    assert rep.hypothesis and rep.chain_ok and rep.within_bound
    assert rep.dims == [1, 2, 3]
    assert rep.verdict == UNIQUE and rep.witness == 1 and not rep.contradiction
    rep = verify_theorem(parse("x0^4 + x1^4", 1), 1)
    assert not rep.hypothesis and rep.dims[2] == 2
    assert rep.verdict == AMBIGUOUS and rep.solution_dim == 2
    assert not rep.contradiction
    rep = verify_theorem(parse("x0^7", 1), 2)
    assert not rep.hypothesis and rep.dims[3] == 1
    d = rep.to_dict()
    assert d["verdict"] == UNIQUE and d["basis"] == ["x0^7"]


def test_verify_theorem_outside_bound():
    f = generic(1, 4, 2)
    assert certify_generic(f, 2)
    rep = verify_theorem(f, 2)
    assert not rep.within_bound and not rep.hypothesis
    assert rep.verdict == AMBIGUOUS
