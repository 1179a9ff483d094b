import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domain.exception.errors import StructuralError, UnsupportedError
from domain.service.git_service import GitService
from infrastructure.solver.fourier_motzkin_solver import FourierMotzkinSolver
from infrastructure.solver.simplex_solver import SimplexSolver
from infrastructure.solver.solver_factory import SolverFactory
from strategies import random_map


def satisfies(system, point):
    return all(sum(Fraction(c) * v for c, v in zip(coefficients, point)) >= rhs
               for coefficients, rhs in system)


def test_feasible(solver):
    system = [((1, 0), 1), ((0, 1), 1), ((-1, -1), -3)]
    point = solver.find_point(system, 2)
    assert point is not None
    assert satisfies(system, point)


def test_infeasible(solver):
    assert solver.find_point([((1,), 1), ((-1,), 0)], 1) is None


def test_pinned_equality(solver):
    system = [((1, 0), 2), ((-1, 0), -2), ((-1, 1), 0)]
    point = solver.find_point(system, 2)
    assert point[0] == 2
    assert point[1] >= 2


def test_strict_positivity_by_scaling(solver):
    # x - y >= 1, y - z >= 1, x + y + z = 0
    system = [((1, -1, 0), 1), ((0, 1, -1), 1), ((1, 1, 1), 0), ((-1, -1, -1), 0)]
    point = solver.find_point(system, 3)
    assert satisfies(system, point)
    assert sum(point) == 0


def test_empty_system(solver):
    assert solver.find_point([], 3) == [0, 0, 0]


def test_dimension_mismatch(solver):
    with pytest.raises(StructuralError):
        solver.find_point([((1, 2), 0)], 3)


def test_fourier_motzkin_limit():
    solver = FourierMotzkinSolver(max_inequalities=1)
    with pytest.raises(UnsupportedError):
        solver.find_point([((1, 0), 1), ((0, 1), 1), ((-1, -1), -3)], 2)


def test_factory():
    assert isinstance(SolverFactory.create_solver("simplex"), SimplexSolver)
    assert isinstance(SolverFactory.create_solver("fourier-motzkin"), FourierMotzkinSolver)
    assert isinstance(SolverFactory.create_solver("nonsense"), FourierMotzkinSolver)


inequalities = st.lists(
    st.tuples(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)), st.integers(-3, 3)),
    min_size=1, max_size=6)


@settings(max_examples=200, deadline=None)
@given(inequalities)
def test_solvers_agree(system):
    fm_point = FourierMotzkinSolver().find_point(system, 3)
    simplex_point = SimplexSolver().find_point(system, 3)
    assert (fm_point is None) == (simplex_point is None)
    if fm_point is not None:
        assert satisfies(system, fm_point)
        assert satisfies(system, simplex_point)


def test_solvers_agree_on_weight_systems(henon_service):
    fourier_motzkin = GitService(henon_service, FourierMotzkinSolver())
    simplex = GitService(henon_service, SimplexSolver())
    rng = random.Random(11)
    for _ in range(60):
        m = random_map(rng, rng.choice([2, 3]), rng.choice([2, 3]))
        for strict in (True, False):
            first = fourier_motzkin.find_destabilizing_diag(m, strict=strict)
            second = simplex.find_destabilizing_diag(m, strict=strict)
            assert (first is None) == (second is None), m.format()
            for certificate in (first, second):
                if certificate is None:
                    continue
                assert certificate.verified
                assert certificate.mu == fourier_motzkin.mu(m, certificate.weights)
                assert certificate.mu > 0 if strict else certificate.mu >= 0


def test_reduction_keeps_rows_with_smaller_origin():
    weaker = ((Fraction(1), Fraction(1)), Fraction(0), frozenset([0]))
    stronger = ((Fraction(2), Fraction(2)), Fraction(4), frozenset([1, 2]))
    rows = FourierMotzkinSolver._reduce([weaker, stronger])
    assert [(row[1], row[2]) for row in rows] == [(2, frozenset([1, 2])), (0, frozenset([0]))]
    dominated = ((Fraction(1), Fraction(1)), Fraction(-1), frozenset([0, 1]))
    assert len(FourierMotzkinSolver._reduce([weaker, dominated])) == 1
