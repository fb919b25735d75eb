from fractions import Fraction

import pytest

from core.data import side_rows
from core.solver import build_system, solve_exact, least_squares_screen, search_corpus, group_valuation, \
    SolutionSpace, Infeasibility
from core.spectra import ValuationVector

C4 = ValuationVector({(2, 2): 1, (4, 2): 1})
C7 = ValuationVector({(7, 7): 1})
C2 = ValuationVector({(2, 2): 1})


@pytest.fixture(scope='module')
def gl_system(catalog):
    corpus = search_corpus(catalog, (168, 42))
    return build_system(corpus, group_valuation(catalog, (168, 42)), 1, (168, 42))


@pytest.fixture(scope='module')
def a5_system(catalog):
    corpus = search_corpus(catalog, (60, 5))
    return build_system(corpus, group_valuation(catalog, (60, 5)), 1, (60, 5))


@pytest.mark.unittest
class TestBuildSystem:

    def test_small_system(self):
        system = build_system([((4, 1), C4), ((7, 1), C7)], C4)
        assert system.matrix.row_index == [(2, 2), (4, 2), (7, 7)]
        assert system.matrix.col_index == [(4, 1), (7, 1)]
        assert system.shape == (3, 2)
        assert system.rhs == [1, 1, 0]

    def test_multiplicity_scales_rhs(self):
        system = build_system([((4, 1), C4)], C4, target_multiplicity=3)
        assert system.rhs == [3, 3]

    def test_empty_target(self):
        system = build_system([((4, 1), C4)], ValuationVector())
        assert all(v == 0 for v in system.rhs)

    def test_errors(self):
        with pytest.raises(ValueError):
            build_system([((4, 1), C4), ((4, 1), C7)], C4)
        with pytest.raises(ValueError):
            build_system([], C4)
        with pytest.raises(ValueError):
            build_system([((4, 1), C4)], C4, target_multiplicity=0)

    def test_published_corpus(self, catalog, gl_system):
        corpus = search_corpus(catalog, (168, 42))
        assert len(corpus) == 35
        assert (168, 42) not in gl_system.matrix.col_index
        keys = set(group_valuation(catalog, (168, 42)).keys())
        for _, vector in corpus:
            keys.update(vector.keys())
        assert gl_system.shape == (len(keys), 35)
        assert gl_system.matrix.row_index == sorted(keys)


@pytest.mark.unittest
class TestExactSolver:

    def test_unit_solution(self):
        system = build_system([((4, 1), C4), ((7, 1), C7)], C7)
        space = solve_exact(system)
        assert space.feasible
        assert space.particular == (0, 1)
        assert space.rank == 2
        assert space.nullspace_basis == ()

    def test_fractional_solution(self):
        system = build_system([((4, 1), C4.scaled(2))], C4)
        space = solve_exact(system)
        assert space.particular == (Fraction(1, 2), )
        assert not space.is_integral()
        assert space.is_integral(2)

    def test_nullspace(self):
        system = build_system([((2, 1), C2), ((99, 1), C2.scaled(2)), ((7, 1), C7)], C2.scaled(4) + C7)
        space = solve_exact(system)
        assert space.rank == 2
        assert len(space.nullspace_basis) == 1
        assert system.is_solution(space.particular)
        for b in space.nullspace_basis:
            assert all(v == 0 for v in system.matrix.multiply(b))
            shifted = [p + 3 * v for p, v in zip(space.particular, b)]
            assert system.is_solution(shifted)

    def test_infeasible(self):
        system = build_system([((4, 1), C4)], C7)
        report = solve_exact(system)
        assert isinstance(report, Infeasibility)
        assert not report.feasible
        assert report.row_key == (7, 7)
        assert all(v == 0 for v in system.matrix.left_multiply(report.witness))
        assert sum(y * b for y, b in zip(report.witness, system.rhs)) != 0

    def test_published_assignment_solves_system(self, catalog):
        corpus = search_corpus(catalog, (168, 42))
        system = build_system(corpus, group_valuation(catalog, (168, 42)), 3, (168, 42))
        coefficient = {row.id: row.multiplicity for row in side_rows('G')}
        coefficient.update({row.id: -row.multiplicity for row in side_rows('H') if row.id != (168, 42)})
        x = [Fraction(coefficient[group_id]) for group_id in system.matrix.col_index]
        assert system.is_solution(x)

    def test_gl32_feasible(self, gl_system):
        space = solve_exact(gl_system)
        assert isinstance(space, SolutionSpace)
        assert gl_system.is_solution(space.particular)
        assert space.rank + len(space.nullspace_basis) == gl_system.shape[1]

    def test_a5_infeasible(self, a5_system):
        report = solve_exact(a5_system)
        assert isinstance(report, Infeasibility)
        assert all(v == 0 for v in a5_system.matrix.left_multiply(report.witness))
        assert report.value != 0

    def test_deterministic(self, gl_system):
        assert solve_exact(gl_system) == solve_exact(gl_system)


@pytest.mark.unittest
class TestScreen:

    def test_exact_member(self):
        system = build_system([((4, 1), C4), ((7, 1), C7)], C4)
        result = least_squares_screen(system)
        assert result.residual < 1e-9
        assert result.converged

    def test_gl32_screen(self, gl_system):
        result = least_squares_screen(gl_system)
        assert result.residual < 1e-6

    def test_a5_screen(self, a5_system):
        result = least_squares_screen(a5_system)
        assert result.residual >= 0.5
        assert result.iterations <= 10 * sum(a5_system.shape)

    def test_agreement_with_exact_solver(self, gl_system, a5_system):
        small = [
            build_system([((4, 1), C4), ((7, 1), C7)], C4 + C7),
            build_system([((4, 1), C4)], C7),
            build_system([((2, 1), C2), ((99, 1), C2.scaled(2))], C2.scaled(5)),
        ]
        for system in small + [gl_system, a5_system]:
            residual = least_squares_screen(system).residual
            if solve_exact(system).feasible:
                assert residual < 1e-4
            else:
                assert residual >= 1e-2
