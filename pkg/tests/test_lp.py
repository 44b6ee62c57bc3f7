import random
from fractions import Fraction

import pytest

from anglestruct import GeometryClass, InvariantKind
from anglestruct.errors import DimensionMismatch
from anglestruct.lp import (
    Infeasible,
    LpProblem,
    Optimal,
    Unbounded,
    build_construction_lp,
    make_problem,
    render_problem,
    simplex_solve,
)
from anglestruct.sampling import random_edge_values, random_triangulation
from conftest import const_fn


def test_trivial_feasible():
    out = simplex_solve(make_problem([[1, 1]], [1], [0, 0]))
    assert isinstance(out, Optimal)
    assert out.value == 0
    assert sum(out.x) == 1 and all(v >= 0 for v in out.x)


def test_trivial_infeasible_farkas_by_inspection():
    out = simplex_solve(make_problem([[1, 1]], [-1], [0, 0]))
    assert isinstance(out, Infeasible)
    (y,) = out.certificate
    # A^t y = (y, y) <= 0 and b^t y = -y > 0
    assert y < 0
    assert out.certificate == (Fraction(-1),)


def test_trivial_unbounded_ray():
    out = simplex_solve(make_problem([[1, -1]], [0], [-1, 0]))
    assert isinstance(out, Unbounded)
    assert out.ray == (Fraction(1), Fraction(1))


def test_max_sense():
    # max x1 + x2 s.t. x1 + x2 + s = 3
    out = simplex_solve(make_problem([[1, 1, 1]], [3], [1, 1, 0], sense="max"))
    assert isinstance(out, Optimal)
    assert out.value == 3


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        LpProblem(((Fraction(1),),), (Fraction(1), Fraction(2)), (Fraction(0),), "min")
    with pytest.raises(DimensionMismatch):
        make_problem([[1, 2]], [1], [0])
    with pytest.raises(DimensionMismatch):
        make_problem([[1]], [1], [0], sense="maximize")


def test_degenerate_cycling_guard():
    # Beale's cycling instance in equality form; Bland's rule must terminate
    a = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9, 1, 0, 0],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    b = [0, 0, 1]
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6, 0, 0, 0]
    out = simplex_solve(make_problem(a, b, c))
    assert isinstance(out, Optimal)
    assert out.value == Fraction(-1, 20)


def random_problem(rng, m, n):
    a = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(m)]
    b = [Fraction(rng.randint(-5, 5)) for _ in range(m)]
    c = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
    return make_problem(a, b, c)


def test_random_systems_verify_internally():
    # the solver asserts Ax=b, strong duality, dual feasibility and Farkas
    # validity on every solve; sweeping random systems exercises all paths
    rng = random.Random(99)
    statuses = {"optimal": 0, "infeasible": 0, "unbounded": 0}
    for _ in range(200):
        m = rng.randint(1, 6)
        n = rng.randint(1, 8)
        out = simplex_solve(random_problem(rng, m, n))
        if isinstance(out, Optimal):
            statuses["optimal"] += 1
        elif isinstance(out, Infeasible):
            statuses["infeasible"] += 1
        else:
            statuses["unbounded"] += 1
    assert all(count > 10 for count in statuses.values()), statuses


def dual_cone_max_is_zero(problem) -> bool:
    """Independently decide sign(max b.y : A^t y <= 0) via a second LP.

    The cone always contains y = 0, so the maximum is 0 (bounded) or
    +infinity; returns True when it is 0.
    """
    m, n = problem.n_rows, problem.n_cols
    a2 = []
    for j in range(n):
        row = []
        for i in range(m):
            row.append(problem.a[i][j])
        for i in range(m):
            row.append(-problem.a[i][j])
        row.extend(Fraction(1) if k == j else Fraction(0) for k in range(n))
        a2.append(row)
    b2 = [Fraction(0)] * n
    c2 = [-problem.b[i] for i in range(m)] + [problem.b[i] for i in range(m)] + [Fraction(0)] * n
    out = simplex_solve(make_problem(a2, b2, c2))
    if isinstance(out, Optimal):
        assert out.value == 0
        return True
    assert isinstance(out, Unbounded)
    return False


def test_feasibility_equals_dual_cone_sign():
    # primal nonempty iff max{b.y : A^t y <= 0} is nonpositive,
    # both sides decided by independent solver runs
    rng = random.Random(4242)
    agree = 0
    for _ in range(120):
        problem = random_problem(rng, rng.randint(1, 6), rng.randint(1, 8))
        primal = simplex_solve(
            make_problem(problem.a, problem.b, [Fraction(0)] * problem.n_cols)
        )
        primal_feasible = isinstance(primal, Optimal)
        dual_bounded = dual_cone_max_is_zero(problem)
        assert primal_feasible == dual_bounded
        if isinstance(primal, Infeasible):
            y = primal.certificate
            for j in range(problem.n_cols):
                assert sum(problem.a[i][j] * y[i] for i in range(problem.n_rows)) <= 0
            assert sum(problem.b[i] * y[i] for i in range(problem.n_rows)) > 0
        agree += 1
    assert agree == 120


def test_construction_lp_dimensions(tetra):
    problem = build_construction_lp(tetra, const_fn(tetra, (3, 5)), GeometryClass.HYPERBOLIC)
    assert problem.n_cols == 17  # 12 corner vars + 4 face slacks + margin
    assert problem.n_rows == 10  # 4 faces + 6 edges
    spherical = build_construction_lp(tetra, const_fn(tetra, (7, 10)), GeometryClass.SPHERICAL)
    assert (spherical.n_cols, spherical.n_rows) == (17, 10)


def test_construction_lp_symmetric_optimum(tetra):
    problem = build_construction_lp(tetra, const_fn(tetra, (3, 5)), GeometryClass.HYPERBOLIC)
    out = simplex_solve(problem)
    assert isinstance(out, Optimal)
    assert -out.value == Fraction(3, 10)  # the edge equations force a = 0
    assert all(out.x[j] == 0 for j in range(12))

    # D = 7pi/10 overfills every face budget: total corner mass 21pi/5 - 12eps
    # against capacity 4pi - 12eps, so the program is infeasible outright
    infeasible_side = build_construction_lp(
        tetra, const_fn(tetra, (7, 10)), GeometryClass.HYPERBOLIC
    )
    out = simplex_solve(infeasible_side)
    assert isinstance(out, Infeasible)


def test_strong_duality_on_construction_programs():
    rng = random.Random(31337)
    for _ in range(100):
        t = random_triangulation(rng.choice([2, 4, 6]), rng)
        d = random_edge_values(t, rng, Fraction(0), Fraction(2), InvariantKind.EDGE)
        problem = build_construction_lp(t, d, GeometryClass.HYPERBOLIC)
        out = simplex_solve(problem)
        if isinstance(out, Optimal):
            primal = sum(problem.c[j] * out.x[j] for j in range(problem.n_cols))
            dual = sum(problem.b[i] * out.dual[i] for i in range(problem.n_rows))
            assert primal == dual == out.value


def test_render_problem(tetra):
    problem = build_construction_lp(tetra, const_fn(tetra, (3, 5)), GeometryClass.HYPERBOLIC)
    text = render_problem(problem)
    lines = text.splitlines()
    assert lines[0].startswith("min ")
    assert len(lines) == 11
    assert "3/5" in lines[-1]
