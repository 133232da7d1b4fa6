from fractions import Fraction

import pytest
import sympy

from crosssections.matrices import Mat, elementary, jordan3, rank
from crosssections.shift import (
    ConstraintError,
    Delta,
    ShiftSequence,
    StrongParams,
    T1Params,
    T2Params,
    b_delta,
    build_shift,
    main_constraints,
    rank_rule_identically,
    recognize_shift,
    section,
    shift_basis,
    shift_general_element,
    strongify,
    with_changes,
)
from crosssections.subspaces import adjacency_equal, equals, image_delete_rc, span_reduce

from conftest import Sampler

H = Fraction
D = Delta(1, H(1, 2), H(1, 3))
HARMONIC = ShiftSequence(0, [H(1, k) for k in range(1, 12)])


def random_delta(smp):
    return Delta(*smp.distinct_nonzero(3))


def random_seq(smp, K=6):
    return ShiftSequence(smp.scalar(), smp.distinct_nonzero(K))


def test_type_invariants():
    with pytest.raises(ValueError):
        Delta(1, 1, 2)
    with pytest.raises(ValueError):
        Delta(0, 1, 2)
    with pytest.raises(ValueError):
        ShiftSequence(0, [1, 2, 1])
    with pytest.raises(ValueError):
        StrongParams(1, 0, 1)
    with pytest.raises(ValueError):
        T2Params(1, 1, 0, 1)
    assert T2Params(1, 1, 1, 0).qp == 0
    assert HARMONIC.delta(2) == Delta(H(1, 2), H(1, 3), H(1, 4))


def test_b_delta_examples():
    assert b_delta(D) == (1, 2, 1)
    assert b_delta(Delta(H(1, 2), H(1, 3), H(1, 4))) == (1, 2, 1)
    assert b_delta(Delta(1, 2, 3)) == (H(-1, 6), H(-2, 3), H(-1, 2))


def test_strong_basis_examples():
    _, _, Q1, Q2, _ = shift_basis(D, StrongParams(1, 1, 1))
    assert Q2 == Mat([[0, 0, 0], [4, 2, 1], [0, 0, 0]])
    assert Q1 == Mat([[0, 0, 1], [2, 1, 0], [-3, -1, 0]])
    assert build_shift(D, StrongParams(1, 1, 1)).dim == 5


def test_t1_q1_is_unit():
    smp = Sampler(3)
    for _ in range(5):
        d = random_delta(smp)
        Q1 = shift_basis(d, T1Params(smp.nonzero(), smp.nonzero()))[2]
        assert Q1 == elementary(3, 3, 1, 3)


def test_general_element_examples():
    p = T2Params(2, 3, 5, 7)
    bd1, bd2, bd3 = b_delta(D)
    q1 = shift_general_element(D, p, (0, 0, 1, 0, 0))
    assert q1[2, 0] == p.qp * p.y / p.x + bd1 * p.q * p.y / p.x
    l2 = shift_general_element(D, p, (0, 1, 0, 0, 0))
    assert [l2[i, 0] for i in range(3)] == [0, bd3 * p.x, bd2 * p.y]
    assert shift_general_element(D, p, (0,) * 5).is_zero()
    with pytest.raises(ValueError):
        shift_general_element(D, p, (1, 2))


@pytest.mark.parametrize("p", [T1Params(2, 3), T2Params(2, 3, 5, 7), T2Params(2, 3, 5, 0), StrongParams(2, 3, 5)])
def test_recognize_round_trip(p):
    assert recognize_shift(build_shift(D, p), D) == p


def test_recognize_rejections():
    units = span_reduce([elementary(3, 3, *ij) for ij in [(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)]])
    assert recognize_shift(units, D) is None
    s = build_shift(D, StrongParams(2, 3, 5))
    assert recognize_shift(span_reduce(s.basis[:4]), D) is None
    # a section built for another diagonal does not fit this one
    assert recognize_shift(s, Delta(1, 2, 3)) is None


def test_recognize_prefers_strong():
    x, y = H(2), H(3)
    q = -x / D.b1
    assert recognize_shift(build_shift(D, T2Params(x, y, q, q / D.b2)), D) == StrongParams(x, y, q)


def _symbolic_rank_rule(d, p):
    """Expand det(Delta X - X J3) over the symbolic general element."""
    z = sympy.symbols("z1 z2 w1 w2 w3")
    X = sympy.zeros(3, 3)
    for t, b in zip(z, shift_basis(d, p)):
        X += t * sympy.Matrix(3, 3, [sympy.Rational(e.re.numerator, e.re.denominator) for e in b.entries])
    dm = sympy.diag(*[sympy.Rational(v.re.numerator, v.re.denominator) for v in (d.b1, d.b2, d.b3)])
    J = sympy.Matrix(3, 3, [int(e.re) for e in jordan3().entries])
    return sympy.expand((dm * X - X * J).det())


def test_rank_rule_examples():
    assert rank_rule_identically(D, StrongParams(1, 1, -1)).holds
    fails = rank_rule_identically(D, StrongParams(1, 1, 1))
    assert not fails.holds and fails.value
    assert _symbolic_rank_rule(D, StrongParams(1, 1, -1)) == 0
    assert _symbolic_rank_rule(D, StrongParams(1, 1, 1)) != 0


@pytest.mark.parametrize("p", [T1Params(2, 3), T2Params(2, 3, 5, 7), StrongParams(2, 3, 5)])
def test_each_basis_matrix_alone_obeys_rank_rule(p):
    dm, j = D.matrix(), jordan3()
    for m in shift_basis(D, p):
        assert rank(dm @ m - m @ j) <= 2


def test_rank_rule_agrees_with_symbolic_expansion():
    smp = Sampler(8)
    for _ in range(3):
        d = Delta(*smp.distinct_nonzero(3, complex_=False))
        x, y = smp.nonzero(complex_=False), smp.nonzero(complex_=False)
        for q in (-x / d.b1, -x / d.b1 + 1):
            expected = _symbolic_rank_rule(d, StrongParams(x, y, q)) == 0
            assert rank_rule_identically(d, StrongParams(x, y, q)).holds == expected == (q == -x / d.b1)


def test_t1_and_t2_obey_rank_rule():
    smp = Sampler(4)
    d = random_delta(smp)
    assert rank_rule_identically(d, T1Params(smp.nonzero(), smp.nonzero())).holds
    assert rank_rule_identically(d, T2Params(*(smp.nonzero() for _ in range(4)))).holds


def test_adjacency_examples():
    x1, y1 = H(1), H(3)
    left = StrongParams(x1, y1, -x1 / HARMONIC.b[0])
    right = StrongParams(y1 / x1, 5, 7)
    assert adjacency_equal(section(HARMONIC, 1, left), section(HARMONIC, 2, right))
    assert not adjacency_equal(section(HARMONIC, 1, T1Params(1, 3)), section(HARMONIC, 2, T1Params(3, 5)))
    t2 = T2Params(3, 5, 7, 1)
    assert t2.qp != t2.q / HARMONIC.b[2]
    assert image_delete_rc(section(HARMONIC, 2, t2), 3, 3).dim == 4
    assert not adjacency_equal(section(HARMONIC, 1, left), section(HARMONIC, 2, t2))


def test_main_constraints_examples():
    b = HARMONIC.b
    p1 = StrongParams(1, 3, -1)
    assert main_constraints(HARMONIC, 1, p1, StrongParams(3, 2, 9))
    assert not main_constraints(HARMONIC, 1, p1, StrongParams(H(3) + H(1, 1000), 2, 9))
    assert not main_constraints(HARMONIC, 1, with_changes(p1, q=-2), StrongParams(3, 2, 9))
    # x_r = 2 with b_r = 1 pins q_r = -2, and q'_r = q_r / b_(r+1) = -4
    t2 = T2Params(2, 6, -2, -4)
    assert b[0] == 1 and b[1] == H(1, 2)
    assert main_constraints(HARMONIC, 1, t2, StrongParams(3, 1, 1))
    assert not main_constraints(HARMONIC, 1, with_changes(t2, qp=-3), StrongParams(3, 1, 1))
    with pytest.raises(ConstraintError):
        main_constraints(HARMONIC, 1, T1Params(1, 3), StrongParams(3, 2, 9))
    with pytest.raises(IndexError):
        main_constraints(HARMONIC, HARMONIC.K - 2, p1, p1)


def test_strongify_examples():
    p = T2Params(1, 1, -1, -2)
    s = strongify(D, p)
    assert s == StrongParams(1, 1, -1)
    assert equals(build_shift(D, p), build_shift(D, s))
    with pytest.raises(ConstraintError, match="q'"):
        strongify(D, with_changes(p, qp=-3))
    with pytest.raises(ConstraintError, match="-x/b1"):
        strongify(D, with_changes(p, q=-2, qp=-4))
    with pytest.raises(TypeError):
        strongify(D, StrongParams(1, 1, -1))


def test_with_changes_rejects_unknown_field():
    with pytest.raises(ValueError):
        with_changes(StrongParams(1, 1, 1), qp=2)


# properties over random instances


def test_t2_with_strong_gates_equals_strong():
    smp = Sampler(21)
    for _ in range(8):
        d = random_delta(smp)
        x, y = smp.nonzero(), smp.nonzero()
        q = -x / d.b1
        assert equals(build_shift(d, T2Params(x, y, q, q / d.b2)), build_shift(d, StrongParams(x, y, q)))


def test_exclusion():
    smp = Sampler(22)
    for i in range(8):
        seq = random_seq(smp)
        left = T1Params(smp.nonzero(), smp.nonzero())
        if i % 2:
            right = T1Params(smp.nonzero(), smp.nonzero())
        else:
            right = T2Params(*(smp.nonzero() for _ in range(4)))
        assert not adjacency_equal(section(seq, 1, left), section(seq, 2, right))


def test_t1_left_fails_even_against_best_right():
    # choose the right side so that its P33 image is as small as possible
    smp = Sampler(23)
    seq = random_seq(smp)
    x, y = smp.nonzero(), smp.nonzero()
    x2 = y / x
    q = smp.nonzero()
    right = T2Params(x2, smp.nonzero(), q, q / seq.b[2])
    assert image_delete_rc(section(seq, 2, right), 3, 3).dim == 3
    assert not adjacency_equal(section(seq, 1, T1Params(x, y)), section(seq, 2, right))


def test_t2_image_dimension():
    smp = Sampler(24)
    for _ in range(6):
        d = random_delta(smp)
        x, y, q = smp.nonzero(), smp.nonzero(), smp.nonzero()
        good = T2Params(x, y, q, q / d.b2)
        bad = with_changes(good, qp=good.qp + smp.nonzero())
        assert image_delete_rc(build_shift(d, good), 3, 3).dim == 3
        assert image_delete_rc(build_shift(d, bad), 3, 3).dim == 4


def test_strong_p11_image_dimension():
    # L2 and Q1 lose their first row and column to parallel images only when q = -x/b1
    smp = Sampler(25)
    for _ in range(6):
        d = random_delta(smp)
        x, y = smp.nonzero(), smp.nonzero()
        on = StrongParams(x, y, -x / d.b1)
        off = with_changes(on, q=on.q + smp.nonzero())
        assert image_delete_rc(build_shift(d, on), 1, 1).dim == 3
        assert image_delete_rc(build_shift(d, off), 1, 1).dim == 4


def test_rank_rule_iff_boundary():
    smp = Sampler(26)
    for _ in range(6):
        d = random_delta(smp)
        x, y = smp.nonzero(), smp.nonzero()
        on = -x / d.b1
        off = on + smp.nonzero()
        assert rank_rule_identically(d, StrongParams(x, y, on)).holds
        assert not rank_rule_identically(d, StrongParams(x, y, off)).holds


def test_matching_equivalence_strong():
    smp = Sampler(27)
    for _ in range(5):
        seq = random_seq(smp)
        r = 1 + smp.rng.randrange(seq.K - 3)
        b = seq.b
        x, y = smp.nonzero(), smp.nonzero()
        pr = StrongParams(x, y, -x / b[r - 1])
        pr1 = StrongParams(y / x, smp.nonzero(), smp.nonzero())
        cases = [(pr, pr1)]
        cases += [(with_changes(pr, **{f: getattr(pr, f) + smp.nonzero()}), pr1) for f in ("x", "y", "q")]
        cases += [(pr, with_changes(pr1, x=pr1.x + smp.nonzero()))]
        for a, c in cases:
            if not (a.x and a.y and a.q and c.x):
                continue
            adj = adjacency_equal(section(seq, r, a), section(seq, r + 1, c))
            assert adj == main_constraints(seq, r, a, c)
        assert main_constraints(seq, r, pr, pr1)
