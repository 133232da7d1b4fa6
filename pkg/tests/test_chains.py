from fractions import Fraction

import pytest

from crosssections.chains import (
    AuditReport,
    CheckRecord,
    GeneralChain,
    ShiftChain,
    audit,
    mutate,
    synth_general_chain,
    synth_shift_chain,
)
from crosssections.general import GeneralSequence, c_block, connection_holds, rho_of_deletion
from crosssections.shift import ShiftSequence, StrongParams, T1Params, T2Params

from conftest import Sampler

SUM_SEQ = GeneralSequence(0, [-k for k in range(1, 9)], list(range(1, 9)))
HARMONIC = ShiftSequence(0, [Fraction(1, k) for k in range(1, 12)])


def failing(report):
    return {(rec.check, rec.r) for rec in report.violations}


def test_general_synth_example():
    ch = synth_general_chain(SUM_SEQ, 2, [1, 1], [1, 1], 1, 1)
    assert ch.params[0].q3 == Fraction(35, 36)
    assert ch.params[1].p1 == Fraction(24, 25)
    assert ch.params[0].p1 == 1 and ch.params[1].q3 == 1


def test_general_synth_errors():
    with pytest.raises(ValueError):
        synth_general_chain(SUM_SEQ, SUM_SEQ.K - 2, [1] * 7, [1] * 7, 1, 1)
    with pytest.raises(ValueError):
        synth_general_chain(SUM_SEQ, 2, [1, 0], [1, 1], 1, 1)
    with pytest.raises(ValueError):
        synth_general_chain(SUM_SEQ, 2, [1, 1], [1, 1], 0, 1)
    with pytest.raises(ValueError):
        synth_general_chain(SUM_SEQ, 2, [1], [1, 1], 1, 1)


def test_general_synth_satisfies_recurrences():
    smp = Sampler(31)
    R = 4
    q2 = [smp.nonzero() for _ in range(R)]
    p2 = [smp.nonzero() for _ in range(R)]
    ch = synth_general_chain(SUM_SEQ, R, q2, p2, smp.nonzero(), smp.nonzero())
    for r in range(1, R):
        a, b = ch.params[r - 1], ch.params[r]
        assert a.q3 == a.q2 * b.q2 * rho_of_deletion(c_block(SUM_SEQ, r + 1), 3, 1)
        assert b.p1 == a.p2 * b.p2 * rho_of_deletion(c_block(SUM_SEQ, r), 1, 1)
        assert connection_holds(SUM_SEQ, r, a, b)


def test_shift_synth_example():
    ch = synth_shift_chain(HARMONIC, 3, 1, [3, 6, 1])
    xs = [p.x for p in ch.params]
    qs = [p.q for p in ch.params]
    assert xs == [1, 3, 2]
    assert qs[:2] == [-1, -6]
    assert qs[2] == -xs[2] / HARMONIC.b[2]
    assert all(isinstance(p, StrongParams) for p in ch.params)


def test_shift_synth_fixed_point():
    ch = synth_shift_chain(HARMONIC, 5, 3, [9] * 5)
    assert {p.x for p in ch.params} == {3}


def test_shift_synth_errors():
    with pytest.raises(ValueError):
        synth_shift_chain(HARMONIC, 2, 1, [3, 0])
    with pytest.raises(ValueError):
        synth_shift_chain(HARMONIC, 2, 0, [3, 1])
    with pytest.raises(ValueError):
        synth_shift_chain(HARMONIC, 9, 1, [1] * 9)


def test_chain_length_invariant():
    ch = synth_shift_chain(HARMONIC, 2, 1, [1, 1])
    with pytest.raises(ValueError):
        ShiftChain(HARMONIC, 2, ch.params[:1])
    with pytest.raises(ValueError):
        GeneralChain(SUM_SEQ, 0, ())


def test_general_audit_clean():
    ch = synth_general_chain(SUM_SEQ, 3, [1, 2, 3], [1, -1, 2], 5, 7)
    rep = audit(ch, trials=20)
    assert rep.clean and rep.status == "clean"
    checks = {rec.check for rec in rep.records}
    assert checks == {"dim", "recognize", "schur_singular", "transitivity", "adjacency", "connection", "agreement"}
    assert len(rep.sections) == 4 * 3 and len(rep.junctions) == 3 * 2


def test_shift_audit_clean():
    rep = audit(synth_shift_chain(HARMONIC, 4, 1, [3, 6, 1, 2]), trials=20)
    assert rep.clean
    assert {rec.check for rec in rep.junctions} == {"adjacency", "main_constraints", "agreement"}


def test_general_mutation_pinpoints_junction():
    ch = synth_general_chain(SUM_SEQ, 3, [1, 2, 3], [1, -1, 2], 5, 7)
    bad = mutate(ch, 2, q3=ch.params[1].q3 + 1)
    rep = audit(bad, trials=20)
    assert failing(rep) == {("adjacency", 2), ("connection", 2)}
    assert rep.status == "violation"


def test_shift_mutation_pinpoints_junction():
    ch = synth_shift_chain(HARMONIC, 4, 1, [3, 6, 1, 2])
    rep = audit(mutate(ch, 2, y=ch.params[1].y + 1), trials=20)
    assert failing(rep) == {("adjacency", 2), ("main_constraints", 2)}


def test_shift_audit_reports_t1_exclusion():
    ch = synth_shift_chain(HARMONIC, 3, 1, [3, 6, 1])
    params = list(ch.params)
    params[0] = T1Params(1, 3)
    rep = audit(ShiftChain(HARMONIC, 3, params), trials=10)
    main = [rec for rec in rep.junctions if rec.check == "main_constraints" and rec.r == 1][0]
    assert not main.passed and "excluded" in main.detail
    assert ("agreement", 1) not in failing(rep)


def test_shift_audit_accepts_t2_equivalent_to_strong():
    ch = synth_shift_chain(HARMONIC, 3, 1, [3, 6, 1])
    p = ch.params[1]
    params = list(ch.params)
    params[1] = T2Params(p.x, p.y, p.q, p.q / HARMONIC.b[2])
    assert audit(ShiftChain(HARMONIC, 3, params), trials=10).clean


def test_mutation_sensitivity_of_forced_parameters():
    smp = Sampler(32)
    ch = synth_general_chain(SUM_SEQ, 3, [smp.nonzero() for _ in range(3)],
                             [smp.nonzero() for _ in range(3)], smp.nonzero(), smp.nonzero())
    for r in (1, 2):
        assert not audit(mutate(ch, r, q3=ch.params[r - 1].q3 * 2), trials=5).clean
        assert not audit(mutate(ch, r + 1, p1=ch.params[r].p1 * 2), trials=5).clean


def test_audit_is_deterministic():
    ch = synth_shift_chain(HARMONIC, 3, 1, [3, 6, 1])
    assert audit(ch, trials=15, seed=4).text() == audit(ch, trials=15, seed=4).text()


def test_report_lines():
    rep = AuditReport("shift", 1, header=["h"], sections=[CheckRecord("dim", 1, True, "dim=5")])
    assert rep.lines() == ["# h", "CHECK\tdim\tr=1\tPASS\tdetail=dim=5", "RESULT\tclean"]
    rep.junctions.append(CheckRecord("adjacency", 1, False, "equal=False"))
    assert rep.lines()[-1] == "RESULT\tviolation"
    assert rep.text().endswith("RESULT\tviolation\n")


def test_audit_rejects_other_objects():
    with pytest.raises(TypeError):
        audit(object())
