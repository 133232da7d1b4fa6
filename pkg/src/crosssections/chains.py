"""Families of adjacent cross-sections: synthesis from seeds and auditing.

A chain is a finite run of sections r = 1..R over one sequence.  Synthesis
fills in the parameters forced by the matching recurrences; auditing checks
every section and every junction and never stops at the first failure, so a
report lists all violations.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import general, shift
from .general import GeneralParams, GeneralSequence
from .scalar import as_scalar, format_scalar
from .shift import ConstraintError, ShiftSequence, StrongParams, T2Params
from .subspaces import adjacency_equal, transitivity

__all__ = [
    "GeneralChain",
    "ShiftChain",
    "CheckRecord",
    "AuditReport",
    "synth_general_chain",
    "synth_shift_chain",
    "audit",
    "mutate",
]

GENERAL_BOUNDARY = "p1 of r=1 and q3 of r=R are free seeds; every other p1 and q3 is forced"
SHIFT_BOUNDARY = "x of r=1 is a seed; q_r = -x_r/b_r is pinned for every r including r=R"


def _check_length(R, K):
    if R < 1:
        raise ValueError(f"chain length must be >= 1, got {R}")
    if R + 3 > K:
        raise ValueError(f"chain of length {R} needs at least {R + 3} sequence points, got {K}")


@dataclass(frozen=True)
class GeneralChain:
    seq: GeneralSequence
    R: int
    params: tuple
    variant: str = "printed"

    def __post_init__(self):
        _check_length(self.R, self.seq.K)
        object.__setattr__(self, "params", tuple(self.params))
        if len(self.params) != self.R:
            raise ValueError(f"{len(self.params)} parameter sets for a chain of length {self.R}")

    def section(self, r):
        return general.section(self.seq, r, self.params[r - 1], self.variant)


@dataclass(frozen=True)
class ShiftChain:
    seq: ShiftSequence
    R: int
    params: tuple

    def __post_init__(self):
        _check_length(self.R, self.seq.K)
        object.__setattr__(self, "params", tuple(self.params))
        if len(self.params) != self.R:
            raise ValueError(f"{len(self.params)} parameter sets for a chain of length {self.R}")

    def section(self, r):
        return shift.section(self.seq, r, self.params[r - 1])


def _nonzero_seeds(**seeds):
    out = {}
    for name, v in seeds.items():
        if isinstance(v, (list, tuple)):
            vals = tuple(as_scalar(t) for t in v)
            if not all(vals):
                raise ValueError(f"seed list {name} contains a zero")
        else:
            vals = as_scalar(v)
            if not vals:
                raise ValueError(f"seed {name} must be nonzero")
        out[name] = vals
    return out


def synth_general_chain(seq: GeneralSequence, R: int, q2, p2, p1_1, q3_R,
                        variant: str = "printed") -> GeneralChain:
    """Fill in ``q3_r`` (r < R) and ``p1_(r+1)`` from the connection recurrences."""
    _check_length(R, seq.K)
    s = _nonzero_seeds(q2=q2, p2=p2, p1_1=p1_1, q3_R=q3_R)
    q2, p2 = s["q2"], s["p2"]
    if len(q2) != R or len(p2) != R:
        raise ValueError(f"q2 and p2 need {R} entries, got {len(q2)} and {len(p2)}")
    p1 = [s["p1_1"]]
    q3 = []
    for r in range(1, R):
        c0, c1 = general.c_block(seq, r), general.c_block(seq, r + 1)
        q3.append(q2[r - 1] * q2[r] * general.rho_of_deletion(c1, 3, 1))
        p1.append(p2[r - 1] * p2[r] * general.rho_of_deletion(c0, 1, 1))
    q3.append(s["q3_R"])
    params = [GeneralParams(p1[i], p2[i], q2[i], q3[i]) for i in range(R)]
    return GeneralChain(seq, R, params, variant)


def synth_shift_chain(seq: ShiftSequence, R: int, x1, y) -> ShiftChain:
    """Strong sections with ``x_(r+1) = y_r / x_r`` and ``q_r = -x_r / b_r``."""
    _check_length(R, seq.K)
    s = _nonzero_seeds(x1=x1, y=y)
    y = s["y"]
    if len(y) != R:
        raise ValueError(f"y needs {R} entries, got {len(y)}")
    x = s["x1"]
    params = []
    for r in range(1, R + 1):
        params.append(StrongParams(x, y[r - 1], -x / seq.b[r - 1]))
        x = y[r - 1] / x
    return ShiftChain(seq, R, params)


def mutate(chain, r: int, **changes):
    """Copy of ``chain`` with fields of the r-th parameter set replaced."""
    params = list(chain.params)
    params[r - 1] = replace(params[r - 1], **changes)
    return replace(chain, params=tuple(params))


# -- audit ----------------------------------------------------------------------

@dataclass(frozen=True)
class CheckRecord:
    check: str
    r: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CHECK\t{self.check}\tr={self.r}\t{status}\tdetail={self.detail}"


@dataclass
class AuditReport:
    mode: str
    R: int
    header: list = field(default_factory=list)
    sections: list = field(default_factory=list)
    junctions: list = field(default_factory=list)

    @property
    def records(self):
        return self.sections + self.junctions

    @property
    def violations(self):
        return [rec for rec in self.records if not rec.passed]

    @property
    def clean(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "clean" if self.clean else "violation"

    def lines(self):
        out = [f"# {h}" for h in self.header]
        out += [rec.line() for rec in self.records]
        out.append(f"RESULT\t{self.status}")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def _fmt_params(p):
    names = [f for f in ("p1", "p2", "q2", "q3", "x", "y", "q", "qp") if hasattr(p, f)]
    tag = shift.VARIANT_NAMES.get(type(p), "C-normal")
    return tag + "{" + ",".join(f"{n}={format_scalar(getattr(p, n))}" for n in names) + "}"


def _transitivity_record(sub, r, trials, seed):
    v = transitivity(sub, trials=trials, seed=seed + r)
    if v.transitive:
        return CheckRecord("transitivity", r, True, f"probably_transitive trials={v.trials}")
    wit = ",".join(format_scalar(t) for t in v.witness)
    return CheckRecord("transitivity", r, False, f"not_transitive witness=[{wit}]")


def _audit_general(chain: GeneralChain, trials, seed):
    rep = AuditReport("general", chain.R, header=[
        f"mode=general R={chain.R} K={chain.seq.K} variant={chain.variant} trials={trials} rng_seed={seed}",
        f"boundary: {GENERAL_BOUNDARY}",
    ])
    subs = []
    for r in range(1, chain.R + 1):
        p = chain.params[r - 1]
        c = general.c_block(chain.seq, r)
        sub = chain.section(r)
        subs.append(sub)
        rep.sections.append(CheckRecord("dim", r, sub.dim == 5, f"dim={sub.dim}"))
        got = general.recognize_c_normal(sub, c, chain.variant)
        rep.sections.append(CheckRecord(
            "recognize", r, got == p,
            "none" if got is None else _fmt_params(got)))
        cert = general.schur_singular_identically(c, p, chain.variant)
        detail = (f"grid_points={cert.points}" if cert.holds
                  else f"witness={list(cert.witness)} det={format_scalar(cert.value)}")
        rep.sections.append(CheckRecord("schur_singular", r, cert.holds, detail))
        rep.sections.append(_transitivity_record(sub, r, trials, seed))
    for r in range(1, chain.R):
        adj = adjacency_equal(subs[r - 1], subs[r])
        rec = general.connection_holds(chain.seq, r, chain.params[r - 1], chain.params[r])
        rep.junctions.append(CheckRecord("adjacency", r, adj, f"equal={adj}"))
        rep.junctions.append(CheckRecord("connection", r, rec, f"holds={rec}"))
        rep.junctions.append(CheckRecord("agreement", r, adj == rec, f"adjacency={adj} connection={rec}"))
    return rep


def _audit_shift(chain: ShiftChain, trials, seed):
    rep = AuditReport("shift", chain.R, header=[
        f"mode=shift R={chain.R} K={chain.seq.K} trials={trials} rng_seed={seed}",
        f"boundary: {SHIFT_BOUNDARY}",
    ])
    subs = []
    for r in range(1, chain.R + 1):
        p = chain.params[r - 1]
        d = chain.seq.delta(r)
        sub = chain.section(r)
        subs.append(sub)
        rep.sections.append(CheckRecord("dim", r, sub.dim == 5, f"dim={sub.dim}"))
        got = shift.recognize_shift(sub, d)
        ok = got == p or (isinstance(p, T2Params) and isinstance(got, StrongParams)
                          and shift.build_shift(d, got) == sub)
        rep.sections.append(CheckRecord("recognize", r, ok, "none" if got is None else _fmt_params(got)))
        cert = shift.rank_rule_identically(d, p)
        detail = (f"grid_points={cert.points}" if cert.holds
                  else f"witness={list(cert.witness)} det={format_scalar(cert.value)}")
        rep.sections.append(CheckRecord("rank_rule", r, cert.holds, detail))
        rep.sections.append(_transitivity_record(sub, r, trials, seed))
    for r in range(1, chain.R):
        adj = adjacency_equal(subs[r - 1], subs[r])
        try:
            rec = shift.main_constraints(chain.seq, r, chain.params[r - 1], chain.params[r])
            why = f"holds={rec}"
        except ConstraintError as exc:
            rec, why = False, f"excluded: {exc}"
        rep.junctions.append(CheckRecord("adjacency", r, adj, f"equal={adj}"))
        rep.junctions.append(CheckRecord("main_constraints", r, rec, why))
        rep.junctions.append(CheckRecord("agreement", r, adj == rec, f"adjacency={adj} main_constraints={rec}"))
    return rep


def audit(chain, trials: int = 100, seed: int = 0) -> AuditReport:
    """Check every section and junction of ``chain``.

    Per section: dimension 5, recognition round trip, the singularity (general)
    or rank (shift) certificate, and a transitivity search seeded with
    ``seed + r``.  Per junction: subspace adjacency, the parameter recurrence,
    and agreement between the two.
    """
    if isinstance(chain, GeneralChain):
        return _audit_general(chain, trials, seed)
    if isinstance(chain, ShiftChain):
        return _audit_shift(chain, trials, seed)
    raise TypeError(f"cannot audit {type(chain).__name__}")

