"""Plain-text formats: matrices, subspaces, run configs and chain files.

Scalars are written ``(re,im)`` with rationals ``-?digits(/digits)?``.  Input
also accepts a bare rational where a scalar is expected.  Every parse error
is an :class:`InputError` naming the source and the 1-based line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .chains import GeneralChain, ShiftChain, synth_general_chain, synth_shift_chain
from .general import VARIANTS, GeneralParams, GeneralSequence, c_block
from .matrices import Mat, ShapeError
from .scalar import Scalar, ScalarParseError, format_scalar, parse_rational, parse_scalar
from .shift import Delta, ShiftSequence, StrongParams, T1Params, T2Params
from .subspaces import Subspace, span_reduce, zero_subspace

__all__ = [
    "InputError",
    "RunConfig",
    "parse_value_scalar",
    "split_list",
    "parse_matrix",
    "format_matrix",
    "parse_subspace",
    "format_subspace",
    "parse_keyvalues",
    "parse_config",
    "parse_chain",
    "format_chain",
    "read_text",
    "parse_context",
]

CONFIG_KEYS = {
    "mode", "mu0", "lambda", "mu", "b0", "b", "R", "q2", "p2", "p1_1", "q3_R",
    "x1", "y", "trials", "rng_seed", "variant",
}


class InputError(ValueError):
    def __init__(self, source, line, message):
        self.source = source
        self.line = line
        self.message = message
        where = f"{source}:{line}" if line else str(source)
        super().__init__(f"{where}: {message}")


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(path, 0, f"cannot read file ({exc.strerror})") from None


def parse_value_scalar(text: str) -> Scalar:
    text = text.strip()
    if text.startswith("("):
        return parse_scalar(text)
    return Scalar(parse_rational(text))


def split_list(text: str):
    """Split at commas that are not inside parentheses."""
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail or items:
        items.append(tail)
    return items


# -- matrices and subspaces --------------------------------------------------------

def _parse_rows(lines, source, first_line):
    rows = []
    for k, line in enumerate(lines):
        try:
            rows.append([parse_value_scalar(tok) for tok in line.split()])
        except ScalarParseError as exc:
            raise InputError(source, first_line + k, str(exc)) from None
    for k, row in enumerate(rows):
        if len(row) != len(rows[0]):
            raise InputError(source, first_line + k,
                             f"row has {len(row)} entries, first row has {len(rows[0])}")
    return Mat(rows)


def parse_matrix(text: str, source="<matrix>") -> Mat:
    lines = text.splitlines()
    used = [i for i, ln in enumerate(lines) if ln.strip()]
    if not used:
        raise InputError(source, 0, "no matrix rows")
    first, last = used[0], used[-1]
    for i in range(first, last + 1):
        if not lines[i].strip():
            raise InputError(source, i + 1, "blank line inside matrix")
    return _parse_rows(lines[first:last + 1], source, first + 1)


def format_matrix(m: Mat) -> str:
    return str(m) + "\n"


def parse_subspace(text: str, source="<subspace>") -> Subspace:
    """``dim <d>`` then d blank-line separated matrices; ``dim 0 <m>x<n>`` for the zero subspace."""
    lines = text.splitlines()
    idx = next((i for i, ln in enumerate(lines) if ln.strip()), None)
    if idx is None:
        raise InputError(source, 0, "empty subspace file")
    head = lines[idx].split()
    if len(head) not in (2, 3) or head[0] != "dim" or not head[1].isdigit():
        raise InputError(source, idx + 1, "expected header 'dim <d>'")
    d = int(head[1])
    shape = None
    if len(head) == 3:
        m, _, n = head[2].partition("x")
        if not (m.isdigit() and n.isdigit()):
            raise InputError(source, idx + 1, "shape must look like <m>x<n>")
        shape = (int(m), int(n))
    blocks, cur, start = [], [], None
    for i in range(idx + 1, len(lines)):
        if lines[i].strip():
            if not cur:
                start = i + 1
            cur.append(lines[i])
        elif cur:
            blocks.append((start, cur))
            cur = []
    if cur:
        blocks.append((start, cur))
    if len(blocks) != d:
        raise InputError(source, idx + 1, f"header says dim {d} but {len(blocks)} matrices follow")
    mats = [_parse_rows(b, source, s) for s, b in blocks]
    if d == 0:
        if shape is None:
            raise InputError(source, idx + 1, "zero subspace needs 'dim 0 <m>x<n>'")
        return zero_subspace(*shape)
    try:
        sub = span_reduce(mats, shape=shape)
    except ShapeError as exc:
        raise InputError(source, idx + 1, str(exc)) from None
    if sub.dim != d:
        raise InputError(source, idx + 1, f"matrices span dimension {sub.dim}, header says {d}")
    return sub


def format_subspace(s: Subspace) -> str:
    if s.dim == 0:
        return f"dim 0 {s.ambient_rows}x{s.ambient_cols}\n"
    return f"dim {s.dim}\n" + "\n".join(format_matrix(b) for b in s.basis)


# -- key/value files ---------------------------------------------------------------

def parse_keyvalues(text: str, source="<config>"):
    """Return ``(header, blocks)``: a dict for lines before any ``[r=N]`` and a list of per-r dicts.

    Values are kept as ``(line, raw_text)`` so later errors can cite the line.
    """
    header, blocks = {}, []
    current = header
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            tag = line[1:-1].strip()
            if not tag.startswith("r=") or not tag[2:].isdigit():
                raise InputError(source, i, f"bad block header {line!r}")
            r = int(tag[2:])
            if r != len(blocks) + 1:
                raise InputError(source, i, f"expected block r={len(blocks) + 1}, got r={r}")
            current = {}
            blocks.append(current)
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise InputError(source, i, f"expected 'key = value', got {line!r}")
        key = key.strip()
        if key in current:
            raise InputError(source, i, f"duplicate key {key!r}")
        current[key] = (i, value.strip())
    return header, blocks


class _Fields:
    def __init__(self, items, source, context_line=0):
        self.items = items
        self.source = source
        self.context_line = context_line

    def _get(self, key):
        if key not in self.items:
            raise InputError(self.source, self.context_line, f"missing key {key!r}")
        return self.items[key]

    def has(self, key):
        return key in self.items

    def raw(self, key):
        return self._get(key)[1]

    def scalar(self, key):
        line, value = self._get(key)
        try:
            return parse_value_scalar(value)
        except ScalarParseError as exc:
            raise InputError(self.source, line, f"{key}: {exc}") from None

    def scalars(self, key):
        line, value = self._get(key)
        try:
            return [parse_value_scalar(v) for v in split_list(value)]
        except ScalarParseError as exc:
            raise InputError(self.source, line, f"{key}: {exc}") from None

    def integer(self, key, default=None):
        if default is not None and key not in self.items:
            return default
        line, value = self._get(key)
        try:
            return int(value)
        except ValueError:
            raise InputError(self.source, line, f"{key} must be an integer, got {value!r}") from None

    def line(self, key):
        return self.items[key][0] if key in self.items else self.context_line


@dataclass
class RunConfig:
    mode: str
    seq: object
    R: int
    seeds: dict = field(default_factory=dict)
    trials: int = 100
    rng_seed: int = 0
    variant: str = "printed"

    def synthesize(self):
        if self.mode == "general":
            return synth_general_chain(self.seq, self.R, variant=self.variant, **self.seeds)
        return synth_shift_chain(self.seq, self.R, **self.seeds)


def _load_sequence(f: _Fields, mode, source):
    try:
        if mode == "general":
            return GeneralSequence(f.scalar("mu0"), f.scalars("lambda"), f.scalars("mu"))
        return ShiftSequence(f.scalar("b0"), f.scalars("b"))
    except InputError:
        raise
    except ValueError as exc:
        key = "mu" if mode == "general" else "b"
        raise InputError(source, f.line(key), f"invalid sequence: {exc}") from None


def _mode(f: _Fields, source):
    mode = f.raw("mode")
    if mode not in ("general", "shift"):
        raise InputError(source, f.line("mode"), f"mode must be general or shift, got {mode!r}")
    return mode


def parse_config(text: str, source="<config>") -> RunConfig:
    header, blocks = parse_keyvalues(text, source)
    if blocks:
        raise InputError(source, 0, "run configs take no [r=N] blocks")
    for key, (line, _) in header.items():
        if key not in CONFIG_KEYS:
            raise InputError(source, line, f"unknown key {key!r}")
    f = _Fields(header, source)
    mode = _mode(f, source)
    seq = _load_sequence(f, mode, source)
    R = f.integer("R")
    if mode == "general":
        seeds = dict(q2=f.scalars("q2"), p2=f.scalars("p2"), p1_1=f.scalar("p1_1"), q3_R=f.scalar("q3_R"))
    else:
        seeds = dict(x1=f.scalar("x1"), y=f.scalars("y"))
    variant = f.raw("variant") if f.has("variant") else "printed"
    if variant not in VARIANTS:
        raise InputError(source, f.line("variant"), f"unknown variant {variant!r}")
    cfg = RunConfig(mode, seq, R, seeds, f.integer("trials", 100), f.integer("rng_seed", 0), variant)
    try:
        cfg.synthesize()
    except ValueError as exc:
        raise InputError(source, f.line("R"), f"cannot synthesize chain: {exc}") from None
    return cfg


# -- chain files -----------------------------------------------------------------

_SHIFT_VARIANTS = {"t1": (T1Params, ("x", "y")), "t2": (T2Params, ("x", "y", "q", "qp")),
                   "strong": (StrongParams, ("x", "y", "q"))}
_SHIFT_TAGS = {T1Params: "t1", T2Params: "t2", StrongParams: "strong"}


def format_chain(chain, trials: int = 100, rng_seed: int = 0) -> str:
    out = ["# cross-section chain"]
    if isinstance(chain, GeneralChain):
        s = chain.seq
        out += ["mode = general", f"mu0 = {format_scalar(s.mu0)}",
                "lambda = " + ",".join(map(format_scalar, s.lam)),
                "mu = " + ",".join(map(format_scalar, s.mu)),
                f"variant = {chain.variant}"]
    else:
        s = chain.seq
        out += ["mode = shift", f"b0 = {format_scalar(s.b0)}", "b = " + ",".join(map(format_scalar, s.b))]
    out += [f"R = {chain.R}", f"trials = {trials}", f"rng_seed = {rng_seed}"]
    for r, p in enumerate(chain.params, 1):
        out += ["", f"[r={r}]"]
        if isinstance(chain, GeneralChain):
            names = ("p1", "p2", "q2", "q3")
        else:
            tag = _SHIFT_TAGS[type(p)]
            out.append(f"variant = {tag}")
            names = _SHIFT_VARIANTS[tag][1]
        out += [f"{n} = {format_scalar(getattr(p, n))}" for n in names]
    return "\n".join(out) + "\n"


def parse_chain(text: str, source="<chain>"):
    """Return ``(chain, trials, rng_seed)``."""
    header, blocks = parse_keyvalues(text, source)
    f = _Fields(header, source)
    mode = _mode(f, source)
    seq = _load_sequence(f, mode, source)
    R = f.integer("R")
    if len(blocks) != R:
        raise InputError(source, f.line("R"), f"R = {R} but {len(blocks)} [r=N] blocks follow")
    params = []
    for r, block in enumerate(blocks, 1):
        first = min((ln for ln, _ in block.values()), default=0)
        bf = _Fields(block, source, first)
        try:
            if mode == "general":
                params.append(GeneralParams(*(bf.scalar(n) for n in ("p1", "p2", "q2", "q3"))))
            else:
                tag = bf.raw("variant")
                if tag not in _SHIFT_VARIANTS:
                    raise InputError(source, bf.line("variant"), f"unknown shift variant {tag!r}")
                cls, names = _SHIFT_VARIANTS[tag]
                params.append(cls(*(bf.scalar(n) for n in names)))
        except InputError:
            raise
        except ValueError as exc:
            raise InputError(source, first, f"block r={r}: {exc}") from None
    try:
        if mode == "general":
            variant = f.raw("variant") if f.has("variant") else "printed"
            if variant not in VARIANTS:
                raise InputError(source, f.line("variant"), f"unknown variant {variant!r}")
            chain = GeneralChain(seq, R, params, variant)
        else:
            chain = ShiftChain(seq, R, params)
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(source, f.line("R"), str(exc)) from None
    return chain, f.integer("trials", 100), f.integer("rng_seed", 0)


def parse_context(text: str, source="<context>"):
    """Recognition context: ``("general", C)`` or ``("shift", Delta)``.

    Either give the block directly (``c`` as nine row-major scalars, or
    ``delta`` as three) or a sequence plus the window index ``r``.
    """
    header, blocks = parse_keyvalues(text, source)
    if blocks:
        raise InputError(source, 0, "context files take no [r=N] blocks")
    f = _Fields(header, source)
    mode = _mode(f, source)
    direct = "c" if mode == "general" else "delta"
    try:
        if f.has(direct):
            vals = f.scalars(direct)
            want = 9 if mode == "general" else 3
            if len(vals) != want:
                raise InputError(source, f.line(direct), f"{direct} needs {want} scalars, got {len(vals)}")
            if mode == "general":
                c = Mat(vals, cols=3)
                if not all(c.entries):
                    raise InputError(source, f.line(direct), "block entries must be nonzero")
                return mode, c
            return mode, Delta(*vals)
        seq = _load_sequence(f, mode, source)
        r = f.integer("r")
        if mode == "general":
            return mode, c_block(seq, r)
        return mode, seq.delta(r)
    except InputError:
        raise
    except (ValueError, IndexError) as exc:
        raise InputError(source, 0, str(exc)) from None
