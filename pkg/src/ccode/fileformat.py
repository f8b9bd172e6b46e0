"""Line-oriented text format for fields, block codes, convolutional codes and
claims.  The grammar and the report key registry are in docs/FORMAT.md."""

from __future__ import annotations

import numpy as np

from .blockcode import BlockCode, make_code
from .convcode import ConvCode, SplitSpec, split_from_padded
from .families import ParamClaim
from .galois import FieldCtx, field_create
from .linalg import Matrix

HEADER = "ccode 1"


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# records


def render_record(rec: dict, head: str | None = None) -> str:
    parts = [head] if head else []
    for k, v in rec.items():
        v = str(v)
        if not v or any(c.isspace() for c in v) or "=" in v:
            raise FormatError(f"value for {k!r} cannot be written: {v!r}")
        parts.append(f"{k}={v}")
    return " ".join(parts)


def parse_record(line: str) -> tuple[str | None, dict]:
    head, rec = None, {}
    for i, tok in enumerate(line.split()):
        if "=" not in tok:
            if i:
                raise FormatError(f"stray token {tok!r}")
            head = tok
            continue
        k, _, v = tok.partition("=")
        if k in rec:
            raise FormatError(f"duplicate key {k!r}")
        rec[k] = v
    return head, rec


def _int(rec, key):
    try:
        return int(rec[key])
    except KeyError:
        raise FormatError(f"missing key {key!r}") from None
    except ValueError:
        raise FormatError(f"{key}={rec[key]!r} is not an integer") from None


# ---------------------------------------------------------------------------
# rendering


def _matrix_lines(M) -> list[str]:
    a = M.a if isinstance(M, Matrix) else np.asarray(M)
    lines = [f"matrix rows={a.shape[0]} cols={a.shape[1]}"]
    lines += [" ".join(str(int(x)) for x in row) for row in a]
    return lines


def _code_lines(C: BlockCode) -> list[str]:
    head = f"code n={C.n} k={C.k}"
    if C.split_hint:
        head += " split=" + ",".join(str(r) for r in C.split_hint)
    return [head, C.field.descriptor(), "generator", *_matrix_lines(C.G), "parity", *_matrix_lines(C.H)]


def _conv_lines(V: ConvCode) -> list[str]:
    lines = [f"convcode n={V.n} k={V.k} mu={V.mu}", V.field.descriptor()]
    for j in range(V.coeffs.shape[0]):
        lines.append(f"coeff i={j}")
        lines += _matrix_lines(V.coeffs[j])
    if V.split is not None:
        lines.append(f"split kind={V.split.kind}")
    return lines


def _claim_line(c: ParamClaim) -> str:
    return render_record(c.record(), "claim")


def render(*objs) -> str:
    lines = [HEADER]
    for o in objs:
        if isinstance(o, BlockCode):
            lines += _code_lines(o)
        elif isinstance(o, ConvCode):
            lines += _conv_lines(o)
        elif isinstance(o, ParamClaim):
            lines.append(_claim_line(o))
        else:
            raise TypeError(f"cannot render {type(o).__name__}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parsing


class _Lines:
    def __init__(self, text: str):
        self.lines = [ln.strip() for ln in text.splitlines()]
        self.lines = [ln for ln in self.lines if ln and not ln.startswith("#")]
        self.i = 0

    def peek(self):
        return self.lines[self.i] if self.i < len(self.lines) else None

    def next(self):
        ln = self.peek()
        if ln is None:
            raise FormatError("unexpected end of input")
        self.i += 1
        return ln


def _parse_field(line: str) -> FieldCtx:
    head, rec = parse_record(line)
    if head != "field":
        raise FormatError(f"expected a field line, got {line!r}")
    try:
        modulus = tuple(int(c) for c in rec["modulus"].split(","))
        return field_create(_int(rec, "p"), _int(rec, "m"), modulus)
    except KeyError:
        raise FormatError("field line needs p, m and modulus") from None
    except ValueError as e:
        raise FormatError(str(e)) from None


def _parse_matrix(L: _Lines, F: FieldCtx) -> Matrix:
    head, rec = parse_record(L.next())
    if head != "matrix":
        raise FormatError("expected a matrix block")
    r, c = _int(rec, "rows"), _int(rec, "cols")
    rows = []
    for _ in range(r):
        try:
            vals = [int(x) for x in L.next().split()]
        except ValueError:
            raise FormatError("matrix entries must be integers") from None
        if len(vals) != c:
            raise FormatError(f"matrix row has {len(vals)} entries, expected {c}")
        rows.append(vals)
    try:
        return Matrix(F, np.array(rows, dtype=np.int64).reshape(r, c))
    except ValueError as e:
        raise FormatError(str(e)) from None


def _expect(L, word):
    ln = L.next()
    if ln != word:
        raise FormatError(f"expected {word!r}, got {ln!r}")


def _parse_code(L: _Lines, rec) -> BlockCode:
    F = _parse_field(L.next())
    _expect(L, "generator")
    G = _parse_matrix(L, F)
    H = None
    if L.peek() == "parity":
        L.next()
        H = _parse_matrix(L, F)
    C = make_code(F, G=G)
    if H is not None:
        if H.rows != C.H.rows or (H.rows and not _same(C.H, H)):
            raise FormatError("parity block does not match the generator")
        C.H = H
    if G.rows != C.k:
        raise FormatError("generator is not of full rank")
    C.G = G
    if C.n != _int(rec, "n") or C.k != _int(rec, "k"):
        raise FormatError("code header disagrees with its matrices")
    if "split" in rec:
        C.split_hint = tuple(int(x) for x in rec["split"].split(","))
    return C


def _same(A, B):
    from .linalg import same_row_space

    return same_row_space(A, B)


def _parse_conv(L: _Lines, rec) -> ConvCode:
    F = _parse_field(L.next())
    coeffs = []
    while L.peek() and L.peek().startswith("coeff"):
        _, crec = parse_record(L.next())
        if _int(crec, "i") != len(coeffs):
            raise FormatError("coefficient blocks must be numbered 0, 1, 2, ...")
        coeffs.append(_parse_matrix(L, F).a)
    if not coeffs or len({c.shape for c in coeffs}) != 1:
        raise FormatError("convcode needs coefficient blocks of one shape")
    split = None
    if L.peek() and L.peek().startswith("split"):
        _, srec = parse_record(L.next())
        try:
            split = split_from_padded(F, coeffs, srec.get("kind", "parity"))
        except ValueError as e:
            raise FormatError(f"invalid split: {e}") from None
    V = ConvCode(F, np.stack(coeffs), split, provenance=("file",))
    if (V.n, V.k, V.mu) != (_int(rec, "n"), _int(rec, "k"), _int(rec, "mu")):
        raise FormatError("convcode header disagrees with its coefficients")
    return V


CLAIM_KEYS = {"row", "n", "k", "delta", "mu", "df_bound", "df_target", "field_q", "constraints_ok", "notes"}


def parse_claim(rec: dict) -> ParamClaim:
    try:
        delta = rec["delta"]
        delta_le = delta.startswith("le")
        bound = rec["df_bound"]
        rel, val = bound[:2], int(bound[2:])
        mu = None if rec.get("mu", "*") == "*" else int(rec["mu"])
        extra = [k for k in rec if k not in CLAIM_KEYS and not k.startswith("p_")]
        if extra:
            raise FormatError(f"unknown claim keys {extra}")
        params = tuple(sorted((k[2:], int(v)) for k, v in rec.items() if k.startswith("p_")))
        return ParamClaim(
            n=_int(rec, "n"),
            k=_int(rec, "k"),
            delta=int(delta[2:] if delta_le else delta),
            mu=mu,
            df_rel=rel,
            df_value=val,
            field_q=_int(rec, "field_q"),
            provenance="" if rec.get("row", "-") == "-" else rec["row"],
            constraints_ok=rec.get("constraints_ok", "true") == "true",
            delta_le=delta_le,
            df_target=rec.get("df_target", "code"),
            notes=tuple(filter(None, rec.get("notes", "").split(","))),
            params=params,
        )
    except (KeyError, ValueError) as e:
        raise FormatError(f"bad claim: {e}") from None


def parse(text: str) -> list:
    L = _Lines(text)
    if L.peek() != HEADER:
        raise FormatError(f"missing header line {HEADER!r}")
    L.next()
    out = []
    while L.peek() is not None:
        head, rec = parse_record(L.next())
        if head == "code":
            out.append(_parse_code(L, rec))
        elif head == "convcode":
            out.append(_parse_conv(L, rec))
        elif head == "claim":
            out.append(parse_claim(rec))
        else:
            raise FormatError(f"unknown block {head!r}")
    return out
