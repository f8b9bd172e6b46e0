"""Command-line entry point: ``ccode <command> ...``.

Exit status: 0 success, 1 a claim was violated, 2 usage or parse error,
3 a result stayed undetermined within the configured budgets.
"""

from __future__ import annotations

import argparse
import sys

from . import constructions as K
from . import families
from .blockcode import BudgetExceeded
from .convcode import (
    DEFAULT_STATE_CAP,
    ConvCode,
    SplitError,
    certify,
    conv_from_split,
    dual_conv,
    dual_free_distance,
    free_distance,
    split_generator,
    split_parity,
)
from .fileformat import FormatError, parse, render, render_record
from .galois import FieldError

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_UNDETERMINED = 0, 1, 2, 3
_SEVERITY = {EXIT_OK: 0, EXIT_UNDETERMINED: 1, EXIT_VIOLATED: 2}


class UsageError(Exception):
    pass


def _read(path: str) -> list:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse(text)


def _one(path: str, kind):
    objs = [o for o in _read(path) if isinstance(o, kind)]
    if not objs:
        raise UsageError(f"{path}: no {kind.__name__} block found")
    return objs[0]


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _out(text: str):
    sys.stdout.write(text)


# ---------------------------------------------------------------------------


def cmd_family(a) -> int:
    need = {"bch": ("q", "n", "delta"), "rs": ("q", "n", "k"), "rm": ("r", "m"), "melas": ("q", "m")}
    missing = [k for k in need[a.name] if getattr(a, k) is None]
    if missing:
        raise UsageError(f"family {a.name} needs --{' --'.join(missing)}")
    if a.name == "bch":
        C = families.bch_code(a.q, a.n, a.b, a.delta)
    elif a.name == "rs":
        C = families.rs_code(a.q, a.n, a.k)
    elif a.name == "rm":
        C = families.rm_code(a.r, a.m)
    else:
        C = families.melas_code(a.q, a.m)
    _out(render(C))
    return EXIT_OK


def cmd_from_block(a) -> int:
    from .blockcode import BlockCode

    C = _one(a.input, BlockCode)
    counts = _ints(a.split) if a.split else C.split_hint
    if not counts:
        raise UsageError("no --split given and the code carries no split hint")
    S = (split_generator if a.generator else split_parity)(C, counts)
    _out(render(conv_from_split(S)))
    return EXIT_OK


def _cert_record(V: ConvCode) -> dict:
    c = certify(V)
    return {
        "n": V.n,
        "k": V.k,
        "delta": c.delta,
        "mu": c.mu,
        "row_degrees": ",".join(str(d) for d in c.row_degrees) or "-",
        "basic": str(c.basic).lower(),
        "reduced": str(c.reduced).lower(),
        "minor_gcd": ",".join(str(x) for x in c.gcd) or "0",
    }


def cmd_certify(a) -> int:
    V = _one(a.input, ConvCode)
    rec = _cert_record(V)
    D = dual_conv(V)
    rec.update(dual_k=D.k, dual_delta=D.delta, dual_mu=D.mu)
    _out(render_record(rec, "certify") + "\n")
    return EXIT_OK


def _dist_fields(prefix, res) -> dict:
    return {
        f"{prefix}mode": res.mode,
        f"{prefix}lower": res.lower if res.lower is not None else "none",
        f"{prefix}upper": res.upper if res.upper is not None else "none",
    }


def cmd_distance(a) -> int:
    V = _one(a.input, ConvCode)
    rec = _cert_record(V)
    res = free_distance(V, state_cap=a.state_cap, horizon=a.horizon)
    rec["df"] = res.value if res.exact else "none"
    rec.update(_dist_fields("df_", res))
    undetermined = not res.exact
    if a.dual:
        dres = dual_free_distance(V, state_cap=a.state_cap)
        rec["df_dual"] = dres.value if dres.exact else "none"
        rec.update(_dist_fields("df_dual_", dres))
        undetermined = undetermined or not dres.exact
    if V.split is not None and not a.no_bounds:
        from .convcode import split_bounds

        b = split_bounds(V.split)
        lo, hi = b.window
        rec["df_lower_bound"] = b.df_lower.d if b.df_lower.d is not None else "none"
        rec["dual_window"] = f"{lo},{hi}"
        rec["bounds_exact"] = str(b.exact).lower()
    _out(render_record(rec, "distance") + "\n")
    return EXIT_UNDETERMINED if undetermined else EXIT_OK


def cmd_transform(a) -> int:
    V1 = _one(a.in1, ConvCode)
    needs_two = a.op in ("dsum", "uuv", "product")
    if needs_two and not a.in2:
        raise UsageError(f"transform {a.op} needs two inputs")
    V2 = _one(a.in2, ConvCode) if needs_two else None
    if a.op == "expand":
        from .galois import field_create

        sub = field_create(V1.field.p)
        W, claim = K.expand_conv(V1, K.basis_by_name(V1.field, sub, a.basis))
    elif a.op == "dsum":
        W, claim = K.direct_sum_conv(V1, V2)
    elif a.op == "puncture":
        if a.coord is None:
            raise UsageError("transform puncture needs --coord")
        W, claim = K.puncture_conv(V1, a.coord)
    elif a.op == "extend":
        W, claim = K.extend_conv(V1)
    elif a.op == "uuv":
        W, claim = K.uuv_conv(V1, V2)
    else:
        W, claim = K.product_conv(V1, V2)
    _out(render(W, claim))
    return EXIT_OK


def _report_lines(rep: K.VerifyReport, prefix: dict) -> list[str]:
    lines = [render_record({**prefix, "item": it.name, "claim": it.claimed, "measured": it.measured,
                            "verdict": it.verdict}, "check") for it in rep.items]
    lines.append(render_record({**prefix, "side": rep.side, "verdict": rep.verdict}, "verdict"))
    return lines


def cmd_verify(a) -> int:
    from .families import ParamClaim

    V = _one(a.input, ConvCode)
    claim = _one(a.claim or a.input, ParamClaim)
    rep = K.verify_claim(V, claim, state_cap=a.state_cap)
    _out("\n".join(_report_lines(rep, {})) + "\n")
    return rep.exit_code


def _instantiations(a) -> list[tuple[str, dict]]:
    if a.all:
        return [(tag, {}) for tag in families.ROWS]
    if not a.row:
        raise UsageError("table needs --row or --all")
    base = families.parse_params(a.params) if a.params else {}
    if not a.range:
        return [(a.row, base)]
    key, values = families.parse_range(a.range)
    return [(a.row, {**base, key: v}) for v in values]


def cmd_table(a) -> int:
    lines, worst = [], EXIT_OK
    for tag, params in _instantiations(a):
        if tag not in families.ROWS:
            raise UsageError(f"unknown table row {tag!r}")
        try:
            claim = families.table_params(tag, params)
        except KeyError as e:
            raise UsageError(str(e.args[0])) from None
        lines.append(render_record(claim.record(), "claim"))
        if a.no_verify or not families.ROWS[tag].constructible:
            continue
        V = K.build_row(tag, params)
        rep = K.verify_claim(V, claim, state_cap=a.state_cap)
        lines += _report_lines(rep, {"row": tag})
        worst = max(worst, rep.exit_code, key=_SEVERITY.get)
    _out("\n".join(lines) + "\n")
    return worst


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ccode", description="Convolutional codes from block codes.")
    sub = p.add_subparsers(dest="cmd", required=True)

    f = sub.add_parser("family", help="emit a seed block code")
    f.add_argument("name", choices=["bch", "rs", "rm", "melas"])
    for opt in ("q", "n", "k", "r", "m", "delta"):
        f.add_argument(f"--{opt}", type=int)
    f.add_argument("--b", type=int, default=1)
    f.set_defaults(func=cmd_family)

    def add_dist_opts(sp):
        sp.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
        sp.add_argument("--horizon", type=int)
        sp.add_argument("--dual", action="store_true", help="also compute the dual free distance")
        sp.add_argument("--no-bounds", action="store_true")
        sp.set_defaults(func=cmd_distance)

    conv = sub.add_parser("conv", help="convolutional code operations")
    csub = conv.add_subparsers(dest="conv_cmd", required=True)
    fb = csub.add_parser("from-block", help="split a block code into G(D)")
    fb.add_argument("input", nargs="?", default="-")
    fb.add_argument("--split", help="row counts r0,r1[,r2,r3]")
    fb.add_argument("--generator", action="store_true", help="split the generator matrix")
    fb.set_defaults(func=cmd_from_block)
    for parent in (csub, sub):
        d = parent.add_parser("distance", help="free distance report")
        d.add_argument("input", nargs="?", default="-")
        add_dist_opts(d)
        c = parent.add_parser("certify", help="basic/reduced/degree report")
        c.add_argument("input", nargs="?", default="-")
        c.set_defaults(func=cmd_certify)

    t = sub.add_parser("transform", help="apply a construction")
    t.add_argument("op", choices=["expand", "dsum", "puncture", "extend", "uuv", "product"])
    t.add_argument("in1")
    t.add_argument("in2", nargs="?")
    t.add_argument("--coord", type=int)
    t.add_argument("--basis", choices=["canonical", "self-dual"], default="canonical")
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("verify", help="check a code against a claim")
    v.add_argument("input")
    v.add_argument("--claim")
    v.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    v.set_defaults(func=cmd_verify)

    tb = sub.add_parser("table", help="evaluate (and where possible build) table rows")
    tb.add_argument("--row")
    tb.add_argument("--params")
    tb.add_argument("--range")
    tb.add_argument("--all", action="store_true")
    tb.add_argument("--no-verify", action="store_true")
    tb.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    tb.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return a.func(a)
    except (UsageError, FormatError, SplitError, FieldError, K.ConstructionError) as e:
        print(f"ccode: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"ccode: {e}", file=sys.stderr)
        return EXIT_UNDETERMINED
    except ValueError as e:
        print(f"ccode: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
