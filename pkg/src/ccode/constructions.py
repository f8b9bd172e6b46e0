"""New convolutional codes from old ones, each paired with its predicted
parameters, and a verifier that measures a code against such a claim."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .blockcode import even_odd_min_weights, expand_matrix_rows, min_distance, min_weight_words
from .convcode import (
    ConvCode,
    DistanceResult,
    SplitSpec,
    certify,
    conv_from_split,
    dual_conv,
    dual_free_distance,
    free_distance,
    split_from_padded,
    split_parity,
    DEFAULT_STATE_CAP,
)
from .families import ParamClaim, cyclic_code, melas_code, table_params, ROWS
from .galois import Basis, canonical_basis, field_create, self_dual_basis
from .linalg import Matrix


class ConstructionError(ValueError):
    pass


def _require_split(V: ConvCode, kind=None) -> SplitSpec:
    if V.split is None:
        raise ConstructionError("the code carries no split; build it from a block code first")
    if kind and V.split.kind != kind:
        raise ConstructionError(f"needs a {kind}-matrix split, got a {V.split.kind}-matrix split")
    return V.split


def _dperp(S: SplitSpec):
    md = min_distance(S.dual_source)
    return md.d, md.exact


def _padded(S: SplitSpec, length: int) -> list[Matrix]:
    out = list(S.padded)
    while len(out) < length:
        out.append(Matrix.zeros(S.field, S.kappa, S.source.n))
    return out


def _claim(tag, V: ConvCode, df, exact=True, notes=(), mu=None):
    n, k, delta, m = V.params()
    notes = tuple(notes) + (() if exact else ("bound-inexact",))
    return ParamClaim(
        n=n,
        k=k,
        delta=delta,
        mu=m if mu is None else mu,
        df_rel="ge",
        df_value=int(df),
        field_q=V.field.q,
        provenance=tag,
        notes=notes,
    )


def _build(padded, field_, kind, trail) -> ConvCode:
    return conv_from_split(split_from_padded(field_, padded, kind), trail)


def basis_by_name(ext, sub, name: str) -> Basis:
    if name == "canonical":
        return canonical_basis(ext, sub)
    if name == "self-dual":
        return self_dual_basis(ext, sub)
    raise ConstructionError(f"unknown basis {name!r}")


def expand_conv(V: ConvCode, beta: Basis | None = None):
    """Expand every split row over the dual basis of beta.

    Row i of each padded block becomes rows i*m .. i*m + m - 1, so every row
    degree repeats m times: (n, k, delta; mu) -> (nm, km, m delta; mu).
    """
    S = _require_split(V, "parity")
    ext = V.field
    if beta is None:
        beta = canonical_basis(ext, field_create(ext.p))
    if beta.ext != ext:
        raise ConstructionError("basis belongs to a different field")
    dual = beta.dual()
    padded = [expand_matrix_rows(P, dual, dual.elements) for P in S.padded]
    W = _build(padded, beta.sub, "parity", V.provenance + (f"expand:m={beta.degree}",))
    d, ex = _dperp(S)
    want = (V.n * beta.degree, V.k * beta.degree, V.delta * beta.degree, V.mu)
    if W.params() != want:
        raise AssertionError(f"expanded parameters {W.params()} != {want}")
    notes = ("extrapolated",) if V.mu != 1 else ()
    return W, _claim("expand", W, d, ex, notes)


def direct_sum_conv(V1: ConvCode, V2: ConvCode):
    S1, S2 = _require_split(V1), _require_split(V2)
    if V1.field != V2.field:
        raise ConstructionError("codes live over different fields")
    if S1.kind != S2.kind:
        raise ConstructionError("both splits must come from the same kind of matrix")
    L = max(len(S1.padded), len(S2.padded))
    padded = [linalg.block_diag(a, b) for a, b in zip(_padded(S1, L), _padded(S2, L))]
    W = _build(padded, V1.field, S1.kind, ("dsum",))
    (d1, e1), (d2, e2) = _dperp(S1), _dperp(S2)
    notes = ("extrapolated",) if (V1.mu != 1 or V2.mu != 1) else ()
    return W, _claim("dsum", W, min(d1, d2), e1 and e2, notes)


def puncture_branch(S: SplitSpec, i: int):
    """(d_perp, hit): hit when some minimum-weight word of C^perp is nonzero at i."""
    d, words = min_weight_words(S.dual_source)
    return d, bool(words[:, i].any())


def puncture_conv(V: ConvCode, i: int):
    S = _require_split(V, "parity")
    if V.mu not in (1, 2, 3):
        raise ConstructionError("puncturing is defined for memory 1, 2 or 3")
    if not 0 <= i < V.n:
        raise ConstructionError(f"coordinate {i} out of range for length {V.n}")
    d, hit = puncture_branch(S, i)
    if d is None or d <= 1:
        raise ConstructionError("puncturing needs d(C^perp) > 1")
    padded = [linalg.delete_col(P, i) for P in S.padded]
    W = _build(padded, V.field, "parity", V.provenance + (f"puncture:{i}",))
    if W.params()[1:] != V.params()[1:]:
        raise AssertionError("puncturing changed k, delta or mu")
    return W, _claim("puncture", W, d - 1 if hit else d, notes=("branch:" + ("i" if hit else "ii"),))


def extend_conv(V: ConvCode):
    """Append a zero-sum column to the split generator blocks."""
    S = _require_split(V, "generator")
    if V.mu != 1:
        raise ConstructionError("extension is defined for memory 1")
    C = S.dual_source
    d_even, d_odd = even_odd_min_weights(C)
    d = min(x for x in (d_even, d_odd) if x is not None)
    gain = d_odd is not None and (d_even is None or d_odd < d_even)
    padded = [linalg.append_parity_col(P) for P in S.padded]
    W = _build(padded, V.field, "generator", V.provenance + ("extend",))
    return W, _claim("extend", W, d + 1 if gain else d, notes=("branch:" + ("ii" if gain else "i"),))


def uuv_conv(V1: ConvCode, V2: ConvCode):
    S1, S2 = _require_split(V1, "parity"), _require_split(V2, "parity")
    if V1.field != V2.field or V1.n != V2.n:
        raise ConstructionError("(u|u+v) needs equal lengths over one field")
    if V1.mu != V2.mu or V1.mu not in (1, 2):
        raise ConstructionError("(u|u+v) needs matching memory 1 or 2")
    L = len(S1.padded)
    padded = []
    for a, b in zip(_padded(S1, L), _padded(S2, L)):
        top = linalg.stack_h(a, Matrix.zeros(V1.field, a.rows, a.cols))
        bottom = linalg.stack_h(-b, b)
        padded.append(linalg.stack_v(top, bottom))
    W = _build(padded, V1.field, "parity", ("uuv",))
    (d1, e1), (d2, e2) = _dperp(S1), _dperp(S2)
    return W, _claim("uuv", W, min(2 * d2, d1), e1 and e2)


def product_conv(V1: ConvCode, V2: ConvCode):
    S1, S2 = _require_split(V1, "generator"), _require_split(V2, "generator")
    if V1.field != V2.field:
        raise ConstructionError("codes live over different fields")
    if V1.mu > 1 or V2.mu > 1:
        raise ConstructionError("the product construction is defined for memory <= 1")
    a0, a1 = _padded(S1, 2)[:2]
    b0, b1 = _padded(S2, 2)[:2]
    padded = [linalg.kronecker(a0, b0), linalg.kronecker(a1, b1)]
    W = _build(padded, V1.field, "generator", ("product",))
    (d1, e1), (d2, e2) = _dperp(S1), _dperp(S2)
    return W, _claim("product", W, d1 * d2, e1 and e2)


# ---------------------------------------------------------------------------
# verification


@dataclass
class Item:
    name: str
    claimed: object
    measured: object
    verdict: str  # match | bound-satisfied | violated | undetermined

    def record(self):
        return {"item": self.name, "claim": self.claimed, "measured": self.measured, "verdict": self.verdict}


@dataclass
class VerifyReport:
    claim: ParamClaim
    side: str  # "code" or "dual": which of V, V^perp the claim describes
    items: list[Item] = field(default_factory=list)
    distance: DistanceResult | None = None

    @property
    def verdict(self) -> str:
        verdicts = {it.verdict for it in self.items}
        if "violated" in verdicts:
            return "violated"
        if "undetermined" in verdicts:
            return "undetermined"
        return "ok"

    @property
    def exit_code(self) -> int:
        return {"ok": 0, "violated": 1, "undetermined": 3}[self.verdict]


def _eq_item(name, claimed, measured):
    return Item(name, claimed, measured, "match" if claimed == measured else "violated")


def _df_item(claim: ParamClaim, dist: DistanceResult) -> Item:
    lo, up = dist.lower, dist.upper
    measured = str(lo) if dist.exact else f"[{lo},{up}]"
    want = claim.df_min
    label = f"{claim.df_rel}{claim.df_value}"
    if lo is None:
        return Item("df", label, "none", "undetermined")
    if claim.df_rel == "eq":
        if dist.exact:
            return Item("df", label, measured, "match" if lo == claim.df_value else "violated")
        outside = lo > claim.df_value or (up is not None and up < claim.df_value)
        return Item("df", label, measured, "violated" if outside else "undetermined")
    if lo >= want:
        return Item("df", label, measured, "bound-satisfied")
    if dist.exact:
        return Item("df", label, measured, "violated")
    return Item("df", label, measured, "undetermined")


def measured_sides(V: ConvCode):
    D = dual_conv(V)
    return {"code": V.params(), "dual": D.params()}


def pick_side(V: ConvCode, claim: ParamClaim) -> str:
    """The side (V or its dual) whose (n, k) the claim describes."""
    sides = measured_sides(V)

    def score(p):
        n, k, delta, mu = p
        s = 2 * (n == claim.n) + 2 * (k == claim.k)
        s += delta <= claim.delta if claim.delta_le else delta == claim.delta
        s += claim.mu is None or claim.mu == mu
        return s

    return max(("code", "dual"), key=lambda side: (score(sides[side]), side == "code"))


def verify_claim(V: ConvCode, claim: ParamClaim, state_cap=DEFAULT_STATE_CAP, budget=None) -> VerifyReport:
    side = pick_side(V, claim)
    n, k, delta, mu = measured_sides(V)[side]
    rep = VerifyReport(claim, side)
    if claim.field_q != V.field.q:
        rep.items.append(Item("field_q", claim.field_q, V.field.q, "violated"))
    rep.items.append(_eq_item("n", claim.n, n))
    rep.items.append(_eq_item("k", claim.k, k))
    if claim.delta_le:
        rep.items.append(Item("delta", f"le{claim.delta}", delta,
                              "bound-satisfied" if delta <= claim.delta else "violated"))
    else:
        rep.items.append(_eq_item("delta", claim.delta, delta))
    if claim.mu is not None:
        rep.items.append(_eq_item("mu", claim.mu, mu))
    cert = certify(V if side == "code" else dual_conv(V))
    rep.items.append(Item("basic", "true", str(cert.basic).lower(), "match" if cert.basic else "violated"))
    rep.items.append(Item("reduced", "true", str(cert.reduced).lower(), "match" if cert.reduced else "violated"))
    target = side
    if claim.df_target == "dual":
        target = "dual" if side == "code" else "code"
    if target == "code":
        dist = free_distance(V, state_cap=state_cap, budget=budget)
    else:
        dist = dual_free_distance(V, state_cap=state_cap, budget=budget)
    rep.distance = dist
    rep.items.append(_df_item(claim, dist))
    return rep


# ---------------------------------------------------------------------------
# table rows that can be built at their smallest parameters


def build_row(tag: str, params: dict | None = None) -> ConvCode:
    """A split-built code realising a table row (only for constructible rows)."""
    row = ROWS[tag]
    if not row.constructible:
        raise ConstructionError(f"row {tag} has no construction here")
    p = dict(row.defaults)
    p.update(params or {})
    if tag in ("melas", "expanded-melas"):
        C = melas_code(p["q"], p["m"])
        V = conv_from_split(split_parity(C, C.split_hint), (f"melas:q={p['q']},m={p['m']}",))
        if tag == "expanded-melas":
            V, _ = expand_conv(V)
        return V
    if tag == "melas-binary":
        C = melas_code(2, p["m"])
        return conv_from_split(split_parity(C, C.split_hint), (f"melas:q=2,m={p['m']}",))
    if tag in ("bch-hole-3", "bch-hole-4"):
        m, t = p["m"], p["t"]
        n = 2**m - 1
        reps = [2 * j + 1 for j in range(t)]
        if tag == "bch-hole-4":
            reps = [0] + reps
        C = cyclic_code(2, n, reps)
        sizes = C.split_hint
        counts = (sum(sizes[:-1]), sizes[-1])
        return conv_from_split(split_parity(C, counts), (f"bch:m={m},t={t}",))
    raise ConstructionError(f"row {tag} has no construction here")


def verify_row(tag: str, params: dict | None = None, state_cap=DEFAULT_STATE_CAP):
    claim = table_params(tag, params)
    V = build_row(tag, params)
    return V, claim, verify_claim(V, claim, state_cap=state_cap)
