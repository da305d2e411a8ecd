"""Command-line front end.

    superbgg VERB [-m M] [-n N|inf] [--lambda P] [--kmax K] [--depth D]
                  [--weights "a|b;c|d"] [--format json|table] [--out FILE]

Exit codes: 0 pass, 2 usage error, 3 mathematical check failed, 4 resource
guard tripped.  Weights starting with a minus sign must be attached with
``=``, e.g. ``--weights=-1|1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .bruhat_order import leq_gl, leq_gl_closure, leq_super, pairwise_incomparable
from .characters import euler_verify, hook_schur, kac_character
from .partitions import INF, format_partition, in_hook, parse_partition
from .weights import (
    SuperWeight,
    casimir_c,
    casimir_s,
    dim_l0,
    format_weight,
    natural,
    parse_weight,
    split_hook,
    z_degree,
)
from .weyl_cosets import enumerate_w0k, truncate_terms

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_GUARD = 0, 2, 3, 4

VERBS = {
    # verb: (required flags, optional flags)
    "resolve": ({"m", "n", "lambda", "kmax"}, set()),
    "verify-euler": ({"m", "n", "lambda", "depth"}, set()),
    "verify-incomparable": ({"m"}, {"lambda", "kmax", "weights"}),
    "hs": ({"m", "n", "lambda"}, set()),
    "casimir": ({"weights"}, set()),
    "bruhat": ({"weights"}, set()),
    "replab-kac": ({"m", "n"}, {"lambda", "weights"}),
    "replab-cohomology": ({"m", "n", "lambda", "kmax"}, set()),
    "replab-verma-gl12": ({"depth"}, set()),
}
COMMON = {"format", "out"}
FLAG_NAMES = {"m": "-m", "n": "-n", "lambda": "--lambda", "kmax": "--kmax", "depth": "--depth",
              "weights": "--weights", "format": "--format", "out": "--out"}


class UsageError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        if "invalid choice" in message and "verb" in message:
            raise UsageError("unknown-verb", message)
        raise UsageError("bad-argument", message)


class _Once(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        seen = getattr(namespace, "_seen", set())
        if self.dest in seen:
            raise UsageError("duplicate-flag", f"{option_string} given more than once")
        seen.add(self.dest)
        namespace._seen = seen
        setattr(namespace, self.dest, values)


def _build_parser() -> _Parser:
    p = _Parser(prog="superbgg", description="Exact BGG-type resolutions over gl(m|n).")
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("-m", action=_Once)
    p.add_argument("-n", action=_Once)
    p.add_argument("--lambda", dest="lambda", action=_Once)
    p.add_argument("--kmax", action=_Once)
    p.add_argument("--depth", action=_Once)
    p.add_argument("--weights", action=_Once)
    p.add_argument("--format", action=_Once, choices=["json", "table"])
    p.add_argument("--out", action=_Once)
    return p


@dataclass
class Command:
    verb: str
    params: dict = field(default_factory=dict)


def _nonneg_int(flag: str, text: str, positive: bool = False) -> int:
    try:
        v = int(text)
    except ValueError:
        raise UsageError("bad-value", f"{flag} expects an integer, got {text!r}") from None
    if v < 0 or (positive and v == 0):
        raise UsageError("bad-value", f"{flag} must be {'positive' if positive else 'nonnegative'}")
    return v


def parse_command(argv: list[str]) -> Command:
    ns = _build_parser().parse_args(argv)
    verb = ns.verb
    required, optional = VERBS[verb]
    given = {k for k in FLAG_NAMES if getattr(ns, k, None) is not None}
    missing = [FLAG_NAMES[k] for k in FLAG_NAMES if k in required - given]
    if missing:
        raise UsageError("missing-flag", f"{verb} requires {', '.join(missing)}")
    extra = [FLAG_NAMES[k] for k in FLAG_NAMES if k in given - required - optional - COMMON]
    if extra:
        raise UsageError("unexpected-flag", f"{verb} does not take {', '.join(extra)}")

    params: dict = {}
    if "m" in given:
        params["m"] = _nonneg_int("-m", ns.m, positive=True)
    if "n" in given:
        params["n"] = INF if ns.n.strip().lower() == "inf" else _nonneg_int("-n", ns.n, positive=True)
    if "lambda" in given:
        try:
            params["lambda"] = parse_partition(getattr(ns, "lambda"))
        except ValueError as exc:
            raise UsageError("malformed-partition", str(exc)) from None
    if "kmax" in given:
        params["kmax"] = _nonneg_int("--kmax", ns.kmax)
    if "depth" in given:
        params["depth"] = _nonneg_int("--depth", ns.depth)
    if "weights" in given:
        n = params.get("n", INF)
        ws = []
        for tok in ns.weights.split(";"):
            if not tok.strip():
                continue
            try:
                ws.append(parse_weight(tok.strip(), n))
            except ValueError as exc:
                raise UsageError("malformed-weight", str(exc)) from None
        if not ws:
            raise UsageError("malformed-weight", "--weights is empty")
        params["weights"] = ws
    params["format"] = ns.format or "json"
    params["out"] = ns.out

    if verb in ("verify-incomparable",) and "weights" not in params:
        if "lambda" not in params or "kmax" not in params:
            raise UsageError("missing-flag", f"{verb} requires --weights or both --lambda and --kmax")
    if verb == "replab-kac" and ("lambda" in params) == ("weights" in params):
        raise UsageError("missing-flag", "replab-kac requires exactly one of --lambda and --weights")
    if verb in ("replab-kac", "replab-cohomology") and params["n"] == INF:
        raise UsageError("bad-value", f"{verb} needs a finite -n")
    if "lambda" in params and "m" in params:
        if not in_hook(params["lambda"], params["m"], params.get("n", INF)):
            raise UsageError("bad-value", f"--lambda {params['lambda']} is not an (m|n)-hook partition")
    if "m" in params and "weights" in params:
        for w in params["weights"]:
            if w.m != params["m"]:
                raise UsageError("malformed-weight", f"{format_weight(w)} does not have {params['m']} negative entries")
    return Command(verb, params)


# ---------------------------------------------------------------- execution


def _fmt_n(n):
    return "inf" if n == INF else n


def _echo(params: dict) -> dict:
    out = {}
    for k in ("m", "n", "lambda", "kmax", "depth", "weights"):
        if k not in params:
            continue
        v = params[k]
        if k == "n":
            v = _fmt_n(v)
        elif k == "lambda":
            v = format_partition(v)
        elif k == "weights":
            v = [format_weight(w) for w in v]
        out[k] = v
    return out


def _resolve(p):
    m, n, lam, kmax = p["m"], p["n"], p["lambda"], p["kmax"]
    base = split_hook(lam, m)
    layers = enumerate_w0k(base, kmax)
    rows = []
    for k in range(kmax + 1):
        kept = set(truncate_terms(layers[k], n)) if n != INF else set(layers[k])
        for eta in layers[k]:
            nat = natural(eta)
            alive = eta in kept
            rows.append({
                "k": k,
                "eta": format_weight(eta),
                "eta_natural": format_weight(nat),
                "casimir_s": casimir_s(nat),
                "z_degree": str(z_degree(nat)),
                "dim_l0": dim_l0(nat.with_n(n)) if alive and n != INF else None,
                "truncated": not alive,
            })
    return {"results": rows}


def _verify_euler(p):
    rep = euler_verify(p["lambda"], p["m"], p["n"], p["depth"])
    rows = [{"k": k, "terms": [format_weight(natural(t)) for t in ts]} for k, ts in rep.layers.items()]
    return {
        "params_extra": {"tvars": rep.tvars, "window_doubled_z": rep.window},
        "results": rows,
        "pass": rep.passed,
        "residual": rep.residual.to_records(),
    }


def _verify_incomparable(p):
    rows = []
    if "weights" in p:
        groups = [(None, [w.with_n(INF) for w in p["weights"]])]
    else:
        layers = enumerate_w0k(split_hook(p["lambda"], p["m"]), p["kmax"])
        groups = [(k, layers[k]) for k in range(p["kmax"] + 1)]
    ok = True
    for k, ws in groups:
        gl = pairwise_incomparable(ws)
        nat = [natural(w) for w in ws] if all(w.in_X() for w in ws) else None
        sup = pairwise_incomparable(nat, super=True) if nat is not None else None
        ok = ok and gl and sup is not False
        rows.append({"k": k, "weights": [format_weight(w) for w in ws], "gl": gl, "super": sup})
    return {"results": rows, "pass": ok}


def _hs(p):
    m, n, lam = p["m"], p["n"], p["lambda"]
    tvars = n if n != INF else max(1, lam.size)
    ch = hook_schur(lam, m, tvars)
    return {"params_extra": {"tvars": tvars, "dim": ch.at_one()}, "results": ch.to_records()}


def _casimir(p):
    rows, ok = [], True
    for w in p["weights"]:
        w = w.with_n(INF)
        row = {"weight": format_weight(w), "casimir_c": casimir_c(w), "casimir_s": casimir_s(w),
               "natural": None, "casimir_s_natural": None, "identity": None}
        if w.in_X():
            nat = natural(w)
            row["natural"] = format_weight(nat)
            row["casimir_s_natural"] = casimir_s(nat)
            row["identity"] = casimir_c(w) == casimir_s(nat)
            ok = ok and row["identity"]
        rows.append(row)
    return {"results": rows, "pass": ok}


def _bruhat(p):
    ws = [w.with_n(INF) for w in p["weights"]]
    rows, ok = [], True
    for i, u in enumerate(ws):
        for v in ws[i + 1 :]:
            fast = leq_gl(u, v), leq_gl(v, u)
            slow = leq_gl_closure(u, v), leq_gl_closure(v, u)
            agree = fast == slow
            ok = ok and agree
            sup = (leq_super(u, v), leq_super(v, u)) if u.in_X() and v.in_X() else (None, None)
            rows.append({"u": format_weight(u), "v": format_weight(v),
                         "u_leq_v": fast[0], "v_leq_u": fast[1],
                         "u_sleq_v": sup[0], "v_sleq_u": sup[1], "oracle_agrees": agree})
    return {"results": rows, "pass": ok}


def _replab_kac(p):
    from .replab.kac import build_kac
    from .replab.modules import irreducible_quotient, singular_vectors

    m, n = p["m"], p["n"]
    if "lambda" in p:
        nu = natural(split_hook(p["lambda"], m)).with_n(n)
    else:
        nu = p["weights"][0]
        if len(p["weights"]) != 1:
            raise UsageError("malformed-weight", "replab-kac takes a single weight")
        if not nu.in_Xtilde() or len(nu.pos) > n:
            raise UsageError("malformed-weight", f"{format_weight(nu)} is not a dominant gl({m})+gl({n}) weight")
    M = build_kac(m, n, nu)
    char_ok = M.character() == kac_character(nu, n)
    brackets_ok = not M.check_brackets() and not M.check_weights()
    lines = singular_vectors(M).proper
    iq = irreducible_quotient(M)
    hs_ok = None
    if "lambda" in p:
        hs_ok = iq.quotient.character() == hook_schur(p["lambda"], m, n)
    row = {
        "highest_weight": format_weight(nu),
        "dim": M.dim,
        "proper_singular_lines": [{"weight": format_weight(M.to_super(ln.weight)), "vector": ln.expression}
                                  for ln in lines],
        "quotient_dim": iq.quotient.dim,
        "maximal_dim": iq.maximal_dim,
        "generated_by_singulars": iq.generated_by_singulars,
        "character_matches": char_ok,
        "brackets_consistent": brackets_ok,
        "quotient_matches_hook_schur": hs_ok,
    }
    ok = char_ok and brackets_ok and iq.irreducible and hs_ok is not False
    return {"results": [row], "pass": ok}


def _replab_cohomology(p):
    from .replab.cohomology import cohomology

    m, n, lam, kmax = p["m"], p["n"], p["lambda"], p["kmax"]
    res = cohomology(m, n, lam, kmax)
    layers = enumerate_w0k(split_hook(lam, m), kmax)
    rows, ok = [], res.d_squared_zero and res.consistent
    for k in range(kmax + 1):
        predicted = sorted(format_weight(natural(t)) for t in truncate_terms(layers[k], n))
        found = res.degrees[k]
        got = sorted(format_weight(w) for w, c in found.items() for _ in range(c))
        match = got == predicted
        ok = ok and match
        rows.append({"k": k, "cochain_dim": res.cochain_dims[k], "cohomology_dim": res.cohomology_dims[k],
                     "components": found.to_records(), "predicted": predicted, "match": match})
    return {"params_extra": {"d_squared_zero": res.d_squared_zero, "character_cross_check": res.consistent},
            "results": rows, "pass": ok}


def _replab_verma(p):
    from .replab.verma import verma_gl12_report

    rep = verma_gl12_report(p["depth"])
    row = {
        "depth": rep.depth,
        "window_dim": rep.window_dim,
        "proper_singular_lines": [{"weight": format_weight(SuperWeight(ln.weight[:1], ln.weight[1:])),
                                   "vector": ln.expression} for ln in rep.proper_singular_lines],
        "quotient_dim": rep.quotient_dim,
        "irreducible_dim": rep.irreducible_dim,
        "weights_match_kac": rep.weights_match_kac,
        "isomorphic_to_kac": rep.isomorphic_to_kac,
    }
    ok = rep.isomorphic_to_kac and len(rep.proper_singular_lines) == 2
    return {"results": [row], "pass": ok}


HANDLERS = {
    "resolve": _resolve,
    "verify-euler": _verify_euler,
    "verify-incomparable": _verify_incomparable,
    "hs": _hs,
    "casimir": _casimir,
    "bruhat": _bruhat,
    "replab-kac": _replab_kac,
    "replab-cohomology": _replab_cohomology,
    "replab-verma-gl12": _replab_verma,
}


def execute(cmd: Command) -> tuple[dict, int]:
    """Run a validated command; returns the report and its exit code."""
    out = HANDLERS[cmd.verb](cmd.params)
    params = _echo(cmd.params)
    params.update(out.pop("params_extra", {}))
    report = {"command": cmd.verb, "params": params, "results": out["results"]}
    if "pass" in out:
        report["pass"] = bool(out["pass"])
    if "residual" in out:
        report["residual"] = out["residual"]
    code = EXIT_OK if report.get("pass", True) else EXIT_FAIL
    return report, code


def _cell(v) -> str:
    return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))


def render_table(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for k, v in report["params"].items():
        lines.append(f"{k}: {_cell(v)}")
    rows = report["results"]
    if rows:
        cols = list(rows[0])
        for r in rows[1:]:
            cols += [c for c in r if c not in cols]
        cells = [[_cell(r.get(c)) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for row in cells:
            lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    if "residual" in report:
        lines.append(f"residual: {_cell(report['residual'])}")
    if "pass" in report:
        lines.append("result: " + ("PASS" if report["pass"] else "FAIL"))
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "table":
        return render_table(report)
    return json.dumps(report, indent=2) + "\n"


def main(argv=None) -> int:
    from .replab.modules import ResourceGuardError

    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cmd = parse_command(argv)
    except UsageError as exc:
        print(f"usage error ({exc.kind}): {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report, code = execute(cmd)
    except UsageError as exc:
        print(f"usage error ({exc.kind}): {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"resource guard {exc.guard}: {exc.detail}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"usage error (invalid-input): {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = render(report, cmd.params["format"])
    if cmd.params.get("out"):
        with open(cmd.params["out"], "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_FAIL and "residual" in report:
        print(f"residual: {_cell(report['residual'])}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
