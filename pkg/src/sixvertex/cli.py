"""Command-line front end: ``python -m sixvertex <command> ...``.

Exit codes: 0 everything passed, 1 a verification failed, 2 usage error,
3 internal error.  JSON output carries ``"schema": 1`` and writes every
coefficient as a string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import genfun, maps, modular, tutte
from .errors import CapExceeded, SixVertexError, VerificationFailure

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_MAX_ORDER = 400

SERIES_ALIASES = {
    "t": "t(q)", "R": "R(q)", "q": "q(t)", "Q": "Q(t)",
    "A": "Ahat(q)", "Ahat": "Ahat(q)", "S": "S(q)",
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    gamma: object = None
    gamma_text: str = "symbolic"
    order: int = 10
    output: str = "json"
    case: int | None = None
    extra: dict = field(default_factory=dict)


def max_order() -> int:
    raw = os.environ.get("EO_THETA_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"EO_THETA_MAX_ORDER must be an integer, got {raw!r}") from None


def check_order(order: int, what: str = "order") -> int:
    if order < 2:
        raise UsageError(f"{what} must be at least 2, got {order}")
    cap = max_order()
    if order > cap:
        raise UsageError(f"{what} {order} exceeds EO_THETA_MAX_ORDER = {cap}")
    return order


def _parse_gamma(text: str):
    try:
        return genfun.parse_gamma(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse gamma {text!r}") from None


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _coeff_json(ring, c):
    return ring.to_json(c)


def _series_record(name: str, f, upto: int) -> dict:
    start = min(0, f.valuation)
    return {
        "name": name,
        "var": f.var,
        "ring": f.ring.name,
        "start": start,
        "order": upto,
        "coefficients": [_coeff_json(f.ring, f[n]) for n in range(start, upto)],
    }


def _emit(payload: dict, fmt: str, rows: list[list[str]], text: list[str]) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerows(rows)
        return buf.getvalue()
    return "\n".join(text) + "\n"


def _report_rows(results: list[dict]) -> tuple[list[list[str]], list[str]]:
    rows = [["identity_name", "residual_valuation", "target_order", "pass"]]
    text = []
    for r in results:
        rows.append([r["identity_name"], str(r["residual_valuation"]), str(r["target_order"]), str(r["pass"]).lower()])
        mark = "PASS" if r["pass"] else "FAIL"
        text.append(f"{mark}  {r['identity_name']}  (residual O(q^{r['residual_valuation']}), target {r['target_order']})")
    return rows, text


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_coeffs(cfg: RunConfig) -> tuple[str, int]:
    names = [SERIES_ALIASES.get(s, s) for s in cfg.extra["series"]]
    for n in names:
        if n not in genfun.SERIES_NAMES:
            raise UsageError(f"unknown series {n!r}; choose from {', '.join(genfun.SERIES_NAMES)}")
    # Q and S lose two orders of precision, so compute with headroom
    bundle = genfun.compute_bundle(cfg.gamma, cfg.order + 2)
    records = [_series_record(n, bundle.named(n), cfg.order) for n in names]
    payload = {
        "schema": SCHEMA,
        "command": "coeffs",
        "gamma": cfg.gamma_text,
        "order": cfg.order,
        "series": records,
    }
    rows = [["series", "exponent", "coefficient"]]
    text = []
    for n, rec in zip(names, records):
        f = bundle.named(n)
        for k in range(rec["start"], cfg.order):
            rows.append([n, str(k), str(f[k])])
        text.append(f"{n} = " + " + ".join(f"({f[k]})*{f.var}^{k}" for k in range(rec["start"], cfg.order) if f[k])
                    + f" + O({f.var}^{cfg.order})")
    return _emit(payload, cfg.output, rows, text), EXIT_OK


def _ode_results(gamma, K: int) -> list[dict]:
    b = genfun.compute_bundle(gamma, K)
    out = []
    for name, fn in (("d2t/dR2 - S t = 0", genfun.check_ode_t), ("A'' - T A' - S A = 0", genfun.check_ode_A)):
        res = fn(gamma, K, b)
        target = K - 2
        ok = res.is_zero() and res.order >= target
        out.append({"identity_name": name, "residual_valuation": res.valuation, "target_order": target, "pass": ok})
    return out


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.case is None and not cfg.extra.get("ode"):
        raise UsageError("verify needs --case N and/or --ode")
    results = []
    if cfg.extra.get("ode"):
        results += _ode_results(cfg.gamma, cfg.order)
    if cfg.case is not None:
        if cfg.case not in modular.SUPPORTED_CASES:
            raise UsageError(f"unsupported case N = {cfg.case}; choose from {modular.SUPPORTED_CASES}")
        results += [r.to_json() for r in modular.verify_case(cfg.case, cfg.order)]
    ok = all(r["pass"] for r in results)
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "gamma": cfg.gamma_text if cfg.extra.get("ode") else None,
        "case": cfg.case,
        "order": cfg.order,
        "all_pass": ok,
        "results": results,
    }
    rows, text = _report_rows(results)
    return _emit(payload, cfg.output, rows, text), EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(cfg: RunConfig) -> tuple[str, int]:
    n = cfg.extra["vertices"]
    if n is None:
        raise UsageError("enumerate needs --vertices n")
    res = maps.enumerate_maps(n, cfg.extra["genus"], cfg.extra["allow_slow"])
    payload = {"schema": SCHEMA, "command": "enumerate", **res.to_json()}
    if cfg.gamma is not None:
        payload["gamma"] = cfg.gamma_text
        payload["value"] = str(res.polynomial(cfg.gamma))
    rows = [["n", "genus", "map_count", "polynomial"], [str(n), str(res.genus), str(res.map_count), str(res.polynomial)]]
    text = [f"n={n} genus={res.genus} maps={res.map_count} sum gamma^alt = {res.polynomial}"]
    if "value" in payload:
        text.append(f"at gamma={cfg.gamma_text}: {payload['value']}")
    return _emit(payload, cfg.output, rows, text), EXIT_OK


def cmd_relation(cfg: RunConfig) -> tuple[str, int]:
    if cfg.case not in (5, 6):
        raise UsageError("relation needs --case 5 or --case 6")
    K = cfg.extra.get("order_given") and cfg.order or None
    rel = modular.relation_for_case(cfg.case, K)
    check = modular.certify_relation(rel, modular.CASE_GAMMA[cfg.case], 2 * rel.certified_order)
    certified = check.is_zero()
    payload = {
        "schema": SCHEMA,
        "command": "relation",
        "case": cfg.case,
        "relation": rel.to_json(),
        "recheck_order": check.order,
        "recheck_pass": certified,
    }
    if cfg.case == 5:
        payload["inside_newton_polygon"] = set(rel.support) <= modular.NEWTON_POLYGON_N5
    rows = [["i", "j", "coefficient"]] + [[str(i), str(j), str(c)] for (i, j), c in zip(rel.support, rel.coefficients)]
    text = [f"P(R,S) = {rel}", f"vanishes to O(q^{rel.certified_order}); recheck at O(q^{check.order}): {certified}"]
    return _emit(payload, cfg.output, rows, text), EXIT_OK if certified else EXIT_FAIL


def cmd_oracle(cfg: RunConfig) -> tuple[str, int]:
    tk = cfg.extra.get("tutte_order")
    nv = cfg.extra.get("vertices")
    if tk is None and nv is None:
        raise UsageError("oracle needs --tutte-order K and/or --enum-vertices n")
    results = []
    if tk is not None:
        if tk < 0 or tk > max_order():
            raise UsageError(f"tutte order {tk} out of range")
        cmp_ = tutte.compare_C_Q(tk)
        results.append({
            "check": f"C(t, omega) = 1 + Q(t, gamma) through t^{tk}",
            "pass": cmp_.match,
            "first_mismatch": cmp_.first_mismatch,
        })
    if nv is not None:
        maps._check_cap(nv, cfg.extra["allow_slow"])
        Q = genfun.Q_of_t(None, nv + 3)
        for n in range(1, nv + 1):
            res = maps.enumerate_maps(n, 0, cfg.extra["allow_slow"])
            expected = Q[n]
            results.append({
                "check": f"brute force n={n}",
                "pass": res.polynomial == expected and res.map_count == maps.rooted_quartic_planar_count(n),
                "map_count": res.map_count,
                "brute_force": res.polynomial.to_json(),
                "closed_form": expected.to_json(),
            })
    ok = all(r["pass"] for r in results)
    payload = {"schema": SCHEMA, "command": "oracle", "all_pass": ok, "results": results}
    rows = [["check", "pass"]] + [[r["check"], str(r["pass"]).lower()] for r in results]
    text = [("PASS  " if r["pass"] else "FAIL  ") + r["check"] for r in results]
    return _emit(payload, cfg.output, rows, text), EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "coeffs": cmd_coeffs,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "relation": cmd_relation,
    "oracle": cmd_oracle,
}


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sixvertex", description="Exact series for Eulerian orientations of quartic maps.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, order_default=10):
        sp.add_argument("--gamma", default="symbolic", help="'symbolic', a rational like 2/5, or 'golden-ratio'")
        sp.add_argument("--order", type=int, default=None, help=f"truncation order (default {order_default})")
        sp.add_argument("--output", choices=("json", "csv", "text"), default="json")
        sp.add_argument("--json", dest="output", action="store_const", const="json", help="same as --output json")
        sp.set_defaults(order_default=order_default)

    sp = sub.add_parser("coeffs", help="print series coefficients")
    common(sp)
    sp.add_argument("--series", action="append", default=None, help="series name, repeatable (default Q)")

    sp = sub.add_parser("verify", help="check ODEs and special-value identities")
    common(sp, 30)
    sp.add_argument("--case", type=int, default=None, help="special case N in {3,4,5,6}")
    sp.add_argument("--ode", action="store_true", help="check the two ODEs at --gamma")

    sp = sub.add_parser("enumerate", help="brute-force count of rooted quartic maps with orientations")
    common(sp)
    sp.add_argument("--vertices", "--enum-vertices", dest="vertices", type=int, default=None)
    sp.add_argument("--genus", type=int, default=0)
    sp.add_argument("--allow-slow", action="store_true")

    sp = sub.add_parser("relation", help="discover P(R,S) = 0 by exact linear algebra")
    common(sp)
    sp.add_argument("--case", type=int, default=None)

    sp = sub.add_parser("oracle", help="compare the closed form with the Tutte recursion and brute force")
    common(sp)
    sp.add_argument("--tutte-order", type=int, default=None)
    sp.add_argument("--enum-vertices", dest="vertices", type=int, default=None)
    sp.add_argument("--allow-slow", action="store_true")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    order = ns.order if ns.order is not None else ns.order_default
    check_order(order)
    extra = {k: v for k, v in vars(ns).items() if k not in ("command", "gamma", "order", "output", "case", "order_default")}
    extra["order_given"] = ns.order is not None
    if ns.command == "coeffs":
        extra["series"] = ns.series or ["Q(t)"]
    return RunConfig(
        command=ns.command,
        gamma=_parse_gamma(ns.gamma),
        gamma_text=ns.gamma,
        order=order,
        output=ns.output,
        case=getattr(ns, "case", None),
        extra=extra,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
        out, code = COMMANDS[cfg.command](cfg)
    except (UsageError, CapExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    except SixVertexError as e:
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:  # noqa: BLE001 - anything unexpected is an internal failure
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
