"""Command-line front end.

Every verb prints JSON on stdout by default (``--format table`` gives a
plain rendering).  Exit codes: 0 success, 1 failed verification, 2 usage
or input error.  Errors are reported as a JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .exactnum import ExactMatrix, parse_matrix
from .jclass import (
    JordanClassDatum,
    LeviShape,
    PointPattern,
    class_poset,
    closure_contains,
    dim_class,
    dim_orbit,
    enumerate_classes,
    induce,
    is_closure_normal_gl,
    local_data,
    make_partition,
    parse_slots,
    regular_closure_contains,
    sheets,
)
from .loglike import (
    LogLikeMap,
    apply,
    batch_jordan_compat,
    batch_stratification,
    check_induction_compat,
    etale_certificate,
    minimal_levi_probe,
    probe_grid,
    sl2_char2_report,
    sp4_isolated_report,
)
from .loglike.sp4 import c2, lambda_subsystem, torus_from_angles
from .rootcore import (
    Subsystem,
    TorusElement,
    centralizer_subsystem,
    classify_prime,
    parse_type,
    pseudo_levis,
    rational_closure,
)

SCHEMA_VERSION = "v1"


class UsageError(Exception):
    pass


class Failed(Exception):
    """A verification ran and reported failures; carries the payload to print."""

    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage().strip()}")


def default_golden_dir() -> Path:
    return Path(str(resources.files("jordanclass") / "golden" / SCHEMA_VERSION))


# -- argument helpers --------------------------------------------------------


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _fractions(text: str) -> list[Fraction]:
    return [Fraction(x.strip()) for x in text.split(",") if x.strip()]


def _root_system(args):
    label = args.type if args.rank is None else f"{args.type}{args.rank}"
    return parse_type(label)


def _read_matrix(path: str) -> ExactMatrix:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_matrix(text)


def _datum(text: str, mode: str, cls=JordanClassDatum):
    text = text.strip()
    if text.startswith("{"):
        return cls.from_json(text)
    return parse_slots(text, mode, cls)


def _subsystem_from_args(args, rs):
    if args.roots is not None and args.theta is not None:
        raise UsageError("give either --roots or --theta, not both")
    if args.roots is not None:
        return Subsystem(rs, tuple(_ints(args.roots)))
    if args.theta is not None:
        s = TorusElement(args.torus_mode, tuple(_fractions(args.theta)), args.p or 0, args.basis)
        return centralizer_subsystem(rs, s)
    raise UsageError("give --roots i,j,... or --theta t1,t2,...")


# -- verbs -------------------------------------------------------------------


def cmd_primes(args):
    if args.p is None:
        raise UsageError("primes needs --p")
    return classify_prime(_root_system(args), args.p, args.fundamental_group).to_json()


def cmd_subsystem(args):
    rs = _root_system(args)
    ss = _subsystem_from_args(args, rs)
    out = ss.to_json()
    out["closed"] = ss.is_closed()
    out["roots"] = [list(v) for v in ss.vectors()]
    return out


def cmd_rational_closure(args):
    rs = _root_system(args)
    ss = _subsystem_from_args(args, rs)
    cl = rational_closure(ss)
    return {"subsystem": ss.to_json(), "closure": cl.to_json()}


def cmd_pseudo_levi(args):
    rs = _root_system(args)
    return [pl.to_json() for pl in pseudo_levis(rs, args.p or 0, args.all_conjugates)]


def cmd_classes(args):
    _need_n(args)
    return [c.to_json() for c in enumerate_classes(args.n, args.mode)]


def cmd_dim(args):
    j = _datum(args.datum, args.mode)
    return {"class": j.to_json(), "dim_class": dim_class(j), "dim_orbit": dim_orbit(j)}


def cmd_induce(args):
    if args.ambient != "gl":
        raise UsageError("induction is available for gl only")
    blocks = _ints(args.blocks)
    parts = tuple(make_partition(_ints(chunk)) for chunk in args.parts.split(";"))
    return ",".join(str(k) for k in induce(LeviShape(tuple(blocks), parts)))


def cmd_closure(args):
    j = _datum(args.datum, args.mode)
    p = _datum(args.pattern, args.mode, PointPattern)
    return {"class": j.to_json(), "pattern": p.to_json(), "contains": closure_contains(j, p)}


def cmd_reg_closure(args):
    j = _datum(args.datum, args.mode)
    p = _datum(args.pattern, args.mode, PointPattern)
    return {"class": j.to_json(), "pattern": p.to_json(), "contains": regular_closure_contains(j, p)}


def _check_golden(args, name: str, payload):
    path = Path(args.golden_dir or default_golden_dir()) / name
    if not path.exists():
        raise UsageError(f"no golden file {path}")
    expected = json.loads(path.read_text())
    if expected != json.loads(json.dumps(payload)):
        raise Failed({"golden": str(path), "matches": False, "computed": payload})
    return payload


def cmd_poset(args):
    _need_n(args)
    P = class_poset(args.n, args.mode)
    out = P.to_json()
    out["antisymmetric"] = P.is_antisymmetric()
    if args.check_golden:
        _check_golden(args, f"poset_{args.mode}_n{args.n}.json", out)
    return out


def cmd_sheets(args):
    _need_n(args)
    return [s.to_json() for s in sheets(args.n, args.mode)]


def cmd_local_data(args):
    j = _datum(args.datum, args.mode)
    p = _datum(args.pattern, args.mode, PointPattern)
    fams = local_data(j, p)
    out = {"class": j.to_json(), "pattern": p.to_json(), "count": len(fams), "families": [f.to_json() for f in fams]}
    if args.check_golden:
        golden = json.loads((Path(args.golden_dir or default_golden_dir()) / "local_data.json").read_text())
        key = f"{j} @ {p}"
        if key not in golden:
            raise UsageError(f"no golden local-data entry for {key}")
        if golden[key] != len(fams):
            raise Failed({"golden_count": golden[key], **out})
    return out


def cmd_normal_gl(args):
    j = _datum(args.datum, "group")
    return {"class": j.to_json(), "normal": is_closure_normal_gl(j)}


def _matrix_out(m: ExactMatrix):
    return {"n": m.n, "p": m.field.p, "rows": [[str(x) for x in r] for r in m.rows]}


def cmd_loglike_apply(args):
    g = _read_matrix(args.matrix)
    lam = LogLikeMap(args.map, g.n, g.field.p)
    return _matrix_out(apply(lam, g))


def cmd_etale(args):
    x = _read_matrix(args.matrix)
    return etale_certificate(x.n, x.field.p, x).to_json()


def _induction_report(n: int, p: int):
    from .jclass import partitions
    from .oracles import compositions

    lam = LogLikeMap("gl", n, p)
    checked, bad = 0, []
    for comp in compositions(n):
        stack = [()]
        for d in comp:
            stack = [t + (mu,) for t in stack for mu in partitions(d)]
        for parts in stack:
            checked += 1
            if not check_induction_compat(lam, LeviShape(comp, parts)):
                bad.append({"blocks": list(comp), "parts": [list(mu) for mu in parts]})
    return {
        "claim": "inducing unipotent data commutes with the log-like map",
        "paper_ref": "log-like maps are compatible with induction",
        "samples": checked,
        "failures": len(bad),
        "witnesses": bad[:5],
    }


VERIFY_CLAIMS = ("lem-ss", "strat", "induction", "sp4", "sl2-char2")


def cmd_verify(args):
    claim = args.claim
    if claim in ("lem-ss", "strat"):
        _need_n(args)
        lam = LogLikeMap(args.map, args.n, args.p or 0)
        fn = batch_jordan_compat if claim == "lem-ss" else batch_stratification
        out = fn(lam, args.samples, args.seed).to_json()
    elif claim == "induction":
        _need_n(args)
        out = _induction_report(args.n, args.p or 0)
    elif claim == "sp4":
        r = sp4_isolated_report(args.p or 7)
        out = {"claim": "isolated class of Sp_4", "paper_ref": "symplectic example", "samples": 1, "failures": int(not r.ok), "witnesses": [] if r.ok else [r.to_json()]}
    else:
        r = sl2_char2_report()
        out = {"claim": "no log-like map for SL_2 in characteristic 2", "paper_ref": "characteristic 2 counterexample", "samples": r.elements, "failures": int(not r.ok), "witnesses": [] if r.ok else [r.to_json()]}
    if out["failures"]:
        raise Failed(out)
    return out


def cmd_sp4_report(args):
    r = sp4_isolated_report(args.p or 7)
    if not r.ok:
        raise Failed(r.to_json())
    return r.to_json()


def cmd_sl2_char2(args):
    r = sl2_char2_report()
    if not r.ok:
        raise Failed(r.to_json())
    return r.to_json()


def cmd_minimal_levi(args):
    if args.theta is not None:
        p = args.p or 7
        theta = _fractions(args.theta)
        img = lambda_subsystem(apply(LogLikeMap("sp4", 4, p), torus_from_angles(p, theta)))
        s = TorusElement.multiplicative(theta, p, basis="epsilon")
        return {"p": p, "theta": [str(t) for t in theta], **minimal_levi_probe(c2(), s, img).to_json()}
    ps = tuple(_ints(args.primes)) if args.primes else ((args.p,) if args.p else (3, 5, 7))
    return probe_grid(ps, args.max_den).to_json()


def cmd_accept(args):
    from .acceptance import CRITERIA, run_all

    only = _ints(args.only) if args.only else None
    if only and any(not 1 <= i <= len(CRITERIA) for i in only):
        raise UsageError(f"criteria are numbered 1..{len(CRITERIA)}")
    echo = print if args.format == "table" else None
    results = run_all(seed=args.seed, only=only, echo=echo)
    payload = [r.to_json() for r in results]
    if args.format == "table":
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} criteria passed")
        payload = None
    if not all(r.passed for r in results):
        raise Failed(payload)
    return payload


def _need_n(args):
    if args.n is None:
        raise UsageError("this verb needs --n")


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--p", type=int, default=None, help="characteristic (0 for the rationals)")
    common.add_argument("--n", type=int, default=None, help="matrix size")
    common.add_argument("--seed", type=int, default=7)
    common.add_argument("--samples", type=int, default=200)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--golden-dir", default=None)

    parser = _Parser(prog="jordanclass", description="Jordan classes, sheets and log-like maps over exact fields.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(fn=fn)
        return sp

    def rs_args(sp):
        sp.add_argument("type", help="root system label such as E8, B3 or A1+G2, or a bare letter")
        sp.add_argument("rank", nargs="?", type=int, default=None)

    def ss_args(sp):
        sp.add_argument("--roots", help="comma-separated root indices")
        sp.add_argument("--theta", help="torus coordinates such as 0,1/2")
        sp.add_argument("--basis", choices=("simple", "epsilon"), default="simple")
        sp.add_argument("--torus-mode", choices=("multiplicative", "additive"), default="multiplicative")

    def mode_arg(sp, default="liealg"):
        sp.add_argument("--mode", choices=("group", "liealg"), default=default)

    sp = verb("primes", cmd_primes, "classify a prime for a root system")
    rs_args(sp)
    sp.add_argument("--fundamental-group", type=int, default=None)

    sp = verb("subsystem", cmd_subsystem, "describe a subsystem given by roots or a torus element")
    rs_args(sp)
    ss_args(sp)

    sp = verb("rational-closure", cmd_rational_closure, "smallest Levi subsystem containing a subsystem")
    rs_args(sp)
    ss_args(sp)

    sp = verb("pseudo-levi", cmd_pseudo_levi, "pseudo-Levi subsystems realizable in characteristic p")
    rs_args(sp)
    sp.add_argument("--all-conjugates", action="store_true")

    sp = verb("classes", cmd_classes, "enumerate class data of size n")
    mode_arg(sp)

    for name, fn, help in (
        ("dim", cmd_dim, "dimension of a class and of its generic orbit"),
        ("normal-gl", cmd_normal_gl, "normality of the closure of a GL_n class"),
    ):
        sp = verb(name, fn, help)
        sp.add_argument("datum", help='slots like "2:1,1;1:1" or a JSON class datum')
        mode_arg(sp)

    sp = verb("induce", cmd_induce, "induced nilpotent orbit from a Levi")
    sp.add_argument("ambient", choices=("gl",))
    sp.add_argument("--blocks", required=True, help="block sizes, e.g. 2,1")
    sp.add_argument("--parts", required=True, help='partitions per block, e.g. "1,1;1"')

    for name, fn, help in (
        ("closure", cmd_closure, "is a pattern in the closure of a class"),
        ("reg-closure", cmd_reg_closure, "is a pattern in the regular closure of a class"),
        ("local-data", cmd_local_data, "local branches of a class closure at a pattern"),
    ):
        sp = verb(name, fn, help)
        sp.add_argument("datum")
        sp.add_argument("pattern")
        mode_arg(sp)
        if name == "local-data":
            sp.add_argument("--check-golden", action="store_true")

    sp = verb("poset", cmd_poset, "closure and regular-closure orders on classes")
    mode_arg(sp)
    sp.add_argument("--check-golden", action="store_true")

    sp = verb("sheets", cmd_sheets, "maximal classes for the regular-closure order")
    mode_arg(sp)

    sp = verb("loglike-apply", cmd_loglike_apply, "apply a log-like map to a matrix file")
    sp.add_argument("map", choices=("gl", "sl", "sp4", "GLShift", "SLTraceShift", "Sp4Cayley"))
    sp.add_argument("matrix", help="matrix file ('-' for stdin)")

    sp = verb("etale", cmd_etale, "étale certificate of the trace shift at a trace-zero matrix")
    sp.add_argument("matrix", help="matrix file ('-' for stdin)")

    sp = verb("verify", cmd_verify, "run a sampled verification")
    sp.add_argument("claim", choices=VERIFY_CLAIMS)
    sp.add_argument("--map", default="gl", choices=("gl", "sl"))

    verb("sp4-report", cmd_sp4_report, "report on the isolated involution of Sp_4")
    verb("sl2-char2", cmd_sl2_char2, "exhaustive sl_2 facts over F_4")

    sp = verb("minimal-levi", cmd_minimal_levi, "compare lambda-images with minimal Levi subsystems in Sp_4")
    sp.add_argument("--theta", help="single torus angle pair, e.g. 1/6,1/3")
    sp.add_argument("--primes", help="comma-separated primes for the grid")
    sp.add_argument("--max-den", type=int, default=12)

    sp = verb("accept", cmd_accept, "run the acceptance suite")
    sp.add_argument("--only", help="comma-separated criterion numbers")
    return parser


def _render_table(payload) -> str:
    if isinstance(payload, str):
        return payload
    if isinstance(payload, dict) and {"n", "p", "rows"} <= payload.keys():
        return format_matrix_from_json(payload).rstrip("\n")
    if isinstance(payload, list):
        return "\n".join(_render_table(x) if isinstance(x, (dict, list)) else str(x) for x in payload)
    if isinstance(payload, dict):
        width = max((len(k) for k in payload), default=0)
        return "\n".join(f"{k:<{width}}  {json.dumps(v, ensure_ascii=False)}" for k, v in payload.items())
    return str(payload)


def format_matrix_from_json(obj) -> str:
    lines = [f"{obj['n']} {obj['p']}"] + [" ".join(r) for r in obj["rows"]]
    return "\n".join(lines) + "\n"


def _emit(payload, fmt: str, stream):
    if payload is None:
        return
    if fmt == "table":
        print(_render_table(payload), file=stream)
    else:
        print(json.dumps(payload, ensure_ascii=False, sort_keys=False), file=stream)


def _error(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": kind, "message": message, "exit_code": code}), file=sys.stderr)
    return code


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as e:
        return _error("usage", str(e), 2)
    fmt = getattr(args, "format", "json")
    try:
        payload = args.fn(args)
    except UsageError as e:
        return _error("usage", str(e), 2)
    except Failed as f:
        _emit(f.payload, fmt, sys.stdout)
        return _error("verification_failed", "one or more checks failed", 1)
    except (ValueError, KeyError, OSError, ZeroDivisionError) as e:
        return _error(type(e).__name__, str(e), 2)
    _emit(payload, fmt, sys.stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
