"""Command-line front end: ``bicycl <command> SPEC [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from . import codec as cd
from . import zerosets as zs
from .basis import verify_basis
from .bipoly import eval_at, format_bipoly, format_grid, parse_grid, reduce_omega
from ._kernels import backends
from .errors import BicyclError, InputError, ParamMismatch, SpecParseError
from .gf import format_poly_over_fp, format_uni
from .specfile import CodeSpec, load_spec

SCHEMA_VERSION = "bicycl/1"


class Output:
    """Collects text lines and a JSON payload; prints one of them."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str = ""):
        self.lines.append(text)

    def emit(self, command: str, spec: CodeSpec | None):
        if self.fmt == "json":
            doc = {"schema": SCHEMA_VERSION, "command": command}
            if spec is not None:
                doc["spec"] = spec.name
            doc["result"] = self.data
            print(json.dumps(doc, indent=2, sort_keys=True))
        else:
            print("\n".join(self.lines))


def _pt(tw, pt) -> str:
    return zs.point_text(tw, pt)


def _pt_json(tw, pt) -> list[str]:
    return [tw.fmt(pt[0]), tw.fmt(pt[1])]


def _symbols_text(q: int, values) -> str:
    vals = [int(v) for v in values]
    return "".join(map(str, vals)) if q <= 10 else " ".join(map(str, vals))


def _read_grid(path: str, spec: CodeSpec) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        grid = parse_grid(text, spec.params.M, spec.params.N)
    except (ValueError, ParamMismatch) as exc:
        raise InputError(f"{path}: {exc}") from exc
    if grid.min() < 0 or grid.max() >= spec.tower.q:
        raise InputError(f"{path}: symbols must lie in 0..{spec.tower.q - 1}")
    return grid


# -- commands -----------------------------------------------------------------


def cmd_field_info(spec: CodeSpec, args, out: Output):
    tw, pr = spec.tower, spec.params
    poly = format_poly_over_fp(tw.defining_poly)
    out.line(f"field      F_{tw.q} = F_{tw.p}^{tw.e}, ambient F_{tw.p}^{tw.n} (L = {tw.L})")
    out.line(f"alpha      root of {poly}")
    out.line(f"lambda1    {tw.to_symbol(pr.lambda1)} = {tw.fmt(pr.lambda1)}")
    out.line(f"lambda2    {tw.to_symbol(pr.lambda2)} = {tw.fmt(pr.lambda2)}")
    out.line(f"gamma      {tw.fmt(spec.gamma)}  order {tw.mult_order(spec.gamma)}"
             f"  minimal polynomial {format_uni(tw, tw.minimal_polynomial(spec.gamma), 'x')}")
    out.line(f"beta       {tw.fmt(spec.beta)}  order {tw.mult_order(spec.beta)}"
             f"  minimal polynomial {format_uni(tw, tw.minimal_polynomial(spec.beta), 'y')}")
    out.data = {
        "p": tw.p, "e": tw.e, "q": tw.q, "L": tw.L, "definingPoly": poly,
        "lambda1": tw.to_symbol(pr.lambda1), "lambda2": tw.to_symbol(pr.lambda2),
        "gamma": tw.fmt(spec.gamma), "beta": tw.fmt(spec.beta),
        "gammaOrder": tw.mult_order(spec.gamma), "betaOrder": tw.mult_order(spec.beta),
    }


def _profile_lines(tw, profile, out: Output) -> list[dict]:
    comps = []
    for i, c in enumerate(profile.components, 1):
        out.line(f"component {i}: xi = {tw.fmt(c.xi)}, m = {c.m}, n = {c.n}")
        out.line(f"  g_xi(x) = {format_uni(tw, c.g_xi, 'x')}")
        for j, (eta, deg, mp) in enumerate(zip(c.etas, c.eta_degrees, c.eta_polys), 1):
            out.line(f"  eta_{i},{j} = {tw.fmt(eta)}, n = {deg}, M(y) = {format_uni(tw, mp)}")
        out.line(f"  G(y) = {format_uni(tw, c.G)}")
        comps.append({
            "xi": tw.fmt(c.xi), "m": c.m, "n": c.n, "gXi": format_uni(tw, c.g_xi, "x"),
            "etas": [tw.fmt(e) for e in c.etas], "etaDegrees": list(c.eta_degrees),
            "etaPolys": [format_uni(tw, mp) for mp in c.eta_polys], "G": format_uni(tw, c.G),
        })
    return comps


def cmd_czset(spec: CodeSpec, args, out: Output):
    tw = spec.tower
    v0 = spec.v0()
    code = spec.build()
    out.line(f"V0: {len(v0.points)} points (z1 = {v0.z1}, z2 = {v0.z2})")
    out.line("V0 representatives: " + ", ".join(_pt(tw, p) for p in v0.reps))
    out.line(f"V_c: {len(code.vc)} points")
    for p in code.vc:
        out.line(f"  {_pt(tw, p)}")
    out.line("ECZ: " + (", ".join(_pt(tw, p) for p in code.ecz) or "(empty)"))
    comps = _profile_lines(tw, code.profile, out)
    out.line(f"d = {code.d}, K = {code.K}")
    data = {
        "v0Size": len(v0.points), "z1": v0.z1, "z2": v0.z2,
        "v0Reps": [_pt_json(tw, p) for p in v0.reps],
        "vc": [_pt_json(tw, p) for p in code.vc],
        "ecz": [_pt_json(tw, p) for p in code.ecz],
        "components": comps, "d": code.d, "K": code.K,
    }
    if spec.generators is not None:
        gens = [reduce_omega(spec.params, g) for g in spec.generator_polys()]
        inside = set(v0.points)
        outside = [p for p in zs.full_variety(spec.params)
                   if p not in inside and all(eval_at(tw, g, p.a, p.b) == 0 for g in gens)]
        if outside:
            out.line(f"note: generators also vanish at {len(outside)} points outside V0")
        data["zerosOutsideV0"] = [_pt_json(tw, p) for p in outside]
    out.data = data


def cmd_basis(spec: CodeSpec, args, out: Output):
    tw = spec.tower
    code = spec.build()
    prune = spec.prune_basis and not args.no_prune
    b = code.basis(prune=prune)
    for lab, g in zip(b.labels, b.polys):
        out.line(f"{lab} = {format_bipoly(tw, g)}")
    if b.pruned:
        out.line("pruned: " + ", ".join(b.pruned))
    rep = verify_basis(spec.params, b.polys, code.vc, spec.v0().reps, code.ecz, b.labels)
    out.line(f"ideal dimension {rep.dimension} = MN - |V_c| = {rep.expected}")
    out.data = {
        "basis": {lab: format_bipoly(tw, g) for lab, g in zip(b.labels, b.polys)},
        "order": list(b.labels), "pruned": list(b.pruned),
        "dimension": rep.dimension, "expected": rep.expected,
    }


def _h_label(k: int, l: int, M: int, N: int) -> str:
    return f"h_{{{k}{l}}}" if M <= 10 and N <= 10 else f"h_{{{k},{l}}}"


def cmd_check_tensor(spec: CodeSpec, args, out: Output):
    code = spec.build()
    ct = code.check
    M, N = spec.params.shape
    q = spec.tower.q
    pi = " ".join(f"({k},{l})" for k, l in ct.pi)
    out.line(f"# d={ct.d} strategy={ct.strategy} Pi={pi}")
    rows = {}
    for k in range(M):
        for l in range(N):
            s = _symbols_text(q, ct.H[k, l])
            out.line(f"{_h_label(k, l, M, N)}={s}")
            rows[f"{k},{l}"] = [int(v) for v in ct.H[k, l]]
    out.data = {"d": ct.d, "strategy": ct.strategy, "pi": [list(p) for p in ct.pi], "h": rows}


def cmd_gen_tensor(spec: CodeSpec, args, out: Output):
    code = spec.build()
    tw = spec.tower
    M, N = spec.params.shape
    gen = code.gen
    polys = {}
    for i in range(M):
        out.line(f"# row {i}")
        for j in range(N):
            s = format_bipoly(tw, tw.from_symbol(gen.g_poly(i, j)))
            out.line(f"g_{{{i},{j}}} = {s}")
            polys[f"{i},{j}"] = s
    out.data = {"pi": [list(p) for p in gen.pi], "g": polys}


def cmd_encode(spec: CodeSpec, args, out: Output):
    code = spec.build()
    if args.message is None:
        msg = np.zeros(spec.params.shape, dtype=np.int64)
    else:
        msg = _read_grid(args.message, spec)
    c = cd.encode(code, msg)
    text = format_grid(c)
    if args.output:
        Path(args.output).write_text(text + "\n")
    out.line(text)
    out.data = {"codeword": c.tolist(),
                "parity": {f"{k},{l}": int(c[k, l]) for k, l in code.check.pi}}


def cmd_verify(spec: CodeSpec, args, out: Output) -> int:
    code = spec.build()
    c = _read_grid(args.codeword, spec)
    syn = cd.syndrome(code, c)
    ok = cd.is_codeword(code, c, verify=not args.fast)
    out.line("codeword" if ok else "not a codeword")
    out.line("syndrome " + (_symbols_text(spec.tower.q, syn) or "(empty)"))
    out.data = {"codeword": ok, "syndrome": [int(v) for v in syn],
                "checked": "syndrome" if args.fast else "syndrome+vanishing"}
    return 0 if ok else 1


def cmd_params(spec: CodeSpec, args, out: Output) -> int:
    code = spec.build()
    cap = args.cap if args.cap is not None else spec.dmin_cap
    if args.backend and args.backend not in backends():
        raise InputError(f"backend {args.backend!r} is not available")
    res = cd.parameters(code, cap=cap, backend=args.backend)
    out.line(str(res))
    if res.note:
        out.line(f"# d_min {res.note}")
    out.data = {"n": res.n, "k": res.k, "d": res.d}
    if res.note:
        out.data["note"] = res.note
    return 0


def cmd_dual(spec: CodeSpec, args, out: Output):
    tw = spec.tower
    code = spec.build()
    dual = cd.dual_code(code)
    dp = dual.params
    out.line(f"dual ring: lambda1 = {tw.to_symbol(dp.lambda1)}, lambda2 = {tw.to_symbol(dp.lambda2)}")
    out.line(f"dual CZ set: {len(dual.vc)} points")
    out.line("dual ECZ: " + (", ".join(_pt(tw, p) for p in dual.ecz) or "(empty)"))
    out.line(f"K = {code.K}, K_dual = {dual.K}, sum = {code.K + dual.K}")
    data = {
        "lambda1": tw.to_symbol(dp.lambda1), "lambda2": tw.to_symbol(dp.lambda2),
        "vcSize": len(dual.vc), "ecz": [_pt_json(tw, p) for p in dual.ecz],
        "K": code.K, "dualK": dual.K, "strategy": dual.check.strategy,
    }
    try:
        rep = cd.check_duality(code, dual, cap=args.cap)
        out.line(f"orthogonality: {rep.checked} products, {rep.violations} nonzero")
        data["orthogonality"] = {"checked": rep.checked, "violations": rep.violations}
    except BicyclError as exc:
        out.line(f"orthogonality: skipped ({exc})")
        data["orthogonality"] = None
    out.data = data


COMMANDS = {
    "field-info": (cmd_field_info, "field, lambdas and the chosen roots"),
    "czset": (cmd_czset, "orbit set, CZ and ECZ sets, ECZ profile"),
    "basis": (cmd_basis, "ideal basis of the code"),
    "check-tensor": (cmd_check_tensor, "check tensor h_{kl} and check positions"),
    "gen-tensor": (cmd_gen_tensor, "generator tensor g_{i,j}"),
    "encode": (cmd_encode, "systematic encoding of a message file"),
    "verify": (cmd_verify, "membership test of a codeword file"),
    "params": (cmd_params, "code parameters [MN, K, d_min]"),
    "dual": (cmd_dual, "dual code and orthogonality check"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format (default text)")
    parser = argparse.ArgumentParser(
        prog="bicycl", parents=[common],
        description="Two-dimensional constacyclic codes over finite fields.")
    parser.add_argument("--version", action="version", version=f"bicycl {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.add_argument("spec", help="code-spec JSON file or bundled fixture name")
        if name == "basis":
            p.add_argument("--no-prune", action="store_true", help="keep redundant members")
        elif name == "encode":
            p.add_argument("--message", help="M lines of N symbols (default: zero message)")
            p.add_argument("--output", "-o", help="also write the codeword here")
        elif name == "verify":
            p.add_argument("codeword", help="M lines of N symbols")
            p.add_argument("--fast", action="store_true", help="syndrome test only")
        elif name == "params":
            p.add_argument("--cap", type=int, help="enumeration cap for d_min")
            p.add_argument("--backend", choices=("cython", "python"), help="d_min kernel")
        elif name == "dual":
            p.add_argument("--cap", type=int, default=cd.ORACLE_CAP,
                           help="enumeration cap for the orthogonality check")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    out = Output(fmt)
    spec = None
    try:
        spec = load_spec(args.spec)
        fn = COMMANDS[args.command][0]
        code = fn(spec, args, out) or 0
    except BicyclError as exc:
        where = spec.name if spec is not None else args.spec
        if isinstance(exc, SpecParseError):
            msg = str(exc)
        else:
            msg = f"{where}: {type(exc).__name__}: {exc}"
        print(f"bicycl {args.command}: error: {msg}", file=sys.stderr)
        if fmt == "json":
            print(json.dumps({"schema": SCHEMA_VERSION, "command": args.command,
                              "error": {"type": type(exc).__name__, "message": msg,
                                        "exitCode": exc.exit_code}}, indent=2, sort_keys=True))
        return exc.exit_code
    out.emit(args.command, spec)
    return code


if __name__ == "__main__":
    sys.exit(main())
