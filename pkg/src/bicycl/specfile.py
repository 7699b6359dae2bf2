"""JSON code-spec files.

::

    {"field":  {"p": 3, "e": 1, "preset": "F81-a"},
     "params": {"M": 10, "N": 8, "lambda1": 2, "lambda2": 2},
     "roots":  {"gamma": 4, "beta": 5},
     "ecz":    [[4, 5], [4, 15], [4, 55]],
     "options": {"piStrategy": "staircase", "pruneBasis": true}}

``field`` takes ``definingPoly`` (text or ascending list) or ``preset``;
with neither, the first primitive polynomial of degree e*L is used, and a
missing ``L`` is the splitting degree. Exponents in ``roots`` and ``ecz``
are powers of alpha. ``generators`` (polynomial strings) may replace ``ecz``.
Bundled fixtures can be named instead of a path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import zerosets as zs
from .bipoly import CodeParams, parse_bipoly
from .codec import DEFAULT_DMIN_CAP, CodeHandle, build_code, code_from_generators
from .errors import BicyclError, SpecParseError
from .gf import PRESETS, FieldTower, parse_poly_over_fp, primitive_root_of, splitting_degree
from .tensors import STRATEGIES

_TOP_KEYS = {"name", "description", "field", "params", "roots", "ecz", "generators", "options"}
_OPTION_KEYS = {"piStrategy", "pruneBasis", "dminCap", "variety"}


@dataclass
class CodeSpec:
    name: str
    tower: FieldTower
    params: CodeParams
    gamma: int
    beta: int
    ecz: list[tuple[int, int]] | None = None
    generators: list[str] | None = None
    pi_strategy: str = "staircase"
    prune_basis: bool = True
    dmin_cap: int = DEFAULT_DMIN_CAP
    variety: str = "orbit"
    source: str = ""
    raw: dict = field(default_factory=dict, repr=False)

    def v0(self) -> zs.OrbitSet:
        return zs.build_v0(self.params, self.gamma, self.beta)

    def generator_polys(self):
        return [parse_bipoly(self.tower, g) for g in self.generators or []]

    def build(self) -> CodeHandle:
        v0 = self.v0()
        if self.generators is not None:
            return code_from_generators(self.params, self.generator_polys(), v0,
                                        self.pi_strategy, self.variety)
        tw = self.tower
        ecz = [(tw.exp(a), tw.exp(b)) for a, b in self.ecz]
        if self.variety == "orbit":
            return build_code(self.params, ecz, self.pi_strategy, v0=v0)
        code = build_code(self.params, ecz, self.pi_strategy)
        code.v0, code.gamma, code.beta = v0, v0.gamma, v0.beta
        return code


def fixture_names() -> list[str]:
    root = resources.files("bicycl") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def resolve(path: str) -> Path:
    """A file path, or the name of a bundled fixture (with or without
    directory and ``.json`` suffix) when no such file exists."""
    p = Path(path)
    if p.is_file():
        return p
    stem = p.name[:-5] if p.name.endswith(".json") else p.name
    cand = resources.files("bicycl") / "fixtures" / f"{stem}.json"
    if cand.is_file():
        return Path(str(cand))
    raise SpecParseError(f"{path}: no such file or bundled fixture")


def _fail(src: str, msg: str):
    raise SpecParseError(f"{src}: {msg}")


def _int(src, obj, key, where, required=True, default=None):
    if key not in obj:
        if required:
            _fail(src, f"{where}.{key} is required")
        return default
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        _fail(src, f"{where}.{key} must be an integer")
    return v


def _element(src, tw: FieldTower, v, where):
    try:
        return tw.parse_element(v)
    except (ValueError, BicyclError) as exc:
        _fail(src, f"{where}: {exc}")


def _base_log(tw: FieldTower, v) -> int:
    """Discrete log of a base-field element in F_q^* (any generator w)."""
    step = (tw.size - 1) // (tw.q - 1)
    return tw.log(v) // step


def _tower(src, f: dict, params: dict) -> FieldTower:
    if not isinstance(f, dict):
        _fail(src, "field must be an object")
    preset = f.get("preset")
    poly = f.get("definingPoly")
    if preset is not None and poly is not None:
        _fail(src, "field: give either preset or definingPoly, not both")
    e = _int(src, f, "e", "field", required=False, default=1)
    if preset is not None:
        if preset not in PRESETS:
            _fail(src, f"unknown preset {preset!r}; known: {', '.join(sorted(PRESETS))}")
        p, pl = PRESETS[preset]
        if "p" in f and f["p"] != p:
            _fail(src, f"field.p={f['p']} does not match preset {preset} (p={p})")
        n = len(pl) - 1
        if n % e:
            _fail(src, f"preset {preset} has degree {n}, not a multiple of e={e}")
        if "L" in f and f["L"] * e != n:
            _fail(src, f"field.L={f['L']} does not match preset degree {n}")
        return FieldTower(p, e, n // e, pl)
    p = _int(src, f, "p", "field")
    if poly is not None:
        coeffs = parse_poly_over_fp(poly) if isinstance(poly, str) else [int(c) for c in poly]
        n = len(coeffs) - 1
        if n % e:
            _fail(src, f"definingPoly degree {n} is not a multiple of e={e}")
        return FieldTower(p, e, n // e, coeffs)
    L = _int(src, f, "L", "field", required=False)
    if L is None:
        # lambdas here must be plain F_q symbols: alpha is not yet defined
        q = p**e
        lam = []
        for key in ("lambda1", "lambda2"):
            v = params.get(key)
            if not isinstance(v, int) or isinstance(v, bool):
                _fail(src, f"params.{key} must be an integer symbol when field.L is omitted")
            lam.append(v)
        if 0 in lam:
            _fail(src, "lambda must be nonzero")
        small = FieldTower.default(p, e, 1)
        logs = [_base_log(small, small.from_symbol(v)) for v in lam]
        L = splitting_degree(q, params["M"], logs[0], params["N"], logs[1])
    return FieldTower.default(p, e, L)


def parse_spec(obj: dict, source: str = "<spec>") -> CodeSpec:
    src = source
    if not isinstance(obj, dict):
        _fail(src, "top level must be a JSON object")
    unknown = set(obj) - _TOP_KEYS
    if unknown:
        _fail(src, f"unknown keys: {', '.join(sorted(unknown))}")
    for key in ("field", "params"):
        if key not in obj:
            _fail(src, f"missing {key!r}")
    pr = obj["params"]
    if not isinstance(pr, dict):
        _fail(src, "params must be an object")
    M = _int(src, pr, "M", "params")
    N = _int(src, pr, "N", "params")
    try:
        tw = _tower(src, obj["field"], pr)
    except ValueError as exc:
        raise SpecParseError(f"{src}: field: {exc}") from exc
    l1 = _element(src, tw, pr.get("lambda1", 1), "params.lambda1")
    l2 = _element(src, tw, pr.get("lambda2", 1), "params.lambda2")
    try:
        params = CodeParams(tw, M, N, l1, l2)
    except ValueError as exc:
        _fail(src, f"params: {exc}")
    roots = obj.get("roots") or {}
    if not isinstance(roots, dict):
        _fail(src, "roots must be an object")
    gamma = (tw.exp(_int(src, roots, "gamma", "roots")) if "gamma" in roots
             else primitive_root_of(tw, l1, M))
    beta = (tw.exp(_int(src, roots, "beta", "roots")) if "beta" in roots
            else primitive_root_of(tw, l2, N))
    has_ecz, has_gen = "ecz" in obj, "generators" in obj
    if has_ecz == has_gen:
        _fail(src, "exactly one of 'ecz' or 'generators' is required")
    ecz = gens = None
    if has_ecz:
        ecz = obj["ecz"]
        if not isinstance(ecz, list) or not all(
                isinstance(pt, list) and len(pt) == 2 and all(isinstance(v, int) for v in pt)
                for pt in ecz):
            _fail(src, "ecz must be a list of [expA, expB] integer pairs")
        ecz = [tuple(pt) for pt in ecz]
    else:
        gens = obj["generators"]
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            _fail(src, "generators must be a list of polynomial strings")
        for g in gens:
            try:
                parse_bipoly(tw, g)
            except (ValueError, BicyclError) as exc:
                _fail(src, f"generator {g!r}: {exc}")
    opts = obj.get("options") or {}
    if not isinstance(opts, dict):
        _fail(src, "options must be an object")
    unknown = set(opts) - _OPTION_KEYS
    if unknown:
        _fail(src, f"unknown options: {', '.join(sorted(unknown))}")
    strategy = opts.get("piStrategy", "staircase")
    if strategy not in STRATEGIES:
        _fail(src, f"piStrategy must be one of {', '.join(STRATEGIES)}")
    variety = opts.get("variety", "orbit")
    if variety not in ("orbit", "full"):
        _fail(src, "variety must be 'orbit' or 'full'")
    cap = opts.get("dminCap", DEFAULT_DMIN_CAP)
    if not isinstance(cap, int) or isinstance(cap, bool) or cap < 0:
        _fail(src, "dminCap must be a non-negative integer")
    prune = opts.get("pruneBasis", True)
    if not isinstance(prune, bool):
        _fail(src, "pruneBasis must be true or false")
    name = obj.get("name") or Path(source).stem
    return CodeSpec(name, tw, params, gamma, beta, ecz, gens, strategy, prune, cap,
                    variety, source, obj)


def load_spec(path: str) -> CodeSpec:
    p = resolve(path)
    try:
        obj = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return parse_spec(obj, str(path))

