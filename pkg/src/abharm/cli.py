"""Command-line interface.

Every command writes one JSON document (to stdout or ``--out``).  Failures
write nothing to stdout; an error object ``{"error": {code, message, path}}``
goes to stderr and the exit status is 1 for invalid input and 2 for I/O
failures.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from . import io as aio
from .dual import classify_character, dual_group
from .errors import AbharmError, SchemaError, ShapeMismatch
from .functions import GroupFunction, SpectrumFunction
from .group import GroupSpec, unrank
from .haar import HaarWeight, check_invariance, integrate, uniqueness_oracle
from .profinite import (
    CylinderFunction,
    SequenceGroupSpec,
    haar_integrate_cylinder,
    refine,
    transform_cylinder,
)
from .transform import (
    convolve,
    fourier,
    fourier_laplace_integers,
    inverse_fourier,
    translate,
)

COMMANDS = (
    "transform", "itransform", "convolve", "translate", "laplace", "characters",
    "haar-check", "haar-unique", "cantor-transform", "cantor-integrate", "cantor-refine",
)


@dataclass
class RunConfig:
    command: str
    haar_mode: str = "normalized"
    inputs: dict[str, str] = field(default_factory=dict)
    output: str | None = None
    precision: int = 12
    options: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise SchemaError(f"unknown command {self.command!r}")
        if self.haar_mode not in ("normalized", "counting"):
            raise SchemaError(f"unknown haar mode {self.haar_mode!r}")
        if not 6 <= self.precision <= 17:
            raise SchemaError(f"precision must be in [6, 17], got {self.precision}")


class _Inputs:
    """Loads named inputs, tagging any error with the offending path."""

    def __init__(self, config: RunConfig):
        self.config = config

    def json(self, name: str):
        source = self.config.inputs.get(name)
        if source is None:
            raise SchemaError(f"missing required input --{name}")
        try:
            return aio.load_json(source)
        except AbharmError as exc:
            raise aio.with_path(exc, None if aio.is_inline(source) else source)

    def group(self, fallback=None) -> GroupSpec:
        if "group" not in self.config.inputs:
            if isinstance(fallback, dict) and "cyclic_orders" in fallback:
                return aio.spec_from_json(fallback)
            raise SchemaError("missing required input --group")
        obj, path = self.json("group")
        try:
            return aio.spec_from_json(obj)
        except AbharmError as exc:
            raise aio.with_path(exc, path)

    def function(self, name: str, cls=GroupFunction) -> tuple:
        source = self.config.inputs.get(name)
        if source is None:
            raise SchemaError(f"missing required input --{name}")
        if self.config.options.get("csv"):
            try:
                values = aio.values_from_csv(source)
            except AbharmError as exc:
                raise aio.with_path(exc, source)
            spec = self.group()
            path = source
        else:
            obj, path = self.json(name)
            try:
                values = aio.values_from_json(obj)
            except AbharmError as exc:
                raise aio.with_path(exc, path)
            spec = self.group(fallback=obj)
        try:
            return cls(spec, values), spec
        except AbharmError as exc:
            raise aio.with_path(exc, path)


def _weight(config: RunConfig, spec: GroupSpec) -> HaarWeight:
    if config.haar_mode == "counting":
        return HaarWeight.counting(spec)
    return HaarWeight.normalized(spec)


def _function_doc(spec: GroupSpec, values, precision: int) -> dict:
    return {"cyclic_orders": list(spec.cyclic_orders),
            "values": aio.values_to_json(values, precision)}


def _cylinder(inputs: _Inputs, config: RunConfig) -> CylinderFunction:
    obj, path = inputs.json("in")
    try:
        if not isinstance(obj, dict):
            raise SchemaError('cylinder must be {"base": n, "depth": l, "values": [...]}')
        base = config.options.get("base") or obj.get("base")
        depth = config.options.get("depth")
        depth = obj.get("depth") if depth is None else depth
        if base is None or depth is None:
            raise SchemaError("cylinder needs a base and a depth")
        for key, given in (("base", config.options.get("base")), ("depth", config.options.get("depth"))):
            if given is not None and key in obj and obj[key] != given:
                raise ShapeMismatch(f"--{key} {given} disagrees with file {key} {obj[key]}")
        return CylinderFunction.from_values(SequenceGroupSpec(base), depth, aio.values_from_json(obj))
    except AbharmError as exc:
        raise aio.with_path(exc, path)


def _cylinder_doc(spec: SequenceGroupSpec, depth: int, values, precision: int) -> dict:
    return {"base": spec.base, "depth": depth, "values": aio.values_to_json(values, precision)}


def _haar_check(config: RunConfig, inputs: _Inputs) -> dict:
    f, spec = inputs.function("function")
    w = _weight(config, spec)
    rng = np.random.default_rng(config.options.get("seed", 0))
    shifts = config.options.get("shifts", 16)
    if shifts >= spec.order:
        ranks = range(spec.order)
    else:
        ranks = rng.choice(spec.order, size=shifts, replace=False)
    invariance = max(check_invariance(w, f, unrank(spec, int(k))) for k in ranks)

    abs_integral = integrate(w, GroupFunction(spec, np.abs(f.values)))
    positivity_ok = (abs_integral.imag == 0 and abs_integral.real >= 0
                     and (abs_integral.real > 0) == bool(np.any(f.values != 0)))

    linearity = 0.0
    for _ in range(8):
        g = GroupFunction(spec, rng.normal(size=spec.order) + 1j * rng.normal(size=spec.order))
        alpha, beta = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
        combo = GroupFunction(spec, alpha * f.values + beta * g.values)
        lhs = integrate(w, combo)
        linearity = max(linearity, abs(lhs - alpha * integrate(w, f) - beta * integrate(w, g)))
    return {"invariance_max_residual": float(invariance),
            "positivity_ok": bool(positivity_ok),
            "linearity_max_residual": float(linearity)}


def _execute(config: RunConfig) -> dict:
    inputs = _Inputs(config)
    p = config.precision
    cmd = config.command

    if cmd in ("transform", "itransform"):
        naive = bool(config.options.get("naive"))
        if cmd == "transform":
            f, spec = inputs.function("in")
            out = fourier(_weight(config, spec), f, naive=naive).values
        else:
            F, spec = inputs.function("in", SpectrumFunction)
            out = inverse_fourier(_weight(config, spec), F, naive=naive).values
        return _function_doc(spec, out, p)

    if cmd == "convolve":
        f, spec = inputs.function("in")
        g, spec2 = inputs.function("in2")
        if spec2 != spec:
            raise aio.with_path(ShapeMismatch("--in and --in2 live on different groups"),
                                config.inputs.get("in2"))
        h = convolve(_weight(config, spec), f, g, method=config.options.get("method"))
        return _function_doc(spec, h.values, p)

    if cmd == "translate":
        f, spec = inputs.function("in")
        by = config.options.get("by")
        if by is None:
            raise SchemaError("missing required option --by")
        a = aio.element_from_json(spec, aio.load_json(by)[0])
        return _function_doc(spec, translate(f, a).values, p)

    if cmd == "laplace":
        obj, path = inputs.json("support")
        try:
            support = aio.support_from_json(obj)
        except AbharmError as exc:
            raise aio.with_path(exc, path)
        phi = aio.parse_base(config.options.get("base", ""))
        value = fourier_laplace_integers(support, phi, config.options.get("exponent_cap", 10**6))
        return {"value": aio.complex_to_json(value, p),
                "character": classify_character(phi).value}

    if cmd == "characters":
        spec = inputs.group()
        return {"cyclic_orders": list(spec.cyclic_orders),
                "characters": [chi.to_json() for chi in dual_group(spec)]}

    if cmd == "haar-check":
        return _haar_check(config, inputs)

    if cmd == "haar-unique":
        return {"dimension": uniqueness_oracle(inputs.group())}

    cf = _cylinder(inputs, config)
    if cmd == "cantor-transform":
        return _cylinder_doc(cf.spec, cf.depth, transform_cylinder(cf).values, p)
    if cmd == "cantor-integrate":
        return {"integral": aio.complex_to_json(haar_integrate_cylinder(cf), p)}
    if cmd == "cantor-refine":
        to = config.options.get("to")
        if to is None:
            raise SchemaError("missing required option --to")
        r = refine(cf, to)
        return _cylinder_doc(r.spec, r.depth, r.values, p)
    raise SchemaError(f"unknown command {cmd!r}")


def _error_doc(code: str, message: str, path) -> str:
    return aio.dumps({"error": {"code": code, "message": message, "path": path}})


def run(config: RunConfig) -> tuple[int, str]:
    """Execute ``config``; returns ``(exit_status, text)``.

    On success the text is the JSON report; on failure it is the error
    object (nothing partial is ever returned).
    """
    try:
        return 0, aio.dumps(_execute(config))
    except AbharmError as exc:
        return 1, _error_doc(exc.code, str(exc), getattr(exc, "path", None))
    except OSError as exc:
        return 2, _error_doc("io_error", exc.strerror or str(exc), exc.filename)


def _common(p: argparse.ArgumentParser, haar: bool = False, csv: bool = False) -> None:
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--precision", type=int, default=12, help="significant digits (6-17)")
    if haar:
        p.add_argument("--haar", choices=("normalized", "counting"), default="normalized")
    if csv:
        p.add_argument("--csv", action="store_true",
                       help="read function inputs as two-column re,im CSV")


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors: exit 1 with the error object, like the rest
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(_error_doc("usage_error", message, None))
        sys.exit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="abharm", description="Harmonic analysis on finite abelian groups.")
    parser.add_argument("--version", action="version", version=f"abharm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def function_cmd(name, help, second=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("--group", help="group spec JSON (file or inline)")
        p.add_argument("--in", dest="in_", required=True, help="function JSON")
        if second:
            p.add_argument("--in2", required=True, help="second function JSON")
        _common(p, haar=True, csv=True)
        return p

    p = function_cmd("transform", "Fourier transform")
    p.add_argument("--naive", action="store_true", help="use the O(N^2) reference")
    p = function_cmd("itransform", "inverse Fourier transform")
    p.add_argument("--naive", action="store_true", help="use the O(N^2) reference")
    p = function_cmd("convolve", "convolution", second=True)
    p.add_argument("--method", choices=("direct", "spectral"))
    p = function_cmd("translate", "translate by a group element")
    p.add_argument("--by", required=True, help='element, e.g. "[1,0]"')

    p = sub.add_parser("laplace", help="Fourier-Laplace transform on the integers")
    p.add_argument("--support", required=True, help='{"support": [[k, [re, im]], ...]}')
    p.add_argument("--base", required=True, help='"re,im"')
    p.add_argument("--exponent-cap", type=int, default=10**6)
    _common(p)

    p = sub.add_parser("characters", help="list the dual group")
    p.add_argument("--group", required=True)
    _common(p)

    def haar_check(p):
        p.add_argument("--group")
        p.add_argument("--function", required=True)
        p.add_argument("--shifts", type=int, default=16)
        p.add_argument("--seed", type=int, default=0)
        _common(p, haar=True, csv=True)

    def haar_unique(p):
        p.add_argument("--group", required=True)
        _common(p)

    def cantor_common(p, to=False):
        p.add_argument("--in", dest="in_", required=True, help="cylinder JSON")
        p.add_argument("--base", type=int)
        p.add_argument("--depth", type=int)
        if to:
            p.add_argument("--to", type=int, required=True)
        _common(p)

    haar_check(sub.add_parser("haar-check", help="check the Haar integral axioms"))
    haar_unique(sub.add_parser("haar-unique", help="dimension of invariant functionals"))
    haar = sub.add_parser("haar", help="Haar integral checks").add_subparsers(
        dest="haar_command", required=True)
    haar_check(haar.add_parser("check"))
    haar_unique(haar.add_parser("unique"))

    for name, to in (("transform", False), ("integrate", False), ("refine", True)):
        cantor_common(sub.add_parser(f"cantor-{name}"), to)
    cantor = sub.add_parser("cantor", help="base-n sequence group").add_subparsers(
        dest="cantor_command", required=True)
    for name, to in (("transform", False), ("integrate", False), ("refine", True)):
        cantor_common(cantor.add_parser(name), to)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    command = ns.command
    if command == "haar":
        command = f"haar-{ns.haar_command}"
    elif command == "cantor":
        command = f"cantor-{ns.cantor_command}"
    inputs = {}
    for key, attr in (("group", "group"), ("in", "in_"), ("in2", "in2"),
                      ("function", "function"), ("support", "support")):
        value = getattr(ns, attr, None)
        if value is not None:
            inputs[key] = value
    options = {}
    for key in ("naive", "csv", "method", "by", "shifts", "seed", "exponent_cap", "to", "depth"):
        value = getattr(ns, key, None)
        if value is not None:
            options[key] = value
    # --base is a complex "re,im" for laplace and an integer for cantor
    if getattr(ns, "base", None) is not None:
        options["base"] = ns.base
    return RunConfig(command=command, haar_mode=getattr(ns, "haar", "normalized"),
                     inputs=inputs, output=ns.out, precision=ns.precision, options=options)


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, --version, usage errors
        return exc.code if isinstance(exc.code, int) else 1
    try:
        config = config_from_args(ns)
    except AbharmError as exc:
        sys.stderr.write(_error_doc(exc.code, str(exc), None))
        return 1
    status, text = run(config)
    if status != 0:
        sys.stderr.write(text)
        return status
    if config.output is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        sys.stderr.write(_error_doc("io_error", exc.strerror or str(exc), config.output))
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
