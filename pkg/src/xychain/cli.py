"""Command-line front end.

Precedence of settings: built-in defaults < ``--preset`` < ``--config`` file
< explicit flags. Exit codes: 0 ok, 1 a validation check failed, 2 usage,
parameter or I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import math
import os
import sys

import numpy as np

from . import __version__
from .approx import gaussian_envelope, scaling_transform, strong_coupling_envelope, strong_coupling_model
from .decoherence import concurrence, time_series
from .model import ChainParams, ParameterError, TwoQubitInitial, dressed_lambdas
from .presets import PRESETS
from .spectrum import mode_spectrum
from .sweep import AXES, SweepSpec, compute_sweep, fmt, time_grid, write_sweep
from .validation import cross_validate

log = logging.getLogger("xychain")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
THREADS_ENV = "XYCHAIN_THREADS"

DEFAULTS = dict(
    lam=1.0, gamma=1.0, g=0.05, N=201, t_max=50.0, steps=2000,
    reference="lambda", a=1 / math.sqrt(2), b=1 / math.sqrt(2),
    alpha=0.1, delta=None, mode="size", threshold=0.05,
    axis=None, values=None, format="csv", cases=100, seed=0,
)


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.replace(";", ",").split(",") if x.strip()]


_CONFIG_TYPES = {
    "lam": float, "gamma": float, "g": float, "N": int, "t_max": float, "steps": int,
    "reference": str, "a": float, "b": float, "alpha": float, "delta": float,
    "mode": str, "threshold": float, "axis": str, "values": _float_list,
    "format": str, "cases": int, "seed": int, "threads": int,
}
_CONFIG_ALIASES = {"lambda": "lam", "t-max": "t_max", "t_max": "t_max"}


def read_config(path: str) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for n, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParameterError(f"{path}:{n}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            key = _CONFIG_ALIASES.get(key, key)
            if key not in _CONFIG_TYPES:
                raise ParameterError(f"{path}:{n}: unknown key {key!r}")
            out[key] = _CONFIG_TYPES[key](value)
    return out


def _params(s: dict) -> ChainParams:
    return ChainParams(N=s["N"], gamma=s["gamma"], lam=s["lam"], g=s["g"])


@contextlib.contextmanager
def _sink(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def cmd_evolve(s: dict, workers: int) -> int:
    p = _params(s)
    t = time_grid(s["t_max"], s["steps"])
    series = time_series(p, t, s["reference"], workers=workers)
    cols = ["t", "F_abs"]
    data = [series.t, series.f_abs]
    if s.get("complex"):
        cols += ["F_re", "F_im"]
        data += [series.f_complex.real, series.f_complex.imag]
    if s.get("concurrence"):
        init = TwoQubitInitial(s["a"], s["b"])
        cols.append("concurrence")
        data.append(np.array([concurrence(init, x) for x in series]))
    if s.get("with_envelope"):
        cols.append("envelope")
        data.append(gaussian_envelope(strong_coupling_model(p), series.t))
    with _sink(s.get("output")) as out:
        out.write(",".join(cols) + "\n")
        for row in zip(*data):
            out.write(",".join(fmt(x) for x in row) + "\n")
    return EXIT_OK


def cmd_sweep(s: dict, workers: int) -> int:
    if s.get("axis") is None or s.get("values") is None:
        raise ParameterError("sweep needs --axis and --values (or --range)")
    fixed = {k: s[k] for k in ("lam", "gamma", "g", "N")}
    spec = SweepSpec(axis=s["axis"], values=list(s["values"]), t=time_grid(s["t_max"], s["steps"]),
                     fixed=fixed, output=s.get("output") or "-", format=s["format"],
                     reference=s["reference"])
    grid = compute_sweep(spec, workers)
    with _sink(spec.output) as out:
        write_sweep(spec, grid, out)
    return EXIT_OK


def cmd_spectrum(s: dict, workers: int) -> int:
    p = _params(s)
    with _sink(s.get("output")) as out:
        out.write("branch,field,k,eps,omega,theta,alpha\n")
        for j, fld in enumerate(dressed_lambdas(p), 1):
            sp = mode_spectrum(p, fld)
            for row in zip(sp.k, sp.eps, sp.omega, sp.theta, sp.alpha):
                out.write(f"{j},{fmt(fld)}," + ",".join(fmt(x) for x in row) + "\n")
    return EXIT_OK


def cmd_envelope(s: dict, workers: int) -> int:
    p = _params(s)
    t = time_grid(s["t_max"], s["steps"])
    exact = time_series(p, t, s["reference"], workers=workers).f_abs
    m = strong_coupling_model(p)
    approx = strong_coupling_envelope(m, p.N, t)
    gauss = gaussian_envelope(m, t)
    log.info("Omega=%s (asymptotic %s), s_N^2=%s, width=%s",
             fmt(m.omega_mean), fmt(m.omega_asymptotic), fmt(m.s2), fmt(m.width))
    with _sink(s.get("output")) as out:
        out.write("t,F_exact,F_approx,gaussian\n")
        for row in zip(t, exact, approx, gauss):
            out.write(",".join(fmt(x) for x in row) + "\n")
    return EXIT_OK


def scaling_deviation(p: ChainParams, alpha: float, t, delta=None, mode: str = "size",
                      workers: int = 1):
    """Sup-norm gap between |F(t)| at ``p`` and |F(t/alpha)| at its scaled image."""
    image, tmap = scaling_transform(p, alpha, delta, mode)
    t = np.asarray(t, dtype=float)
    base = time_series(p, t, workers=workers).f_abs
    scaled = time_series(image, tmap(t), workers=workers).f_abs
    return float(np.max(np.abs(base - scaled))), image, base, scaled


def cmd_scaling_check(s: dict, workers: int) -> int:
    p = _params(s)
    t = time_grid(s["t_max"], s["steps"])
    dev, image, base, scaled = scaling_deviation(p, s["alpha"], t, s["delta"], s["mode"], workers)
    ok = dev <= s["threshold"]
    if s.get("output"):
        with _sink(s["output"]) as out:
            out.write("t,F_base,t_image,F_image\n")
            for row in zip(t, base, t / s["alpha"], scaled):
                out.write(",".join(fmt(x) for x in row) + "\n")
    report = sys.stderr if s.get("output") == "-" else sys.stdout
    print(f"base:  N={p.N} gamma={fmt(p.gamma)} lambda={fmt(p.lam)} g={fmt(p.g)}", file=report)
    print(f"image: N={image.N} gamma={fmt(image.gamma)} lambda={fmt(image.lam)} g={fmt(image.g)}"
          f" (t -> t/{fmt(s['alpha'])})", file=report)
    print(f"sup-norm deviation {fmt(dev)} threshold {fmt(s['threshold'])}: "
          f"{'PASS' if ok else 'FAIL'}", file=report)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle_check(s: dict, workers: int) -> int:
    summary = cross_validate(s["cases"], s["seed"])
    print(f"cases: {summary['cases']}")
    print(f"max per-mode modulus deviation: {summary['max_mode_dev']:.3e}")
    print(f"max full-product deviation:     {summary['max_product_dev']:.3e}")
    print(f"max closed-form deviation:      {summary['max_form_dev']:.3e}")
    print("PASS" if summary["pass"] else "FAIL")
    text = json.dumps(summary, sort_keys=True)
    if s.get("json"):
        with _sink(s["json"]) as out:
            out.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if summary["pass"] else EXIT_FAIL


COMMANDS = {
    "evolve": cmd_evolve,
    "sweep": cmd_sweep,
    "spectrum": cmd_spectrum,
    "envelope": cmd_envelope,
    "scaling-check": cmd_scaling_check,
    "oracle-check": cmd_oracle_check,
}


def _range(text: str) -> list[float]:
    start, stop, count = text.split(":")
    return list(np.linspace(float(start), float(stop), int(count)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xychain", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=None,
                        help=f"worker threads (env {THREADS_ENV}); never changes output")
    parser.add_argument("-v", "--verbose", action="store_true")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", choices=sorted(PRESETS))
    common.add_argument("--config", help="key = value settings file")
    common.add_argument("-o", "--output", help="output path, '-' for stdout")
    common.add_argument("--lambda", dest="lam", type=float, help="transverse field")
    common.add_argument("--gamma", type=float, help="anisotropy")
    common.add_argument("--g", type=float, help="qubit-chain coupling")
    common.add_argument("--N", type=int, help="chain length (odd)")
    common.add_argument("--t-max", dest="t_max", type=float)
    common.add_argument("--steps", type=int, help="number of time points, endpoints included")
    common.add_argument("--reference", choices=["lambda", "lambda2"],
                        help="initial chain state: bare ground state or branch-2 ground state")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", parents=[common], help="|F(t)| time series as CSV")
    p.add_argument("--complex", action="store_const", const=True, help="add F_re, F_im")
    p.add_argument("--concurrence", action="store_const", const=True)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--with-envelope", dest="with_envelope", action="store_const", const=True,
                   help="add the strong-coupling Gaussian envelope column")

    p = sub.add_parser("sweep", parents=[common], help="parameter x time grid of |F|")
    p.add_argument("--axis", choices=AXES)
    p.add_argument("--values", type=_float_list, help="comma separated axis values")
    p.add_argument("--range", dest="values", type=_range, help="start:stop:count")
    p.add_argument("--format", choices=["csv", "json"])

    sub.add_parser("spectrum", parents=[common], help="per-mode spectrum of all four branches")
    sub.add_parser("envelope", parents=[common], help="exact |F| next to the strong-coupling form")

    p = sub.add_parser("scaling-check", parents=[common], help="near-critical scaling invariance")
    p.add_argument("--alpha", type=float)
    p.add_argument("--delta", type=float, help="1 - lambda; defaults to the --lambda value")
    p.add_argument("--mode", choices=["size", "gamma"])
    p.add_argument("--threshold", type=float)

    p = sub.add_parser("oracle-check", parents=[common], help="engine vs brute-force pair oracle")
    p.add_argument("--cases", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--json", help="write the JSON summary here instead of stdout")

    p = sub.add_parser("run", parents=[common], help="run a figure preset")
    return parser


def settings_from(args: argparse.Namespace) -> tuple[str, dict]:
    s = dict(DEFAULTS)
    command = args.command
    if args.preset:
        preset = dict(PRESETS[args.preset])
        preset_cmd = preset.pop("command")
        if command == "run":
            command = preset_cmd
        elif command != preset_cmd:
            raise ParameterError(f"preset {args.preset} belongs to '{preset_cmd}'")
        s.update(preset)
    elif command == "run":
        raise ParameterError("run needs --preset")
    if args.config:
        s.update(read_config(args.config))
    for key, value in vars(args).items():
        if key in ("command", "preset", "config") or value is None:
            continue
        s[key] = value
    return command, s


def _workers(args, s) -> int:
    if args.threads is not None:
        n = args.threads
    elif s.get("threads") is not None:
        n = s["threads"]
    else:
        n = int(os.environ.get(THREADS_ENV, "1"))
    if n < 1:
        raise ParameterError("thread count must be >= 1")
    return n


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        command, s = settings_from(args)
        return COMMANDS[command](s, _workers(args, s))
    except ParameterError as exc:
        print(f"xychain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"xychain: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
