"""Command-line front end: mask generation, inversion, transforms, analysis.

Every command is deterministic for fixed inputs and seed.  Validation
failures exit with status 1 and I/O failures with status 2, each printing a
single machine-parsable line on standard error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import analysis, selftest, serialize
from .errors import EvenRevError, ParameterError
from .inverse import even_inverse
from .masks import bspline_mask, dd_mask, pseudo_spline_mask
from .transform import decompose, reconstruct, threshold_details

__all__ = ["RunConfig", "main"]


@dataclass
class RunConfig:
    """Tunable defaults shared by the subcommands."""

    circle_samples: int = 16384
    guard_threshold: float = 1e-9
    inverse_tol: float = 1e-12
    seed: int = 0
    mode: str = "exact"

    def validate(self) -> "RunConfig":
        s = self.circle_samples
        if s < 1024 or s & (s - 1):
            raise ParameterError("circle_samples must be a power of two >= 1024")
        if self.mode not in ("exact", "exact_periodic", "kernel"):
            raise ParameterError(f"unknown default mode {self.mode!r}")
        return self


def _load_config(path: str | None) -> RunConfig:
    cfg = RunConfig()
    if path:
        obj = serialize.load_json(path)
        for name in ("circle_samples", "guard_threshold", "inverse_tol", "seed", "mode"):
            if name in obj:
                setattr(cfg, name, obj[name])
    return cfg.validate()


def _emit(obj, out: str | None) -> None:
    text = serialize.dump_json(obj)
    if out:
        serialize.write_text_atomic(out, text)
    else:
        sys.stdout.write(text)


def _load_mask(path: str):
    return serialize.mask_from_obj(serialize.load_json(path))


def _load_signal(path: str) -> np.ndarray:
    with open(path) as fh:
        return serialize.signal_from_csv_text(fh.read())


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_mask(args, cfg: RunConfig) -> int:
    if args.family == "bspline":
        mask = bspline_mask(args.order)
    elif args.family == "pseudo":
        if args.nu is None:
            raise ParameterError("--nu is required for the pseudo family")
        mask = pseudo_spline_mask(args.order, args.nu)
    else:  # dd
        if args.order % 2:
            raise ParameterError("the dd family needs an even --order")
        mask = dd_mask(args.order // 2)
    _emit(serialize.mask_to_obj(mask), args.out)
    return 0


def _cmd_invert(args, cfg: RunConfig) -> int:
    mask = _load_mask(args.mask)
    tol = args.tol if args.tol is not None else cfg.inverse_tol
    kernel = even_inverse(
        mask, tol=tol, method=args.method,
        guard=cfg.guard_threshold, samples=cfg.circle_samples,
    )
    _emit(serialize.kernel_to_obj(kernel), args.out)
    return 0


def _resolve_kernel(args, mask, cfg: RunConfig):
    mode = args.mode or cfg.mode
    if mode != "kernel":
        return "exact", None
    if getattr(args, "kernel", None):
        return "kernel", serialize.kernel_from_obj(serialize.load_json(args.kernel))
    return "kernel", even_inverse(
        mask, tol=cfg.inverse_tol, guard=cfg.guard_threshold, samples=cfg.circle_samples
    )


def _cmd_decompose(args, cfg: RunConfig) -> int:
    mask = _load_mask(args.mask)
    signal = _load_signal(args.signal)
    mode, kernel = _resolve_kernel(args, mask, cfg)
    pyramid = decompose(
        signal, mask, args.levels, mode=mode, kernel=kernel, mask_id=args.mask_id
    )
    _emit(serialize.pyramid_to_obj(pyramid, packed=args.packed), args.out)
    return 0


def _cmd_reconstruct(args, cfg: RunConfig) -> int:
    mask = _load_mask(args.mask)
    pyramid = serialize.pyramid_from_obj(serialize.load_json(args.pyramid))
    signal = reconstruct(pyramid, mask)
    text = serialize.signal_to_csv_text(signal)
    if args.out:
        serialize.write_text_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_compress(args, cfg: RunConfig) -> int:
    pyramid = serialize.pyramid_from_obj(serialize.load_json(args.pyramid))
    squeezed, kept, total = threshold_details(pyramid, args.eps)
    _emit(serialize.pyramid_to_obj(squeezed, packed=args.packed), args.out)
    sys.stderr.write(f"kept {kept} of {total} detail entries\n")
    return 0


def _cmd_analyze(args, cfg: RunConfig) -> int:
    if args.analysis == "decay":
        mask = _load_mask(args.mask)
        mode, kernel = _resolve_kernel(args, mask, cfg)
        report = analysis.decay_report(
            args.fn, args.levels, args.base, mask, mode=mode, kernel=kernel
        )
        csv_text = serialize.rows_to_csv_text(report.rows)
        if args.out:
            serialize.write_text_atomic(args.out, csv_text)
        else:
            sys.stdout.write(csv_text)
        if args.json:
            serialize.write_json_atomic(args.json, serialize.report_to_obj(report))
        return 0
    if args.analysis == "stability":
        mask = _load_mask(args.mask)
        seed = args.seed if args.seed is not None else cfg.seed
        if args.stability_mode == "dec":
            report = analysis.decomposition_stability_experiment(
                mask, p=args.p, trials=args.trials, seed=seed
            )
        else:
            rng = np.random.default_rng(seed)
            signal = rng.uniform(-1.0, 1.0, 256)
            pyramid = decompose(signal, mask, 6)
            report = analysis.reconstruction_stability_experiment(
                mask, pyramid, args.perturbation, args.trials, seed=seed
            )
        _emit(serialize.report_to_obj(report), args.out)
        return 0 if report.all_ok else 1
    if args.analysis == "compress":
        mask = _load_mask(args.mask)
        signal = _load_signal(args.signal)
        grid = [float(tok) for tok in args.eps_grid.split(",") if tok.strip()]
        if not grid:
            raise ParameterError("--eps-grid must list at least one threshold")
        report = analysis.compression_experiment(signal, mask, args.levels, grid)
        csv_text = serialize.rows_to_csv_text(report.rows)
        if args.out:
            serialize.write_text_atomic(args.out, csv_text)
        else:
            sys.stdout.write(csv_text)
        if args.json:
            serialize.write_json_atomic(args.json, serialize.report_to_obj(report))
        return 0
    raise ParameterError(f"unknown analysis {args.analysis!r}")


def _cmd_selftest(args, cfg: RunConfig) -> int:
    return 0 if selftest.run_all() else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evenrev",
        description="Pyramid transforms built on even-reversible subdivision masks.",
    )
    parser.add_argument("--config", help="JSON config file overriding the defaults")
    parser.add_argument("--seed", type=int, help="seed for randomized commands")
    parser.add_argument("--samples", type=int, help="circle sampling density")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mask", help="emit a catalog mask as JSON")
    p.add_argument("--family", choices=("bspline", "pseudo", "dd"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--nu", type=int)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_mask)

    p = sub.add_parser("invert", help="compute the even-inverse kernel of a mask")
    p.add_argument("--mask", required=True)
    p.add_argument("--tol", type=float)
    p.add_argument("--method", choices=("auto", "spectral", "closed"), default="auto")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_invert)

    p = sub.add_parser("decompose", help="analyse a signal into a pyramid")
    p.add_argument("--signal", required=True)
    p.add_argument("--mask", required=True)
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "kernel"))
    p.add_argument("--kernel", help="kernel JSON for --mode kernel")
    p.add_argument("--mask-id", default="custom")
    p.add_argument("--packed", action="store_true")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("reconstruct", help="synthesise a signal from a pyramid")
    p.add_argument("--pyramid", required=True)
    p.add_argument("--mask", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_reconstruct)

    p = sub.add_parser("compress", help="hard-threshold the pyramid details")
    p.add_argument("--pyramid", required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--packed", action="store_true")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_compress)

    p = sub.add_parser("analyze", help="decay, stability and compression studies")
    asub = p.add_subparsers(dest="analysis", required=True)

    d = asub.add_parser("decay", help="per-level decay report")
    d.add_argument("--fn", default="sine", choices=("sine", "gaussian_bump", "poly"))
    d.add_argument("--levels", type=int, default=10)
    d.add_argument("--base", type=int, default=2)
    d.add_argument("--mask", required=True)
    d.add_argument("--mode", choices=("exact", "kernel"))
    d.add_argument("--kernel")
    d.add_argument("--out")
    d.add_argument("--json")
    d.set_defaults(handler=_cmd_analyze)

    s = asub.add_parser("stability", help="seeded perturbation experiments")
    s.add_argument("--mode", dest="stability_mode", choices=("rec", "dec"), required=True)
    s.add_argument("--p", default="inf", choices=("2", "inf"))
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int)
    s.add_argument("--perturbation", type=float, default=1e-3)
    s.add_argument("--mask", required=True)
    s.add_argument("--out")
    s.set_defaults(handler=_cmd_analyze)

    c = asub.add_parser("compress", help="threshold sweep")
    c.add_argument("--signal", required=True)
    c.add_argument("--mask", required=True)
    c.add_argument("--levels", type=int, default=6)
    c.add_argument("--eps-grid", required=True)
    c.add_argument("--out")
    c.add_argument("--json")
    c.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _load_config(args.config)
        if args.seed is not None:
            cfg.seed = args.seed
        if args.samples is not None:
            cfg.circle_samples = args.samples
            cfg.validate()
        return args.handler(args, cfg)
    except EvenRevError as exc:
        sys.stderr.write(f"error: validation: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: io: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
