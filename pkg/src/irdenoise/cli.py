"""Command-line interface: noise injection, filtering, benchmarking, and
synthetic fixture generation for 8-bit grayscale PGM images.

Exit codes: 0 success, 1 internal error, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .filters import run_filter
from .fixtures import FIXTURE_NAMES, make_fixture
from .image import GrayImage, PgmError, WindowSpec, read_pgm_file, write_pgm_file
from .metrics import REPORT_SCHEMA, STATS_SCHEMA, build_comparison
from .noise import NoiseSpec, inject_impulse

DEFAULT_WINDOW = 3
DEFAULT_PASSES = 2
DEFAULT_DENSITIES = (0.2, 0.3)
DEFAULT_SALT_FRACTION = 0.5
DEFAULT_SEED = 42

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


def _window_arg(text: str) -> int:
    value = int(text)
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError(
            f"window must be an odd integer >= 3, got {value}"
        )
    return value


def _passes_arg(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"passes must be >= 1, got {value}")
    return value


def _unit_arg(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a value in [0, 1], got {value}")
    return value


def _seed_arg(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _threads_arg(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"threads must be >= 1, got {value}")
    return value


def _default_threads() -> int:
    return os.cpu_count() or 1


def _read_input(path: str) -> GrayImage:
    return read_pgm_file(path)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _density_label(d: float) -> str:
    return format(d, "g")


def cmd_add_noise(args: argparse.Namespace) -> int:
    img = _read_input(args.input)
    spec = NoiseSpec(density=args.density, salt_fraction=args.salt_fraction, seed=args.seed)
    noisy, mask = inject_impulse(img, spec)
    write_pgm_file(args.output, noisy)
    mask_path = args.mask or str(Path(args.output).with_suffix(".mask.pgm"))
    write_pgm_file(mask_path, mask.to_image())
    print(f"corrupted {mask.count} of {img.width * img.height} pixels")
    return EXIT_OK


def cmd_filter(args: argparse.Namespace) -> int:
    img = _read_input(args.input)
    out, stats = run_filter(
        img,
        WindowSpec(args.window),
        method=args.method,
        passes=args.passes,
        threads=args.threads,
    )
    write_pgm_file(args.output, out)
    payload = {"schema": STATS_SCHEMA, "method": args.method, "window": args.window}
    payload.update(stats.to_dict())
    text = json.dumps(payload, indent=2)
    if args.report:
        Path(args.report).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    img = _read_input(args.input)
    densities = args.density or list(DEFAULT_DENSITIES)
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    spec = WindowSpec(args.window)

    rows = []
    for d in densities:
        label = _density_label(d)
        noisy, mask = inject_impulse(
            img, NoiseSpec(density=d, salt_fraction=args.salt_fraction, seed=args.seed)
        )
        write_pgm_file(out_dir / f"noisy_d{label}.pgm", noisy)
        write_pgm_file(out_dir / f"mask_d{label}.pgm", mask.to_image())
        mf_out, mf_stats = run_filter(
            noisy, spec, method="mf", passes=args.passes, threads=args.threads
        )
        write_pgm_file(out_dir / f"mf_d{label}.pgm", mf_out)
        fnr_out, fnr_stats = run_filter(
            noisy, spec, method="fnr", passes=args.passes, threads=args.threads
        )
        write_pgm_file(out_dir / f"fnr_d{label}.pgm", fnr_out)
        row = build_comparison(img, noisy, mf_out, mf_stats, fnr_out, fnr_stats, d)
        rows.append(row)
        print(
            f"density {label}: noisy {row.noisy.psnr_db:.2f} dB, "
            f"mf {row.mf.psnr_db:.2f} dB, fnr {row.fnr.psnr_db:.2f} dB, "
            f"gain {row.psnr_gain_db:.2f} dB, "
            f"sort reduction {row.sort_reduction_fraction:.1%}"
        )

    report = {
        "schema": REPORT_SCHEMA,
        "width": img.width,
        "height": img.height,
        "window": args.window,
        "passes": args.passes,
        "salt_fraction": args.salt_fraction,
        "seed": args.seed,
        "rows": [row.to_dict() for row in rows],
    }
    text = json.dumps(report, indent=2) + "\n"
    if args.report:
        Path(args.report).write_text(text)
    else:
        print(text, end="")
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    try:
        img = make_fixture(args.fixture, args.width, args.height)
    except ValueError as exc:
        return _fail(str(exc))
    write_pgm_file(args.output, img)
    print(f"wrote {args.fixture} fixture {img.width}x{img.height} to {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irdenoise",
        description="Impulse-noise filtering and benchmarking for 8-bit PGM images.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("add-noise", help="inject seeded salt-and-pepper noise")
    p.add_argument("--input", required=True, help="clean input PGM")
    p.add_argument("--output", required=True, help="noisy output PGM")
    p.add_argument("--mask", help="mask output PGM (default: <output>.mask.pgm)")
    p.add_argument("--density", type=_unit_arg, default=0.2,
                   help="expected fraction of corrupted pixels (default 0.2)")
    p.add_argument("--salt-fraction", type=_unit_arg, default=DEFAULT_SALT_FRACTION,
                   help="share of corrupted pixels set to 255 (default 0.5)")
    p.add_argument("--seed", type=_seed_arg, default=DEFAULT_SEED,
                   help="unsigned 64-bit generator seed (default 42)")
    p.set_defaults(func=cmd_add_noise)

    p = sub.add_parser("filter", help="run a noise filter over an image")
    p.add_argument("--input", required=True, help="input PGM")
    p.add_argument("--output", required=True, help="filtered output PGM")
    p.add_argument("--method", choices=["fnr", "mf"], default="fnr",
                   help="fnr: median-replace only extremum-valued pixels; "
                        "mf: median-replace every pixel (default fnr)")
    p.add_argument("--window", type=_window_arg, default=DEFAULT_WINDOW,
                   help="window side length, odd >= 3 (default 3)")
    p.add_argument("--passes", type=_passes_arg, default=DEFAULT_PASSES,
                   help="number of filter passes (default 2)")
    p.add_argument("--report", help="write run stats JSON here instead of stdout")
    p.add_argument("--threads", type=_threads_arg, default=_default_threads(),
                   help="row-parallel worker count (default: all CPUs)")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser(
        "bench",
        help="noise + filter + compare at several densities, emitting a JSON report",
    )
    p.add_argument("--input", required=True, help="clean input PGM")
    p.add_argument("--output", required=True,
                   help="directory for noisy/mask/filtered images")
    p.add_argument("--density", type=_unit_arg, action="append",
                   help="noise density; repeatable (default: 0.2 and 0.3)")
    p.add_argument("--salt-fraction", type=_unit_arg, default=DEFAULT_SALT_FRACTION)
    p.add_argument("--seed", type=_seed_arg, default=DEFAULT_SEED)
    p.add_argument("--window", type=_window_arg, default=DEFAULT_WINDOW)
    p.add_argument("--passes", type=_passes_arg, default=DEFAULT_PASSES)
    p.add_argument("--report", help="write the comparison report JSON here")
    p.add_argument("--threads", type=_threads_arg, default=_default_threads())
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("synth", help="generate a synthetic fixture image")
    p.add_argument("--fixture", choices=list(FIXTURE_NAMES), required=True)
    p.add_argument("--output", required=True, help="output PGM")
    p.add_argument("--width", type=int, default=128)
    p.add_argument("--height", type=int, default=128)
    p.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PgmError as exc:
        return _fail(str(exc))
    except OSError as exc:
        if exc.filename:
            return _fail(f"cannot open {exc.filename}: {exc.strerror}")
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
