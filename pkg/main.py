# === main.py ===
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import uvicorn

# Add the project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

import config
from cli.bench import bench_convolve_2d, bench_interp_1d, bench_interp_2d, speedups
from cli.errors import CrossCheckError
from cli.optics import OpticsConfig, demo_optics
from cli.records import write_csv, write_intensity_csv, write_pgm
from cli.verify import SUITES, run_verify

log = logging.getLogger("ffskit")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _list(cast):
    def parse(text: str) -> List:
        try:
            return [cast(v) for v in text.split(",") if v.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected a comma-separated list, got {text!r}")

    return parse


def _pair(values: Sequence, name: str) -> List:
    """One value is broadcast to both axes."""
    if len(values) == 1:
        return [values[0], values[0]]
    if len(values) == 2:
        return list(values)
    raise ValueError(f"{name} takes one or two values, got {len(values)}")


def _common(p: argparse.ArgumentParser, seeded: bool = True) -> None:
    p.add_argument("--reps", type=int, default=config.DEFAULT_REPS, help="timed repetitions")
    if seeded:
        p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--out", default=None, help="CSV path ('-' or omitted: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffskit",
        description="Fast Fourier series, chirp Z-transform interpolation and FS-domain convolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bench-interp-1d", help="CZT interpolation vs zero-padding, 1-D")
    p.add_argument("--n-fs", type=int, default=127)
    p.add_argument("--n-s", type=int, default=128)
    p.add_argument("--fractions", type=_list(float), default=[0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0])
    p.add_argument("--m", type=_list(int), default=[512], help="output sample counts")
    _common(p)

    p = sub.add_parser("bench-interp-2d", help="CZT interpolation vs zero-padding, 2-D")
    p.add_argument("--n-fs", type=_list(int), default=[255])
    p.add_argument("--n-s", type=_list(int), default=[256])
    p.add_argument("--fractions", type=_list(float), default=[0.02, 0.05, 0.1, 0.2, 0.5, 1.0])
    p.add_argument("--m", type=_list(int), default=[32])
    _common(p)

    p = sub.add_parser("bench-convolve-2d", help="FS convolution vs direct circular convolution")
    p.add_argument("--sizes", type=_list(int), default=[16, 32, 64, 128])
    _common(p)

    d = OpticsConfig()
    p = sub.add_parser("demo-optics", help="free-space propagation of a circular aperture")
    p.add_argument("--width", type=float, default=d.width, help="aperture window side [m]")
    p.add_argument("--n-s", type=int, default=d.n_s, help="samples per axis before padding")
    p.add_argument("--pad", type=int, default=d.pad, help="periodization factor")
    p.add_argument("--radius", type=float, default=d.radius)
    p.add_argument("--wavelength", type=float, default=d.wavelength)
    p.add_argument("--distance", type=float, default=d.distance)
    p.add_argument("--region", type=_list(float), default=list(d.region), help="ax,bx,ay,by")
    p.add_argument("--m", type=_list(int), default=list(d.m))
    p.add_argument("--tiles", type=_list(int), default=list(d.tiles))
    p.add_argument("--out", default=None, help="intensity CSV path ('-' or omitted: stdout)")
    p.add_argument("--pgm", default=None, help="optional PGM image path")

    p = sub.add_parser("verify", help="run the oracle suites")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--perturb", action="store_true", help="corrupt fast results; must fail")

    p = sub.add_parser("serve", help="start the HTTP API")
    p.add_argument("--host", default=config.API_HOST)
    p.add_argument("--port", type=int, default=config.API_PORT)
    return parser


def _report_speedups(records, fast: str, slow: str) -> None:
    for key, ratio in speedups(records, fast, slow).items():
        log.info("🔧 %s is %.1fx faster than %s at %s", fast, ratio, slow, key)


def _run(args: argparse.Namespace) -> int:
    if args.command == "bench-interp-1d":
        log.info("🔧 seed=%d", args.seed)
        records = bench_interp_1d(args.n_fs, args.n_s, args.fractions, args.m, args.reps, args.seed)
        write_csv(records, args.out)
        _report_speedups(records, "fs_interp", "zero_pad")

    elif args.command == "bench-interp-2d":
        log.info("🔧 seed=%d", args.seed)
        records = bench_interp_2d(
            _pair(args.n_fs, "--n-fs"),
            _pair(args.n_s, "--n-s"),
            args.fractions,
            _pair(args.m, "--m"),
            args.reps,
            args.seed,
        )
        write_csv(records, args.out)
        _report_speedups(records, "fs_interp", "zero_pad")

    elif args.command == "bench-convolve-2d":
        log.info("🔧 seed=%d", args.seed)
        records = bench_convolve_2d(args.sizes, args.reps, args.seed)
        write_csv(records, args.out)
        _report_speedups(records, "ffs_convolve", "direct_convolve")

    elif args.command == "demo-optics":
        if len(args.region) != 4:
            raise ValueError("--region takes four values ax,bx,ay,by")
        cfg = OpticsConfig(
            width=args.width,
            n_s=args.n_s,
            pad=args.pad,
            radius=args.radius,
            wavelength=args.wavelength,
            distance=args.distance,
            region=tuple(args.region),
            m=tuple(_pair(args.m, "--m")),
            tiles=tuple(_pair(args.tiles, "--tiles")),
        )
        result = demo_optics(cfg)
        log.info(
            "✅ energy ratio %.6f, tiled vs single-shot error %.2e",
            result.energy_ratio,
            result.tile_error,
        )
        write_intensity_csv(result.x, result.y, result.intensity, args.out)
        if args.pgm:
            write_pgm(result.intensity, args.pgm)
            log.info("✅ wrote %s", args.pgm)

    elif args.command == "verify":
        report = run_verify([args.suite], seed=args.seed, cases=args.cases, perturb=args.perturb)
        print(f"seed={report.seed}")
        for name, (passed, total) in report.counts().items():
            print(f"{name}: {passed}/{total} passed")
        failure = report.first_failure
        if failure is not None:
            log.error(
                "❌ %s case %d failed: error %.3e > %.1e, params %s",
                failure.suite,
                failure.case,
                failure.error,
                failure.tolerance,
                failure.params,
            )
            return EXIT_FAILURE
        log.info("✅ all suites passed")

    elif args.command == "serve":
        log.info("🌐 Starting API server...")
        log.info("📖 Swagger docs: http://%s:%d/docs", args.host, args.port)
        uvicorn.run("api.app:app", host=args.host, port=args.port, log_level=config.LOG_LEVEL.lower())

    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    logging.basicConfig(
        level=config.LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return _run(args)
    except CrossCheckError as e:
        log.error("❌ %s", e)
        return EXIT_FAILURE
    except ValueError as e:
        # ParameterError and pydantic ValidationError both land here
        log.error("❌ invalid parameters: %s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
