"""Command-line front end.

    wphodge analyze --weights 1,1,2,5 --degree 10 --poly "x1^10 + x2^10 + x3^5 + x4^2"
    wphodge fermat  --weights 1,1,2,5 --degree 10 --format markdown
    wphodge certify --weights 1,1,2,5 --degree 10 --poly-file f.txt --mode sampled --seed 7
    wphodge search  --max-weights 2,2,3,6 --max-degree 12 --out search.json
    wphodge report  --in search.json --format markdown

Exit codes: 0 ok, 1 invalid input, 2 not quasi-smooth, 3 consistency violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .hodge.period import ConsistencyError
from .hodge.search import search
from .jacring import NotQuasiSmooth
from .polyalg import PolynomialSyntaxError, WeightSystem, fermat_polynomial, parse_polynomial
from .report import build_certificate, render, search_document, write_atomic

log = logging.getLogger("wphodge")

EXIT_OK, EXIT_INVALID, EXIT_NOT_QUASI_SMOOTH, EXIT_CONSISTENCY = 0, 1, 2, 3


class InvalidInput(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    weights: tuple | None = None
    degree: int | None = None
    poly: str | None = None
    poly_file: str | None = None
    mode: str = "exact"
    seed: int = 0
    fmt: str = "json"
    out: str | None = None
    include_matrices: bool = False
    timing: bool = False
    max_weights: tuple | None = None
    max_degree: int | None = None
    min_degree: int = 1
    workers: int = 1
    infile: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _int_tuple(text: str) -> tuple:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"expected four values, got {len(values)}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wphodge", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_opts(p):
        p.add_argument("--format", dest="fmt", choices=("json", "markdown"), default="json")
        p.add_argument("--out", help="output path (default: stdout)")

    def pipeline_opts(p, needs_poly):
        p.add_argument("--weights", type=_int_tuple, required=True)
        p.add_argument("--degree", type=int, required=True)
        if needs_poly:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--poly", help="polynomial text, e.g. 'x1^10 + x2^10 + x3^5 + x4^2'")
            src.add_argument("--poly-file")
        p.add_argument("--mode", choices=("exact", "sampled"), default="exact")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--include-matrices", action="store_true")
        p.add_argument("--timing", action="store_true",
                       help="record wall-clock timings (output is then not reproducible byte for byte)")
        output_opts(p)

    pipeline_opts(sub.add_parser("analyze", help="full pipeline for a given polynomial"), True)
    pipeline_opts(sub.add_parser("fermat", help="analyze the Fermat member"), False)
    pipeline_opts(sub.add_parser("certify", help="non-geodesy certificate for a given polynomial"), True)

    s = sub.add_parser("search", help="scan weight systems and degrees")
    s.add_argument("--max-weights", type=_int_tuple, required=True)
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--min-degree", type=int, default=1)
    s.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    output_opts(s)

    r = sub.add_parser("report", help="re-render a saved JSON document")
    r.add_argument("--in", dest="infile", required=True)
    output_opts(r)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    return RunConfig(**fields)


def _polynomial(config: RunConfig, ws: WeightSystem):
    if config.command == "fermat":
        f = fermat_polynomial(ws)
        return f, f.render()
    if config.poly_file:
        try:
            text = Path(config.poly_file).read_text(encoding="utf-8").strip()
        except OSError as exc:
            raise InvalidInput(f"cannot read {config.poly_file}: {exc}") from exc
    else:
        text = config.poly
    f = parse_polynomial(text, ws)
    if f.homogeneous_degree != ws.degree:
        raise InvalidInput(f"polynomial is not weighted homogeneous of degree {ws.degree}: {f}")
    return f, text


def run(config: RunConfig) -> str:
    """Execute one command and return the rendered document."""
    if config.command in ("analyze", "fermat", "certify"):
        ws = WeightSystem(config.weights, config.degree)
        f, text = _polynomial(config, ws)
        log.info("analyzing %s with weights %s", text, ws)
        doc = build_certificate(f, text, command=config.command, mode=config.mode, seed=config.seed,
                                include_matrices=config.include_matrices, timing=config.timing)
        return render(doc, config.fmt)
    if config.command == "search":
        if config.max_degree < 0 or config.min_degree < 1:
            raise InvalidInput("degree bounds must satisfy max_degree >= 0 and min_degree >= 1")
        if config.workers < 1:
            raise InvalidInput("workers must be positive")
        report = search(config.max_weights, config.max_degree, min_degree=config.min_degree,
                        mode=config.mode, seed=config.seed, workers=config.workers)
        return render(search_document(report), config.fmt)
    if config.command == "report":
        try:
            doc = json.loads(Path(config.infile).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"cannot load {config.infile}: {exc}") from exc
        if doc.get("kind") not in ("certificate", "search_report"):
            raise InvalidInput(f"{config.infile} is not a wphodge document")
        return render(doc, config.fmt)
    raise InvalidInput(f"unknown command {config.command!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    config = config_from_args(args)
    try:
        text = run(config)
    except NotQuasiSmooth as exc:
        print(f"wphodge: not quasi-smooth: {exc}", file=sys.stderr)
        return EXIT_NOT_QUASI_SMOOTH
    except ConsistencyError as exc:
        print(f"wphodge: consistency violation: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (InvalidInput, PolynomialSyntaxError, ValueError) as exc:
        print(f"wphodge: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if config.out:
        write_atomic(config.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
