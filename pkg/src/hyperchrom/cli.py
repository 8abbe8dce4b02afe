"""Command line entry point ``hyperchrom``.

  hyperchrom analyze FILE [--json PATH] [--dot DIR] [--seed N] [--pivot LABEL]
                          [--all-pivots] [--oracle-check]
  hyperchrom analyze DIR [--json OUTDIR] [--jobs N] ...
  hyperchrom gen (--fano | --flower K S | --helly-positive K | --random N M SMIN SMAX SEED)

``analyze`` exits 0 when q <= Delta_2 + 1 holds, 2 when it fails (the
instance is written out as a counterexample) and 1 on bad input. Given a
directory it analyses every ``*.json`` inside, in parallel, and exits with
the worst code seen.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import io, lab
from .core import two_section
from .dot import export_dot, incidence_dot
from .errors import HyperchromError, InfeasibleConfig, UnknownLabel, ValidationError
from .quotient import star_color_hypergraph
from .report import Analysis, analyze
from .symmetry import MAX_ORDER


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperchrom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyse one instance document")
    src = an.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?", help="instance document path, a directory of them, or - for stdin")
    src.add_argument("--inline", metavar="DOC", help="instance document given as a JSON string")
    an.add_argument("--json", metavar="PATH", help="write the report here instead of stdout")
    an.add_argument("--dot", metavar="DIR", help="write DOT renderings into this directory")
    an.add_argument("--seed", type=int, default=None, help="sample another minimal colouring")
    an.add_argument("--pivot", metavar="LABEL", help="override the pivot vertex")
    an.add_argument("--all-pivots", action="store_true",
                    help="also report every vertex of maximum two-section degree")
    an.add_argument("--oracle-check", action="store_true",
                    help="cross-check against brute-force oracles when small enough")
    an.add_argument("--max-order", type=int, default=MAX_ORDER,
                    help="skip the symmetry section for larger automorphism groups")
    an.add_argument("--jobs", type=int, default=None, help="worker processes for directory input")

    gen = sub.add_parser("gen", help="emit an instance document")
    which = gen.add_mutually_exclusive_group(required=True)
    which.add_argument("--fano", action="store_true")
    which.add_argument("--flower", nargs=2, type=int, metavar=("K", "S"))
    which.add_argument("--helly-positive", type=int, metavar="K")
    which.add_argument("--random", nargs=5, type=int, metavar=("N", "M", "SMIN", "SMAX", "SEED"))
    return parser


def write_dot(analysis: Analysis, directory: Path) -> list[Path]:
    H = analysis.hypergraph
    report = analysis.report
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    stem = H.name or "instance"

    def put(name: str, text: str):
        path = directory / name
        path.write_text(text)
        written.append(path)

    put(f"{stem}.2sec.dot", export_dot(two_section(H), f"{stem}.2sec"))
    hg = report.gamma_hypergraph
    put(
        f"{stem}.hgamma.dot",
        incidence_dot(
            None if hg is None else hg.hypergraph,
            f"{stem}.hgamma",
            None if hg is None else ["Gamma " + ",".join(map(str, cs)) for cs in hg.edge_colors],
        ),
    )
    for b in report.per_c0:
        put(f"{stem}.hstar.{b.c0}.dot",
            export_dot(star_color_hypergraph(b.gamma), f"{stem}.hstar.{b.c0}"))
    return written


def _load(args) -> "io.Hypergraph":
    if args.inline is not None:
        return io.parse_document(args.inline)
    if args.file == "-":
        return io.parse_document(sys.stdin.read())
    return _load_path(Path(args.file))


def _load_path(path: Path):
    try:
        text = path.read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    return io.parse_document(text)


def _run(H, args, json_path: Path | None) -> int:
    """Analyse one parsed instance, write its outputs and return the exit code."""
    try:
        pivot = H.index(args.pivot) if args.pivot is not None else None
    except UnknownLabel as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    analysis = analyze(H, seed=args.seed, pivot=pivot, all_pivots=args.all_pivots,
                       with_oracles=args.oracle_check, max_order=args.max_order)
    text = json.dumps(analysis.to_json(), indent=2) + "\n"
    direct = analysis.report.direct
    if json_path is not None:
        json_path.write_text(text)
        flag = " (equality)" if direct.equality else ""
        print(f"{H.name}: q={direct.q} Delta2+1={direct.bound} "
              f"{'holds' if direct.holds else 'FAILS'}{flag}")
    else:
        sys.stdout.write(text)
    if args.dot:
        write_dot(analysis, Path(args.dot))
    if not direct.holds:
        where = json_path.parent if json_path is not None else Path.cwd()
        path = lab.dump_counterexample(where, H, "q exceeds Delta_2 + 1",
                                       {"coloring": analysis.report.coloring.to_json()})
        print(f"counterexample written to {path}", file=sys.stderr)
        return 2
    return 0


def _run_file(path: Path, args, out_dir: Path) -> int:
    try:
        H = _load_path(path)
    except ValidationError as exc:
        print(f"error: {path.name}: {exc}", file=sys.stderr)
        return 1
    return _run(H, args, out_dir / f"{path.stem}.report.json")


def cmd_batch(args) -> int:
    directory = Path(args.file)
    out_dir = Path(args.json) if args.json else directory
    out_dir.mkdir(parents=True, exist_ok=True)
    files = sorted(p for p in directory.glob("*.json") if not p.name.endswith((".report.json", ".counterexample.json")))
    if not files:
        print(f"error: no instance documents in {directory}", file=sys.stderr)
        return 1
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        codes = list(pool.map(_run_file, files, [args] * len(files), [out_dir] * len(files)))
    # 1 (bad input) outranks 2 (counterexample) so broken batches are noticed first
    return 1 if 1 in codes else max(codes)


def cmd_analyze(args) -> int:
    if args.file not in (None, "-") and Path(args.file).is_dir():
        return cmd_batch(args)
    try:
        H = _load(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return _run(H, args, Path(args.json) if args.json else None)


def cmd_gen(args) -> int:
    try:
        if args.fano:
            H = lab.fano()
        elif args.flower:
            H = lab.flower(*args.flower)
        elif args.helly_positive is not None:
            H, _ = lab.helly_positive(args.helly_positive)
        else:
            H = lab.random_linear(lab.GeneratorConfig(*args.random))
    except (InfeasibleConfig, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(io.dumps(H))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        return cmd_gen(args)
    except HyperchromError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
