"""Batch command-line interface.

Commands: list, construct, verify, export.  Reports go to standard output
and are byte-identical across runs for identical inputs (timings, which
vary, go to standard error); exports go to files.  Exit codes: 0 all checks
passed, 1 a check failed, 2 usage or file error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional, Sequence

from . import hyperbolic, serialize
from .exact import NonDefiniteError
from .leech import ConstructionError, certify_leech, construct_leech, corollary_zero
from .niemeier import GlueDataError, assemble_niemeier, load_glue_data

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _labels():
    return [g.label for g in load_glue_data()]


def _assemble(label: str):
    for g in load_glue_data():
        if g.label == label:
            return assemble_niemeier(g)
    raise KeyError(label)


def _timing(msg: str, t0: float) -> None:
    print(f"[{msg}: {time.time() - t0:.1f}s]", file=sys.stderr)


def cmd_list(args) -> int:
    for g in load_glue_data():
        comps = " ".join(t.label for t in g.components)
        print(f"{g.label:10s} components: {comps}  glue generators: {len(g.glue)}")
    return EXIT_OK


def _select_words(n, selector: str):
    if selector == "all":
        return list(range(len(n.code)))
    try:
        idx = int(selector)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad codeword selector {selector!r}")
    if not 0 <= idx < len(n.code):
        raise argparse.ArgumentTypeError(
            f"codeword index {idx} out of range 0..{len(n.code) - 1}"
        )
    return [idx]


def _export_one(built, idx: int, fmt: str, out_dir: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    stem = built.label.replace("^", "x")
    if fmt == "gap":
        path = os.path.join(out_dir, f"{stem}_g{idx}.g")
        with open(path, "w") as fh:
            fh.write(serialize.gap_text(built))
    else:
        path = os.path.join(out_dir, f"{stem}_g{idx}.json")
        serialize.save_json(serialize.export_constructed(built), path)
    return path


def cmd_construct(args) -> int:
    try:
        n = _assemble(args.label)
    except KeyError:
        print(f"unknown label {args.label!r}; valid labels: {' '.join(_labels())}")
        return EXIT_USAGE
    t0 = time.time()
    indices = _select_words(n, args.codeword)
    failed = False
    outputs = []
    for idx in indices:
        gamma = n.code[idx]
        try:
            built = construct_leech(n, gamma)
            verdict = certify_leech(built.lattice(), deep=args.deep)
            ok = verdict.is_leech
            extra = ""
            if args.deep:
                extra = f" norm4={verdict.norm4_count}"
            if args.oracle:
                hyperbolic.oracle_agreement(n, gamma)
                extra += " oracle=pass"
            print(
                f"construct {n.label} codeword {idx}: "
                f"{'pass' if ok else 'FAIL'} a={built.a_gamma} "
                f"index={built.index}{extra}"
            )
            if not ok:
                failed = True
                continue
            if args.out is not None:
                outputs.append(_export_one(built, idx, args.format, args.out))
        except (ConstructionError, hyperbolic.HyperbolicCheckError) as exc:
            print(f"construct {n.label} codeword {idx}: FAIL {exc}")
            failed = True
    if args.corollary:
        try:
            corollary_zero(n)
            print(f"corollary {n.label}: pass")
        except ConstructionError as exc:
            print(f"corollary {n.label}: FAIL {exc}")
            failed = True
    for path in outputs:
        print(f"wrote {path}")
    _timing("construct", t0)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_verify(args) -> int:
    try:
        doc = serialize.load_json(args.path)
        if args.deephole:
            d = serialize.import_deep_hole(doc)
        else:
            built = serialize.import_constructed(doc)
    except serialize.FormatError as exc:
        print(f"error: {exc}")
        return EXIT_USAGE
    t0 = time.time()
    if args.deephole:
        report = hyperbolic.deep_hole_checks(d)
        if not report.is_deep_hole:
            print(f"verify {args.path}: FAIL not a deep hole "
                  f"(min distance^2 = {report.min_distance_sq})")
            _timing("verify", t0)
            return EXIT_CHECK_FAILED
        print(
            f"verify {args.path}: {'pass' if report.passed else 'FAIL'} "
            f"type={report.type_label} h={report.h} "
            f"|Xi0|={report.xi0_count} |Xi1|={report.xi1_count} "
            f"primitive={report.hc_primitive} msum={report.msum_ok} "
            f"theta={report.theta_unique_ok}"
        )
        _timing("verify", t0)
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    try:
        verdict = certify_leech(built.lattice(), deep=args.deep)
    except NonDefiniteError as exc:
        print(f"verify {args.path}: FAIL {exc}")
        _timing("verify", t0)
        return EXIT_CHECK_FAILED
    extra = f" norm4={verdict.norm4_count}" if args.deep else ""
    print(
        f"verify {args.path}: {'pass' if verdict.is_leech else 'FAIL'} "
        f"even={verdict.is_even} unimodular={verdict.is_unimodular} "
        f"rootless={verdict.is_rootless}{extra}"
    )
    _timing("verify", t0)
    return EXIT_OK if verdict.is_leech else EXIT_CHECK_FAILED


def cmd_export(args) -> int:
    try:
        n = _assemble(args.label)
    except KeyError:
        print(f"unknown label {args.label!r}; valid labels: {' '.join(_labels())}")
        return EXIT_USAGE
    indices = _select_words(n, args.codeword)
    for idx in indices:
        built = construct_leech(n, n.code[idx])
        path = _export_one(built, idx, args.format, args.out)
        print(f"wrote {path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="leechkit",
        description="Exact construction and certification of the rootless "
        "rank-24 even unimodular lattice from glued root lattices.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("list", help="list the 23 bundled lattice types")
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("construct", help="build, certify and export lattices")
    sp.add_argument("label")
    sp.add_argument("--codeword", default="0", help="index or 'all'")
    sp.add_argument("--oracle", action="store_true",
                    help="also run the rank-26 complement cross-check")
    sp.add_argument("--corollary", action="store_true",
                    help="also check the closed-form zero-codeword equivalence")
    sp.add_argument("--deep", action="store_true",
                    help="also count norm-4 vectors (slow)")
    sp.add_argument("--format", choices=("json", "gap"), default="json")
    sp.add_argument("--out", default=None, help="export directory")
    sp.add_argument("--jobs", type=int, default=1, help="worker cap")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="re-certify an exported file")
    sp.add_argument("path")
    sp.add_argument("--deep", action="store_true")
    sp.add_argument("--deephole", action="store_true",
                    help="treat the file as a deep-hole input")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="construct and write without certifying")
    sp.add_argument("label")
    sp.add_argument("--codeword", default="0")
    sp.add_argument("--format", choices=("json", "gap"), default="json")
    sp.add_argument("--out", default=".", help="export directory")
    sp.set_defaults(func=cmd_export)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}")
        return EXIT_USAGE
    except (GlueDataError, OSError) as exc:
        print(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
