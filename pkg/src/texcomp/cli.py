"""Command-line surface: analyze one document, batch a corpus, calibrate thresholds.

Exit codes: 0 success (batch counts as success when at least one document was
analyzable), 1 for I/O or input failures (unreadable file, bad manifest, bad
profile, unknown --order label), 2 when a document cannot be analyzed at all
(no tokens, or too few for the diversity measures; for batch and calibrate,
when every document fails).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .corpus import DocumentResult, analyze_document, summarize, trend_check
from .errors import ManifestError, ProfileError, TexcompError, UnknownLabelError
from .feedback import ThresholdProfile, calibrate, default_thresholds
from .lexical_diversity import MaasConfig
from .manifest import ManifestEntry, load_manifest
from .profiles import load_profile, save_profile
from .reports import (
    analyze_report,
    batch_report,
    per_document_csv,
    render_text_report,
    summary_csv,
)
from .segmentation import SegmentationConfig

PROFILE_ENV_VAR = "TEXCOMP_PROFILE"


def _add_measure_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("measure configuration")
    group.add_argument(
        "--long-word-min",
        type=int,
        default=7,
        metavar="CHARS",
        help="minimum character count of a long word (default: 7)",
    )
    group.add_argument(
        "--min-tokens-ld",
        type=int,
        default=100,
        metavar="N",
        help="token count under which diversity scores are flagged unreliable (default: 100)",
    )
    group.add_argument(
        "--no-case-fold",
        action="store_true",
        help="keep case distinctions when identifying word types",
    )
    group.add_argument(
        "--maas-log-base",
        type=float,
        default=10.0,
        metavar="BASE",
        help="logarithm base for the Maas measure (default: 10)",
    )
    group.add_argument(
        "--maas-scale",
        type=float,
        default=10_000.0,
        metavar="SCALE",
        help="output scale for the Maas measure (default: 10000)",
    )


def _add_profile_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--profile",
        metavar="PATH",
        help=f"threshold profile JSON (overrides ${PROFILE_ENV_VAR}; default thresholds otherwise)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="texcomp",
        description="Measure text complexity and emit threshold-based feedback.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze a single document")
    p_analyze.add_argument("file", help="UTF-8 text file to analyze")
    p_analyze.add_argument(
        "--format",
        choices=["text", "json"],
        default="text",
        help="text shows verdicts and message codes only; json includes raw scores",
    )
    _add_profile_flag(p_analyze)
    _add_measure_flags(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_batch = sub.add_parser("batch", help="analyze a manifest of documents")
    p_batch.add_argument("manifest", help="JSONL or CSV manifest of documents")
    p_batch.add_argument("--format", choices=["csv", "json"], default="csv")
    p_batch.add_argument(
        "--per-doc",
        action="store_true",
        help="also emit every per-document result",
    )
    p_batch.add_argument(
        "--order",
        metavar="L1,L2,...",
        help="subcorpus labels in ascending skill order; reports trend violations",
    )
    p_batch.add_argument(
        "--jobs",
        type=int,
        default=1,
        metavar="N",
        help="analyze documents with N worker threads (default: 1)",
    )
    _add_profile_flag(p_batch)
    _add_measure_flags(p_batch)
    p_batch.set_defaults(func=cmd_batch)

    p_calibrate = sub.add_parser(
        "calibrate", help="derive a threshold profile from a training manifest"
    )
    p_calibrate.add_argument("manifest", help="JSONL or CSV manifest of training documents")
    p_calibrate.add_argument("--out", required=True, metavar="PATH", help="profile output path")
    p_calibrate.add_argument("--p-low", type=float, default=5.0, metavar="P")
    p_calibrate.add_argument("--p-high", type=float, default=95.0, metavar="P")
    p_calibrate.add_argument(
        "--jobs", type=int, default=1, metavar="N", help="worker threads (default: 1)"
    )
    _add_measure_flags(p_calibrate)
    p_calibrate.set_defaults(func=cmd_calibrate)

    return parser


def _configs(args) -> tuple[SegmentationConfig, MaasConfig]:
    seg = SegmentationConfig(
        long_word_min_chars=args.long_word_min,
        min_tokens_for_ld=args.min_tokens_ld,
        case_fold=not args.no_case_fold,
    )
    maas = MaasConfig(log_base=args.maas_log_base, scale=args.maas_scale)
    return seg, maas


def _resolve_profile(args) -> ThresholdProfile:
    path = getattr(args, "profile", None) or os.environ.get(PROFILE_ENV_VAR)
    if path:
        return load_profile(path)
    return default_thresholds()


def cmd_analyze(args) -> int:
    try:
        profile = _resolve_profile(args)
    except ProfileError as err:
        print(f"texcomp: {err}", file=sys.stderr)
        return 1
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as err:
        print(f"texcomp: cannot read {args.file}: {err}", file=sys.stderr)
        return 1
    seg_config, maas_config = _configs(args)
    try:
        result = analyze_document(
            text,
            document_id=args.file,
            seg_config=seg_config,
            maas_config=maas_config,
            profile=profile,
        )
    except TexcompError as err:
        print(f"texcomp: cannot analyze {args.file}: {err}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(analyze_report(result, profile), indent=2))
    else:
        sys.stdout.write(render_text_report(result.feedback))
    return 0


def _analyze_entries(
    entries: list[ManifestEntry],
    seg_config: SegmentationConfig,
    maas_config: MaasConfig,
    profile: ThresholdProfile,
    jobs: int,
) -> tuple[list[DocumentResult], list[tuple[str, str]]]:
    """Analyze every manifest entry, collecting per-file failures.

    Results and errors come back sorted by document id, so output is
    identical whatever the worker count.
    """

    def work(entry: ManifestEntry) -> tuple[str, DocumentResult | None, str | None]:
        try:
            text = Path(entry.path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as err:
            return entry.id, None, f"cannot read {entry.path}: {err}"
        try:
            result = analyze_document(
                text,
                document_id=entry.id,
                subcorpus=entry.subcorpus,
                seg_config=seg_config,
                maas_config=maas_config,
                profile=profile,
            )
        except TexcompError as err:
            return entry.id, None, str(err)
        return entry.id, result, None

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(work, entries))
    else:
        outcomes = [work(entry) for entry in entries]

    results = sorted(
        (result for _, result, _ in outcomes if result is not None),
        key=lambda r: r.document_id,
    )
    errors = sorted(
        ((doc_id, message) for doc_id, _, message in outcomes if message is not None),
        key=lambda pair: pair[0],
    )
    return results, errors


def cmd_batch(args) -> int:
    try:
        profile = _resolve_profile(args)
        entries = load_manifest(args.manifest)
    except (ManifestError, ProfileError) as err:
        print(f"texcomp: {err}", file=sys.stderr)
        return 1
    if not entries:
        print(f"texcomp: manifest {args.manifest} has no entries", file=sys.stderr)
        return 1
    seg_config, maas_config = _configs(args)
    results, errors = _analyze_entries(entries, seg_config, maas_config, profile, args.jobs)
    if not results:
        print("texcomp: no document could be analyzed", file=sys.stderr)
        for doc_id, message in errors:
            print(f"texcomp: {doc_id}: {message}", file=sys.stderr)
        return 2

    summary = summarize(results)
    violations = None
    if args.order:
        labels = [label.strip() for label in args.order.split(",") if label.strip()]
        try:
            violations = trend_check(summary, labels)
        except UnknownLabelError as err:
            print(f"texcomp: {err}", file=sys.stderr)
            return 1

    if args.format == "json":
        report = batch_report(
            summary,
            errors,
            violations=violations,
            documents=results if args.per_doc else None,
        )
        print(json.dumps(report, indent=2))
    else:
        sys.stdout.write(summary_csv(summary))
        if args.per_doc:
            sys.stdout.write("\n")
            sys.stdout.write(per_document_csv(results))
        for doc_id, message in errors:
            print(f"texcomp: {doc_id}: {message}", file=sys.stderr)
        if violations:
            for v in violations:
                print(
                    f"texcomp: trend violation: {v.measure} moves from "
                    f"{v.from_value} ({v.from_label}) to {v.to_value} ({v.to_label})",
                    file=sys.stderr,
                )
    return 0


def cmd_calibrate(args) -> int:
    try:
        entries = load_manifest(args.manifest)
    except ManifestError as err:
        print(f"texcomp: {err}", file=sys.stderr)
        return 1
    if not entries:
        print(f"texcomp: manifest {args.manifest} has no entries", file=sys.stderr)
        return 1
    seg_config, maas_config = _configs(args)
    results, errors = _analyze_entries(
        entries, seg_config, maas_config, default_thresholds(), args.jobs
    )
    for doc_id, message in errors:
        print(f"texcomp: {doc_id}: {message}", file=sys.stderr)
    if not results:
        print("texcomp: no training document could be analyzed", file=sys.stderr)
        return 2
    try:
        profile = calibrate(
            [(r.scores.tcld, r.scores.tcr) for r in results],
            p_low=args.p_low,
            p_high=args.p_high,
        )
    except TexcompError as err:
        print(f"texcomp: {err}", file=sys.stderr)
        return 1
    save_profile(profile, args.out)
    print(f"calibrated profile written to {args.out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
