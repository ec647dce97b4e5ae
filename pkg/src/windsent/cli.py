"""Command-line interface.

Subcommands mirror the pipeline stages:
  analyze    - full run: load, clean, score, label, aggregate, write report
  preprocess - cleaning only, writes a JSONL of cleaned documents
  top-words  - full run, prints or writes the word rankings
  plot       - re-render the SVG charts from an existing report.json

Domain errors print a single machine-parsable line on stderr
(``ERROR <code>: <message>``) and exit nonzero.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import pipeline, report as report_mod, svgplots
from .config import ConfigError, build_run_config, parse_config_file
from .errors import WindsentError


def _add_common_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", help="corpus file (CSV or JSONL)")
    parser.add_argument("--format", choices=["csv", "jsonl"],
                        help="corpus format (default: inferred from the file suffix)")
    parser.add_argument("--config", help="flat key=value config file; flags win")
    parser.add_argument("--lenient", action="store_true", default=None,
                        help="skip malformed records instead of aborting "
                             "(writes skipped.jsonl)")
    parser.add_argument("--stopwords", help="stopword file override")
    parser.add_argument("--lemmas", help="lemma table override")
    parser.add_argument("--min-tokens", type=int, dest="min_tokens",
                        help="drop cleaned comments shorter than this many tokens "
                             "(default 3)")
    parser.add_argument("--stem", action="store_true", default=None, dest="stemming",
                        help="stem tokens after lemmatization (default off)")
    parser.add_argument("--no-lemmatize", action="store_false", default=None,
                        dest="lemmatization", help="disable lemmatization")


def _add_analysis_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lexicons", help="directory with valence.tsv, pattern.tsv, "
                                           "synset.tsv (default: bundled)")
    parser.add_argument("--mode", help="paper-faithful (default) or engine-native")
    parser.add_argument("--epsilon", type=float,
                        help="neutral band half-width for labeling (default 0)")
    parser.add_argument("--top-n", type=int, dest="top_n",
                        help="ranking length (default 30)")
    parser.add_argument("--bins", type=int, help="subjectivity histogram bins "
                                                 "(default 10)")
    parser.add_argument("--disambiguation",
                        help="synset sense choice: first-sense (default) or "
                             "average-senses")


def _flag_values(args: argparse.Namespace, keys: dict[str, str]) -> dict[str, object]:
    values: dict[str, object] = {}
    for attr, key in keys.items():
        value = getattr(args, attr, None)
        if value is not None:
            values[key] = value
    return values


_COMMON_KEYS = {
    "input": "input", "format": "format", "lenient": "lenient",
    "stopwords": "stopwords", "lemmas": "lemmas", "min_tokens": "min_tokens",
    "stemming": "stemming", "lemmatization": "lemmatization",
}
_ANALYSIS_KEYS = {
    "lexicons": "lexicons", "mode": "mode", "epsilon": "epsilon",
    "top_n": "top_n", "bins": "bins", "disambiguation": "disambiguation",
}


def _build_config(args: argparse.Namespace, keys: dict[str, str]):
    file_values = parse_config_file(args.config) if args.config else {}
    return build_run_config(file_values, _flag_values(args, keys))


def cmd_analyze(args: argparse.Namespace) -> int:
    keys = {**_COMMON_KEYS, **_ANALYSIS_KEYS, "out": "out", "plots": "plots"}
    config = _build_config(args, keys)
    result = pipeline.run_analyze(config)
    print(f"analyzed {result.corpus_size} comments "
          f"({result.kept_count} kept, {result.dropped_count} dropped) "
          f"-> {config.out_dir}")
    return 0


def cmd_preprocess(args: argparse.Namespace) -> int:
    keys = {**_COMMON_KEYS, "out": "out"}
    config = _build_config(args, keys)
    out_path = pipeline.run_preprocess_only(config, config.out_dir)
    print(f"wrote cleaned corpus -> {out_path}")
    return 0


def cmd_top_words(args: argparse.Namespace) -> int:
    keys = {**_COMMON_KEYS, **_ANALYSIS_KEYS, "out": "out"}
    file_values = parse_config_file(args.config) if args.config else {}
    flag_values = _flag_values(args, keys)
    to_stdout = "out" not in flag_values and "out" not in file_values
    if to_stdout:
        flag_values["out"] = "."  # analysis-only run, nothing is written there
    config = build_run_config(file_values, flag_values)
    result = pipeline.analyze_only(config)
    engines_wanted = [args.engine] if args.engine else sorted(result.rankings)
    sides_wanted = [args.side] if args.side else ["negative", "positive"]
    if to_stdout:
        for engine in engines_wanted:
            for side in sides_wanted:
                print(f"# {engine} {side}")
                print(report_mod.ranking_csv_text(result.rankings[engine][side]),
                      end="")
        return 0
    outdir = Path(config.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for engine in engines_wanted:
        for side in sides_wanted:
            path = outdir / f"ranking_{engine}_{side}.csv"
            path.write_text(report_mod.ranking_csv_text(result.rankings[engine][side]),
                            encoding="utf-8")
            print(f"wrote {path}")
    return 0


def cmd_plot(args: argparse.Namespace) -> int:
    result = report_mod.load_report(args.report)
    written = svgplots.render_report_plots(result, args.out)
    print(f"wrote {len(written)} SVG files -> {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="windsent",
        description="Deterministic lexicon-based opinion mining: clean a "
                    "social-media corpus, score it with three rule-based "
                    "sentiment engines, label by sign, and report "
                    "distributions, subjectivity, and top words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the full pipeline and write a report")
    _add_common_input_flags(p)
    _add_analysis_flags(p)
    p.add_argument("--out", help="output directory")
    p.add_argument("--plots", action="store_true", default=None,
                   help="also render the SVG charts")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("preprocess", help="clean the corpus only")
    _add_common_input_flags(p)
    p.add_argument("--out", help="output JSONL file for cleaned documents")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("top-words", help="print or write the word rankings")
    _add_common_input_flags(p)
    _add_analysis_flags(p)
    p.add_argument("--engine", choices=["pattern_avg", "synset", "valence_rule"],
                   help="restrict to one engine")
    p.add_argument("--side", choices=["negative", "positive"],
                   help="restrict to one side")
    p.add_argument("--out", help="directory for ranking CSVs (default: stdout)")
    p.set_defaults(func=cmd_top_words)

    p = sub.add_parser("plot", help="re-render SVG charts from a report.json")
    p.add_argument("--report", required=True, help="path to report.json")
    p.add_argument("--out", required=True, help="output directory for SVGs")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WindsentError as exc:
        print(f"ERROR {exc.code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
