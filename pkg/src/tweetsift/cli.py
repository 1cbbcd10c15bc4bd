"""Command line front end. One subcommand per pipeline capability.

All outputs are tab-separated text. Exit code 0 on success, 1 with a
diagnostic on stderr for expected failures, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import botdetect, corpus, hedonometrics, pipeline, synthkit, topics
from .errors import TweetSiftError


def _write_lines(path: str | None, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_config(args) -> pipeline.PipelineConfig:
    if getattr(args, "config", None):
        return pipeline.PipelineConfig.from_file(args.config)
    return pipeline.PipelineConfig()


def _cmd_classify(args) -> int:
    config = _load_config(args)
    if args.box:
        config.box = args.box
    if args.marketing_keywords:
        config.marketing_keywords = args.marketing_keywords
    report, labels = pipeline.run(args.corpus, config)
    _write_lines(args.labels_out, pipeline.label_lines(labels))
    _write_lines(args.report_out, pipeline.report_lines(report))
    return 0


def _lexicon_from(args) -> hedonometrics.HappinessLexicon:
    config = _load_config(args)
    path = args.lexicon or config.lexicon
    if not path:
        raise TweetSiftError("no lexicon given (use --lexicon or config key 'lexicon')")
    lex = hedonometrics.load_lexicon(path)
    if not args.no_neutral_filter:
        lo = config.neutral_lo if args.neutral_lo is None else args.neutral_lo
        hi = config.neutral_hi if args.neutral_hi is None else args.neutral_hi
        lex = hedonometrics.neutral_filter(lex, lo, hi)
    return lex


def _cmd_hedonometer(args) -> int:
    lex = _lexicon_from(args)
    records, _ = corpus.read_corpus(args.corpus)
    entries = []
    for r in records:
        local_ts, _ = corpus.localize(r.created_at_utc, r.utc_offset)
        entries.append((local_ts, corpus.tokenize(r.text)))
    series = hedonometrics.happiness_series(entries, lex, bin_by=args.bin)
    _write_lines(args.out, hedonometrics.series_table_lines(series))
    return 0


def _distribution(path) -> hedonometrics.FrequencyDistribution:
    records, _ = corpus.read_corpus(path)
    tokens: list[str] = []
    for r in records:
        tokens.extend(corpus.tokenize(r.text))
    return hedonometrics.FrequencyDistribution.from_tokens(tokens)


def _cmd_shift(args) -> int:
    lex = _lexicon_from(args)
    exclude = [w for w in (args.exclude or "").split(",") if w]
    rows = hedonometrics.word_shift(
        _distribution(args.ref_corpus),
        _distribution(args.comp_corpus),
        lex,
        top_k=args.top_k,
        exclude=exclude,
    )
    _write_lines(args.out, hedonometrics.shift_table_lines(rows))
    return 0


def _topic_definitions(args) -> list[topics.TopicDefinition]:
    config = _load_config(args)
    named = dict(config.topics)
    for spec_arg in args.topic_file or ():
        if "=" not in spec_arg:
            raise TweetSiftError(f"--topic-file expects NAME=PATH, got {spec_arg!r}")
        name, path = spec_arg.split("=", 1)
        named[name] = path
    if not named:
        return topics.default_topics()
    return [
        topics.load_topic_file(path, name=name, scan_urls=(name == "commercial"))
        for name, path in sorted(named.items())
    ]


def _labeled_entries(corpus_path, labels_path):
    records, _ = corpus.read_corpus(corpus_path)
    label_of = pipeline.read_label_file(labels_path)
    entries = []
    for r in records:
        label = label_of.get(r.tweet_id)
        if label is None:
            raise TweetSiftError(f"label file has no entry for tweet {r.tweet_id}")
        entries.append((pipeline.local_year(r), r, label == botdetect.AUTOMATED))
    return entries


def _cmd_topics(args) -> int:
    entries = _labeled_entries(args.corpus, args.labels)
    tallies = topics.tally(entries, _topic_definitions(args))
    _write_lines(args.out, topics.tally_table_lines(tallies))
    return 0


def _cmd_sample(args) -> int:
    entries = _labeled_entries(args.corpus, args.labels)
    definitions = {t.name: t for t in _topic_definitions(args)}
    if args.topic not in definitions:
        raise TweetSiftError(f"unknown topic {args.topic!r}; have {sorted(definitions)}")
    topic = definitions[args.topic]
    matching = [r for _, r, automated in entries if automated and topics.classify_topic(r, topic)]
    seed = _load_config(args).seed if args.seed is None else args.seed
    sampled = topics.relevance_sample(matching, args.n, seed)
    lines = ["tweet_id\taccount_id\tyear\ttext"]
    for r in sampled:
        lines.append(
            f"{r.tweet_id}\t{r.account_id}\t{pipeline.local_year(r)}\t"
            + r.text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")
        )
    _write_lines(args.out, lines)
    return 0


def _cmd_synth(args) -> int:
    if args.kind == "mixed":
        per_kind = max(1, args.accounts // len(synthkit.KINDS))
        kinds = [(kind, per_kind) for kind in synthkit.KINDS]
    else:
        kinds = [(args.kind, args.accounts)]
    records, labels = synthkit.generate_corpus(kinds, n_tweets=args.tweets, seed=args.seed)
    corpus.write_corpus(args.out, records)
    if args.account_labels_out:
        lines = ["account_id\tlabel"]
        lines.extend(f"{aid}\t{label}" for aid, label in sorted(labels.items()))
        _write_lines(args.account_labels_out, lines)
    return 0


def _read_account_labels(path) -> dict[str, str]:
    labels = {}
    with open(path, "r", encoding="utf-8") as handle:
        header = handle.readline()
        if header.strip() != "account_id\tlabel":
            raise TweetSiftError(f"{path}: not an account label file (bad header)")
        for line_no, raw in enumerate(handle, 2):
            line = raw.strip()
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise TweetSiftError(f"{path} line {line_no}: expected 2 columns")
            labels[parts[0]] = parts[1]
    return labels


def _cmd_calibrate(args) -> int:
    records, _ = corpus.read_corpus(args.corpus)
    truth = _read_account_labels(args.account_labels)
    labeled = []
    for sample in corpus.group_by_account(records):
        label = truth.get(sample.account_id)
        if label is None:
            continue
        features = botdetect.extract_features(sample)
        if features is not None:
            labeled.append((features, label))
    box = botdetect.calibrate(labeled, fpr_budget=args.fpr_budget)
    box.save(args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweetsift",
        description="Classify tweet corpora as automated/organic, score sentiment, tally topics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="label every tweet and write a corpus report")
    p.add_argument("--corpus", required=True)
    p.add_argument("--box", help="classifier box table (overrides config)")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--marketing-keywords", help="marketing keyword file (overrides config)")
    p.add_argument("--labels-out", default="labels.tsv")
    p.add_argument("--report-out", default="report.tsv")
    p.set_defaults(func=_cmd_classify)

    def add_lexicon_flags(p):
        p.add_argument("--lexicon")
        p.add_argument("--config", help="key=value config file")
        p.add_argument("--no-neutral-filter", action="store_true")
        p.add_argument("--neutral-lo", type=float, default=None, help="default 4.0")
        p.add_argument("--neutral-hi", type=float, default=None, help="default 6.0")

    p = sub.add_parser("hedonometer", help="happiness time series per calendar bin")
    p.add_argument("--corpus", required=True)
    add_lexicon_flags(p)
    p.add_argument("--bin", choices=("day", "month"), default="month")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_hedonometer)

    p = sub.add_parser("shift", help="word-shift table between two corpora")
    p.add_argument("--ref-corpus", required=True)
    p.add_argument("--comp-corpus", required=True)
    add_lexicon_flags(p)
    p.add_argument("--top-k", type=int, default=50)
    p.add_argument("--exclude", help="comma-separated words to leave out")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_shift)

    p = sub.add_parser("topics", help="subcategory tallies over automated tweets")
    p.add_argument("--corpus", required=True)
    p.add_argument("--labels", required=True, help="label file from 'classify'")
    p.add_argument("--config")
    p.add_argument("--topic-file", action="append", metavar="NAME=PATH")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_topics)

    p = sub.add_parser("sample", help="export a seeded random sample for hand coding")
    p.add_argument("--corpus", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--config")
    p.add_argument("--topic-file", action="append", metavar="NAME=PATH")
    p.add_argument("--topic", required=True)
    p.add_argument("--n", type=int, default=500)
    p.add_argument("--seed", type=int, default=None, help="default from config (13)")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("synth", help="generate a labeled synthetic corpus")
    p.add_argument("--kind", choices=synthkit.KINDS + ("mixed",), required=True)
    p.add_argument("--accounts", type=int, default=30)
    p.add_argument("--tweets", type=int, default=100)
    p.add_argument("--seed", type=int, default=13)
    p.add_argument("--out", required=True)
    p.add_argument("--account-labels-out")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("calibrate", help="fit per-bin organic boxes from labeled accounts")
    p.add_argument("--corpus", required=True)
    p.add_argument("--account-labels", required=True)
    p.add_argument("--fpr-budget", type=float, default=botdetect.DEFAULT_FPR_BUDGET)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_calibrate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TweetSiftError as exc:
        print(f"tweetsift: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"tweetsift: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
