"""``wsd-kit`` command line: extract, train, classify, evaluate, freq, demo.

Exit codes: 0 success, 1 data or validation error, 2 I/O or usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import tempfile
from pathlib import Path
from typing import List, Optional

from . import corpus, evaluation, naive_bayes, senses, stopwords
from .errors import WsdError

log = logging.getLogger("wsd_kit")

DATA = Path(__file__).parent / "data"


class UsageError(Exception):
    pass


def _write_jsonl(path, records) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")


def _write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _require_files(*paths) -> None:
    for p in paths:
        if p is not None and not Path(p).exists():
            raise FileNotFoundError(2, "no such file or directory", str(p))


def run_extract(args, out) -> int:
    _require_files(args.corpus, args.stopwords)
    found = corpus.extract_target_sentences(args.corpus, args.lemma)
    _write_jsonl(args.out, ({"id": s.id, "text": s.text, "category": s.category,
                             "index": s.index, "source": s.source} for s in found))
    if not found:
        log.warning("no sentences contain %r", args.lemma)
    print(f"extracted {len(found)} sentences", file=out)
    return 0


def run_train(args, out) -> int:
    if args.cap < 1:
        raise UsageError("--cap must be >= 1")
    _require_files(args.train, args.inventory, args.stopwords)
    inventory = senses.load_sense_inventory(args.inventory)
    lex = stopwords.load_stopword_list(args.stopwords)
    labeled = senses.load_labeled_sentences(args.train)
    ts = senses.build_training_set(labeled, inventory.classes, lex,
                                   cap=args.cap, seed=args.seed, lemma=inventory.lemma)
    model = naive_bayes.train(ts)
    naive_bayes.save_model(model, args.out)
    print(f"|V| = {model.vocab_size}", file=out)
    for c in model.class_ids:
        print(f"class {c}: sentences={model.class_sentence_counts[c]} "
              f"tokens={model.class_token_totals[c]} prior={model.priors[c]:.4f}", file=out)
    if ts.rejected:
        print(f"rejected {ts.rejected} sentences empty after stop-word removal", file=out)
    return 0


def run_classify(args, out) -> int:
    _require_files(args.model, args.inp, args.stopwords)
    model = naive_bayes.load_model(args.model)
    lex = stopwords.load_stopword_list(args.stopwords)
    records = corpus.read_jsonl(args.inp)
    predictions = []
    for n, rec in enumerate(records):
        if not isinstance(rec, dict) or "text" not in rec:
            raise WsdError(f"{args.inp}: record {n + 1} has no 'text'")
        tokens = stopwords.filter_stopwords(
            corpus.tokenize(corpus.normalize_text(rec["text"])), lex)
        result = naive_bayes.classify(model, tokens)
        predictions.append({
            "id": str(rec.get("id", n)),
            "class_id": result.predicted_class,
            "log_scores": result.log_scores,
            "used_tokens": len(result.used_tokens),
            "oov": len(result.skipped_oov),
            "low_evidence": result.low_evidence,
            "tie": result.tie,
        })
    _write_jsonl(args.out, predictions)
    low = sum(p["low_evidence"] for p in predictions)
    print(f"classified {len(predictions)} sentences ({low} decided by priors alone)", file=out)
    return 0


def run_evaluate(args, out) -> int:
    _require_files(args.pred, args.gold, args.categories)
    preds = evaluation.load_predictions(args.pred)
    gold = evaluation.load_gold(args.gold)
    extra = []
    if args.categories:
        extra = [l.strip() for l in corpus.read_text(args.categories).splitlines()
                 if l.strip()]
    if args.classes:
        class_ids = tuple(args.classes.split(","))
    else:
        class_ids = evaluation.prediction_class_order(args.pred)
    report = evaluation.evaluate(preds, gold, class_ids, extra)
    _write_text(args.out_csv, evaluation.render_csv(report))
    _write_text(args.out_table, evaluation.render_table(report))
    print(evaluation.overall_line(report), file=out)
    return 0


def run_freq(args, out) -> int:
    profile = stopwords.frequency_profile(args.corpus)
    text = stopwords.format_profile(profile, args.top)
    if text:
        print(text, file=out)
    return 0


def run_demo(args, out) -> int:
    """Extract, train, classify and evaluate on the bundled মাথা fixture."""
    workdir = Path(args.workdir) if args.workdir else Path(tempfile.mkdtemp(prefix="wsd-demo-"))
    workdir.mkdir(parents=True, exist_ok=True)
    sw = str(DATA / "stopwords_bn.txt")
    steps = [
        ["extract", "--corpus", str(DATA / "corpus"), "--lemma", "মাথা",
         "--stopwords", sw, "--out", str(workdir / "sentences.jsonl")],
        ["train", "--train", str(DATA / "matha_train.jsonl"),
         "--inventory", str(DATA / "matha_inventory.json"), "--stopwords", sw,
         "--cap", str(args.cap), "--seed", str(args.seed),
         "--out", str(workdir / "model.json")],
        ["classify", "--model", str(workdir / "model.json"),
         "--in", str(workdir / "sentences.jsonl"), "--stopwords", sw,
         "--out", str(workdir / "predictions.jsonl")],
        ["evaluate", "--pred", str(workdir / "predictions.jsonl"),
         "--gold", str(DATA / "matha_gold.jsonl"),
         "--out-csv", str(workdir / "report.csv"),
         "--out-table", str(workdir / "report.txt")],
    ]
    for argv in steps:
        print(f"$ wsd-kit {argv[0]}", file=out)
        code = dispatch(build_parser().parse_args(argv), out)
        if code:
            return code
    print((workdir / "report.txt").read_text(encoding="utf-8"), end="", file=out)
    print(f"outputs in {workdir}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wsd-kit",
        description="Naive Bayes sense classification of sentences around an ambiguous lemma.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="extract sentences containing a target lemma")
    p.add_argument("--corpus", required=True, help="corpus root: <root>/<category>/*.txt")
    p.add_argument("--lemma", required=True)
    p.add_argument("--stopwords", help="stop-word list (checked, not applied)")
    p.add_argument("--out", required=True, help="JSON Lines output")
    p.set_defaults(func=run_extract)

    p = sub.add_parser("train", help="train a Naive Bayes model")
    p.add_argument("--train", required=True, help="labeled sentences (JSON Lines)")
    p.add_argument("--inventory", required=True, help="sense inventory (JSON)")
    p.add_argument("--stopwords", required=True)
    p.add_argument("--cap", type=int, default=senses.DEFAULT_CAP,
                   help="maximum sentences per class (default: %(default)s)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="model file (JSON)")
    p.set_defaults(func=run_train)

    p = sub.add_parser("classify", help="predict sense classes for sentences")
    p.add_argument("--model", required=True)
    p.add_argument("--in", dest="inp", required=True, help="sentences (JSON Lines)")
    p.add_argument("--stopwords", required=True)
    p.add_argument("--out", required=True, help="predictions (JSON Lines)")
    p.set_defaults(func=run_classify)

    p = sub.add_parser("evaluate", help="per-category P/R/FM report")
    p.add_argument("--pred", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--out-csv", required=True)
    p.add_argument("--out-table", required=True)
    p.add_argument("--classes", help="comma-separated class order for the report columns")
    p.add_argument("--categories", help="file of category names to report even when empty")
    p.set_defaults(func=run_evaluate)

    p = sub.add_parser("freq", help="token frequency profile of a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--top", type=int, default=20)
    p.set_defaults(func=run_freq)

    p = sub.add_parser("demo", help="run the bundled fixture pipeline end to end")
    p.add_argument("--workdir", help="output directory (default: a fresh temp dir)")
    p.add_argument("--cap", type=int, default=senses.DEFAULT_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=run_demo)
    return parser


def dispatch(args, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except (UsageError, OSError) as exc:
        print(f"wsd-kit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except WsdError as exc:
        print(f"wsd-kit {args.command}: error: {exc}", file=sys.stderr)
        return 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    return dispatch(args)


if __name__ == "__main__":
    sys.exit(main())
