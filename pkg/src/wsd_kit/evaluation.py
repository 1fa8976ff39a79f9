"""Per-category Precision / Recall / F-Measure reporting.

Precision here is the response rate (sentences the system labeled over all
sentences), Recall is the share of sentences whose label matches the human
one. Both are kept as exact fractions and only rounded when rendered.
"""
from __future__ import annotations

import csv
import io
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .corpus import read_jsonl, read_text
from .errors import FormatError, IntegrityError

OVERALL = "OVER ALL"


@dataclass
class CategoryCounts:
    category: str
    class_ids: Tuple[str, ...]
    right: Counter = field(default_factory=Counter)
    wrong: Counter = field(default_factory=Counter)
    responded: int = 0

    @property
    def total_right(self) -> int:
        return sum(self.right.values())

    @property
    def total_wrong(self) -> int:
        return sum(self.wrong.values())

    @property
    def total(self) -> int:
        return self.total_right + self.total_wrong


@dataclass(frozen=True)
class CategoryMetrics:
    category: str
    total: int
    per_class_right: Dict[str, int]
    per_class_wrong: Dict[str, int]
    total_right: int
    total_wrong: int
    responded: int
    precision: Optional[Fraction]
    recall: Optional[Fraction]
    f_measure: Optional[Fraction]

    def class_accuracy(self, class_id: str) -> Optional[Fraction]:
        seen = self.per_class_right.get(class_id, 0) + self.per_class_wrong.get(class_id, 0)
        return Fraction(self.per_class_right.get(class_id, 0), seen) if seen else None


@dataclass(frozen=True)
class EvaluationReport:
    class_ids: Tuple[str, ...]
    rows: Tuple[CategoryMetrics, ...]
    overall: CategoryMetrics


def f_measure(p, r):
    if p + r == 0:
        return Fraction(0) if isinstance(p, Fraction) else 0.0
    return 2 * p * r / (p + r)


def score(predictions: Iterable[Tuple[str, str]],
          gold: Iterable[Tuple[str, str, str]],
          class_ids: Sequence[str] = (),
          categories: Iterable[str] = ()) -> Dict[str, CategoryCounts]:
    """Bucket right/wrong counts by gold category and gold class.

    Gold sentences without a prediction count as wrong and as not responded.
    ``categories`` adds rows that have no gold sentences at all.
    """
    gold_index: Dict[str, Tuple[str, str]] = {}
    for sid, class_id, category in gold:
        if sid in gold_index:
            raise IntegrityError(f"duplicate gold id {sid!r}")
        gold_index[sid] = (class_id, category)

    predicted: Dict[str, str] = {}
    unknown, dupes = [], []
    for sid, class_id in predictions:
        if sid not in gold_index:
            unknown.append(sid)
        elif sid in predicted:
            dupes.append(sid)
        predicted[sid] = class_id
    if unknown:
        raise IntegrityError(f"predictions for unknown ids: {', '.join(map(str, unknown))}")
    if dupes:
        raise IntegrityError(f"duplicate prediction ids: {', '.join(map(str, dupes))}")

    order = list(class_ids)
    for class_id, _ in gold_index.values():
        if class_id not in order:
            order.append(class_id)
    order = tuple(order)

    table: Dict[str, CategoryCounts] = {c: CategoryCounts(c, order) for c in categories}
    for sid, (class_id, category) in gold_index.items():
        row = table.setdefault(category, CategoryCounts(category, order))
        guess = predicted.get(sid)
        if guess is not None:
            row.responded += 1
        if guess == class_id:
            row.right[class_id] += 1
        else:
            row.wrong[class_id] += 1
    return table


def compute_metrics(counts: CategoryCounts, responded: Optional[int] = None) -> CategoryMetrics:
    responded = counts.responded if responded is None else responded
    values = [responded, *counts.right.values(), *counts.wrong.values()]
    if any(v < 0 for v in values):
        raise ValueError(f"negative count in category {counts.category!r}")
    total = counts.total
    if responded > total:
        raise ValueError(f"responded ({responded}) exceeds total ({total}) "
                         f"in category {counts.category!r}")
    if total:
        p = Fraction(responded, total)
        r = Fraction(counts.total_right, total)
        fm = f_measure(p, r)
    else:
        p = r = fm = None
    return CategoryMetrics(
        category=counts.category,
        total=total,
        per_class_right={c: counts.right.get(c, 0) for c in counts.class_ids},
        per_class_wrong={c: counts.wrong.get(c, 0) for c in counts.class_ids},
        total_right=counts.total_right,
        total_wrong=counts.total_wrong,
        responded=responded,
        precision=p,
        recall=r,
        f_measure=fm,
    )


def build_report(metrics: Sequence[CategoryMetrics],
                 class_ids: Optional[Sequence[str]] = None) -> EvaluationReport:
    names = [m.category for m in metrics]
    if len(set(names)) != len(names):
        raise ValueError("category names must be unique")
    if class_ids is None:
        class_ids = list(metrics[0].per_class_right) if metrics else []
    class_ids = tuple(class_ids)
    rows = tuple(sorted(metrics, key=lambda m: m.category))
    pooled = CategoryCounts(OVERALL, class_ids)
    for m in rows:
        pooled.right.update(m.per_class_right)
        pooled.wrong.update(m.per_class_wrong)
        pooled.responded += m.responded
    return EvaluationReport(class_ids, rows, compute_metrics(pooled))


def round_half_away(x, places: int = 2) -> Fraction:
    """Round to ``places`` decimals, halves away from zero (0.125 -> 0.13)."""
    x = Fraction(x)
    scale = 10 ** places
    magnitude = math.floor(abs(x) * scale + Fraction(1, 2))
    return Fraction(magnitude if x >= 0 else -magnitude, scale)


def fmt(x, places: int = 2) -> str:
    if x is None:
        return "NA"
    r = round_half_away(x, places)
    sign = "-" if r < 0 else ""
    units = abs(r.numerator) * (10 ** places) // r.denominator
    whole, frac = divmod(units, 10 ** places)
    return f"{sign}{whole}.{frac:0{places}d}" if places else f"{sign}{whole}"


def csv_header(class_ids: Sequence[str]) -> List[str]:
    cols = ["category", "total"]
    for c in class_ids:
        cols += [f"right_{c}", f"wrong_{c}"]
    return cols + ["total_right", "total_wrong", "P", "R", "FM"]


def _cells(m: CategoryMetrics, class_ids: Sequence[str]) -> List[str]:
    cells = [m.category, str(m.total)]
    for c in class_ids:
        cells += [str(m.per_class_right.get(c, 0)), str(m.per_class_wrong.get(c, 0))]
    return cells + [str(m.total_right), str(m.total_wrong),
                    fmt(m.precision), fmt(m.recall), fmt(m.f_measure)]


def render_csv(report: EvaluationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(csv_header(report.class_ids))
    for m in (*report.rows, report.overall):
        writer.writerow(_cells(m, report.class_ids))
    return buf.getvalue()


def render_table(report: EvaluationReport) -> str:
    """Aligned plain-text table; per-class accuracy columns are extras."""
    header = csv_header(report.class_ids) + [f"acc_{c}*" for c in report.class_ids]
    body = []
    for m in (*report.rows, report.overall):
        body.append(_cells(m, report.class_ids)
                    + [fmt(m.class_accuracy(c)) for c in report.class_ids])
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]

    def line(cells):
        first = cells[0].ljust(widths[0])
        rest = (c.rjust(w) for c, w in zip(cells[1:], widths[1:]))
        return "  ".join([first, *rest]).rstrip()

    rule = "-" * len(line(header))
    out = [line(header), rule, *(line(r) for r in body[:-1]), rule, line(body[-1]),
           "", "* per-class accuracy (right / seen); not part of P/R/FM"]
    return "\n".join(out) + "\n"


def overall_line(report: EvaluationReport) -> str:
    o = report.overall
    return f"P={fmt(o.precision)} R={fmt(o.recall)} FM={fmt(o.f_measure)}"


def evaluate(predictions, gold, class_ids=(), categories=()) -> EvaluationReport:
    table = score(predictions, gold, class_ids, categories)
    order = next(iter(table.values())).class_ids if table else tuple(class_ids)
    return build_report([compute_metrics(c) for c in table.values()], order)


def load_gold(path) -> List[Tuple[str, str, str]]:
    try:
        return [(str(r["id"]), r["class_id"], r["category"]) for r in read_jsonl(path)]
    except (KeyError, TypeError):
        raise FormatError("gold records need 'id', 'class_id' and 'category'",
                          path=path) from None


def load_predictions(path) -> List[Tuple[str, str]]:
    try:
        return [(str(r["id"]), r["class_id"]) for r in read_jsonl(path)]
    except (KeyError, TypeError):
        raise FormatError("prediction records need 'id' and 'class_id'",
                          path=path) from None


def prediction_class_order(path) -> Tuple[str, ...]:
    """Class order of the model that produced a predictions file, if recorded."""
    for rec in read_jsonl(path):
        if isinstance(rec, dict) and isinstance(rec.get("log_scores"), dict):
            return tuple(rec["log_scores"])
    return ()


def load_count_table(path) -> Tuple[Tuple[str, ...], List[CategoryCounts]]:
    """Read a report-shaped CSV of raw counts (P/R/FM columns ignored)."""
    rows = list(csv.DictReader(io.StringIO(read_text(path))))
    if not rows:
        return (), []
    class_ids = tuple(k[len("right_"):] for k in rows[0] if k.startswith("right_"))
    out = []
    for r in rows:
        if r["category"] == OVERALL:
            continue
        counts = CategoryCounts(r["category"], class_ids)
        for c in class_ids:
            counts.right[c] = int(r[f"right_{c}"])
            counts.wrong[c] = int(r[f"wrong_{c}"])
        counts.responded = int(r.get("responded") or counts.total)
        if counts.total != int(r["total"]):
            raise FormatError(f"row {r['category']!r}: total does not match class counts",
                              path=path)
        out.append(counts)
    return class_ids, out


def expand_count_table(class_ids: Sequence[str], table: Iterable[CategoryCounts]):
    """Materialize gold and prediction records reproducing a count table.

    Wrong answers are attributed to the next class in ``class_ids``.
    """
    gold, preds = [], []
    for row in table:
        n = 0
        for i, c in enumerate(class_ids):
            other = class_ids[(i + 1) % len(class_ids)] if len(class_ids) > 1 else None
            for verdict, k in (("right", row.right[c]), ("wrong", row.wrong[c])):
                for _ in range(k):
                    sid = f"{row.category}#{n}"
                    n += 1
                    gold.append({"id": sid, "text": "", "class_id": c,
                                 "category": row.category})
                    if verdict == "right":
                        preds.append({"id": sid, "class_id": c})
                    elif other is not None:
                        preds.append({"id": sid, "class_id": other})
    return gold, preds


def bundled_category_scores_path() -> Path:
    return Path(__file__).parent / "data" / "category_scores.csv"
