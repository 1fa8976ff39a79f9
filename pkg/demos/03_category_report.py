"""
Per-category evaluation report
==============================

Rebuild the 50-category score table from its raw right/wrong counts, render
it, and then score a full pipeline run on synthetic data through the CLI.
"""
import csv
import io
import tempfile
from pathlib import Path

from wsd_kit import evaluation
from wsd_kit.cli import main
from wsd_kit.synthetic import write_synthetic

class_ids, table = evaluation.load_count_table(evaluation.bundled_category_scores_path())
report = evaluation.build_report([evaluation.compute_metrics(t) for t in table], class_ids)
print(evaluation.render_table(report).splitlines()[0])
for line in evaluation.render_table(report).splitlines()[2:8]:
    print(line)
print("...")
print(evaluation.overall_line(report))

# Categories with no target sentences carry NA rather than a score
print([m.category for m in report.rows if m.total == 0])

# Compare against the printed values; all rows agree after half-away rounding
printed = {r["category"]: r for r in csv.DictReader(
    io.StringIO(evaluation.bundled_category_scores_path().read_text(encoding="utf-8")))}
rendered = {r["category"]: r for r in csv.DictReader(io.StringIO(evaluation.render_csv(report)))}
agree = sum((rendered[c]["R"], rendered[c]["FM"]) == (p["R"], p["FM"]) for c, p in printed.items())
print(f"{agree}/{len(printed)} rows match")

# Pooled counts versus the printed OVER ALL row
o = report.overall
print("pooled right a/b/c:", [o.per_class_right[c] for c in class_ids],
      "printed right_a:", printed["OVER ALL"]["right_a"])

# The same report from a synthetic pipeline run
work = Path(tempfile.mkdtemp(prefix="wsd-report-"))
paths = write_synthetic(work / "data")
sw = str(paths["stopwords"])
main(["extract", "--corpus", str(paths["corpus"]), "--lemma", "মাথা",
      "--stopwords", sw, "--out", str(work / "sentences.jsonl")])
main(["train", "--train", str(paths["train"]), "--inventory", str(paths["inventory"]),
      "--stopwords", sw, "--out", str(work / "model.json")])
main(["classify", "--model", str(work / "model.json"), "--in", str(work / "sentences.jsonl"),
      "--stopwords", sw, "--out", str(work / "predictions.jsonl")])
main(["evaluate", "--pred", str(work / "predictions.jsonl"), "--gold", str(paths["gold"]),
      "--out-csv", str(work / "report.csv"), "--out-table", str(work / "report.txt")])
print((work / "report.txt").read_text(encoding="utf-8"))
