import json
from fractions import Fraction
from pathlib import Path

import pytest

from wsd_kit.naive_bayes import conditional_prob
from wsd_kit.senses import SenseClass, TrainingExample, TrainingSet

DATA = Path(__file__).resolve().parents[1] / "src" / "wsd_kit" / "data"

_acceptance_lines = []


def make_training_set(docs, class_ids=None, lemma="x"):
    """docs: list of (class_id, "space separated tokens")."""
    if class_ids is None:
        class_ids = list(dict.fromkeys(c for c, _ in docs))
    classes = tuple(SenseClass(c, c) for c in class_ids)
    examples = tuple(TrainingExample(tuple(text.split()), c, "test") for c, text in docs)
    return TrainingSet(lemma, classes, examples, cap=max(len(docs), 1))


def assert_laplace_normalized(model, atol=1e-9):
    for c in model.class_ids:
        probs = [conditional_prob(model, w, c) for w in model.vocab]
        assert all(p > 0 for p in probs)
        assert sum(probs) == 1
        assert abs(sum(float(p) for p in probs) - 1.0) <= atol


def write_jsonl(path, records):
    path.write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records),
                    encoding="utf-8")


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def hand_model():
    from wsd_kit.naive_bayes import train
    return train(make_training_set([("A", "x x y"), ("B", "z z")]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _acceptance_lines.append(f"criterion {crit}: {status}  {report.nodeid.split('::')[-1]}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
