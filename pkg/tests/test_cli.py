import json
import subprocess
import sys

import pytest

from conftest import DATA, write_jsonl
from wsd_kit.cli import main
from wsd_kit.evaluation import bundled_category_scores_path, expand_count_table, load_count_table

SW = str(DATA / "stopwords_bn.txt")
INV = str(DATA / "matha_inventory.json")
TRAIN = str(DATA / "matha_train.jsonl")


def read_jsonl(path):
    return [json.loads(l) for l in path.read_text(encoding="utf-8").splitlines()]


@pytest.fixture
def hand_model_file(tmp_path):
    model = {"lemma": "x", "classes": ["A", "B"], "priors": {"A": 0.5, "B": 0.5},
             "class_token_totals": {"A": 3, "B": 2}, "vocab_size": 3,
             "word_counts": {"A": {"x": 2, "y": 1}, "B": {"z": 2}},
             "smoothing": "laplace-add-1"}
    path = tmp_path / "model.json"
    path.write_text(json.dumps(model), encoding="utf-8")
    (tmp_path / "sw.txt").write_text("s\n", encoding="utf-8")
    return path


@pytest.mark.parametrize("cmd", ["extract", "train", "classify", "evaluate", "freq", "demo"])
def test_help(cmd, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(SystemExit) as exc:
        main([cmd, "--help"])
    assert exc.value.code == 0
    assert "usage" in capsys.readouterr().out
    assert list(tmp_path.iterdir()) == []


class TestExtract:
    def test_fixture(self, tmp_path, capsys):
        out = tmp_path / "s.jsonl"
        assert main(["extract", "--corpus", str(DATA / "corpus"), "--lemma", "মাথা",
                     "--stopwords", SW, "--out", str(out)]) == 0
        assert capsys.readouterr().out.strip() == "extracted 12 sentences"
        assert len(read_jsonl(out)) == 12

    def test_lemma_absent(self, tmp_path, capsys):
        out = tmp_path / "s.jsonl"
        assert main(["extract", "--corpus", str(DATA / "corpus"), "--lemma", "পাখি",
                     "--out", str(out)]) == 0
        assert out.read_text() == ""
        assert "extracted 0 sentences" in capsys.readouterr().out

    def test_bad_corpus(self, tmp_path, capsys):
        assert main(["extract", "--corpus", str(tmp_path / "nope"), "--lemma", "মাথা",
                     "--out", str(tmp_path / "o")]) == 2
        assert "error" in capsys.readouterr().err

    def test_empty_corpus(self, tmp_path, capsys):
        (tmp_path / "c").mkdir()
        assert main(["extract", "--corpus", str(tmp_path / "c"), "--lemma", "মাথা",
                     "--out", str(tmp_path / "o")]) == 1
        assert "no category" in capsys.readouterr().err


class TestTrain:
    def run(self, tmp_path, name, *extra, train=TRAIN):
        out = tmp_path / name
        code = main(["train", "--train", train, "--inventory", INV, "--stopwords", SW,
                     "--out", str(out), *extra])
        return code, out

    def test_deterministic(self, tmp_path):
        _, a = self.run(tmp_path, "a.json", "--cap", "55", "--seed", "0")
        _, b = self.run(tmp_path, "b.json", "--cap", "55", "--seed", "0")
        assert a.read_bytes() == b.read_bytes()

    def test_cap_one(self, tmp_path, capsys):
        code, out = self.run(tmp_path, "m.json", "--cap", "1")
        assert code == 0
        priors = json.loads(out.read_text("utf-8"))["priors"]
        assert len(set(priors.values())) == 1

    def test_equal_cap_prints_priors(self, tmp_path, capsys):
        records = [{"text": f"মাথা শব্দ{c}{i}।", "class_id": c, "category": "X"}
                   for c in "abc" for i in range(60)]
        write_jsonl(tmp_path / "t.jsonl", records)
        code, _ = self.run(tmp_path, "m.json", train=str(tmp_path / "t.jsonl"))
        out = capsys.readouterr().out
        assert code == 0
        assert out.count("prior=0.3333") == 3 and "sentences=55" in out
        assert "|V| = " in out

    def test_class_without_data(self, tmp_path, capsys):
        write_jsonl(tmp_path / "t.jsonl", [{"text": "মাথা ক।", "class_id": "a", "category": "X"}])
        code, _ = self.run(tmp_path, "m.json", train=str(tmp_path / "t.jsonl"))
        assert code == 1
        assert "'b'" in capsys.readouterr().err

    def test_bad_cap(self, tmp_path):
        assert self.run(tmp_path, "m.json", "--cap", "0")[0] == 2

    def test_missing_input(self, tmp_path):
        assert self.run(tmp_path, "m.json", train=str(tmp_path / "none.jsonl"))[0] == 2


class TestClassify:
    def run(self, model, inp, out, sw):
        return main(["classify", "--model", str(model), "--in", str(inp),
                     "--stopwords", str(sw), "--out", str(out)])

    def test_hand_worked(self, tmp_path, hand_model_file):
        write_jsonl(tmp_path / "in.jsonl", [{"id": "d1", "text": "x z"}])
        assert self.run(hand_model_file, tmp_path / "in.jsonl", tmp_path / "p.jsonl",
                        tmp_path / "sw.txt") == 0
        (pred,) = read_jsonl(tmp_path / "p.jsonl")
        assert pred["id"] == "d1" and pred["class_id"] == "B"
        assert set(pred["log_scores"]) == {"A", "B"}
        assert pred["oov"] == 0 and pred["used_tokens"] == 2

    def test_empty_input(self, tmp_path, hand_model_file):
        (tmp_path / "in.jsonl").write_text("", encoding="utf-8")
        assert self.run(hand_model_file, tmp_path / "in.jsonl", tmp_path / "p.jsonl",
                        tmp_path / "sw.txt") == 0
        assert (tmp_path / "p.jsonl").read_text() == ""

    def test_only_stopwords(self, tmp_path, hand_model_file):
        write_jsonl(tmp_path / "in.jsonl", [{"id": "d", "text": "s s।"}, {"text": "q"}])
        self.run(hand_model_file, tmp_path / "in.jsonl", tmp_path / "p.jsonl",
                 tmp_path / "sw.txt")
        preds = read_jsonl(tmp_path / "p.jsonl")
        assert preds[0]["low_evidence"] and preds[0]["class_id"] == "A"
        assert preds[1]["id"] == "1" and preds[1]["oov"] == 1 and preds[1]["low_evidence"]

    def test_corrupt_model(self, tmp_path, hand_model_file, capsys):
        hand_model_file.write_text('{"lemma": "x"}', encoding="utf-8")
        write_jsonl(tmp_path / "in.jsonl", [{"text": "x"}])
        assert self.run(hand_model_file, tmp_path / "in.jsonl", tmp_path / "p.jsonl",
                        tmp_path / "sw.txt") == 1
        assert "malformed model" in capsys.readouterr().err


class TestEvaluate:
    def run(self, tmp_path, *extra):
        return main(["evaluate", "--pred", str(tmp_path / "p.jsonl"),
                     "--gold", str(tmp_path / "g.jsonl"),
                     "--out-csv", str(tmp_path / "r.csv"),
                     "--out-table", str(tmp_path / "r.txt"), *extra])

    def test_category_table(self, tmp_path, capsys):
        class_ids, table = load_count_table(bundled_category_scores_path())
        gold, preds = expand_count_table(class_ids, table)
        write_jsonl(tmp_path / "g.jsonl", gold)
        write_jsonl(tmp_path / "p.jsonl", preds)
        (tmp_path / "cats.txt").write_text("\n".join(t.category for t in table), encoding="utf-8")
        assert self.run(tmp_path, "--categories", str(tmp_path / "cats.txt")) == 0
        assert capsys.readouterr().out.strip() == "P=1.00 R=0.84 FM=0.91"
        rows = (tmp_path / "r.csv").read_text("utf-8").splitlines()
        assert "Accountancy,0,0,0,0,0,0,0,0,0,NA,NA,NA" in rows
        assert len(rows) == 52

    def test_perfect(self, tmp_path, capsys):
        gold = [{"id": str(i), "text": "", "class_id": "ab"[i % 2], "category": "XY"[i % 2]}
                for i in range(6)]
        write_jsonl(tmp_path / "g.jsonl", gold)
        write_jsonl(tmp_path / "p.jsonl", [{"id": g["id"], "class_id": g["class_id"]} for g in gold])
        assert self.run(tmp_path) == 0
        assert "R=1.00" in capsys.readouterr().out
        for row in list((tmp_path / "r.csv").read_text().splitlines())[1:]:
            assert row.split(",")[-2] == "1.00"

    def test_class_order_from_predictions(self, tmp_path):
        write_jsonl(tmp_path / "g.jsonl", [{"id": "1", "text": "", "class_id": "b", "category": "X"}])
        write_jsonl(tmp_path / "p.jsonl", [{"id": "1", "class_id": "b",
                                            "log_scores": {"a": -2.0, "b": -1.0}}])
        assert self.run(tmp_path) == 0
        header = (tmp_path / "r.csv").read_text().splitlines()[0]
        assert header.startswith("category,total,right_a,wrong_a,right_b,wrong_b,")

    def test_id_mismatch(self, tmp_path, capsys):
        write_jsonl(tmp_path / "g.jsonl", [{"id": "1", "text": "", "class_id": "a", "category": "X"}])
        write_jsonl(tmp_path / "p.jsonl", [{"id": "7", "class_id": "a"}, {"id": "8", "class_id": "a"}])
        assert self.run(tmp_path) == 1
        err = capsys.readouterr().err
        assert "7" in err and "8" in err


def test_freq(tmp_path, capsys):
    assert main(["freq", "--corpus", str(DATA / "corpus"), "--top", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [l.split() for l in lines] == [["মাথায়", "7"], ["মাথার", "3"]]


def test_demo(tmp_path, capsys):
    assert main(["demo", "--workdir", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "extracted 12 sentences" in out and "OVER ALL" in out
    for name in ("sentences.jsonl", "model.json", "predictions.jsonl", "report.csv", "report.txt"):
        assert (tmp_path / name).exists()


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "wsd_kit", "freq", "--corpus",
                           str(DATA / "corpus"), "--top", "1"],
                          capture_output=True, text=True, encoding="utf-8")
    assert proc.returncode == 0 and proc.stdout.split() == ["মাথায়", "7"]
    proc = subprocess.run([sys.executable, "-m", "wsd_kit", "bogus"], capture_output=True)
    assert proc.returncode == 2
