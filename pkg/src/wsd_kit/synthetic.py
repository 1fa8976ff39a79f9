"""Seeded synthetic lexical-sample data.

Each sense class owns a pool of keywords; a sentence mixes an inflected form
of the target lemma, a few keywords (mostly from its own class), shared
filler words and stop words. Useful for exercising the full pipeline when no
annotated corpus is at hand.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

CONSONANTS = "কখগঘচছজঝটঠডতথদধনপফবভমরলশসহ"
VOWEL_SIGNS = ["", "া", "ি", "ী", "ু", "ূ", "ে", "ো"]
SUFFIXES = ["", "য়", "র", "তে", "টা", "টি", "গুলো", "রা", "দের", "রই"]
STOPWORDS = ["এবং", "কিন্তু", "আমি", "তুমি", "সে", "একটি", "খুব", "দিকে", "প্রতি"]
CATEGORIES = ["Agriculture", "ChildLit", "Medicine", "Novel"]


@dataclass
class SyntheticSpec:
    lemma: str = "মাথা"
    class_ids: Tuple[str, ...] = ("a", "b", "c")
    keywords_per_class: int = 12
    fillers: int = 40
    n_train: int = 55
    n_test: int = 100
    distractors_per_file: int = 3
    own_class_rate: float = 0.95
    seed: int = 0


def _pseudo_words(rng: random.Random, n: int, avoid: Sequence[str]) -> List[str]:
    words: List[str] = []
    seen = set(avoid)
    while len(words) < n:
        syllables = rng.randint(2, 3)
        w = "".join(rng.choice(CONSONANTS) + rng.choice(VOWEL_SIGNS) for _ in range(syllables))
        if w in seen or any(w.startswith(a) for a in avoid):
            continue
        seen.add(w)
        words.append(w)
    return words


class SyntheticGenerator:
    def __init__(self, spec: SyntheticSpec = SyntheticSpec()):
        self.spec = spec
        rng = random.Random(f"lexicon:{spec.seed}")
        k = spec.keywords_per_class
        pool = _pseudo_words(rng, k * len(spec.class_ids) + spec.fillers,
                             [spec.lemma, *STOPWORDS])
        self.keywords: Dict[str, List[str]] = {
            c: pool[i * k:(i + 1) * k] for i, c in enumerate(spec.class_ids)}
        self.fillers = pool[k * len(spec.class_ids):]
        self.rng = random.Random(f"sentences:{spec.seed}")

    def sentence(self, class_id: str) -> str:
        rng, spec = self.rng, self.spec
        words = [spec.lemma + rng.choice(SUFFIXES)]
        for _ in range(3):
            source = class_id
            if rng.random() > spec.own_class_rate:
                source = rng.choice([c for c in spec.class_ids if c != class_id])
            words.append(rng.choice(self.keywords[source]))
        words += rng.sample(self.fillers, 3)
        words += rng.sample(STOPWORDS, rng.randint(1, 2))
        rng.shuffle(words)
        return " ".join(words) + rng.choice(["।", "।", "।", "!", "?"])

    def distractor(self) -> str:
        words = self.rng.sample(self.fillers, 5) + [self.rng.choice(STOPWORDS)]
        return " ".join(words) + "।"

    def write(self, root) -> Dict[str, Path]:
        """Write a training file, a held-out corpus and its gold labels.

        Returns the paths keyed by role: ``train``, ``corpus``, ``gold``,
        ``stopwords``, ``inventory``.
        """
        spec = self.spec
        root = Path(root)
        paths = {
            "train": root / "train.jsonl",
            "corpus": root / "corpus",
            "gold": root / "gold.jsonl",
            "stopwords": root / "stopwords.txt",
            "inventory": root / "inventory.json",
        }
        root.mkdir(parents=True, exist_ok=True)

        with open(paths["train"], "w", encoding="utf-8", newline="\n") as fh:
            for c in spec.class_ids:
                for _ in range(spec.n_train):
                    rec = {"text": self.sentence(c), "class_id": c, "category": "train"}
                    fh.write(json.dumps(rec, ensure_ascii=False) + "\n")

        labels = [spec.class_ids[i % len(spec.class_ids)] for i in range(spec.n_test)]
        self.rng.shuffle(labels)
        gold = []
        per_file = 10
        for f, start in enumerate(range(0, spec.n_test, per_file)):
            category = CATEGORIES[f % len(CATEGORIES)]
            name = f"doc{f:03d}.txt"
            lines: List[str] = []
            for j, class_id in enumerate(labels[start:start + per_file]):
                if j < spec.distractors_per_file:
                    lines.append(self.distractor())
                text = self.sentence(class_id)
                gold.append({"id": f"{category}/{name}#{len(lines)}", "text": text,
                             "class_id": class_id, "category": category})
                lines.append(text)
            out = paths["corpus"] / category / name
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text("\n".join(lines) + "\n", encoding="utf-8")

        with open(paths["gold"], "w", encoding="utf-8", newline="\n") as fh:
            for rec in gold:
                fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
        paths["stopwords"].write_text("\n".join(STOPWORDS) + "\n", encoding="utf-8")
        inventory = {
            "lemma": spec.lemma,
            "classes": [{"class_id": c, "label": " ".join(self.keywords[c][:2])}
                        for c in spec.class_ids],
            "senses": [{"id": i + 1, "pos": "noun", "synonyms": [spec.lemma],
                        "gloss": " ".join(self.keywords[c][:5]), "example": "",
                        "class_id": c} for i, c in enumerate(spec.class_ids)],
        }
        paths["inventory"].write_text(json.dumps(inventory, ensure_ascii=False, indent=2) + "\n",
                                      encoding="utf-8")
        return paths


def write_synthetic(root, spec: SyntheticSpec = SyntheticSpec()) -> Dict[str, Path]:
    return SyntheticGenerator(spec).write(root)
