"""Sense inventories and per-class training sets.

An inventory lists the fine-grained WordNet senses of one lemma and maps each
onto a coarse sense class. Training sets pair stop-word-filtered token bags
with those classes, with at most ``cap`` examples per class.
"""
from __future__ import annotations

import json
import logging
import random
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from .corpus import Sentence, Token, normalize_text, read_text, tokenize
from .errors import FormatError, InsufficientDataError, IntegrityError
from .stopwords import StopwordLexicon, filter_stopwords

log = logging.getLogger(__name__)

DEFAULT_CAP = 55


@dataclass(frozen=True)
class SenseDefinition:
    id: int
    pos: str
    synonyms: Tuple[str, ...]
    gloss: str
    example: str
    class_id: str


@dataclass(frozen=True)
class SenseClass:
    class_id: str
    label: str
    member_sense_ids: Tuple[int, ...] = ()


@dataclass(frozen=True)
class SenseInventory:
    lemma: str
    senses: Tuple[SenseDefinition, ...]
    classes: Tuple[SenseClass, ...]

    @property
    def class_ids(self) -> List[str]:
        return [c.class_id for c in self.classes]

    def __iter__(self):
        # allows ``senses, classes = load_sense_inventory(path)``
        return iter((self.senses, self.classes))


@dataclass(frozen=True)
class TrainingExample:
    tokens: Tuple[Token, ...]
    class_id: str
    category: str


@dataclass(frozen=True)
class TrainingSet:
    lemma: str
    classes: Tuple[SenseClass, ...]
    examples: Tuple[TrainingExample, ...]
    cap: int
    rejected: int = 0

    def counts(self) -> Dict[str, int]:
        out = {c.class_id: 0 for c in self.classes}
        for ex in self.examples:
            out[ex.class_id] += 1
        return out


def _require(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise FormatError(f"{where}: field {key!r} has wrong type")
    return value


def parse_sense_inventory(data: dict) -> SenseInventory:
    if not isinstance(data, dict):
        raise FormatError("inventory must be a JSON object")
    lemma = normalize_text(_require(data, "lemma", str, "inventory"))
    raw_classes = _require(data, "classes", list, "inventory")
    raw_senses = _require(data, "senses", list, "inventory")
    if not raw_classes:
        raise FormatError("inventory declares no classes")

    labels: Dict[str, str] = {}
    for i, c in enumerate(raw_classes):
        cid = _require(c, "class_id", str, f"classes[{i}]")
        if cid in labels:
            raise FormatError(f"duplicate class_id {cid!r}")
        labels[cid] = _require(c, "label", str, f"classes[{i}]")

    senses = []
    members = defaultdict(list)
    for i, s in enumerate(raw_senses):
        where = f"senses[{i}]"
        sid = _require(s, "id", int, where)
        if sid < 1:
            raise FormatError(f"{where}: sense id must be >= 1")
        if sid in {d.id for d in senses}:
            raise FormatError(f"duplicate sense id {sid}")
        synonyms = _require(s, "synonyms", list, where)
        if not synonyms:
            raise FormatError(f"sense {sid} has no synonyms")
        cid = _require(s, "class_id", str, where)
        if cid not in labels:
            raise IntegrityError(f"sense {sid} references undeclared class {cid!r}")
        senses.append(SenseDefinition(
            sid,
            _require(s, "pos", str, where),
            tuple(normalize_text(w) for w in synonyms),
            s.get("gloss", ""),
            s.get("example", ""),
            cid,
        ))
        members[cid].append(sid)

    classes = tuple(SenseClass(cid, label, tuple(members[cid]))
                    for cid, label in labels.items())
    return SenseInventory(lemma, tuple(senses), classes)


def load_sense_inventory(path) -> SenseInventory:
    try:
        data = json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, line=exc.lineno, path=path) from None
    return parse_sense_inventory(data)


def load_labeled_sentences(path) -> List[Tuple[Sentence, str]]:
    """Read ``{"text", "class_id", "category"}`` JSON Lines records."""
    labeled = []
    for lineno, line in enumerate(read_text(path).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, line=lineno, path=path) from None
        try:
            text = rec["text"]
            class_id = rec["class_id"]
        except (KeyError, TypeError):
            raise FormatError("record needs 'text' and 'class_id'",
                              line=lineno, path=path) from None
        sentence = Sentence(normalize_text(text), rec.get("category", ""), lineno - 1)
        labeled.append((sentence, class_id))
    return labeled


def build_training_set(
    labeled: Sequence[Tuple[Sentence, str]],
    classes: Sequence[SenseClass],
    lex: StopwordLexicon,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    lemma: str = "",
) -> TrainingSet:
    """Filter, validate and cap labeled sentences into a training set.

    When a class has more than ``cap`` usable sentences a seeded sample of
    ``cap`` of them is kept, preserving input order. Sentences left empty by
    stop-word removal are dropped and counted in ``rejected``.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    classes = tuple(classes)
    pools: Dict[str, List[TrainingExample]] = {c.class_id: [] for c in classes}
    rejected = 0
    for sentence, class_id in labeled:
        if class_id not in pools:
            raise IntegrityError(f"unknown class_id {class_id!r} in training data")
        bag = tuple(filter_stopwords(tokenize(sentence), lex))
        if not bag:
            rejected += 1
            continue
        pools[class_id].append(TrainingExample(bag, class_id, sentence.category))
    if rejected:
        log.warning("dropped %d training sentences with no content tokens", rejected)

    examples: List[TrainingExample] = []
    for c in classes:
        pool = pools[c.class_id]
        if not pool:
            raise InsufficientDataError(c.class_id)
        if len(pool) > cap:
            rng = random.Random(f"{seed}:{c.class_id}")
            keep = sorted(rng.sample(range(len(pool)), cap))
            pool = [pool[i] for i in keep]
        examples.extend(pool)
    return TrainingSet(lemma, classes, tuple(examples), cap, rejected)


def bundled_inventory_path() -> Path:
    return Path(__file__).parent / "data" / "matha_inventory.json"
