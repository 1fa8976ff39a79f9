"""Multinomial Naive Bayes with add-one (Laplace) smoothing.

Counts are kept as exact integers; probabilities are derived on demand.
Documents are scored in natural-log space since long sentences underflow a
direct product of conditional probabilities.
"""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from .corpus import Token, read_text
from .errors import FormatError, InsufficientDataError
from .senses import TrainingSet

SMOOTHING = "laplace-add-1"

# Candidates within this relative distance of the best log score are
# compared in exact rational arithmetic before declaring a winner or a tie.
_NEAR_TIE_REL = 1e-12


@dataclass(frozen=True)
class NBModel:
    lemma: str
    class_ids: Tuple[str, ...]
    priors: Mapping[str, float]
    class_token_totals: Mapping[str, int]
    word_counts: Mapping[str, Mapping[str, int]]
    class_sentence_counts: Mapping[str, int] = field(default_factory=dict)
    smoothing: str = SMOOTHING

    @cached_property
    def vocab(self) -> FrozenSet[str]:
        return frozenset(w for counts in self.word_counts.values()
                         for w, n in counts.items() if n > 0)

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)

    def exact_prior(self, class_id: str) -> Fraction:
        if self.class_sentence_counts:
            total = sum(self.class_sentence_counts.values())
            return Fraction(self.class_sentence_counts[class_id], total)
        return Fraction(self.priors[class_id])


@dataclass(frozen=True)
class ClassificationResult:
    predicted_class: str
    log_scores: Dict[str, float]
    used_tokens: Tuple[Token, ...]
    skipped_oov: Tuple[Token, ...]
    tie: bool = False

    @property
    def low_evidence(self) -> bool:
        """Only the priors decided: no token was in the vocabulary."""
        return not self.used_tokens


def train(ts: TrainingSet) -> NBModel:
    class_ids = tuple(c.class_id for c in ts.classes)
    sentences = Counter()
    words: Dict[str, Counter] = {c: Counter() for c in class_ids}
    for ex in ts.examples:
        sentences[ex.class_id] += 1
        words[ex.class_id].update(ex.tokens)
    for c in class_ids:
        if not sentences[c]:
            raise InsufficientDataError(c)
    total = sum(sentences.values())
    return NBModel(
        lemma=ts.lemma,
        class_ids=class_ids,
        priors={c: sentences[c] / total for c in class_ids},
        class_token_totals={c: sum(words[c].values()) for c in class_ids},
        word_counts={c: dict(sorted(words[c].items())) for c in class_ids},
        class_sentence_counts={c: sentences[c] for c in class_ids},
    )


def _check_class(model: NBModel, class_id: str) -> None:
    if class_id not in model.word_counts:
        raise ValueError(f"unknown class_id {class_id!r}")


def conditional_prob(model: NBModel, word: str, class_id: str) -> Fraction:
    """(count(word, class) + 1) / (n_class + |V|), exactly."""
    _check_class(model, class_id)
    count = model.word_counts[class_id].get(word, 0)
    return Fraction(count + 1, model.class_token_totals[class_id] + model.vocab_size)


def _exact_score(model: NBModel, bag: Counter, class_id: str) -> Fraction:
    denom = model.class_token_totals[class_id] + model.vocab_size
    counts = model.word_counts[class_id]
    num = 1
    for word, k in bag.items():
        num *= (counts.get(word, 0) + 1) ** k
    return model.exact_prior(class_id) * Fraction(num, denom ** sum(bag.values()))


def classify(model: NBModel, tokens: Iterable[Token]) -> ClassificationResult:
    """Pick the class maximizing ln P(c) + sum of ln P(w|c) over token occurrences.

    Tokens outside the training vocabulary are skipped. Exact ties go to the
    earliest class in declaration order.
    """
    tokens = list(tokens)
    vocab = model.vocab
    used = tuple(t for t in tokens if t in vocab)
    oov = tuple(t for t in tokens if t not in vocab)
    bag = Counter(used)
    V = model.vocab_size

    log_scores = {}
    for c in model.class_ids:
        denom = model.class_token_totals[c] + V
        counts = model.word_counts[c]
        terms = [math.log(model.priors[c])]
        for word, k in bag.items():
            terms.extend([math.log((counts.get(word, 0) + 1) / denom)] * k)
        # fsum is exactly rounded, so token order cannot change the score
        log_scores[c] = math.fsum(terms)

    best = max(log_scores.values())
    tol = _NEAR_TIE_REL * max(1.0, abs(best))
    contenders = [c for c in model.class_ids if best - log_scores[c] <= tol]
    if len(contenders) > 1:
        exact = {c: _exact_score(model, bag, c) for c in contenders}
        top = max(exact.values())
        contenders = [c for c in contenders if exact[c] == top]
    return ClassificationResult(contenders[0], log_scores, used, oov,
                                tie=len(contenders) > 1)


def model_to_dict(model: NBModel) -> dict:
    return {
        "lemma": model.lemma,
        "classes": list(model.class_ids),
        "priors": {c: model.priors[c] for c in model.class_ids},
        "class_token_totals": {c: model.class_token_totals[c] for c in model.class_ids},
        "vocab_size": model.vocab_size,
        "word_counts": {c: dict(sorted(model.word_counts[c].items()))
                        for c in model.class_ids},
        "class_sentence_counts": {c: model.class_sentence_counts[c]
                                  for c in model.class_ids
                                  if c in model.class_sentence_counts},
        "smoothing": model.smoothing,
    }


def model_from_dict(data: dict) -> NBModel:
    try:
        class_ids = tuple(data["classes"])
        model = NBModel(
            lemma=data["lemma"],
            class_ids=class_ids,
            priors={c: float(data["priors"][c]) for c in class_ids},
            class_token_totals={c: int(data["class_token_totals"][c]) for c in class_ids},
            word_counts={c: {w: int(n) for w, n in data["word_counts"][c].items()}
                         for c in class_ids},
            class_sentence_counts={c: int(n) for c, n in
                                   data.get("class_sentence_counts", {}).items()},
            smoothing=data["smoothing"],
        )
        vocab_size = int(data["vocab_size"])
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise FormatError(f"malformed model: {exc!r}") from None
    if model.smoothing != SMOOTHING:
        raise FormatError(f"unsupported smoothing {model.smoothing!r}")
    if not class_ids:
        raise FormatError("model declares no classes")
    if vocab_size != model.vocab_size:
        raise FormatError(f"vocab_size {vocab_size} does not match word counts "
                          f"({model.vocab_size})")
    for c in class_ids:
        if sum(model.word_counts[c].values()) != model.class_token_totals[c]:
            raise FormatError(f"class_token_totals for {c!r} does not match word counts")
        if not 0 < model.priors[c] <= 1:
            raise FormatError(f"prior for {c!r} out of range")
    if abs(math.fsum(model.priors.values()) - 1.0) > 1e-9:
        raise FormatError("priors do not sum to 1")
    return model


def dumps_model(model: NBModel) -> str:
    return json.dumps(model_to_dict(model), ensure_ascii=False, indent=2) + "\n"


def save_model(model: NBModel, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_model(model))


def load_model(path) -> NBModel:
    try:
        data = json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, line=exc.lineno, path=path) from None
    return model_from_dict(data)


def predict_many(model: NBModel, docs: Iterable[Iterable[Token]]) -> List[ClassificationResult]:
    return [classify(model, d) for d in docs]
