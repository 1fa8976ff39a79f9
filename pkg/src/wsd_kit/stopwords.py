"""Curated stop-word lexicon and corpus frequency profiling.

A frequency cut-off does not separate Bengali stop words from content words:
many of them are rare in running text. The lexicon is therefore a hand-kept
list; :func:`frequency_profile` only exists to inspect a corpus.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List

from .corpus import Token, corpus_sentences, normalize_text, read_text, tokenize
from .errors import EmptyCorpusError, FormatError


@dataclass(frozen=True)
class StopwordLexicon:
    entries: FrozenSet[str] = field(default_factory=frozenset)
    source: str = ""

    def __contains__(self, token) -> bool:
        return token in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def from_words(cls, words: Iterable[str], source: str = "") -> "StopwordLexicon":
        entries = {normalize_text(w) for w in words}
        entries.discard("")
        return cls(frozenset(entries), source)


def load_stopword_list(path) -> StopwordLexicon:
    """Read a one-token-per-line stop-word file.

    Blank lines and lines starting with ``#`` are skipped. A line that still
    contains whitespace after normalization is rejected with its line number.
    """
    entries = set()
    for lineno, line in enumerate(read_text(path).splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        word = normalize_text(stripped)
        if any(ch.isspace() for ch in word):
            raise FormatError(f"stop word {stripped!r} contains whitespace",
                              line=lineno, path=path)
        entries.add(word)
    return StopwordLexicon(frozenset(entries), str(path))


def filter_stopwords(tokens: Iterable[Token], lex: StopwordLexicon) -> List[Token]:
    return [t for t in tokens if t not in lex]


def frequency_profile(corpus_root) -> Dict[str, int]:
    """Surface counts of every token in the corpus, most frequent first.

    Ties are ordered by code point. An existing root without categories
    yields an empty profile.
    """
    counts: Counter = Counter()
    try:
        for sentence in corpus_sentences(corpus_root):
            counts.update(tokenize(sentence))
    except EmptyCorpusError:
        return {}
    return dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def format_profile(profile: Dict[str, int], top: int = None) -> str:
    items = list(profile.items())
    if top is not None:
        items = items[:top]
    width = max((len(w) for w, _ in items), default=0)
    return "\n".join(f"{w.ljust(width)}  {c:>8d}" for w, c in items)


def bundled_stopwords_path() -> Path:
    return Path(__file__).parent / "data" / "stopwords_bn.txt"
