"""Text normalization, sentence splitting, tokenization and target extraction.

Bengali text arrives from many encoders: decomposed vowel signs, punctuation
glued to words, ragged whitespace and broken lines. Everything downstream
assumes the output of :func:`normalize_text`.
"""
from __future__ import annotations

import json
import os
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Union

from .errors import EmptyCorpusError, FormatError, TextDecodeError

DANDA = "।"
TERMINALS = frozenset({DANDA, "!", "?", "."})

# Marks padded with spaces by normalize_text. The ASCII hyphen is handled
# separately because it is only detached when used as a dash.
DETACHABLE = frozenset("'\"()‘’“”,;:/–—")
_REMOVED = frozenset("<>‹›«»")

_WS_RE = re.compile(r"\s+")

Token = str


@dataclass(frozen=True)
class RawDocument:
    category: str
    body: str
    name: str = ""

    def __post_init__(self):
        if not self.category:
            raise ValueError("category must be non-empty")
        if "/" in self.category or os.sep in self.category:
            raise ValueError(f"category {self.category!r} contains a path separator")


@dataclass(frozen=True)
class Sentence:
    text: str
    category: str
    index: int
    source: str = ""

    @property
    def id(self) -> str:
        return f"{self.category}/{self.source}#{self.index}"


def decode_utf8(data: bytes, path=None) -> str:
    """Decode UTF-8 bytes, dropping a leading byte-order mark."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise TextDecodeError(exc.start, path, exc.reason) from None
    return text[1:] if text.startswith("\ufeff") else text


def read_text(path: Union[str, os.PathLike]) -> str:
    with open(path, "rb") as fh:
        return decode_utf8(fh.read(), path)


def read_jsonl(path) -> List[dict]:
    records = []
    for lineno, line in enumerate(read_text(path).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            records.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, line=lineno, path=path) from None
    return records


def _is_word_char(ch: str) -> bool:
    return ch.isalnum() or unicodedata.category(ch).startswith("M")


def normalize_text(raw: Union[str, bytes]) -> str:
    """Canonicalize raw text for the rest of the pipeline.

    The result is NFC-composed, detachable punctuation is padded by single
    spaces, angular brackets and control characters are dropped and all
    whitespace runs (line breaks included) collapse to one space.

    >>> normalize_text('abc"def"')
    'abc " def "'
    """
    if isinstance(raw, (bytes, bytearray)):
        raw = decode_utf8(bytes(raw))
    text = unicodedata.normalize("NFC", raw)
    out: List[str] = []
    n = len(text)
    for i, ch in enumerate(text):
        if ch in _REMOVED:
            out.append(" ")
        elif ch in DETACHABLE:
            out.append(f" {ch} ")
        elif ch == "-":
            inside_word = (0 < i < n - 1 and _is_word_char(text[i - 1])
                           and _is_word_char(text[i + 1]))
            out.append("-" if inside_word else " - ")
        elif ch.isspace():
            out.append(" ")
        elif unicodedata.category(ch) == "Cc":
            # Cc only: ZWJ/ZWNJ (Cf) shape conjuncts and must survive
            out.append(" ")
        else:
            out.append(ch)
    return _WS_RE.sub(" ", "".join(out)).strip()


def split_sentences(doc: RawDocument) -> List[Sentence]:
    """Split a normalized document after every terminal marker."""
    sentences = []
    start = 0
    body = doc.body
    for i, ch in enumerate(body):
        if ch in TERMINALS:
            sentences.append(body[start:i + 1])
            start = i + 1
    sentences.append(body[start:])
    texts = [_WS_RE.sub(" ", s).strip() for s in sentences]
    return [Sentence(t, doc.category, i, doc.name)
            for i, t in enumerate(t for t in texts if t)]


def tokenize(s: Union[Sentence, str]) -> List[Token]:
    """Whitespace tokens with terminals and detached punctuation removed."""
    text = s.text if isinstance(s, Sentence) else s
    tokens = []
    for piece in text.split():
        cleaned = "".join(" " if ch in DETACHABLE or ch in TERMINALS else ch
                          for ch in piece)
        for tok in cleaned.split():
            tok = tok.strip("-")
            if tok:
                tokens.append(tok)
    return tokens


def match_target(token: Token, lemma: str) -> bool:
    """True when ``token`` is ``lemma`` or a suffixed/compounded form of it."""
    if not lemma:
        raise ValueError("lemma must be non-empty")
    return unicodedata.normalize("NFC", token).startswith(
        unicodedata.normalize("NFC", lemma))


def iter_documents(corpus_root) -> Iterator[RawDocument]:
    """Yield raw documents from ``<root>/<category>/*.txt`` in sorted order.

    Raises FileNotFoundError when the root is missing and EmptyCorpusError
    when it holds no category directories.
    """
    root = Path(corpus_root)
    if not root.is_dir():
        raise FileNotFoundError(2, "corpus directory not found", str(root))
    categories = sorted(p for p in root.iterdir() if p.is_dir())
    if not categories:
        raise EmptyCorpusError(f"no category directories under {root}")
    for cat_dir in categories:
        for path in sorted(cat_dir.glob("*.txt")):
            yield RawDocument(cat_dir.name, read_text(path), path.name)


def corpus_sentences(corpus_root) -> Iterator[Sentence]:
    for doc in iter_documents(corpus_root):
        normalized = RawDocument(doc.category, normalize_text(doc.body), doc.name)
        yield from split_sentences(normalized)


def extract_target_sentences(corpus_root, lemma: str) -> List[Sentence]:
    """Every corpus sentence holding at least one form of ``lemma``.

    Ordered by category, then file name, then position in the file.
    """
    if not lemma:
        raise ValueError("lemma must be non-empty")
    lemma = normalize_text(lemma)
    return [s for s in corpus_sentences(corpus_root)
            if any(match_target(t, lemma) for t in tokenize(s))]

