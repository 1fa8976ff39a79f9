"""
Normalizing Bengali text and finding the target lemma
======================================================

Walk through the preprocessing chain on a small paragraph, then pull every
sentence containing an inflected form of মাথা out of the bundled corpus.
"""
from wsd_kit import corpus, stopwords
from wsd_kit.cli import DATA

# Two glued sentences, a quoted word and an intra-word hyphen
raw = "তার মাথায় ব্যথা।সে \"ডাক্তার\" ডাকল! মাতা-পিতা চিন্তিত।"
text = corpus.normalize_text(raw)
print(text)

# Precomposed YYA (U+09DF) is a composition exclusion: NFC gives YA + NUKTA
precomposed = "মাথায়"
print([hex(ord(c)) for c in precomposed], "->",
      [hex(ord(c)) for c in corpus.normalize_text(precomposed)])

doc = corpus.RawDocument("Demo", text, "demo.txt")
for s in corpus.split_sentences(doc):
    print(s.id, corpus.tokenize(s))

# Prefix matching accepts inflections and compounds, rejects মাতা
for word in ["মাথা", precomposed, "মাথাব্যথা", "মাতা", "মা"]:
    print(word, corpus.match_target(corpus.normalize_text(word), "মাথা"))

# Stop-word removal on one tokenized sentence
lex = stopwords.load_stopword_list(stopwords.bundled_stopwords_path())
tokens = corpus.tokenize("সে এবং আমি মাথা নাড়লাম।")
print(tokens, "->", stopwords.filter_stopwords(tokens, lex))

# Target sentences in the bundled corpus
found = corpus.extract_target_sentences(DATA / "corpus", "মাথা")
print(f"{len(found)} sentences mention মাথা")
for s in found[:4]:
    print(" ", s.id, s.text)
