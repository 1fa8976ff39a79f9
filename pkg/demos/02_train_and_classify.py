"""
Training the sense classifier
=============================

Build a training set from the bundled মাথা sentences, fit the add-one
smoothed Naive Bayes model and look at how it scores a few sentences.
"""
import math

from wsd_kit import corpus, naive_bayes, senses, stopwords
from wsd_kit.cli import DATA

inventory = senses.load_sense_inventory(DATA / "matha_inventory.json")
for cls in inventory.classes:
    print(cls.class_id, cls.label, cls.member_sense_ids)

lex = stopwords.load_stopword_list(DATA / "stopwords_bn.txt")
labeled = senses.load_labeled_sentences(DATA / "matha_train.jsonl")
ts = senses.build_training_set(labeled, inventory.classes, lex, cap=55, seed=0,
                               lemma=inventory.lemma)
print("sentences per class:", ts.counts())

model = naive_bayes.train(ts)
print("|V| =", model.vocab_size)

# Every class distribution sums to exactly one over the vocabulary
for c in model.class_ids:
    total = sum(naive_bayes.conditional_prob(model, w, c) for w in model.vocab)
    print(c, "sum P(w|c) =", total)

# The most characteristic words per class, by smoothed probability
for c in model.class_ids:
    top = sorted(model.vocab, key=lambda w: (-naive_bayes.conditional_prob(model, w, c), w))[:5]
    print(c, top)

tests = [
    "গাছের মাথায় পাখি বসে আছে।",
    "জ্বরে তার মাথা ঘুরছে।",
    # mostly out of vocabulary: 30 training sentences leave this to the priors
    "গ্রামের মাথা সবাইকে ডাকলেন।",
]
for text in tests:
    tokens = stopwords.filter_stopwords(corpus.tokenize(corpus.normalize_text(text)), lex)
    result = naive_bayes.classify(model, tokens)
    # log scores back to normalized posteriors for display
    peak = max(result.log_scores.values())
    z = sum(math.exp(s - peak) for s in result.log_scores.values())
    post = {c: round(math.exp(s - peak) / z, 3) for c, s in result.log_scores.items()}
    print(result.predicted_class, post, "oov:", result.skipped_oov, text)

# Hand-sized example where the exact arithmetic is easy to follow
toy = senses.TrainingSet("x", (senses.SenseClass("A", "A"), senses.SenseClass("B", "B")),
                         (senses.TrainingExample(("x", "x", "y"), "A", ""),
                          senses.TrainingExample(("z", "z"), "B", "")), cap=1)
toy_model = naive_bayes.train(toy)
print("P(x|A) =", naive_bayes.conditional_prob(toy_model, "x", "A"),
      "P(z|B) =", naive_bayes.conditional_prob(toy_model, "z", "B"),
      "->", naive_bayes.classify(toy_model, ["x", "z"]).predicted_class)
