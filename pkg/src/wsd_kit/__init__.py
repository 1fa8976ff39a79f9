"""Word sense classification of sentences with a Laplace-smoothed Naive Bayes model."""
from .corpus import (
    RawDocument,
    Sentence,
    extract_target_sentences,
    match_target,
    normalize_text,
    split_sentences,
    tokenize,
)
from .errors import (
    EmptyCorpusError,
    FormatError,
    InsufficientDataError,
    IntegrityError,
    TextDecodeError,
    WsdError,
)
from .evaluation import build_report, compute_metrics, render_csv, render_table, score
from .naive_bayes import (
    ClassificationResult,
    NBModel,
    classify,
    conditional_prob,
    load_model,
    save_model,
    train,
)
from .senses import (
    SenseClass,
    SenseDefinition,
    SenseInventory,
    TrainingSet,
    build_training_set,
    load_labeled_sentences,
    load_sense_inventory,
)
from .stopwords import StopwordLexicon, filter_stopwords, frequency_profile, load_stopword_list

__version__ = "0.1.0"
