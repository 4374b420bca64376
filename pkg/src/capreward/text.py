"""Text normalization, vocabulary management, and negative-caption generation.

Negative captions are produced by corrupting a reference caption with one of
five operations (repeat / remove / insert / swap / shuffle), chosen uniformly.
They serve as grammar-incorrect training examples: a caption with a repeated
n-gram, a missing n-gram, stray vocabulary words, swapped words, or fully
shuffled word order.
"""

from __future__ import annotations

import random
import string
from collections import Counter
from dataclasses import dataclass

from sklearn.base import BaseEstimator, TransformerMixin

from .exceptions import CaptionTooShort, ConfigInvalid, EmptyCorpus, EmptyText

PAD, BOS, EOS, UNK = "<pad>", "<bos>", "<eos>", "<unk>"
SPECIAL_TOKENS = (PAD, BOS, EOS, UNK)
PAD_ID, BOS_ID, EOS_ID, UNK_ID = 0, 1, 2, 3

_PUNCT_TABLE = str.maketrans({c: " " for c in string.punctuation})

OPERATIONS = ("repeat", "remove", "insert", "swap", "shuffle")


def normalize(text):
    """Lowercase, strip punctuation, collapse whitespace.

    Raises EmptyText when nothing remains.
    """
    cleaned = text.lower().translate(_PUNCT_TABLE)
    words = cleaned.split()
    if not words:
        raise EmptyText(f"no tokens left after normalizing {text!r}")
    return " ".join(words)


class Vocabulary:
    """Immutable token <-> id mapping with four leading special tokens."""

    def __init__(self, words):
        words = list(words)
        for special in SPECIAL_TOKENS:
            if special in words:
                raise ConfigInvalid(f"{special!r} cannot be a corpus word")
        if len(set(words)) != len(words):
            raise ConfigInvalid("duplicate words passed to Vocabulary")
        self.tokens = list(SPECIAL_TOKENS) + words
        self.token_to_id = {tok: i for i, tok in enumerate(self.tokens)}
        self.words = tuple(words)

    def __len__(self):
        return len(self.tokens)

    def __contains__(self, token):
        return token in self.token_to_id

    def __eq__(self, other):
        return isinstance(other, Vocabulary) and self.tokens == other.tokens

    def id_of(self, token):
        return self.token_to_id.get(token, UNK_ID)

    def encode(self, text_or_tokens):
        """Map a caption (string or token list) to ids; OOV words become UNK."""
        tokens = (
            text_or_tokens.split()
            if isinstance(text_or_tokens, str)
            else list(text_or_tokens)
        )
        return [self.id_of(t) for t in tokens]

    def decode(self, ids):
        return [self.tokens[i] for i in ids]


def build_vocab(corpus, min_freq=1):
    """Build a Vocabulary from raw caption strings.

    Captions are normalized first. Words with corpus frequency >= min_freq
    are kept, ordered by descending frequency with lexicographic tie-break.
    """
    corpus = list(corpus)
    if not corpus:
        raise EmptyCorpus("cannot build a vocabulary from zero captions")
    counts = Counter()
    for caption in corpus:
        counts.update(normalize(caption).split())
    kept = sorted(
        (w for w, c in counts.items() if c >= min_freq),
        key=lambda w: (-counts[w], w),
    )
    return Vocabulary(kept)


@dataclass
class NegativeGenConfig:
    """Limits for the corruption operations."""

    n_max_gram: int = 3
    n_max_repeat: int = 3
    n_max_tokens: int = 3
    rng_seed: int = 0

    def validate(self):
        if min(self.n_max_gram, self.n_max_repeat, self.n_max_tokens) < 1:
            raise ConfigInvalid("all corruption maxima must be >= 1")


def repeat_ngram(tokens, rng, n_max_gram=3, n_max_repeat=3):
    """Duplicate one random n-gram at 1..n_max_repeat random insertion points."""
    n_gram = rng.randint(1, n_max_gram)
    repeat_idx = rng.randint(0, len(tokens) - n_gram)
    repeated = tokens[repeat_idx : repeat_idx + n_gram]
    n_repeat = rng.randint(1, n_max_repeat)
    for _ in range(n_repeat):
        insert_idx = rng.randint(0, len(tokens))
        tokens = tokens[:insert_idx] + repeated + tokens[insert_idx:]
    return tokens


def remove_ngram(tokens, rng, n_max_gram=3):
    """Delete one random n-gram."""
    n_gram = rng.randint(1, n_max_gram)
    remove_idx = rng.randint(0, len(tokens) - n_gram)
    return tokens[:remove_idx] + tokens[remove_idx + n_gram :]


def insert_tokens(tokens, sample_words, rng, n_max_tokens=3):
    """Insert 1..n_max_tokens random vocabulary words at random positions.

    Insertion points are drawn in [0, len-1], so a word is never appended
    after the final token.
    """
    n_insert = rng.randint(1, n_max_tokens)
    for _ in range(n_insert):
        insert_idx = rng.randint(0, len(tokens) - 1)
        insert_tok = rng.choice(sample_words)
        tokens = tokens[:insert_idx] + [insert_tok] + tokens[insert_idx:]
    return tokens


def swap_tokens(tokens, sample_words, rng, n_max_tokens=3):
    """Replace 1..n_max_tokens tokens with vocabulary words.

    Each replacement is redrawn until it differs from the token it replaces.
    """
    tokens = list(tokens)
    n_swap = rng.randint(1, n_max_tokens)
    for _ in range(n_swap):
        swap_idx = rng.randint(0, len(tokens) - 1)
        swap_tok = rng.choice(sample_words)
        while swap_tok == tokens[swap_idx]:
            swap_tok = rng.choice(sample_words)
        tokens[swap_idx] = swap_tok
    return tokens


def shuffle_tokens(tokens, rng):
    """Uniformly permute all tokens."""
    tokens = list(tokens)
    rng.shuffle(tokens)
    return tokens


def _sample_words(vocab):
    if isinstance(vocab, Vocabulary):
        return list(vocab.words)
    return list(vocab)


def corrupt(tokens, vocab, cfg, rng):
    """Apply one uniformly chosen corruption; returns (new_tokens, operation).

    Raises CaptionTooShort when the caption has fewer than n_max_gram + 1
    tokens: the n-gram index bounds would go negative below that.
    """
    cfg.validate()
    tokens = list(tokens)
    if len(tokens) < cfg.n_max_gram + 1:
        raise CaptionTooShort(
            f"need at least {cfg.n_max_gram + 1} tokens, got {len(tokens)}"
        )
    words = _sample_words(vocab)
    if len(set(words)) < 2:
        raise ConfigInvalid("need at least two distinct vocabulary words")
    op = rng.choice(OPERATIONS)
    if op == "repeat":
        tokens = repeat_ngram(tokens, rng, cfg.n_max_gram, cfg.n_max_repeat)
    elif op == "remove":
        tokens = remove_ngram(tokens, rng, cfg.n_max_gram)
    elif op == "insert":
        tokens = insert_tokens(tokens, words, rng, cfg.n_max_tokens)
    elif op == "swap":
        tokens = swap_tokens(tokens, words, rng, cfg.n_max_tokens)
    else:
        tokens = shuffle_tokens(tokens, rng)
    return tokens, op


def generate_negative(caption, vocab, cfg=None, rng=None):
    """Corrupt one caption string; returns the negative caption string."""
    cfg = cfg or NegativeGenConfig()
    rng = rng if rng is not None else random.Random(cfg.rng_seed)
    tokens, _ = corrupt(caption.split(), vocab, cfg, rng)
    return " ".join(tokens)


class NegativeCaptionGenerator(TransformerMixin, BaseEstimator):
    """Caption corruptor with a sklearn transformer interface.

    fit() learns the vocabulary sampled by the insert/swap operations
    (or validates a user-supplied one); transform() maps each caption to
    one corrupted variant. transform is a pure function of the input and
    random_state: calling it twice on the same captions yields the same
    negatives.
    """

    def __init__(
        self,
        n_max_gram=3,
        n_max_repeat=3,
        n_max_tokens=3,
        min_freq=1,
        vocabulary=None,
        random_state=None,
    ):
        self.n_max_gram = n_max_gram
        self.n_max_repeat = n_max_repeat
        self.n_max_tokens = n_max_tokens
        self.min_freq = min_freq
        self.vocabulary = vocabulary
        self.random_state = random_state

    def _config(self):
        cfg = NegativeGenConfig(
            n_max_gram=self.n_max_gram,
            n_max_repeat=self.n_max_repeat,
            n_max_tokens=self.n_max_tokens,
            rng_seed=self.random_state or 0,
        )
        cfg.validate()
        return cfg

    def fit(self, X, y=None):
        self._config()
        if self.vocabulary is not None:
            vocab = self.vocabulary
        else:
            vocab = build_vocab(X, min_freq=self.min_freq)
        if len(set(_sample_words(vocab))) < 2:
            raise ConfigInvalid("need at least two distinct vocabulary words")
        self.vocabulary_ = vocab
        return self

    def transform(self, X):
        """Return one negative caption per input caption."""
        return [neg for neg, _ in self.transform_with_ops(X)]

    def transform_with_ops(self, X):
        """Return (negative, operation) pairs, one per input caption."""
        cfg = self._config()
        rng = random.Random(cfg.rng_seed)
        out = []
        for caption in X:
            tokens, op = corrupt(caption.split(), self.vocabulary_, cfg, rng)
            out.append((" ".join(tokens), op))
        return out
