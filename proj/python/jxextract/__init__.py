"""Extract Method recommendations for JX, a small Java-like language."""

import json

from . import _core
from ._core import (
    CorpusError,
    InlineError,
    JxError,
    NameClashError,
    ParseError,
    PreconditionError,
    RangeError,
    ResolveError,
    kulczynski,
    label,
    pretty_print,
    run_cli,
)

__version__ = _core.__version__

__all__ = [
    "CorpusError",
    "InlineError",
    "JxError",
    "NameClashError",
    "ParseError",
    "PreconditionError",
    "RangeError",
    "ResolveError",
    "evaluate",
    "extract",
    "inline_method",
    "kulczynski",
    "label",
    "mutate",
    "pretty_print",
    "recommend",
    "run_cli",
]


def recommend(source, path="<input>", min_statements=3, max_recs=3, min_score=0.0,
              explain=False):
    """Ranked candidates per method, as the report dict."""
    return json.loads(_core.recommend(source, path, min_statements, max_recs, min_score,
                                      explain))


def extract(source, method, block, start, end, name, min_statements=3):
    """Source text with statements start..end of `block` moved into method `name`."""
    return _core.extract(source, method, block, start, end, name, min_statements)


def inline_method(source, class_name, callee, file=""):
    """(source, oracle entry) after inlining `callee` at its only call site."""
    text, oracle = _core.inline_method(source, class_name, callee, file)
    return text, json.loads(oracle)


def mutate(source, seed, probability=0.5, min_statements=3, file=""):
    """(source, oracle entries) after seeded random inlining."""
    text, oracles = _core.mutate(source, seed, probability, min_statements, file)
    return text, json.loads(oracles)


def evaluate(corpus_dir, oracle_path, k=1, min_statements=3, min_score=0.0):
    """Recall/precision report for a mutated corpus."""
    return json.loads(_core.evaluate(str(corpus_dir), str(oracle_path), k, min_statements,
                                     min_score))
