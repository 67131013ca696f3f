"""
scikit-learn compatible wrappers.

The asymptotic formulas become regressors from directions to log counts, and
the permutation statistics become transformers from one-line permutations to
feature columns, so both drop into pipelines, ``clone`` and ``get_params``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .asymptotics import diagonal_estimate, log_estimate_block, log_of_count
from .counting import count_block_word
from .permutation import (
    Permutation,
    avoids_pattern_21_34,
    avoids_pattern_34_21,
    descent_bottoms,
    excedance_set,
    has_stretching_pair,
    is_n_cycle,
)

__all__ = [
    "check_directions", "check_lengths", "check_permutation_array",
    "exact_log_counts",
    "SaddlePointEstimator", "DiagonalEstimator",
    "ExcedanceWordTransformer", "PermutationStatistics",
]


def check_directions(X) -> np.ndarray:
    """Validate an ``(m, 2)`` array of positive integer directions ``(r, s)``."""
    X = check_array(X, dtype=None)
    if X.shape[1] != 2:
        raise ValueError(f"expected 2 columns (r, s), got {X.shape[1]}")
    if not np.all(np.equal(np.mod(X, 1), 0)):
        raise ValueError("directions must be integers")
    X = X.astype(np.int64)
    if np.any(X < 1):
        raise ValueError("directions must be positive")
    return X


def check_lengths(X) -> np.ndarray:
    """Validate an ``(m, 1)`` array of positive integers ``n``."""
    X = check_array(X, dtype=None)
    if X.shape[1] != 1:
        raise ValueError(f"expected 1 column (n), got {X.shape[1]}")
    if not np.all(np.equal(np.mod(X, 1), 0)) or np.any(X < 1):
        raise ValueError("lengths must be positive integers")
    return X.astype(np.int64)


def check_permutation_array(X) -> np.ndarray:
    """Validate rows as one-line permutations of ``1..n`` (1-based values)."""
    X = check_array(X, dtype=np.int64)
    n = X.shape[1]
    if not np.array_equal(np.sort(X, axis=1), np.broadcast_to(np.arange(1, n + 1), X.shape)):
        raise ValueError(f"every row must be a rearrangement of 1..{n}")
    return X


def exact_log_counts(X) -> np.ndarray:
    """Exact ``log [b^{r-1} a^s]`` for each direction row, for use as targets."""
    X = check_directions(X)
    return np.array([log_of_count(count_block_word(r - 1, s)) for r, s in X])


class SaddlePointEstimator(RegressorMixin, BaseEstimator):
    """
    Predict ``log [b^{r-1} a^s]`` from rows ``(r, s)`` by the saddle-point
    formula.

    Parameters
    ----------
    outside_sector : {"flag", "raise"}
        What to do with directions outside the admissible sector. ``"flag"``
        still predicts and records them in ``outside_sector_``.

    Attributes
    ----------
    log_ratio_ : ndarray
        ``prediction - y`` on the data passed to ``fit``, if ``y`` was given.
    """

    def __init__(self, outside_sector="flag"):
        self.outside_sector = outside_sector

    def fit(self, X, y=None):
        X = check_directions(X)
        if self.outside_sector not in ("flag", "raise"):
            raise ValueError(f"outside_sector must be 'flag' or 'raise', got {self.outside_sector!r}")
        self.n_features_in_ = 2
        if y is not None:
            y = np.asarray(y, dtype=float)
            self.log_ratio_ = self._predict(X) - y
            self.max_abs_log_ratio_ = float(np.max(np.abs(self.log_ratio_)))
        return self

    def _estimates(self, X):
        estimates = [log_estimate_block(int(r), int(s)) for r, s in X]
        self.outside_sector_ = np.array([e.outside_sector for e in estimates])
        if self.outside_sector == "raise" and self.outside_sector_.any():
            bad = X[self.outside_sector_][0]
            raise ValueError(f"direction {tuple(bad)} lies outside the sector")
        return estimates

    def _predict(self, X):
        return np.array([e.log_value for e in self._estimates(X)])

    def predict(self, X):
        check_is_fitted(self, "n_features_in_")
        return self._predict(check_directions(X))

    def predict_estimates(self, X):
        """Full :class:`~excedance.asymptotics.LogEstimate` records."""
        check_is_fitted(self, "n_features_in_")
        return self._estimates(check_directions(X))


class DiagonalEstimator(RegressorMixin, BaseEstimator):
    """Predict the log count of the most balanced block word of ``S_n`` from rows ``(n,)``."""

    def fit(self, X, y=None):
        X = check_lengths(X)
        self.n_features_in_ = 1
        if y is not None:
            self.log_ratio_ = self.predict(X) - np.asarray(y, dtype=float)
        return self

    def predict(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_lengths(X)
        return np.array([diagonal_estimate(int(n)).log_value for n in X[:, 0]])


class ExcedanceWordTransformer(TransformerMixin, BaseEstimator):
    """One-hot excedance words: column ``i`` is 1 iff position ``i+1`` is an excedance."""

    def fit(self, X, y=None):
        X = check_permutation_array(X)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_permutation_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"fitted on S_{self.n_features_in_}, got rows of length {X.shape[1]}")
        positions = np.arange(1, X.shape[1])
        return (X[:, :-1] > positions).astype(np.int8)

    def inverse_transform(self, X):
        """Map 0/1 columns back to a/b words."""
        X = np.asarray(X)
        return np.array(["".join("b" if v else "a" for v in row) for row in X])


class PermutationStatistics(TransformerMixin, BaseEstimator):
    """
    Per-permutation statistics as integer columns.

    Parameters
    ----------
    statistics : tuple of str or None
        Subset of ``excedances``, ``descent_bottoms``, ``stretching_pair``,
        ``n_cycle``, ``avoids_both``. None keeps all of them in that order.
    """

    _available = {
        "excedances": lambda p: len(excedance_set(p)),
        "descent_bottoms": lambda p: len(descent_bottoms(p)),
        "stretching_pair": lambda p: int(has_stretching_pair(p)),
        "n_cycle": lambda p: int(is_n_cycle(p)),
        "avoids_both": lambda p: int(avoids_pattern_21_34(p) and avoids_pattern_34_21(p)),
    }

    def __init__(self, statistics=None):
        self.statistics = statistics

    def _names(self):
        names = tuple(self._available) if self.statistics is None else tuple(self.statistics)
        unknown = [s for s in names if s not in self._available]
        if unknown:
            raise ValueError(f"unknown statistics {unknown}")
        return names

    def fit(self, X, y=None):
        X = check_permutation_array(X)
        self.n_features_in_ = X.shape[1]
        self.feature_names_ = self._names()
        return self

    def transform(self, X):
        check_is_fitted(self, "feature_names_")
        X = check_permutation_array(X)
        funcs = [self._available[name] for name in self.feature_names_]
        return np.array(
            [[fn(Permutation(tuple(row))) for fn in funcs] for row in X.tolist()],
            dtype=np.int64,
        ).reshape(len(X), len(funcs))

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_")
        return np.array(self.feature_names_, dtype=object)
