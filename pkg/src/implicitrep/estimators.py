"""scikit-learn style front end: fit a labeling scheme to a graph, then
answer adjacency queries from the labels alone."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .labeling.core import Labeling, verify_labeling
from .labeling.schemes import get_scheme
from .validation import check_bipartite_graph, check_pairs


class ImplicitLabeler(BaseEstimator):
    """Adjacency labeling of a single graph.

    Parameters
    ----------
    scheme : str
        Registered scheme name (``chain``, ``ftt``, ``zk`` ...).
    t, k : int
        Class parameters; ignored by schemes that do not take them.
    heavy_side : {"A", "B"}
        Side whose stars are forbidden, for the one-sided schemes.
    side_a : iterable of int or None
        Explicit bipartition; by default the canonical 2-colouring.
    check_input : bool
        Run the class membership test before labeling.

    Attributes
    ----------
    labeling_ : Labeling
    n_vertices_ : int
    max_bits_ : int
        Longest label payload.
    constant_ : int
        C with every payload at most C * ceil(log2(n + 1)) bits.
    """

    def __init__(self, scheme="chain", t=2, k=3, heavy_side="A", max_parts=8, side_a=None, check_input=True):
        self.scheme = scheme
        self.t = t
        self.k = k
        self.heavy_side = heavy_side
        self.max_parts = max_parts
        self.side_a = side_a
        self.check_input = check_input

    def _scheme_kwargs(self):
        return {"t": self.t, "k": self.k, "heavy_side": self.heavy_side, "max_parts": self.max_parts}

    def fit(self, X, y=None):
        info = get_scheme(self.scheme)
        bg = check_bipartite_graph(X, self.side_a)
        self.labeling_ = info.run(bg, check=self.check_input, **self._scheme_kwargs())
        self.graph_ = bg
        self.n_vertices_ = bg.n
        self.max_bits_ = self.labeling_.max_payload_bits
        self.constant_ = self.labeling_.constant
        return self

    def predict(self, pairs):
        """Adjacency of each ``(u, v)`` row, decoded from the two labels."""
        check_is_fitted(self, "labeling_")
        arr = check_pairs(pairs, self.n_vertices_)
        lab = self.labeling_
        return np.fromiter((lab.adjacent(int(u), int(v)) for u, v in arr), dtype=bool, count=len(arr))

    def transform(self, X=None):
        """Hex labels, one per vertex."""
        check_is_fitted(self, "labeling_")
        return np.array([label.to_hex() for label in self.labeling_.labels], dtype=object)

    def fit_transform(self, X, y=None):
        return self.fit(X, y).transform()

    def score(self, pairs, y):
        """Fraction of pairs whose decoded adjacency equals ``y``."""
        pred = self.predict(pairs)
        y = np.asarray(y, dtype=bool)
        if y.shape != pred.shape:
            raise ValueError(f"y has shape {y.shape}, expected {pred.shape}")
        return float(np.mean(pred == y)) if len(y) else 1.0

    def verify(self):
        check_is_fitted(self, "labeling_")
        return verify_labeling(self.graph_, self.labeling_)

    def to_json(self) -> str:
        check_is_fitted(self, "labeling_")
        return self.labeling_.to_json()

    @staticmethod
    def load_labeling(text: str) -> Labeling:
        return Labeling.from_json(text)
