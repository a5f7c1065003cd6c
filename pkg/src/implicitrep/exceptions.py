"""Exception hierarchy.

Every error that certifies something about the input carries a ``witness``
attribute (a tuple of vertex ids, or a richer object where documented) so that
callers and the CLI can emit it in machine-readable form.
"""


class ImplicitRepError(Exception):
    """Base class for all errors raised by this package."""

    witness = None

    def to_dict(self):
        return {"error": type(self).__name__, "message": str(self), "witness": _jsonable(self.witness)}


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(x) for x in items]
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return repr(obj)


class GraphError(ImplicitRepError, ValueError):
    """Malformed graph input (loops, out-of-range vertices, duplicate pairs)."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position
        self.witness = position


class NotBipartiteError(ImplicitRepError, ValueError):
    """Raised with an odd cycle (vertex list in cyclic order) as witness."""

    def __init__(self, cycle):
        super().__init__(f"graph is not bipartite: odd cycle of length {len(cycle)}")
        self.witness = tuple(cycle)


class SearchBudgetExceeded(ImplicitRepError, RuntimeError):
    """A backtracking search ran out of its node budget before deciding."""

    def __init__(self, budget, what="search"):
        super().__init__(f"{what} exceeded its node budget of {budget}")
        self.budget = budget


class CapExceeded(ImplicitRepError, ValueError):
    """An exponential computation was asked to run beyond its configured cap."""

    def __init__(self, what, value, cap):
        super().__init__(f"{what}: {value} exceeds cap {cap}")
        self.value = value
        self.cap = cap


class NotInClassError(ImplicitRepError, ValueError):
    """The input contains a forbidden structure of the class a scheme handles.

    ``pattern`` names the obstruction and ``witness`` maps pattern vertices to
    input vertices (or lists a cycle for chordality violations).
    """

    def __init__(self, pattern, witness, detail=""):
        msg = f"input contains forbidden {pattern}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.pattern = pattern
        self.witness = tuple(witness) if witness is not None else None

    def to_dict(self):
        out = super().to_dict()
        out["pattern"] = self.pattern
        return out


class DecompositionError(ImplicitRepError, ValueError):
    """A decomposition provider or covering violated its contract."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SchemeInvariantError(ImplicitRepError, RuntimeError):
    """A structural claim the construction relies on failed on an input that
    passed the membership checks.  That would be a counterexample to the
    construction itself, so it is surfaced rather than suppressed."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ChainPartitionExhausted(ImplicitRepError, RuntimeError):
    """No partition into at most ``max_parts`` chain-compatible homogeneous
    sets was found (search exhausted or out of budget)."""

    def __init__(self, max_parts, vertices, budget_hit=False):
        why = "budget exhausted" if budget_hit else "no such partition"
        super().__init__(f"chain partition with <= {max_parts} parts not found ({why})")
        self.max_parts = max_parts
        self.budget_hit = budget_hit
        self.witness = tuple(vertices)


class DecodeError(ImplicitRepError, ValueError):
    """Malformed label payload or labels from incompatible schemes."""


class SameVertexError(DecodeError):
    """The two labels identify the same vertex."""


class NotEmbeddableError(ImplicitRepError, ValueError):
    """The graph is not an induced subgraph of a hypercube."""

    def __init__(self, component):
        super().__init__("graph is not an induced subgraph of a hypercube")
        self.witness = tuple(component)


class CodeError(ImplicitRepError, ValueError):
    """Invalid hypercube code (cycle in the parent map, entry out of range)."""
