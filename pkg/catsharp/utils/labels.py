"""Canonical ordering and hashable encodings of ids.

Every id in catsharp is built from ints, strings, tuples and frozensets. The
functions here give those ids a total, run-independent order so that
enumeration, "least id" choices and exports are deterministic.
"""

_RANK_NONE = 0
_RANK_INT = 1
_RANK_STR = 2
_RANK_TUPLE = 3
_RANK_SET = 4
_RANK_OTHER = 5


def sort_key(x):
    """Return a key that totally orders nested ids."""
    if x is None:
        return (_RANK_NONE,)
    if isinstance(x, bool):
        return (_RANK_INT, int(x))
    if isinstance(x, int):
        return (_RANK_INT, x)
    if isinstance(x, str):
        return (_RANK_STR, x)
    if isinstance(x, tuple):
        return (_RANK_TUPLE, len(x), tuple(sort_key(e) for e in x))
    if isinstance(x, frozenset):
        return (_RANK_SET, len(x), tuple(sorted(sort_key(e) for e in x)))
    return (_RANK_OTHER, type(x).__name__, repr(x))


def sort_ids(xs):
    return tuple(sorted(xs, key=sort_key))


def least(xs):
    return min(xs, key=sort_key)


def label(x):
    """Stable human readable string for an id."""
    if isinstance(x, FrozenMap):
        return "{" + ", ".join(f"{label(k)}: {label(v)}" for k, v in x) + "}"
    if isinstance(x, tuple):
        return "(" + ",".join(label(e) for e in x) + ")"
    if isinstance(x, frozenset):
        return "{" + ",".join(label(e) for e in sort_ids(x)) + "}"
    return str(x)


class FrozenMap(tuple):
    """Graph of a finite function, as a canonically sorted tuple of pairs.

    Equality, hashing and ordering are those of the underlying tuple, so a
    FrozenMap can sit inside any id. Calling it looks a key up.
    """

    def __new__(cls, mapping=()):
        if isinstance(mapping, FrozenMap):
            return mapping
        items = mapping.items() if hasattr(mapping, "items") else mapping
        pairs = sorted(items, key=lambda kv: sort_key(kv[0]))
        return super().__new__(cls, pairs)

    def _table(self):
        try:
            return self.__dict__["_lookup"]
        except KeyError:
            table = self.__dict__["_lookup"] = dict(tuple.__iter__(self))
            return table

    def __call__(self, key):
        return self._table()[key]

    def get(self, key, default=None):
        return self._table().get(key, default)

    def __contains__(self, key):
        return key in self._table()

    def keys(self):
        return tuple(k for k, _ in tuple.__iter__(self))

    def values(self):
        return tuple(v for _, v in tuple.__iter__(self))

    def items(self):
        return tuple(tuple.__iter__(self))

    def as_dict(self):
        return dict(self._table())

    def compose(self, other):
        """Return ``other ∘ self`` where ``other`` is any callable."""
        return FrozenMap({k: other(v) for k, v in self.items()})

    def __repr__(self):
        return f"FrozenMap({label(self)})"
