"""Polynomials ``p = Σ_I y^{p[I]}`` with graded position sets."""
import itertools
import logging
from abc import ABC, abstractmethod

from ..utils import (
    EXACT,
    BoundExhausted,
    EnumResult,
    Exactness,
    FrozenMap,
    label,
    sort_ids,
)

logger = logging.getLogger(__name__)


class Polynomial(ABC):
    """A family of positions, each with a finite set of directions.

    Positions carry a degree. Infinite polynomials are enumerated up to a
    degree bound; finite ones may be enumerated with ``bound=None``.
    """

    name = "p"
    is_finite = False

    @abstractmethod
    def positions(self, bound=None):
        """Positions of degree at most ``bound``, in canonical order."""

    @abstractmethod
    def directions(self, position):
        pass

    @abstractmethod
    def degree(self, position):
        pass

    def exactness_at(self, bound):
        if self.is_finite:
            return EXACT
        return Exactness.truncated(bound)

    def enumerate(self, bound=None):
        return EnumResult(self.positions(bound), self.exactness_at(bound))

    def _require_bound(self, bound):
        if bound is None and not self.is_finite:
            raise BoundExhausted(f"{self.name} is infinite; a degree bound is required")

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"


class FinitePolynomial(Polynomial):
    """Explicit table ``{position: directions}``.

    Args:
        table (dict): position -> iterable of directions
        degrees (dict, optional): position -> degree (default 0)
    """

    is_finite = True

    def __init__(self, table, degrees=None, name="p"):
        self.name = name
        self._table = {I: tuple(ds) for I, ds in table.items()}
        self._degrees = dict(degrees or {})
        self._positions = sort_ids(self._table)

    def positions(self, bound=None):
        if bound is None or not self._degrees:
            return self._positions
        return tuple(I for I in self._positions if self.degree(I) <= bound)

    def directions(self, position):
        return self._table[position]

    def degree(self, position):
        return self._degrees.get(position, 0)


class GradedPolynomial(Polynomial):
    """Positions produced degree by degree.

    Args:
        generator (callable): ``d -> iterable of (position, directions)``
            listing the positions of degree exactly ``d``
        max_degree (int, optional): if given, the polynomial is finite and
            has no positions above this degree
    """

    def __init__(self, generator, max_degree=None, name="p"):
        self.name = name
        self._generator = generator
        self.max_degree = max_degree
        self.is_finite = max_degree is not None
        self._by_degree = {}
        self._directions = {}
        self._degrees = {}

    def _level(self, d):
        try:
            return self._by_degree[d]
        except KeyError:
            level = []
            for I, ds in self._generator(d):
                self._directions[I] = tuple(ds)
                self._degrees[I] = d
                level.append(I)
            level = self._by_degree[d] = sort_ids(level)
            return level

    def positions(self, bound=None):
        self._require_bound(bound)
        top = self.max_degree if bound is None else bound
        if self.max_degree is not None:
            top = min(top, self.max_degree)
        return tuple(itertools.chain.from_iterable(self._level(d) for d in range(top + 1)))

    def directions(self, position):
        if position not in self._directions:
            self._locate(position)
        return self._directions[position]

    def degree(self, position):
        if position not in self._degrees:
            self._locate(position)
        return self._degrees[position]

    def _locate(self, position):
        raise KeyError(f"{label(position)} has not been enumerated in {self.name}")


def y():
    return FinitePolynomial({"*": ("*",)}, name="y")


def zero():
    return FinitePolynomial({}, name="0")


def monomial(n, name=None):
    return FinitePolynomial({"*": tuple(range(n))}, name=name or f"y^{n}")


def from_counts(counts, name="p"):
    """One position per entry, with that many directions."""
    return FinitePolynomial({i: tuple(range(k)) for i, k in enumerate(counts)}, name=name)


def poly_sum(*ps, name=None):
    table = {}
    degrees = {}
    for i, p in enumerate(ps):
        if not p.is_finite:
            raise BoundExhausted(f"sum of infinite {p.name} must be built degree-wise")
        for I in p.positions():
            table[(i, I)] = p.directions(I)
            degrees[(i, I)] = p.degree(I)
    return FinitePolynomial(table, degrees, name=name or "+".join(p.name for p in ps))


def _direction_maps(dirs, targets, degree, budget):
    """Functions ``dirs -> targets`` whose summed degree fits the budget."""
    chosen = {}

    def extend(i, spent):
        if i == len(dirs):
            yield FrozenMap(chosen)
            return
        for J in targets:
            d = degree(J)
            if budget is not None and spent + d > budget:
                continue
            chosen[dirs[i]] = J
            yield from extend(i + 1, spent + d)
        chosen.pop(dirs[i], None)

    return extend(0, 0)


class CompositePolynomial(Polynomial):
    """``p ◁ q``: positions ``(I, J)`` with ``J: p[I] -> q(1)``.

    Directions of ``(I, J)`` are pairs ``(i, j)`` with ``j ∈ q[J(i)]``.
    Directions and degrees are computed on demand, so morphisms into a
    composite can be evaluated without enumerating it.
    """

    def __init__(self, p, q, name=None):
        self.p = p
        self.q = q
        self.name = name or f"({p.name}◁{q.name})"
        self.is_finite = p.is_finite and q.is_finite
        self._cache = {}

    def positions(self, bound=None):
        if bound is None and not self.is_finite:
            raise BoundExhausted(f"{self.name} is infinite; a degree bound is required",
                                 bound=bound)
        try:
            return self._cache[bound]
        except KeyError:
            pass
        found = []
        for I in self.p.positions(bound):
            budget = None if bound is None else bound - self.p.degree(I)
            targets = self.q.positions(budget)
            for J in _direction_maps(self.p.directions(I), targets, self.q.degree, budget):
                found.append((I, J))
        result = self._cache[bound] = tuple(found)
        return result

    def exactness_at(self, bound):
        return self.p.exactness_at(bound).meet(self.q.exactness_at(bound))

    def directions(self, position):
        I, J = position
        return tuple((i, j) for i in self.p.directions(I) for j in self.q.directions(J(i)))

    def degree(self, position):
        I, J = position
        return self.p.degree(I) + sum(self.q.degree(Ji) for Ji in J.values())


def compose_poly(p, q, bound=None, name=None):
    """``p ◁ q``; enumerating it at ``bound`` certifies exactness.

    Raises:
        BoundExhausted: an infinite factor was given no bound
    """
    r = CompositePolynomial(p, q, name=name)
    if bound is None and not r.is_finite:
        raise BoundExhausted(f"{r.name} needs a degree bound")
    r.positions(bound)
    return r


def evaluate(p, S, bound=None):
    """``p(S) = Σ_I S^{p[I]}`` as pairs ``(I, f)``."""
    S = sort_ids(S)
    elements = []
    for I in p.positions(bound):
        dirs = p.directions(I)
        for values in itertools.product(S, repeat=len(dirs)):
            elements.append((I, FrozenMap(zip(dirs, values))))
    return EnumResult(tuple(elements), p.exactness_at(bound))
