"""Concrete bicomodules: explicit tables, identities, and copresheaves."""
import logging

from ..fincat import Copresheaf, empty_copresheaf, representable
from ..utils import FrozenMap, NonEmptyDirections, label, memoize_method
from .base_bicomodule import Bicomodule
from .comonoid import as_comonoid, empty_comonoid

logger = logging.getLogger(__name__)


class FiniteBicomodule(Bicomodule):
    """A bicomodule with finitely many operations, given by tables.

    Args:
        left, right (Comonoid or FinCategory): frames
        operations (dict): operation -> (output object, arity Copresheaf)
        act (dict): (f, I) -> f·I for non-identity ``f``
        restrict (dict): (f, I) -> map ``p[f·I] -> p[I]`` keyed by
            ``(object, element)``; omitted entries for empty arities are
            filled in
        degrees (dict, optional): operation -> degree (default 0)
    """

    is_finite = True

    def __init__(self, left, right, operations, act=None, restrict=None, degrees=None, name="p"):
        super().__init__(left, right, name=name)
        self._ops = dict(operations)
        self._act = dict(act or {})
        self._restrict = {k: FrozenMap(v) for k, v in (restrict or {}).items()}
        self._degrees = dict(degrees or {})

    def _operations(self, bound):
        return (I for I in self._ops if bound is None or self.degree(I) <= bound)

    def output(self, I):
        return self._ops[I][0]

    def degree(self, I):
        return self._degrees.get(I, 0)

    def arity(self, I):
        return self._ops[I][1]

    def act(self, f, I):
        if self.left.category.is_identity(f):
            return I
        return self._act[(f, I)]

    def restrict(self, f, I):
        if self.left.category.is_identity(f):
            return FrozenMap({z: z[1] for z in self.arity(I).all_elements()})
        try:
            return self._restrict[(f, I)]
        except KeyError:
            if self.arity(self.act(f, I)).size() == 0:
                return FrozenMap()
            raise


class IdentityBicomodule(Bicomodule):
    """``c: c ↛ c``, one operation per object with the corepresentable arity."""

    is_finite = True

    def __init__(self, c, name=None):
        c = as_comonoid(c)
        super().__init__(c, c, name=name or f"id_{c.name}")

    def _operations(self, bound):
        return self.left.category.objects

    def output(self, I):
        return I

    def degree(self, I):
        return 0

    @memoize_method
    def arity(self, I):
        return representable(self.right.category, I)

    def act(self, f, I):
        return self.left.category.tgt(f)

    @memoize_method
    def restrict(self, f, I):
        C = self.left.category
        return FrozenMap({(E, g): C.compose(f, g) for E, g in self.arity(C.tgt(f)).all_elements()})


def identity_bicomodule(c):
    return IdentityBicomodule(c)


class CopresheafBicomodule(Bicomodule):
    """A copresheaf ``X`` on ``c`` as a bicomodule ``c ↛ 0``.

    Operations are ``(object, element)``; every arity is empty. Element
    weights become operation degrees.
    """

    is_finite = True

    def __init__(self, X, name=None):
        super().__init__(X.base, empty_comonoid(), name=name or X.name)
        self.copresheaf = X
        self._empty = empty_copresheaf(self.right.category)

    def _operations(self, bound):
        X = self.copresheaf
        return ((a, x) for a, x in X.all_elements() if bound is None or X.weight(a, x) <= bound)

    def output(self, I):
        return I[0]

    def degree(self, I):
        return self.copresheaf.weight(*I)

    def arity(self, I):
        return self._empty

    def act(self, f, I):
        return (self.left.category.tgt(f), self.copresheaf.act(f, I[1]))

    def restrict(self, f, I):
        return FrozenMap()


def copresheaf_as_bicomodule(X):
    return CopresheafBicomodule(X)


def bicomodule_as_copresheaf(p, bound=None):
    """Inverse of ``copresheaf_as_bicomodule``.

    Raises:
        NonEmptyDirections: an operation has a non-empty arity
    """
    if isinstance(p, CopresheafBicomodule):
        return p.copresheaf
    C = p.left.category
    ops = p.operations(bound)
    for I in ops:
        if p.arity(I).size():
            raise NonEmptyDirections(f"{p.name}: operation {label(I)} has directions")
    sets = {a: p.operations_over(a, bound) for a in C.objects}
    action = {f: {I: p.act(f, I) for I in sets[C.src(f)]} for f in C.morphisms if not C.is_identity(f)}
    weights = {(p.output(I), I): p.degree(I) for I in ops if p.degree(I)}
    X = Copresheaf(C, sets, action, weights, name=p.name, check=False)
    return X.with_exactness(p.exactness_at(bound))



def _require_shallow(C):
    """Random tables below are only valid when no two non-identity
    morphisms of ``C`` compose, as in ``y`` and ``g``."""
    for f in C.morphisms:
        if not C.is_identity(f) and C.non_identity_out(C.tgt(f)):
            raise ValueError(f"{C.name}: random bicomodules need a category without composable morphisms")


def _random_copresheaf(rng, C, max_size, name):
    sets = {a: [(a, i) for i in range(int(rng.integers(0, max_size + 1)))] for a in C.objects}
    arrows = [f for f in C.morphisms if not C.is_identity(f)]
    for f in arrows:
        a, b = C.ends(f)
        if sets[a] and not sets[b]:
            sets[b].append((b, 0))
    action = {}
    for f in arrows:
        a, b = C.ends(f)
        action[f] = {x: sets[b][int(rng.integers(len(sets[b])))] for x in sets[a]}
    return Copresheaf(C, sets, action, name=name)


def _summed(C, parts, name):
    """Coproduct of ``parts`` with elements ``(k, x)`` for ``x`` in part ``k``."""
    sets = {a: [(k, x) for k, X in enumerate(parts) for x in X.elements(a)] for a in C.objects}
    action = {f: {(k, x): (k, X.act(f, x)) for k, X in enumerate(parts) for x in X.elements(C.src(f))}
              for f in C.morphisms if not C.is_identity(f)}
    return Copresheaf(C, sets, action, name=name, check=False)


def random_bicomodule(rng, left, right, n_operations=2, max_size=2, name="p"):
    """Small random ``FiniteBicomodule`` between comonoids like ``y`` and ``g``.

    Operations over objects with no outgoing morphism get random arities.
    An operation over any other object picks, for each ``f`` out of it, an
    operation ``f · I`` at random; its arity is the sum of those arities and
    a random extra part, and ``restrict`` is the inclusion of each summand.
    """
    left, right = as_comonoid(left), as_comonoid(right)
    L, R = left.category, right.category
    _require_shallow(L)
    _require_shallow(R)
    operations, act, restrict = {}, {}, {}
    sinks = [a for a in L.objects if not L.non_identity_out(a)]
    for a in sinks:
        for i in range(int(rng.integers(1, n_operations + 1))):
            operations[(a, i)] = (a, _random_copresheaf(rng, R, max_size, name=f"{name}[{a},{i}]"))
    for a in L.objects:
        out = L.non_identity_out(a)
        if not out:
            continue
        for i in range(int(rng.integers(0, n_operations + 1))):
            I = (a, i)
            targets = []
            for f in out:
                over = [J for J in operations if J[0] == L.tgt(f)]
                J = over[int(rng.integers(len(over)))]
                act[(f, I)] = J
                targets.append(J)
            extra = _random_copresheaf(rng, R, max_size, name="extra")
            parts = [operations[J][1] for J in targets] + [extra]
            operations[I] = (a, _summed(R, parts, name=f"{name}[{a},{i}]"))
            for k, (f, J) in enumerate(zip(out, targets)):
                restrict[(f, I)] = {z: (k, z[1]) for z in parts[k].all_elements()}
    logger.debug("random bicomodule %s: %d operations", name, len(operations))
    return FiniteBicomodule(left, right, operations, act, restrict, name=name)
