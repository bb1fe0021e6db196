import logging

from ..utils import EXACT, FrozenMap, LawViolation, Report, label, sort_ids
from .category import FinFunctor, terminal_category

logger = logging.getLogger(__name__)


class Copresheaf:
    """A functor from a finite category to finite sets.

    Args:
        base (FinCategory): indexing category
        sets (dict): object -> iterable of elements
        action (dict): morphism -> {element: element}; identities may be
            omitted
        weights (dict, optional): (object, element) -> non-negative int,
            used when elements carry a degree (truncated enumerations)
        check (bool): validate that every action is total and typed
    """

    def __init__(self, base, sets, action=None, weights=None, name=None, check=True):
        self.base = base
        self.name = name or "X"
        self._sets = {a: sort_ids(sets.get(a, ())) for a in base.objects}
        self._action = {f: dict(m) for f, m in (action or {}).items() if not base.is_identity(f)}
        self._weights = dict(weights) if weights else {}
        self.exactness = EXACT
        if check:
            self._validate()

    def _validate(self):
        for f in self.base.morphisms:
            if self.base.is_identity(f):
                continue
            a, b = self.base.ends(f)
            table = self._action.get(f, {})
            targets = set(self._sets[b])
            for x in self._sets[a]:
                if x not in table:
                    raise LawViolation(f"{self.name}: {label(f)} undefined on {label(x)}")
                if table[x] not in targets:
                    raise LawViolation(f"{self.name}: {label(f)} sends {label(x)} outside {label(b)}")

    is_finite = True

    def elements(self, a):
        return self._sets[a]

    def elements_over(self, a, budget=None):
        if budget is None or not self._weights:
            return self._sets[a]
        return tuple(x for x in self._sets[a] if self._weights.get((a, x), 0) <= budget)

    def exactness_at(self, budget):
        return self.exactness

    def all_elements(self):
        for a in self.base.objects:
            for x in self._sets[a]:
                yield a, x

    def act(self, f, x):
        if self.base.is_identity(f):
            return x
        return self._action[f][x]

    def weight(self, a, x):
        return self._weights.get((a, x), 0)

    @property
    def is_weighted(self):
        return any(self._weights.values())

    def has_element(self, a, x):
        return x in self._set_lookup()[a]

    def _set_lookup(self):
        try:
            return self.__dict__["_lookup"]
        except KeyError:
            lookup = self.__dict__["_lookup"] = {a: frozenset(xs) for a, xs in self._sets.items()}
            return lookup

    def size(self):
        return sum(len(xs) for xs in self._sets.values())

    def sizes(self):
        return {a: len(xs) for a, xs in self._sets.items()}

    def action_table(self, f):
        return {x: self.act(f, x) for x in self._sets[self.base.src(f)]}

    def with_exactness(self, exactness):
        self.exactness = exactness
        return self

    def __eq__(self, other):
        if not isinstance(other, Copresheaf):
            return NotImplemented
        if self.base is not other.base and self.base.morphisms != other.base.morphisms:
            return False
        if self._sets != other._sets:
            return False
        return all(self.action_table(f) == other.action_table(f) for f in self.base.morphisms)

    __hash__ = None

    def __repr__(self):
        return f"Copresheaf({self.name} on {self.base.name}: {self.sizes()})"


def check_copresheaf(X):
    report = Report(f"copresheaf {X.name}", exactness=X.exactness)
    C = X.base
    for a, x in X.all_elements():
        for f in C.out(a):
            y = X.act(f, x)
            report.expect(y in X.elements(C.tgt(f)), "typing", (label(f), label(x)))
            for g in C.out(C.tgt(f)):
                report.expect(X.act(g, y) == X.act(C.compose(f, g), x), "functoriality",
                              (label(f), label(g), label(x)))
    return report


def check_copresheaf_map(h, X, Y):
    """``h`` is a FrozenMap keyed by ``(object, element)``."""
    report = Report(f"map {X.name} -> {Y.name}")
    for a, x in X.all_elements():
        if not report.expect((a, x) in h, "totality", (a, label(x))):
            continue
        report.expect(Y.has_element(a, h((a, x))), "typing", (a, label(x)))
        for f in X.base.non_identity_out(a):
            b = X.base.tgt(f)
            report.expect(h((b, X.act(f, x))) == Y.act(f, h((a, x))), "naturality",
                          (label(f), label(x)))
    return report


def identity_map(X):
    return FrozenMap({(a, x): x for a, x in X.all_elements()})


def compose_maps(h, k):
    """First ``h`` then ``k``."""
    return FrozenMap({(a, x): k((a, y)) for (a, x), y in h.items()})


def representable(C, a):
    """The corepresentable copresheaf ``C[a] = Hom(a, -)``.

    Its element at ``b`` is a morphism ``a -> b``; ``g`` acts by
    postcomposition.
    """
    sets = {b: C.hom(a, b) for b in C.objects}
    action = {g: {f: C.compose(f, g) for f in C.hom(a, C.src(g))} for g in C.morphisms}
    return Copresheaf(C, sets, action, name=f"{C.name}[{label(a)}]", check=False)


def terminal_copresheaf(C):
    return Copresheaf(C, {a: ("*",) for a in C.objects},
                      {f: {"*": "*"} for f in C.morphisms}, name="1", check=False)


def empty_copresheaf(C):
    return Copresheaf(C, {}, {}, name="0", check=False)


_TERMINAL = terminal_category()


def set_copresheaf(elements, name=None):
    """A finite set as a copresheaf on the terminal category."""
    return Copresheaf(_TERMINAL, {"*": tuple(elements)}, {}, name=name or "S", check=False)


def terminal():
    return _TERMINAL


def restrict_along(F, P):
    """Precompose the copresheaf ``P`` with the functor ``F``."""
    if not isinstance(F, FinFunctor):
        raise TypeError("restrict_along needs a FinFunctor")
    S = F.source
    sets = {a: P.elements(F.obj(a)) for a in S.objects}
    action = {f: {x: P.act(F(f), x) for x in sets[S.src(f)]} for f in S.morphisms}
    return Copresheaf(S, sets, action, name=f"{F.name}^*{P.name}", check=False)


def coproduct(X, Y, name=None):
    if X.base is not Y.base:
        raise ValueError("coproduct needs a common base")
    C = X.base
    sets = {a: [(0, x) for x in X.elements(a)] + [(1, y) for y in Y.elements(a)] for a in C.objects}
    action = {}
    for f in C.morphisms:
        a = C.src(f)
        table = {(0, x): (0, X.act(f, x)) for x in X.elements(a)}
        table.update({(1, y): (1, Y.act(f, y)) for y in Y.elements(a)})
        action[f] = table
    return Copresheaf(C, sets, action, name=name or f"{X.name}+{Y.name}", check=False)
