"""Enumeration of natural transformations between copresheaves.

The target only needs the copresheaf protocol used below (``base``,
``elements_over``, ``act``, ``weight``, ``exactness_at``), so graded and
truncated targets such as the positions of a bicomodule can be enumerated
under a degree budget.
"""
import logging

from ..utils import EnumResult, FrozenMap, sort_key

logger = logging.getLogger(__name__)


def element_order(X):
    """Elements over objects with many outgoing morphisms come first.

    Assigning those first forces the images of everything below them.
    """
    C = X.base
    objects = sorted(C.objects, key=lambda a: (-len(C.non_identity_out(a)), sort_key(a)))
    return [(a, x) for a in objects for x in X.elements(a)]


def iter_copresheaf_maps(X, Y, budget=None, injective=False, initial=None):
    """Yield every natural map ``X -> Y`` as a FrozenMap keyed ``(object, element)``.

    Args:
        X (Copresheaf): finite source
        Y: target following the copresheaf protocol, on the same base
        budget (int, optional): bound on the summed weights of the images
        injective (bool): only componentwise injective maps
        initial (dict, optional): partial assignment to extend
    """
    C = X.base
    order = element_order(X)
    assignment = {}
    used = {a: set() for a in C.objects}
    spent = [0]

    def try_assign(a, x, y, trail):
        stack = [(a, x, y)]
        while stack:
            a, x, y = stack.pop()
            key = (a, x)
            current = assignment.get(key)
            if current is not None or key in assignment:
                if current != y:
                    return False
                continue
            if injective and y in used[a]:
                return False
            w = Y.weight(a, y)
            if budget is not None and spent[0] + w > budget:
                return False
            assignment[key] = y
            trail.append(key)
            spent[0] += w
            if injective:
                used[a].add(y)
            for f in C.non_identity_out(a):
                stack.append((C.tgt(f), X.act(f, x), Y.act(f, y)))
        return True

    def undo(trail):
        for key in reversed(trail):
            y = assignment.pop(key)
            spent[0] -= Y.weight(key[0], y)
            if injective:
                used[key[0]].discard(y)

    def extend(i):
        while i < len(order) and order[i] in assignment:
            i += 1
        if i == len(order):
            yield FrozenMap(assignment)
            return
        a, x = order[i]
        remaining = None if budget is None else budget - spent[0]
        for y in Y.elements_over(a, remaining):
            trail = []
            if try_assign(a, x, y, trail):
                yield from extend(i + 1)
            undo(trail)

    start = []
    for (a, x), y in (initial or {}).items():
        if not try_assign(a, x, y, start):
            return
    yield from extend(0)


def enumerate_copresheaf_maps(X, Y, bound=None):
    """All maps ``X -> Y`` whose images weigh at most ``bound``, with the
    exactness of the target at ``bound``."""
    maps = tuple(iter_copresheaf_maps(X, Y, budget=bound))
    return EnumResult(maps, Y.exactness_at(bound))


def count_maps(X, Y, budget=None):
    return sum(1 for _ in iter_copresheaf_maps(X, Y, budget=budget))


def map_weight(h, Y):
    return sum(Y.weight(a, y) for (a, _), y in h.items())
