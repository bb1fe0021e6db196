import logging

from ..utils import FrozenMap, SizeMismatch, sort_key
from .category import FinCategory, FinFunctor, same_category
from .copresheaf import Copresheaf, check_copresheaf_map
from .homs import iter_copresheaf_maps

logger = logging.getLogger(__name__)


def find_isomorphism(A, B, strict=False):
    """Find an isomorphism between two finite categories or two copresheaves.

    Returns a FinFunctor (categories) or a FrozenMap keyed by
    ``(object, element)`` (copresheaves), or None. Sizes are compared
    first; with ``strict`` a size difference raises SizeMismatch.
    """
    if isinstance(A, FinCategory) and isinstance(B, FinCategory):
        if A.size() != B.size():
            return _mismatch(A, B, strict)
        return _category_iso(A, B)
    if isinstance(A, Copresheaf) and isinstance(B, Copresheaf):
        if not same_category(A.base, B.base):
            raise ValueError("copresheaves live on different bases")
        if A.sizes() != B.sizes():
            return _mismatch(A, B, strict)
        return _copresheaf_iso(A, B)
    raise TypeError(f"cannot compare {type(A).__name__} with {type(B).__name__}")


def _mismatch(A, B, strict):
    logger.debug("size mismatch between %r and %r", A, B)
    if strict:
        raise SizeMismatch(f"{A!r} and {B!r} differ in size")
    return None


def _copresheaf_iso(A, B):
    if A == B:
        return FrozenMap({(a, x): x for a, x in A.all_elements()})
    return next(iter_copresheaf_maps(A, B, injective=True), None)


def _invariant(C, a):
    return (
        len(C.hom(a, a)),
        tuple(sorted(len(C.hom(a, b)) for b in C.objects)),
        tuple(sorted(len(C.hom(b, a)) for b in C.objects)),
    )


def _identity_functor(A, B):
    if A.objects != B.objects or A.morphisms != B.morphisms:
        return None
    F = FinFunctor(A, B, {a: a for a in A.objects}, {f: f for f in A.morphisms})
    for f in A.morphisms:
        if A.ends(f) != B.ends(f):
            return None
        for g in A.out(A.tgt(f)):
            if A.compose(f, g) != B.compose(f, g):
                return None
    return F


def _category_iso(A, B):
    if same_category(A, B):
        return FinFunctor(A, B, {a: a for a in A.objects}, {f: f for f in A.morphisms})
    F = _identity_functor(A, B)
    if F is not None:
        return F

    inv_a = {a: _invariant(A, a) for a in A.objects}
    inv_b = {b: _invariant(B, b) for b in B.objects}
    objects = sorted(A.objects, key=lambda a: (-len(A.out(a)), sort_key(a)))
    on_objects = {}
    taken = set()

    def objects_ok(a, b):
        for a2, b2 in on_objects.items():
            if len(A.hom(a, a2)) != len(B.hom(b, b2)) or len(A.hom(a2, a)) != len(B.hom(b2, b)):
                return False
        return True

    def assign_objects(i):
        if i == len(objects):
            result = _morphism_iso(A, B, on_objects)
            if result is not None:
                yield result
            return
        a = objects[i]
        for b in B.objects:
            if b in taken or inv_b[b] != inv_a[a] or len(A.hom(a, a)) != len(B.hom(b, b)):
                continue
            if not objects_ok(a, b):
                continue
            on_objects[a] = b
            taken.add(b)
            yield from assign_objects(i + 1)
            del on_objects[a]
            taken.discard(b)

    return next(assign_objects(0), None)


def _morphism_iso(A, B, on_objects):
    phi = {A.identity(a): B.identity(b) for a, b in on_objects.items()}
    used = set(phi.values())
    order = sorted((f for f in A.morphisms if not A.is_identity(f)),
                   key=lambda f: (len(A.hom(*A.ends(f))), sort_key(f)))

    def propagate(f, g, trail):
        pending = [(f, g)]
        while pending:
            f, g = pending.pop()
            if f in phi:
                if phi[f] != g:
                    return False
                continue
            if g in used:
                return False
            a, b = A.ends(f)
            if B.ends(g) != (on_objects[a], on_objects[b]):
                return False
            phi[f] = g
            used.add(g)
            trail.append(f)
            for h in A.into(a):
                if h in phi:
                    pending.append((A.compose(h, f), B.compose(phi[h], g)))
            for h in A.out(b):
                if h in phi:
                    pending.append((A.compose(f, h), B.compose(g, phi[h])))
        return True

    def undo(trail):
        for f in reversed(trail):
            used.discard(phi.pop(f))

    def extend(i):
        while i < len(order) and order[i] in phi:
            i += 1
        if i == len(order):
            return FinFunctor(A, B, dict(on_objects), dict(phi))
        f = order[i]
        a, b = A.ends(f)
        for g in B.hom(on_objects[a], on_objects[b]):
            trail = []
            if propagate(f, g, trail):
                found = extend(i + 1)
                if found is not None:
                    return found
            undo(trail)
        return None

    return extend(0)


def is_isomorphism(h, X, Y):
    if not check_copresheaf_map(h, X, Y).ok:
        return False
    for a in X.base.objects:
        images = {h((a, x)) for x in X.elements(a)}
        if len(images) != len(X.elements(a)) or len(images) != len(Y.elements(a)):
            return False
    return True
