import logging

from ..utils import FrozenMap
from .maps import BicomoduleMap, _search, check_square

logger = logging.getLogger(__name__)


def _identical(p, q, bound):
    ops = p.operations(bound)
    if ops != q.operations(bound):
        return False
    C = p.left.category
    for I in ops:
        if p.output(I) != q.output(I) or p.degree(I) != q.degree(I) or p.arity(I) != q.arity(I):
            return False
        for f in C.non_identity_out(p.output(I)):
            if p.act(f, I) != q.act(f, I) or p.restrict(f, I) != q.restrict(f, I):
                return False
    return True


def find_bicomodule_isomorphism(p, q, bound=None):
    """An invertible bicomodule map ``p -> q`` at ``bound``, or None.

    Operations are matched by output, degree and arity sizes; arity
    bijections are searched with the restriction maps forcing as much of
    each bijection as possible.
    """
    if p.left.category.objects != q.left.category.objects \
            or p.right.category.objects != q.right.category.objects:
        return None
    if _identical(p, q, bound):
        logger.debug("%s and %s are identical at bound %s", p.name, q.name, bound)
        gamma = BicomoduleMap(p, q, lambda I: I,
                              lambda I: FrozenMap({z: z[1] for z in q.arity(I).all_elements()}),
                              name="id")
        return gamma if check_square(gamma, bound).ok else None
    return next(_search(p, q, bound, iso=True), None)
