"""``el``: the category of elements as a monad morphism ``(g, path) -> (c, id)``.

``el = c + c_*`` has a vertex operation ``("v", C)`` for every object and
an edge operation ``("e", C, f)`` for every morphism out of ``C``, both of
arity ``c[C]``. Applied to a copresheaf it gives the graph of elements;
``α`` composes the labels of a path.
"""
import logging

from ..comod import Bicomodule, as_comonoid
from ..fincat import G, representable
from ..monad import monad_identity, monad_path
from ..utils import FrozenMap, memoize_method
from .base_morphism import MonadMorphism

logger = logging.getLogger(__name__)


class ElBicomodule(Bicomodule):
    is_finite = True

    def __init__(self, c):
        c = as_comonoid(c)
        super().__init__(G, c, name=f"el_{c.name}")
        self.c = c.category

    def _operations(self, bound):
        C = self.c
        for a in C.objects:
            yield ("v", a)
        for f in C.morphisms:
            yield ("e", C.src(f), f)

    def output(self, I):
        return I[0]

    def degree(self, I):
        return 0

    @memoize_method
    def arity(self, I):
        return representable(self.c, I[1])

    def act(self, f, I):
        if G.is_identity(f):
            return I
        if f == "s":
            return ("v", I[1])
        return ("v", self.c.tgt(I[2]))

    @memoize_method
    def restrict(self, f, I):
        if G.is_identity(f) or f == "s":
            return FrozenMap({z: z[1] for z in self.arity(I).all_elements()})
        C = self.c
        return FrozenMap({(E, g): C.compose(I[2], g) for E, g in self.arity(self.act(f, I)).all_elements()})


def builtin_el(c, path=None):
    """``el_c`` with ``α`` sending a path of labelled edges to its composite.

    The source monad is the identity monad on ``c``; pass ``path`` to share
    one free category monad between morphisms.
    """
    c = as_comonoid(c)
    C = c.category
    path = monad_path() if path is None else path
    ident = monad_identity(c)
    p = ElBicomodule(c)
    m = path.carrier

    def alpha_at(elem):
        M, Phi = m.split(elem)
        (_, a), h = Phi(("v", 0))
        if M == "v":
            op = ("v", a)
        else:
            fs = [Phi(("e", k))[0][2] for k in range(1, M[1] + 1)]
            op = ("e", a, C.compose_path(fs) if fs else C.identity(a))
        g = {}
        for E, f in p.arity(op).all_elements():
            R = representable(C, E)
            g[(E, f)] = (E, FrozenMap({(F, k): h((F, C.compose(f, k))) for F, k in R.all_elements()}))
        return p.join(op, FrozenMap(g))

    phi = MonadMorphism(path, ident, p, alpha_at, name=f"el_{c.name}")
    logger.debug("%r", phi)
    return phi
