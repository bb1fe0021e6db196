"""Builtin familial monads: free categories, free monoids and the identity."""
import itertools
import logging

from ..comod import Bicomodule, IdentityBicomodule, as_comonoid
from ..fincat import G, longest_path_length, set_copresheaf, terminal, vec
from ..utils import FrozenMap, memoize_method
from .base_monad import FamilialMonad

logger = logging.getLogger(__name__)


class PathBicomodule(Bicomodule):
    """``path = {v}y + {e}Σ_n y^{vec n}`` on the graph-indexing category.

    Operations are ``"v"`` and ``("e", n)``; an edge operation has degree
    ``n`` and its source and target are the ends of ``vec n``.
    """

    def __init__(self):
        super().__init__(G, G, name="path")

    def _operations(self, bound):
        yield "v"
        for n in range(bound + 1):
            yield ("e", n)

    def output(self, I):
        return "v" if I == "v" else "e"

    def degree(self, I):
        return 0 if I == "v" else I[1]

    @memoize_method
    def arity(self, I):
        return vec(self.degree(I))

    def act(self, f, I):
        if G.is_identity(f):
            return I
        return "v"

    @memoize_method
    def restrict(self, f, I):
        if G.is_identity(f):
            return FrozenMap({z: z[1] for z in self.arity(I).all_elements()})
        return FrozenMap({("v", 0): 0 if f == "s" else I[1]})

    def degree_cap(self, X):
        if X.is_weighted:
            return None
        if not X.elements("v"):
            return 0
        return longest_path_length(X)


class PathMonad(FamilialMonad):
    """Free category monad: ``μ`` concatenates paths."""

    def __init__(self):
        super().__init__(PathBicomodule(), name="path")

    def unit_op(self, C):
        return "v" if C == "v" else ("e", 1)

    @memoize_method
    def unit_iso(self, C):
        if C == "v":
            return FrozenMap({("v", "id_v"): 0})
        return FrozenMap({("e", "id_e"): 1, ("v", "s"): 0, ("v", "t"): 1})

    def mult_op(self, M, N):
        if M == "v":
            return "v"
        return ("e", sum(N(("e", i))[1] for i in range(1, M[1] + 1)))

    @memoize_method
    def mult_witness(self, M, N):
        if M == "v" or M[1] == 0:
            return FrozenMap({("v", 0): (("v", 0), 0)})
        n = M[1]
        lengths = [N(("e", i))[1] for i in range(1, n + 1)]
        cum = [0] + list(itertools.accumulate(lengths))
        table = {}
        for pos in range(cum[-1] + 1):
            i = next(i for i in range(1, n + 1) if pos <= cum[i])
            table[("v", pos)] = (("e", i), pos - cum[i - 1])
        for pos in range(1, cum[-1] + 1):
            i = next(i for i in range(1, n + 1) if pos <= cum[i])
            table[("e", pos)] = (("e", i), pos - cum[i - 1])
        return FrozenMap(table)


def monad_path():
    return PathMonad()


class ListBicomodule(Bicomodule):
    """``List = Σ_N y^N`` over the terminal category."""

    def __init__(self):
        T = terminal()
        super().__init__(T, T, name="List")

    def _operations(self, bound):
        return range(bound + 1)

    def output(self, I):
        return "*"

    def degree(self, I):
        return I

    @memoize_method
    def arity(self, I):
        return set_copresheaf(range(I), name=f"ul{I}")

    def act(self, f, I):
        return I

    def restrict(self, f, I):
        return FrozenMap({z: z[1] for z in self.arity(I).all_elements()})

    def degree_cap(self, X):
        return 0 if X.size() == 0 else None


class ListMonad(FamilialMonad):
    """Free monoid monad: ``μ`` adds arities and concatenates."""

    def __init__(self):
        super().__init__(ListBicomodule(), name="List")

    def unit_op(self, C):
        return 1

    def unit_iso(self, C):
        return FrozenMap({("*", "id"): 0})

    def mult_op(self, M, N):
        return sum(N.values())

    @memoize_method
    def mult_witness(self, M, N):
        table = {}
        offset = 0
        for i in range(M):
            k = N(("*", i))
            for a in range(k):
                table[("*", offset + a)] = (("*", i), a)
            offset += k
        return FrozenMap(table)


def monad_list():
    return ListMonad()


class IdentityMonad(FamilialMonad):
    """The identity monad on ``c``: every composite is the unit."""

    def __init__(self, c):
        c = as_comonoid(c)
        super().__init__(IdentityBicomodule(c), name=f"id_{c.name}")

    def unit_op(self, C):
        return C

    @memoize_method
    def unit_iso(self, C):
        return FrozenMap({z: z[1] for z in self.carrier.arity(C).all_elements()})

    def mult_op(self, M, N):
        return M

    @memoize_method
    def mult_witness(self, M, N):
        z = (M, self.category.identity(M))
        return FrozenMap({k: (z, k[1]) for k in self.carrier.arity(M).all_elements()})


def monad_identity(c):
    return IdentityMonad(c)
