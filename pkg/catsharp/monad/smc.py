"""The familial monad on graphs whose algebras are symmetric strict monoidal
categories.

Vertex operations are ``("v", N)``, an N-fold tensor with arity ``ul N``.
Edge operations are ``("e", N, σ, L)``: ``N`` parallel paths of lengths
``L[0..N-1]`` composed and tensored, followed by the symmetry ``σ``. Path
``i`` starts at source slot ``i``; target slot ``j`` is the end of path
``σ[j]``.
"""
import itertools
import logging

import numpy as np

from ..comod import Bicomodule
from ..fincat import G, disjoint_paths, ul
from ..utils import FrozenMap, memoize_method
from .base_monad import FamilialMonad

logger = logging.getLogger(__name__)


def _compositions(total, parts):
    """Tuples of ``parts`` non-negative ints summing to at most ``total``."""
    if parts == 0:
        yield ()
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _ints(xs):
    return tuple(int(x) for x in xs)


class SmcBicomodule(Bicomodule):
    def __init__(self):
        super().__init__(G, G, name="smc")

    def _operations(self, bound):
        for N in range(bound + 1):
            yield ("v", N)
            for sigma in itertools.permutations(range(N)):
                for L in _compositions(bound - N, N):
                    yield ("e", N, sigma, L)

    def output(self, I):
        return I[0]

    def degree(self, I):
        if I[0] == "v":
            return I[1]
        return I[1] + sum(I[3])

    @memoize_method
    def arity(self, I):
        if I[0] == "v":
            return ul(I[1])
        return disjoint_paths(I[3])

    def act(self, f, I):
        if G.is_identity(f):
            return I
        return ("v", I[1])

    @memoize_method
    def restrict(self, f, I):
        if G.is_identity(f):
            return FrozenMap({z: z[1] for z in self.arity(I).all_elements()})
        _, N, sigma, L = I
        if f == "s":
            return FrozenMap({("v", i): (i, 0) for i in range(N)})
        return FrozenMap({("v", j): (sigma[j], L[sigma[j]]) for j in range(N)})

    def degree_cap(self, X):
        return 0 if not X.elements("v") else None


class SmcMonad(FamilialMonad):
    """Composites substitute an edge operation into every edge of each path
    and a vertex operation into every vertex; the symmetry of the result
    follows each path through the substituted permutations."""

    def __init__(self):
        super().__init__(SmcBicomodule(), name="smc")

    def unit_op(self, C):
        return ("v", 1) if C == "v" else ("e", 1, (0,), (1,))

    @memoize_method
    def unit_iso(self, C):
        if C == "v":
            return FrozenMap({("v", "id_v"): 0})
        return FrozenMap({("e", "id_e"): (0, 1), ("v", "s"): (0, 0), ("v", "t"): (0, 1)})

    def mult_op(self, M, N):
        return self._composite(M, N)[0]

    def mult_witness(self, M, N):
        return self._composite(M, N)[1]

    def _block_permutation(self, sigma, K, offsets, chains):
        """Symmetry of the composite: target block ``j`` holds the ``K[σ[j]]``
        slots at the end of path ``σ[j]``, reached through its chain
        permutation."""
        result = []
        for j in range(len(sigma)):
            i = sigma[j]
            T = chains[i]
            result.extend(offsets[i] + int(T[b]) for b in range(K[i]))
        return tuple(result)

    @memoize_method
    def _composite(self, M, N):
        if M[0] == "v":
            K = [N(("v", i))[1] for i in range(M[1])]
            offsets = [0] + list(itertools.accumulate(K))
            W = {("v", offsets[i] + a): (("v", i), a) for i in range(M[1]) for a in range(K[i])}
            return ("v", offsets[-1]), FrozenMap(W)

        _, n, sigma, L = M
        K = [N(("v", (i, 0)))[1] for i in range(n)]
        offsets = [0] + list(itertools.accumulate(K))
        lengths = []
        chains = []
        W = {}
        for i in range(n):
            edges = [N(("e", (i, k))) for k in range(1, L[i] + 1)]
            T = np.arange(K[i])
            for op in edges:
                T = T[np.asarray(op[2], dtype=int)]
            chains.append(T)
            inverses = [np.argsort(np.asarray(op[2], dtype=int)) for op in edges]
            for a in range(K[i]):
                p = offsets[i] + a
                slot, cum = a, 0
                segments = []
                for k, op in enumerate(edges, start=1):
                    length = op[3][slot]
                    segments.append((k, slot, cum, cum + length))
                    cum += length
                    slot = int(inverses[k - 1][slot])
                lengths.append(cum)
                if not edges:
                    W[("v", (p, 0))] = (("v", (i, 0)), a)
                    continue
                for m in range(cum + 1):
                    k, start_slot, lo, _ = next(s for s in segments if m <= s[3])
                    W[("v", (p, m))] = (("e", (i, k)), (start_slot, m - lo))
                    if m:
                        W[("e", (p, m))] = (("e", (i, k)), (start_slot, m - lo))
        composite = ("e", offsets[-1], self._block_permutation(sigma, K, offsets, chains), _ints(lengths))
        return composite, FrozenMap(W)


def monad_smc():
    return SmcMonad()
