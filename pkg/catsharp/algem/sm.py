"""``sm``: symmetric monoidal structure as a wreath over ``(g, path)``.

Vertex operations ``("v", N)`` have arity ``ul N``. Edge operations
``("e", N, σ)`` have arity ``N`` disjoint edges: edge ``i`` starts at source
slot ``i`` and target slot ``j`` is the end of edge ``σ[j]``. ``α``
cocomposes a path of edge operations into ``N`` strands; the
multiplication substitutes operations blockwise.
"""
import itertools
import logging

import numpy as np

from ..comod import Bicomodule, BicomoduleMap, check_square
from ..fincat import G, disjoint_edges, ul
from ..monad import monad_path, monad_smc, monad_iso_report
from ..utils import FrozenMap, Report, memoize_method
from .base_morphism import MonadMorphism, TwoCell, compose_morphisms, identity_morphism
from .wreath import Wreath, wreath_composite

logger = logging.getLogger(__name__)


class SmBicomodule(Bicomodule):
    def __init__(self):
        super().__init__(G, G, name="sm")

    def _operations(self, bound):
        for N in range(bound + 1):
            yield ("v", N)
            for sigma in itertools.permutations(range(N)):
                yield ("e", N, sigma)

    def output(self, I):
        return I[0]

    def degree(self, I):
        return I[1]

    @memoize_method
    def arity(self, I):
        return ul(I[1]) if I[0] == "v" else disjoint_edges(I[1])

    def act(self, f, I):
        if G.is_identity(f):
            return I
        return ("v", I[1])

    @memoize_method
    def restrict(self, f, I):
        if G.is_identity(f):
            return FrozenMap({z: z[1] for z in self.arity(I).all_elements()})
        _, N, sigma = I
        if f == "s":
            return FrozenMap({("v", i): (i, 0) for i in range(N)})
        return FrozenMap({("v", j): (sigma[j], 1) for j in range(N)})

    def degree_cap(self, X):
        return 0 if not X.elements("v") else None


def _vertex(x):
    return ("v", FrozenMap({("v", 0): x}))


def _edge(source, edge, target):
    return (("e", 1), FrozenMap({("v", 0): source, ("e", 1): edge, ("v", 1): target}))


def _strands(sigmas, N):
    """Slot of every strand after each edge: ``u[i][k]`` is the source slot
    of copy ``k + 1`` used by the strand starting at ``i``."""
    inverses = [np.argsort(np.asarray(s, dtype=int)) for s in sigmas]
    strands = []
    for i in range(N):
        u = [i]
        for inv in inverses:
            u.append(int(inv[u[-1]]))
        strands.append(u)
    return strands


def _compose_symmetries(sigmas, N):
    tau = np.arange(N)
    for s in sigmas:
        tau = tau[np.asarray(s, dtype=int)]
    return tuple(int(t) for t in tau)


def cocompose(elem, path=None, constant=False):
    """``α``: a path of ``sm``-operations to ``N`` strands of paths.

    With ``constant`` set, composites of two or more edges collapse onto
    their starting vertex; that breaks the multiplication law.
    """
    m = (path or monad_path()).carrier
    M, Phi = m.split(elem)
    (_, N), start = Phi(("v", 0))
    if M == "v":
        return (("v", N), FrozenMap({("v", j): _vertex(start(("v", j))) for j in range(N)}))
    n = M[1]
    if n == 0:
        g = {}
        for i in range(N):
            x = start(("v", i))
            g[("e", i)] = (("e", 0), FrozenMap({("v", 0): x}))
            g[("v", (i, 0))] = g[("v", (i, 1))] = _vertex(x)
        return (("e", N, tuple(range(N))), FrozenMap(g))
    copies = [Phi(("e", k)) for k in range(1, n + 1)]
    sigmas = [op[2] for op, _ in copies]
    g = {}
    for i, u in enumerate(_strands(sigmas, N)):
        first = copies[0][1](("v", (i, 0)))
        if constant and n > 1:
            g[("e", i)] = (("e", 0), FrozenMap({("v", 0): first}))
            g[("v", (i, 0))] = g[("v", (i, 1))] = _vertex(first)
            continue
        h = {("v", 0): first}
        for k in range(1, n + 1):
            values = copies[k - 1][1]
            h[("e", k)] = values(("e", u[k - 1]))
            h[("v", k)] = values(("v", (u[k - 1], 1)))
        g[("e", i)] = (("e", n), FrozenMap(h))
        g[("v", (i, 0))] = _vertex(first)
        g[("v", (i, 1))] = _vertex(h[("v", n)])
    return (("e", N, _compose_symmetries(sigmas, N)), FrozenMap(g))


def _block_symmetry(sigma, sizes, inner):
    offsets = [0] + list(itertools.accumulate(sizes))
    result = []
    for j in range(len(sigma)):
        i = sigma[j]
        result.extend(offsets[i] + inner[i][b] for b in range(sizes[i]))
    return tuple(result)


def sm_unit(elem):
    """``η^sm`` followed by ``η^path``: the operations ``1`` and ``(1, id)``."""
    C, h = elem
    if C == "v":
        return (("v", 1), FrozenMap({("v", 0): _vertex(h(("v", "id_v")))}))
    s, t = h(("v", "s")), h(("v", "t"))
    g = {("e", 0): _edge(s, h(("e", "id_e")), t), ("v", (0, 0)): _vertex(s), ("v", (0, 1)): _vertex(t)}
    return (("e", 1, (0,)), FrozenMap(g))


def sm_mult(elem):
    """``μ^sm`` followed by ``η^path``: substitute blockwise and follow the
    outer symmetry through the inner ones."""
    S, g = elem
    N = S[1]
    if S[0] == "v":
        inner = [g(("v", i)) for i in range(N)]
        table = {}
        offset = 0
        for (_, K), h in inner:
            for a in range(K):
                table[("v", offset + a)] = _vertex(h(("v", a)))
            offset += K
        return (("v", offset), FrozenMap(table))
    inner = [g(("e", i)) for i in range(N)]
    sizes = [op[1] for op, _ in inner]
    table = {}
    offset = 0
    for (_, K, _), h in inner:
        for a in range(K):
            s, t = h(("v", (a, 0))), h(("v", (a, 1)))
            table[("e", offset + a)] = _edge(s, h(("e", a)), t)
            table[("v", (offset + a, 0))] = _vertex(s)
            table[("v", (offset + a, 1))] = _vertex(t)
        offset += K
    sigma = _block_symmetry(S[2], sizes, [op[2] for op, _ in inner])
    return (("e", offset, sigma), FrozenMap(table))


def sm_morphism(path=None, constant=False):
    path = monad_path() if path is None else path
    name = "sm~const" if constant else "sm"
    return MonadMorphism(path, path, SmBicomodule(), lambda elem: cocompose(elem, path, constant), name=name)


def builtin_sm(path=None):
    """The wreath ``sm`` over ``(g, path)`` whose composite is ``smc``."""
    path = monad_path() if path is None else path
    phi = sm_morphism(path)
    unit = TwoCell(identity_morphism(path), phi, sm_unit, name="η^sm")
    mult = TwoCell(compose_morphisms(phi, phi), phi, sm_mult, name="μ^sm")
    return Wreath(path, phi, unit, mult, name="sm")


def smc_comparison(T, smc=None):
    """The carrier isomorphism ``sm ◁ path -> smc``: strand ``i`` of length
    ``L_i`` is path ``i`` of ``disjoint_paths(L)``."""
    smc = monad_smc() if smc is None else smc

    def on_operations(I):
        S, J = I
        if S[0] == "v":
            return S
        _, N, sigma = S
        return ("e", N, sigma, tuple(J(("e", i))[1] for i in range(N)))

    def on_arities(I):
        colim = T.carrier.colimit(I)
        S, _ = I
        table = {}
        for E, d in smc.carrier.arity(on_operations(I)).all_elements():
            if S[0] == "v":
                table[(E, d)] = colim.cls("v", ("v", d), 0)
            else:
                i, k = d
                table[(E, d)] = colim.cls(E, ("e", i), k)
        return FrozenMap(table)

    return BicomoduleMap(T.carrier, smc.carrier, on_operations, on_arities, name="sm◁path≅smc")


def check_smc_decomposition(bound, wreath=None):
    """``sm ◁ path ≅ smc`` as familial monads at ``bound``."""
    wreath = builtin_sm() if wreath is None else wreath
    T, smc = wreath_composite(wreath), monad_smc()
    gamma = smc_comparison(T, smc)
    report = Report(f"{T.name} ≅ {smc.name}", bound=bound)
    ops = {gamma(I) for I in T.carrier.operations(bound)}
    report.expect(ops == set(smc.carrier.operations(bound)), "carrier-bijection", bound,
                  f"{len(ops)} vs {len(smc.carrier.operations(bound))}")
    report.add(check_square(gamma, bound))
    report.add(monad_iso_report(T, smc, gamma, bound))
    logger.info("%s", report.summary())
    return report
