"""Symmetric operads and the familial monads on sets they present.

A Σ-free operad ``O`` gives the monad ``Σ_N (O_N / Σ_N) × y^N``: one
operation per orbit, represented by the least element of the orbit.
Composites are carried back to their representative by the unique
permutation relating them.
"""
import itertools
import logging
import math

from scipy.cluster.hierarchy import DisjointSet
from sympy.combinatorics import SymmetricGroup

from ..comod import Bicomodule
from ..fincat import set_copresheaf, terminal
from ..utils import FrozenMap, NotSigmaFree, Report, label, least, memoize_method, sort_ids
from .base_monad import FamilialMonad

logger = logging.getLogger(__name__)


def _inverse(sigma):
    inv = [0] * len(sigma)
    for j, s in enumerate(sigma):
        inv[s] = j
    return tuple(inv)


class SymmetricOperad:
    """A single-coloured symmetric operad with finite operation sets.

    Args:
        elements (callable): ``N -> iterable`` of ``O_N``
        act (callable): ``(o, σ) -> o·σ``; input ``j`` of ``o·σ`` is input
            ``σ[j]`` of ``o``
        unit: the identity in ``O_1``
        substitute (callable): ``(o, (o_0, ..., o_{N-1})) -> o(o_0, ..., o_{N-1})``
            with the inputs of ``o_i`` placed as block ``i``
        arity (callable): ``o -> N``
    """

    def __init__(self, elements, act, unit, substitute, arity, name="O"):
        self._elements = elements
        self.act = act
        self.unit = unit
        self.substitute = substitute
        self.arity = arity
        self.name = name

    @memoize_method
    def elements(self, N):
        return sort_ids(self._elements(N))

    @memoize_method
    def orbits(self, N):
        """Orbit representatives of ``O_N`` mapped to their orbit sizes."""
        elements = self.elements(N)
        ds = DisjointSet(elements)
        if N >= 2:
            generators = [tuple(g.array_form) for g in SymmetricGroup(N).generators]
            for o in elements:
                for g in generators:
                    ds.merge(o, self.act(o, g))
        return {least(subset): len(subset) for subset in ds.subsets()}

    def representative(self, o):
        N = self.arity(o)
        for rep in self.orbits(N):
            if self.transport(rep, o) is not None:
                return rep
        raise KeyError(f"{label(o)} is not an element of {self.name}")

    def transport(self, rep, o):
        """First permutation ``π`` in lexicographic order with ``rep·π = o``."""
        N = self.arity(o)
        for pi in itertools.permutations(range(N)):
            if self.act(rep, pi) == o:
                return pi
        return None

    def stabilizer_witness(self, o):
        N = self.arity(o)
        identity = tuple(range(N))
        for sigma in itertools.permutations(range(N)):
            if sigma != identity and self.act(o, sigma) == o:
                return sigma
        return None

    def check_sigma_free(self, max_arity):
        for N in range(max_arity + 1):
            for rep, size in self.orbits(N).items():
                if size != math.factorial(N):
                    raise NotSigmaFree(f"{self.name}: {label(rep)} has a nontrivial stabiliser",
                                       operation=rep, permutation=self.stabilizer_witness(rep))

    def __repr__(self):
        return f"SymmetricOperad({self.name})"


def _block_relabelling(sigma, sizes):
    """Input relabelling carrying ``o(blocks permuted by σ)`` to ``(o·σ)(blocks)``."""
    offsets = [0] + list(itertools.accumulate(sizes))
    permuted_sizes = [0] * len(sigma)
    for j, s in enumerate(sigma):
        permuted_sizes[s] = sizes[j]
    permuted_offsets = [0] + list(itertools.accumulate(permuted_sizes))
    tau = [0] * offsets[-1]
    for j, s in enumerate(sigma):
        for a in range(sizes[j]):
            tau[offsets[j] + a] = permuted_offsets[s] + a
    return tuple(tau)


def check_operad(O, max_arity=3):
    """Unit, equivariance and associativity laws of ``O`` on operations of
    arity at most ``max_arity``."""
    report = Report(f"operad {O.name}", bound=max_arity)
    u = O.unit
    for N in range(max_arity + 1):
        for o in O.elements(N):
            report.expect(O.substitute(u, (o,)) == o, "left-unit", label(o))
            report.expect(O.substitute(o, (u,) * N) == o, "right-unit", label(o))
            report.expect(O.act(o, tuple(range(N))) == o, "act-identity", label(o))
            for sigma in itertools.permutations(range(N)):
                for tau in itertools.permutations(range(N)):
                    composed = tuple(sigma[t] for t in tau)
                    report.expect(O.act(O.act(o, sigma), tau) == O.act(o, composed), "act-composition",
                                  (label(o), label(sigma), label(tau)))
            for sizes in itertools.product(range(max_arity + 1), repeat=N):
                if sum(sizes) > max_arity:
                    continue
                for blocks in itertools.product(*(O.elements(k) for k in sizes)):
                    whole = O.substitute(o, blocks)
                    for sigma in itertools.permutations(range(N)):
                        permuted = [None] * N
                        for j, s in enumerate(sigma):
                            permuted[s] = blocks[j]
                        lhs = O.substitute(O.act(o, sigma), blocks)
                        rhs = O.act(O.substitute(o, tuple(permuted)), _block_relabelling(sigma, sizes))
                        report.expect(lhs == rhs, "equivariance", (label(o), label(sigma), label(blocks)))
                    inner = [O.elements(1)] * sum(sizes)
                    for leaves in itertools.product(*inner):
                        offsets = [0] + list(itertools.accumulate(sizes))
                        nested = tuple(O.substitute(b, leaves[offsets[i]:offsets[i + 1]])
                                       for i, b in enumerate(blocks))
                        report.expect(O.substitute(whole, leaves) == O.substitute(o, nested),
                                      "associativity", (label(o), label(blocks), label(leaves)))
    logger.info("%s", report.summary())
    return report


def associative_operad():
    """Orderings of the inputs, ``ω`` listing them left to right."""

    def act(omega, sigma):
        inv = _inverse(sigma)
        return tuple(inv[x] for x in omega)

    def substitute(omega, blocks):
        offsets = [0] + list(itertools.accumulate(len(b) for b in blocks))
        return tuple(offsets[t] + x for t in omega for x in blocks[t])

    return SymmetricOperad(lambda N: itertools.permutations(range(N)), act, (0,), substitute, len,
                           name="Assoc")


def commutative_operad():
    """The terminal symmetric operad, one operation in each arity."""
    return SymmetricOperad(lambda N: [("com", N)], lambda o, sigma: o, ("com", 1),
                           lambda o, blocks: ("com", sum(b[1] for b in blocks)), lambda o: o[1],
                           name="Com")


class OperadBicomodule(Bicomodule):
    """Orbits ``(N, rep)`` with arity the set ``{0..N-1}`` and degree ``N``."""

    def __init__(self, operad):
        T = terminal()
        super().__init__(T, T, name=f"o_{operad.name}")
        self.operad = operad

    def _operations(self, bound):
        for N in range(bound + 1):
            for rep in self.operad.orbits(N):
                yield (N, rep)

    def output(self, I):
        return "*"

    def degree(self, I):
        return I[0]

    @memoize_method
    def arity(self, I):
        return set_copresheaf(range(I[0]), name=f"ul{I[0]}")

    def act(self, f, I):
        return I

    def restrict(self, f, I):
        return FrozenMap({z: z[1] for z in self.arity(I).all_elements()})

    def degree_cap(self, X):
        return 0 if X.size() == 0 else None


class OperadMonad(FamilialMonad):
    def __init__(self, operad, check_arity=4, allow_non_free=False):
        super().__init__(OperadBicomodule(operad), name=f"o_{operad.name}")
        self.operad = operad
        if not allow_non_free:
            operad.check_sigma_free(check_arity)
        else:
            logger.warning("%s is used without a freeness check; composites pick the first transport",
                           operad.name)

    def unit_op(self, C):
        return (1, self.operad.representative(self.operad.unit))

    def unit_iso(self, C):
        return FrozenMap({("*", "id"): 0})

    def mult_op(self, M, N):
        return self._composite(M, N)[0]

    def mult_witness(self, M, N):
        return self._composite(M, N)[1]

    @memoize_method
    def _composite(self, M, N):
        O = self.operad
        n, R = M
        blocks = [N(("*", i)) for i in range(n)]
        o = O.substitute(R, tuple(b[1] for b in blocks))
        rep = O.representative(o)
        pi = O.transport(rep, o)
        slots = [(i, a) for i, b in enumerate(blocks) for a in range(b[0])]
        inv = _inverse(pi)
        W = {("*", r): (("*", slots[inv[r]][0]), slots[inv[r]][1]) for r in range(len(slots))}
        return (len(slots), rep), FrozenMap(W)


def monad_from_operad(operad, check_arity=4, allow_non_free=False):
    """Raises NotSigmaFree when some operation of arity at most
    ``check_arity`` has a nontrivial stabiliser."""
    return OperadMonad(operad, check_arity=check_arity, allow_non_free=allow_non_free)
