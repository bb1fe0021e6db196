"""Familial monads: a bicomodule ``m: c ↛ c`` with unit and composite
operations carrying explicit arity isomorphisms."""
import logging
from abc import ABC, abstractmethod

from tqdm import tqdm

from ..comod import CompositeBicomodule, check_bicomodule
from ..fincat import check_copresheaf_map, iter_copresheaf_maps, map_weight, representable
from ..utils import FrozenMap, Report, label, memoize_method

logger = logging.getLogger(__name__)


class FamilialMonad(ABC):
    """Base class of familial monads.

    Args:
        carrier (Bicomodule): ``m: c ↛ c``
        name (str, optional): display name

    Subclasses provide

    * ``unit_op(C)``: the operation ``η(C)`` over ``C``
    * ``unit_iso(C)``: FrozenMap ``c[C] -> m[η(C)]`` keyed by
      ``(object, morphism)``
    * ``mult_op(M, N)``: the composite operation ``μ(M, N)`` for
      ``N: m[M] -> m(1)``
    * ``mult_witness(M, N)``: FrozenMap sending ``(object, d)`` with ``d``
      in ``m[μ(M, N)]`` to a pair ``(z, w)``, ``z = (object, element)`` of
      ``m[M]`` and ``w`` an element of ``m[N z]``
    """

    def __init__(self, carrier, name=None):
        self.carrier = carrier
        self.base = carrier.left
        self.category = carrier.left.category
        self.name = name or carrier.name
        self.square = CompositeBicomodule(carrier, carrier, name=f"{self.name}◁{self.name}")

    @abstractmethod
    def unit_op(self, C):
        pass

    @abstractmethod
    def unit_iso(self, C):
        pass

    @abstractmethod
    def mult_op(self, M, N):
        pass

    @abstractmethod
    def mult_witness(self, M, N):
        pass

    def mult_colimit(self, M, N):
        return self.square.colimit((M, N))

    def unit_at(self, X, C, x):
        """``η_X(x)`` for ``x ∈ X(C)``."""
        iso = self.unit_iso(C)
        h = {(E, iso((E, f))): X.act(f, x) for E, f in iso.keys()}
        return self.carrier.join(self.unit_op(C), FrozenMap(h))

    def unit_map(self, X):
        return FrozenMap({(C, x): self.unit_at(X, C, x) for C, x in X.all_elements()})

    @memoize_method
    def mult_at(self, elem):
        """``μ_X`` on an element ``(M, Φ)`` of ``m(m(X))``."""
        m = self.carrier
        M, Phi = m.split(elem)
        parts = {z: m.split(x) for z, x in Phi.items()}
        N = FrozenMap({z: part[0] for z, part in parts.items()})
        W = self.mult_witness(M, N)
        h = {}
        for (E, d), (z, w) in W.items():
            h[(E, d)] = parts[z][1]((E, w))
        return m.join(self.mult_op(M, N), FrozenMap(h))

    def fmap(self, h):
        return self.carrier.fmap(h)

    def kleisli(self, g, h):
        """Kleisli composite: ``g: A -> m(B)`` then ``h: B -> m(X)``, both keyed
        by ``(object, element)``."""
        mh = self.fmap(h)
        return FrozenMap({k: self.mult_at(mh(v)) for k, v in g.items()})

    def apply(self, X, bound=None, outer=None, name=None):
        return self.carrier.apply(X, bound, outer=outer, name=name)

    def __repr__(self):
        return f"{type(self).__name__}({self.name} on {self.category.name})"


def _copresheaf_iso_report(report, law, where, h, X, Y):
    for v in check_copresheaf_map(h, X, Y).all_violations():
        report.fail(law, (where, v.where), v.law)
    for a in X.base.objects:
        images = {h((a, x)) for x in X.elements(a)}
        report.expect(len(images) == len(X.elements(a)) == len(Y.elements(a)), law, (where, a),
                      "not a bijection")


def _inverse_classes(colim, W):
    """Inverse of a witness, keyed by ``(object, class representative)``."""
    return {(E, colim.cls(E, *W((E, d)))): (E, d) for E, d in W.keys()}


def _check_unit(report, m):
    p, C = m.carrier, m.category
    for a in C.objects:
        u = m.unit_op(a)
        if not report.expect(p.output(u) == a, "unit-output", label(a)):
            continue
        d = p.degree(u)
        report.expect(u in p.operations_over(a, d), "unit-enumerated", label(a), f"{label(u)} of degree {d}")
        rep = representable(C, a)
        iso = m.unit_iso(a)
        _copresheaf_iso_report(report, "unit-iso", label(a), iso, rep, p.arity(u))
        for f in C.non_identity_out(a):
            b = C.tgt(f)
            if not report.expect(p.act(f, u) == m.unit_op(b), "unit-naturality", label(f)):
                continue
            r, iso_b = p.restrict(f, u), m.unit_iso(b)
            for E, g in iso_b.keys():
                report.expect(r((E, iso_b((E, g)))) == iso((E, C.compose(f, g))),
                              "unit-naturality", (label(f), label(g)))


def _check_mult_instance(report, m, M, N):
    p = m.carrier
    R = m.mult_op(M, N)
    where = (label(M), label(N))
    if not report.expect(p.output(R) == p.output(M), "mult-output", where):
        return
    report.expect(p.degree(R) <= p.degree(M) + map_weight(N, p.positions()), "mult-degree", where)
    colim = m.mult_colimit(M, N)
    W = m.mult_witness(M, N)
    classes = FrozenMap({k: colim.cls(k[0], *W(k)) for k in W.keys()})
    _copresheaf_iso_report(report, "mult-iso", where, classes, p.arity(R), colim.copresheaf)
    C = m.category
    for f in C.non_identity_out(p.output(M)):
        M2, N2 = m.square.act(f, (M, N))
        R2 = m.mult_op(M2, N2)
        if not report.expect(R2 == p.act(f, R), "mult-naturality", (label(f),) + where):
            continue
        colim2 = m.mult_colimit(M2, N2)
        W2 = m.mult_witness(M2, N2)
        r = p.restrict(f, R)
        rc = m.square.restrict(f, (M, N))
        for E, d in W2.keys():
            lhs = classes((E, r((E, d))))
            rhs = rc((E, colim2.cls(E, *W2((E, d)))))
            report.expect(lhs == rhs, "mult-naturality", (label(f), label(d)) + where)


def _check_unit_laws(report, m, M):
    p, C = m.carrier, m.category
    a = p.output(M)
    iso = m.unit_iso(a)
    u = m.unit_op(a)
    N = FrozenMap({(E, iso((E, g))): p.act(g, M) for E, g in iso.keys()})
    if report.expect(m.mult_op(u, N) == M, "left-unit", label(M), f"{label(m.mult_op(u, N))}"):
        colim, W = m.mult_colimit(u, N), m.mult_witness(u, N)
        z = (a, iso((a, C.identity(a))))
        for E, d in p.arity(M).all_elements():
            report.expect(colim.cls(E, *W((E, d))) == colim.cls(E, z, d), "left-unit",
                          (label(M), label(d)))
    N = FrozenMap({(E, x): m.unit_op(E) for E, x in p.arity(M).all_elements()})
    if report.expect(m.mult_op(M, N) == M, "right-unit", label(M), f"{label(m.mult_op(M, N))}"):
        colim, W = m.mult_colimit(M, N), m.mult_witness(M, N)
        for E, d in p.arity(M).all_elements():
            unit_point = m.unit_iso(E)((E, C.identity(E)))
            report.expect(colim.cls(E, *W((E, d))) == colim.cls(E, (E, d), unit_point),
                          "right-unit", (label(M), label(d)))


def _check_associativity(report, m, M, N, P):
    p = m.carrier
    R = m.mult_op(M, N)
    lhs_op = m.mult_op(R, P)
    colim_R, W_R = m.mult_colimit(M, N), m.mult_witness(M, N)
    back = _inverse_classes(colim_R, W_R)

    inner = {}
    for z in N.keys():
        Pz = FrozenMap({(F, w): P(back[(F, colim_R.cls(F, z, w))])
                        for F, w in p.arity(N(z)).all_elements()})
        inner[z] = (Pz, m.mult_op(N(z), Pz))
    N2 = FrozenMap({z: v[1] for z, v in inner.items()})
    rhs_op = m.mult_op(M, N2)
    where = (label(M), label(N), label(P))
    if not report.expect(lhs_op == rhs_op, "associativity", where, f"{label(lhs_op)} != {label(rhs_op)}"):
        return
    colim_1, W_1 = m.mult_colimit(R, P), m.mult_witness(R, P)
    W_2 = m.mult_witness(M, N2)
    for E, d in W_1.keys():
        z, d2 = W_2((E, d))
        Pz, _ = inner[z]
        (F, w), v = m.mult_witness(N(z), Pz)((E, d2))
        d1 = back[(F, colim_R.cls(F, z, w))]
        report.expect(colim_1.cls(E, d1, v) == colim_1.cls(E, *W_1((E, d))), "associativity",
                      where + (label(d),))


def check_monad(m, bound, progress=True, triples=()):
    """Unit and associativity laws of ``m`` on all operations of degree at
    most ``bound``, and validity of every stated arity isomorphism.

    ``triples`` are extra ``(M, N, P)`` associativity instances checked on
    top of the enumeration, whatever their degree.
    """
    p = m.carrier
    report = Report(f"monad {m.name}", bound=bound, exactness=p.exactness_at(bound))
    report.add(check_bicomodule(p, bound))
    unit = report.add(Report("unit", bound=bound))
    _check_unit(unit, m)
    if not report.ok:
        return report
    Q = p.positions()
    mult = report.add(Report("multiplication", bound=bound))
    units = report.add(Report("unit-laws", bound=bound))
    assoc = report.add(Report("associativity", bound=bound))
    ops = p.operations(bound)
    for M in tqdm(ops, desc=f"monad laws {m.name}", disable=None if progress else True, leave=False):
        _check_unit_laws(units, m, M)
        budget = bound - p.degree(M)
        for N in iter_copresheaf_maps(p.arity(M), Q, budget=budget):
            _check_mult_instance(mult, m, M, N)
            if not mult.ok:
                continue
            R = m.mult_op(M, N)
            rest = budget - map_weight(N, Q)
            for P in iter_copresheaf_maps(p.arity(R), Q, budget=rest):
                _check_associativity(assoc, m, M, N, P)
    for M, N, P in triples:
        _check_associativity(assoc, m, M, FrozenMap(N), FrozenMap(P))
    logger.info("%s", report.summary())
    return report
