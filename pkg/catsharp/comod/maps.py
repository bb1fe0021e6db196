"""Maps of bicomodules (squares of Cat♯), their checks and compositions."""
import logging

from ..fincat import iter_copresheaf_maps
from ..poly import PolyMorphism, compare_morphisms, identity_morphism, tri_morphisms
from ..utils import FrameMismatch, FrozenMap, Report, label, sort_key
from .comonoid import check_cofunctor
from .compose import CompositeBicomodule

logger = logging.getLogger(__name__)


def _as_callable(m):
    if isinstance(m, dict):
        return m.__getitem__
    return m


class BicomoduleMap:
    """A map ``γ: p -> q`` of bicomodules.

    Args:
        dom, cod (Bicomodule): ``p`` and ``q``
        on_operations (callable or dict): ``I -> γ(I)``
        on_arities (callable or dict): ``I -> γ♯_I``, a map
            ``q[γ(I)] -> p[I]`` keyed by ``(object, element)``
        left_frame, right_frame (PolyMorphism, optional): cofunctors
            ``c -> c'`` and ``d -> d'``; identities when omitted
    """

    def __init__(self, dom, cod, on_operations, on_arities, name="γ", left_frame=None, right_frame=None):
        self.dom = dom
        self.cod = cod
        self._on_operations = _as_callable(on_operations)
        self._on_arities = _as_callable(on_arities)
        self.name = name
        self.left_frame = left_frame
        self.right_frame = right_frame
        self._sharps = {}

    def __call__(self, I):
        return self._on_operations(I)

    def sharp(self, I):
        try:
            return self._sharps[I]
        except KeyError:
            s = self._sharps[I] = FrozenMap(self._on_arities(I))
            return s

    def as_poly_morphism(self):
        return PolyMorphism(self.dom.carrier(), self.cod.carrier(), self,
                            lambda I, d: (d[0], self.sharp(I)(d)), name=self.name)

    def then(self, other):
        """Vertical composite, first ``self`` then ``other``."""
        first, second = self, other

        def on_arities(I):
            inner = first.sharp(I)
            return FrozenMap({k: inner((k[0], w)) for k, w in second.sharp(first(I)).items()})

        return BicomoduleMap(first.dom, second.cod, lambda I: second(first(I)), on_arities,
                             name=f"{second.name}∘{first.name}")

    def __repr__(self):
        return f"BicomoduleMap({self.name}: {self.dom.name} -> {self.cod.name})"


def identity_map_of(p):
    return BicomoduleMap(p, p, lambda I: I,
                         lambda I: FrozenMap({z: z[1] for z in p.arity(I).all_elements()}),
                         name=f"id_{p.name}")


def check_square(gamma, bound=None, left_frame=None, right_frame=None):
    """The square laws ``λ_q γ = (φ ◁ γ) λ_p`` and ``ρ_q γ = (γ ◁ ψ) ρ_p``.

    Frames default to those stored on ``γ``, then to identities; a
    non-identity frame is checked as a cofunctor first.
    """
    p, q = gamma.dom, gamma.cod
    phi = left_frame or gamma.left_frame
    psi = right_frame or gamma.right_frame
    report = Report(f"square {gamma.name}", bound=bound, exactness=p.exactness_at(bound))
    if phi is not None:
        report.add(check_cofunctor(phi, p.left, q.left))
    elif p.left.category.objects != q.left.category.objects:
        raise FrameMismatch(f"{gamma.name}: left frames differ and no cofunctor was given")
    if psi is not None:
        report.add(check_cofunctor(psi, p.right, q.right))
    elif p.right.category.objects != q.right.category.objects:
        raise FrameMismatch(f"{gamma.name}: right frames differ and no cofunctor was given")
    phi = phi or identity_morphism(p.left.carrier)
    psi = psi or identity_morphism(p.right.carrier)

    ops = p.operations(bound)
    typed = []
    for I in ops:
        J = gamma(I)
        if not report.expect(q.output(J) == phi(p.output(I)), "typing", label(I),
                             f"{label(J)} sits over {label(q.output(J))}"):
            continue
        keys = set(gamma.sharp(I).keys())
        expected = set(q.arity(J).all_elements())
        if report.expect(keys == expected, "arity-typing", label(I)):
            typed.append(I)
    if not report.ok:
        return report
    g = gamma.as_poly_morphism()
    compare_morphisms(report, "left-square", g.then(q.left_coaction()),
                      p.left_coaction().then(tri_morphisms(phi, g)), typed)
    compare_morphisms(report, "right-square", g.then(q.right_coaction()),
                      p.right_coaction().then(tri_morphisms(g, psi)), typed)
    return report


def maps_equal(gamma, delta, bound=None, law="equality"):
    """Pointwise comparison of two parallel bicomodule maps."""
    report = Report(f"{gamma.name} = {delta.name}", bound=bound)
    for I in gamma.dom.operations(bound):
        if not report.expect(gamma(I) == delta(I), law, label(I),
                             f"{label(gamma(I))} != {label(delta(I))}"):
            continue
        a, b = gamma.sharp(I), delta.sharp(I)
        for k, w in a.items():
            report.expect(w == b.get(k), law, (label(I), label(k)), f"{label(w)} != {label(b.get(k))}")
    return report


def whisker_right(gamma, r):
    """``γ ◁ r: p ◁ r -> p' ◁ r``."""
    dom, cod = CompositeBicomodule(gamma.dom, r), CompositeBicomodule(gamma.cod, r)

    def on_operations(I):
        P, J = I
        s = gamma.sharp(P)
        return (gamma(P), FrozenMap({k: J((k[0], w)) for k, w in s.items()}))

    def on_arities(I):
        P, _ = I
        s = gamma.sharp(P)
        source = dom.colimit(I)
        return FrozenMap({(F, (z, w)): source.cls(F, (z[0], s(z)), w)
                          for F, (z, w) in cod.arity(on_operations(I)).all_elements()})

    return BicomoduleMap(dom, cod, on_operations, on_arities, name=f"{gamma.name}◁{r.name}")


def whisker_left(r, gamma):
    """``r ◁ γ: r ◁ q -> r ◁ q'``."""
    dom, cod = CompositeBicomodule(r, gamma.dom), CompositeBicomodule(r, gamma.cod)

    def on_operations(I):
        P, J = I
        return (P, J.compose(gamma))

    def on_arities(I):
        source = dom.colimit(I)
        _, J = I
        return FrozenMap({(F, (z, w)): source.cls(F, z, gamma.sharp(J(z))((F, w)))
                          for F, (z, w) in cod.arity(on_operations(I)).all_elements()})

    return BicomoduleMap(dom, cod, on_operations, on_arities, name=f"{r.name}◁{gamma.name}")


def _search(p, q, bound, iso):
    """Backtracking over operation images and arity maps.

    Operations over objects with fewer outgoing morphisms are placed first,
    so the images of ``f · I`` usually exist when ``I`` is reached and force
    part of its arity map.
    """
    C = p.left.category
    ops = sorted(p.operations(bound),
                 key=lambda I: (len(C.non_identity_out(p.output(I))), sort_key(I)))
    if iso:
        q_ops = q.operations(bound)
        if len(q_ops) != len(ops):
            return

        def invariant(r, I):
            return (r.output(I), r.degree(I), tuple(sorted(r.arity(I).sizes().items())))

        q_by_invariant = {}
        for J in q_ops:
            q_by_invariant.setdefault(invariant(q, J), []).append(J)
    on_ops = {}
    on_arities = {}
    taken = set()

    def candidates(I):
        if iso:
            return [J for J in q_by_invariant.get(invariant(p, I), ()) if J not in taken]
        return q.operations_over(p.output(I), bound)

    def forced(I, J):
        """Values of ``γ♯_I`` forced by already placed ``f · I``; None on conflict."""
        fixed = {}
        for f in C.non_identity_out(p.output(I)):
            I2 = p.act(f, I)
            if I2 not in on_ops:
                continue
            if q.act(f, J) != on_ops[I2]:
                return None
            rq, rp, s2 = q.restrict(f, J), p.restrict(f, I), on_arities[I2]
            for k, w in rq.items():
                key = (k[0], w)
                value = rp((k[0], s2(k)))
                if fixed.setdefault(key, value) != value:
                    return None
        return fixed

    def extend(i):
        if i == len(ops):
            gamma = BicomoduleMap(p, q, dict(on_ops), dict(on_arities))
            if check_square(gamma, bound).ok:
                yield gamma
            return
        I = ops[i]
        for J in candidates(I):
            fixed = forced(I, J)
            if fixed is None:
                continue
            on_ops[I] = J
            if iso:
                taken.add(J)
            for s in iter_copresheaf_maps(q.arity(J), p.arity(I), injective=iso, initial=fixed):
                on_arities[I] = s
                yield from extend(i + 1)
            on_arities.pop(I, None)
            del on_ops[I]
            taken.discard(J)

    yield from extend(0)


def enumerate_bicomodule_maps(p, q, bound=None):
    """Every bicomodule map ``p -> q`` between finitely presented
    bicomodules with identity frames."""
    if not (p.left.category.objects == q.left.category.objects
            and p.right.category.objects == q.right.category.objects):
        raise FrameMismatch(f"{p.name} and {q.name} have different frames")
    return _search(p, q, bound, iso=False)
