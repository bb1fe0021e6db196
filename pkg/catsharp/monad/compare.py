import logging

from ..comod.maps import _search
from ..fincat import iter_copresheaf_maps
from ..utils import FrozenMap, Report, label

logger = logging.getLogger(__name__)


def monad_iso_report(m1, m2, gamma, bound):
    """Whether the carrier isomorphism ``γ`` preserves units and composites,
    arity isomorphisms included."""
    p, q = m1.carrier, m2.carrier
    report = Report(f"{m1.name} ≅ {m2.name} via {gamma.name}", bound=bound)
    for C in m1.category.objects:
        u = m1.unit_op(C)
        if not report.expect(gamma(u) == m2.unit_op(C), "unit", label(C)):
            continue
        s, iso1, iso2 = gamma.sharp(u), m1.unit_iso(C), m2.unit_iso(C)
        for (E, f), w in iso1.items():
            report.expect(s((E, iso2((E, f)))) == w, "unit-iso", (label(C), label(f)))
    composites = report.add(Report("composites", bound=bound))
    isos = report.add(Report("composite-isos", bound=bound))
    Q = p.positions()
    for M in p.operations(bound):
        sM = gamma.sharp(M)
        for N in iter_copresheaf_maps(p.arity(M), Q, budget=bound - p.degree(M)):
            N2 = FrozenMap({k: gamma(N((k[0], w))) for k, w in sM.items()})
            R1, R2 = m1.mult_op(M, N), m2.mult_op(gamma(M), N2)
            where = (label(M), label(N))
            if not composites.expect(gamma(R1) == R2, "composite", where, f"{label(gamma(R1))} != {label(R2)}"):
                continue
            colim = m1.mult_colimit(M, N)
            W1, W2, sR = m1.mult_witness(M, N), m2.mult_witness(gamma(M), N2), gamma.sharp(R1)
            for (E, d2), (z2, w2) in W2.items():
                z1 = (z2[0], sM(z2))
                back = colim.cls(E, z1, gamma.sharp(N(z1))((E, w2)))
                isos.expect(back == colim.cls(E, *W1((E, sR((E, d2))))), "composite-iso",
                            where + (label(d2),))
    return report


def compare_monads(m1, m2, bound, limit=64):
    """A carrier isomorphism ``m1 -> m2`` at ``bound`` preserving units and
    composites, or None. At most ``limit`` carrier isomorphisms are tried."""
    if m1.category.objects != m2.category.objects:
        return None
    for i, gamma in enumerate(_search(m1.carrier, m2.carrier, bound, iso=True)):
        if i >= limit:
            logger.warning("compare_monads gave up after %d carrier isomorphisms", limit)
            break
        report = monad_iso_report(m1, m2, gamma, bound)
        if report.ok:
            return gamma
        logger.debug("%s", report.summary())
    return None
