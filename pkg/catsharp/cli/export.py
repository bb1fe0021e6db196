"""Native YAML, tables and GraphML for categories, copresheaves, theory
presentations and nerves.

A native export is itself a spec file: loading it gives back a category
(or a copresheaf on its base) isomorphic to the exported one.
"""
import logging

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402
import pandas as pd  # noqa: E402
import yaml  # noqa: E402

from ..fincat import category_of_elements  # noqa: E402
from ..utils import label  # noqa: E402

logger = logging.getLogger(__name__)


def category_to_native(C):
    identity_set = {C.identity(a) for a in C.objects}
    return {
        "objects": [label(a) for a in C.objects],
        "identities": {label(a): label(C.identity(a)) for a in C.objects},
        "morphisms": {label(f): [label(C.src(f)), label(C.tgt(f))]
                      for f in C.morphisms if f not in identity_set},
        "compose": [[label(f), label(g), label(h)] for (f, g), h in sorted(C.composition_items(), key=str)
                    if f not in identity_set and g not in identity_set],
    }


def copresheaf_to_native(X, base=None):
    C = X.base
    return {
        "base": base or C.name,
        "sets": {label(a): [label(x) for x in X.elements(a)] for a in C.objects},
        "action": {label(f): {label(x): label(X.act(f, x)) for x in X.elements(C.src(f))}
                   for f in C.morphisms if not C.is_identity(f)},
    }


def native_category(C, name=None):
    """A spec document declaring ``C``."""
    return {"categories": {name or C.name: category_to_native(C)}}


def native_copresheaf(X, name=None):
    """A spec document declaring ``X`` and its base."""
    base = X.base.name
    return {
        "categories": {base: category_to_native(X.base)},
        "copresheaves": {name or X.name: copresheaf_to_native(X, base=base)},
    }


def to_yaml(document):
    return yaml.safe_dump(document, sort_keys=True, allow_unicode=True, default_flow_style=None)


def hom_table(counts, objects):
    """``counts[i][j] = |hom(objects[i], objects[j])|`` as a labelled frame."""
    labels = [label(I) for I in objects]
    return pd.DataFrame(counts, index=pd.Index(labels, name="hom"), columns=labels)


def sizes_table(rows, columns, index="operation"):
    """One row per ``(key, values...)``."""
    frame = pd.DataFrame([[label(k)] + list(v) for k, v in rows], columns=[index] + list(columns))
    return frame.set_index(index)


def format_table(frame):
    return frame.to_string() + "\n"


def category_graph(C):
    g = nx.MultiDiGraph(name=C.name)
    for a in C.objects:
        g.add_node(label(a), label=label(a))
    for f in C.morphisms:
        if C.is_identity(f):
            continue
        g.add_edge(label(C.src(f)), label(C.tgt(f)), key=label(f), label=label(f))
    return g


def copresheaf_graph(X):
    """The graph itself for a copresheaf on ``g``, otherwise the category
    of elements."""
    C = X.base
    if set(C.objects) == {"v", "e"} and C.has_morphism("s") and C.has_morphism("t"):
        g = nx.MultiDiGraph(name=X.name)
        for v in X.elements("v"):
            g.add_node(label(v), label=label(v))
        for e in X.elements("e"):
            g.add_edge(label(X.act("s", e)), label(X.act("t", e)), key=label(e), label=label(e))
        return g
    el, _ = category_of_elements(X)
    return category_graph(el)


def to_graphml(g):
    return "\n".join(nx.generate_graphml(g)) + "\n"


def plot_hom_counts(counts, objects, out_image="hom_counts.png", title=None):
    """Heat map of a hom-count matrix."""
    labels = [label(I) for I in objects]
    f, ax = plt.subplots(constrained_layout=True, figsize=(1 + 0.6 * len(labels), 1 + 0.5 * len(labels)))
    image = ax.imshow(counts, cmap="viridis")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90)
    ax.set_yticks(range(len(labels)))
    ax.set_yticklabels(labels)
    for i in range(len(labels)):
        for j in range(len(labels)):
            ax.text(j, i, int(counts[i][j]), ha="center", va="center", color="w", fontsize=7)
    ax.set_xlabel("target")
    ax.set_ylabel("source")
    if title:
        ax.set_title(title)
    f.colorbar(image, ax=ax)
    f.savefig(out_image)
    logger.info("plot path: %s", out_image)
    plt.close(f)
    return out_image
