"""Instance files and instance generators.

Instance files are JSON documents::

    {"kind": "hypergraph", "vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]}

``kind`` is one of ``hypergraph`` (default), ``simple``, ``graph``,
``simplicial`` and ``paths``.  Simplicial complexes take either ``faces``
(must already be closed under subsets) or ``facets`` (closed here).  Paths
take ``paths``: words whose characters are vertices, e.g. ``["bfcg", "aed"]``,
or lists of labels.
"""

from __future__ import annotations

import itertools
import json
import random
from typing import Iterator

from .hypergraph import Hypergraph
from .setcomp import DomainError
from .submonoids import Graph, SetOfPaths, SimpleHypergraph, SimplicialComplex

KINDS = ("hypergraph", "simple", "graph", "simplicial", "paths")


class InstanceError(ValueError):
    """Malformed instance file; the message names the offending line or field."""


def _labels(value, field: str) -> list[str]:
    if not isinstance(value, list):
        raise InstanceError(f"field '{field}': expected a list, got {type(value).__name__}")
    out = []
    for i, v in enumerate(value):
        if not isinstance(v, (str, int)) or isinstance(v, bool):
            raise InstanceError(f"field '{field}[{i}]': labels must be strings or integers")
        out.append(str(v))
    return out


def _list_of_lists(doc: dict, field: str) -> list[list[str]]:
    value = doc.get(field, [])
    if not isinstance(value, list):
        raise InstanceError(f"field '{field}': expected a list of lists")
    return [_labels(item, f"{field}[{i}]") for i, item in enumerate(value)]


def instance_from_dict(doc) -> object:
    if not isinstance(doc, dict):
        raise InstanceError("top level: expected an object")
    kind = doc.get("kind", "hypergraph")
    if kind not in KINDS:
        raise InstanceError(f"field 'kind': unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        if kind == "paths":
            raw = doc.get("paths", [])
            if not isinstance(raw, list):
                raise InstanceError("field 'paths': expected a list")
            paths = [list(p) if isinstance(p, str) else _labels(p, f"paths[{i}]") for i, p in enumerate(raw)]
            vertices = _labels(doc["vertices"], "vertices") if "vertices" in doc else [v for p in paths for v in p]
            return SetOfPaths(vertices, paths)
        if "vertices" not in doc:
            raise InstanceError("field 'vertices': missing")
        vertices = _labels(doc["vertices"], "vertices")
        if kind == "simplicial":
            if "facets" in doc:
                return SimplicialComplex.generated_by(vertices, _list_of_lists(doc, "facets"))
            return SimplicialComplex(vertices, _list_of_lists(doc, "faces"))
        edges = _list_of_lists(doc, "edges")
        cls = {"hypergraph": Hypergraph, "simple": SimpleHypergraph, "graph": Graph}[kind]
        return cls(vertices, edges)
    except DomainError as exc:
        raise InstanceError(f"invalid {kind}: {exc}") from exc


def loads(text: str) -> object:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return instance_from_dict(doc)


def load(path: str) -> object:
    with open(path) as fh:
        return loads(fh.read())


def dumps(x) -> str:
    return json.dumps(x.to_dict())


def as_hypergraph(x) -> Hypergraph | None:
    """The same edge multiset viewed in the hypergraph monoid (None for paths)."""
    if isinstance(x, SimplicialComplex):
        return Hypergraph._make(x.ground, x.nonempty_faces())
    if isinstance(x, Hypergraph):
        return Hypergraph._make(x.ground, x.edges)
    return None


# -- generators ----------------------------------------------------------------


def vertex_labels(k: int, offset: int = 0) -> list[str]:
    return [str(i) for i in range(offset + 1, offset + k + 1)]


def hypergraph_family(max_vertices: int = 4, max_edges: int = 3) -> Iterator[Hypergraph]:
    """Every hypergraph on ``{1..k}``, ``k <= max_vertices``, with at most ``max_edges`` edges."""
    for k in range(max_vertices + 1):
        V = vertex_labels(k)
        subsets = [frozenset(c) for r in range(1, k + 1) for c in itertools.combinations(V, r)]
        for m in range(max_edges + 1):
            for edges in itertools.combinations_with_replacement(subsets, m):
                yield Hypergraph._make(Hypergraph(V).ground, edges)


def random_hypergraph(rng: random.Random, max_vertices: int = 5, max_edges: int = 4, offset: int = 0,
                      min_vertices: int = 0) -> Hypergraph:
    k = rng.randint(min_vertices, max_vertices)
    V = vertex_labels(k, offset)
    edges = []
    if k:
        for _ in range(rng.randint(0, max_edges)):
            e = [v for v in V if rng.random() < 0.5] or [rng.choice(V)]
            edges.append(e)
        # force some repeated edges
        if edges and rng.random() < 0.5:
            edges.append(rng.choice(edges))
    return Hypergraph(V, edges)


def random_multiedge_hypergraph(rng: random.Random, max_vertices: int = 5) -> Hypergraph:
    """Random hypergraph with at least one repeated edge."""
    k = rng.randint(2, max_vertices)
    V = vertex_labels(k)
    edges = []
    for _ in range(rng.randint(1, 3)):
        e = rng.sample(V, rng.randint(1, k))
        edges.append(e)
    edges.append(rng.choice(edges))
    return Hypergraph(V, edges)


def random_simple(rng: random.Random, max_vertices: int = 5, max_edges: int = 4, offset: int = 0) -> SimpleHypergraph:
    H = random_hypergraph(rng, max_vertices, max_edges, offset)
    return SimpleHypergraph(H.ground, set(H.edges))


def random_graph(rng: random.Random, max_vertices: int = 5, offset: int = 0, p: float = 0.5) -> Graph:
    V = vertex_labels(rng.randint(0, max_vertices), offset)
    return Graph(V, [e for e in itertools.combinations(V, 2) if rng.random() < p])


def graph_family(max_vertices: int = 4) -> Iterator[Graph]:
    for k in range(max_vertices + 1):
        V = vertex_labels(k)
        pairs = list(itertools.combinations(V, 2))
        for mask in range(1 << len(pairs)):
            yield Graph(V, [e for i, e in enumerate(pairs) if mask >> i & 1])


def random_complex(rng: random.Random, max_vertices: int = 5, offset: int = 0) -> SimplicialComplex:
    V = vertex_labels(rng.randint(0, max_vertices), offset)
    facets = []
    if V:
        for _ in range(rng.randint(0, 3)):
            facets.append(rng.sample(V, rng.randint(1, min(len(V), 3))))
    return SimplicialComplex.generated_by(V, facets)


def complex_family(max_vertices: int = 4) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on ``{1..k}``, ``k <= max_vertices`` (distinct face sets)."""
    for k in range(max_vertices + 1):
        V = vertex_labels(k)
        subsets = [frozenset(c) for r in range(1, k + 1) for c in itertools.combinations(V, r)]
        for mask in range(1 << len(subsets)):
            faces = {s for i, s in enumerate(subsets) if mask >> i & 1}
            if all(len(f) == 1 or f - {v} in faces for f in faces for v in f):
                yield SimplicialComplex(V, faces)


def random_paths(rng: random.Random, max_vertices: int = 6, offset: int = 0) -> SetOfPaths:
    V = vertex_labels(rng.randint(0, max_vertices), offset)
    rng.shuffle(V)
    paths, cur = [], []
    for v in V:
        cur.append(v)
        if rng.random() < 0.35:
            paths.append(cur)
            cur = []
    if cur:
        paths.append(cur)
    return SetOfPaths(V, paths)


def random_subset(rng: random.Random, ground) -> list[str]:
    return [v for v in ground if rng.random() < 0.5]


def random_partition(rng: random.Random, ground, parts: int) -> list[list[str]]:
    out: list[list[str]] = [[] for _ in range(parts)]
    for v in ground:
        out[rng.randrange(parts)].append(v)
    return out
