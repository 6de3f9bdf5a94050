"""Verification suites run by ``hghopf check``.

Each suite returns a :class:`SuiteResult`; on failure it carries the first
counterexample found.  Suites are deterministic for a given seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from . import instances as inst
from .hopf import antipode_takeuchi, chi_direct, chi_of_combination, chi_polynomial
from .hypergraph import Hypergraph
from .orientations import (
    acyclic_orientations,
    chi_formula,
    count_pairs,
    count_unique_max_colorings,
    reciprocity_formula,
)
from .polyring import bernoulli, coarsenings, f_bruteforce, f_polynomial
from .setcomp import (
    constrained_refinements,
    enumerate_compositions,
    refinements,
    signed_sum,
    to_function,
)
from .submonoids import (
    SetOfPaths,
    SimpleHypergraph,
    catalan,
    chromatic_deletion_contraction,
    count_tree_pairs,
    one_skeleton,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = message

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name} ({self.cases} cases)"
        if self.counterexample:
            out += f"\n    counterexample: {self.counterexample}"
        return out


@dataclass
class CheckConfig:
    seed: int = 0
    max_vertices: int = 4
    random_cases: int = 50
    axiom_cases: int = 200
    signed_antipode: bool = True


# -- sums -------------------------------------------------------------------------


def dags(vertices: list[str]) -> list[frozenset]:
    """Every acyclic set of ordered pairs on ``vertices``.

    Each DAG is counted once: orient every pair of a graph along some linear
    order and deduplicate.
    """
    pairs = list(itertools.combinations(vertices, 2))
    out = set()
    for perm in itertools.permutations(vertices):
        rank = {v: i for i, v in enumerate(perm)}
        for mask in range(1 << len(pairs)):
            arcs = []
            for i, (a, b) in enumerate(pairs):
                if mask >> i & 1:
                    arcs.append((a, b) if rank[a] < rank[b] else (b, a))
            out.add(frozenset(arcs))
    return sorted(out, key=lambda g: (len(g), sorted(g)))


def suite_compsum(cfg: CheckConfig) -> SuiteResult:
    res = SuiteResult("compsum")
    for k in range(1, 6):
        for P in enumerate_compositions(inst.vertex_labels(k)):
            res.cases += 1
            got = signed_sum(refinements(P))
            if got != (-1) ** k:
                res.fail(f"P={P}: sum={got}, expected {(-1) ** k}")
    for k in range(1, min(cfg.max_vertices, 4) + 1):
        V = inst.vertex_labels(k)
        comps = list(enumerate_compositions(V))
        for G in dags(V):
            for P in comps:
                res.cases += 1
                pos = to_function(P)
                got = signed_sum(constrained_refinements(G, P, strict=True))
                expected = 0 if any(pos[w] < pos[v] for v, w in G) else (-1) ** k
                if got != expected:
                    res.fail(f"G={sorted(G)}, P={P}: sum={got}, expected {expected}")
    return res


def positive_signatures(max_weight: int):
    """Signatures of positive parts with ``sum(p) + len(p) <= max_weight``."""
    for t in range(1, max_weight // 2 + 1):
        for ps in itertools.product(range(1, max_weight), repeat=t):
            if sum(ps) + t <= max_weight:
                yield ps


def suite_f_negative(cfg: CheckConfig) -> SuiteResult:
    res = SuiteResult("f-n")
    for ps in positive_signatures(6):
        F = f_polynomial(ps)
        for n in range(6):
            res.cases += 1
            lhs = F(-n)
            rhs = (-1) ** (sum(ps) + len(ps)) * sum(f_polynomial(q)(n + 1) for q in coarsenings(ps))
            if lhs != rhs:
                res.fail(f"p={ps}, n={n}: F(-n)={lhs}, coarsening sum={rhs}")
    return res


def suite_faulhaber(cfg: CheckConfig) -> SuiteResult:
    res = SuiteResult("faulhaber")
    for ps in positive_signatures(8):
        res.cases += 1
        F = f_polynomial(ps)
        if F.degree != sum(ps) + len(ps):
            res.fail(f"p={ps}: degree {F.degree}, expected {sum(ps) + len(ps)}")
        for n in range(7):
            if F(n) != f_bruteforce(ps, n):
                res.fail(f"p={ps}, n={n}: polynomial disagrees with the defining sum")
    for p in range(9):
        res.cases += 1
        F = f_polynomial((p,))
        expected = [0] * (p + 2)
        for j in range(p + 1):
            expected[p + 1 - j] += comb(p + 1, j) * bernoulli(j) / (p + 1)
        if list(F.coeffs) != expected:
            res.fail(f"p={p}: coefficients {F.to_strings()} differ from the Bernoulli expansion")
    return res


# -- hypergraph identities ---------------------------------------------------------


def identity_family(cfg: CheckConfig) -> list[Hypergraph]:
    rng = random.Random(cfg.seed)
    family = list(inst.hypergraph_family(cfg.max_vertices, 3))
    family += [inst.random_multiedge_hypergraph(rng, cfg.max_vertices + 1) for _ in range(cfg.random_cases)]
    return family


def suite_triple_equality(cfg: CheckConfig, family=None) -> SuiteResult:
    res = SuiteResult("triple-equality")
    for H in family if family is not None else identity_family(cfg):
        formula = chi_formula(H)
        for n in range(5):
            res.cases += 1
            vals = (chi_direct(H, n), count_unique_max_colorings(H, n), count_pairs(H, n, True), formula(n))
            if len(set(vals)) != 1:
                res.fail(f"H={H!r}, n={n}: direct/unique-max/strict-pairs/formula = {vals}")
    return res


def suite_reciprocity(cfg: CheckConfig, family=None) -> SuiteResult:
    res = SuiteResult("reciprocity")
    for H in family if family is not None else identity_family(cfg):
        chi = chi_polynomial(H)
        sign = (-1) ** len(H.ground)
        recip = reciprocity_formula(H)
        for n in range(1, 4):
            res.cases += 1
            lhs = sign * chi(-n)
            weak = count_pairs(H, n, False)
            if not lhs == weak == recip(n):
                res.fail(f"H={H!r}, n={n}: (-1)^|I| chi(-n)={lhs}, weak pairs={weak}, formula={recip(n)}")
        if sign * chi(-1) != len(acyclic_orientations(H)):
            res.fail(f"H={H!r}: (-1)^|I| chi(-1) != number of acyclic orientations")
    return res


def suite_antipode(cfg: CheckConfig) -> SuiteResult:
    res = SuiteResult("antipode" if cfg.signed_antipode else "antipode (unsigned)")
    for H in inst.hypergraph_family(cfg.max_vertices, 3):
        S = antipode_takeuchi(H, signed=cfg.signed_antipode)
        chi = chi_polynomial(H)
        for n in range(4):
            res.cases += 1
            got = chi_of_combination(S, n)
            if got != chi(-n):
                res.fail(f"H={H!r}, n={n}: chi(S(H))(n)={got}, chi(H)(-n)={chi(-n)}")
                return res
    return res


# -- sub-monoids -------------------------------------------------------------------


def suite_simple(cfg: CheckConfig) -> SuiteResult:
    res = SuiteResult("simple-hypergraphs")
    for H in inst.hypergraph_family(cfg.max_vertices, 3):
        if len(set(H.edges)) != len(H.edges):
            continue
        res.cases += 1
        S = SimpleHypergraph._make(H.ground, H.edges)
        if chi_polynomial(S) != chi_polynomial(H):
            res.fail(f"{S!r}: simple and multiset invariants differ")
    return res


def suite_graphs(cfg: CheckConfig) -> SuiteResult:
    res = SuiteResult("graphs")
    rng = random.Random(cfg.seed)
    graphs = list(inst.graph_family(cfg.max_vertices))
    graphs += [inst.random_graph(rng, cfg.max_vertices + 1) for _ in range(cfg.random_cases)]
    for g in graphs:
        res.cases += 1
        chi = chi_polynomial(g)
        dc = chromatic_deletion_contraction(g)
        if chi != dc:
            res.fail(f"{g!r}: basic invariant {chi} != chromatic polynomial {dc}")
        if chi != chi_polynomial(g.as_hypergraph()):
            res.fail(f"{g!r}: graph invariant differs from the hypergraph invariant")
        if (-1) ** len(g.ground) * chi(-1) != len(acyclic_orientations(g.as_hypergraph())):
            res.fail(f"{g!r}: reciprocity at -1 does not count acyclic orientations")
    return res


def suite_simplicial(cfg: CheckConfig) -> SuiteResult:
    res = SuiteResult("simplicial")
    for C in inst.complex_family(cfg.max_vertices):
        res.cases += 1
        if chi_polynomial(C) != chromatic_deletion_contraction(one_skeleton(C)):
            res.fail(f"{C!r}: invariant differs from the 1-skeleton chromatic polynomial")
    return res


def suite_paths(cfg: CheckConfig) -> SuiteResult:
    res = SuiteResult("paths")
    labels = "abcdefg"
    for m in range(1, 6):
        alpha = SetOfPaths.from_words([labels[:m]])
        chi = chi_polynomial(alpha)
        for n in range(1, 4):
            res.cases += 1
            if chi(n) != count_tree_pairs(m, n, True):
                res.fail(f"m={m}, n={n}: chi={chi(n)} != strict tree pairs")
            if (-1) ** m * chi(-n) != count_tree_pairs(m, n, False):
                res.fail(f"m={m}, n={n}: (-1)^m chi(-n) != weak tree pairs")
        if (-1) ** m * chi(-1) != catalan(m):
            res.fail(f"m={m}: (-1)^m chi(-1)={(-1) ** m * chi(-1)} != Catalan {catalan(m)}")
    alpha = SetOfPaths.from_words(["bfcg", "aed"])
    left, right = alpha.coproduct("bce")
    res.cases += 1
    if f"{left} ⊗ {right}" != "bc|e ⊗ f|g|a|d":
        res.fail(f"worked coproduct gave {left} ⊗ {right}")
    return res


# -- Hopf axioms ---------------------------------------------------------------------

GENERATORS: dict[str, Callable] = {
    "HG": lambda rng, off: inst.random_hypergraph(rng, 4, 4, off),
    "SHG": lambda rng, off: inst.random_simple(rng, 4, 4, off),
    "G": lambda rng, off: inst.random_graph(rng, 4, off),
    "SC": lambda rng, off: inst.random_complex(rng, 4, off),
    "F": lambda rng, off: inst.random_paths(rng, 5, off),
}


def _unit(x):
    return x.restriction([])


def _fresh_bijection(rng: random.Random, ground) -> dict:
    targets = [f"v{i}" for i in range(100, 100 + len(ground))]
    rng.shuffle(targets)
    return dict(zip(ground, targets))


def axiom_naturality(x, y, z, rng) -> str | None:
    sigma = _fresh_bijection(rng, list(x.ground) + list(y.ground))
    sx = {k: sigma[k] for k in x.ground}
    sy = {k: sigma[k] for k in y.ground}
    if x.product(y).relabel(sigma) != x.relabel(sx).product(y.relabel(sy)):
        return "relabel does not commute with the product"
    S = inst.random_subset(rng, x.ground)
    T = [v for v in x.ground if v not in S]
    a, b = x.coproduct(S)
    a2, b2 = x.relabel(sx).coproduct([sigma[v] for v in S])
    if (a.relabel({v: sigma[v] for v in S}), b.relabel({v: sigma[v] for v in T})) != (a2, b2):
        return "relabel does not commute with the coproduct"
    return None


def axiom_unitality(x, y, z, rng) -> str | None:
    e = _unit(x)
    if x.product(e) != x or e.product(x) != x:
        return "empty element is not a unit for the product"
    if x.coproduct(list(x.ground)) != (x, e) or x.coproduct([]) != (e, x):
        return "coproduct along trivial splits is not the canonical isomorphism"
    return None


def axiom_associativity(x, y, z, rng) -> str | None:
    if x.product(y).product(z) != x.product(y.product(z)):
        return "product is not associative"
    return None


def axiom_coassociativity(x, y, z, rng) -> str | None:
    R, S, T = inst.random_partition(rng, x.ground, 3)
    rs, t = x.coproduct(R + S)
    left = (*rs.coproduct(R), t)
    r, st = x.coproduct(R)
    right = (r, *st.coproduct(S))
    if left != right:
        return f"co-associativity fails for R={R}, S={S}, T={T}"
    return None


def axiom_compatibility(x, y, z, rng) -> str | None:
    A = inst.random_subset(rng, x.ground)
    C = inst.random_subset(rng, y.ground)
    xa, xb = x.coproduct(A)
    yc, yd = y.coproduct(C)
    if x.product(y).coproduct(A + C) != (xa.product(yc), xb.product(yd)):
        return f"compatibility fails for A={A}, C={C}"
    return None


AXIOMS = {
    "naturality": axiom_naturality,
    "unitality": axiom_unitality,
    "associativity": axiom_associativity,
    "co-associativity": axiom_coassociativity,
    "compatibility": axiom_compatibility,
}


def suite_hopf_axioms(cfg: CheckConfig) -> SuiteResult:
    res = SuiteResult("hopf-axioms")
    rng = random.Random(cfg.seed)
    for species, gen in GENERATORS.items():
        for name, axiom in AXIOMS.items():
            for _ in range(cfg.axiom_cases):
                x, y, z = gen(rng, 0), gen(rng, 10), gen(rng, 20)
                res.cases += 1
                problem = axiom(x, y, z, rng)
                if problem:
                    res.fail(f"{species} {name}: {problem}; x={x!r}, y={y!r}")
    return res


SUITES: dict[str, Callable[[CheckConfig], SuiteResult]] = {
    "hopf-axioms": suite_hopf_axioms,
    "compsum": suite_compsum,
    "f-n": suite_f_negative,
    "faulhaber": suite_faulhaber,
    "triple-equality": suite_triple_equality,
    "reciprocity": suite_reciprocity,
    "antipode": suite_antipode,
    "simple": suite_simple,
    "graphs": suite_graphs,
    "simplicial": suite_simplicial,
    "paths": suite_paths,
}

ALIASES = {
    "lemmas": ["compsum", "f-n"],
    "identities": ["triple-equality", "reciprocity", "antipode"],
    "submonoids": ["simple", "graphs", "simplicial", "paths"],
    "all": list(SUITES),
}


def resolve_scope(scope: list[str]) -> list[str]:
    names: list[str] = []
    for item in scope:
        for name in ALIASES.get(item, [item]):
            if name not in SUITES:
                raise KeyError(name)
            if name not in names:
                names.append(name)
    # canonical report order
    return [n for n in SUITES if n in names]


def run(scope: list[str], cfg: CheckConfig) -> list[SuiteResult]:
    return [SUITES[name](cfg) for name in resolve_scope(scope)]
