"""Exhaustive verification sweeps, collision search, and reports.

Each suite sweeps the free-tree enumeration (or a fixed deterministic graph
corpus) and returns a report whose payload is byte-reproducible: failures are
recorded as certificate hex strings that replay through the library. This is
the only module that spawns parallel workers; per-item work runs through
module-level functions so results merge in input order regardless of the
worker count.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import random
import time
from dataclasses import dataclass

from .cubes import (
    RootKind,
    cliques_of_cube,
    cube_root,
    cube_root_oracle,
    is_tree_cube,
    maximal_cliques,
    tree_of_cliques,
)
from .deck import deck, reconstruct, select_cube_cards
from .graphs import (
    CanonicalForm,
    LabeledGraph,
    canonical_form,
    complete_bipartite_graph,
    cycle_graph,
    delete_vertex,
    delete_vertices,
    diameter,
    is_complete,
    is_isomorphic,
    power,
)
from .trees import Tree, end_deleted, enumerate_trees, leaves

SUITES = (
    "thm31",
    "thm32",
    "lemma21",
    "lemma24",
    "lemma25",
    "rc-pipeline",
    "recognition-negative",
    "oracle-agreement",
)

# Structural suites default to order 10; deck suites pay an extra factor of p
# in isomorphism work and default to 9.
DEFAULT_MAX_ORDER = {
    "thm31": 10,
    "thm32": 10,
    "lemma21": 10,
    "lemma24": 10,
    "lemma25": 10,
    "oracle-agreement": 10,
    "rc-pipeline": 9,
    "recognition-negative": 9,
}

NONCUBE_CORPUS_SEED = 0x7C3
NONCUBE_CORPUS_SIZE = 200
RECOGNITION_RANDOM_COUNT = 50


@dataclass(frozen=True)
class VerificationReport:
    """Result of one sweep: counterexample descriptors are replayable."""

    suite: str
    max_order: int
    checked: int
    failures: tuple[dict, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        # elapsed stays out of the payload so reports are byte-identical
        # across repeated runs
        return {
            "suite": self.suite,
            "max_order": self.max_order,
            "checked": self.checked,
            "passed": self.passed,
            "failures": list(self.failures),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class CollisionPair:
    tree1: Tree
    tree2: Tree
    power_certificate: CanonicalForm
    complete: bool


@dataclass(frozen=True)
class CollisionResult:
    """Non-isomorphic tree pairs of equal order with isomorphic n-th powers."""

    n: int
    max_order: int
    require_noncomplete: bool
    pairs: tuple[CollisionPair, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_order": self.max_order,
            "require_noncomplete": self.require_noncomplete,
            "pairs": [
                {
                    "tree1_edges": p.tree1.graph.edge_list(),
                    "tree2_edges": p.tree2.graph.edge_list(),
                    "power_certificate": p.power_certificate.hex(),
                    "complete": p.complete,
                }
                for p in self.pairs
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


# ── deterministic corpora ─────────────────────────────────────────────


def random_connected_graph(rng: random.Random, p: int) -> LabeledGraph:
    """Seeded connected graph: random recursive tree plus random extra edges."""
    edges = {(rng.randrange(v), v) for v in range(1, p)}
    density = rng.uniform(0.1, 0.6)
    for u in range(p):
        for v in range(u + 1, p):
            if (u, v) not in edges and rng.random() < density:
                edges.add((u, v))
    return LabeledGraph(p, edges)


def noncube_corpus(count: int, max_order: int, seed: int = NONCUBE_CORPUS_SEED) -> list[LabeledGraph]:
    """Fixed corpus of connected graphs the oracle labels as non-cubes."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = rng.randint(4, max_order)
        G = random_connected_graph(rng, p)
        if is_complete(G):
            continue
        if cube_root_oracle(G).kind is not RootKind.NOT_A_CUBE:
            continue
        out.append(G)
    return out


# ── per-item workers (module level for picklability) ──────────────────


def _thm31_unit(T: Tree) -> tuple[int, list[dict]]:
    # leaf <=> cube commutes with vertex deletion (power taken per component)
    G = power(T.graph, 3)
    leaf_set = leaves(T)
    checked = 0
    failures = []
    for v in range(T.p):
        checked += 1
        lhs = power(delete_vertex(T.graph, v), 3)
        rhs = delete_vertex(G, v)
        if is_isomorphic(lhs, rhs) != (v in leaf_set):
            failures.append({"tree": canonical_form(T.graph).hex(), "vertex": v})
    return checked, failures


def _cube_cert_unit(T: Tree) -> str:
    return canonical_form(power(T.graph, 3)).hex()


def _lemma21_unit(T: Tree) -> tuple[int, list[dict]]:
    if diameter(T.graph) < 4:
        return 0, []
    span_sets = sorted(sorted(r.members) for r in cliques_of_cube(T))
    clique_sets = sorted(sorted(s) for s in maximal_cliques(power(T.graph, 3)))
    if span_sets != clique_sets:
        return 1, [{"tree": canonical_form(T.graph).hex()}]
    return 1, []


def _lemma24_unit(T: Tree) -> tuple[int, list[dict]]:
    # every proper-or-full leaf subset whose deletion leaves a nonempty graph
    G = power(T.graph, 3)
    leaf_list = sorted(leaves(T))
    checked = 0
    failures = []
    for mask in range(1 << len(leaf_list)):
        subset = [leaf_list[i] for i in range(len(leaf_list)) if mask >> i & 1]
        if len(subset) >= T.p:
            continue
        checked += 1
        if not is_tree_cube(delete_vertices(G, subset)):
            failures.append({"tree": canonical_form(T.graph).hex(), "deleted": subset})
    return checked, failures


def _lemma25_unit(T: Tree) -> tuple[int, list[dict]]:
    if diameter(T.graph) < 4:
        return 0, []
    xi = tree_of_cliques(power(T.graph, 3))
    if not is_isomorphic(xi.graph, end_deleted(T).graph):
        return 1, [{"tree": canonical_form(T.graph).hex()}]
    return 1, []


def _rc_unit(T: Tree) -> tuple[int, list[dict]]:
    G = power(T.graph, 3)
    S = deck(G)
    failures = []
    tree_hex = canonical_form(T.graph).hex()
    report = reconstruct(S)
    if not (report.recognized and report.graph is not None and is_isomorphic(report.graph, G)):
        failures.append({"tree": tree_hex, "reason": "reconstruction failed or mismatched"})
    # every endpoint-deleted card must have passed the cube test
    selected = [sc.card.hex() for sc in select_cube_cards(S).selected]
    for v in sorted(leaves(T)):
        cert = canonical_form(delete_vertex(G, v)).hex()
        if cert in selected:
            selected.remove(cert)
        else:
            failures.append({"tree": tree_hex, "vertex": v,
                             "reason": "endpoint card rejected by the cube test"})
    return 1, failures


def internal_cube_cards(T: Tree) -> list[int]:
    """Internal vertices whose cube cards are themselves tree cubes.

    Deleting an internal vertex from a non-complete cube can still leave the
    cube of some (other) tree: the spider with legs 2, 2, 1 cubes to K6 minus
    an edge, and removing its center leaves K5 minus an edge, the cube of P5.
    So the card selection is a superset of the endpoint cards, not always
    equal to them; reconstruction stays sound because candidates from every
    selected card are verified against the full deck.
    """
    G = power(T.graph, 3)
    leaf_set = leaves(T)
    return [v for v in range(T.p)
            if v not in leaf_set and is_tree_cube(delete_vertex(G, v))]


def endpoint_precision_counterexamples(max_order: int) -> list[tuple[Tree, tuple[int, ...]]]:
    """Trees with non-complete cubes where internal cards pass the cube test."""
    out = []
    for T in _trees_in_range(3, max_order):
        if is_complete(power(T.graph, 3)):
            continue
        hits = internal_cube_cards(T)
        if hits:
            out.append((T, tuple(hits)))
    return out


def _recognition_negative_unit(G: LabeledGraph) -> tuple[int, list[dict]]:
    if reconstruct(deck(G)).recognized:
        return 1, [{"graph": canonical_form(G).hex()}]
    return 1, []


def _oracle_agreement_unit(G: LabeledGraph) -> tuple[int, list[dict]]:
    r1 = cube_root(G)
    r2 = cube_root_oracle(G)
    ok = r1.kind is r2.kind
    if ok and r1.kind is RootKind.UNIQUE:
        ok = is_isomorphic(r1.tree.graph, r2.tree.graph)
    if ok and r1.kind is RootKind.AMBIGUOUS_COMPLETE:
        c1 = sorted(canonical_form(t.graph).hex() for t in r1.roots)
        c2 = sorted(canonical_form(t.graph).hex() for t in r2.roots)
        ok = c1 == c2
    if not ok:
        return 1, [{
            "graph": canonical_form(G).hex(),
            "cube_root": r1.kind.value,
            "oracle": r2.kind.value,
        }]
    return 1, []


# ── suite drivers ─────────────────────────────────────────────────────


def _map_units(fn, units, workers: int | None):
    if workers is None:
        workers = os.cpu_count() or 1
    if workers > 1 and len(units) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(workers, len(units))) as pool:
            return pool.map(fn, units, chunksize=max(1, len(units) // (4 * workers)))
    return [fn(u) for u in units]


def _sweep(fn, units, workers) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for c, f in _map_units(fn, units, workers):
        checked += c
        failures.extend(f)
    return checked, failures


def _trees_in_range(lo: int, hi: int) -> list[Tree]:
    out = []
    for p in range(lo, hi + 1):
        out.extend(enumerate_trees(p))
    return out


def _suite_thm31(max_order, workers):
    return _sweep(_thm31_unit, _trees_in_range(3, max_order), workers)


def _suite_thm32(max_order, workers):
    checked = 0
    failures = []
    for p in range(1, max_order + 1):
        trees = enumerate_trees(p)
        certs = _map_units(_cube_cert_unit, trees, workers)
        buckets: dict[str, list[int]] = {}
        for i, cert in enumerate(certs):
            buckets.setdefault(cert, []).append(i)
        checked += len(trees) * (len(trees) - 1) // 2
        for cert, idxs in sorted(buckets.items()):
            if len(idxs) < 2:
                continue
            if is_complete(power(trees[idxs[0]].graph, 3)):
                continue
            for a in range(len(idxs)):
                for b in range(a + 1, len(idxs)):
                    failures.append({
                        "tree1": canonical_form(trees[idxs[a]].graph).hex(),
                        "tree2": canonical_form(trees[idxs[b]].graph).hex(),
                        "power_certificate": cert,
                    })
    return checked, failures


def _suite_lemma21(max_order, workers):
    return _sweep(_lemma21_unit, _trees_in_range(1, max_order), workers)


def _suite_lemma24(max_order, workers):
    return _sweep(_lemma24_unit, _trees_in_range(1, max_order), workers)


def _suite_lemma25(max_order, workers):
    return _sweep(_lemma25_unit, _trees_in_range(1, max_order), workers)


def _suite_rc_pipeline(max_order, workers):
    return _sweep(_rc_unit, _trees_in_range(3, max_order), workers)


def recognition_negative_corpus(max_order: int) -> list[LabeledGraph]:
    """Cycles, K_{3,3}, and seeded random oracle-confirmed non-cubes."""
    corpus = [cycle_graph(p) for p in range(4, max_order + 1)]
    if max_order >= 6:
        corpus.append(complete_bipartite_graph(3, 3))
    rng = random.Random(NONCUBE_CORPUS_SEED + 1)
    picked = 0
    while picked < RECOGNITION_RANDOM_COUNT:
        p = rng.randint(4, max_order)
        G = random_connected_graph(rng, p)
        if is_complete(G) or cube_root_oracle(G).kind is not RootKind.NOT_A_CUBE:
            continue
        corpus.append(G)
        picked += 1
    return corpus


def _suite_recognition_negative(max_order, workers):
    return _sweep(_recognition_negative_unit, recognition_negative_corpus(max_order), workers)


def _suite_oracle_agreement(max_order, workers):
    units = [power(T.graph, 3) for T in _trees_in_range(1, max_order)]
    units.extend(noncube_corpus(NONCUBE_CORPUS_SIZE, max_order))
    return _sweep(_oracle_agreement_unit, units, workers)


_SUITE_FNS = {
    "thm31": _suite_thm31,
    "thm32": _suite_thm32,
    "lemma21": _suite_lemma21,
    "lemma24": _suite_lemma24,
    "lemma25": _suite_lemma25,
    "rc-pipeline": _suite_rc_pipeline,
    "recognition-negative": _suite_recognition_negative,
    "oracle-agreement": _suite_oracle_agreement,
}


def run_suite(suite: str, max_order: int | None = None, workers: int | None = 1) -> VerificationReport:
    """Run one named invariant sweep up to the given order."""
    if suite not in _SUITE_FNS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if max_order is None:
        max_order = DEFAULT_MAX_ORDER[suite]
    if max_order < 1:
        raise ValueError("max order must be at least 1")
    # warm the enumeration before forking so workers inherit it
    enumerate_trees(min(max_order, 10))
    start = time.perf_counter()
    checked, failures = _SUITE_FNS[suite](max_order, workers)
    elapsed = time.perf_counter() - start
    return VerificationReport(suite, max_order, checked, tuple(failures), elapsed)


def collide(n: int, max_order: int, require_noncomplete: bool = False,
            workers: int | None = 1) -> CollisionResult:
    """Find non-isomorphic equal-order tree pairs with isomorphic n-th powers."""
    if n < 2:
        raise ValueError("power index must be at least 2")
    if max_order < 1:
        raise ValueError("max order must be at least 1")
    pairs = []
    for p in range(1, max_order + 1):
        trees = enumerate_trees(p)
        certs = _map_units(_PowerCert(n), trees, workers)
        buckets: dict = {}
        for i, cert in enumerate(certs):
            buckets.setdefault(cert, []).append(i)
        for cert, idxs in sorted(buckets.items()):
            if len(idxs) < 2:
                continue
            complete = is_complete(power(trees[idxs[0]].graph, n))
            if require_noncomplete and complete:
                continue
            for a in range(len(idxs)):
                for b in range(a + 1, len(idxs)):
                    pairs.append(CollisionPair(trees[idxs[a]], trees[idxs[b]], cert, complete))
    return CollisionResult(n, max_order, require_noncomplete, tuple(pairs))


class _PowerCert:
    """Picklable per-tree n-th power certificate worker."""

    def __init__(self, n: int):
        self.n = n

    def __call__(self, T: Tree):
        return canonical_form(power(T.graph, self.n))
