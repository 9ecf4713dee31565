"""Exhaustive and randomized verification sweeps.

Each suite returns a JSON-serializable report whose ``ok`` field states
whether every checked instance satisfied the property; witnesses for any
failures are embedded so verdicts can be revalidated offline.  Reports are
deterministic for a fixed configuration and seed.
"""

from __future__ import annotations

import random

from .clutter import Clutter, all_d_subsets
from .erasures import (
    betti_from_erasures,
    erasure_reachable_set,
    find_erasure_sequence,
    h_vector_check,
    is_ridge_chordal,
)
from .graphs import (
    _edge_exposed,
    adjacency_masks,
    chromatic_polynomial_product,
    _chromatic_dc,
    enumerate_chordal_graphs,
    graph_connected,
    graph_from_edge_mask,
    is_chordal_classic,
    kruskal_mst,
    mst_by_erasures,
    perfect_elimination_ordering,
    properly_exposed_subgraph,
    random_connected_chordal,
    WeightedGraph,
)
from .homology import hochster_betti_table, is_connected_graph_algebraic
from .ideals import (
    _linear_divisor_mask,
    find_quotient_order,
    ideal_of_clutter,
    quotient_reachable_set,
)


def _clutter_from_circuit_mask(n: int, d: int, cmask: int) -> Clutter:
    subsets = all_d_subsets(n, d)
    return Clutter(n, d, tuple(subsets[i] for i in range(len(subsets)) if cmask >> i & 1))


def _cert_checks(cert, table, n: int) -> list[str]:
    """Certificate-level cross checks: Betti agreement, colon/clique duality, h-vector."""
    problems = []
    if betti_from_erasures(cert) != table.betti_numbers():
        problems.append("betti-formula-vs-hochster")
    prefix: list[int] = []
    fullmask = (1 << n) - 1
    for step in cert.removed:
        mmask = 0
        for v in step.circuit:
            mmask |= 1 << (v - 1)
        singles = _linear_divisor_mask(prefix, mmask)
        kmask = 0
        for v in step.clique:
            kmask |= 1 << (v - 1)
        if singles is None or singles != fullmask ^ kmask:
            problems.append("colon-variables-vs-clique")
            break
        prefix.append(mmask)
    if not h_vector_check(cert)[2]:
        problems.append("h-vector")
    return problems


def froberg_suite(n: int, greedy_metrics: bool = True, jobs: int = 1) -> dict:
    """Four-way chordality equivalence over every graph on n labeled vertices.

    Per graph: induced-cycle chordality, per-instance erasure search,
    linearity of the Hochster Betti table over both fields, and per-instance
    quotient-order search must agree, as must membership in the two
    set-level reachability closures (which must coincide with each other).
    Certificates found get their Betti numbers, colon/clique duality, and
    h-vector identity checked on the spot.
    """
    nedges = n * (n - 1) // 2
    reach = erasure_reachable_set(n, 2)
    reach_proper = erasure_reachable_set(n, 2, require_proper=True)
    qreach = quotient_reachable_set(n, 2)
    report: dict = {
        "suite": "froberg",
        "n": n,
        "graphs": 1 << nedges,
        "closure_sets_equal": set(reach) == qreach,
        "chordal_count": 0,
        "h_vector_checked": 0,
        "discrepancies": [],
        "field_disagreements": [],
        "certificate_failures": [],
        "proper_connectivity_failures": [],
        "greedy_failures": 0,
    }
    ranges = _split_range(1 << nedges, jobs)
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            chunks = pool.map(
                _froberg_chunk,
                [(n, lo, hi, reach, reach_proper, qreach, greedy_metrics) for lo, hi in ranges],
            )
    else:
        chunks = [
            _froberg_chunk((n, lo, hi, reach, reach_proper, qreach, greedy_metrics))
            for lo, hi in ranges
        ]
    for chunk in chunks:
        report["chordal_count"] += chunk["chordal_count"]
        report["h_vector_checked"] += chunk["h_vector_checked"]
        report["greedy_failures"] += chunk["greedy_failures"]
        for key in (
            "discrepancies",
            "field_disagreements",
            "certificate_failures",
            "proper_connectivity_failures",
        ):
            report[key].extend(chunk[key])
    for key in (
        "discrepancies",
        "field_disagreements",
        "certificate_failures",
        "proper_connectivity_failures",
    ):
        report[key].sort()
    report["ok"] = (
        report["closure_sets_equal"]
        and not report["discrepancies"]
        and not report["field_disagreements"]
        and not report["certificate_failures"]
        and not report["proper_connectivity_failures"]
    )
    return report


def _froberg_chunk(args) -> dict:
    n, lo, hi, reach, reach_proper, qreach, greedy_metrics = args
    nedges = n * (n - 1) // 2
    full = (1 << nedges) - 1
    out = {
        "chordal_count": 0,
        "h_vector_checked": 0,
        "greedy_failures": 0,
        "discrepancies": [],
        "field_disagreements": [],
        "certificate_failures": [],
        "proper_connectivity_failures": [],
    }
    for gmask in range(lo, hi):
        graph = graph_from_edge_mask(n, gmask)
        removed = full ^ gmask
        chordal = is_chordal_classic(graph)
        cert = find_erasure_sequence(graph)
        order = find_quotient_order(ideal_of_clutter(graph.complement()))
        table2 = hochster_betti_table(graph, "gf2")
        tableq = hochster_betti_table(graph, "rational")
        if table2 != tableq:
            out["field_disagreements"].append(gmask)
        linear = table2.is_linear(2)
        verdicts = {
            "classic": chordal,
            "erasure": cert is not None,
            "linear_resolution": linear,
            "quotient_order": order is not None,
            "erasure_closure": removed in reach,
            "quotient_closure": removed in qreach,
        }
        if len(set(verdicts.values())) != 1:
            out["discrepancies"].append([gmask, verdicts])
            continue
        proper_ok = (removed in reach_proper) == (chordal and graph_connected(graph))
        if not proper_ok:
            out["proper_connectivity_failures"].append(gmask)
        if chordal:
            out["chordal_count"] += 1
            if not table2.zero_ideal and table2.betti(0) != len(graph.complement()):
                out["certificate_failures"].append([gmask, ["beta0-vs-generators"]])
            problems = _cert_checks(cert, table2, n)
            out["h_vector_checked"] += 1
            if problems:
                out["certificate_failures"].append([gmask, problems])
            if greedy_metrics and find_erasure_sequence(graph, greedy_only=True) is None:
                out["greedy_failures"] += 1
    return out


def _split_range(total: int, jobs: int) -> list[tuple[int, int]]:
    jobs = max(1, jobs)
    step = (total + jobs - 1) // jobs
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def connectivity_suite(max_n: int) -> dict:
    """Graph-search connectivity against the Betti-table criterion, n = 2..max_n.

    (A single vertex admits no 2-clutter, so n = 1 has nothing to check.)
    """
    report: dict = {"suite": "connectivity", "max_n": max_n, "checked": 0, "discrepancies": []}
    for n in range(2, max_n + 1):
        nedges = n * (n - 1) // 2
        for gmask in range(1 << nedges):
            graph = graph_from_edge_mask(n, gmask)
            if graph_connected(graph) != is_connected_graph_algebraic(graph):
                report["discrepancies"].append([n, gmask])
            report["checked"] += 1
    report["ok"] = not report["discrepancies"]
    return report


def clutter_erasure_suite(n: int, d: int) -> dict:
    """Proper-erasure reachability vs (linear quotients and small projective
    dimension), over every d-clutter on n vertices."""
    subsets = all_d_subsets(n, d)
    total = len(subsets)
    full = (1 << total) - 1
    reach_proper = erasure_reachable_set(n, d, require_proper=True)
    qreach_small = quotient_reachable_set(n, d, small_only=True)
    report: dict = {
        "suite": "clutter-erasure",
        "n": n,
        "d": d,
        "clutters": 1 << total,
        "closure_sets_equal": set(reach_proper) == qreach_small,
        "reachable_count": 0,
        "h_vector_checked": 0,
        "discrepancies": [],
        "certificate_failures": [],
    }
    for cmask in range(1 << total):
        clutter = _clutter_from_circuit_mask(n, d, cmask)
        removed = full ^ cmask
        cert = find_erasure_sequence(clutter, require_proper=True)
        order = find_quotient_order(ideal_of_clutter(clutter.complement()))
        table = hochster_betti_table(clutter, "gf2")
        pdim_small = table.zero_ideal or table.pdim < n - d
        algebraic = order is not None and pdim_small
        verdicts = {
            "proper_erasure": cert is not None,
            "quotients_and_pdim": algebraic,
            "proper_closure": removed in reach_proper,
        }
        if len(set(verdicts.values())) != 1:
            report["discrepancies"].append([cmask, verdicts])
            continue
        if cert is not None:
            report["reachable_count"] += 1
            problems = _cert_checks(cert, table, n)
            report["h_vector_checked"] += 1
            if problems:
                report["certificate_failures"].append([cmask, problems])
    report["ok"] = (
        report["closure_sets_equal"]
        and not report["discrepancies"]
        and not report["certificate_failures"]
    )
    return report


def free_face_suite(n: int, d: int) -> dict:
    """Exposed circuits against unique-facet membership in the clique complex.

    Runs over every d-clutter on n vertices; the facet count comes from an
    independent maximal-clique enumeration.
    """
    subsets = all_d_subsets(n, d)
    total = len(subsets)
    report: dict = {
        "suite": "free-face",
        "n": n,
        "d": d,
        "clutters": 1 << total,
        "circuits_checked": 0,
        "discrepancies": [],
    }
    for cmask in range(1 << total):
        clutter = _clutter_from_circuit_mask(n, d, cmask)
        facets = [set(f) for f in clutter.max_cliques()]
        for e in clutter.circuits:
            es = set(e)
            containing = sum(1 for f in facets if es <= f)
            if clutter.exposed_status(e).exposed != (containing == 1):
                report["discrepancies"].append([cmask, list(e)])
            report["circuits_checked"] += 1
    report["ok"] = not report["discrepancies"]
    return report


def chromatic_suite(max_n: int, jobs: int = 1) -> dict:
    """Elimination-product chromatic polynomial vs deletion-contraction,
    over every chordal graph with at most max_n vertices."""
    report: dict = {"suite": "chromatic", "max_n": max_n, "checked": 0, "mismatches": []}
    for n in range(2, max_n + 1):
        masks = sorted(enumerate_chordal_graphs(n))
        ranges = _split_range(len(masks), jobs)
        if jobs > 1:
            import multiprocessing

            with multiprocessing.Pool(jobs) as pool:
                chunks = pool.map(
                    _chromatic_chunk, [(n, masks[lo:hi]) for lo, hi in ranges]
                )
        else:
            chunks = [_chromatic_chunk((n, masks[lo:hi])) for lo, hi in ranges]
        for checked, mismatches in chunks:
            report["checked"] += checked
            report["mismatches"].extend([n, m] for m in mismatches)
    report["ok"] = not report["mismatches"]
    return report


def _chromatic_chunk(args) -> tuple[int, list[int]]:
    n, masks = args
    memo: dict = {}
    mismatches = []
    for gmask in masks:
        graph = graph_from_edge_mask(n, gmask)
        product = chromatic_polynomial_product(graph)
        oracle = _chromatic_dc(tuple(adjacency_masks(graph)), memo)
        if product.coeffs != oracle:
            mismatches.append(gmask)
    return len(masks), mismatches


def boundary_suite(max_n: int) -> dict:
    """Two-edge-connectivity of every properly-exposed subgraph component,
    over every chordal graph with at most max_n vertices."""
    report: dict = {"suite": "boundary", "max_n": max_n, "checked": 0, "failures": []}
    for n in range(2, max_n + 1):
        for gmask in sorted(enumerate_chordal_graphs(n)):
            rep = properly_exposed_subgraph(graph_from_edge_mask(n, gmask))
            if any(not ok for _, ok in rep.components):
                report["failures"].append([n, gmask])
            report["checked"] += 1
    report["ok"] = not report["failures"]
    return report


def mst_suite(count: int, max_n: int, seed: int) -> dict:
    """Erasure spanning trees against Kruskal on random weighted chordal graphs.

    Weights are distinct integers, so the minimum spanning tree is unique
    and the edge sets must match exactly, not just the weights.
    """
    rng = random.Random(seed)
    report: dict = {
        "suite": "mst",
        "count": count,
        "max_n": max_n,
        "seed": seed,
        "failures": [],
    }
    for trial in range(count):
        n = rng.randint(3, max_n)
        graph = random_connected_chordal(n, rng)
        weights = rng.sample(range(1, 10 * len(graph.circuits) + 10), len(graph.circuits))
        weighted = WeightedGraph.from_edges(
            n, [(u, v, w) for (u, v), w in zip(graph.circuits, weights)]
        )
        mine, my_weight = mst_by_erasures(weighted)
        oracle, oracle_weight = kruskal_mst(weighted)
        if my_weight != oracle_weight or mine != oracle:
            report["failures"].append(
                [trial, n, [list(e) for e in sorted(graph.circuits)], sorted(weights)]
            )
    report["ok"] = not report["failures"]
    return report


def skeleton_extendability_suite(n: int) -> dict:
    """Exhaustive extendable-shellability of the (n-3)-skeleton of a simplex."""
    from .shelling import is_extendably_shellable, skeleton_complex

    result = is_extendably_shellable(skeleton_complex(n, n - 3))
    return {
        "suite": "skeleton-extendability",
        "n": n,
        "dim": n - 3,
        "extendable": result.extendable,
        "partial_shellings_checked": result.states,
        "stuck_witness": None
        if result.stuck_witness is None
        else [list(f) for f in result.stuck_witness],
        "ok": result.extendable,
    }


def probe_simon(n: int, d: int) -> dict:
    """Probe of the reformulated extendability conjecture: every clutter
    reachable by exposed-circuit removals should itself contain an exposed
    circuit (unless it has none at all).  Counterexamples are reported as
    observations, never asserted."""
    subsets = all_d_subsets(n, d)
    total = len(subsets)
    reach = erasure_reachable_set(n, d)
    counterexamples = []
    for removed in sorted(reach):
        cmask = ((1 << total) - 1) ^ removed
        clutter = _clutter_from_circuit_mask(n, d, cmask)
        if not clutter.circuits:
            continue
        if not any(clutter.exposed_status(e).exposed for e in clutter.circuits):
            counterexamples.append(sorted(list(e) for e in clutter.circuits))
    return {
        "probe": "simon-reformulated",
        "n": n,
        "d": d,
        "states_checked": len(reach),
        "counterexamples": counterexamples,
    }


def probe_ridge_chordal(n: int, d: int) -> dict:
    """Probe: complement ideals with linear quotients should come from
    ridge-chordal clutters.  Counterexamples are observations only."""
    subsets = all_d_subsets(n, d)
    total = len(subsets)
    reach = erasure_reachable_set(n, d)
    checked = 0
    counterexamples = []
    for removed in sorted(reach):
        cmask = ((1 << total) - 1) ^ removed
        clutter = _clutter_from_circuit_mask(n, d, cmask)
        checked += 1
        if clutter.circuits and not is_ridge_chordal(clutter):
            counterexamples.append(sorted(list(e) for e in clutter.circuits))
    return {
        "probe": "ridge-chordal",
        "n": n,
        "d": d,
        "clutters_checked": checked,
        "counterexamples": counterexamples,
    }


def multiset_invariance_suite(n: int, d: int) -> dict:
    """All complete erasure orders for one target share the k-multiset.

    Enumerates every removal order for every reachable target; exponential,
    so meant for small n and d.
    """
    subsets = all_d_subsets(n, d)
    total = len(subsets)
    if total > 8:
        raise ValueError("size guard: full order enumeration needs at most 8 circuits")
    report: dict = {"suite": "k-multiset-invariance", "n": n, "d": d, "targets": 0, "failures": []}

    def orders(clutter: Clutter, target: Clutter, prefix):
        done = True
        for e in clutter.circuits:
            if e in target:
                continue
            done = False
            status = clutter.exposed_status(e)
            if status.exposed:
                yield from orders(
                    clutter.without(e), target, prefix + [n - len(status.clique)]
                )
        if done:
            yield tuple(sorted(prefix))

    for cmask in range(1 << total):
        target = _clutter_from_circuit_mask(n, d, cmask)
        seen = {ks for ks in orders(Clutter.complete(n, d), target, [])}
        if len(seen) > 1:
            report["failures"].append([cmask, sorted(map(list, seen))])
        if seen:
            report["targets"] += 1
    report["ok"] = not report["failures"]
    return report
