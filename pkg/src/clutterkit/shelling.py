"""Shelling orders, the erasure bridge, and extendable shellability.

A facet order F_1..F_s of a pure complex is a shelling when each facet
meets the union of its predecessors in a pure codimension-one complex.
Complements turn such orders into erasure sequences and back, and the
extendability search runs over facet subsets: whether a partial shelling
extends depends only on the set of facets placed, never on their order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clutter import all_d_subsets
from .erasures import ErasureCertificate, replay_erasure_sequence
from .homology import reduced_homology_dims
from .simplicial import SimplicialComplex

EXTENDABILITY_MAX_FACETS = 25


@dataclass(frozen=True)
class ShellingReport:
    valid: bool
    restricted_sets: tuple[tuple[tuple[int, ...], ...], ...]
    failed_at: int | None  # 1-based facet position

    @property
    def restricted_sizes(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.restricted_sets)


@dataclass(frozen=True)
class ShellingOrder:
    complex: SimplicialComplex
    order: tuple[tuple[int, ...], ...]
    restricted_sets: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def restricted_sizes(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.restricted_sets)


def _restricted_set(facet: tuple[int, ...], earlier: list[set]) -> list[tuple[int, ...]]:
    fs = set(facet)
    out = []
    for v in facet:
        ridge = fs - {v}
        if any(ridge <= e for e in earlier):
            out.append(tuple(sorted(ridge)))
    return out


def _step_valid(facet: tuple[int, ...], earlier: list[set]) -> bool:
    # The intersection with the earlier union is pure of codimension one
    # iff every facet-intersection is dominated by one of ridge size.
    fs = set(facet)
    inters = [fs & e for e in earlier]
    ridges = [g for g in inters if len(g) == len(facet) - 1]
    return all(any(g <= r for r in ridges) for g in inters)


def verify_shelling(complex_: SimplicialComplex, order) -> ShellingReport:
    """Check a facet order for the shelling condition, collecting restricted sets."""
    if not complex_.is_pure:
        raise ValueError("shellings are defined for pure complexes only")
    order = [tuple(sorted(f)) for f in order]
    if sorted(order, key=lambda f: (len(f), f)) != list(complex_.facets):
        raise ValueError("order is not a permutation of the facets")
    earlier: list[set] = []
    restricted: list[tuple[tuple[int, ...], ...]] = []
    for pos, facet in enumerate(order, start=1):
        restricted.append(tuple(_restricted_set(facet, earlier)))
        if pos > 1 and not _step_valid(facet, earlier):
            return ShellingReport(False, tuple(restricted), pos)
        earlier.append(set(facet))
    return ShellingReport(True, tuple(restricted), None)


def erasures_to_shelling(cert: ErasureCertificate) -> ShellingOrder:
    """Shelling with facets [n] \\ e_i, in certificate order."""
    n = cert.n
    everything = set(range(1, n + 1))
    order = tuple(tuple(sorted(everything - set(s.circuit))) for s in cert.removed)
    complex_ = SimplicialComplex(n, tuple(sorted(set(order), key=lambda f: (len(f), f))))
    report = verify_shelling(complex_, order)
    if not report.valid:
        raise ValueError(f"certificate does not shell its dual complex (step {report.failed_at})")
    return ShellingOrder(complex_, order, report.restricted_sets)


def shelling_to_erasures(shelling: ShellingOrder, d: int | None = None) -> ErasureCertificate:
    """Replay the complement circuits of a shelling order as erasures.

    The circuit size is read off the facet size; the void complex carries
    no dimension, so an explicit ``d`` is required for the empty shelling.
    """
    complex_ = shelling.complex
    n = complex_.n
    if complex_.is_void:
        if d is None:
            raise ValueError("the empty shelling needs an explicit circuit size d")
        return replay_erasure_sequence(n, d, [])
    size = len(complex_.facets[0])
    d = n - size
    if d < 1:
        raise ValueError(f"facet size {size} leaves no circuit size on {n} vertices")
    everything = set(range(1, n + 1))
    order = [tuple(sorted(everything - set(f))) for f in shelling.order]
    return replay_erasure_sequence(n, d, order)


def shelling_from_erasure_order(n: int, d: int, circuits) -> ShellingOrder:
    """Convenience: replay circuits as erasures, then dualize to a shelling."""
    return erasures_to_shelling(replay_erasure_sequence(n, d, circuits))


# -- extendable shellability ---------------------------------------------------

class _ExtensionSpace:
    """Facet-subset search space with precomputed pairwise intersections."""

    def __init__(self, complex_: SimplicialComplex):
        if not complex_.is_pure:
            raise ValueError("extendability is defined for pure complexes only")
        if complex_.is_void:
            raise ValueError("extendability of the void complex is vacuous")
        self.complex = complex_
        self.facets = list(complex_.facets)
        if len(self.facets) > EXTENDABILITY_MAX_FACETS:
            raise ValueError(
                f"size guard: extendability search needs at most {EXTENDABILITY_MAX_FACETS} facets, "
                f"got {len(self.facets)}"
            )
        self.size = len(self.facets[0])
        sets = [set(f) for f in self.facets]
        self.inter = [[a & b for b in sets] for a in sets]
        self.full = (1 << len(self.facets)) - 1

    def addable(self, state: int, f: int) -> bool:
        if state == 0:
            return True
        row = self.inter[f]
        members = []
        s = state
        while s:
            low = s & -s
            members.append(low.bit_length() - 1)
            s ^= low
        ridges = [row[j] for j in members if len(row[j]) == self.size - 1]
        for j in members:
            g = row[j]
            if not any(g <= r for r in ridges):
                return False
        return True

    def reachable_states(self) -> dict[int, tuple[int, int] | None]:
        parents: dict[int, tuple[int, int] | None] = {0: None}
        frontier = [0]
        nfac = len(self.facets)
        while frontier:
            new_frontier = []
            for state in frontier:
                for f in range(nfac):
                    bit = 1 << f
                    if state & bit or state | bit in parents:
                        continue
                    if self.addable(state, f):
                        parents[state | bit] = (state, f)
                        new_frontier.append(state | bit)
            frontier = new_frontier
        return parents

    def order_for_state(self, parents: dict, state: int) -> list[tuple[int, ...]]:
        order = []
        cur = state
        while parents[cur] is not None:
            prev, f = parents[cur]
            order.append(self.facets[f])
            cur = prev
        order.reverse()
        return order


@dataclass(frozen=True)
class ExtendabilityResult:
    extendable: bool
    shellable: bool
    states: int
    stuck_witness: tuple[tuple[int, ...], ...] | None

    def to_json_dict(self) -> dict:
        return {
            "extendable": self.extendable,
            "shellable": self.shellable,
            "partial_shellings_checked": self.states,
            "stuck_witness": None
            if self.stuck_witness is None
            else [list(f) for f in self.stuck_witness],
        }


def is_extendably_shellable(complex_: SimplicialComplex) -> ExtendabilityResult:
    """Exhaustively decide whether every partial shelling extends fully.

    Runs a subset BFS for all shelling prefixes, then propagates
    completability backwards; a reachable-but-not-completable facet set
    yields an explicit stuck partial shelling as witness.
    """
    space = _ExtensionSpace(complex_)
    parents = space.reachable_states()
    if space.full not in parents:
        raise ValueError("complex is not shellable")
    completable: dict[int, bool] = {space.full: True}
    nfac = len(space.facets)

    states = sorted(parents, key=lambda s: s.bit_count(), reverse=True)
    for state in states:
        if state in completable:
            continue
        ok = False
        for f in range(nfac):
            bit = 1 << f
            if state & bit:
                continue
            if not space.addable(state, f):
                continue
            child = state | bit
            # every addable child is itself a reachable prefix
            if completable.get(child, False):
                ok = True
                break
        completable[state] = ok

    for state in states:
        if not completable[state]:
            witness = tuple(space.order_for_state(parents, state))
            return ExtendabilityResult(False, True, len(parents), witness)
    return ExtendabilityResult(True, True, len(parents), None)


def skeleton_complex(n: int, dim: int) -> SimplicialComplex:
    """The dim-skeleton of the simplex on {1..n}."""
    if not -1 <= dim <= n - 1:
        raise ValueError(f"skeleton dimension must lie in -1..{n - 1}")
    return SimplicialComplex(n, all_d_subsets(n, dim + 1) if dim >= 0 else ((),))


def check_contractible_extendable(complex_: SimplicialComplex) -> dict:
    """Probe: contractible (n-3)-dimensional shellable complexes with
    binomial(n,2) - n + 1 facets should be extendably shellable, with the
    unused edges forming a spanning tree.

    Hypothesis violations are reported, never raised.
    """
    n = complex_.n
    report: dict = {"n": n, "hypothesis_ok": True, "reasons": []}

    def fail(reason: str):
        report["hypothesis_ok"] = False
        report["reasons"].append(reason)

    if complex_.is_void or not complex_.is_pure or complex_.dim != n - 3:
        fail(f"complex is not pure of dimension {n - 3}")
        return report
    expected = n * (n - 1) // 2 - n + 1
    if len(complex_.facets) != expected:
        fail(f"facet count {len(complex_.facets)} differs from {expected}")
        return report

    space = _ExtensionSpace(complex_)
    parents = space.reachable_states()
    if space.full not in parents:
        fail("complex is not shellable")
        return report
    order = space.order_for_state(parents, space.full)
    shelling = verify_shelling(complex_, order)
    spheres = sum(1 for r in shelling.restricted_sets if len(r) == n - 2)
    report["full_restricted_steps"] = spheres
    homology = reduced_homology_dims(complex_, "rational")
    report["homology_trivial"] = not any(homology.values())
    if spheres or any(homology.values()):
        fail("complex is not contractible")
        return report

    everything = set(range(1, n + 1))
    facet_set = set(complex_.facets)
    tree = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if tuple(sorted(everything - {u, v})) not in facet_set
    ]
    report["tree_edges"] = [list(e) for e in tree]
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in tree:
        adj[u].add(v)
        adj[v].add(u)
    seen = {1}
    stack = [1]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    report["tree_is_spanning_tree"] = len(tree) == n - 1 and len(seen) == n

    result = is_extendably_shellable(complex_)
    report["extendable"] = result.extendable
    report["partial_shellings_checked"] = result.states
    return report
