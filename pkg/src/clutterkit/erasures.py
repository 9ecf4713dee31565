"""Erasure sequences: removing exposed circuits from the complete clutter.

An erasure certificate records an order in which circuits were removed
from the complete d-clutter, each one exposed at its removal time, along
with the unique maximal clique witnessing exposure.  Certificates are the
product of the searches here and are always revalidated by replay.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .clutter import Clutter, all_d_subsets, vertex_mask
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class RemovalStep:
    circuit: tuple[int, ...]
    clique: tuple[int, ...]
    k: int  # n - |clique|
    proper: bool


@dataclass(frozen=True)
class ErasureCertificate:
    """Replayable record of an erasure sequence starting from the complete clutter."""

    n: int
    d: int
    removed: tuple[RemovalStep, ...]

    @property
    def result(self) -> Clutter:
        gone = {s.circuit for s in self.removed}
        return Clutter(
            self.n, self.d, tuple(e for e in all_d_subsets(self.n, self.d) if e not in gone)
        )

    @property
    def k_sequence(self) -> tuple[int, ...]:
        return tuple(s.k for s in self.removed)

    @property
    def all_proper(self) -> bool:
        return all(s.proper for s in self.removed)

    def validate(self) -> None:
        """Replay every removal from the complete clutter, checking exposure."""
        current = Clutter.complete(self.n, self.d)
        for idx, step in enumerate(self.removed, start=1):
            status = current.exposed_status(step.circuit)
            if not status.exposed:
                raise ValueError(f"step {idx}: circuit {step.circuit} is not exposed")
            if status.clique != step.clique or status.proper != step.proper:
                raise ValueError(
                    f"step {idx}: recorded clique {step.clique} does not match {status.clique}"
                )
            if step.k != self.n - len(step.clique):
                raise ValueError(f"step {idx}: recorded k = {step.k} is inconsistent")
            current = current.without(step.circuit)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "removed": [
                {
                    "circuit": list(s.circuit),
                    "clique": list(s.clique),
                    "k": s.k,
                    "proper": s.proper,
                }
                for s in self.removed
            ],
            "result_circuits": [list(e) for e in self.result.circuits],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "ErasureCertificate":
        cert = cls(
            n=int(data["n"]),
            d=int(data["d"]),
            removed=tuple(
                RemovalStep(
                    tuple(step["circuit"]), tuple(step["clique"]), int(step["k"]), bool(step["proper"])
                )
                for step in data["removed"]
            ),
        )
        cert.validate()
        if "result_circuits" in data:
            claimed = Clutter.from_circuits(cert.n, cert.d, map(tuple, data["result_circuits"]))
            if claimed != cert.result:
                raise ValueError("certificate result_circuits do not match the replay")
        return cert


def replay_erasure_sequence(n: int, d: int, circuits, require_proper: bool = False) -> ErasureCertificate:
    """Build (and validate) a certificate from an explicit removal order."""
    current = Clutter.complete(n, d)
    steps = []
    for e in circuits:
        e = tuple(sorted(e))
        status = current.exposed_status(e)
        if not status.exposed:
            raise ValueError(f"circuit {e} is not exposed at its removal time")
        if require_proper and not status.proper:
            raise ValueError(f"circuit {e} is exposed but not properly exposed")
        steps.append(RemovalStep(e, status.clique, n - len(status.clique), status.proper))
        current = current.without(e)
    return ErasureCertificate(n, d, tuple(steps))


# -- fast exposure core ------------------------------------------------------

def _exposed_clique_mask(circuit_masks: set[int], n: int, d: int, emask: int,
                         d_minus_one_subs) -> int | None:
    """Unique-maximal-clique mask of an exposed circuit, else None.

    With Q = {v : e+v is a clique}, e is exposed iff e+Q is a clique, and
    then e+Q is that unique clique.
    """
    qmask = 0
    for v in range(n):
        vbit = 1 << v
        if emask & vbit:
            continue
        for sub in d_minus_one_subs[emask]:
            if sub | vbit not in circuit_masks:
                break
        else:
            qmask |= vbit
    if qmask == 0:
        return emask
    closure = emask | qmask
    bits = []
    m = closure
    while m:
        low = m & -m
        bits.append(low)
        m ^= low
    for combo in combinations(bits, d):
        sm = 0
        for b in combo:
            sm |= b
        if sm not in circuit_masks:
            return None
    return closure


class _ErasureSpace:
    """Shared scaffolding for erasure searches on a fixed (n, d)."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.subsets = all_d_subsets(n, d)
        self.masks = [vertex_mask(e) for e in self.subsets]
        # (d-1)-subset masks of each d-subset, for exposure checks
        self.d_minus_one: dict[int, list[int]] = {}
        for em in self.masks:
            subs = []
            m = em
            while m:
                low = m & -m
                subs.append(em ^ low)
                m ^= low
            self.d_minus_one[em] = subs

    def exposure(self, circuit_masks: set[int], emask: int) -> int | None:
        return _exposed_clique_mask(circuit_masks, self.n, self.d, emask, self.d_minus_one)


def find_erasure_sequence(
    target: Clutter, require_proper: bool = False, greedy_only: bool = False
) -> ErasureCertificate | None:
    """Search for an erasure sequence from the complete clutter to ``target``.

    Removal candidates are the circuits missing from the target; the greedy
    choice is the lexicographically first exposed one, with full
    backtracking over removal sets (soundly memoized: exposure depends only
    on the current circuit set).  Returns None when no sequence exists.
    """
    n, d = target.n, target.d
    space = _ErasureSpace(n, d)
    rem = [e for e in space.subsets if e not in target]
    rem_masks = [vertex_mask(e) for e in rem]
    total = len(rem)
    current = set(space.masks)
    dead: set[int] = set()
    chosen: list[int] = []

    def search(state: int) -> bool:
        if len(chosen) == total:
            return True
        for i in range(total):
            bit = 1 << i
            if state & bit:
                continue
            clique = space.exposure(current, rem_masks[i])
            if clique is None:
                continue
            if require_proper and clique.bit_count() <= d:
                continue
            child = state | bit
            if child in dead:
                if greedy_only:
                    return False
                continue
            chosen.append(i)
            current.discard(rem_masks[i])
            if search(child):
                return True
            current.add(rem_masks[i])
            chosen.pop()
            dead.add(child)
            if greedy_only:
                return False
        return False

    if not search(0):
        return None
    return replay_erasure_sequence(n, d, [rem[i] for i in chosen], require_proper)


def erasure_reachable_set(
    n: int, d: int, require_proper: bool = False, with_parents: bool = False
):
    """Breadth-first closure of exposed-circuit removals from the complete clutter.

    States are bitmasks of removed circuits over the lex d-subset order.
    Removals only shrink the clutter, so a clutter is reachable iff its
    removed-set appears here; with ``with_parents`` the return value maps
    each state to (parent state, removed circuit index) for certificate
    extraction, otherwise it is a plain set.
    """
    space = _ErasureSpace(n, d)
    total = len(space.masks)
    parents: dict[int, tuple[int, int] | None] = {0: None}
    frontier = [0]
    while frontier:
        new_frontier = []
        for state in frontier:
            current = {space.masks[i] for i in range(total) if not state >> i & 1}
            for i in range(total):
                bit = 1 << i
                if state & bit or state | bit in parents:
                    continue
                clique = space.exposure(current, space.masks[i])
                if clique is None:
                    continue
                if require_proper and clique.bit_count() <= d:
                    continue
                parents[state | bit] = (state, i)
                new_frontier.append(state | bit)
        frontier = new_frontier
    if with_parents:
        return parents
    return set(parents)


def certificate_from_reachable(parents: dict, state: int, n: int, d: int) -> ErasureCertificate:
    """Extract and replay the removal order recorded by the reachability BFS."""
    subsets = all_d_subsets(n, d)
    order = []
    cur = state
    while parents[cur] is not None:
        prev, idx = parents[cur]
        order.append(subsets[idx])
        cur = prev
    order.reverse()
    return replay_erasure_sequence(n, d, order)


def is_erasure_chordal(clutter: Clutter, require_proper: bool = False) -> bool:
    """True iff the clutter is reachable from the complete clutter by erasures."""
    return find_erasure_sequence(clutter, require_proper) is not None


# -- Betti numbers from a certificate ----------------------------------------

def betti_from_erasures(cert: ErasureCertificate) -> list[int]:
    """beta_i as the binomial sums over the clique deficiencies k_j."""
    ks = cert.k_sequence
    if not ks:
        return []
    return [sum(comb(k, i) for k in ks) for i in range(max(ks) + 1)]


@dataclass(frozen=True)
class BettiContribution:
    """Homological degrees a new generator touches: always {0..k}."""

    indices: tuple[int, ...]
    small: bool


def betti_contribution(clutter: Clutter, circuit) -> BettiContribution:
    """Betti contribution of removing an exposed circuit (adding its monomial).

    The colon ideal is generated by the n - |K| variables off the unique
    maximal clique K, so degrees 0..n-|K| change; the contribution is small
    exactly when the circuit is properly exposed.
    """
    status = clutter.exposed_status(circuit)
    if not status.exposed:
        raise ValueError(f"{tuple(circuit)} is not exposed")
    k = clutter.n - len(status.clique)
    return BettiContribution(tuple(range(k + 1)), k < clutter.n - clutter.d)


# -- h-vector identity ---------------------------------------------------------

def h_vector_check(cert: ErasureCertificate):
    """Compare the h-vector of the removed-facet complex with the k-multiset.

    The complex has one facet [n] \\ e per removed circuit e; its h-vector
    should count how many removals had each clique deficiency.
    """
    n = cert.n
    everything = set(range(1, n + 1))
    facets = [tuple(sorted(everything - set(s.circuit))) for s in cert.removed]
    if facets:
        complex_ = SimplicialComplex(n, tuple(sorted(set(facets), key=lambda f: (len(f), f))))
        h = complex_.h_vector
    else:
        h = ()
    ks = cert.k_sequence
    counts = {k: ks.count(k) for k in set(ks)}
    equal = all(h[i] == counts.get(i, 0) for i in range(len(h))) and all(
        0 <= k < len(h) for k in counts
    )
    return h, sorted(ks), equal


# -- ridge chordality (breadth of comparison for the conjecture probes) -------

def _is_simplicial_ridge(clutter: Clutter, ridge: tuple[int, ...]) -> bool:
    """A ridge is simplicial iff its closed circuit-extension induces a complete subclutter."""
    ext = set(ridge)
    rs = set(ridge)
    for e in clutter.circuits:
        if rs <= set(e):
            ext.update(e)
    if ext == rs:
        return False  # not contained in any circuit: not a ridge here
    induced = clutter.induced(ext)
    return all(c in induced for c in combinations(sorted(ext), clutter.d))


def is_ridge_chordal(clutter: Clutter) -> bool:
    """Decide whether simplicial-ridge deletions can empty the clutter.

    Removing a ridge deletes every circuit containing it; the search
    backtracks over circuit sets (deletion outcomes depend only on the
    current set, so failed states are memoized).
    """
    if clutter.d < 2:
        raise ValueError("ridge chordality needs d >= 2")

    dead: set[frozenset] = set()

    def search(current: Clutter) -> bool:
        if not current.circuits:
            return True
        key = frozenset(current.circuits)
        if key in dead:
            return False
        ridges = sorted({r for e in current.circuits for r in combinations(e, current.d - 1)})
        for ridge in ridges:
            if not _is_simplicial_ridge(current, ridge):
                continue
            rs = set(ridge)
            remaining = [e for e in current.circuits if not rs <= set(e)]
            child = Clutter(current.n, current.d, tuple(remaining))
            if search(child):
                return True
        dead.add(key)
        return False

    return search(clutter)
