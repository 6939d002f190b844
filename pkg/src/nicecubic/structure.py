"""Barriers, bicritical/brick/brace classification, tight cuts and their
contractions.

A barrier is a vertex set whose deletion leaves exactly as many odd
components as the set has vertices. Tightness of a cut means every perfect
matching crosses it exactly once; for bipartite hosts an independent
polynomial criterion is computed alongside the enumeration answer and the
two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .errors import DomainError, InternalCheckError, NotTightCutError
from .graphs import (
    EdgeCut,
    Graph,
    VertexSet,
    Contraction,
    bipartition,
    connected_components,
    connectivity_profile,
    contract,
    edge_cut,
    enumerate_cuts,
    induced_subgraph,
    is_connected,
)
from .matching import (
    has_perfect_matching,
    is_matching_covered,
    perfect_matchings,
)

BarrierMode = Literal["all", "nontrivial", "minimal_nontrivial"]

_SUBSET_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class Barrier:
    vertices: VertexSet
    odd_component_count: int
    nontrivial: bool
    minimal_nontrivial: bool


@dataclass(frozen=True)
class BipartiteSplit:
    """Larger/smaller color-class intersections of an odd cut side."""

    x_plus: VertexSet
    x_minus: VertexSet


@dataclass(frozen=True)
class CutWitness:
    cut: EdgeCut
    tight: bool
    bipartite_split: BipartiteSplit | None


@dataclass(frozen=True)
class Classification:
    matching_covered: bool
    bicritical: bool
    brick: bool
    two_extendable: bool
    brace: bool


def odd_component_count(g: Graph, s: Iterable[int]) -> int:
    return sum(1 for comp in connected_components(g, s) if len(comp) % 2)


def is_barrier(g: Graph, s: Iterable[int]) -> bool:
    vs = set(s)
    return odd_component_count(g, vs) == len(vs)


def barriers(g: Graph, mode: BarrierMode = "all") -> list[Barrier]:
    """Every nonempty vertex set S with o(G - S) = |S|, filtered by mode.

    The empty set formally qualifies whenever G has a perfect matching but is
    excluded here; callers care about vertices that barriers isolate.

    When the host is matching covered, only independent sets are swept (every
    barrier of a matching covered graph is independent), which keeps
    enumeration feasible to around 16 vertices. Parity caps |S| at n/2.
    """
    if not has_perfect_matching(g):
        raise DomainError("barriers are defined for graphs with a perfect matching")
    if mode not in ("all", "nontrivial", "minimal_nontrivial"):
        raise ValueError(f"unknown barrier mode {mode!r}")
    candidates = _barrier_sets(g)
    out = []
    for vs in candidates:
        nontrivial = len(vs) >= 2
        if mode != "all" and not nontrivial:
            continue
        minimal = nontrivial and not any(
            is_barrier(g, sub)
            for size in range(2, len(vs))
            for sub in combinations(sorted(vs), size)
        )
        if mode == "minimal_nontrivial" and not minimal:
            continue
        out.append(
            Barrier(
                vertices=vs,
                odd_component_count=len(vs),
                nontrivial=nontrivial,
                minimal_nontrivial=minimal,
            )
        )
    out.sort(key=lambda b: (len(b.vertices), sorted(b.vertices)))
    return out


def _barrier_sets(g: Graph) -> list[frozenset[int]]:
    cap = g.n // 2
    found: list[frozenset[int]] = []
    if g.n >= 2 and is_matching_covered(g):
        chosen: list[int] = []

        def sweep(start: int):
            if chosen and is_barrier(g, chosen):
                found.append(frozenset(chosen))
            if len(chosen) == cap:
                return
            for v in range(start, g.n):
                if any(u in g.neighbor_sets[v] for u in chosen):
                    continue
                chosen.append(v)
                sweep(v + 1)
                chosen.pop()

        sweep(0)
    else:
        if g.n > _SUBSET_ENUMERATION_CAP:
            raise DomainError(
                f"barrier enumeration on a non matching covered host is capped "
                f"at {_SUBSET_ENUMERATION_CAP} vertices (got {g.n})"
            )
        for size in range(1, cap + 1):
            for subset in combinations(range(g.n), size):
                if is_barrier(g, subset):
                    found.append(frozenset(subset))
    return found


def classify(g: Graph) -> Classification:
    """Matching covered / bicritical / brick / 2-extendable / brace flags.

    The brace flag is computed two independent ways on bipartite hosts (the
    four-vertex deletion characterization and the 2-extendability definition)
    and the answers are required to agree.
    """
    matching_covered = g.n >= 2 and is_matching_covered(g)
    bicritical = _is_bicritical(g)
    connected = is_connected(g)
    brick = bicritical and connectivity_profile(g).three_connected
    two_extendable = _is_two_extendable(g)
    parts = bipartition(g)
    brace = two_extendable and parts is not None
    if (
        parts is not None
        and connected
        and g.n >= 6
        and len(parts.a) == len(parts.b) >= 2
        and has_perfect_matching(g)
    ):
        by_deletion = _brace_by_four_deletion(g, parts)
        if by_deletion != brace:
            raise InternalCheckError(
                "brace characterizations disagree: "
                f"four-deletion={by_deletion}, two-extendable={brace}"
            )
    return Classification(
        matching_covered=matching_covered,
        bicritical=bicritical,
        brick=brick,
        two_extendable=two_extendable,
        brace=brace,
    )


def _is_bicritical(g: Graph) -> bool:
    if not g.edges or g.n % 2:
        return False
    full = set(range(g.n))
    for x, y in combinations(range(g.n), 2):
        rest, _ = induced_subgraph(g, full - {x, y})
        if not has_perfect_matching(rest):
            return False
    return True


def _is_two_extendable(g: Graph) -> bool:
    if g.n < 6 or not is_connected(g) or not has_perfect_matching(g):
        return False
    full = set(range(g.n))
    m = len(g.edges)
    for i in range(m):
        u1, v1 = g.edges[i]
        for j in range(i + 1, m):
            u2, v2 = g.edges[j]
            if len({u1, v1, u2, v2}) < 4:
                continue
            rest, _ = induced_subgraph(g, full - {u1, v1, u2, v2})
            if not has_perfect_matching(rest):
                return False
    return True


def _brace_by_four_deletion(g: Graph, parts) -> bool:
    full = set(range(g.n))
    side_a, side_b = sorted(parts.a), sorted(parts.b)
    for a1, a2 in combinations(side_a, 2):
        for b1, b2 in combinations(side_b, 2):
            rest, _ = induced_subgraph(g, full - {a1, a2, b1, b2})
            if not has_perfect_matching(rest):
                return False
    return True


def is_tight_cut(g: Graph, cut: EdgeCut) -> CutWitness:
    """Tightness by perfect-matching enumeration.

    On bipartite hosts the polynomial criterion (odd side, plus-class one
    larger, no edges from the minus class to the complement's minus class) is
    evaluated independently; disagreement trips an internal error.
    """
    if not has_perfect_matching(g):
        raise DomainError("tightness is defined over hosts with perfect matchings")
    cut_set = set(cut.edge_indices)
    tight = all(
        len(cut_set.intersection(m.edge_indices)) == 1 for m in perfect_matchings(g)
    )
    split = None
    parts = bipartition(g)
    if parts is not None:
        side = cut.side
        inside_a = side & parts.a
        inside_b = side & parts.b
        if len(side) % 2 == 1:
            x_plus, x_minus = (
                (inside_a, inside_b)
                if len(inside_a) > len(inside_b)
                else (inside_b, inside_a)
            )
            split = BipartiteSplit(x_plus=x_plus, x_minus=x_minus)
            complement = frozenset(range(g.n)) - side
            co_a, co_b = complement & parts.a, complement & parts.b
            co_minus = co_a if len(co_a) < len(co_b) else co_b
            criterion = len(x_plus) == len(x_minus) + 1 and not any(
                (u in x_minus and v in co_minus) or (v in x_minus and u in co_minus)
                for u, v in g.edges
            )
        else:
            criterion = False
        if criterion != tight:
            raise InternalCheckError(
                f"bipartite tightness criterion ({criterion}) disagrees with "
                f"enumeration ({tight}) for side {sorted(cut.side)}"
            )
    return CutWitness(cut=cut, tight=tight, bipartite_split=split)


def nontrivial_tight_cuts(g: Graph) -> list[CutWitness]:
    """All nontrivial tight cuts.

    Cubic hosts only need 3-edge candidates (every tight cut of a cubic
    matching covered graph is a 3-cut); otherwise all sides are swept.
    """
    if g.n < 2 or not is_matching_covered(g):
        raise DomainError("tight cuts are defined for matching covered hosts")
    if g.is_cubic:
        candidates = enumerate_cuts(g, 3, nontrivial_only=True)
    else:
        if g.n > _SUBSET_ENUMERATION_CAP:
            raise DomainError("general tight-cut sweep capped at desk scale")
        candidates = _all_nontrivial_cuts(g)
    witnesses = [is_tight_cut(g, cut) for cut in candidates]
    return [w for w in witnesses if w.tight]


def _all_nontrivial_cuts(g: Graph) -> list[EdgeCut]:
    out = []
    rest = list(range(1, g.n))
    for size in range(1, g.n - 2):
        for extra in combinations(rest, size):
            side = frozenset((0,) + extra)
            if 2 <= len(side) <= g.n - 2:
                out.append(edge_cut(g, side))
    return out


def tight_cut_contractions(g: Graph, witness: CutWitness) -> tuple[Contraction, Contraction]:
    """The two contractions of a tight cut: (shrink the complement, shrink the
    side). Labels map back to the host through each Contraction record."""
    if not witness.tight:
        raise NotTightCutError("refusing to contract across a cut that is not tight")
    side = set(witness.cut.side)
    complement = set(range(g.n)) - side
    return contract(g, complement), contract(g, side)
