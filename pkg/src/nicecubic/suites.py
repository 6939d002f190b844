"""Verification suites: each suite checks one claim over an enumerated corpus.

A suite's checker takes one corpus graph and returns None when the graph does
not satisfy the claim's hypothesis, otherwise a list of violation details
(empty when the claim holds there). Every suite is deterministic; reports are
byte-stable given fixed flags, and per-graph checks are independent so they
can run across processes.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .errors import InternalCheckError, UnknownSuiteError
from .catalog import k33
from .enumeration import CorpusEntry, corpus_up_to
from .families import recognize_family, verify_membership
from .graphs import (
    Graph,
    bipartition,
    connected_components,
    connectivity_profile,
    contract,
    edge_cut,
    induced_subgraph,
)
from .isomorphism import is_isomorphic
from .matching import (
    count_perfect_matchings,
    has_perfect_matching,
    is_matching_covered,
    perfect_matchings,
    tutte_condition_holds,
)
from .nice import (
    find_nice_pair_set,
    is_nice_pair,
    is_nice_vertex,
    nice_pair_matrix,
    nice_pair_sets_bounded,
    nice_vertices,
)
from .structure import (
    barriers,
    classify,
    is_tight_cut,
    nontrivial_tight_cuts,
    odd_component_count,
    tight_cut_contractions,
)


@dataclass(frozen=True)
class Violation:
    graph6: str
    claim: str
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    claim: str
    max_n: int
    graphs_checked: int
    violations: tuple[Violation, ...]
    runtime_seconds: float

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        # runtime stays off the payload so reports are byte-stable across runs
        return {
            "suite": self.suite,
            "claim": self.claim,
            "max_n": self.max_n,
            "graphs_checked": self.graphs_checked,
            "passed": self.passed,
            "violations": [
                {
                    "graph6": v.graph6,
                    "claim": v.claim,
                    "detail": v.detail,
                    "replay": f"nicecubic verify --suite {self.suite} --max-n {self.max_n}",
                }
                for v in self.violations
            ],
        }


@dataclass(frozen=True)
class Suite:
    name: str
    claim: str
    modules: tuple[str, ...]
    checker: Callable[[Graph], list[str] | None]


def _sides(g: Graph):
    """Every proper nonempty side containing vertex 0 (one per complement pair)."""
    rest = list(range(1, g.n))
    for size in range(0, g.n - 1):
        for extra in combinations(rest, size):
            yield frozenset((0,) + extra)


def _all_barrier_sets_exhaustive(g: Graph) -> list[frozenset[int]]:
    out = []
    for size in range(1, g.n // 2 + 1):
        for subset in combinations(range(g.n), size):
            if odd_component_count(g, subset) == size:
                out.append(frozenset(subset))
    return out


def _is_independent(g: Graph, vs) -> bool:
    vs = sorted(vs)
    return not any(g.multiplicity(a, b) for a, b in combinations(vs, 2))


# --- checkers ---------------------------------------------------------------


def _check_matching_covered_2_connected(g: Graph) -> list[str] | None:
    if not (g.is_cubic and connectivity_profile(g).connected):
        return None
    two = connectivity_profile(g).two_connected
    covered = is_matching_covered(g)
    if two != covered:
        return [f"2-connected={two} but matching covered={covered}"]
    return []


def _check_bicritical_all_nice(g: Graph) -> list[str] | None:
    if not g.is_cubic or not classify(g).bicritical:
        return None
    report = nice_vertices(g)
    if report.upsilon != g.n:
        return [f"bicritical but only {report.upsilon} of {g.n} vertices nice"]
    return []


def _check_edge_in_perfect_matching(g: Graph) -> list[str] | None:
    if not (g.is_cubic and connectivity_profile(g).two_connected):
        return None
    problems = []
    if not is_matching_covered(g):
        problems.append("2-connected cubic graph is not matching covered")
    pm_count = count_perfect_matchings(g)
    if pm_count < 3:
        problems.append(f"only {pm_count} perfect matchings, expected at least 3")
    return problems


def _check_tutte_existence(g: Graph) -> list[str] | None:
    fast = has_perfect_matching(g)
    oracle = tutte_condition_holds(g)
    if fast != oracle:
        return [f"matching search says {fast}, deletion-set sweep says {oracle}"]
    return []


def _check_barrier_properties(g: Graph) -> list[str] | None:
    if g.n < 2 or not is_matching_covered(g):
        return None
    problems = []
    exhaustive = _all_barrier_sets_exhaustive(g)
    bicritical = classify(g).bicritical
    has_nontrivial = any(len(s) >= 2 for s in exhaustive)
    if bicritical != (not has_nontrivial):
        problems.append(
            f"bicritical={bicritical} but nontrivial barrier exists={has_nontrivial}"
        )
    for s in exhaustive:
        comps = connected_components(g, s)
        if any(len(c) % 2 == 0 for c in comps):
            problems.append(f"barrier {sorted(s)} leaves an even component")
        if not _is_independent(g, s):
            problems.append(f"barrier {sorted(s)} is not independent")
    reported = {b.vertices for b in barriers(g, mode="all")}
    if reported != set(exhaustive):
        problems.append("pruned barrier enumeration disagrees with exhaustive sweep")
    return problems


def _check_tight_cuts_are_3_cuts(g: Graph) -> list[str] | None:
    if not (g.is_cubic and connectivity_profile(g).two_connected):
        return None
    pms = perfect_matchings(g)
    problems = []
    for side in _sides(g):
        cut = edge_cut(g, side)
        cut_set = set(cut.edge_indices)
        tight = all(len(cut_set.intersection(m.edge_indices)) == 1 for m in pms)
        if tight and len(cut.edge_indices) != 3:
            problems.append(
                f"tight cut at side {sorted(side)} has {len(cut.edge_indices)} edges"
            )
        if len(side) == 1 and not tight:
            problems.append(f"trivial cut at {sorted(side)} is not tight")
    return problems


def _check_nontrivial_3_cut_matching(g: Graph) -> list[str] | None:
    if not connectivity_profile(g).three_connected:
        return None
    from .graphs import enumerate_cuts

    problems = []
    for cut in enumerate_cuts(g, 3, nontrivial_only=True):
        ends = [v for i in cut.edge_indices for v in g.edges[i]]
        if len(set(ends)) != 6:
            problems.append(f"nontrivial 3-cut {cut.edge_indices} is not a matching")
    return problems


def _check_bipartite_tight_criterion(g: Graph) -> list[str] | None:
    if g.n < 2 or bipartition(g) is None or not is_matching_covered(g):
        return None
    problems = []
    for side in _sides(g):
        try:
            witness = is_tight_cut(g, edge_cut(g, side))
        except InternalCheckError as exc:
            problems.append(str(exc))
            continue
        if witness.tight and witness.bipartite_split is not None:
            plus, minus = witness.bipartite_split.x_plus, witness.bipartite_split.x_minus
            if len(plus) != len(minus) + 1:
                problems.append(f"tight cut side {sorted(side)} has bad split sizes")
    return problems


def _check_tight_free_brick_brace(g: Graph) -> list[str] | None:
    if g.n < 2 or not is_matching_covered(g) or not g.is_cubic:
        return None
    free = not nontrivial_tight_cuts(g)
    flags = classify(g)
    if free != (flags.brick or flags.brace):
        return [
            f"nontrivial-tight-cut-free={free} but brick={flags.brick} brace={flags.brace}"
        ]
    return []


def _check_brace_four_deletion(g: Graph) -> list[str] | None:
    parts = bipartition(g)
    if parts is None or not connectivity_profile(g).connected or g.n < 6:
        return None
    if len(parts.a) != len(parts.b) or not has_perfect_matching(g):
        return None
    full = set(range(g.n))
    deletion_ok = True
    for a1, a2 in combinations(sorted(parts.a), 2):
        for b1, b2 in combinations(sorted(parts.b), 2):
            rest, _ = induced_subgraph(g, full - {a1, a2, b1, b2})
            if not has_perfect_matching(rest):
                deletion_ok = False
                break
        if not deletion_ok:
            break
    if deletion_ok != classify(g).brace:
        return [f"four-deletion test={deletion_ok} but brace={classify(g).brace}"]
    return []


def _check_bipartite_nonbrace_contraction(g: Graph) -> list[str] | None:
    if g.n < 2 or bipartition(g) is None or not is_matching_covered(g):
        return None
    if classify(g).brace:
        return None
    cuts = nontrivial_tight_cuts(g)
    if not cuts:
        return ["bipartite matching covered non-brace without a nontrivial tight cut"]
    for witness in cuts:
        first, second = tight_cut_contractions(g, witness)
        if classify(first.graph).brace or classify(second.graph).brace:
            return []
    return ["no nontrivial tight cut has a brace contraction"]


def _check_cubic_barrier_components(g: Graph) -> list[str] | None:
    if not (g.is_cubic and g.simple and connectivity_profile(g).three_connected):
        return None
    nontrivial_barriers = [b for b in barriers(g, mode="nontrivial")]
    if not nontrivial_barriers:
        return None
    problems = []
    non_bip = bipartition(g) is None
    for barrier in nontrivial_barriers:
        comps = connected_components(g, barrier.vertices)
        nontrivial_comps = [c for c in comps if len(c) > 1]
        for comp in nontrivial_comps:
            cut = edge_cut(g, comp)
            witness = is_tight_cut(g, cut)
            if not witness.tight or len(cut.edge_indices) != 3:
                problems.append(
                    f"component cut of {sorted(comp)} not a tight 3-cut"
                )
                continue
            ends = [v for i in cut.edge_indices for v in g.edges[i]]
            if len(set(ends)) != 6:
                problems.append(f"component cut of {sorted(comp)} not a matching")
            for side in tight_cut_contractions(g, witness):
                profile = connectivity_profile(side.graph)
                if not (side.graph.simple and profile.three_connected and profile.cubic):
                    problems.append(
                        f"contraction at {sorted(comp)} not 3-connected simple cubic"
                    )
        if non_bip and not any(
            bipartition(induced_subgraph(g, c)[0]) is None for c in nontrivial_comps
        ):
            problems.append(
                f"barrier {sorted(barrier.vertices)}: no nontrivial non-bipartite component"
            )
    return problems


def _check_minimal_barrier_all_nice(g: Graph) -> list[str] | None:
    if not (g.is_cubic and g.simple):
        return None
    profile = connectivity_profile(g)
    if not profile.three_connected or profile.bipartition is not None:
        return None
    if classify(g).bicritical:
        return None
    minimal = barriers(g, mode="minimal_nontrivial")
    if not minimal:
        return ["non-bicritical 3-connected graph without a minimal nontrivial barrier"]
    for barrier in minimal:
        if all(is_nice_vertex(g, v) for v in barrier.vertices):
            return []
    return ["no minimal nontrivial barrier consists of nice vertices only"]


def _check_nice_lift_tight_cut(g: Graph) -> list[str] | None:
    if not (g.is_cubic and g.simple and connectivity_profile(g).two_connected):
        return None
    problems = []
    for witness in nontrivial_tight_cuts(g):
        shrink_complement, shrink_side = tight_cut_contractions(g, witness)
        for contraction, side in (
            (shrink_complement, witness.cut.side),
            (shrink_side, frozenset(range(g.n)) - witness.cut.side),
        ):
            if not contraction.graph.simple:
                continue
            for u in sorted(side):
                if is_nice_vertex(contraction.graph, contraction.old_to_new[u]):
                    if not is_nice_vertex(g, u):
                        problems.append(
                            f"{u} nice in the contraction at {sorted(side)} but not in the host"
                        )
    return problems


def _two_cut_instances(g: Graph):
    """(side, a, c, b, d) for each orientation of each 2-cut, a, c inside."""
    from .graphs import enumerate_cuts

    for cut in enumerate_cuts(g, 2, nontrivial_only=True):
        (e1u, e1v), (e2u, e2v) = (g.edges[i] for i in cut.edge_indices)
        for side in (cut.side, frozenset(range(g.n)) - cut.side):
            a, b = (e1u, e1v) if e1u in side else (e1v, e1u)
            c, d = (e2u, e2v) if e2u in side else (e2v, e2u)
            yield side, a, c, b, d


def _check_two_cut_nice_transfer(g: Graph) -> list[str] | None:
    if not (g.is_cubic and g.simple and connectivity_profile(g).two_connected):
        return None
    problems = []
    full = frozenset(range(g.n))
    for side, a, c, b, d in _two_cut_instances(g):
        cut_without_a = edge_cut(g, side - {a})
        if not is_tight_cut(g, cut_without_a).tight:
            problems.append(f"side {sorted(side)} minus {a} is not a tight cut")
        inner, _ = induced_subgraph(g, side - {a, c})
        outer, _ = induced_subgraph(g, (full - side) - {b, d})
        if not has_perfect_matching(inner) or not has_perfect_matching(outer):
            problems.append(f"2-cut at {sorted(side)}: trimmed sides not matchable")
        inner_full, _ = induced_subgraph(g, side)
        parts = bipartition(inner_full)
        if parts is not None and a != c:
            if (a in parts.a) == (c in parts.a):
                problems.append(
                    f"2-cut at {sorted(side)}: endpoints {a},{c} share a color class"
                )
        if g.multiplicity(a, c):
            continue
        sub, old_ids = induced_subgraph(g, side)
        position = {old: new for new, old in enumerate(old_ids)}
        patched = Graph(sub.n, list(sub.edges) + [(position[a], position[c])])
        if patched.is_cubic:
            for u in sorted(side):
                if is_nice_vertex(patched, position[u]) and not is_nice_vertex(g, u):
                    problems.append(
                        f"{u} nice in the patched side {sorted(side)} but not in the host"
                    )
    return problems


def _check_barrier_criterion_equivalence(g: Graph) -> list[str] | None:
    if not (g.is_cubic and g.simple and connectivity_profile(g).two_connected):
        return None
    by_definition = nice_vertices(g, method="definition").nice
    by_barrier = nice_vertices(g, method="barrier").nice
    if by_definition != by_barrier:
        return [
            f"definition says {sorted(by_definition)}, barriers say {sorted(by_barrier)}"
        ]
    return []


def _check_nice_count_bounds(g: Graph) -> list[str] | None:
    profile = connectivity_profile(g)
    if not (g.is_cubic and g.simple and profile.two_connected):
        return None
    if profile.bipartition is not None:
        return None
    problems = []
    count = nice_vertices(g).upsilon
    family = recognize_family(g)
    if count < 4:
        problems.append(f"only {count} nice vertices")
    low = family.family in ("K4", "F")
    if (count == 4) != low:
        problems.append(f"count {count} vs family {family.family}")
    if low and not verify_membership(g, family):
        problems.append("family witness failed to rebuild the graph")
    if profile.three_connected and family.family != "K4":
        if count < 6:
            problems.append(f"3-connected with only {count} nice vertices")
        mid = family.family in ("prism", "K33_triangle", "G1", "G2")
        if (count == 6) != mid:
            problems.append(f"count {count} vs family {family.family}")
        if mid and not verify_membership(g, family):
            problems.append("family witness failed to rebuild the graph")
    return problems


def _check_nice_pair_rectangle(g: Graph) -> list[str] | None:
    if not (g.is_cubic and g.simple) or bipartition(g) is None:
        return None
    if not connectivity_profile(g).connected:
        return None
    problems = []
    if find_nice_pair_set(g, 3) is None:
        problems.append("no 3x3 nice pair set")
    bounded = nice_pair_sets_bounded(g, 3)
    if bounded and find_nice_pair_set(g, 4) is not None:
        problems.append("bounded pair sets yet a 4x4 rectangle exists")
    family = recognize_family(g)
    if bounded != (family.family == "T"):
        problems.append(f"bounded={bounded} vs family {family.family}")
    if family.family == "T" and not verify_membership(g, family):
        problems.append("family witness failed to rebuild the graph")
    return problems


def _check_nine_nice_pairs(g: Graph) -> list[str] | None:
    if not (g.is_cubic and g.simple) or bipartition(g) is None:
        return None
    if not connectivity_profile(g).connected:
        return None
    problems = []
    count = nice_pair_matrix(g).pair_count
    if count < 9:
        problems.append(f"only {count} nice pairs")
    if (count == 9) != (is_isomorphic(g, k33()) is not None):
        problems.append(f"pair count {count} does not match the equality case")
    return problems


def _check_brace_all_pairs_nice(g: Graph) -> list[str] | None:
    if not (g.is_cubic and g.simple) or bipartition(g) is None:
        return None
    if not connectivity_profile(g).connected:
        return None
    from .nice import all_pairs_nice

    every = all_pairs_nice(g)
    brace = classify(g).brace
    if every != brace:
        return [f"all-pairs-nice={every} but brace={brace}"]
    return []


def _check_pair_lift_tight_cut(g: Graph) -> list[str] | None:
    parts = bipartition(g)
    if not (g.is_cubic and g.simple) or parts is None:
        return None
    profile = connectivity_profile(g)
    if not profile.two_connected:
        return None
    problems = []
    for witness in nontrivial_tight_cuts(g):
        for side in (witness.cut.side, frozenset(range(g.n)) - witness.cut.side):
            side_a, side_b = side & parts.a, side & parts.b
            if len(side_a) != len(side_b) + 1 and len(side_b) != len(side_a) + 1:
                continue
            plus_is_a = len(side_a) == len(side_b) + 1
            shrink_complement = contract(g, frozenset(range(g.n)) - side)
            shrink_side = contract(g, side)
            if not shrink_complement.graph.simple:
                continue
            g1, g2 = shrink_complement, shrink_side
            inside_pairs = [
                (a, b)
                for a in sorted(side_a if plus_is_a else side_b)
                for b in sorted(side_b if plus_is_a else side_a)
            ]
            for a, b in inside_pairs:
                small = is_nice_pair(g1.graph, g1.old_to_new[a], g1.old_to_new[b])
                host = is_nice_pair(g, a, b)
                if small != host:
                    problems.append(
                        f"pair ({a},{b}) nice in contraction={small} host={host}"
                    )
            if profile.three_connected and g2.graph.simple:
                out_side = frozenset(range(g.n)) - side
                for a in sorted(side_a if plus_is_a else side_b):
                    if not is_nice_pair(g1.graph, g1.old_to_new[a], g1.merged):
                        continue
                    for b in sorted(
                        (out_side & parts.b) if plus_is_a else (out_side & parts.a)
                    ):
                        if is_nice_pair(g2.graph, g2.merged, g2.old_to_new[b]):
                            if not is_nice_pair(g, a, b):
                                problems.append(
                                    f"lifted pair ({a},{b}) not nice in the host"
                                )
    return problems


def _check_two_cut_pair_transfer(g: Graph) -> list[str] | None:
    parts = bipartition(g)
    if not (g.is_cubic and g.simple) or parts is None:
        return None
    if not connectivity_profile(g).two_connected:
        return None
    problems = []
    rel = nice_pair_matrix(g)
    nice_pairs = {
        (rel.a_order[i], rel.b_order[j])
        for i, row in enumerate(rel.matrix)
        for j, hit in enumerate(row)
        if hit
    }
    for side, u, w, v, z in _two_cut_instances(g):
        if g.multiplicity(u, w):
            continue
        for a, b in nice_pairs:
            if (a in side) != (b in side):
                problems.append(
                    f"nice pair ({a},{b}) crosses the 2-cut at {sorted(side)}"
                )
        sub, old_ids = induced_subgraph(g, side)
        position = {old: new for new, old in enumerate(old_ids)}
        patched = Graph(sub.n, list(sub.edges) + [(position[u], position[w])])
        if not patched.is_cubic:
            continue
        for a in sorted(side & parts.a):
            for b in sorted(side & parts.b):
                host = (a, b) in nice_pairs
                small = is_nice_pair(patched, position[a], position[b])
                if host != small:
                    problems.append(
                        f"pair ({a},{b}): host={host} patched side={small}"
                    )
    return problems


SUITES: dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite(
            "matching-covered-2-connected",
            "a cubic graph is 2-connected exactly when it is matching covered",
            ("graph-core", "matching-engine"),
            _check_matching_covered_2_connected,
        ),
        Suite(
            "bicritical-all-nice",
            "every vertex of a cubic bicritical graph is nice",
            ("structure-analysis", "nice-analysis"),
            _check_bicritical_all_nice,
        ),
        Suite(
            "edge-in-perfect-matching",
            "every edge of a 2-connected cubic graph lies in a perfect matching, "
            "and such graphs have at least three perfect matchings",
            ("matching-engine",),
            _check_edge_in_perfect_matching,
        ),
        Suite(
            "tutte-existence",
            "augmenting-path matching existence agrees with the exhaustive "
            "odd-component deletion-set test",
            ("matching-engine",),
            _check_tutte_existence,
        ),
        Suite(
            "barrier-properties",
            "in matching covered graphs: bicritical equals nontrivial-barrier-free; "
            "barriers leave no even components and are independent sets",
            ("structure-analysis",),
            _check_barrier_properties,
        ),
        Suite(
            "tight-cuts-are-3-cuts",
            "every tight cut of a 2-connected cubic graph has exactly 3 edges, "
            "and trivial cuts are tight",
            ("structure-analysis",),
            _check_tight_cuts_are_3_cuts,
        ),
        Suite(
            "nontrivial-3-cut-matching",
            "in a 3-connected graph every nontrivial 3-cut is a matching",
            ("graph-core",),
            _check_nontrivial_3_cut_matching,
        ),
        Suite(
            "bipartite-tight-criterion",
            "bipartite tightness: enumeration agrees with the split criterion, "
            "and tight odd sides split sizes k+1 / k",
            ("structure-analysis",),
            _check_bipartite_tight_criterion,
        ),
        Suite(
            "tight-free-brick-brace",
            "a matching covered graph has no nontrivial tight cuts exactly when "
            "it is a brick or a brace",
            ("structure-analysis",),
            _check_tight_free_brick_brace,
        ),
        Suite(
            "brace-four-deletion",
            "a connected bipartite graph on >= 6 vertices is a brace exactly when "
            "every balanced four-vertex deletion leaves a matchable graph",
            ("structure-analysis",),
            _check_brace_four_deletion,
        ),
        Suite(
            "bipartite-nonbrace-contraction",
            "a bipartite matching covered non-brace has a nontrivial tight cut "
            "with a brace contraction",
            ("structure-analysis",),
            _check_bipartite_nonbrace_contraction,
        ),
        Suite(
            "cubic-barrier-components",
            "nontrivial barrier components of 3-connected cubic graphs sit behind "
            "tight 3-cut matchings with 3-connected simple cubic contractions; "
            "non-bipartite hosts keep a non-bipartite component",
            ("structure-analysis",),
            _check_cubic_barrier_components,
        ),
        Suite(
            "minimal-barrier-all-nice",
            "every 3-connected non-bicritical non-bipartite cubic graph has a "
            "minimal nontrivial barrier whose vertices are all nice",
            ("structure-analysis", "nice-analysis"),
            _check_minimal_barrier_all_nice,
        ),
        Suite(
            "nice-lift-tight-cut",
            "niceness lifts from a simple tight-cut contraction to the host",
            ("nice-analysis", "structure-analysis"),
            _check_nice_lift_tight_cut,
        ),
        Suite(
            "two-cut-nice-transfer",
            "across a 2-cut: the shifted cut is tight, trimmed sides are matchable, "
            "bipartite sides color the cut ends apart, and niceness transfers from "
            "the patched side to the host",
            ("nice-analysis", "structure-analysis"),
            _check_two_cut_nice_transfer,
        ),
        Suite(
            "barrier-criterion-equivalence",
            "definitional and barrier-based nice-vertex answers agree on "
            "2-connected cubic graphs",
            ("nice-analysis",),
            _check_barrier_criterion_equivalence,
        ),
        Suite(
            "nice-count-bounds",
            "2-connected non-bipartite cubic graphs have >= 4 nice vertices "
            "(>= 6 when 3-connected and not K4), with equality exactly on the "
            "recognized extremal families",
            ("nice-analysis", "constructors-families"),
            _check_nice_count_bounds,
        ),
        Suite(
            "nice-pair-rectangle",
            "cubic bipartite graphs have a 3x3 nice pair set, and the 3x3-bounded "
            "graphs are exactly the recognized chain-of-K33 family",
            ("nice-analysis", "constructors-families"),
            _check_nice_pair_rectangle,
        ),
        Suite(
            "nine-nice-pairs",
            "cubic bipartite graphs have >= 9 nice pairs with equality only for K33",
            ("nice-analysis",),
            _check_nine_nice_pairs,
        ),
        Suite(
            "brace-all-pairs-nice",
            "a connected cubic bipartite graph is a brace exactly when every "
            "cross pair is nice",
            ("nice-analysis", "structure-analysis"),
            _check_brace_all_pairs_nice,
        ),
        Suite(
            "pair-lift-tight-cut",
            "nice pairs transfer across simple tight-cut contractions in cubic "
            "bipartite hosts, inside the cut side and, when 3-connected, across it",
            ("nice-analysis", "structure-analysis"),
            _check_pair_lift_tight_cut,
        ),
        Suite(
            "two-cut-pair-transfer",
            "nice pairs of a cubic bipartite graph never cross a 2-cut, and "
            "within a side agree with the patched side graph",
            ("nice-analysis",),
            _check_two_cut_pair_transfer,
        ),
    )
}


def list_suites() -> list[Suite]:
    return [SUITES[name] for name in sorted(SUITES)]


def _run_entry(args: tuple[str, str]) -> tuple[str, list[str] | None]:
    suite_name, graph6_line = args
    from .graph6 import parse_graph6

    checker = SUITES[suite_name].checker
    return graph6_line, checker(parse_graph6(graph6_line))


def verify_suite(
    suite: str,
    max_n: int,
    jobs: int = 1,
    use_cache: bool = True,
    cache_dir=None,
    entries: list[CorpusEntry] | None = None,
) -> VerificationReport:
    """Run one suite over the connected cubic corpus up to max_n.

    ``entries`` overrides the corpus (used to point suites at constructed
    graphs). Violations carry the offending graph6 and a replay command.
    """
    if suite not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {suite!r}; available: {', '.join(sorted(SUITES))}"
        )
    start = time.perf_counter()
    if entries is None:
        entries = corpus_up_to(max_n, connected_only=True, use_cache=use_cache, cache_dir=cache_dir)
    work = [(suite, e.graph6) for e in entries]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_entry, work, chunksize=4))
    else:
        results = [_run_entry(item) for item in work]
    checked = 0
    violations = []
    claim = SUITES[suite].claim
    for graph6_line, outcome in results:
        if outcome is None:
            continue
        checked += 1
        for detail in outcome:
            violations.append(Violation(graph6=graph6_line, claim=claim, detail=detail))
    return VerificationReport(
        suite=suite,
        claim=claim,
        max_n=max_n,
        graphs_checked=checked,
        violations=tuple(violations),
        runtime_seconds=time.perf_counter() - start,
    )
