import pytest

from nicecubic.catalog import h44, k33
from nicecubic.enumeration import corpus_up_to, enumerate_cubic
from nicecubic.families import (
    FamilyFSpec,
    FamilyG1Spec,
    FamilyG2Spec,
    FamilyTSpec,
    HdiamondSpec,
    Replacement,
    TStep,
    build_family,
    build_t,
)
from nicecubic.graph6 import write_graph6
from nicecubic.graphs import connectivity_profile


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("corpus-cache")


@pytest.fixture(scope="session")
def corpus10(cache_dir):
    """Connected cubic corpus, n = 4..10."""
    return corpus_up_to(10, cache_dir=cache_dir)


@pytest.fixture(scope="session")
def corpus12(cache_dir, corpus10):
    return corpus10 + enumerate_cubic(12, cache_dir=cache_dir)


@pytest.fixture(scope="session")
def bipartite_hosts10(corpus10):
    """The 3-connected cubic bipartite graphs on 10 vertices, from the corpus."""
    out = []
    for entry in corpus10:
        if entry.graph.n != 10:
            continue
        profile = connectivity_profile(entry.graph)
        if profile.bipartition is not None and profile.three_connected:
            out.append(entry.graph)
    return out


def _family_zoo(bip10):
    """A deterministic slate of 50+ family members for round-trip testing.

    All members stay at or below 20 vertices except the three F_3 members,
    whose smallest possible order is 22.
    """
    k33_g6 = write_graph6(k33())
    h44_g6 = write_graph6(h44())
    bip10_g6 = [write_graph6(g) for g in bip10]

    def block(quads, host_g6, edge):
        return HdiamondSpec(quads=quads, host_graph6=host_g6, host_edge=edge)

    specs = []

    for quads in (1, 2, 3, 4):
        specs.append(("Hdiamond", block(quads, k33_g6, (0, 3))))
        specs.append(("Hdiamond", block(quads, h44_g6, (0, 5))))
    specs.append(("Hdiamond", block(1, k33_g6, (1, 4))))
    specs.append(("Hdiamond", block(2, k33_g6, (2, 5))))
    specs.append(("Hdiamond", block(5, k33_g6, (0, 3))))
    for host in bip10:
        specs.append(("Hdiamond", block(1, write_graph6(host), host.edges[0])))

    f_blocks = [
        block(1, k33_g6, (0, 3)),
        block(2, k33_g6, (0, 3)),
        block(3, k33_g6, (0, 3)),
        block(1, h44_g6, (0, 5)),
        block(2, h44_g6, (0, 5)),
        block(3, h44_g6, (0, 5)),
        block(4, k33_g6, (1, 4)),
    ]
    for fb in f_blocks:
        specs.append(("F", FamilyFSpec(replacements=(Replacement((0, 1), fb),))))
    specs.append(
        ("F", FamilyFSpec(replacements=(Replacement((2, 3), f_blocks[0]),)))
    )

    small = f_blocks[0]
    mid = f_blocks[1]
    pairs = [
        ((0, 1), (0, 2), small, small),   # adjacent K4 edges
        ((0, 1), (2, 3), small, small),   # opposite K4 edges
        ((0, 1), (0, 2), small, mid),
        ((0, 1), (2, 3), small, f_blocks[3]),
        ((1, 2), (0, 3), mid, mid),
    ]
    for e1, e2, b1, b2 in pairs:
        specs.append(
            ("F", FamilyFSpec(replacements=(Replacement(e1, b1), Replacement(e2, b2))))
        )
    for edges in (((0, 1), (0, 2), (1, 2)), ((0, 1), (0, 2), (0, 3)), ((0, 1), (1, 2), (2, 3))):
        specs.append(
            (
                "F",
                FamilyFSpec(
                    replacements=tuple(Replacement(e, small) for e in edges)
                ),
            )
        )

    from nicecubic.catalog import k33_triangle_non_nice

    nn = k33_triangle_non_nice()
    g1_hosts = [(k33_g6, 0), (h44_g6, 0)] + [(g6, 0) for g6 in bip10_g6]
    for host_g6, v in g1_hosts:
        specs.append(("G1", FamilyG1Spec(nn[0], host_g6, v)))
    specs.append(("G1", FamilyG1Spec(nn[1], k33_g6, 0)))
    specs.append(("G1", FamilyG1Spec(nn[0], k33_g6, 3)))
    specs.append(("G1", FamilyG1Spec(nn[1], h44_g6, 2)))
    specs.append(("G1", FamilyG1Spec(nn[0], h44_g6, 0, phi=None)))
    specs.append(("G1", FamilyG1Spec(nn[0], h44_g6, 0, phi=(6, 5, 7))))

    g2_pairs = [
        (k33_g6, 0, k33_g6, 0),
        (k33_g6, 0, h44_g6, 0),
        (h44_g6, 0, k33_g6, 0),
        (h44_g6, 0, h44_g6, 0),
        (k33_g6, 3, bip10_g6[0], 0),
    ]
    for h1, v1, h2, v2 in g2_pairs:
        specs.append(
            (
                "G2",
                FamilyG2Spec(
                    FamilyG1Spec(nn[0], h1, v1), FamilyG1Spec(nn[1], h2, v2)
                ),
            )
        )

    for quads in (1, 2, 3, 4):
        specs.append(("T", FamilyTSpec(steps=(TStep(quads, (0, 3)),))))
    for second_edge_index in (0, 7, 14):
        base_steps = (TStep(1, (0, 3)),)
        partial = build_t(FamilyTSpec(steps=base_steps))
        edge = partial.edges[second_edge_index % len(partial.edges)]
        specs.append(("T", FamilyTSpec(steps=base_steps + (TStep(1, edge),))))
    partial = build_t(FamilyTSpec(steps=(TStep(2, (1, 4)),)))
    specs.append(
        ("T", FamilyTSpec(steps=(TStep(2, (1, 4)), TStep(1, partial.edges[3]))))
    )
    partial = build_t(FamilyTSpec(steps=(TStep(1, (0, 3)),)))
    specs.append(
        ("T", FamilyTSpec(steps=(TStep(1, (0, 3)), TStep(2, partial.edges[10]))))
    )
    return specs


@pytest.fixture(scope="session")
def family_zoo(bipartite_hosts10):
    specs = _family_zoo(bipartite_hosts10)
    return [(family, spec, build_family(spec)) for family, spec in specs]
