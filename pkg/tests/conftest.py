import itertools

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chordal1p.graph import Graph, from_edge_list

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if density is None:
        chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        chosen = [draw(st.floats(0, 1)) < density for _ in pairs]
    return from_edge_list(n, [p for p, c in zip(pairs, chosen) if c])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def k6_minus_e() -> Graph:
    return from_edge_list(6, [e for e in itertools.combinations(range(6), 2) if e != (0, 1)])
