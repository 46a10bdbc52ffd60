"""Hypothesis generators shared by the test modules."""

from hypothesis import strategies as st

from sqcolor.graph import build_graph


@st.composite
def graphs(draw, min_n=1, max_n=8, max_degree=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if max_degree is not None:
        deg = [0] * n
        kept = []
        for u, v in chosen:
            if deg[u] < max_degree and deg[v] < max_degree:
                kept.append((u, v))
                deg[u] += 1
                deg[v] += 1
        chosen = kept
    return build_graph(n, chosen)
