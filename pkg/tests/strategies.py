"""Hypothesis strategies for small labelled graphs."""

from __future__ import annotations

from hypothesis import strategies as st

from misbounds.graph import Graph
from oracles import graph_from_mask


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


@st.composite
def permuted(draw, min_n: int = 1, max_n: int = 8) -> tuple[Graph, list[int]]:
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)
