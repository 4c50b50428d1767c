"""Weight polynomials of CKS complexes for dual graphs of nodal curves.

The class of the n-th complex is an alternating sum over edge subsets I of
exterior powers of H^1(G - I) + H_1(G - I) L, both of dimension b1(G - I);
L is recorded by the weight variable w.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Any

import networkx as nx

from .blocks import check_genus
from .errors import GraphFormatError, ParameterError
from .report import CheckReport, failed, passed
from .ring import ONE, ZERO, LaurentPoly, QSeries, var

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Multigraph:
    """Finite multigraph; loops and parallel edges allowed. Edges are addressed by index."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise GraphFormatError(f"a graph needs at least one vertex, got {self.vertex_count}")
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside the graph")

    @classmethod
    def banana(cls, k: int) -> Multigraph:
        """Two vertices joined by k parallel edges."""
        return cls(2, tuple((0, 1) for _ in range(k)))

    @classmethod
    def rose(cls, k: int) -> Multigraph:
        """One vertex with k loops."""
        return cls(1, tuple((0, 0) for _ in range(k)))

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> Multigraph:
        try:
            vertices = int(data["vertices"])
            edges = tuple((int(u), int(v)) for u, v in data["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"invalid graph description: {exc}") from None
        return cls(vertices, edges)

    def to_json(self) -> dict[str, Any]:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def components(self) -> int:
        return _components(self, ())

    def __str__(self) -> str:
        return f"Multigraph({self.vertex_count} vertices, {self.edge_count} edges)"


def _components(graph: Multigraph, removed: tuple[int, ...]) -> int:
    gone = set(removed)
    nxg: nx.MultiGraph = nx.MultiGraph()
    nxg.add_nodes_from(range(graph.vertex_count))
    nxg.add_edges_from(e for i, e in enumerate(graph.edges) if i not in gone)
    return int(nx.number_connected_components(nxg))


def parse_graph(text: str) -> Multigraph:
    """Read `banana:k`, `rose:k`, an inline JSON object or a path to a JSON file."""
    text = text.strip()
    family, sep, count = text.partition(":")
    if sep and family in ("banana", "rose"):
        if not count.isdigit():
            raise GraphFormatError(f"edge count must be a nonnegative integer, got {count!r}")
        build = Multigraph.banana if family == "banana" else Multigraph.rose
        return build(int(count))
    if not text.startswith("{"):
        path = Path(text)
        if not path.is_file():
            raise GraphFormatError(f"not a graph shorthand, JSON object or file: {text!r}")
        text = path.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid graph JSON: {exc}") from None
    if not isinstance(data, dict):
        raise GraphFormatError("graph JSON must be an object")
    return Multigraph.from_json(data)


def _normalize_removed(graph: Multigraph, removed: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(set(removed)))
    if out and not (0 <= out[0] and out[-1] < graph.edge_count):
        raise ParameterError(f"removed edges {out} are not edges of {graph}")
    return out


@lru_cache(maxsize=None)
def _betti1(graph: Multigraph, removed: tuple[int, ...]) -> int:
    kept = graph.edge_count - len(removed)
    return kept - graph.vertex_count + _components(graph, removed)


def betti1(graph: Multigraph, removed: Iterable[int] = ()) -> int:
    """First Betti number E' - V + c of the graph with the given edges deleted."""
    return _betti1(graph, _normalize_removed(graph, removed))


def _wedge(a: int, k: int) -> LaurentPoly:
    """[Lambda^k(Q^a + L^a)] = sum_j C(a, j) C(a, k - j) w^(k - j)."""
    w = var("w")
    total = ZERO
    for j in range(k + 1):
        c = comb(a, j) * comb(a, k - j)
        if c:
            total = total + c * w ** (k - j)
    return total


def disconnecting_subsets(graph: Multigraph, n: int) -> list[tuple[int, ...]]:
    """Edge subsets of size <= n whose removal adds connected components."""
    base = graph.components
    return [
        removed
        for i in range(1, min(n, graph.edge_count) + 1)
        for removed in combinations(range(graph.edge_count), i)
        if _components(graph, removed) > base
    ]


@lru_cache(maxsize=None)
def cks_weight(graph: Multigraph, n: int) -> LaurentPoly:
    """Weight polynomial of CKS^n[-n] as an alternating sum over edge subsets."""
    if n < 0:
        raise ParameterError(f"complex degree must be nonnegative, got {n}")
    total = ZERO
    for i in range(min(n, graph.edge_count) + 1):
        for removed in combinations(range(graph.edge_count), i):
            total = total + (-1) ** i * _wedge(_betti1(graph, removed), n - i)
    return total if n % 2 == 0 else -total


def u_series(graph: Multigraph, max_n: int) -> QSeries:
    """U = sum_{n < max_n} [CKS^n[-n]] q^n."""
    if max_n < 1:
        raise ParameterError(f"max_n must be at least 1, got {max_n}")
    if disconnecting_subsets(graph, max_n - 1):
        logger.warning("%s: some removals disconnect the graph, outside the lemma's regime", graph)
    return QSeries.from_coeffs([cks_weight(graph, n) for n in range(max_n)], max_n)


def cks_recursion(u_banana: QSeries, n: int) -> LaurentPoly:
    """Coefficient of q^n in (1 - q)(1 - qw) U(banana)."""
    w = var("w")
    return u_banana.coeff(n) - u_banana.coeff(n - 1) * (ONE + w) + u_banana.coeff(n - 2) * w


def ratcurve_check(g: int, r: int = 2) -> CheckReport:
    """U(rose) = (1 - q)(1 - qw) U(banana) mod q^e, e = (r - 1)(2g - 2) nodes."""
    check_genus(g)
    if r < 2:
        raise ParameterError(f"rank must be at least 2, got {r}")
    nodes = (r - 1) * (2 * g - 2)
    name = f"ratcurve g={g} r={r}"
    banana, rose = Multigraph.banana(nodes), Multigraph.rose(nodes)
    u_banana, u_rose = u_series(banana, nodes), u_series(rose, nodes)
    for n in range(nodes):
        expected = cks_recursion(u_banana, n)
        if u_rose.coeff(n) != expected:
            return failed(name, f"q^{n}", expected, u_rose.coeff(n))
    external = bool(disconnecting_subsets(banana, nodes - 1))
    logger.debug("ratcurve g=%d r=%d: %d nodes", g, r, nodes)
    return passed(name, nodes=nodes, regime_external=external)
