"""Tests for CKS weight polynomials of dual graphs."""

from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from wallcross.cks import (
    Multigraph,
    betti1,
    cks_recursion,
    cks_weight,
    disconnecting_subsets,
    parse_graph,
    ratcurve_check,
    u_series,
)
from wallcross.errors import GraphFormatError, ParameterError
from wallcross.ring import ONE

from .helpers import W


class TestMultigraph:
    def test_banana(self) -> None:
        graph = Multigraph.banana(3)
        assert graph.vertex_count == 2
        assert graph.edge_count == 3
        assert graph.components == 1

    def test_rose(self) -> None:
        assert Multigraph.rose(2).edges == ((0, 0), (0, 0))

    def test_edge_outside_graph(self) -> None:
        with pytest.raises(GraphFormatError):
            Multigraph(2, ((0, 2),))

    def test_no_vertices(self) -> None:
        with pytest.raises(GraphFormatError):
            Multigraph(0, ())

    def test_json_shape(self) -> None:
        assert Multigraph.banana(1).to_json() == {"vertices": 2, "edges": [[0, 1]]}


class TestParseGraph:
    def test_shorthands(self) -> None:
        assert parse_graph("banana:3") == Multigraph.banana(3)
        assert parse_graph(" rose:2 ") == Multigraph.rose(2)

    def test_inline_json(self) -> None:
        graph = parse_graph('{"vertices": 3, "edges": [[0, 1], [1, 2]]}')
        assert graph == Multigraph(3, ((0, 1), (1, 2)))

    def test_json_file(self, tmp_path: Path) -> None:
        path = tmp_path / "graph.json"
        path.write_text(json.dumps(Multigraph.rose(1).to_json()))
        assert parse_graph(str(path)) == Multigraph.rose(1)

    @pytest.mark.parametrize(
        "text",
        ["banana:x", "no-such-file.json", "{not json", "[1, 2]", '{"edges": []}'],
    )
    def test_malformed(self, text: str) -> None:
        with pytest.raises(GraphFormatError):
            parse_graph(text)


class TestBetti:
    def test_banana(self) -> None:
        graph = Multigraph.banana(3)
        assert betti1(graph) == 2
        assert betti1(graph, [0, 1]) == 0

    def test_rose(self) -> None:
        assert betti1(Multigraph.rose(3), [2]) == 2

    def test_unknown_edge(self) -> None:
        with pytest.raises(ParameterError):
            betti1(Multigraph.rose(1), [1])

    def test_disconnecting_subsets(self) -> None:
        graph = Multigraph.banana(2)
        assert disconnecting_subsets(graph, 1) == []
        assert disconnecting_subsets(graph, 2) == [(0, 1)]


class TestWeights:
    def test_degree_zero(self) -> None:
        assert cks_weight(Multigraph.banana(2), 0) == ONE

    def test_banana(self) -> None:
        assert cks_weight(Multigraph.banana(2), 1) == 1 - W

    def test_rose(self) -> None:
        assert cks_weight(Multigraph.rose(2), 1) == -2 * W

    def test_recursion_matches_rose(self) -> None:
        u_banana = u_series(Multigraph.banana(2), 2)
        assert cks_recursion(u_banana, 1) == -2 * W

    def test_negative_degree(self) -> None:
        with pytest.raises(ParameterError):
            cks_weight(Multigraph.rose(1), -1)

    def test_u_series_needs_a_term(self) -> None:
        with pytest.raises(ParameterError):
            u_series(Multigraph.rose(1), 0)


class TestRatcurve:
    def test_genus_two(self) -> None:
        report = ratcurve_check(2, 2)
        assert report.passed, report.summary()
        assert report.notes == {"nodes": 2, "regime_external": False}

    def test_rank_too_small(self) -> None:
        with pytest.raises(ParameterError):
            ratcurve_check(2, 1)


def _random_graph(rng: random.Random) -> Multigraph:
    vertices = rng.randrange(1, 5)
    edges = tuple(
        (rng.randrange(vertices), rng.randrange(vertices)) for _ in range(rng.randrange(7))
    )
    return Multigraph(vertices, edges)


def test_betti1_never_grows_when_edges_are_removed() -> None:
    rng = random.Random(20240604)
    for _ in range(60):
        graph = _random_graph(rng)
        removed = [e for e in range(graph.edge_count) if rng.random() < 0.3]
        rest = [e for e in range(graph.edge_count) if e not in removed]
        more = removed + [e for e in rest if rng.random() < 0.5]
        before, after = betti1(graph, removed), betti1(graph, more)
        assert 0 <= after <= before
        # each deleted edge lowers b1 by at most one
        assert before - after <= len(more) - len(removed)
