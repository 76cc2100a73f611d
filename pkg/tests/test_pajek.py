import numpy as np
import pytest

from graphjoint.errors import IngestError, PajekError
from graphjoint.pajek import (
    combine_documents,
    load_dataset,
    parse_pajek,
    to_ensemble,
    write_pajek,
)

MINIMAL = '*Vertices 2\n1 "a"\n2 "b"\n*Edges\n1 2\n'


class TestParsePajek:
    def test_minimal_document(self):
        doc = parse_pajek(MINIMAL)
        assert doc.n == 2
        assert doc.labels == ["a", "b"]
        assert len(doc.relations) == 1
        assert doc.relations[0].links == [(1, 2, 1.0)]

    def test_empty_edge_section(self):
        doc = parse_pajek("*Vertices 3\n*Edges\n")
        assert doc.n == 3
        assert doc.relations[0].links == []

    def test_weights_and_arcs(self):
        doc = parse_pajek("*Vertices 3\n*Arcs\n1 2 2.5\n3 1\n")
        rel = doc.relations[0]
        assert rel.directed
        assert rel.links == [(1, 2, 2.5), (3, 1, 1.0)]

    def test_case_insensitive_and_crlf(self):
        doc = parse_pajek("*VERTICES 2\r\n1 \"x\"\r\n*edges\r\n1 2 3\r\n")
        assert doc.n == 2
        assert doc.relations[0].links == [(1, 2, 3.0)]

    def test_comments_and_blanks_skipped(self):
        doc = parse_pajek("% a comment\n*Vertices 2\n\n% more\n*Edges\n1 2\n")
        assert doc.relations[0].links == [(1, 2, 1.0)]

    def test_multiple_relations_with_names(self):
        text = (
            "*Vertices 3\n"
            '*Network "friends"\n*Edges\n1 2\n'
            '*Network "work"\n*Arcs\n2 3\n'
        )
        doc = parse_pajek(text)
        assert [r.name for r in doc.relations] == ["friends", "work"]
        assert [r.directed for r in doc.relations] == [False, True]

    def test_out_of_range_index(self):
        with pytest.raises(PajekError) as exc:
            parse_pajek("*Vertices 2\n*Edges\n1 5\n")
        assert exc.value.line == 3

    def test_bad_weight(self):
        with pytest.raises(PajekError) as exc:
            parse_pajek("*Vertices 2\n*Edges\n1 2 heavy\n")
        assert exc.value.line == 3

    def test_bad_header(self):
        with pytest.raises(PajekError):
            parse_pajek("*Vertices two\n")

    def test_edges_before_vertices(self):
        with pytest.raises(PajekError):
            parse_pajek("*Edges\n1 2\n")

    def test_conflicting_vertex_counts(self):
        with pytest.raises(PajekError):
            parse_pajek("*Vertices 2\n*Vertices 3\n")

    def test_round_trip(self):
        text = (
            "*Vertices 4\n"
            '*Network "alpha"\n*Edges\n1 2 1.5\n3 4\n'
            '*Network "beta"\n*Arcs\n4 1 2\n'
        )
        doc = parse_pajek(text)
        again = parse_pajek(write_pajek(doc))
        assert again.n == doc.n
        assert [(r.name, r.directed, r.links) for r in again.relations] == [
            (r.name, r.directed, r.links) for r in doc.relations
        ]


class TestToEnsemble:
    def test_arc_symmetrize_binarize(self):
        doc = parse_pajek("*Vertices 2\n*Arcs\n1 2 3\n")
        ens = to_ensemble(doc, symmetrize=True, binarize=True)
        assert np.array_equal(ens.graphs[0].weights, np.array([[0.0, 1.0], [1.0, 0.0]]))

    def test_symmetric_edges_unchanged(self):
        doc = parse_pajek("*Vertices 3\n*Edges\n1 2\n2 3\n")
        ens = to_ensemble(doc)
        expected = np.zeros((3, 3))
        expected[0, 1] = expected[1, 0] = 1.0
        expected[1, 2] = expected[2, 1] = 1.0
        assert np.array_equal(ens.graphs[0].weights, expected)

    def test_weights_kept_without_binarize(self):
        doc = parse_pajek("*Vertices 2\n*Edges\n1 2 2.5\n")
        ens = to_ensemble(doc, binarize=False)
        assert ens.graphs[0].weights[0, 1] == pytest.approx(2.5)

    def test_parallel_links_summed(self):
        doc = parse_pajek("*Vertices 2\n*Edges\n1 2 1\n1 2 2\n")
        ens = to_ensemble(doc, binarize=False)
        assert ens.graphs[0].weights[0, 1] == pytest.approx(3.0)

    def test_self_loop_dropped_with_warning(self):
        doc = parse_pajek("*Vertices 2\n*Edges\n1 1 5\n1 2\n")
        with pytest.warns(UserWarning, match="self-loop"):
            ens = to_ensemble(doc)
        assert ens.graphs[0].weights[0, 0] == 0.0

    def test_no_relations_rejected(self):
        doc = parse_pajek("*Vertices 2\n")
        with pytest.raises(IngestError):
            to_ensemble(doc)

    def test_invariants_hold_for_directed_input(self):
        doc = parse_pajek("*Vertices 4\n*Arcs\n1 2 3\n2 1 1\n3 4 2\n")
        ens = to_ensemble(doc, binarize=False)
        w = ens.graphs[0].weights
        assert np.array_equal(w, w.T)
        assert w[0, 1] == pytest.approx(3.0)  # max of the two arc weights


class TestCombineAndLoad:
    def test_combine_mismatched_counts(self):
        a = parse_pajek("*Vertices 2\n*Edges\n1 2\n")
        b = parse_pajek("*Vertices 3\n*Edges\n1 2\n")
        with pytest.raises(IngestError):
            combine_documents([a, b])

    def test_manifest_loading(self, tmp_path):
        (tmp_path / "r1.net").write_text("*Vertices 3\n*Edges\n1 2\n", encoding="utf-8")
        (tmp_path / "r2.net").write_text("*Vertices 3\n*Edges\n2 3\n", encoding="utf-8")
        manifest = tmp_path / "manifest.json"
        manifest.write_text('{"paths": ["r1.net", "r2.net"]}', encoding="utf-8")
        ens = load_dataset(manifest)
        assert ens.k == 2
        assert ens.n == 3

    def test_surrogate_dataset(self, data_dir):
        ens = load_dataset(data_dir / "students_surrogate.net")
        assert ens.k == 3
        assert ens.n == 32
        for g in ens.graphs:
            w = g.weights
            assert np.array_equal(w, w.T)
            assert np.all(np.diagonal(w) == 0)
