import io
import json
import random

import networkx as nx
import pytest

from distspec.bounds import certify_all, evaluate
from distspec.enumeration import all_graphs
from distspec.families import complete, cycle, path, random_connected
from distspec.formats import (
    CSV_COLUMNS,
    CertifiedGraph,
    FormatError,
    decode_graph6,
    encode_graph6,
    format_real,
    parse_edge_list,
    read_certificates_json,
    read_edge_list,
    read_graph6_lines,
    records_to_json,
    write_certificates_csv,
    write_certificates_json,
)
from distspec.graph import Graph


class TestGraph6Examples:
    @pytest.mark.parametrize(
        "text, g",
        [
            ("C~", complete(4)),
            ("Ch", path(4)),
            ("@", Graph(1, [0])),
            ("A_", complete(2)),
            ("A?", Graph(2, [0, 0])),
            ("Dhc", cycle(5)),
        ],
    )
    def test_decode_encode(self, text, g):
        assert decode_graph6(text) == g
        assert encode_graph6(g) == text.encode()

    def test_header_and_newline(self):
        assert decode_graph6(b">>graph6<<C~\n") == complete(4)

    def test_extended_order(self):
        g = path(63)
        data = encode_graph6(g)
        assert data[:4] == bytes([126, 63, 63 + 0, 63 + 63])
        assert decode_graph6(data) == g

    def test_against_networkx(self):
        rng = random.Random(1)
        for n in list(range(1, 70)) + [100, 130]:
            g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(g.edges())
            ref = nx.to_graph6_bytes(h, header=False, nodes=list(range(n))).strip()
            assert encode_graph6(g) == ref
            assert decode_graph6(ref) == g


class TestGraph6RoundTrip:
    def test_all_small_graphs(self):
        for n in range(1, 8):
            for g in all_graphs(n):
                assert decode_graph6(encode_graph6(g)) == g

    def test_random(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(1, 62)
            g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
            assert decode_graph6(encode_graph6(g)) == g


class TestGraph6Errors:
    @pytest.mark.parametrize(
        "data, position",
        [
            (b"", 0),
            (b"C", 1),
            (b"C~~", 2),
            (b"C\x20", 1),
            (b"Bx", 1),
            (b"~?", 2),
        ],
    )
    def test_positions(self, data, position):
        with pytest.raises(FormatError) as err:
            decode_graph6(data)
        assert err.value.position == position

    def test_non_ascii(self):
        with pytest.raises(FormatError):
            decode_graph6("Cé")

    def test_fuzz(self):
        rng = random.Random(20261019)
        ok = 0
        for _ in range(10**5):
            length = rng.randint(0, 12)
            if rng.random() < 0.5:
                data = bytes(rng.randint(63, 126) for _ in range(length))
            else:
                data = bytes(rng.randint(0, 255) for _ in range(length))
            try:
                g = decode_graph6(data)
            except FormatError:
                continue
            ok += 1
            assert encode_graph6(g) == data.rstrip(b"\r\n")
        assert ok > 0

    def test_lines_name_the_line(self):
        with pytest.raises(FormatError) as err:
            list(read_graph6_lines(["C~\n", "\n", "Bx\n"]))
        assert err.value.position == 3

    def test_lines(self):
        assert [k for k, _ in read_graph6_lines(["C~", "", "Ch"])] == [1, 3]


class TestEdgeList:
    def test_parse(self):
        text = "# a path\n4 3\n0 1\n1 2  # middle\n2 3\n"
        assert parse_edge_list(text) == path(4)

    def test_read_file(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("3 3\n0 1\n1 2\n0 2\n")
        assert read_edge_list(f) == complete(3)

    @pytest.mark.parametrize(
        "text, line, fragment",
        [
            ("", 1, "header"),
            ("3 2\n0 1\n", 2, "declares 2"),
            ("3 1\n1 1\n", 2, "self-loop"),
            ("3 1\n0 3\n", 2, "out of range"),
            ("3 1\n0 x\n", 2, "non-integer"),
            ("3\n", 1, "expected 2"),
            ("3 1\n0 1 2\n", 2, "expected 2"),
        ],
    )
    def test_errors(self, text, line, fragment):
        with pytest.raises(FormatError, match=fragment) as err:
            parse_edge_list(text)
        assert err.value.position == line


class TestReports:
    def test_golden_k4_row(self):
        g = complete(4)
        record = CertifiedGraph.of("K4", g, [evaluate("rho_lower_degrees", g)])
        buf = io.StringIO()
        write_certificates_csv([record], buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[1] == "K4,4,6,1,rho_lower_degrees,lower-rho,true,3,3,0,true,true,false"

    def test_inapplicable_row(self):
        g = cycle(5)
        record = CertifiedGraph.of("C5", g, [evaluate("rho_lower_bipartite", g)])
        buf = io.StringIO()
        write_certificates_csv([record], buf, header=False)
        assert buf.getvalue().strip() == "C5,5,5,2,rho_lower_bipartite,lower-rho,false,,6,,,,false"

    def test_uncharacterised_prints_empty(self):
        g = cycle(5)
        record = CertifiedGraph.of("C5", g, [evaluate("de_upper_koolen_shifted", g)])
        buf = io.StringIO()
        write_certificates_csv([record], buf, header=False)
        assert buf.getvalue().strip().split(",")[10] == ""

    @pytest.mark.parametrize("x, text", [(3.0, "3"), (-0.0, "0"), (None, ""), (2 ** 0.5, "1.41421356237")])
    def test_format_real(self, x, text):
        assert format_real(x) == text

    def test_json_round_trip(self):
        records = [CertifiedGraph.of(str(g), g, certify_all(g)) for g in (cycle(5), path(4), random_connected(9, 0.4, seed=1))]
        buf = io.StringIO()
        write_certificates_json(records, buf)
        buf.seek(0)
        back = read_certificates_json(buf)
        assert records_to_json(back) == records_to_json(records)
        assert [c.bound_id for c in back[0].certificates] == [c.bound_id for c in records[0].certificates]
        assert json.loads(buf.getvalue())[0]["n"] == 5
