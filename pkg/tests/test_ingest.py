import numpy as np
import pytest

from ghosa.errors import (
    CountMismatch,
    DimensionMismatch,
    MissingHeaderField,
    NonNumericToken,
    NonPositiveVelocity,
    TruncatedMatrix,
    TruncatedSection,
    UnknownNodeReference,
    UnsupportedEdgeWeightType,
)
from ghosa.ingest import (
    checksum_text,
    load_instance,
    parse_orlib_mknap,
    parse_qaplib,
    parse_roadnet,
    parse_tsplib,
    serialize_orlib_mknap,
    serialize_qaplib,
    serialize_roadnet,
    serialize_tsplib,
)

TSP_GOLDEN = """\
NAME : square4
TYPE : TSP
DIMENSION : 4
EDGE_WEIGHT_TYPE : EUC_2D
NODE_COORD_SECTION
1 0.0 0.0
2 1.0 0.0
3 1.0 1.0
4 0.0 1.0
EOF
"""

QAP_GOLDEN = "2\n0 1\n1 0\n0 2\n2 0\n"

MKNAP_GOLDEN = """\
1
3 2 0
10 20 30
1 2 3
3 2 1
4 4
"""

ROAD_GOLDEN = """\
# toy network
1 2 3
1 2 10 3
2 3 10 2
1 3 35 0
10 1 3
"""


class TestTsplib:
    def test_golden_parse(self):
        inst = parse_tsplib(TSP_GOLDEN)
        assert inst.n == 4
        assert inst.metric == "EUC_2D"
        assert inst.name == "square4"
        assert inst.coords[2].tolist() == [1.0, 1.0]

    def test_round_trip(self):
        inst = parse_tsplib(TSP_GOLDEN)
        again = parse_tsplib(serialize_tsplib(inst))
        assert again.n == inst.n
        assert again.metric == inst.metric
        assert np.array_equal(again.coords, inst.coords)

    def test_explicit_matrix_round_trip(self):
        m = np.array([[0.0, 2.0, 3.0], [2.0, 0.0, 4.0], [3.0, 4.0, 0.0]])
        text = (
            "NAME : m3\nTYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EXPLICIT\n"
            "EDGE_WEIGHT_FORMAT : UPPER_ROW\nEDGE_WEIGHT_SECTION\n2 3\n4\nEOF\n"
        )
        inst = parse_tsplib(text)
        assert np.array_equal(inst.matrix, m)
        again = parse_tsplib(serialize_tsplib(inst))
        assert np.array_equal(again.matrix, m)
        # symmetric by construction from a triangular section
        assert np.array_equal(inst.matrix, inst.matrix.T)

    def test_empty_input_missing_header(self):
        with pytest.raises(MissingHeaderField):
            parse_tsplib("")

    def test_dimension_mismatch(self):
        bad = TSP_GOLDEN.replace("DIMENSION : 4", "DIMENSION : 5")
        with pytest.raises(DimensionMismatch):
            parse_tsplib(bad)

    def test_unsupported_metric(self):
        bad = TSP_GOLDEN.replace("EUC_2D", "XRAY")
        with pytest.raises(UnsupportedEdgeWeightType):
            parse_tsplib(bad)

    def test_unknown_key_warns_not_fatal(self):
        text = TSP_GOLDEN.replace("TYPE : TSP", "TYPE : TSP\nFROBNICATE : yes")
        with pytest.warns(UserWarning):
            inst = parse_tsplib(text)
        assert inst.n == 4

    def test_ulysses_fixture(self, ulysses16_path):
        record = load_instance(ulysses16_path, "TSPLIB")
        assert record.payload.n == 16
        assert record.payload.metric == "GEO"


class TestQaplib:
    def test_minimal_two_by_two(self):
        inst = parse_qaplib(QAP_GOLDEN)
        assert inst.n == 2
        assert inst.flow.tolist() == [[0, 1], [1, 0]]
        assert inst.dist.tolist() == [[0, 2], [2, 0]]

    def test_round_trip(self, rng):
        n = 5
        inst = parse_qaplib(
            f"{n}\n"
            + "\n".join(" ".join(str(x) for x in row) for row in rng.integers(0, 9, (n, n)))
            + "\n"
            + "\n".join(" ".join(str(x) for x in row) for row in rng.integers(0, 9, (n, n)))
        )
        again = parse_qaplib(serialize_qaplib(inst))
        assert np.array_equal(again.flow, inst.flow)
        assert np.array_equal(again.dist, inst.dist)

    def test_truncated_matrix(self):
        with pytest.raises(TruncatedMatrix):
            parse_qaplib("2\n0 1\n1 0\n0 2\n2")  # one entry short

    def test_non_numeric_token(self):
        with pytest.raises(NonNumericToken):
            parse_qaplib("2\n0 1\n1 x\n0 2\n2 0")


class TestOrlibMknap:
    def test_golden_parse(self):
        instances = parse_orlib_mknap(MKNAP_GOLDEN)
        assert len(instances) == 1
        inst = instances[0]
        assert (inst.m, inst.n) == (2, 3)
        assert inst.profit.tolist() == [10.0, 20.0, 30.0]
        assert inst.capacity.tolist() == [4.0, 4.0]
        assert inst.best_known is None

    def test_declared_optimum_kept(self):
        text = MKNAP_GOLDEN.replace("3 2 0", "3 2 40")
        assert parse_orlib_mknap(text)[0].best_known == 40

    def test_round_trip(self):
        instances = parse_orlib_mknap(MKNAP_GOLDEN)
        again = parse_orlib_mknap(serialize_orlib_mknap(instances))
        assert np.array_equal(again[0].weight, instances[0].weight)
        assert np.array_equal(again[0].profit, instances[0].profit)

    def test_capacity_shortfall_is_count_mismatch(self):
        # header says 2 constraints but only one capacity value follows
        text = "1\n3 2 0\n10 20 30\n1 2 3\n3 2 1\n4\n"
        with pytest.raises(CountMismatch):
            parse_orlib_mknap(text)

    def test_truncated_profits(self):
        with pytest.raises(TruncatedSection):
            parse_orlib_mknap("1\n3 2 0\n10 20\n")


class TestRoadnet:
    def test_golden_parse(self):
        net = parse_roadnet(ROAD_GOLDEN)
        assert net.nodes == [1, 2, 3]
        assert net.edges[(1, 2)] == (10.0, 3.0)
        assert net.velocity == 10.0
        assert (net.source, net.destination) == (1, 3)

    def test_round_trip(self):
        net = parse_roadnet(ROAD_GOLDEN)
        again = parse_roadnet(serialize_roadnet(net))
        assert again.edges == net.edges
        assert again.nodes == net.nodes

    def test_two_node_single_edge(self):
        net = parse_roadnet("1 2\n1 2 5 1\n2 1 2\n")
        assert len(net.edges) == 1

    def test_unknown_node_reference(self):
        with pytest.raises(UnknownNodeReference):
            parse_roadnet("1 2\n1 9 5 1\n2 1 2\n")

    def test_zero_velocity(self):
        with pytest.raises(NonPositiveVelocity):
            parse_roadnet("1 2\n1 2 5 1\n0 1 2\n")


class TestChecksums:
    def test_stable_across_calls(self):
        assert checksum_text(TSP_GOLDEN) == checksum_text(TSP_GOLDEN)

    def test_sensitive_to_content(self):
        assert checksum_text(TSP_GOLDEN) != checksum_text(TSP_GOLDEN + " ")

    def test_load_instance_records_checksum(self, tmp_path):
        p = tmp_path / "square4.tsp"
        p.write_text(TSP_GOLDEN)
        rec1 = load_instance(p, "TSPLIB")
        rec2 = load_instance(p, "TSPLIB")
        assert rec1.checksum == rec2.checksum == checksum_text(TSP_GOLDEN)
