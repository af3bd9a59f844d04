"""
划分表示、构造划分、表示表与划分文本测试
"""

import json

import pytest

from src.chains import build_cycle, build_even_chain_cycle, build_odd_chain_cycle
from src.graph import distance_matrix
from src.resolving import (
    LowerBoundReason,
    Partition,
    PdCertificate,
    constructed_partition,
    constructed_partition_even,
    constructed_partition_odd,
    format_partition,
    is_resolving_partition,
    is_resolving_set,
    parse_partition,
    partition_dimension_chain,
    partition_representation,
    representation_matrix,
    representation_table,
    table_to_json,
    table_to_tsv,
)
from src.shared.exceptions import LabelError, ParityError, ValidationError, WitnessNotResolvingError
from tests.graphs import cycle_graph, path_graph


class TestPartition:

    def test_labels_follow_blocks(self):
        p = Partition.of([[2, 0], [1], [3]], 4)
        assert p.blocks == ((0, 2), (1,), (3,))
        assert p.k == 3
        assert p.block_of(2) == 0
        assert Partition.from_labels([0, 1, 0, 2]) == p

    @pytest.mark.parametrize("blocks", [
        [[0, 1], []],
        [[0, 1], [1, 2]],
        [[0, 1]],
        [[0, 1, 2, 3]],
        [],
    ])
    def test_invalid_partitions(self, blocks):
        with pytest.raises(ValidationError):
            Partition.of(blocks, 3)

    def test_certificate_value_matches_witness(self):
        with pytest.raises(ValidationError):
            PdCertificate(value=2, lower_bound_reason=LowerBoundReason.NOT_A_PATH, witness=Partition.discrete(3))


class TestRepresentation:

    def test_cycle_representation(self):
        dm = distance_matrix(cycle_graph(6))
        p = Partition.of([[0], [1], [2, 3, 4, 5]], 6)
        assert partition_representation(dm, p, 3) == (3, 2, 0)
        assert representation_matrix(dm, p).tolist()[0] == [0, 1, 1]

    def test_single_block_never_resolves(self):
        dm = distance_matrix(path_graph(2))
        check = is_resolving_partition(dm, Partition.single(2))
        assert not check
        assert check.pair == (0, 1)

    def test_discrete_partition_resolves(self):
        dm = distance_matrix(cycle_graph(5))
        check = is_resolving_partition(dm, Partition.discrete(5))
        assert check
        assert check.pair is None

    def test_size_mismatch(self):
        dm = distance_matrix(path_graph(3))
        with pytest.raises(ValidationError):
            representation_matrix(dm, Partition.discrete(4))

    def test_resolving_sets(self):
        dm = distance_matrix(cycle_graph(6))
        assert is_resolving_set(dm, [0, 1])
        assert not is_resolving_set(dm, [0, 3])
        assert is_resolving_set(distance_matrix(path_graph(4)), [0])
        with pytest.raises(ValidationError):
            is_resolving_set(dm, [])
        with pytest.raises(ValidationError):
            is_resolving_set(dm, [6])


class TestConstructedPartition:

    def test_even_blocks(self, even_table):
        p = constructed_partition_even(even_table)
        labels = [[even_table.position_label(v) for v in block] for block in p.blocks]
        assert sorted(labels[0]) == ["v1_1", "v1_2", "v1_3", "v1_6", "v1_7", "v1_8"]
        assert sorted(labels[1]) == ["v2_10", "v2_8", "v2_9", "v3_8"]
        assert len(labels[2]) == 14

    def test_odd_blocks(self, odd_table):
        p = constructed_partition_odd(odd_table)
        labels = [sorted(odd_table.position_label(v) for v in block) for block in p.blocks]
        assert labels[0] == ["v1_1", "v1_2", "v1_5"]
        assert labels[1] == ["v2_7", "v3_5"]

    def test_parity_checked(self, even_small, odd_small):
        with pytest.raises(ParityError):
            constructed_partition_odd(even_small)
        with pytest.raises(ParityError):
            constructed_partition_even(odd_small)

    @pytest.mark.parametrize("ns", [[8, 10, 8], [6, 6], [6, 8, 10]])
    def test_even_witness_resolves(self, ns):
        cc = build_even_chain_cycle(ns)
        cert = partition_dimension_chain(cc)
        assert cert.value == 3
        assert cert.lower_bound_reason is LowerBoundReason.NOT_A_PATH

    @pytest.mark.parametrize("ns", [[5, 7, 5], [5, 5]])
    def test_odd_witness_resolves(self, ns):
        cert = partition_dimension_chain(build_odd_chain_cycle(ns))
        assert cert.value == 3

    def test_middle_c4_collision(self):
        cc = build_even_chain_cycle([4, 4, 4])
        with pytest.raises(WitnessNotResolvingError) as exc:
            partition_dimension_chain(cc)
        assert exc.value.details['pair'] == ["v2_2", "v2_4"]
        assert exc.value.details['instance'] == "even:4,4,4"
        assert exc.value.exit_code == 1

    def test_certificate_dict(self, even_small):
        cert = partition_dimension_chain(even_small)
        data = cert.to_dict(even_small.position_label)
        assert data['value'] == 3
        assert data['lower_bound_reason'] == "not_a_path"
        assert data['witness']['k'] == 3


class TestTables:
    """C(C8,C10,C8) 与 C(C5,C7,C5) 在构造划分下的表示"""

    @pytest.mark.parametrize("label, expected", [
        ("v1_1", (0, 5, 3)),
        ("v2_6", (6, 1, 0)),
        ("v3_8", (7, 0, 1)),
        ("v3_5", (10, 3, 0)),
        ("v2_10", (2, 0, 1)),
    ])
    def test_even_rows(self, even_table, even_table_dm, label, expected):
        rows = {row.label: row.coords for row in representation_table(even_table, constructed_partition(even_table),
                                                                      even_table_dm)}
        assert rows[label] == expected

    @pytest.mark.parametrize("label, expected", [
        ("v1_1", (0, 3, 2)),
        ("v1_2", (0, 3, 1)),
        ("v2_4", (4, 2, 0)),
        ("v2_7", (2, 0, 1)),
        ("v3_4", (6, 1, 0)),
        ("v3_5", (5, 0, 1)),
    ])
    def test_odd_rows(self, odd_table, label, expected):
        rows = {row.label: row.coords for row in representation_table(odd_table, constructed_partition(odd_table))}
        assert rows[label] == expected

    def test_even_row_order(self, even_table):
        rows = representation_table(even_table, constructed_partition(even_table))
        assert len(rows) == 24
        labels = [row.label for row in rows]
        assert labels[:9] == ["v1_1", "v1_2", "v1_3", "v1_4", "v1_5", "v1_6", "v1_7", "v1_8", "v2_2"]
        assert "v2_1" not in labels
        assert labels[-1] == "v3_8"
        assert len({row.coords for row in rows}) == 24

    def test_odd_row_count(self, odd_table):
        assert len(representation_table(odd_table, constructed_partition(odd_table))) == 15

    def test_tsv(self, even_table):
        text = table_to_tsv(representation_table(even_table, constructed_partition(even_table)))
        lines = text.splitlines()
        assert lines[0] == "label\tQ1\tQ2\tQ3"
        assert lines[1] == "v1_1\t0\t5\t3"
        assert len(lines) == 25
        assert text.endswith("\n")

    def test_json(self, odd_table):
        data = json.loads(table_to_json(representation_table(odd_table, constructed_partition(odd_table))))
        assert data[0] == {'label': 'v1_1', 'representation': [0, 3, 2]}

    def test_general_graph_uses_ids(self):
        lg = build_cycle(4)
        rows = representation_table(lg, Partition.of([[0], [1], [2, 3]], 4))
        assert [row.label for row in rows] == ["v1", "v2", "v3", "v4"]


class TestPartitionText:

    def test_format(self, odd_table):
        text = format_partition(odd_table.lg, constructed_partition(odd_table))
        lines = text.splitlines()
        assert len(lines) == 3
        assert lines[0].split(",")[0] == "v1_1"

    def test_parse_back(self, even_table):
        p = constructed_partition(even_table)
        assert parse_partition(even_table.lg, format_partition(even_table.lg, p)) == p

    def test_parse_accepts_aliases(self, even_small):
        text = "v1_1,v1_4\nv2_4\n\nv1_2, v2_1 ,v2_2,v2_3\n"
        p = parse_partition(even_small.lg, text)
        assert p.k == 3
        assert p.block_of(even_small.vertex(1, 3)) == 2

    def test_parse_errors(self, even_small):
        with pytest.raises(LabelError):
            parse_partition(even_small.lg, "v9_9\n")
        with pytest.raises(ValidationError):
            parse_partition(even_small.lg, "v1_1,v1_2\nv1_1\n")
