from itertools import product

import pytest

from transvect.diagrams import (
    BipartiteMultigraph,
    components,
    enumerate_graphs,
    self_coeff_graphs,
    weight,
)
from transvect.poly import Rational


def brute_force_count(e, p):
    """Oracle: scan all matrices with entries in {0, 1, 2}."""
    count = 0
    for entries in product(range(3), repeat=e * e):
        rows = [entries[i * e : (i + 1) * e] for i in range(e)]
        if sum(entries) != 2 * p:
            continue
        if any(sum(r) > 2 for r in rows):
            continue
        if any(sum(rows[i][j] for i in range(e)) > 2 for j in range(e)):
            continue
        count += 1
    return count


class TestEnumeration:
    @pytest.mark.parametrize("e", [1, 2, 3])
    def test_completeness_against_brute_force(self, e):
        for p in range(0, e + 1):
            got = list(enumerate_graphs(e, p))
            assert len(got) == brute_force_count(e, p)
            assert len({g.rows for g in got}) == len(got)  # no duplicates

    def test_single_vertex_single_edge_pair(self):
        graphs = list(enumerate_graphs(1, 1))
        assert len(graphs) == 1
        assert graphs[0].rows == ((2,),)

    def test_single_vertex_empty(self):
        graphs = list(enumerate_graphs(1, 0))
        assert len(graphs) == 1
        assert graphs[0].rows == ((0,),)

    def test_two_vertices_one_pair(self):
        # oracle gave 10: four single-entry-2 matrices and C(4,2) = 6 with
        # two entries 1
        graphs = list(enumerate_graphs(2, 1))
        assert len(graphs) == 10
        singles = [g for g in graphs if any(m == 2 for r in g.rows for m in r)]
        assert len(singles) == 4

    def test_deterministic_row_major_order(self):
        flat = [sum(g.rows, ()) for g in enumerate_graphs(2, 1)]
        assert flat == sorted(flat)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            list(enumerate_graphs(2, 3))
        with pytest.raises(ValueError):
            list(enumerate_graphs(0, 0))

    def test_constraint_validation(self):
        with pytest.raises(ValueError):
            BipartiteMultigraph(1, ((3,),))
        with pytest.raises(ValueError):
            BipartiteMultigraph(2, ((2, 1), (0, 0)))


class TestComponents:
    def test_double_edge_is_cycle(self):
        report = components(BipartiteMultigraph(1, ((2,),)))
        assert report.kinds == ("cycle",)
        assert report.cycles == 1

    def test_zero_matrix_isolated_vertices(self):
        report = components(BipartiteMultigraph(2, ((0, 0), (0, 0))))
        assert report.count("chain-LL") == 2
        assert report.count("chain-RR") == 2
        assert report.cycles == 0

    def test_path_with_both_ends_right(self):
        # edges L1-R1 and L1-R2: path R1-L1-R2 plus isolated L2
        report = components(BipartiteMultigraph(2, ((1, 1), (0, 0))))
        assert sorted(report.kinds) == ["chain-LL", "chain-RR"]

    def test_single_edge_is_mixed_chain(self):
        report = components(BipartiteMultigraph(2, ((1, 0), (0, 1))))
        assert report.kinds == ("chain-LR", "chain-LR")

    def test_long_cycle(self):
        # L1-R1, L1-R2, L2-R1, L2-R2: one 4-cycle
        report = components(BipartiteMultigraph(2, ((1, 1), (1, 1))))
        assert report.kinds == ("cycle",)
        assert report.edge_counts == (4,)


class TestWeight:
    def test_double_edge(self):
        assert weight(BipartiteMultigraph(1, ((2,),))) == 4

    def test_empty_single_vertex_pair(self):
        assert weight(BipartiteMultigraph(1, ((0,),))) == 1

    def test_single_entry_two_in_larger_matrix(self):
        # rows sums (2, 0), column sums (2, 0): 2! * 16 / (2! * 2! * 2!) = 4
        assert weight(BipartiteMultigraph(2, ((2, 0), (0, 0)))) == 4


class TestGraphSum:
    def test_trivial_p_zero(self):
        assert self_coeff_graphs(1, 0) == 1
        assert self_coeff_graphs(4, 0) == 1

    def test_single_pair(self):
        assert self_coeff_graphs(1, 1) == 2

    def test_two_vertices_one_pair(self):
        # 4 cycle graphs contribute 2 each, 4 admissible two-edge graphs
        # contribute 4 each, the 2 mixed-chain graphs are excluded
        assert self_coeff_graphs(2, 1) == 24

    def test_positivity_on_grid(self):
        for e in range(1, 6):
            for p in range(0, e + 1):
                assert self_coeff_graphs(e, p) > 0

    def test_term_consistency(self):
        # each admissible summand equals weight * 2^(C - 2p)
        e, p = 3, 2
        total = Rational(0)
        for g in enumerate_graphs(e, p):
            report = components(g)
            if report.count("chain-LR"):
                continue
            total += weight(g) * Rational(2 ** report.cycles, 4**p)
        assert total == self_coeff_graphs(e, p)

    def test_mixed_chains_only_skipped_in_sum(self):
        # excluded graphs exist and are exactly those with a chain-LR part
        excluded = [
            g for g in enumerate_graphs(2, 1) if components(g).count("chain-LR")
        ]
        assert len(excluded) == 2

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            self_coeff_graphs(2, 3)

    def test_serialization(self):
        g = BipartiteMultigraph(2, ((1, 1), (0, 0)))
        assert g.to_record() == {"e": 2, "p": 1, "rows": [[1, 1], [0, 0]]}
