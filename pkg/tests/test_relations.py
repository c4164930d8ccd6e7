import pytest

from poncelet.field import odd_primes
from poncelet.pencil import valid_c
from poncelet.pencil import Pencil
from poncelet.relations import coefficient_lengths, relation_table, verify


class TestRelationTable:
    def test_p5(self):
        table = relation_table(Pencil(5))
        assert set(table.entries.values()) == {3, 6}
        for beta in range(1, 5):
            assert sum(table.get(a, beta) is not None for a in range(1, 5)) == 2

    def test_p7_labels(self):
        table = relation_table(Pencil(7))
        assert set(table.entries.values()) == {4, 8}

    def test_coefficient_lengths(self):
        assert coefficient_lengths(11) == {4: 3, 2: 4, 5: 6, 6: 12, 10: 12}

    @pytest.mark.parametrize("p", odd_primes(19))
    def test_oracle_agrees(self, p, pencils):
        pen = pencils[p]
        table = relation_table(pen)
        assert table == relation_table(pen, oracle=True)
        assert set(table.entries) == {k for k, v in pen.diamond_table.items() if v}
        assert all((p + 1) % n == 0 and n >= 3 for n in table.entries.values())

    @pytest.mark.parametrize("p", [13, 17])
    def test_independent_of_c(self, p):
        cs = [c for c in range(1, p) if valid_c(p, c)][:2]
        a, b = (relation_table(Pencil(p, c), oracle=True) for c in cs)
        assert a.entries == b.entries and a.c != b.c


class TestVerify:
    def test_small_sweep(self):
        report = verify(13, 12)
        assert report.passed
        assert {(c.p, c.n) for c in report.cells} >= {(11, 12), (13, 7), (3, 4)}

    def test_p3_trivial(self):
        report = verify(3, 12)
        assert [(c.p, c.n) for c in report.cells] == [(3, 4)] and report.passed

    def test_cell_contents(self):
        cell = next(c for c in verify(11, 12).cells if (c.p, c.n) == (11, 12))
        assert cell.tracer == cell.polynomial == cell.cayley == [6, 10]
        assert cell.iteration is None
