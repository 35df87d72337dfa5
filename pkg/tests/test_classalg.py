import json
import random
from math import factorial

import pytest

from branchcover.classalg import (
    CharTable,
    FactorizationKey,
    all_keys,
    brute_counts_by_nu,
    char_table,
    clear_memory_cache,
    factorization_count_brute,
    factorization_count_char,
)
from branchcover.partitions import enumerate_partitions, partition_count
from branchcover.permcore import class_size


class TestCharTable:
    def test_degree_three_golden(self):
        # classes in reverse lex order: (3), (2,1), (1,1,1)
        table = char_table(3, use_cache=False)
        assert table.index == [(3,), (2, 1), (1, 1, 1)]
        assert table.values == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]

    @pytest.mark.parametrize("d", range(1, 9))
    def test_orthogonality_and_burnside(self, d):
        table = char_table(d, use_cache=False)
        assert table.check_orthogonality()
        assert table.check_burnside()
        assert len(table.index) == partition_count(d)

    def test_trivial_and_sign_rows(self):
        table = char_table(5, use_cache=False)
        assert all(table.char((5,), cls) == 1 for cls in table.index)
        sign = {cls: (-1) ** (5 - len(cls)) for cls in table.index}
        assert all(table.char((1, 1, 1, 1, 1), cls) == sign[cls] for cls in table.index)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            char_table(0, use_cache=False)
        with pytest.raises(ValueError):
            char_table(13, use_cache=False, max_d=12)


class TestDiskCache:
    def test_round_trip(self, tmp_path):
        clear_memory_cache()
        table = char_table(4, cache_dir=tmp_path)
        files = list(tmp_path.glob("chartable_*.json"))
        assert len(files) == 1
        clear_memory_cache()
        again = char_table(4, cache_dir=tmp_path)
        assert again.values == table.values

    def test_corrupt_cache_is_recomputed(self, tmp_path):
        clear_memory_cache()
        char_table(4, cache_dir=tmp_path)
        (path,) = tmp_path.glob("chartable_*.json")
        path.write_text("{not json")
        clear_memory_cache()
        table = char_table(4, cache_dir=tmp_path)
        assert table.check_orthogonality()

    def test_wrong_values_are_rejected(self, tmp_path):
        clear_memory_cache()
        table = char_table(4, cache_dir=tmp_path)
        (path,) = tmp_path.glob("chartable_*.json")
        obj = json.loads(path.read_text())
        obj["values"][1][1] += 1
        path.write_text(json.dumps(obj))
        clear_memory_cache()
        again = char_table(4, cache_dir=tmp_path)
        assert again.values == table.values

    def test_json_schema_guard(self):
        with pytest.raises(ValueError):
            CharTable.from_json(json.dumps({"schema": -1, "d": 2, "values": [[1, 1], [1, -1]]}))


class TestFactorizationCounts:
    def test_golden_degree_three(self):
        # (1 2 3) = tau-first products of two transpositions: 3 ways
        key = FactorizationKey(3, (2, 1), (2, 1), (3,))
        assert factorization_count_brute(key) == 3
        assert factorization_count_char(key, use_cache=False) == 3

    def test_identity_target(self):
        # sigma o tau = id forces tau = sigma^{-1}: |C_mu| if nu == mu
        key = FactorizationKey(4, (3, 1), (3, 1), (1, 1, 1, 1))
        assert factorization_count_brute(key) == class_size((3, 1))
        assert factorization_count_brute(FactorizationKey(4, (3, 1), (2, 2), (1, 1, 1, 1))) == 0

    @pytest.mark.parametrize("d", range(1, 6))
    def test_oracles_agree_exhaustively(self, d):
        table = char_table(d, use_cache=False)
        for key in all_keys(d):
            assert factorization_count_brute(key) == factorization_count_char(key, table=table)

    def test_oracles_agree_sampled_degree_six(self):
        rng = random.Random(30)
        parts = list(enumerate_partitions(6))
        table = char_table(6, use_cache=False)
        for _ in range(60):
            key = FactorizationKey(6, rng.choice(parts), rng.choice(parts), rng.choice(parts))
            assert factorization_count_brute(key) == factorization_count_char(key, table=table)

    def test_reverse_convention_agrees(self):
        rng = random.Random(31)
        parts = list(enumerate_partitions(5))
        for _ in range(40):
            key = FactorizationKey(5, rng.choice(parts), rng.choice(parts), rng.choice(parts))
            assert factorization_count_brute(key) == factorization_count_brute(key, reverse=True)

    def test_sweep_matches_pointwise(self):
        for mu in enumerate_partitions(5):
            for lam in enumerate_partitions(5):
                counts = brute_counts_by_nu(5, mu, lam)
                assert sum(counts.values()) == class_size(mu)
                for nu in enumerate_partitions(5):
                    key = FactorizationKey(5, mu, nu, lam)
                    assert factorization_count_brute(key) == counts.get(nu, 0)

    def test_total_over_targets(self):
        # summing over lam weighted by class size counts all products
        d = 4
        for mu in enumerate_partitions(d):
            for nu in enumerate_partitions(d):
                total = sum(
                    factorization_count_brute(FactorizationKey(d, mu, nu, lam))
                    * class_size(lam)
                    for lam in enumerate_partitions(d)
                )
                assert total == class_size(mu) * class_size(nu)

    def test_rejects_bad_partition(self):
        with pytest.raises(ValueError):
            factorization_count_brute(FactorizationKey(3, (2, 2), (2, 1), (3,)))


def test_dimensions_divide_group_order():
    table = char_table(7, use_cache=False)
    for irrep in table.index:
        assert factorial(7) % table.dimension(irrep) == 0
