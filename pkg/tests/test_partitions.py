import pytest

from permci.partitions import (GTPattern, Partition, dim_gl_irrep,
                               dim_sym_irrep, gt_patterns, partitions_of)


def test_partition_canonicalizes_trailing_zeros():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert hash(Partition((3, 0))) == hash(Partition((3,)))
    assert Partition((2, 1)).n == 3
    assert Partition(()).n == 0


def test_partition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partitions_of_small_cases():
    assert [p.parts for p in partitions_of(2, 2)] == [(2,), (1, 1)]
    assert [p.parts for p in partitions_of(6, 2)] == [(6,), (5, 1), (4, 2), (3, 3)]
    assert len(partitions_of(4, 4)) == 5


def test_partitions_of_order_is_lex_decreasing():
    for n, d in ((7, 3), (9, 2), (6, 4)):
        parts = [p.padded(d) for p in partitions_of(n, d)]
        assert parts == sorted(parts, reverse=True)
        assert len(set(parts)) == len(parts)
        assert all(sum(p) == n for p in parts)


def test_dim_sym_irrep():
    assert dim_sym_irrep((5,)) == 1
    assert dim_sym_irrep((2, 1)) == 2
    assert dim_sym_irrep((5, 4)) == 42
    # column of boxes: sign representation
    assert dim_sym_irrep((1, 1, 1, 1)) == 1


def test_dim_sym_matches_standard_tableau_count():
    # brute-force count of standard Young tableaux for small shapes
    def count_syt(shape):
        # remove the box holding the largest entry: any removable corner
        shape = list(shape)
        if sum(shape) == 0:
            return 1
        total = 0
        for i, row in enumerate(shape):
            if row and (i == len(shape) - 1 or row - 1 >= shape[i + 1]):
                shape[i] -= 1
                total += count_syt(shape)
                shape[i] += 1
        return total

    for parts in [(3, 1), (2, 2), (3, 2, 1), (4, 2), (2, 2, 1)]:
        assert dim_sym_irrep(parts) == count_syt(parts)


def test_dim_gl_irrep():
    for m in range(6):
        assert dim_gl_irrep((m,), 2) == m + 1
    assert dim_gl_irrep((11, 4), 4) == 3640
    assert dim_gl_irrep((12, 4), 4) == 4725
    assert max(dim_gl_irrep(lam, 2) for lam in partitions_of(6, 2)) == 7


def test_dim_gl_rejects_too_many_rows():
    with pytest.raises(ValueError):
        dim_gl_irrep((2, 1, 1), 2)


def test_schur_weyl_dimension_identity():
    for d in (2, 3, 4):
        for n in range(1, 13):
            total = sum(dim_gl_irrep(lam, d) * dim_sym_irrep(lam)
                        for lam in partitions_of(n, d))
            assert total == d ** n


def test_gt_pattern_counts_match_weyl_dimension():
    for d in (2, 3, 4):
        for n in range(1, 11):
            for lam in partitions_of(n, d):
                assert len(gt_patterns(lam, d)) == dim_gl_irrep(lam, d)


def test_gt_pattern_examples():
    assert len(gt_patterns((1,), 2)) == 2
    assert len(gt_patterns((2,), 2)) == 3
    assert len(gt_patterns((1, 1), 2)) == 1


def test_gt_patterns_interlace_and_are_ordered():
    pats = gt_patterns((3, 1), 3)
    flats = [p.flat() for p in pats]
    assert flats == sorted(flats, reverse=True)
    # first pattern is the highest-weight one: rows are prefixes of lambda
    assert pats[0].rows == ((3, 1, 0), (3, 1), (3,))
    with pytest.raises(ValueError):
        GTPattern(((2, 0), (3,)))


def test_gt_weights_sum_to_box_count():
    for lam in partitions_of(5, 3):
        for pat in gt_patterns(lam, 3):
            assert sum(pat.weights()) == 5


def test_weyl_dimension_polynomial_bound():
    for d in (2, 3, 4):
        for n in range(1, 11):
            bound = (n + 1) ** (d * (d - 1) // 2)
            assert all(dim_gl_irrep(lam, d) <= bound
                       for lam in partitions_of(n, d))
