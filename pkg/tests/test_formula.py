from math import ceil
from fractions import Fraction

import pytest

from ebiset import Instance, compute_params, ebi_set


@pytest.mark.parametrize("m,n,k,j,mx", [
    (1, 1, 0, 0, 2),
    (7, 1, 3, 0, 2),
    (5, 3, 1, 1, 4),
    (9, 3, 2, 1, 6),
    (5, 5, 1, 1, 6),
])
def test_params(m, n, k, j, mx):
    p = compute_params(Instance(m, n))
    assert (p.k, p.j, p.max_index) == (k, j, mx)


def all_instances(limit):
    return [Instance(m, n) for m in range(1, limit + 1, 2) for n in range(1, m + 1, 2)]


def test_params_exact_ceiling():
    for inst in all_instances(199):
        p = compute_params(inst)
        m, n = inst.m, inst.n
        assert p.k == ceil(Fraction(m - 1, n + 1))
        assert p.j == ceil(Fraction(n - 1, m + 1))
        assert (p.k == 0) == (m == n == 1)
        assert p.j == (0 if n == 1 else 1)
        assert p.max_index >= 0 and p.max_index % 2 == 0
        assert p.max_index == (2 if n == 1 else m + n - 2 * (p.k + p.j))


@pytest.mark.parametrize("m,n,values", [
    (5, 1, (2,)),
    (1, 1, (2,)),
    (3, 3, (0, 2)),
    (5, 5, (0, 2, 4, 6)),
])
def test_ebi_set(m, n, values):
    s = ebi_set(Instance(m, n))
    assert s.values == values
    assert s.witnesses == {}


def test_ebi_set_shape():
    for inst in all_instances(61):
        vals = ebi_set(inst).values
        assert set(vals) <= set(range(0, inst.m + inst.n + 1, 2))
        assert max(vals) == compute_params(inst).max_index


def test_index_set_rejects_bad_witness():
    from ebiset import IndexSet, construct_max
    inst = Instance(5, 3)
    with pytest.raises(ValueError):
        IndexSet(inst, (0, 2, 4), {2: construct_max(inst)})
    IndexSet(inst, (0, 2, 4), {4: construct_max(inst)})
