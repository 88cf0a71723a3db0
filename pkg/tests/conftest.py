from itertools import combinations, permutations

import pytest

from fibcat.patterns import catalog


def naive_contains(perm, pat):
    """Every index subset of the right size, standardized and compared."""
    k = len(pat)
    for idx in combinations(range(len(perm)), k):
        sub = [perm[i] for i in idx]
        if all((sub[a] < sub[b]) == (pat[a] < pat[b]) for a in range(k) for b in range(a + 1, k)):
            return True
    return False


def all_perms(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]


def catalog_instances(k_max=5):
    return [(e, k) for e in catalog() for k in e.ks(k_max)]


def instance_id(param):
    e, k = param
    return e.id if k is None else f"{e.id}-{k}"


@pytest.fixture(params=catalog_instances(), ids=instance_id)
def instance(request):
    e, k = request.param
    return e, e.build(k)
