"""Parity between the compiled search kernel and its pure-Python twin."""

import itertools
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borrays import _homsearch_py

compiled = pytest.importorskip(
    "borrays._homsearch", reason="compiled kernel not built"
)


def sym(n):
    return sorted(itertools.permutations(range(n)))


def run_both(n, num_gens, relators, order=None, candidates=None, fixed=(),
             budget=10**9, collect=True):
    order = order or list(range(num_gens))
    candidates = candidates if candidates is not None else sym(n)
    args = (n, num_gens, relators, order, candidates, list(fixed), budget,
            collect)
    return _homsearch_py.search_homs(*args), compiled.search_homs(*args)


_letters = st.tuples(st.integers(0, 2), st.sampled_from([1, -1]))
_relators = st.lists(
    st.lists(_letters, min_size=0, max_size=5).map(tuple),
    min_size=0, max_size=4,
).map(tuple)


@settings(max_examples=250, deadline=None)
@given(_relators, st.integers(2, 4))
def test_kernels_agree_on_random_presentations(relators, n):
    pure, fast = run_both(n, 3, relators)
    assert pure == fast  # count, hom list, and node count all match


@settings(max_examples=200, deadline=None)
@given(_relators, st.integers(2, 3), st.integers(0, 5))
def test_kernels_agree_with_fixed_assignments(relators, n, seed):
    perms = sym(n)
    fixed = [(0, perms[seed % len(perms)])]
    pure, fast = run_both(n, 3, relators, fixed=fixed)
    assert pure == fast


@settings(max_examples=200, deadline=None)
@given(_relators, st.integers(2, 3))
def test_kernels_agree_on_restricted_candidates(relators, n):
    # restrict to the cyclic subgroup generated by an n-cycle
    cyc = tuple((i + 1) % n for i in range(n))
    group = {tuple(range(n))}
    cur = cyc
    while cur not in group:
        group.add(cur)
        cur = tuple(cyc[c] for c in cur)
    pure, fast = run_both(n, 3, relators, candidates=sorted(group))
    assert pure == fast


def test_counts_without_collection_match_collection():
    relators = (((0, 1), (1, 1), (2, 1)),)
    (c1, homs, n1), (c2, homs2, n2) = run_both(3, 3, relators, collect=True)
    assert c1 == c2 == len(homs) == len(homs2) == 36
    (c3, none1, n3), (c4, none2, n4) = run_both(3, 3, relators, collect=False)
    assert (c3, c4) == (c1, c2)
    assert none1 is None and none2 is None
    assert (n3, n4) == (n1, n2)


def test_budget_raised_identically():
    relators = (((0, 1), (1, 1), (2, 1)),)
    for kernel in (_homsearch_py, compiled):
        with pytest.raises(Exception) as exc:
            kernel.search_homs(4, 3, relators, [0, 1, 2], sym(4), [], 3, False)
        assert type(exc.value).__name__ == "BudgetExceededError"


def test_free_group_counts():
    for n in (2, 3):
        pure, fast = run_both(n, 2, (), order=[0, 1])
        size = len(sym(n)) ** 2
        assert pure[0] == fast[0] == size


def test_env_var_selects_pure_kernel():
    code = "import borrays.homcount as h; print(h.kernel_name())"
    env = dict(os.environ, BORRAYS_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "borrays._homsearch_py"
    env.pop("BORRAYS_PURE")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "borrays._homsearch"
