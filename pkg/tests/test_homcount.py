"""Homomorphism counting into symmetric groups: totals, classes, kernels."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borrays.diagrams import builtin, concat, forget
from borrays.errors import BudgetExceededError, IntegrityError
from borrays.homcount import (
    HomClassCount,
    Permutation,
    conjugacy_classes,
    count_classes_burnside,
    count_classes_enumerate,
    count_total,
    enumerate_homs,
    kernel_name,
)
from borrays.presentations import FinitePresentation, presentation

from math import factorial


def classes(diagram, n, method=count_classes_burnside, **kw):
    return method(presentation(diagram), n, **kw).class_count


# ---------------------------------------------------------------------------
# Known values for the builtin blocks

EPS3_CLASSES = [1, 4, 11, 43, 161]   # Sym(1)..Sym(5); free of rank 2
A_CLASSES = [1, 4, 11, 47, 193]      # Sym(1)..Sym(5)


def test_eps3_class_counts():
    d = builtin("eps3")
    for n, want in enumerate(EPS3_CLASSES, start=1):
        assert classes(d, n) == want


def test_a_class_counts():
    d = builtin("A")
    for n, want in enumerate(A_CLASSES, start=1):
        assert classes(d, n) == want


def test_a_separates_from_eps3_at_sym4():
    assert classes(builtin("A"), 4) == 47
    assert classes(builtin("eps3"), 4) == 43


def test_all_four_blocks_agree():
    for n in (2, 3, 4, 5):
        want = A_CLASSES[n - 1]
        for name in ("A", "Ab", "As", "Abs"):
            assert classes(builtin(name), n) == want, (name, n)


def test_dirac_matches_eps3():
    for n in (1, 2, 3, 4):
        assert classes(builtin("dirac"), n) == EPS3_CLASSES[n - 1]


def test_forgetting_a_strand_gives_trivial_two_tangle():
    # Dropping any strand of A leaves a complement whose group is free of
    # rank 1, so class counts are the partition numbers p(n).
    a = builtin("A")
    for k in (1, 2, 3):
        d = forget(a, k)
        for n, want in enumerate([1, 2, 3, 5, 7], start=1):
            assert classes(d, n) == want


# ---------------------------------------------------------------------------
# Totals and conjugacy classes

def test_count_total_free_groups():
    for rank in (0, 1, 2):
        gens = tuple(f"g{i}" for i in range(rank))
        p = FinitePresentation(gens, ())
        for n in (1, 2, 3, 4):
            assert count_total(p, n) == factorial(n) ** rank


def test_conjugacy_classes_partition_group():
    for n in (1, 2, 3, 4, 5, 6):
        cls = conjugacy_classes(n)
        assert sum(size for _, size in cls) == factorial(n)
        reps = [rep for rep, _ in cls]
        assert len(set(reps)) == len(reps)
        for rep in reps:
            assert sorted(rep) == list(range(n))


def test_enumerate_homs_deterministic_and_valid():
    p = presentation(builtin("eps3"))
    homs = list(enumerate_homs(p, 3))
    assert len(homs) == count_total(p, 3) == 36
    assert homs == list(enumerate_homs(p, 3))
    for hom in homs:
        assert set(hom) == set(p.generators)
        # relator x1 y1 z1 must map to the identity
        x, y, z = (hom[g].zero_based() for g in ("x1", "y1", "z1"))
        composite = tuple(x[y[z[i]]] for i in range(3))
        assert composite == (0, 1, 2)


# ---------------------------------------------------------------------------
# Method agreement, determinism, and failure modes

def test_enumerate_and_burnside_agree():
    for name in ("A", "eps3", "dirac"):
        d = builtin(name)
        for n in (2, 3, 4):
            e = count_classes_enumerate(presentation(d), n)
            b = count_classes_burnside(presentation(d), n)
            assert e.class_count == b.class_count
            assert e.total_homs == b.total_homs
            assert (e.method, b.method) == ("enumerate", "burnside")


def test_threads_do_not_change_results():
    p = presentation(builtin("A"))
    single = count_classes_burnside(p, 4, threads=1)
    multi = count_classes_burnside(p, 4, threads=3)
    assert (single.total_homs, single.class_count) == (
        multi.total_homs, multi.class_count)
    assert list(enumerate_homs(p, 3)) == list(enumerate_homs(p, 3))


def test_budget_exceeded():
    p = presentation(concat(builtin("A"), builtin("A")))
    with pytest.raises(BudgetExceededError):
        count_classes_burnside(p, 4, budget=5)


def test_hom_class_count_bounds():
    # at most total_homs classes, at least total_homs / n!
    HomClassCount(3, 36, 11, "enumerate")
    with pytest.raises(IntegrityError):
        HomClassCount(3, 36, 37, "enumerate")
    with pytest.raises(IntegrityError):
        HomClassCount(3, 36, 5, "burnside")


def test_permutation_validation():
    Permutation((2, 1, 3))
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    assert Permutation.from_zero_based((1, 0, 2)).images == (2, 1, 3)


def test_kernel_name_reports_a_kernel():
    assert kernel_name() in ("borrays._homsearch", "borrays._homsearch_py")


# ---------------------------------------------------------------------------
# Randomized agreement on small presentations

_rand_words = st.lists(
    st.tuples(st.sampled_from(["a", "b"]), st.sampled_from([1, -1])),
    min_size=0, max_size=6,
).map(tuple)


@settings(max_examples=200, deadline=None)
@given(st.lists(_rand_words, min_size=0, max_size=3))
def test_random_presentations_methods_agree(relators):
    p = FinitePresentation(("a", "b"), tuple(relators))
    for n in (2, 3):
        e = count_classes_enumerate(p, n)
        b = count_classes_burnside(p, n)
        assert e.class_count == b.class_count
        assert e.total_homs == b.total_homs
