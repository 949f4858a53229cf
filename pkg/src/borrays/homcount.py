"""Counting homomorphisms into Sym(n), totals and conjugation classes.

Two homomorphisms are equivalent when a single permutation conjugates every
generator image of one onto the other.  Class counts are computed by two
independent routes: explicit orbit partitioning of the enumerated
homomorphism set, and a Burnside average over conjugacy-class
representatives (counting homomorphisms into centralizers).

The backtracking search runs on a compiled kernel when available
(:mod:`borrays._homsearch`, built with Cython) and otherwise on the pure
Python twin :mod:`borrays._homsearch_py`.  Set ``BORRAYS_PURE=1`` to force
the fallback.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .errors import IntegrityError
from .presentations import FinitePresentation

if os.environ.get("BORRAYS_PURE"):
    from . import _homsearch_py as _kernel
else:
    try:
        from . import _homsearch as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _homsearch_py as _kernel

__all__ = [
    "Permutation",
    "HomClassCount",
    "DEFAULT_BUDGET",
    "kernel_name",
    "enumerate_homs",
    "count_total",
    "count_classes_enumerate",
    "count_classes_burnside",
    "conjugacy_classes",
]

DEFAULT_BUDGET = 10**10


def kernel_name() -> str:
    """Module name of the active search kernel."""
    return _kernel.__name__


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} given by its image array (1-based)."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{n}")

    @classmethod
    def from_zero_based(cls, p):
        return cls(tuple(x + 1 for x in p))

    def zero_based(self):
        return tuple(x - 1 for x in self.images)


@dataclass(frozen=True)
class HomClassCount:
    n: int
    total_homs: int
    class_count: int
    method: str  # "enumerate" or "burnside"

    def __post_init__(self):
        if self.total_homs:
            lo = -(-self.total_homs // factorial(self.n))
            if not lo <= self.class_count <= self.total_homs:
                raise IntegrityError(
                    f"class count {self.class_count} outside "
                    f"[{lo}, {self.total_homs}] for n={self.n}"
                )


def _compiled(p: FinitePresentation):
    """Map generator symbols to indices and relators to letter lists."""
    gens = list(p.generators)
    index = {g: i for i, g in enumerate(gens)}
    relators = tuple(tuple((index[g], e) for g, e in rel) for rel in p.relators)
    order = _assignment_order(len(gens), relators, gens)
    return gens, index, relators, order


def _assignment_order(num_gens, relators, names):
    """Deterministic search order chosen by simulating propagation.

    The kernel solves a relator once it has a single unassigned letter
    occurrence and checks it once it has none.  Greedily pick the next
    generator whose assignment (plus the resulting cascade of solved
    generators) yields the most checked relators, then the longest
    cascade; remaining ties fall to occurrence count and name.
    """
    occ = [[] for _ in range(num_gens)]
    for ri, rel in enumerate(relators):
        for g, _ in rel:
            occ[g].append(ri)
    rel_gens = [tuple(g for g, _ in rel) for rel in relators]

    def simulate(g, assigned, counts):
        assigned = assigned.copy()
        counts = counts.copy()
        cascade, checks = 0, 0
        stack = [g]
        while stack:
            h = stack.pop()
            assigned[h] = True
            for ri in occ[h]:
                counts[ri] -= 1
                if counts[ri] == 0:
                    checks += 1
                elif counts[ri] == 1:
                    # The count may be stale if the open generator was just
                    # solved elsewhere but not yet processed off the stack.
                    h2 = next((x for x in rel_gens[ri] if not assigned[x]), None)
                    if h2 is not None:
                        assigned[h2] = True
                        cascade += 1
                        stack.append(h2)
        return checks, cascade, assigned, counts

    assigned = [False] * num_gens
    counts = [len(rel) for rel in relators]
    order = []
    while not all(assigned):
        best = None
        for g in range(num_gens):
            if assigned[g]:
                continue
            checks, cascade, a2, c2 = simulate(g, assigned, counts)
            key = (-checks, -cascade, -len(occ[g]), names[g])
            if best is None or key < best[0]:
                best = (key, g, a2, c2)
        order.append(best[1])
        assigned, counts = best[2], best[3]
    return order


def _sym(n):
    return sorted(permutations(range(n)))


def _search(n, p, candidates, fixed, budget, collect, threads=1):
    gens, _, relators, order = _compiled(p)
    if not gens:
        ok = all(not rel for rel in relators)
        return (1 if ok else 0), ([()] if (ok and collect) else ([] if collect else None)), 0
    if threads <= 1 or fixed:
        return _kernel.search_homs(
            n, len(gens), relators, order, candidates, fixed, budget, collect
        )
    # Deterministic fan-out: partition on the image of the first generator
    # in assignment order; combine in candidate order.
    g0 = order[0]

    def job(perm):
        return _kernel.search_homs(
            n, len(gens), relators, order, candidates, [(g0, perm)], budget, collect
        )

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(job, candidates))
    count = sum(r[0] for r in results)
    nodes = sum(r[2] for r in results) + len(candidates)
    homs = None
    if collect:
        homs = []
        for r in results:
            homs.extend(r[1])
    return count, homs, nodes


def enumerate_homs(p: FinitePresentation, n: int, budget: int = DEFAULT_BUDGET):
    """Yield every homomorphism into Sym(n) once, in a deterministic order.

    Each homomorphism is a dict mapping generator symbol to Permutation.
    """
    _, homs, _ = _search(n, p, _sym(n), [], budget, collect=True)
    for hom in homs:
        yield {
            g: Permutation.from_zero_based(perm)
            for g, perm in zip(p.generators, hom)
        }


def conjugacy_classes(n: int):
    """(representative, class size) per conjugacy class of Sym(n).

    Representatives are 0-based image tuples with cycles laid out in
    descending length; classes are ordered by partition, largest part first.
    """
    def parts(total, most):
        if total == 0:
            yield ()
            return
        for first in range(min(total, most), 0, -1):
            for rest in parts(total - first, first):
                yield (first,) + rest

    out = []
    for partition in parts(n, n):
        perm = list(range(n))
        start = 0
        for length in partition:
            for i in range(length):
                perm[start + i] = start + (i + 1) % length
            start += length
        size = factorial(n)
        mult = {}
        for length in partition:
            mult[length] = mult.get(length, 0) + 1
        for length, m in mult.items():
            size //= length**m * factorial(m)
        out.append((tuple(perm), size))
    return out


def count_total(p: FinitePresentation, n: int, budget: int = DEFAULT_BUDGET,
                threads: int = 1) -> int:
    """Total homomorphisms into Sym(n).

    Splits on the conjugacy class of the first assigned generator: the
    number of homomorphisms sending it to a fixed element depends only on
    the element's class.
    """
    if not p.generators:
        return _search(n, p, _sym(n), [], budget, False)[0]
    _, _, _, order = _compiled(p)
    g0 = order[0]
    sym = _sym(n)
    total = 0
    for rep, size in conjugacy_classes(n):
        cnt, _, _ = _search(n, p, sym, [(g0, rep)], budget, False, threads)
        total += size * cnt
    return total


def _orbit_count(homs, n):
    """Orbits of the hom set under simultaneous conjugation.

    Closure is generated by the adjacent transpositions (i, i+1).
    """
    transpositions = []
    for i in range(n - 1):
        t = list(range(n))
        t[i], t[i + 1] = t[i + 1], t[i]
        transpositions.append(tuple(t))
    hom_set = set(homs)
    seen = set()
    orbits = 0
    for hom in homs:
        if hom in seen:
            continue
        orbits += 1
        stack = [hom]
        seen.add(hom)
        while stack:
            cur = stack.pop()
            for t in transpositions:
                conj = tuple(tuple(t[perm[t[i]]] for i in range(n)) for perm in cur)
                if conj not in seen:
                    if conj not in hom_set:
                        raise IntegrityError("hom set is not conjugation-closed")
                    seen.add(conj)
                    stack.append(conj)
    return orbits


def count_classes_enumerate(p: FinitePresentation, n: int,
                            budget: int = DEFAULT_BUDGET,
                            threads: int = 1) -> HomClassCount:
    """Class count by full enumeration and explicit orbit partitioning."""
    count, homs, _ = _search(n, p, _sym(n), [], budget, collect=True, threads=threads)
    return HomClassCount(n, count, _orbit_count(homs, n), "enumerate")


def count_classes_burnside(p: FinitePresentation, n: int,
                           budget: int = DEFAULT_BUDGET,
                           threads: int = 1) -> HomClassCount:
    """Class count by Burnside average over conjugacy-class representatives.

    A homomorphism is fixed by conjugation with pi iff every generator
    image commutes with pi, i.e. iff it maps into the centralizer of pi.
    """
    sym = _sym(n)
    total = None
    acc = 0
    for rep, size in conjugacy_classes(n):
        if rep == tuple(range(n)):
            fixed_count = count_total(p, n, budget, threads)
            total = fixed_count
        else:
            centralizer = [q for q in sym if _commutes(q, rep, n)]
            fixed_count, _, _ = _search(n, p, centralizer, [], budget, False)
        acc += size * fixed_count
    if acc % factorial(n):
        raise IntegrityError("Burnside sum is not divisible by n!")
    return HomClassCount(n, total, acc // factorial(n), "burnside")


def _commutes(q, rep, n):
    return all(q[rep[i]] == rep[q[i]] for i in range(n))
