"""Shared test utilities: hypothesis strategies and oracles."""

from math import lcm

from hypothesis import strategies as st

from borrays import diagrams
from borrays.labels import ALL_LABELS
from borrays.presentations import cyclic_reduce, invert_word
from borrays.sequences import EventuallyPeriodicSeq, value_at

# ---------------------------------------------------------------------------
# Strategies

labels = st.sampled_from(ALL_LABELS)


def sequences(max_pre=6, max_per=6):
    return st.builds(
        EventuallyPeriodicSeq,
        st.lists(labels, min_size=0, max_size=max_pre).map(tuple),
        st.lists(labels, min_size=1, max_size=max_per).map(tuple),
    )


@st.composite
def braid_diagrams(draw, max_strands=4, max_moves=6):
    n = draw(st.integers(2, max_strands))
    moves = draw(
        st.lists(
            st.tuples(
                st.integers(1, n - 1),
                st.sampled_from(["l", "r"]),
                st.sampled_from([1, -1]),
            ),
            max_size=max_moves,
        )
    )
    return diagrams.from_braid(n, moves)


@st.composite
def geometric_braids(draw, max_strands=4, max_moves=6):
    """Braid diagrams whose crossing signs match the move geometry.

    With all strands oriented outward, a crossing where the over strand
    moves toward larger positions is positive; toward smaller, negative.
    Diagrams built this way are planar, so the outer vertex relation is
    a consequence of the other relations.
    """
    n = draw(st.integers(2, max_strands))
    moves = []
    for _ in range(draw(st.integers(0, max_moves))):
        j = draw(st.integers(1, n - 1))
        direction = draw(st.sampled_from(["l", "r"]))
        moves.append((j, direction, 1 if direction == "r" else -1))
    return diagrams.from_braid(n, moves)


@st.composite
def geometric_diagrams(draw):
    """Planar diagrams: geometric braids, builtins, or concatenations."""
    kind = draw(st.integers(0, 2))
    if kind == 0:
        return draw(geometric_braids())
    names = st.sampled_from(["A", "Ab", "As", "Abs", "eps3", "dirac"])
    d = diagrams.builtin(draw(names))
    if kind == 2:
        d = diagrams.concat(d, diagrams.builtin(draw(names)))
    return d


@st.composite
def block_diagrams(draw):
    """Braid diagrams, builtin blocks, or two-block concatenations."""
    kind = draw(st.integers(0, 2))
    if kind == 0:
        return draw(braid_diagrams())
    names = st.sampled_from(["A", "Ab", "As", "Abs", "eps3", "dirac"])
    d = diagrams.builtin(draw(names))
    if kind == 2:
        d = diagrams.concat(d, diagrams.builtin(draw(names)))
    return d


# ---------------------------------------------------------------------------
# Oracles

def tails_equal_oracle(s, t):
    """Brute-force search over shifts, bounded as in the decision procedure."""
    ps, pt = len(s.period), len(t.period)
    window = 3 * lcm(ps, pt) + 1
    bound = len(s.preperiod) + len(t.preperiod) + 2 * lcm(ps, pt)
    for n in range(-bound, bound + 1):
        start = max(1, 1 - n, len(s.preperiod) + 1, len(t.preperiod) + 1 - n)
        if all(
            value_at(s, i) == value_at(t, i + n)
            for i in range(start, start + window)
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# Presentation comparison up to generator renaming

def _canonical_relator(rel):
    rel = cyclic_reduce(rel)
    variants = []
    for word in (rel, invert_word(rel)):
        for r in range(max(1, len(word))):
            variants.append(word[r:] + word[:r])
    return min(variants) if variants else ()


def canonical_relator_set(p):
    return frozenset(_canonical_relator(r) for r in p.relators)


def isomorphic_by_renaming(p1, p2):
    """Is there a generator bijection carrying p1's relator set onto p2's?

    Relators are compared as sets, each up to rotation and inversion.
    Backtracks over generators grouped by occurrence-count signature.
    """
    if len(p1.generators) != len(p2.generators):
        return False

    def signature(p):
        counts = {g: 0 for g in p.generators}
        lengths = {g: [] for g in p.generators}
        for rel in p.relators:
            for g, _ in rel:
                counts[g] += 1
                lengths[g].append(len(rel))
        return {g: (counts[g], tuple(sorted(lengths[g]))) for g in p.generators}

    sig1, sig2 = signature(p1), signature(p2)
    gens1 = sorted(p1.generators, key=lambda g: (sig1[g], g))
    target = canonical_relator_set(p2)

    def rename(mapping):
        return frozenset(
            _canonical_relator(tuple((mapping[g], e) for g, e in rel))
            for rel in p1.relators
        )

    def backtrack(i, mapping, used):
        if i == len(gens1):
            return rename(mapping) == target
        g = gens1[i]
        for h in p2.generators:
            if h in used or sig2[h] != sig1[g]:
                continue
            mapping[g] = h
            used.add(h)
            if backtrack(i + 1, mapping, used):
                return True
            del mapping[g]
            used.discard(h)
        return False

    return backtrack(0, {}, set())
