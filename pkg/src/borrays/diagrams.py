"""Annular strand diagrams for tangle blocks in a thickened 2-sphere.

A diagram records, per strand, the ordered list of signed-crossing passages
met while traversing the strand from the inner boundary sphere to the outer
one, together with the cyclic order of strand endpoints on each boundary.
The model is purely combinatorial: no planar embedding is stored or checked
beyond the structural invariants enforced by :func:`validate`.

Crossing sign convention: sign +1 means the under-strand crosses
right-to-left beneath the over-strand when looking along the over-strand's
orientation.  This is the convention under which the builtin ``A`` diagram
yields its standard presentation (see :mod:`borrays.presentations`), with
the under-arc conjugated as ``out = over^-1 * in * over`` at a +1 crossing.
"""

import json
from dataclasses import dataclass, field
from typing import NamedTuple

__all__ = [
    "Passage",
    "Crossing",
    "Violation",
    "AnnularDiagram",
    "builtin",
    "BUILTIN_NAMES",
    "bar",
    "star",
    "concat",
    "forget",
    "validate",
    "normalize",
    "from_braid",
    "to_json",
    "from_json",
]

OVER = "o"
UNDER = "u"


class Passage(NamedTuple):
    crossing: int
    role: str  # "o" or "u"


class Crossing(NamedTuple):
    id: int
    sign: int  # +1 or -1


class Violation(NamedTuple):
    kind: str
    message: str


@dataclass(frozen=True)
class AnnularDiagram:
    """Immutable combinatorial model of an n-strand block diagram.

    strands[i] lists the passages of strand i+1, inner boundary to outer.
    ``signs`` maps crossing id to +-1.  ``inner_order``/``outer_order`` give
    the counterclockwise cyclic order of strand indices (1-based) on the two
    boundary spheres.
    """

    n_strands: int
    strands: tuple
    signs: dict = field(hash=False)
    inner_order: tuple
    outer_order: tuple

    @property
    def crossings(self):
        return frozenset(Crossing(c, s) for c, s in self.signs.items())

    @property
    def crossing_count(self) -> int:
        return len(self.signs)

    def strand(self, k: int):
        """Passages of strand k (1-based)."""
        return self.strands[k - 1]


def _mk(n_strands, strands, signs, inner_order, outer_order) -> AnnularDiagram:
    return AnnularDiagram(
        n_strands=n_strands,
        strands=tuple(tuple(Passage(*p) for p in s) for s in strands),
        signs=dict(signs),
        inner_order=tuple(inner_order),
        outer_order=tuple(outer_order),
    )


def validate(d: AnnularDiagram):
    """Return a list of Violation records; empty iff the diagram is valid."""
    out = []
    if d.n_strands < 1:
        out.append(Violation("bad-strand-count", f"n_strands={d.n_strands} < 1"))
    if len(d.strands) != d.n_strands:
        out.append(
            Violation(
                "bad-strand-count",
                f"{len(d.strands)} passage lists for n_strands={d.n_strands}",
            )
        )
    for order, side in ((d.inner_order, "inner"), (d.outer_order, "outer")):
        if sorted(order) != list(range(1, d.n_strands + 1)):
            kind = (
                "duplicate-boundary"
                if len(set(order)) != len(order)
                else "bad-boundary"
            )
            out.append(
                Violation(kind, f"{side}_order {list(order)} is not a permutation")
            )
    seen = {}  # crossing id -> list of roles
    for si, strand in enumerate(d.strands, start=1):
        for p in strand:
            if p.role not in (OVER, UNDER):
                out.append(
                    Violation("bad-role", f"strand {si}: role {p.role!r}")
                )
            if p.crossing not in d.signs:
                out.append(
                    Violation(
                        "unknown-crossing",
                        f"strand {si} references crossing {p.crossing} with no sign",
                    )
                )
            seen.setdefault(p.crossing, []).append(p.role)
    for c, sign in d.signs.items():
        if sign not in (1, -1):
            out.append(Violation("bad-sign", f"crossing {c} has sign {sign}"))
        roles = sorted(seen.get(c, []))
        if roles != [OVER, UNDER]:
            kind = "dangling-crossing" if len(roles) != 2 else "role-mismatch"
            out.append(
                Violation(kind, f"crossing {c} has passage roles {roles}")
            )
    for c in seen:
        if c not in d.signs:
            pass  # already reported as unknown-crossing
    return out


def _require_valid(d: AnnularDiagram):
    violations = validate(d)
    if violations:
        raise ValueError(
            "invalid diagram: " + "; ".join(v.message for v in violations)
        )


def bar(d: AnnularDiagram) -> AnnularDiagram:
    """Reflection across the projection plane: switch every crossing."""
    return _mk(
        d.n_strands,
        [[(p.crossing, UNDER if p.role == OVER else OVER) for p in s] for s in d.strands],
        {c: -s for c, s in d.signs.items()},
        d.inner_order,
        d.outer_order,
    )


def star(d: AnnularDiagram) -> AnnularDiagram:
    """Radial flip (inversion across the intermediate sphere).

    Boundary orders swap, each strand is traversed in the opposite radial
    direction, the z-order of branches at each crossing is unchanged, and
    the planar orientation reversal negates every crossing sign.
    """
    return _mk(
        d.n_strands,
        [list(reversed(s)) for s in d.strands],
        {c: -s for c, s in d.signs.items()},
        d.outer_order,
        d.inner_order,
    )


def concat(d1: AnnularDiagram, d2: AnnularDiagram) -> AnnularDiagram:
    """Glue the outer boundary of d1 to the inner boundary of d2."""
    if d1.n_strands != d2.n_strands:
        raise ValueError(
            f"cannot concatenate: {d1.n_strands} strands vs {d2.n_strands}"
        )
    if d1.outer_order != d2.inner_order:
        raise ValueError(
            "cannot concatenate: outer boundary order "
            f"{list(d1.outer_order)} does not match inner boundary order "
            f"{list(d2.inner_order)}"
        )
    shift = (max(d1.signs) if d1.signs else 0) + 1 - (min(d2.signs) if d2.signs else 0)
    strands = [
        [(p.crossing, p.role) for p in s1]
        + [(p.crossing + shift, p.role) for p in s2]
        for s1, s2 in zip(d1.strands, d2.strands)
    ]
    signs = dict(d1.signs)
    signs.update({c + shift: s for c, s in d2.signs.items()})
    return _mk(d1.n_strands, strands, signs, d1.inner_order, d2.outer_order)


def forget(d: AnnularDiagram, k: int) -> AnnularDiagram:
    """Remove strand k (1-based) and every crossing it participates in."""
    if not 1 <= k <= d.n_strands:
        raise ValueError(f"strand index {k} out of range 1..{d.n_strands}")
    if d.n_strands < 2:
        raise ValueError("cannot forget the only strand")
    dead = {p.crossing for p in d.strands[k - 1]}
    renum = {s: (s if s < k else s - 1) for s in range(1, d.n_strands + 1) if s != k}
    strands = [
        [(p.crossing, p.role) for p in s if p.crossing not in dead]
        for i, s in enumerate(d.strands, start=1)
        if i != k
    ]
    signs = {c: s for c, s in d.signs.items() if c not in dead}
    inner = [renum[s] for s in d.inner_order if s != k]
    outer = [renum[s] for s in d.outer_order if s != k]
    return _mk(d.n_strands - 1, strands, signs, inner, outer)


def normalize(d: AnnularDiagram) -> AnnularDiagram:
    """Relabel crossing ids by first appearance along strand 1, 2, ...

    Used for structural equality tests; two diagrams are equal up to
    crossing renaming iff their normalizations are equal.
    """
    relabel = {}
    for s in d.strands:
        for p in s:
            if p.crossing not in relabel:
                relabel[p.crossing] = len(relabel) + 1
    return _mk(
        d.n_strands,
        [[(relabel[p.crossing], p.role) for p in s] for s in d.strands],
        {relabel[c]: s for c, s in d.signs.items()},
        d.inner_order,
        d.outer_order,
    )


def from_braid(n_strands: int, moves) -> AnnularDiagram:
    """Build a diagram from a braid-like move list.

    Each move is ``(j, over_side, sign)``: the strands currently at angular
    positions j and j+1 (1-based) cross, with the strand on side
    ``over_side`` ("l" or "r") passing over, then swap positions.  Strand i
    starts at inner position i.
    """
    at = list(range(1, n_strands + 1))  # position -> strand
    strands = [[] for _ in range(n_strands)]
    signs = {}
    for cid, (j, over_side, sign) in enumerate(moves, start=1):
        if not 1 <= j < n_strands:
            raise ValueError(f"braid position {j} out of range")
        left, right = at[j - 1], at[j]
        over, under = (left, right) if over_side == "l" else (right, left)
        strands[over - 1].append((cid, OVER))
        strands[under - 1].append((cid, UNDER))
        signs[cid] = sign
        at[j - 1], at[j] = right, left
    inner = list(range(1, n_strands + 1))
    return _mk(n_strands, strands, signs, inner, at)


# Builtin A: six crossings wired so the Wirtinger presentation is the
# standard one for this block (three strands x, y, z with arcs x1..x3 etc.,
# crossing relations y2 x2 = x1 y2, x2 y3 = y2 x2, x2 z2 = z1 x2,
# z2 x3 = x2 z2, z2 y2 = y1 z2, y2 z3 = z2 y2).
# Borromean block: six positive crossings; each strand dips under the
# other two strands' middle arcs.  The order of the two over-passages on
# strand 2's middle arc is reversed relative to strands 1 and 3; that
# ordering is what makes the wiring planar-realizable (its mirror then
# has the same homomorphism counts as the block itself).
_A_STRANDS = (
    ((1, UNDER), (2, OVER), (3, OVER), (4, UNDER)),  # x
    ((5, UNDER), (6, OVER), (1, OVER), (2, UNDER)),  # y
    ((3, UNDER), (4, OVER), (5, OVER), (6, UNDER)),  # z
)


def _builtin_a() -> AnnularDiagram:
    return _mk(3, _A_STRANDS, {c: 1 for c in range(1, 7)}, (1, 2, 3), (1, 2, 3))


def _builtin_eps(n: int) -> AnnularDiagram:
    order = range(1, n + 1)
    return _mk(n, [[] for _ in order], {}, order, order)


def _builtin_dirac() -> AnnularDiagram:
    # One full twist on three strands: the square of the half-twist braid.
    half = [(1, "l", 1), (2, "l", 1), (1, "l", 1)]
    return from_braid(3, half + half)


BUILTIN_NAMES = ("A", "Ab", "As", "Abs", "eps1", "eps2", "eps3", "dirac")


def builtin(name: str) -> AnnularDiagram:
    """Return one of the hardcoded block diagrams.

    "A" is the Borromean block; "Ab", "As", "Abs" its bar/star transforms;
    "epsN" the trivial N-strand block; "dirac" the full-twist block.
    """
    if name == "A":
        return _builtin_a()
    if name == "Ab":
        return bar(_builtin_a())
    if name == "As":
        return star(_builtin_a())
    if name == "Abs":
        return bar(star(_builtin_a()))
    if name.startswith("eps"):
        try:
            n = int(name[3:])
        except ValueError:
            n = 0
        if n >= 1:
            return _builtin_eps(n)
    if name == "dirac":
        return _builtin_dirac()
    raise ValueError(
        f"unknown builtin diagram {name!r}; valid names are: "
        + ", ".join(BUILTIN_NAMES)
        + " (epsN for any N >= 1)"
    )


def to_json(d: AnnularDiagram) -> str:
    obj = {
        "n_strands": d.n_strands,
        "strands": [[{"c": p.crossing, "role": p.role} for p in s] for s in d.strands],
        "signs": {str(c): s for c, s in d.signs.items()},
        "inner_order": list(d.inner_order),
        "outer_order": list(d.outer_order),
    }
    return json.dumps(obj, indent=2)


def from_json(text: str) -> AnnularDiagram:
    obj = json.loads(text)
    try:
        d = _mk(
            obj["n_strands"],
            [[(p["c"], p["role"]) for p in s] for s in obj["strands"]],
            {int(c): s for c, s in obj["signs"].items()},
            obj["inner_order"],
            obj["outer_order"],
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram JSON: {exc}") from exc
    _require_valid(d)
    return d
