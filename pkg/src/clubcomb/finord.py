"""Finite functions between initial segments of the naturals, and their clubs.

A FinFun is a total function {1..m} -> {1..n}, stored as a tuple of images.
Everything downstream (usage analysis, generator factorization, compilation)
is built on three structural properties of such functions: injectivity,
surjectivity, and monotonicity (weakly order-preserving).

A club is a composition-closed class of finite functions cut out by a subset
of those three properties.  The eight clubs form a lattice under inclusion,
each comes with a combinator basis, and each non-trivial one is generated by
adjacent transpositions t(n,i), degeneracies s(n,i), and faces d(n,i).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import Enum

from .errors import (
    ArityMismatch,
    CodomainMismatch,
    IndexOutOfRange,
    NotInClub,
    ParseError,
)


@dataclass(frozen=True)
class FinFun:
    """A function {1..dom} -> {1..cod}; table[j-1] is the image of j."""

    dom: int
    cod: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise ValueError("dom and cod must be non-negative")
        if len(self.table) != self.dom:
            raise ValueError(f"table has {len(self.table)} entries, dom is {self.dom}")
        for e in self.table:
            if not 1 <= e <= self.cod:
                raise ValueError(f"table entry {e} outside 1..{self.cod}")

    def __call__(self, j: int) -> int:
        if not 1 <= j <= self.dom:
            raise IndexOutOfRange(f"argument {j} outside 1..{self.dom}")
        return self.table[j - 1]

    def __str__(self) -> str:
        return format_finfun(self)


def identity(n: int) -> FinFun:
    return FinFun(n, n, tuple(range(1, n + 1)))


def compose(g: FinFun, f: FinFun) -> FinFun:
    """g after f: first apply f, then g."""
    if f.cod != g.dom:
        raise ArityMismatch(f"cannot compose {g} after {f}")
    return FinFun(f.dom, g.cod, tuple(g.table[e - 1] for e in f.table))


def add(a: FinFun, b: FinFun) -> FinFun:
    """Disjoint juxtaposition: a on the first block, b shifted after it."""
    table = a.table + tuple(e + a.cod for e in b.table)
    return FinFun(a.dom + b.dom, a.cod + b.cod, table)


def injection(j: int, ks: list[int] | tuple[int, ...]) -> FinFun:
    """The inclusion of the j-th block into the concatenation of blocks ks."""
    if not 1 <= j <= len(ks):
        raise IndexOutOfRange(f"block index {j} outside 1..{len(ks)}")
    offset = sum(ks[: j - 1])
    return FinFun(ks[j - 1], sum(ks), tuple(offset + x for x in range(1, ks[j - 1] + 1)))


def copair(fs: list[FinFun] | tuple[FinFun, ...], cod: int | None = None) -> FinFun:
    """Case analysis: the function acting as fs[j] on the j-th block.

    All functions must share one codomain; for an empty list the codomain
    cannot be inferred and must be supplied.
    """
    if not fs:
        if cod is None:
            raise CodomainMismatch("copair of no functions needs an explicit codomain")
        return FinFun(0, cod, ())
    n = fs[0].cod
    if cod is not None and cod != n:
        raise CodomainMismatch(f"declared codomain {cod} differs from {n}")
    table: list[int] = []
    for f in fs:
        if f.cod != n:
            raise CodomainMismatch(f"codomains differ: {f.cod} vs {n}")
        table.extend(f.table)
    return FinFun(len(table), n, tuple(table))


def wreath(a: FinFun, ks: list[int] | tuple[int, ...]) -> FinFun:
    """Block substitution: route whole blocks the way a routes single points.

    ks gives one block width per element of a's codomain.  The j-th domain
    block has the width of block a(j) and maps in order onto that block's
    position in the codomain concatenation.
    """
    if len(ks) != a.cod:
        raise ArityMismatch(f"{a.cod} block widths required, got {len(ks)}")
    return copair([injection(a(j), ks) for j in range(1, a.dom + 1)], cod=sum(ks))


class GenKind(Enum):
    TRANSPOSITION = "transposition"
    DEGENERACY = "degeneracy"
    FACE = "face"


@dataclass(frozen=True)
class Generator:
    """One of the three generator families, identified by kind and indices.

    t(n,i): n -> n        swaps i and i+1             (needs n > 1, 1 <= i < n)
    s(n,i): n+1 -> n      merges i and i+1            (needs 1 <= i <= n)
    d(n,i): n-1 -> n      skips the value i           (needs 1 <= i <= n)
    """

    kind: GenKind
    n: int
    i: int

    def __post_init__(self):
        if self.kind is GenKind.TRANSPOSITION:
            if self.n <= 1 or not 1 <= self.i < self.n:
                raise IndexOutOfRange(f"t({self.n},{self.i}) needs 1 <= i < n, n > 1")
        elif self.kind is GenKind.DEGENERACY:
            if self.n < 1 or not 1 <= self.i <= self.n:
                raise IndexOutOfRange(f"s({self.n},{self.i}) needs 1 <= i <= n")
        else:
            if self.n < 1 or not 1 <= self.i <= self.n:
                raise IndexOutOfRange(f"d({self.n},{self.i}) needs 1 <= i <= n")

    def __str__(self) -> str:
        short = {GenKind.TRANSPOSITION: "t", GenKind.DEGENERACY: "s", GenKind.FACE: "d"}
        return f"{short[self.kind]}({self.n},{self.i})"


def transposition(n: int, i: int) -> Generator:
    return Generator(GenKind.TRANSPOSITION, n, i)


def degeneracy(n: int, i: int) -> Generator:
    return Generator(GenKind.DEGENERACY, n, i)


def face(n: int, i: int) -> Generator:
    return Generator(GenKind.FACE, n, i)


def make_generator(g: Generator) -> FinFun:
    """The finite function a generator denotes."""
    if g.kind is GenKind.TRANSPOSITION:
        table = list(range(1, g.n + 1))
        table[g.i - 1], table[g.i] = table[g.i], table[g.i - 1]
        return FinFun(g.n, g.n, tuple(table))
    if g.kind is GenKind.DEGENERACY:
        return FinFun(g.n + 1, g.n, tuple(x if x <= g.i else x - 1 for x in range(1, g.n + 2)))
    return FinFun(g.n - 1, g.n, tuple(x if x < g.i else x + 1 for x in range(1, g.n)))


INJECTIVE = "injective"
SURJECTIVE = "surjective"
MONOTONE = "monotone"


@dataclass(frozen=True)
class Classification:
    injective: bool
    surjective: bool
    monotone: bool
    bijective: bool
    identity: bool


def classify(f: FinFun) -> Classification:
    inj = len(set(f.table)) == f.dom
    srj = set(f.table) == set(range(1, f.cod + 1))
    mono = all(f.table[k] <= f.table[k + 1] for k in range(f.dom - 1))
    return Classification(
        injective=inj,
        surjective=srj,
        monotone=mono,
        bijective=inj and srj,
        identity=inj and srj and mono,
    )


def _props(f: FinFun) -> frozenset[str]:
    c = classify(f)
    out = set()
    if c.injective:
        out.add(INJECTIVE)
    if c.surjective:
        out.add(SURJECTIVE)
    if c.monotone:
        out.add(MONOTONE)
    return frozenset(out)


class Club(Enum):
    """The eight composition-closed classes, named by their members.

    Each club is the class of functions having all properties in its
    requirement set; a monotone bijection is an identity, which is why the
    top requirement set {injective, surjective, monotone} carves out exactly
    the identities.
    """

    ID = "id"
    BIJ = "bij"
    MINJ = "minj"
    MSRJ = "msrj"
    INJ = "inj"
    SRJ = "srj"
    MFUN = "mfun"
    FUN = "fun"

    @property
    def display(self) -> str:
        return self.value.capitalize()


_REQUIRED: dict[Club, frozenset[str]] = {
    Club.ID: frozenset({INJECTIVE, SURJECTIVE, MONOTONE}),
    Club.BIJ: frozenset({INJECTIVE, SURJECTIVE}),
    Club.MINJ: frozenset({INJECTIVE, MONOTONE}),
    Club.MSRJ: frozenset({SURJECTIVE, MONOTONE}),
    Club.INJ: frozenset({INJECTIVE}),
    Club.SRJ: frozenset({SURJECTIVE}),
    Club.MFUN: frozenset({MONOTONE}),
    Club.FUN: frozenset(),
}

_BY_PROPS: dict[frozenset[str], Club] = {req: c for c, req in _REQUIRED.items()}


def required_properties(c: Club) -> frozenset[str]:
    """The properties every member of c must have."""
    return _REQUIRED[c]


def contains(c: Club, f: FinFun) -> bool:
    return _REQUIRED[c] <= _props(f)


def minimal_club(f: FinFun) -> Club:
    """The smallest club containing f (exists for every f)."""
    return _BY_PROPS[_props(f)]


def leq(c1: Club, c2: Club) -> bool:
    """Inclusion order: c1 <= c2 iff every member of c1 is a member of c2."""
    return _REQUIRED[c2] <= _REQUIRED[c1]


def basis(c: Club) -> frozenset[str]:
    """The combinator basis paired with the club.

    B and I are always present; C is added once order can be broken, K once
    points can be dropped, W once points can be duplicated.
    """
    req = _REQUIRED[c]
    out = {"B", "I"}
    if MONOTONE not in req:
        out.add("C")
    if SURJECTIVE not in req:
        out.add("K")
    if INJECTIVE not in req:
        out.add("W")
    return frozenset(out)


def generator_kinds(c: Club) -> frozenset[GenKind]:
    """Which generator families stay inside the club."""
    req = _REQUIRED[c]
    out = set()
    if MONOTONE not in req:
        out.add(GenKind.TRANSPOSITION)
    if INJECTIVE not in req:
        out.add(GenKind.DEGENERACY)
    if SURJECTIVE not in req:
        out.add(GenKind.FACE)
    return frozenset(out)


def club_from_name(name: str) -> Club:
    try:
        return Club(name)
    except ValueError:
        raise ParseError(f"unknown club name: {name!r}") from None


def factor(f: FinFun, c: Club) -> list[Generator]:
    """Write f as a composite of c's generators, in application order.

    The scheme is canonical: a bubble sort of the image table records the
    adjacent transpositions that remove all inversions (stable, so equal
    entries never swap); the sorted remainder is split into degeneracies by
    always merging at the smallest equal-adjacent index, then into faces by
    inserting the missed codomain points in ascending order.  Composing the
    returned generators left-to-right (earliest applied first) rebuilds f
    exactly, and every emitted generator lies in c whenever f does.
    """
    if not contains(c, f):
        raise NotInClub(
            f"{format_finfun(f)} is not in {c.display}; "
            f"its minimal club is {minimal_club(f).display}",
            minimal=minimal_club(f),
        )
    gens: list[Generator] = []
    table = list(f.table)
    m = f.dom

    # Swapping positions i, i+1 of the table precomposes with t(m, i), so the
    # recorded swaps, applied first in recorded order, undo all inversions.
    swapped = True
    while swapped:
        swapped = False
        for i in range(1, m):
            if table[i - 1] > table[i]:
                table[i - 1], table[i] = table[i], table[i - 1]
                gens.append(transposition(m, i))
                swapped = True

    # table is now monotone; peel off degeneracies until strictly increasing.
    work = table
    while True:
        size = len(work)
        merge_at = next((i for i in range(1, size) if work[i - 1] == work[i]), None)
        if merge_at is None:
            break
        gens.append(degeneracy(size - 1, merge_at))
        work = work[:merge_at] + work[merge_at + 1:]

    # work is a strictly increasing image; insert the missed points as faces.
    present = set(work)
    rank = len(work)
    for v in range(1, f.cod + 1):
        if v not in present:
            rank += 1
            gens.append(face(rank, v))

    return gens


_FINFUN_RE = re.compile(
    r"^\s*(\d+)\s*->\s*(\d+)\s*:\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*$"
)


def parse_finfun(text: str) -> FinFun:
    """Parse the notation m->n:[e1,...,em]."""
    m = _FINFUN_RE.match(text)
    if m is None:
        raise ParseError(f"not a finite function: {text!r} (expected m->n:[e1,...,em])")
    dom, cod = int(m.group(1)), int(m.group(2))
    entries = tuple(int(x) for x in m.group(3).replace(" ", "").split(",")) if m.group(3).strip() else ()
    try:
        return FinFun(dom, cod, entries)
    except ValueError as e:
        raise ParseError(str(e)) from None


def format_finfun(f: FinFun) -> str:
    return f"{f.dom}->{f.cod}:[{','.join(str(e) for e in f.table)}]"


def all_finfuns(m: int, n: int):
    """Iterate every function {1..m} -> {1..n}, in lexicographic table order."""
    if m == 0:
        yield FinFun(0, n, ())
        return
    if n == 0:
        return
    for table in itertools.product(range(1, n + 1), repeat=m):
        yield FinFun(m, n, table)
