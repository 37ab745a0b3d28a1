"""Finite presentations and the invariants used to compare them.

Words are tuples of signed generator indices (see ``braid``). A presentation is
compared with another only through isomorphism invariants: the integer
abelianization and the number of homomorphisms into small finite groups.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .braid import Word, format_word, invert_word, reduce_word

AFFINE = "affine"
PROJECTIVE = "projective"
MODES = (AFFINE, PROJECTIVE)

DEFAULT_BUDGET = 20_000_000


class NotInvertibleSubstitution(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"brute force needs {required} tuples, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word = ()
    origin: int | str | None = None

    def __post_init__(self):
        object.__setattr__(self, "lhs", reduce_word(self.lhs))
        object.__setattr__(self, "rhs", reduce_word(self.rhs))

    def relator(self) -> Word:
        return reduce_word(self.lhs + invert_word(self.rhs))

    def exponent_vector(self, n: int) -> list[int]:
        v = [0] * n
        for x in self.lhs:
            v[abs(x) - 1] += 1 if x > 0 else -1
        for x in self.rhs:
            v[abs(x) - 1] -= 1 if x > 0 else -1
        return v

    def is_balanced(self) -> bool:
        return not any(self.exponent_vector(max(self.max_index(), 1)))

    def max_index(self) -> int:
        return max((abs(x) for x in self.lhs + self.rhs), default=0)


def commutator_relation(a: Sequence[int], b: Sequence[int], origin=None) -> Relation:
    """[a, b] = 1 written as ``a b = b a``."""
    return Relation(tuple(a) + tuple(b), tuple(b) + tuple(a), origin)


@dataclass(frozen=True)
class Presentation:
    n_generators: int
    relations: tuple[Relation, ...] = ()
    mode: str = AFFINE
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        object.__setattr__(self, "relations", tuple(self.relations))
        if not self.names:
            object.__setattr__(self, "names", tuple(f"G{i}" for i in range(1, self.n_generators + 1)))
        if len(self.names) != self.n_generators:
            raise ValueError("one name per generator required")
        for r in self.relations:
            if r.max_index() > self.n_generators:
                raise ValueError(f"relation uses generator {r.max_index()} > {self.n_generators}")

    def relators(self) -> list[Word]:
        return [w for w in (r.relator() for r in self.relations) if w]

    def with_relations(self, extra: Iterable[Relation]) -> Presentation:
        return Presentation(self.n_generators, self.relations + tuple(extra), self.mode, self.names)

    def to_text(self) -> str:
        lines = [f"gens: {self.n_generators}"]
        for r in self.relations:
            lines.append(f"{format_word(r.lhs, self.names)} = {format_word(r.rhs, self.names)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "gens": self.n_generators,
            "mode": self.mode,
            "names": list(self.names),
            "relations": [
                {"lhs": list(r.lhs), "rhs": list(r.rhs), "origin": r.origin} for r in self.relations
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> Presentation:
        rels = tuple(Relation(tuple(r["lhs"]), tuple(r["rhs"]), r.get("origin")) for r in data["relations"])
        return cls(data["gens"], rels, data.get("mode", AFFINE), tuple(data.get("names", ())))

    @classmethod
    def from_text(cls, text: str, mode: str = AFFINE) -> Presentation:
        """Parse the plain format written by ``to_text`` (default generator names only)."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        m = re.fullmatch(r"gens:\s*(\d+)", lines[0])
        if not m:
            raise ValueError(f"expected 'gens: n', got {lines[0]!r}")
        rels = []
        for ln in lines[1:]:
            lhs, _, rhs = ln.partition("=")
            rels.append(Relation(_parse_word(lhs), _parse_word(rhs)))
        return cls(int(m.group(1)), tuple(rels), mode)


def _parse_word(text: str) -> Word:
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        m = re.fullmatch(r"G(\d+)(\^-1)?", tok)
        if not m:
            raise ValueError(f"bad word token {tok!r}")
        i = int(m.group(1))
        out.append(-i if m.group(2) else i)
    return tuple(out)


# -- generator replacement -------------------------------------------------

def replace_generator(p: Presentation, target: int, word: Sequence[int], name: str | None = None) -> Presentation:
    """Swap generator ``target`` for the element ``word`` and rewrite every relation.

    ``word`` must contain ``target`` exactly once, with exponent +1, so that
    ``word = u * target * v`` can be solved as ``target = u^-1 * new * v^-1``.
    The new generator occupies slot ``target``.
    """
    word = tuple(word)
    hits = [i for i, x in enumerate(word) if abs(x) == target]
    if len(hits) != 1 or word[hits[0]] != target:
        raise NotInvertibleSubstitution(f"G{target} must occur exactly once with exponent +1 in {word}")
    if any(abs(x) > p.n_generators for x in word):
        raise ValueError("word uses generators outside the presentation")
    u, v = word[: hits[0]], word[hits[0] + 1 :]
    expr = invert_word(u) + (target,) + invert_word(v)

    def rewrite(w):
        out = []
        for x in w:
            if x == target:
                out.extend(expr)
            elif x == -target:
                out.extend(invert_word(expr))
            else:
                out.append(x)
        return reduce_word(out)

    rels = tuple(Relation(rewrite(r.lhs), rewrite(r.rhs), r.origin) for r in p.relations)
    names = list(p.names)
    names[target - 1] = name or (names[target - 1] + "'" if word != (target,) else names[target - 1])
    return Presentation(p.n_generators, rels, p.mode, tuple(names))


# -- abelianization --------------------------------------------------------

def exponent_matrix(p: Presentation) -> list[list[int]]:
    return [r.exponent_vector(p.n_generators) for r in p.relations]


def smith_diagonal(matrix: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    a = [list(row) for row in matrix if any(row)]
    diag = []
    while a and any(any(row) for row in a):
        # pivot: entry of least nonzero absolute value
        _, pi, pj = min((abs(v), i, j) for i, row in enumerate(a) for j, v in enumerate(row) if v)
        a[0], a[pi] = a[pi], a[0]
        for row in a:
            row[0], row[pj] = row[pj], row[0]
        while True:
            piv = a[0][0]
            dirty = False
            for i in range(1, len(a)):
                q = a[i][0] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[0])]
                if a[i][0]:
                    dirty = True
            for j in range(1, ncols):
                q = a[0][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[0]
                if a[0][j]:
                    dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(1, len(a)) for j in range(1, ncols) if a[i][j] % piv), None)
                if bad is None:
                    break
                # fold a row that piv does not divide into the pivot row
                a[0] = [x + y for x, y in zip(a[0], a[bad[0]])]
                continue
            # move the smallest remainder into the pivot position
            _, pi, pj = min(
                [(abs(a[i][0]), i, 0) for i in range(len(a)) if a[i][0]]
                + [(abs(a[0][j]), 0, j) for j in range(ncols) if a[0][j]]
            )
            a[0], a[pi] = a[pi], a[0]
            for row in a:
                row[0], row[pj] = row[pj], row[0]
        diag.append(abs(a[0][0]))
        a = [row[1:] for row in a[1:]]
        ncols -= 1
        a = [row for row in a if any(row)]
    return diag


def abelianization(p: Presentation) -> tuple[int, list[int]]:
    """(free rank, torsion coefficients) of the abelianized group."""
    diag = smith_diagonal(exponent_matrix(p), p.n_generators)
    return p.n_generators - len(diag), [d for d in diag if d > 1]


# -- group structures ------------------------------------------------------

@dataclass(frozen=True)
class GroupStructure:
    """The group F^{k_1} + ... + F^{k_s} + Z^r, kept in canonical form."""
    free_ranks: tuple[int, ...] = ()
    abelian_rank: int = 0

    def __post_init__(self):
        ranks = tuple(self.free_ranks)
        if any(k < 1 for k in ranks) or self.abelian_rank < 0:
            raise ValueError(f"invalid structure {ranks}, r={self.abelian_rank}")
        ones = sum(1 for k in ranks if k == 1)
        object.__setattr__(self, "free_ranks", tuple(sorted((k for k in ranks if k > 1), reverse=True)))
        object.__setattr__(self, "abelian_rank", self.abelian_rank + ones)

    def __add__(self, other: GroupStructure) -> GroupStructure:
        return GroupStructure(self.free_ranks + other.free_ranks, self.abelian_rank + other.abelian_rank)

    @property
    def total_rank(self) -> int:
        return sum(self.free_ranks) + self.abelian_rank

    def __str__(self):
        parts = [f"F^{k}" for k in self.free_ranks]
        if self.abelian_rank or not parts:
            parts.append(f"Z^{self.abelian_rank}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"free_ranks": list(self.free_ranks), "abelian_rank": self.abelian_rank}


def reference_presentation(s: GroupStructure) -> Presentation:
    """Generators in blocks, one block per free factor and one per Z; distinct blocks commute."""
    blocks: list[list[int]] = []
    g = 1
    for k in s.free_ranks:
        blocks.append(list(range(g, g + k)))
        g += k
    for _ in range(s.abelian_rank):
        blocks.append([g])
        g += 1
    rels = [
        commutator_relation((a,), (b,))
        for b1, b2 in itertools.combinations(blocks, 2)
        for a in b1
        for b in b2
    ]
    return Presentation(g - 1, tuple(rels), AFFINE)


# -- finite probe groups ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class FiniteGroup:
    name: str
    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        n = t.shape[0]
        if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise ValueError("multiplication table must be N x N with entries in 0..N-1")
        object.__setattr__(self, "table", t)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e, x] == x and self.table[x, e] == x for x in range(n)):
                return e
        raise ValueError(f"{self.name}: no identity element")

    @property
    def inverses(self) -> np.ndarray:
        e = self.identity
        return np.array([int(np.flatnonzero(self.table[x] == e)[0]) for x in range(self.order)])

    @classmethod
    def from_permutations(cls, name: str, perms: Sequence[tuple[int, ...]]) -> FiniteGroup:
        index = {p: i for i, p in enumerate(perms)}
        # product a*b: apply a first, then b (left to right, as for words)
        table = [[index[tuple(b[a[x]] for x in range(len(a)))] for b in perms] for a in perms]
        return cls(name, np.array(table))

    @classmethod
    def from_text(cls, text: str, name: str = "custom") -> FiniteGroup:
        nums = [int(t) for t in text.split()]
        n = nums[0]
        if len(nums) != 1 + n * n:
            raise ValueError(f"expected {n * n} table entries, got {len(nums) - 1}")
        return cls(name, np.array(nums[1:]).reshape(n, n))


def symmetric_group(k: int) -> FiniteGroup:
    return FiniteGroup.from_permutations(f"S{k}", list(itertools.permutations(range(k))))


def _closure(gens: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ident = tuple(range(len(gens[0])))
    seen = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[x]] for x in range(len(p)))
                if q not in seen:
                    seen.append(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def builtin_probe(name: str) -> FiniteGroup:
    key = name.lower()
    if key == "s3":
        return symmetric_group(3)
    if key == "s4":
        return symmetric_group(4)
    if key == "d4":
        return FiniteGroup.from_permutations("D4", _closure([(1, 2, 3, 0), (3, 2, 1, 0)]))
    if key in ("z2xz2", "v4"):
        return FiniteGroup.from_permutations("Z2xZ2", _closure([(1, 0, 3, 2), (2, 3, 0, 1)]))
    raise KeyError(f"unknown probe group {name!r}")


def load_probe(name_or_path: str) -> FiniteGroup:
    """A built-in name (s3, s4, d4, z2xz2) or a path to a table file."""
    try:
        return builtin_probe(name_or_path)
    except KeyError:
        path = Path(name_or_path)
        return FiniteGroup.from_text(path.read_text(), name=path.stem)


# -- homomorphism counting -------------------------------------------------

_CHUNK_ROWS = 1 << 21


def _satisfied(assign: np.ndarray, relator: Word, group: FiniteGroup, flat, inv, e) -> np.ndarray:
    n = group.order
    x = np.full(assign.shape[0], e, dtype=np.int64)
    for letter in relator:
        col = assign[:, abs(letter) - 1]
        if letter < 0:
            col = inv[col]
        x = flat[x * n + col]
    return x == e


def hom_count(p: Presentation, group: FiniteGroup, budget: int = DEFAULT_BUDGET) -> int:
    """Number of tuples (g_1..g_n) in ``group`` satisfying every relation.

    Generators are assigned one at a time; each relator is checked as soon as
    every generator it mentions has a value, which prunes the search early.
    """
    n, order = p.n_generators, group.order
    required = order ** n
    if required > budget:
        raise BudgetExceeded(required, budget)
    flat = group.table.reshape(-1)
    inv = group.inverses
    e = group.identity
    by_level: dict[int, list[Word]] = {}
    for w in sorted(set(p.relators()), key=len):
        by_level.setdefault(max(abs(x) for x in w), []).append(w)
    assign = np.zeros((1, 0), dtype=np.int64)
    for g in range(1, n + 1):
        last = g == n
        pieces = []
        total = 0
        step = max(1, _CHUNK_ROWS // order)
        for start in range(0, assign.shape[0], step):
            block = assign[start : start + step]
            rows = block.shape[0]
            ext = np.empty((rows * order, g), dtype=np.int64)
            ext[:, : g - 1] = np.repeat(block, order, axis=0)
            ext[:, g - 1] = np.tile(np.arange(order), rows)
            for w in by_level.get(g, ()):
                ext = ext[_satisfied(ext, w, group, flat, inv, e)]
                if not ext.shape[0]:
                    break
            if last:
                total += ext.shape[0]
            else:
                pieces.append(ext)
        if last:
            return total
        assign = np.concatenate(pieces) if pieces else np.zeros((0, g), dtype=np.int64)
    # no generators: the trivial group maps uniquely
    return 1
