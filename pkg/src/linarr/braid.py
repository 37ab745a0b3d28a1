"""Braid words, half-twists, monodromy braids and the Artin action.

Braids compose left to right: in ``b1 * b2`` the factor ``b1`` acts first.
Free words over the generators G1..Gn are tuples of nonzero integers, ``i`` for
``G_i`` and ``-i`` for its inverse.

The action of sigma_i on the free group is

    G_i     -> G_{i+1}
    G_{i+1} -> G_{i+1} G_i G_{i+1}^-1

which is the positive half-twist on a fiber whose base point lies below the
real axis. It fixes the boundary loop ``G_n ... G_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .geometry import SingularPoint

Word = tuple[int, ...]


class IndexOutOfRange(ValueError):
    pass


class StrandMismatch(ValueError):
    pass


def reduce_word(letters: Iterable[int]) -> Word:
    stack: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a generator")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def invert_word(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


@dataclass(frozen=True)
class FreeWord:
    letters: Word = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", reduce_word(self.letters))

    @classmethod
    def gen(cls, i: int, power: int = 1) -> FreeWord:
        sign = 1 if power > 0 else -1
        return cls((sign * i,) * abs(power))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(invert_word(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def max_index(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def __str__(self):
        return format_word(self.letters)


def format_word(w: Sequence[int], names: Sequence[str] | None = None) -> str:
    if not w:
        return "1"

    def name(i):
        return names[i - 1] if names else f"G{i}"

    return " ".join(name(x) if x > 0 else f"{name(-x)}^-1" for x in w)


@dataclass(frozen=True)
class BraidWord:
    n: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        for x in self.word:
            if x == 0 or abs(x) >= self.n:
                raise IndexOutOfRange(f"generator {x} out of range for {self.n} strands")

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise StrandMismatch(f"{self.n} vs {other.n} strands")
        return BraidWord(self.n, self.word + other.word)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.n, self.word * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-x for x in reversed(self.word)))

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.word)

    def to_list(self) -> list[int]:
        return list(self.word)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        if not self.word:
            return "e"
        return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in self.word)


def half_twist_word(k: int, l: int, n: int) -> BraidWord:
    """Positive half-twist on strands k..l: (s_k..s_{l-1})(s_k..s_{l-2})...(s_k)."""
    if not (1 <= k < l <= n):
        raise IndexOutOfRange(f"need 1 <= k < l <= n, got k={k}, l={l}, n={n}")
    word = []
    for top in range(l - 1, k - 1, -1):
        word.extend(range(k, top + 1))
    return BraidWord(n, tuple(word))


def full_twist_word(n: int) -> BraidWord:
    if n < 2:
        return BraidWord(max(n, 1))
    return half_twist_word(1, n, n) ** 2


def _sigma_images(i: int, sign: int) -> dict[int, Word]:
    if sign > 0:
        return {i: (i + 1,), i + 1: (i + 1, i, -(i + 1))}
    return {i: (-i, i + 1, i), i + 1: (i,)}


def _substitute(w: Sequence[int], images: dict[int, Word]) -> Word:
    out: list[int] = []
    for x in w:
        img = images.get(abs(x))
        if img is None:
            out.append(x)
        elif x > 0:
            out.extend(img)
        else:
            out.extend(invert_word(img))
    return reduce_word(out)


def _check_word(w: Sequence[int], n: int):
    for x in w:
        if x == 0 or abs(x) > n:
            raise IndexOutOfRange(f"generator G{abs(x)} out of range for {n} strands")


def act(b: BraidWord, w: Sequence[int]) -> Word:
    """Artin action on a raw letter tuple, factors of ``b`` applied left to right."""
    _check_word(w, b.n)
    w = reduce_word(w)
    for x in b.word:
        w = _substitute(w, _sigma_images(abs(x), 1 if x > 0 else -1))
    return w


def artin_action(b: BraidWord, w: FreeWord) -> FreeWord:
    return FreeWord(act(b, w.letters))


def generator_images(b: BraidWord) -> list[Word]:
    """Images of G1..Gn under ``b``."""
    return [act(b, (i,)) for i in range(1, b.n + 1)]


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    """Equality in B_n, decided through the faithful action on the free group."""
    if b1.n != b2.n:
        raise StrandMismatch(f"{b1.n} vs {b2.n} strands")
    return generator_images(b1) == generator_images(b2)


def induced_permutation(b: BraidWord) -> tuple[int, ...]:
    """``perm[p-1]`` is the final position of the strand starting at position p."""
    pos = list(range(1, b.n + 1))
    for x in b.word:
        i = abs(x)
        pos = [i + 1 if p == i else i if p == i + 1 else p for p in pos]
    return tuple(pos)


def conjugators(points: Sequence[SingularPoint], n: int) -> list[BraidWord]:
    """C_j = Delta<k_{j-1},l_{j-1}> ... Delta<k_1,l_1>, with C_1 empty."""
    result = []
    acc = BraidWord(n)
    for p in points:
        result.append(acc)
        if p.pair is None:
            raise ValueError(f"point {p.j} has no Lefschetz pair")
        acc = half_twist_word(p.pair.k, p.pair.l, n) * acc
    return result


def monodromy_braids(points: Sequence[SingularPoint], n: int) -> list[BraidWord]:
    """phi(delta_j) = C_j^-1 Delta<k_j,l_j>^2 C_j for each point in index order."""
    out = []
    for p, c in zip(points, conjugators(points, n)):
        twist = half_twist_word(p.pair.k, p.pair.l, n) ** 2
        out.append(c.inverse() * twist * c)
    return out
