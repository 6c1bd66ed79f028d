"""Braid words in the Artin generators and the data their closures carry.

A word is read left to right. ``k`` stands for sigma_k and ``-k`` for its
inverse; sigma_k crosses strand positions ``k`` and ``k+1`` and is taken to
be a positive crossing when both strands are oriented along the braid.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import BraidParseError
from .graph import Provenance, SeifertGraph


@dataclass(frozen=True)
class BraidLetter:
    index: int
    sign: int

    def __post_init__(self):
        if self.index < 1:
            raise BraidParseError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise BraidParseError(f"exponent must be +1 or -1, got {self.sign}")

    def __int__(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidParseError(f"a braid needs at least one strand, got {self.strands}")
        for x in self.letters:
            if x.index > self.strands - 1:
                raise BraidParseError(
                    f"sigma_{x.index} does not exist on {self.strands} strands"
                )

    @classmethod
    def from_ints(cls, ints: Iterable[int], strands: int | None = None) -> "BraidWord":
        ints = list(ints)
        if any(k == 0 for k in ints):
            raise BraidParseError("0 is not a generator")
        if strands is None:
            if not ints:
                raise BraidParseError("an empty word needs an explicit strand count")
            strands = max(abs(k) for k in ints) + 1
        letters = tuple(BraidLetter(abs(k), 1 if k > 0 else -1) for k in ints)
        return cls(strands, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def ints(self) -> list[int]:
        return [int(x) for x in self.letters]

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.ints())


@dataclass(frozen=True)
class Permutation:
    """``images[p - 1]`` is where position ``p`` ends up."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            p = start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = self.images[p - 1]
            out.append(tuple(cyc))
        return out

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other.images[p - 1] for p in self.images))


def parse_braid_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace separated signed generator indices, e.g. ``"1 -2 1 -2"``."""
    ints = []
    for tok in text.split():
        try:
            k = int(tok, 10)
        except ValueError:
            raise BraidParseError(f"not an integer: {tok!r}") from None
        if k == 0:
            raise BraidParseError("0 is not a generator")
        if strands is not None and abs(k) >= strands:
            raise BraidParseError(f"generator {k} needs more than {strands} strands")
        ints.append(k)
    return BraidWord.from_ints(ints, strands)


def underlying_permutation(w: BraidWord) -> Permutation:
    # track where the strand starting at each position ends up
    where = list(range(1, w.strands + 1))
    at = list(range(w.strands + 1))  # at[pos] = starting position of strand now at pos
    for x in w.letters:
        i = x.index
        at[i], at[i + 1] = at[i + 1], at[i]
    for pos in range(1, w.strands + 1):
        where[at[pos] - 1] = pos
    return Permutation(tuple(where))


def closure_component_count(w: BraidWord) -> int:
    return len(underlying_permutation(w).cycles())


class CoilSplit(NamedTuple):
    rotation: int
    remainder: BraidWord


def find_coil_prefix(w: BraidWord) -> CoilSplit | None:
    """Find a cyclic rotation of ``w`` that starts with sigma_{n-1} ... sigma_1.

    Rotating a word does not change its closure. Returns the first rotation
    (smallest offset) whose leading ``n - 1`` letters are that descending
    positive run, together with the remaining word, or ``None``.
    """
    n, m = w.strands, len(w)
    coil = [BraidLetter(i, 1) for i in range(n - 1, 0, -1)]
    if len(coil) > m:
        return None
    letters = list(w.letters)
    for r in range(max(m, 1)):
        rotated = letters[r:] + letters[:r]
        if rotated[: len(coil)] == coil:
            return CoilSplit(r, BraidWord(n, tuple(rotated[len(coil):])))
    return None


def letter_counts(w: BraidWord) -> dict[int, dict[int, int]]:
    """``counts[i][sign]`` = number of occurrences of sigma_i^sign."""
    tally = Counter((x.index, x.sign) for x in w.letters)
    return {i: {1: tally[i, 1], -1: tally[i, -1]} for i in range(1, w.strands)}


def ensure_all_generators_both_signs(w: BraidWord) -> BraidWord:
    """Append a cancelling pair sigma_i sigma_i^-1 for every generator missing a sign."""
    counts = letter_counts(w)
    extra = []
    for i in range(1, w.strands):
        if counts[i][1] == 0 or counts[i][-1] == 0:
            extra += [BraidLetter(i, 1), BraidLetter(i, -1)]
    if not extra:
        return w
    return BraidWord(w.strands, w.letters + tuple(extra))


def closure_seifert_graph(w: BraidWord) -> SeifertGraph:
    """Seifert graph of the closed braid diagram.

    The Seifert circles of a closed braid are the strand circles, and each
    letter is a band between neighbouring circles.
    """
    return SeifertGraph.from_edges(
        w.strands,
        [(x.index, x.index + 1, x.sign) for x in w.letters],
        closure_component_count(w),
        Provenance("braid", w),
    )


def is_positive(w: BraidWord) -> bool:
    return len(w) > 0 and all(x.sign == 1 for x in w.letters)


def is_alternating_closure(w: BraidWord) -> bool:
    """Sufficient test: the sign of sigma_i is ``f * (-1)**i`` for one fixed ``f``.

    Such words close up to alternating diagrams. ``False`` proves nothing.
    """
    fs = {x.sign * (-1) ** x.index for x in w.letters}
    return len(fs) <= 1


def split_braid(w: BraidWord) -> list[BraidWord]:
    """Cut ``w`` into the sub-braids on blocks of strands joined by some letter."""
    present = {x.index for x in w.letters}
    blocks = []
    lo = 1
    for i in range(1, w.strands + 1):
        if i == w.strands or i not in present:
            blocks.append((lo, i))
            lo = i + 1
    out = []
    for lo, hi in blocks:
        sub = tuple(
            BraidLetter(x.index - lo + 1, x.sign) for x in w.letters if lo <= x.index < hi
        )
        out.append(BraidWord(hi - lo + 1, sub))
    return out


def random_connected_braid(
    rng: random.Random, max_strands: int = 6, max_length: int = 20
) -> BraidWord:
    """Uniform letters over index and sign, rejecting words whose closure is split.

    The strand count is uniform on ``2..max_strands`` and the length uniform
    on ``n-1..max_length``.
    """
    while True:
        n = rng.randint(2, max_strands)
        if n - 1 > max_length:
            continue
        m = rng.randint(n - 1, max_length)
        ints = [rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(m)]
        if len({abs(k) for k in ints}) == n - 1:
            return BraidWord.from_ints(ints, n)
