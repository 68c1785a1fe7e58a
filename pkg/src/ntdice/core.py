"""Dice sets, their word encoding, and exact win-probability machinery.

A set of dice is ``m`` pairwise-disjoint ``n``-element label sets
partitioning ``{1, ..., m*n}``; each die rolls its labels uniformly and the
higher number wins. The word of a dice set lists, for each label ``1..m*n``
in increasing order, the letter of the die carrying that label, so relative
die strength is encoded purely by letter positions. Every probability here
is an exact pair of integers (wins out of ``n*n`` ordered rolls); floating
point never enters.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import (
    DuplicateLabel,
    FewerThanTwoDice,
    IndexOutOfRange,
    LabelOutOfRange,
    MalformedWord,
    PositionOutOfRange,
    SameDie,
    WrongSideCount,
)

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Word:
    """A sequence over the first ``m`` letters, each appearing ``n`` times.

    Direct construction is trusted; ``from_string`` validates.
    """

    letters: str
    m: int

    @property
    def n(self) -> int:
        return len(self.letters) // self.m

    @classmethod
    def from_string(cls, text: str, m: int | None = None) -> "Word":
        """Validate ``text`` as a word; infer the alphabet size when omitted."""
        if m is None:
            m = len(set(text))
            if m == 0:
                raise MalformedWord("cannot infer alphabet size from an empty word")
        if m < 2 or m > len(ALPHABET):
            raise MalformedWord(f"alphabet size {m} outside 2..{len(ALPHABET)}")
        allowed = ALPHABET[:m]
        for pos, ch in enumerate(text, start=1):
            if ch not in allowed:
                raise MalformedWord(
                    f"letter {ch!r} at position {pos} not in alphabet {allowed!r}"
                )
        if len(text) % m != 0:
            raise MalformedWord(f"length {len(text)} is not a multiple of m={m}")
        n = len(text) // m
        for x, ch in enumerate(allowed):
            count = text.count(ch)
            if count != n:
                raise MalformedWord(
                    f"letter {ch!r} occurs {count} times, expected {n}"
                )
        return cls(text, m)

    @classmethod
    def empty(cls, m: int) -> "Word":
        """The length-zero word, the identity of concatenation."""
        return cls("", m)

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class DiceSet:
    """``m`` disjoint ``n``-sets of labels partitioning ``{1..m*n}``.

    Labels within a die are stored strictly descending; dice are indexed
    0..m-1 and written as letters a, b, c, ... in messages and formats.
    Use ``validate_dice`` to build one from untrusted input.
    """

    dice: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.dice)

    @property
    def n(self) -> int:
        return len(self.dice[0])


@dataclass(frozen=True, eq=False)
class WinOdds:
    """Exact win count out of ``trials`` ordered rolls; never a float.

    Equality is cross-multiplicative (5/9 == 10/18) but the raw counts are
    kept unreduced so ``trials`` always remains n*n.
    """

    wins: int
    trials: int

    def __post_init__(self) -> None:
        if not 0 <= self.wins <= self.trials:
            raise ValueError(f"wins {self.wins} outside 0..{self.trials}")

    @property
    def display(self) -> str:
        return f"{self.wins}/{self.trials}"

    def is_majority(self) -> bool:
        """Strictly more than half of all rolls won."""
        return 2 * self.wins > self.trials

    def is_fair(self) -> bool:
        return 2 * self.wins == self.trials

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WinOdds):
            return NotImplemented
        return self.wins * other.trials == other.wins * self.trials

    def __hash__(self) -> int:
        g = gcd(self.wins, self.trials) or 1
        return hash((self.wins // g, self.trials // g))

    def __str__(self) -> str:
        return self.display


@dataclass(frozen=True)
class BalanceSummary:
    """Per-die prior-occurrence sums and face-sums of a word, in one pass.

    For each die: ``qplus_sums`` totals prior letters of the die it beats
    around the cycle, ``qminus_sums`` prior letters of the die beating it,
    ``qsame_sums`` prior letters of the same die.
    """

    m: int
    n: int
    qplus_sums: tuple[int, ...]
    qminus_sums: tuple[int, ...]
    qsame_sums: tuple[int, ...]
    face_sums: tuple[int, ...]


class Classification(Enum):
    BALANCED_NONTRANSITIVE = "balanced-nontransitive"
    BALANCED_FAIR = "balanced-fair"
    BALANCED_REVERSE = "balanced-reverse"
    UNBALANCED = "unbalanced"


@dataclass(frozen=True)
class Verdict:
    """Outcome of ``verify``.

    ``suggested_relabeling`` is present exactly for BALANCED_REVERSE and
    gives the die order that turns the set balanced non-transitive.
    ``method`` records the route taken: "face-sum" for the three-dice
    screen, "cycle" for the general fallback.
    """

    classification: Classification
    witness_odds: WinOdds | None = None
    suggested_relabeling: tuple[int, ...] | None = None
    method: str = "face-sum"


def validate_dice(rows) -> DiceSet:
    """Normalize raw label rows into a DiceSet, checking every invariant."""
    dice = [tuple(row) for row in rows]
    m = len(dice)
    if m < 2:
        raise FewerThanTwoDice(f"need at least 2 dice, got {m}")
    n = len(dice[0])
    for i, row in enumerate(dice):
        if len(row) != len(dice[0]):
            raise WrongSideCount(
                f"die {ALPHABET[i]} has {len(row)} sides, expected {len(dice[0])}"
            )
    if n < 1:
        raise WrongSideCount("dice need at least one side")
    owner: dict[int, str] = {}
    top = m * n
    for i, row in enumerate(dice):
        letter = ALPHABET[i]
        for label in row:
            if not isinstance(label, int) or label < 1 or label > top:
                raise LabelOutOfRange(
                    f"label {label!r} on die {letter} outside 1..{top}"
                )
            if label in owner:
                raise DuplicateLabel(
                    f"label {label} appears on die {owner[label]} and die {letter}"
                )
            owner[label] = letter
    return DiceSet(tuple(tuple(sorted(row, reverse=True)) for row in dice))


def word_of_dice(dice_set: DiceSet) -> Word:
    """Encode a dice set as its word: position i carries label i's die letter."""
    letters = [""] * (dice_set.m * dice_set.n)
    for i, row in enumerate(dice_set.dice):
        ch = ALPHABET[i]
        for label in row:
            letters[label - 1] = ch
    return Word("".join(letters), dice_set.m)


def dice_of_word(word: Word) -> DiceSet:
    """Decode a word back into the unique dice set it encodes."""
    rows: list[list[int]] = [[] for _ in range(word.m)]
    for pos, ch in enumerate(word.letters, start=1):
        rows[ord(ch) - 97].append(pos)
    return DiceSet(tuple(tuple(reversed(row)) for row in rows))


def _letter_at(word: Word, position: int) -> str:
    if not 1 <= position <= len(word.letters):
        raise PositionOutOfRange(
            f"position {position} outside 1..{len(word.letters)}"
        )
    return word.letters[position - 1]


def q_plus(word: Word, position: int) -> int:
    """Earlier occurrences of the letter this position's die beats in cycle."""
    ch = _letter_at(word, position)
    beaten = ALPHABET[(ord(ch) - 97 + 1) % word.m]
    return word.letters.count(beaten, 0, position - 1)


def q_minus(word: Word, position: int) -> int:
    """Earlier occurrences of the letter whose die beats this one in cycle."""
    ch = _letter_at(word, position)
    beating = ALPHABET[(ord(ch) - 97 - 1) % word.m]
    return word.letters.count(beating, 0, position - 1)


def q_same(word: Word, position: int) -> int:
    """Earlier occurrences of this position's own letter."""
    ch = _letter_at(word, position)
    return word.letters.count(ch, 0, position - 1)


def balance_summary(word: Word) -> BalanceSummary:
    """All per-die q-sums and face-sums of a word in a single pass."""
    m = word.m
    counts = [0] * m
    qplus = [0] * m
    qminus = [0] * m
    qsame = [0] * m
    faces = [0] * m
    for pos, ch in enumerate(word.letters, start=1):
        x = ord(ch) - 97
        qplus[x] += counts[(x + 1) % m]
        qminus[x] += counts[(x - 1) % m]
        qsame[x] += counts[x]
        faces[x] += pos
        counts[x] += 1
    return BalanceSummary(
        m=m,
        n=word.n,
        qplus_sums=tuple(qplus),
        qminus_sums=tuple(qminus),
        qsame_sums=tuple(qsame),
        face_sums=tuple(faces),
    )


def _check_pair(dice_set: DiceSet, x: int, y: int) -> None:
    for index in (x, y):
        if not 0 <= index < dice_set.m:
            raise IndexOutOfRange(f"die index {index} outside 0..{dice_set.m - 1}")
    if x == y:
        raise SameDie(f"die {ALPHABET[x]} cannot play itself")


def beat_count(dice_set: DiceSet, x: int, y: int) -> int:
    """Number of ordered rolls in which die x shows higher than die y.

    Labels are distinct so there are no ties and
    beat_count(x, y) + beat_count(y, x) == n*n.
    """
    _check_pair(dice_set, x, y)
    ascending = dice_set.dice[y][::-1]
    return sum(bisect_left(ascending, u) for u in dice_set.dice[x])


def win_probability(dice_set: DiceSet, x: int, y: int) -> WinOdds:
    """Exact probability that die x beats die y, as wins out of n*n."""
    return WinOdds(beat_count(dice_set, x, y), dice_set.n * dice_set.n)


def face_sums(dice_set: DiceSet) -> tuple[int, ...]:
    """Sum of each die's labels; the total is always m*n*(m*n+1)/2."""
    return tuple(sum(row) for row in dice_set.dice)


def cycle_beat_counts(dice_set: DiceSet) -> tuple[int, ...]:
    """Win counts around the die cycle a>b, b>c, ..., last>a."""
    m = dice_set.m
    return tuple(beat_count(dice_set, i, (i + 1) % m) for i in range(m))


def cycle_odds(dice_set: DiceSet) -> tuple[WinOdds, ...]:
    """Exact odds around the die cycle."""
    n2 = dice_set.n * dice_set.n
    return tuple(WinOdds(w, n2) for w in cycle_beat_counts(dice_set))


def is_balanced(dice_set: DiceSet) -> bool:
    """True when every win probability around the cycle is the same."""
    wins = cycle_beat_counts(dice_set)
    return all(w == wins[0] for w in wins)


def is_nontransitive(dice_set: DiceSet) -> bool:
    """True when every die beats its cycle successor strictly more than half."""
    n2 = dice_set.n * dice_set.n
    return all(2 * w > n2 for w in cycle_beat_counts(dice_set))


def reorder_dice(dice_set: DiceSet, order: tuple[int, ...]) -> DiceSet:
    """Relabel dice: new die i is old die order[i]."""
    if sorted(order) != list(range(dice_set.m)):
        raise IndexOutOfRange(f"{order} is not a permutation of 0..{dice_set.m - 1}")
    return DiceSet(tuple(dice_set.dice[i] for i in order))


def verify(dice_set: DiceSet) -> Verdict:
    """Classify a dice set with at most one pairwise comparison for m=3.

    Three dice are balanced exactly when their face-sums agree, so the
    check is one O(n) sum pass followed by a single pair count; anything
    with a different die count falls back to computing the full cycle
    (``method`` records which route ran). A below-half result on a
    balanced set means the cycle runs backwards: reordering the dice as
    ``suggested_relabeling`` yields a balanced non-transitive set.
    """
    n2 = dice_set.n * dice_set.n
    if dice_set.m == 3:
        method = "face-sum"
        sums = face_sums(dice_set)
        if any(s != sums[0] for s in sums):
            return Verdict(Classification.UNBALANCED, method=method)
        wins = beat_count(dice_set, 0, 1)
    else:
        method = "cycle"
        cycle = cycle_beat_counts(dice_set)
        if any(w != cycle[0] for w in cycle):
            return Verdict(Classification.UNBALANCED, method=method)
        wins = cycle[0]
    odds = WinOdds(wins, n2)
    if 2 * wins == n2:
        return Verdict(Classification.BALANCED_FAIR, odds, method=method)
    if 2 * wins > n2:
        return Verdict(Classification.BALANCED_NONTRANSITIVE, odds, method=method)
    reversal = (0,) + tuple(range(dice_set.m - 1, 0, -1))
    return Verdict(Classification.BALANCED_REVERSE, odds, reversal, method)
