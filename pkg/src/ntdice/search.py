"""Exhaustive word enumeration, census, and tournament realization.

The census walks the full multiset-permutation tree with an iterative
backtracker, maintaining cycle win counts incrementally so each node costs
O(1); only letter-quota pruning applies because the plain non-transitive
count has no sound shortcut. Balanced-only scans over three dice add a
face-sum reachability bound that cuts the tree by orders of magnitude.
Everything visits words in lexicographic order, and parallel runs split the
tree at a fixed prefix depth and merge in prefix order, so results never
depend on the worker count.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterator

from .construct import construct_balanced_nontransitive
from .core import ALPHABET, DiceSet, Word, beat_count, dice_of_word
from .errors import (
    BudgetExceeded,
    ConstructionError,
    NotBalancedNontransitive,
    SidesTooSmall,
    TournamentSpecError,
)

DEFAULT_BUDGET = 10 ** 8

# Prefix length at which the parallel census splits the tree, and the word
# count below which forking is not worth the overhead.
_SPLIT_DEPTH = 3
_PARALLEL_THRESHOLD = 10_000


@dataclass(frozen=True)
class Census:
    """Aggregate counts from one exhaustive scan."""

    n: int
    m: int
    total_words: int
    balanced: int
    nontransitive: int
    balanced_nontransitive: int
    irreducible_bnt: int


@dataclass(frozen=True)
class Tournament:
    """An orientation of the complete graph: (i, j) in edges means i beats j."""

    m: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, m: int, edges) -> "Tournament":
        if m < 2:
            raise TournamentSpecError(f"need at least 2 vertices, got {m}")
        chosen = frozenset(edges)
        for i, j in chosen:
            if i == j or not (0 <= i < m and 0 <= j < m):
                raise TournamentSpecError(f"bad edge ({i}, {j}) for {m} vertices")
        for i in range(m):
            for j in range(i + 1, m):
                forward, backward = (i, j) in chosen, (j, i) in chosen
                if forward and backward:
                    raise TournamentSpecError(
                        f"contradictory directions for pair {i + 1},{j + 1}"
                    )
                if not forward and not backward:
                    raise TournamentSpecError(
                        f"missing direction for pair {i + 1},{j + 1}"
                    )
        return cls(m, chosen)

    @classmethod
    def from_text(cls, text: str) -> "Tournament":
        """Parse a comma-separated edge list like ``1>2,2>3,3>1`` (1-based)."""
        edges = set()
        vertices: set[int] = set()
        for token in text.split(","):
            token = token.strip()
            if not token:
                continue
            parts = token.split(">")
            if len(parts) != 2:
                raise TournamentSpecError(f"cannot parse edge {token!r}")
            try:
                i, j = int(parts[0]), int(parts[1])
            except ValueError:
                raise TournamentSpecError(f"cannot parse edge {token!r}") from None
            if i < 1 or j < 1:
                raise TournamentSpecError(f"vertices are numbered from 1: {token!r}")
            vertices.update((i, j))
            edges.add((i - 1, j - 1))
        if not edges:
            raise TournamentSpecError("empty tournament specification")
        return cls.from_edges(max(vertices), edges)

    def beats(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def out_degrees(self) -> tuple[int, ...]:
        degrees = [0] * self.m
        for i, _ in self.edges:
            degrees[i] += 1
        return tuple(degrees)


def word_count(n: int, m: int) -> int:
    """Number of distinct words: (m*n)! / (n!)^m."""
    return math.factorial(m * n) // math.factorial(n) ** m


def _check_budget(n: int, m: int, budget: int) -> int:
    if n < 1:
        raise ValueError(f"need at least one side, got n={n}")
    if not 2 <= m <= len(ALPHABET):
        raise ValueError(f"alphabet size {m} outside 2..{len(ALPHABET)}")
    total = word_count(n, m)
    if total > budget:
        raise BudgetExceeded(
            f"{total} words at n={n}, m={m} exceed budget {budget}", total
        )
    return total


def _cycle_sums(letters: str, m: int) -> list[int]:
    """Win counts around the die cycle, read off the word in one pass."""
    counts = [0] * m
    sums = [0] * m
    for ch in letters:
        x = ord(ch) - 97
        sums[x] += counts[x + 1 - m if x == m - 1 else x + 1]
        counts[x] += 1
    return sums


def _is_bnt_letters(letters: str, m: int) -> bool:
    n = len(letters) // m
    sums = _cycle_sums(letters, m)
    low = min(sums)
    return low == max(sums) and 2 * low > n * n


def _splits_reducibly(letters: str, m: int) -> bool:
    """True when some cut yields two valid balanced non-transitive words."""
    n = len(letters) // m
    for j in range(1, n):
        cut = m * j
        prefix = letters[:cut]
        if any(prefix.count(ALPHABET[x]) != j for x in range(m)):
            continue
        if _is_bnt_letters(prefix, m) and _is_bnt_letters(letters[cut:], m):
            return True
    return False


def is_irreducible(word: Word) -> bool:
    """True when no cut splits the word into two balanced non-transitive words."""
    if not _is_bnt_letters(word.letters, word.m):
        raise NotBalancedNontransitive(
            f"{word.letters!r} is not balanced non-transitive"
        )
    return not _splits_reducibly(word.letters, word.m)


def iter_words(n: int, m: int = 3, budget: int = DEFAULT_BUDGET) -> Iterator[str]:
    """Yield every word with n of each of the first m letters, lexicographically."""
    _check_budget(n, m, budget)
    remaining = [n] * m
    out: list[str] = []

    def rec(depth: int) -> Iterator[str]:
        if depth == 0:
            yield "".join(out)
            return
        for x in range(m):
            if remaining[x]:
                remaining[x] -= 1
                out.append(ALPHABET[x])
                yield from rec(depth - 1)
                out.pop()
                remaining[x] += 1

    return rec(m * n)


def _census_walk(n: int, m: int, prefix: tuple[int, ...]) -> tuple[list[int], list[str]]:
    """Count and classify every word extending ``prefix`` (letter ids).

    Returns ([total, balanced, nontransitive, bnt], bnt_words). The loop is
    deliberately flat: it is the hot path for the multi-million-word scans.
    """
    mn = m * n
    nsq = n * n
    succ = [(x + 1) % m for x in range(m)]
    remaining = [n] * m
    placed = [0] * m
    cyc = [0] * m
    word = [0] * mn
    total = balanced = nontransitive = bnt = 0
    bnt_words: list[str] = []

    depth = 0
    for x in prefix:
        word[depth] = x
        cyc[x] += placed[succ[x]]
        placed[x] += 1
        remaining[x] -= 1
        depth += 1
    base_depth = depth

    letter = 0
    while True:
        while letter < m and remaining[letter] == 0:
            letter += 1
        if letter == m:
            if depth == base_depth:
                break
            depth -= 1
            letter = word[depth]
            placed[letter] -= 1
            remaining[letter] += 1
            cyc[letter] -= placed[succ[letter]]
            letter += 1
            continue
        word[depth] = letter
        cyc[letter] += placed[succ[letter]]
        placed[letter] += 1
        remaining[letter] -= 1
        depth += 1
        if depth == mn:
            total += 1
            low = min(cyc)
            if 2 * low > nsq:
                nontransitive += 1
                if low == max(cyc):
                    balanced += 1
                    bnt += 1
                    bnt_words.append("".join(ALPHABET[x] for x in word))
            elif low == max(cyc):
                balanced += 1
            depth -= 1
            placed[letter] -= 1
            remaining[letter] += 1
            cyc[letter] -= placed[succ[letter]]
            letter += 1
        else:
            letter = 0
    return [total, balanced, nontransitive, bnt], bnt_words


def _census_worker(args: tuple[int, int, tuple[int, ...]]):
    return _census_walk(*args)


def _branch_prefixes(n: int, m: int, depth: int) -> list[tuple[int, ...]]:
    """All valid length-``depth`` letter-id prefixes, in lexicographic order."""
    prefixes: list[tuple[int, ...]] = []
    counts = [0] * m
    current: list[int] = []

    def rec() -> None:
        if len(current) == depth:
            prefixes.append(tuple(current))
            return
        for x in range(m):
            if counts[x] < n:
                counts[x] += 1
                current.append(x)
                rec()
                current.pop()
                counts[x] -= 1

    rec()
    return prefixes


def _census_parallel(n: int, m: int, jobs: int) -> tuple[list[int], list[str]]:
    depth = min(_SPLIT_DEPTH, m * n - 1)
    prefixes = _branch_prefixes(n, m, depth)
    tasks = [(n, m, p) for p in prefixes]
    with multiprocessing.Pool(processes=min(jobs, len(tasks))) as pool:
        results = pool.map(_census_worker, tasks)
    counts = [0, 0, 0, 0]
    bnt_words: list[str] = []
    for part_counts, part_words in results:
        for i in range(4):
            counts[i] += part_counts[i]
        bnt_words.extend(part_words)
    return counts, bnt_words


def enumerate_words(
    n: int,
    m: int = 3,
    visitor: Callable[[Word], None] | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> Census:
    """Visit every valid word exactly once, in lexicographic order.

    Returns the aggregate census. Without a visitor the walk runs a tight
    counting loop and may fan out over ``jobs`` processes; a visitor forces
    sequential order so it observes the exact lexicographic stream.
    """
    total_expected = _check_budget(n, m, budget)
    if visitor is not None:
        counts = [0, 0, 0, 0]
        bnt_words: list[str] = []
        nsq = n * n
        for letters in iter_words(n, m, budget):
            visitor(Word(letters, m))
            counts[0] += 1
            sums = _cycle_sums(letters, m)
            low = min(sums)
            bal = low == max(sums)
            nt = 2 * low > nsq
            counts[1] += bal
            counts[2] += nt
            if bal and nt:
                counts[3] += 1
                bnt_words.append(letters)
    elif jobs > 1 and total_expected >= _PARALLEL_THRESHOLD:
        counts, bnt_words = _census_parallel(n, m, jobs)
    else:
        counts, bnt_words = _census_walk(n, m, ())
    irreducible = sum(1 for w in bnt_words if not _splits_reducibly(w, m))
    return Census(
        n=n,
        m=m,
        total_words=counts[0],
        balanced=counts[1],
        nontransitive=counts[2],
        balanced_nontransitive=counts[3],
        irreducible_bnt=irreducible,
    )


def balanced_nontransitive_words(
    n: int, m: int = 3, budget: int = DEFAULT_BUDGET
) -> Iterator[str]:
    """Yield every balanced non-transitive word in lexicographic order.

    For three dice, balance forces every face-sum to n(3n+1)/2, so partial
    words whose face-sums are already over budget, or can no longer reach
    it even with the largest remaining positions, are pruned. Other die
    counts fall back to filtering the full stream (face-sums do not
    characterize balance there).
    """
    _check_budget(n, m, budget)
    if m != 3:
        return (
            letters
            for letters in iter_words(n, m, budget)
            if _is_bnt_letters(letters, m)
        )
    return _pruned_bnt_scan(n)


def _pruned_bnt_scan(n: int) -> Iterator[str]:
    mn = 3 * n
    nsq = n * n
    target = n * (3 * n + 1) // 2
    # prefix_sum[i] = 1 + 2 + ... + i, for the reachability bound
    prefix_sum = [0] * (mn + 1)
    for i in range(1, mn + 1):
        prefix_sum[i] = prefix_sum[i - 1] + i

    remaining = [n] * 3
    placed = [0] * 3
    faces = [0] * 3
    cyc = [0] * 3
    word = [0] * mn
    succ = (1, 2, 0)

    def dead(depth: int) -> bool:
        # After `depth` labels are placed, letter x still needs remaining[x]
        # of the positions depth+1 .. mn; its best case takes the largest,
        # its worst case the smallest.
        for x in range(3):
            need = remaining[x]
            best = faces[x] + prefix_sum[mn] - prefix_sum[mn - need]
            worst = faces[x] + prefix_sum[depth + need] - prefix_sum[depth]
            if best < target or worst > target:
                return True
        return False

    depth = 0
    letter = 0
    while True:
        while letter < 3 and remaining[letter] == 0:
            letter += 1
        if letter == 3:
            if depth == 0:
                break
            depth -= 1
            letter = word[depth]
            placed[letter] -= 1
            remaining[letter] += 1
            faces[letter] -= depth + 1
            cyc[letter] -= placed[succ[letter]]
            letter += 1
            continue
        word[depth] = letter
        cyc[letter] += placed[succ[letter]]
        placed[letter] += 1
        remaining[letter] -= 1
        faces[letter] += depth + 1
        depth += 1
        if depth == mn:
            if 2 * min(cyc) > nsq:
                # equal face-sums guarantee balance for three dice
                yield "".join(ALPHABET[x] for x in word)
            depth -= 1
            placed[letter] -= 1
            remaining[letter] += 1
            faces[letter] -= depth + 1
            cyc[letter] -= placed[succ[letter]]
            letter += 1
        elif dead(depth):
            depth -= 1
            placed[letter] -= 1
            remaining[letter] += 1
            faces[letter] -= depth + 1
            cyc[letter] -= placed[succ[letter]]
            letter += 1
        else:
            letter = 0


def majority_digraph(dice_set: DiceSet) -> frozenset[tuple[int, int]]:
    """Directed edge (i, j) whenever die i beats die j strictly more than half.

    Fair pairs contribute no edge, so the result is a tournament exactly
    when no pair is fair.
    """
    n2 = dice_set.n * dice_set.n
    edges = set()
    for i in range(dice_set.m):
        for j in range(i + 1, dice_set.m):
            wins = beat_count(dice_set, i, j)
            if 2 * wins > n2:
                edges.add((i, j))
            elif 2 * wins < n2:
                edges.add((j, i))
    return frozenset(edges)


def realize_k3(tournament: Tournament, n: int) -> DiceSet:
    """Closed-form realization of any 3-vertex tournament by n-sided dice.

    A directed 3-cycle maps onto the constructed balanced non-transitive
    set (n >= 3); an acyclic orientation is a total order, realized by
    consecutive label blocks for any n >= 1.
    """
    if tournament.m != 3:
        raise ValueError(f"closed form covers 3 vertices, got {tournament.m}")
    if n < 1:
        raise SidesTooSmall(f"need at least one side, got {n}")
    degrees = tournament.out_degrees()
    if sorted(degrees) == [1, 1, 1]:
        if n < 3:
            raise SidesTooSmall(
                f"a cyclic tournament needs at least 3 sides, got {n}"
            )
        base = construct_balanced_nontransitive(n, 3)
        # Walk the cycle from vertex 0 and hand out base dice in beat order.
        die_for_vertex = [0] * 3
        vertex = 0
        for die in range(3):
            die_for_vertex[vertex] = die
            vertex = next(j for j in range(3) if tournament.beats(vertex, j))
        result = DiceSet(tuple(base.dice[die_for_vertex[v]] for v in range(3)))
    else:
        # Total order: out-degree ranks strength; strongest takes the top block.
        rows = []
        for vertex in range(3):
            low = degrees[vertex] * n
            rows.append(tuple(range(low + n, low, -1)))
        result = DiceSet(tuple(rows))
    if majority_digraph(result) != tournament.edges:
        raise ConstructionError("realization does not reproduce the tournament")
    return result


def search_realization(
    tournament: Tournament, n: int, budget: int = DEFAULT_BUDGET
) -> DiceSet | None:
    """Lexicographically first dice set whose full majority digraph equals
    the tournament, or None when no n-sided realization exists.

    Backtracking over words with two sound bounds per pair: wins against a
    required-loss opponent may never pass (n*n - 1) // 2, and wins toward a
    required win must still be reachable with at most n new wins per future
    placement.
    """
    m = tournament.m
    _check_budget(n, m, budget)
    mn = m * n
    nsq = n * n
    need = nsq // 2 + 1
    cap = (nsq - 1) // 2
    others = [[y for y in range(m) if y != x] for x in range(m)]
    must_beat = [[tournament.beats(x, y) for y in range(m)] for x in range(m)]

    remaining = [n] * m
    placed = [0] * m
    wins = [[0] * m for _ in range(m)]
    word = [0] * mn

    def push(x: int) -> None:
        row = wins[x]
        for y in others[x]:
            row[y] += placed[y]
        placed[x] += 1
        remaining[x] -= 1

    def pop(x: int) -> None:
        placed[x] -= 1
        remaining[x] += 1
        row = wins[x]
        for y in others[x]:
            row[y] -= placed[y]

    def dead(x: int) -> bool:
        row = wins[x]
        slack = remaining[x] * n
        for y in others[x]:
            if must_beat[x][y]:
                if row[y] + slack < need:
                    return True
            elif row[y] > cap:
                return True
        return False

    depth = 0
    letter = 0
    while True:
        while letter < m and remaining[letter] == 0:
            letter += 1
        if letter == m:
            if depth == 0:
                return None
            depth -= 1
            letter = word[depth]
            pop(letter)
            letter += 1
            continue
        word[depth] = letter
        push(letter)
        depth += 1
        if depth == mn:
            if all(
                wins[x][y] >= need
                for x in range(m)
                for y in others[x]
                if must_beat[x][y]
            ):
                letters = "".join(ALPHABET[x] for x in word)
                return dice_of_word(Word(letters, m))
            depth -= 1
            pop(letter)
            letter += 1
        elif dead(letter):
            depth -= 1
            pop(letter)
            letter += 1
        else:
            letter = 0
