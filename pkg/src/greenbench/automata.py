"""Complete DFAs and NFAs over states {1, ..., n}.

Covers trimming, Moore minimization with canonical breadth-first state
numbering, reversal, subset construction, transition and syntactic
semigroups, and the unique-maximal-state test for piecewise-testable
languages (Simon's condition).
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ._util import UnionFind
from .errors import DimensionError, InternalError, ResourceLimitError
from .partitions import Partition
from .semigroups import (
    DEFAULT_CLOSURE_CAP,
    TransformationSemigroup,
    close,
    is_h_trivial,
    is_j_trivial,
    is_l_trivial,
    is_r_trivial,
    monoid_completion,
)
from .transformations import Transformation

__all__ = [
    "Dfa",
    "Nfa",
    "SimonResult",
    "AnalysisReport",
    "dfa_from_transformations",
    "letter_transformation",
    "run_word",
    "accepts",
    "nfa_accepts",
    "trim_reachable",
    "minimize",
    "quotient_complexity",
    "transition_semigroup",
    "syntactic_semigroup",
    "is_partially_ordered",
    "nondecreasing_certificate",
    "relabel_states",
    "letter_components",
    "simon_component_check",
    "reverse",
    "determinize",
    "reachable_subsets",
    "reversal_complexity",
    "analyze",
    "DEFAULT_SUBSET_CAP",
    "DEFAULT_SIMON_CAP",
]

DEFAULT_SUBSET_CAP = 24
DEFAULT_SIMON_CAP = 16


def _check_alphabet(alphabet: tuple[str, ...]) -> None:
    if not alphabet:
        raise ValueError("alphabet must not be empty")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError("alphabet symbols must be distinct")
    for a in alphabet:
        if not a or "#" in a or any(c.isspace() for c in a):
            raise ValueError(f"bad symbol name {a!r}")


def _check_states(n: int, states: Iterable[int], what: str) -> None:
    for q in states:
        if not 1 <= q <= n:
            raise ValueError(f"{what} {q} outside 1..{n}")


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton.

    ``delta[q - 1][i]`` is the successor of state q on ``alphabet[i]``.
    Treat instances as immutable.
    """

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 1:
            raise ValueError(f"need at least one state, got {self.n}")
        _check_alphabet(self.alphabet)
        if len(self.delta) != self.n:
            raise ValueError(f"expected {self.n} transition rows, got {len(self.delta)}")
        for row in self.delta:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row length does not match alphabet")
            _check_states(self.n, row, "transition target")
        _check_states(self.n, [self.initial], "initial state")
        _check_states(self.n, self.finals, "final state")

    def step(self, state: int, symbol_index: int) -> int:
        return self.delta[state - 1][symbol_index]


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton; delta entries are target sets."""

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[frozenset[int], ...], ...]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "delta", tuple(tuple(frozenset(e) for e in row) for row in self.delta)
        )
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 1:
            raise ValueError(f"need at least one state, got {self.n}")
        _check_alphabet(self.alphabet)
        if len(self.delta) != self.n:
            raise ValueError(f"expected {self.n} transition rows, got {len(self.delta)}")
        for row in self.delta:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row length does not match alphabet")
            for entry in row:
                _check_states(self.n, entry, "transition target")
        _check_states(self.n, self.initials, "initial state")
        _check_states(self.n, self.finals, "final state")


def dfa_from_transformations(
    maps: Sequence[tuple[str, Transformation]], initial: int, finals: Iterable[int]
) -> Dfa:
    """DFA whose letters act as the given named transformations."""
    if not maps:
        raise ValueError("need at least one letter")
    n = maps[0][1].n
    for _, t in maps:
        if t.n != n:
            raise DimensionError(f"letter {t} acts on {t.n} states, expected {n}")
    alphabet = tuple(name for name, _ in maps)
    delta = tuple(
        tuple(t.images[q] for _, t in maps) for q in range(n)
    )
    return Dfa(n, alphabet, delta, initial, frozenset(finals))


def letter_transformation(d: Dfa, symbol: str) -> Transformation:
    """The transformation induced on states by one input symbol."""
    try:
        i = d.alphabet.index(symbol)
    except ValueError:
        raise ValueError(f"unknown symbol {symbol!r}") from None
    return Transformation(row[i] for row in d.delta)


def _symbol_indices(alphabet: tuple[str, ...], word: Iterable[str]) -> list[int]:
    index = {a: i for i, a in enumerate(alphabet)}
    out = []
    for a in word:
        if a not in index:
            raise ValueError(f"unknown symbol {a!r}")
        out.append(index[a])
    return out


def run_word(d: Dfa, word: Iterable[str]) -> int:
    """State reached from the initial state on the given word."""
    q = d.initial
    for i in _symbol_indices(d.alphabet, word):
        q = d.delta[q - 1][i]
    return q


def accepts(d: Dfa, word: Iterable[str]) -> bool:
    return run_word(d, word) in d.finals


def nfa_accepts(m: Nfa, word: Iterable[str]) -> bool:
    current = set(m.initials)
    for i in _symbol_indices(m.alphabet, word):
        current = set().union(*(m.delta[q - 1][i] for q in current)) if current else set()
    return bool(current & m.finals)


def _relabel(d: Dfa, new_number: dict[int, int]) -> Dfa:
    """Rebuild d keeping only the states in new_number, renumbered."""
    count = len(new_number)
    rows: list[tuple[int, ...]] = [()] * count
    for old, new in new_number.items():
        rows[new - 1] = tuple(new_number[t] for t in d.delta[old - 1])
    return Dfa(
        count,
        d.alphabet,
        tuple(rows),
        new_number[d.initial],
        frozenset(new_number[q] for q in d.finals if q in new_number),
    )


def relabel_states(d: Dfa, order: Sequence[int]) -> Dfa:
    """Renumber states so that old state order[k] becomes k+1."""
    if sorted(order) != list(range(1, d.n + 1)):
        raise ValueError("order must be a permutation of the states")
    return _relabel(d, {old: new for new, old in enumerate(order, start=1)})


def trim_reachable(d: Dfa) -> Dfa:
    """Drop states unreachable from the initial state, renumbering the rest
    1..m in their original relative order."""
    seen = {d.initial}
    stack = [d.initial]
    while stack:
        q = stack.pop()
        for t in d.delta[q - 1]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    if len(seen) == d.n:
        return d
    keep = sorted(seen)
    return _relabel(d, {old: new for new, old in enumerate(keep, start=1)})


def _bfs_renumber(d: Dfa) -> Dfa:
    """Canonical numbering: breadth-first from the initial state, exploring
    symbols in alphabet order."""
    number = {d.initial: 1}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for t in d.delta[q - 1]:
            if t not in number:
                number[t] = len(number) + 1
                queue.append(t)
    if len(number) != d.n:
        raise InternalError("breadth-first numbering missed an unreachable state")
    return _relabel(d, number)


def minimize(d: Dfa) -> Dfa:
    """Language-equivalent minimal DFA via Moore partition refinement,
    with canonical breadth-first state numbering."""
    d = trim_reachable(d)
    cls = [1 if q in d.finals else 0 for q in range(1, d.n + 1)]
    if max(cls) == 0 or min(cls) == 1:
        cls = [0] * d.n
    count = len(set(cls))
    while True:
        sig_id: dict[tuple[int, ...], int] = {}
        new = []
        for q in range(d.n):
            sig = (cls[q],) + tuple(cls[t - 1] for t in d.delta[q])
            if sig not in sig_id:
                sig_id[sig] = len(sig_id)
            new.append(sig_id[sig])
        if len(sig_id) == count:
            break
        cls, count = new, len(sig_id)
    reps = {}
    for q in range(d.n):
        reps.setdefault(cls[q], q)
    rows = []
    for c in range(count):
        q = reps[c]
        rows.append(tuple(cls[t - 1] + 1 for t in d.delta[q]))
    quotient = Dfa(
        count,
        d.alphabet,
        tuple(rows),
        cls[d.initial - 1] + 1,
        frozenset(cls[q - 1] + 1 for q in d.finals),
    )
    return _bfs_renumber(quotient)


def quotient_complexity(d: Dfa) -> int:
    """Number of states of the minimal equivalent DFA."""
    return minimize(d).n


def transition_semigroup(d: Dfa, cap: int = DEFAULT_CLOSURE_CAP) -> TransformationSemigroup:
    """Semigroup generated by the letter transformations of d."""
    return close([letter_transformation(d, a) for a in d.alphabet], cap=cap)


def syntactic_semigroup(d: Dfa, cap: int = DEFAULT_CLOSURE_CAP) -> TransformationSemigroup:
    """Transition semigroup of the minimal equivalent DFA."""
    return transition_semigroup(minimize(d), cap=cap)


def _distinct_edges(d: Dfa) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {q: set() for q in range(1, d.n + 1)}
    for q in range(1, d.n + 1):
        for t in d.delta[q - 1]:
            if t != q:
                out[q].add(t)
    return out


def is_partially_ordered(d: Dfa) -> bool:
    """True when reachability between distinct states has no cycle, i.e.
    every loop in the transition graph is a self-loop."""
    edges = _distinct_edges(d)
    indeg = {q: 0 for q in edges}
    for targets in edges.values():
        for t in targets:
            indeg[t] += 1
    queue = [q for q, deg in indeg.items() if deg == 0]
    done = 0
    while queue:
        q = queue.pop()
        done += 1
        for t in edges[q]:
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    return done == d.n


def nondecreasing_certificate(d: Dfa) -> tuple[int, ...] | None:
    """A topological order of the states, as a tuple listing old state
    numbers in their new order, under which every letter becomes a
    non-decreasing map.  None when the DFA is not partially ordered."""
    edges = _distinct_edges(d)
    indeg = {q: 0 for q in edges}
    for targets in edges.values():
        for t in targets:
            indeg[t] += 1
    heap = [q for q, deg in indeg.items() if deg == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        q = heapq.heappop(heap)
        order.append(q)
        for t in sorted(edges[q]):
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(heap, t)
    if len(order) != d.n:
        return None
    return tuple(order)


def letter_components(d: Dfa, letters: Iterable[str]) -> Partition:
    """Partition of the states into connected components of the transition
    graph restricted to the given letters, edges read as undirected."""
    names = tuple(letters)
    if not names:
        raise ValueError("need at least one letter")
    indices = _symbol_indices(d.alphabet, names)
    uf = UnionFind(d.n)
    for q in range(1, d.n + 1):
        for i in indices:
            uf.union(q - 1, d.delta[q - 1][i] - 1)
    return Partition(d.n, [[x + 1 for x in c] for c in uf.components()])


@dataclass(frozen=True)
class SimonResult:
    """Outcome of the unique-maximal-state check.

    ok is None when the check was skipped (alphabet over the cap); then
    reason says why.  When ok is False and a letter subset witnesses the
    failure, witness_letters carries it and witness_states lists the
    maximal states of the first offending component.
    """

    ok: bool | None
    reason: str | None = None
    witness_letters: tuple[str, ...] | None = None
    witness_states: tuple[int, ...] | None = None


def _lex_subsets(k: int) -> Iterator[tuple[int, ...]]:
    # non-empty subsets of 0..k-1 in lexicographic tuple order
    def grow(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, k):
            cur = prefix + (i,)
            yield cur
            yield from grow(cur, i + 1)

    yield from grow((), 0)


def simon_component_check(d: Dfa, cap: int = DEFAULT_SIMON_CAP) -> SimonResult:
    """Test the component condition for piecewise-testable languages on a
    minimal partially-ordered DFA.

    For every non-empty letter subset G, each connected component of the
    G-restricted transition graph must contain exactly one state fixed by
    all letters of G (its maximal state).  The first failing G in
    lexicographic order is reported.  With more than ``cap`` letters the
    check is skipped.
    """
    k = len(d.alphabet)
    if k > cap:
        return SimonResult(ok=None, reason=f"alphabet has {k} symbols, exceeds cap {cap}")
    if not is_partially_ordered(d):
        return SimonResult(ok=False, reason="state reachability is not a partial order")
    for subset in _lex_subsets(k):
        letters = tuple(d.alphabet[i] for i in subset)
        components = letter_components(d, letters)
        for block in components.blocks:
            maximal = tuple(
                q for q in block if all(d.delta[q - 1][i] == q for i in subset)
            )
            if len(maximal) != 1:
                return SimonResult(
                    ok=False, witness_letters=letters, witness_states=maximal
                )
    return SimonResult(ok=True)


def reverse(d: Dfa) -> Nfa:
    """NFA for the reversed language: arrows flipped, finals become
    initials, the old initial state becomes final."""
    rows: list[list[set[int]]] = [
        [set() for _ in d.alphabet] for _ in range(d.n)
    ]
    for q in range(1, d.n + 1):
        for i in range(len(d.alphabet)):
            rows[d.delta[q - 1][i] - 1][i].add(q)
    return Nfa(
        d.n,
        d.alphabet,
        tuple(tuple(frozenset(e) for e in row) for row in rows),
        frozenset(d.finals),
        frozenset([d.initial]),
    )


def _subset_construction(m: Nfa, cap: int) -> tuple[Dfa, list[frozenset[int]]]:
    if m.n > cap:
        raise ResourceLimitError(f"subset construction capped at {cap} states, got {m.n}")
    start = frozenset(m.initials)
    number: dict[frozenset[int], int] = {start: 1}
    order = [start]
    queue = deque([start])
    rows = []
    while queue:
        subset = queue.popleft()
        row = []
        for i in range(len(m.alphabet)):
            target = frozenset().union(*(m.delta[q - 1][i] for q in subset)) if subset else frozenset()
            if target not in number:
                number[target] = len(order) + 1
                order.append(target)
                queue.append(target)
            row.append(number[target])
        rows.append(row)
    finals = frozenset(
        i + 1 for i, subset in enumerate(order) if subset & m.finals
    )
    dfa = Dfa(len(order), m.alphabet, tuple(tuple(r) for r in rows), 1, finals)
    return dfa, order


def determinize(m: Nfa, cap: int = DEFAULT_SUBSET_CAP) -> Dfa:
    """Subset construction; subset states are numbered in breadth-first
    discovery order starting from the initial set."""
    dfa, _ = _subset_construction(m, cap)
    return dfa


def reachable_subsets(m: Nfa, cap: int = DEFAULT_SUBSET_CAP) -> list[frozenset[int]]:
    """The subset states discovered by determinize, in discovery order."""
    _, order = _subset_construction(m, cap)
    return order


def reversal_complexity(d: Dfa, subset_cap: int = DEFAULT_SUBSET_CAP) -> int:
    """Quotient complexity of the reversed language."""
    return quotient_complexity(determinize(reverse(minimize(d)), cap=subset_cap))


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyze pipeline measures about one DFA's language."""

    reachable_states: int
    quotient_complexity: int
    syntactic_complexity: int
    monoid_size: int
    partially_ordered: bool
    r_trivial: bool
    l_trivial: bool
    j_trivial: bool
    h_trivial: bool
    simon: SimonResult


def analyze(
    d: Dfa,
    simon_cap: int = DEFAULT_SIMON_CAP,
    closure_cap: int = DEFAULT_CLOSURE_CAP,
) -> AnalysisReport:
    """Minimize d, compute its syntactic semigroup and classify the
    language.  Internal cross-checks tie the structural facts together:
    J-triviality forces the one-sided trivialities and a partially ordered
    minimal DFA, and must agree with the component check when that ran.
    """
    trimmed = trim_reachable(d)
    minimal = minimize(d)
    semigroup = transition_semigroup(minimal, cap=closure_cap)
    monoid = monoid_completion(semigroup)
    r_ok = is_r_trivial(monoid)
    l_ok = is_l_trivial(monoid)
    j_ok = is_j_trivial(monoid)
    h_ok = is_h_trivial(monoid)
    ordered = is_partially_ordered(minimal)
    simon = simon_component_check(minimal, cap=simon_cap)
    if j_ok and not (r_ok and l_ok and ordered):
        raise InternalError("J-trivial language failed an implied property")
    if simon.ok is not None and simon.ok != j_ok:
        raise InternalError("component check disagrees with J-triviality")
    return AnalysisReport(
        reachable_states=trimmed.n,
        quotient_complexity=minimal.n,
        syntactic_complexity=len(semigroup),
        monoid_size=len(monoid),
        partially_ordered=ordered,
        r_trivial=r_ok,
        l_trivial=l_ok,
        j_trivial=j_ok,
        h_trivial=h_ok,
        simon=simon,
    )
