"""Line-oriented text formats for transformations and automata.

Transformation list files: one map per line as ``[i1,i2,...,in]``; an
optional first line ``n <size>`` declares the state count; ``#`` starts a
comment, either on its own line or trailing.

Automaton files::

    states 5
    alphabet a1 a2 a3 a4
    initial 1
    final 5
    trans 1 a1 5

For a DFA every (state, symbol) pair appears exactly once among the trans
lines and ``initial`` names one state.  For an NFA ``initial`` may list
several states and trans lines may repeat or omit a pair.  Emission is
deterministic, so emitted files are byte-stable.
"""

from __future__ import annotations

from typing import Sequence

from .automata import Dfa, Nfa
from .errors import ParseError
from .transformations import Transformation
from .witnesses import WitnessBundle

__all__ = [
    "parse_transformation",
    "parse_transformation_list",
    "emit_transformation_list",
    "parse_dfa",
    "emit_dfa",
    "parse_nfa",
    "emit_nfa",
    "emit_bundle",
]


def parse_transformation(text: str) -> Transformation:
    """Parse a single ``[i1,...,in]`` image sequence."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"expected a bracketed image sequence, got {text.strip()!r}")
    body = s[1:-1].strip()
    if not body:
        raise ParseError("empty image sequence")
    images = []
    for piece in body.split(","):
        piece = piece.strip()
        if not piece.isdigit():
            raise ParseError(f"bad image value {piece!r}")
        images.append(int(piece))
    try:
        return Transformation(images)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_transformation_list(text: str) -> list[Transformation]:
    """Parse a transformation list file; all maps must share one n."""
    lines = _significant_lines(text)
    declared = None
    if lines and lines[0][1].split()[0] == "n":
        lineno, line = lines[0]
        parts = line.split()
        if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
            raise ParseError(f"line {lineno}: bad size declaration {line!r}")
        declared = int(parts[1])
        lines = lines[1:]
    maps = []
    for lineno, line in lines:
        try:
            t = parse_transformation(line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if declared is None:
            declared = t.n
        if t.n != declared:
            raise ParseError(f"line {lineno}: expected {declared} states, got {t.n}")
        maps.append(t)
    return maps


def emit_transformation_list(
    maps: Sequence[Transformation], names: Sequence[str] | None = None
) -> str:
    """Render a transformation list file; optional names become trailing
    comments."""
    if not maps:
        raise ValueError("nothing to emit")
    if names is not None and len(names) != len(maps):
        raise ValueError("need exactly one name per transformation")
    lines = [f"n {maps[0].n}"]
    for i, t in enumerate(maps):
        if names is not None:
            lines.append(f"{t}  # {names[i]}")
        else:
            lines.append(str(t))
    return "\n".join(lines) + "\n"


def _parse_automaton_lines(text: str) -> tuple[int, tuple[str, ...], list[int], list[int], list[tuple[int, str, int]]]:
    lines = _significant_lines(text)
    n = None
    alphabet: tuple[str, ...] | None = None
    initials: list[int] | None = None
    finals: list[int] | None = None
    trans: list[tuple[int, str, int]] = []

    def state(token: str, lineno: int) -> int:
        if not token.isdigit() or int(token) < 1:
            raise ParseError(f"line {lineno}: bad state {token!r}")
        value = int(token)
        if n is not None and value > n:
            raise ParseError(f"line {lineno}: state {value} outside 1..{n}")
        return value

    for lineno, line in lines:
        parts = line.split()
        keyword, rest = parts[0], parts[1:]
        if keyword == "states":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate states line")
            if len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
                raise ParseError(f"line {lineno}: bad states line {line!r}")
            n = int(rest[0])
        elif keyword == "alphabet":
            if alphabet is not None:
                raise ParseError(f"line {lineno}: duplicate alphabet line")
            if not rest:
                raise ParseError(f"line {lineno}: empty alphabet")
            if len(set(rest)) != len(rest):
                raise ParseError(f"line {lineno}: repeated symbol in alphabet")
            alphabet = tuple(rest)
        elif keyword == "initial":
            if initials is not None:
                raise ParseError(f"line {lineno}: duplicate initial line")
            initials = [state(tok, lineno) for tok in rest]
        elif keyword == "final":
            if finals is not None:
                raise ParseError(f"line {lineno}: duplicate final line")
            finals = [state(tok, lineno) for tok in rest]
        elif keyword == "trans":
            if len(rest) != 3:
                raise ParseError(f"line {lineno}: expected 'trans STATE SYMBOL STATE'")
            trans.append((state(rest[0], lineno), rest[1], state(rest[2], lineno)))
        else:
            raise ParseError(f"line {lineno}: unknown keyword {keyword!r}")

    if n is None:
        raise ParseError("missing states line")
    if alphabet is None:
        raise ParseError("missing alphabet line")
    if initials is None:
        raise ParseError("missing initial line")
    if finals is None:
        raise ParseError("missing final line")
    for q, a, t in trans:
        if a not in alphabet:
            raise ParseError(f"unknown symbol {a!r} in transition")
        for s in (q, t):
            if s > n:
                raise ParseError(f"state {s} outside 1..{n}")
    for q in initials + finals:
        if q > n:
            raise ParseError(f"state {q} outside 1..{n}")
    return n, alphabet, initials, finals, trans


def parse_dfa(text: str) -> Dfa:
    """Parse a complete DFA; every (state, symbol) pair must appear exactly
    once among the trans lines."""
    n, alphabet, initials, finals, trans = _parse_automaton_lines(text)
    if len(initials) != 1:
        raise ParseError(f"a DFA needs exactly one initial state, got {len(initials)}")
    table: dict[tuple[int, str], int] = {}
    for q, a, t in trans:
        if (q, a) in table:
            raise ParseError(f"duplicate transition for state {q} on symbol {a!r}")
        table[(q, a)] = t
    for q in range(1, n + 1):
        for a in alphabet:
            if (q, a) not in table:
                raise ParseError(f"missing transition for state {q} on symbol {a!r}")
    delta = tuple(
        tuple(table[(q, a)] for a in alphabet) for q in range(1, n + 1)
    )
    try:
        return Dfa(n, alphabet, delta, initials[0], frozenset(finals))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_nfa(text: str) -> Nfa:
    """Parse an NFA; trans lines may repeat or omit (state, symbol) pairs."""
    n, alphabet, initials, finals, trans = _parse_automaton_lines(text)
    rows: list[list[set[int]]] = [[set() for _ in alphabet] for _ in range(n)]
    position = {a: i for i, a in enumerate(alphabet)}
    for q, a, t in trans:
        rows[q - 1][position[a]].add(t)
    try:
        return Nfa(
            n,
            alphabet,
            tuple(tuple(frozenset(e) for e in row) for row in rows),
            frozenset(initials),
            frozenset(finals),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def emit_dfa(d: Dfa) -> str:
    lines = [
        f"states {d.n}",
        "alphabet " + " ".join(d.alphabet),
        f"initial {d.initial}",
        ("final " + " ".join(str(q) for q in sorted(d.finals))).rstrip(),
    ]
    for q in range(1, d.n + 1):
        for i, a in enumerate(d.alphabet):
            lines.append(f"trans {q} {a} {d.delta[q - 1][i]}")
    return "\n".join(lines) + "\n"


def emit_nfa(m: Nfa) -> str:
    lines = [
        f"states {m.n}",
        "alphabet " + " ".join(m.alphabet),
        ("initial " + " ".join(str(q) for q in sorted(m.initials))).rstrip(),
        ("final " + " ".join(str(q) for q in sorted(m.finals))).rstrip(),
    ]
    for q in range(1, m.n + 1):
        for i, a in enumerate(m.alphabet):
            for t in sorted(m.delta[q - 1][i]):
                lines.append(f"trans {q} {a} {t}")
    return "\n".join(lines) + "\n"


def emit_bundle(bundle: WitnessBundle) -> str:
    """Render any witness bundle in its natural format."""
    payload = bundle.payload
    if isinstance(payload, Dfa):
        return emit_dfa(payload)
    if isinstance(payload, tuple):
        names = [name for name, _ in payload]
        maps = [t for _, t in payload]
        return emit_transformation_list(maps, names=names)
    return emit_transformation_list(list(payload.elements))
