"""Text forms used by the CLI and reports, and the problem-file parser.

Formats::

    event        {1,3}          ({} is the empty event)
    family       {1,2};{2,3}
    table        [{1},{1,2}]    (events where the table is 1)
    coevent      w3* + w1*w3* + w2*w3*      (0 for the zero coevent)
    matrix       rows of 0/1 digits, one row per line

Problem files hold ``key = value`` lines with keys ``n``, ``precluded``,
``query`` and ``f``.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .coevent import Coevent
from .errors import IndexRangeError, ParseError
from .events import MAX_OUTCOMES, Event, OutcomeSpace
from .gf2 import Gf2Matrix
from .preclusion import PrecludedFamily
from .truth import TruthTable

_EVENT_RE = re.compile(r"\s*\{([^{}]*)\}\s*")
_MONO_RE = re.compile(r"^(?:[wω]_?(\d+)\*)+$")
_FACTOR_RE = re.compile(r"[wω]_?(\d+)\*")


def format_event(a: Event) -> str:
    return str(a)


def _check_index(i: int, n: int, line: int | None, col: int | None) -> int:
    if not 1 <= i <= n:
        raise IndexRangeError(f"outcome {i} not in 1..{n}", line, col)
    return i


def parse_event(text: str, space: OutcomeSpace, line: int | None = None, col: int = 1) -> Event:
    m = _EVENT_RE.fullmatch(text)
    if not m:
        raise ParseError(f"expected an event like {{1,2}}, got {text.strip()!r}", line, col)
    body = m.group(1).strip()
    outcomes = []
    if body:
        offset = col + text.index("{") + 1
        for part in body.split(","):
            token = part.strip()
            if not token.isdigit():
                raise ParseError(f"bad outcome index {token!r}", line, offset)
            outcomes.append(_check_index(int(token), space.n, line, offset))
            offset += len(part) + 1
    return Event.of(space, outcomes)


def _split_events(text: str, sep: str, line: int | None, col: int) -> list[tuple[str, int]]:
    pieces, pos = [], 0
    for chunk in text.split(sep):
        pieces.append((chunk, col + pos))
        pos += len(chunk) + 1
    return pieces


def format_family(fam: PrecludedFamily) -> str:
    return str(fam)


def parse_events_list(text: str, space: OutcomeSpace, line: int | None = None, col: int = 1) -> list[Event]:
    """Semicolon-separated events; empty text gives an empty list."""
    if not text.strip():
        return []
    return [parse_event(chunk, space, line, c) for chunk, c in _split_events(text, ";", line, col)]


def parse_family(text: str, space: OutcomeSpace, line: int | None = None, col: int = 1) -> PrecludedFamily:
    return PrecludedFamily(space, tuple(parse_events_list(text, space, line, col)))


def format_table(t: TruthTable) -> str:
    return "[" + ",".join(str(a) for a in t.ones()) + "]"


def parse_table(text: str, space: OutcomeSpace) -> TruthTable:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"expected a table like [{{1}},{{1,2}}], got {s!r}")
    body = s[1:-1].strip()
    events = []
    if body:
        for chunk in re.findall(r"\{[^{}]*\}", body):
            events.append(parse_event(chunk, space))
        rest = re.sub(r"\{[^{}]*\}", "", body).replace(",", "").strip()
        if rest:
            raise ParseError(f"unexpected text {rest!r} in table")
    if any(not a for a in events):
        raise ParseError("a truth table cannot be 1 on the empty event")
    return TruthTable.from_events(space, events)


def format_coevent(phi: Coevent) -> str:
    monos = phi.monomials()
    if not monos:
        return "0"
    return " + ".join("".join(f"w{i}*" for i in mono) for mono in monos)


def parse_coevent(text: str, space: OutcomeSpace) -> Coevent:
    """Inverse of :func:`format_coevent`; any term order, whitespace ignored, repeats cancel."""
    s = re.sub(r"\s+", "", text)
    if s in ("", "0"):
        return Coevent.zero(space)
    monos = []
    for term in s.split("+"):
        if term == "0":
            continue
        if not _MONO_RE.match(term):
            raise ParseError(f"bad monomial {term!r}; expected e.g. w1* or w1*w2*")
        idx = [int(x) for x in _FACTOR_RE.findall(term)]
        for i in idx:
            _check_index(i, space.n, None, None)
        monos.append(tuple(idx))
    return Coevent.from_monomials(space, monos)


def format_matrix(m: Gf2Matrix) -> str:
    return str(m)


def parse_matrix(text: str) -> Gf2Matrix:
    rows = []
    for k, line in enumerate(text.strip().splitlines(), start=1):
        digits = line.replace(" ", "").replace(",", "")
        if not digits or set(digits) - {"0", "1"}:
            raise ParseError(f"matrix rows must be 0/1 digits, got {line!r}", k)
        rows.append([int(c) for c in digits])
    if len({len(r) for r in rows}) > 1:
        raise ParseError("matrix rows have different lengths")
    return Gf2Matrix.from_lists(rows)


@dataclass
class ProblemSpec:
    n: int
    precluded: PrecludedFamily | None = None
    query_events: list[Event] = field(default_factory=list)
    random_variable: list[float] | None = None

    @property
    def space(self) -> OutcomeSpace:
        return OutcomeSpace(self.n)


_KEYS = ("n", "precluded", "query", "f")


def parse_problem(text: str) -> ProblemSpec:
    entries: dict[str, tuple[str, int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno, len(line) - len(line.lstrip()) + 1)
        key_part, value = line.split("=", 1)
        key = key_part.strip()
        if key not in _KEYS:
            raise ParseError(f"unknown key {key!r}; expected one of {', '.join(_KEYS)}", lineno, 1)
        if key in entries:
            raise ParseError(f"duplicate key {key!r}", lineno, 1)
        entries[key] = (value, lineno, len(key_part) + 2)

    if "n" not in entries:
        raise ParseError("missing required key 'n'")
    value, lineno, col = entries["n"]
    if not value.strip().isdigit():
        raise ParseError(f"n must be a positive integer, got {value.strip()!r}", lineno, col)
    n = int(value)
    if not 1 <= n <= MAX_OUTCOMES:
        raise ParseError(f"n must be in 1..{MAX_OUTCOMES}, got {n}", lineno, col)
    space = OutcomeSpace(n)
    spec = ProblemSpec(n)
    if "precluded" in entries:
        value, lineno, col = entries["precluded"]
        spec.precluded = parse_family(value, space, lineno, col)
    if "query" in entries:
        value, lineno, col = entries["query"]
        spec.query_events = parse_events_list(value, space, lineno, col)
    if "f" in entries:
        value, lineno, col = entries["f"]
        try:
            spec.random_variable = [float(x) for x in value.split(",")]
        except ValueError:
            raise ParseError(f"f must be comma-separated numbers, got {value.strip()!r}", lineno, col) from None
        if len(spec.random_variable) != n:
            raise ParseError(f"f needs {n} values, got {len(spec.random_variable)}", lineno, col)
    return spec


def _format_real(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def render_problem(spec: ProblemSpec) -> str:
    lines = [f"n = {spec.n}"]
    if spec.precluded is not None:
        lines.append(f"precluded = {format_family(spec.precluded)}")
    if spec.query_events:
        lines.append("query = " + ";".join(str(a) for a in spec.query_events))
    if spec.random_variable is not None:
        lines.append("f = " + ",".join(_format_real(x) for x in spec.random_variable))
    return "\n".join(lines) + "\n"
