"""A line-oriented straightedge construction language.

One command per line, ``#`` starts a comment::

    square A B C D from 0 0 side 60
    line AC through A C
    line BD through B D
    intersect O AC BD
    midpoint L A O
    perp lL through L to AC
    triangle T1 O L M
    assert_area T1 225

Names live in one namespace, must be defined before use and cannot be
redefined.  Rationals are written ``-?INT`` or ``-?INT/POSINT``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from . import geometry as geo
from .errors import DomainError, GeometryError, ParseError, WedgeError
from .numeric import format_rat, parse_rat

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
RAT_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?\Z")

NAME, RAT = "NAME", "RAT"

# argument layout per command; bare strings are required keywords
SIGNATURES: dict[str, tuple[str, ...]] = {
    "point": (NAME, RAT, RAT),
    "square": (NAME, NAME, NAME, NAME, "from", RAT, RAT, "side", RAT),
    "line": (NAME, "through", NAME, NAME),
    "perp": (NAME, "through", NAME, "to", NAME),
    "midpoint": (NAME, NAME, NAME),
    "intersect": (NAME, NAME, NAME),
    "segment": (NAME, NAME),
    "triangle": (NAME, NAME, NAME, NAME),
    "assert_area": (NAME, RAT),
    "assert_sq_dist": (NAME, NAME, RAT),
}

# (kinds of names defined, kinds expected for each referenced name), by arg index
_DEFINES = {
    "point": {0: "point"},
    "square": {0: "point", 1: "point", 2: "point", 3: "point"},
    "line": {0: "line"},
    "perp": {0: "line"},
    "midpoint": {0: "point"},
    "intersect": {0: "point"},
    "triangle": {0: "triangle"},
}
_USES = {
    "line": {1: "point", 2: "point"},
    "perp": {1: "point", 2: "line"},
    "midpoint": {1: "point", 2: "point"},
    "intersect": {1: "line", 2: "line"},
    "segment": {0: "point", 1: "point"},
    "triangle": {1: "point", 2: "point", 3: "point"},
    "assert_area": {0: "triangle"},
    "assert_sq_dist": {0: "point", 1: "point"},
}


@dataclass(frozen=True)
class Command:
    """One parsed command; ``args`` omit keywords, rationals are Fractions.

    Source positions are carried for diagnostics but ignored by ``==``.
    """

    op: str
    args: tuple
    line: int = field(default=0, compare=False)
    column: int = field(default=1, compare=False)
    arg_columns: tuple[int, ...] = field(default=(), compare=False)

    def __str__(self):
        return format_command(self)


@dataclass(frozen=True)
class Script:
    commands: tuple[Command, ...]

    def __iter__(self):
        return iter(self.commands)

    def __len__(self):
        return len(self.commands)


def _tokens(line: str):
    for m in re.finditer(r"\S+", line):
        yield m.group(), m.start() + 1


def parse_script(text: str) -> Script:
    env: dict[str, str] = {}
    commands = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = list(_tokens(body))
        if not toks:
            continue
        (op, col), rest = toks[0], toks[1:]
        if op not in SIGNATURES:
            raise ParseError("unknown command", line=lineno, column=col, token=op)
        sig = SIGNATURES[op]
        if len(rest) != len(sig):
            raise ParseError(
                f"{op} takes {len(sig)} arguments, got {len(rest)}",
                line=lineno,
                column=col,
                token=op,
            )
        args, cols = [], []
        for want, (tok, tcol) in zip(sig, rest):
            if want == NAME:
                if not NAME_RE.match(tok):
                    raise ParseError("malformed name", line=lineno, column=tcol, token=tok)
                args.append(tok)
                cols.append(tcol)
            elif want == RAT:
                if not RAT_RE.match(tok):
                    raise ParseError("malformed rational", line=lineno, column=tcol, token=tok)
                try:
                    args.append(parse_rat(tok))
                except ParseError as exc:
                    raise ParseError(exc.message, line=lineno, column=tcol, token=tok) from None
                cols.append(tcol)
            elif tok != want:
                raise ParseError(f"expected keyword {want!r}", line=lineno, column=tcol, token=tok)
        # name resolution
        for i, kind in _USES.get(op, {}).items():
            name = args[i]
            if name not in env:
                raise ParseError("use before definition", line=lineno, column=cols[i], token=name)
            if env[name] != kind:
                raise ParseError(
                    f"expected a {kind}, {name!r} is a {env[name]}",
                    line=lineno,
                    column=cols[i],
                    token=name,
                )
        for i, kind in _DEFINES.get(op, {}).items():
            name = args[i]
            if name in env:
                raise ParseError("redefinition", line=lineno, column=cols[i], token=name)
            env[name] = kind
        commands.append(Command(op, tuple(args), lineno, col, tuple(cols)))
    return Script(tuple(commands))


def format_command(cmd: Command) -> str:
    it = iter(cmd.args)
    parts = [cmd.op]
    for want in SIGNATURES[cmd.op]:
        if want == NAME:
            parts.append(next(it))
        elif want == RAT:
            parts.append(format_rat(next(it)))
        else:
            parts.append(want)
    return " ".join(parts)


def format_script(script: Script) -> str:
    """Canonical text: one command per line, single spaces, no comments."""
    return "".join(format_command(c) + "\n" for c in script)


class ExecutionError(WedgeError):
    def __init__(self, message, command: Command):
        self.command = command
        self.line = command.line
        self.column = command.column
        super().__init__(f"{command.line}:{command.column}: {message}")


@dataclass(frozen=True)
class AssertionResult:
    command: Command
    expected: Fraction
    actual: Fraction

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} line {self.command.line}: {format_command(self.command)}"
            f" (actual {format_rat(self.actual)})"
        )


@dataclass(frozen=True)
class Execution:
    figure: geo.Figure
    assertions: tuple[AssertionResult, ...]

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.assertions)

    @property
    def failures(self) -> list[AssertionResult]:
        return [a for a in self.assertions if not a.passed]


def execute(script: Script | str) -> Execution:
    """Run a script against the geometry kernel.

    Geometric failures abort with an ExecutionError carrying the command's
    position; failed ``assert_*`` commands are collected instead.
    """
    if isinstance(script, str):
        script = parse_script(script)
    points: dict[str, geo.Point] = {}
    lines: dict[str, geo.Line] = {}
    triangles: list[tuple[str, tuple[str, str, str]]] = []
    segments: list[tuple[str, str]] = []
    results = []
    side = None
    for cmd in script:
        a = cmd.args
        try:
            if cmd.op == "point":
                points[a[0]] = geo.Point(a[1], a[2])
            elif cmd.op == "square":
                x0, y0, s = a[4], a[5], a[6]
                if s <= 0:
                    raise DomainError(f"square side must be positive, got {format_rat(s)}")
                names = a[:4]
                corners = [(x0, y0), (x0 + s, y0), (x0 + s, y0 + s), (x0, y0 + s)]
                for name, (x, y) in zip(names, corners):
                    points[name] = geo.Point(x, y)
                for i in range(4):
                    segments.append((names[i], names[(i + 1) % 4]))
                if side is None:
                    side = s
            elif cmd.op == "line":
                lines[a[0]] = geo.line_through(points[a[1]], points[a[2]])
            elif cmd.op == "perp":
                lines[a[0]] = geo.perpendicular_through(points[a[1]], lines[a[2]])
            elif cmd.op == "midpoint":
                points[a[0]] = geo.midpoint(points[a[1]], points[a[2]])
            elif cmd.op == "intersect":
                points[a[0]] = geo.intersect(lines[a[1]], lines[a[2]])
            elif cmd.op == "segment":
                segments.append((a[0], a[1]))
            elif cmd.op == "triangle":
                vs = (a[1], a[2], a[3])
                if geo.signed_area([points[v] for v in vs]) == 0:
                    raise GeometryError(f"triangle {a[0]} has collinear vertices")
                triangles.append((a[0], vs))
            elif cmd.op == "assert_area":
                tri = dict(triangles)[a[0]]
                actual = geo.polygon_area([points[v] for v in tri])
                results.append(AssertionResult(cmd, a[1], actual))
            elif cmd.op == "assert_sq_dist":
                actual = geo.sq_dist(points[a[0]], points[a[1]])
                results.append(AssertionResult(cmd, a[2], actual))
        except (GeometryError, DomainError) as exc:
            raise ExecutionError(str(exc), cmd) from exc
        except KeyError as exc:
            # only reachable for scripts built by hand rather than parsed
            raise ExecutionError(f"undefined name {exc.args[0]!r}", cmd) from exc
    fig = geo.Figure(points, segments, triangles, side)
    return Execution(fig, tuple(results))


def builtin_scripts() -> dict[str, str]:
    """Bundled script templates by name; ``$side`` is left unsubstituted."""
    out = {}
    for entry in sorted(resources.files("wedge").joinpath("scripts").iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".ct"):
            out[entry.name[:-3]] = entry.read_text(encoding="utf-8")
    return out


def substitute_side(text: str, side) -> str:
    return text.replace("$side", format_rat(side))


def load_builtin(name: str, side) -> Script:
    return parse_script(substitute_side(builtin_scripts()[name], side))
