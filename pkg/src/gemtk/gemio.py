"""Line-oriented text format for colored graphs.

    gem 1
    colors 3
    vertices 8
    color 0: 0-1 2-3 4-5 6-7
    color 1: 0-2 1-3 4-6 5-7
    color 2: 0-4 1-5 2-6 3-7

Comments start with '#', blank lines are ignored, vertex ids are 0-based.
The writer sorts pairs and colors ascending, so parse(write(g)) == g and the
written form is a fixed point of the round trip.
"""

from __future__ import annotations

import re

from .graphs import ColoredGraph, validate

_PAIR_RE = re.compile(r"^(\d+)-(\d+)$")


class GemParseError(ValueError):
    """Syntax error with its source location."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield lineno, body


def parse_gem(text: str) -> ColoredGraph:
    """Parse a gem file; syntax errors carry line/column, semantic defects
    are raised by validation."""
    lines = list(_significant_lines(text))
    if not lines:
        raise GemParseError(1, 1, "empty file")

    def fail(lineno: int, body: str, token: str, message: str):
        column = body.find(token) + 1 if token and token in body else 1
        raise GemParseError(lineno, column, message)

    pos = 0

    def expect(pattern: str, description: str) -> tuple[int, str, re.Match]:
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 1
            raise GemParseError(last, 1, f"unexpected end of file, expected {description}")
        lineno, body = lines[pos]
        match = re.fullmatch(pattern, body.strip())
        if not match:
            fail(lineno, body, body.strip(), f"expected {description!r}, got {body.strip()!r}")
        pos += 1
        return lineno, body, match

    _, _, m = expect(r"gem\s+(\d+)", "gem <version>")
    version = int(m.group(1))
    if version != 1:
        raise GemParseError(lines[0][0], 1, f"unsupported format version {version}")
    _, _, m = expect(r"colors\s+(\d+)", "colors <count>")
    color_count = int(m.group(1))
    _, _, m = expect(r"vertices\s+(\d+)", "vertices <count>")
    vertex_count = int(m.group(1))

    pairings: dict[int, list[tuple[int, int]]] = {}
    while pos < len(lines):
        lineno, body = lines[pos]
        pos += 1
        m = re.fullmatch(r"color\s+(\d+)\s*:(.*)", body.strip())
        if not m:
            fail(lineno, body, body.strip(), "expected 'color <c>: a-b a-b ...'")
        color = int(m.group(1))
        if color >= color_count:
            fail(
                lineno,
                body,
                m.group(1),
                f"color {color} but the header declares colors {color_count}",
            )
        if color in pairings:
            fail(lineno, body, m.group(1), f"duplicate pairing line for color {color}")
        pairs = []
        for token in m.group(2).split():
            pm = _PAIR_RE.match(token)
            if not pm:
                fail(lineno, body, token, f"malformed pair {token!r}, expected 'a-b'")
            pairs.append((int(pm.group(1)), int(pm.group(2))))
        pairings[color] = pairs

    return validate(color_count, vertex_count, pairings)


def write_gem(graph: ColoredGraph) -> str:
    """Serialize with sorted pairs and ascending colors (round-trip stable)."""
    lines = [
        "gem 1",
        f"colors {graph.color_count}",
        f"vertices {graph.vertex_count}",
    ]
    for c in graph.colors:
        pairs = " ".join(f"{a}-{b}" for a, b in graph.pairs(c))
        lines.append(f"color {c}: {pairs}")
    return "\n".join(lines) + "\n"
