"""Text format for embedded graphs and for colorings.

Graph files:

    # optional comments
    p <n> <m>
    v <id> <nbr> <nbr> ...      one line per vertex, clockwise order

Ids are 0-based and dense.  serialize() emits vertices in ascending id
order with each rotation rotated to start at its smallest neighbor, so
parse o serialize is the identity on freshly built graphs.

Coloring files are lines of "<id> <color>".
"""

from __future__ import annotations

from .embedding import PlaneGraph, build


class GraphSyntaxError(Exception):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_rotations(text: str) -> list[list[int]]:
    n = m = -1
    rotations: list[list[int]] | None = None
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if rotations is not None:
                raise GraphSyntaxError(lineno, "duplicate header")
            if len(tokens) != 3:
                raise GraphSyntaxError(lineno, "header must be 'p <n> <m>'")
            try:
                n, m = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphSyntaxError(lineno, "non-integer header") from None
            if n < 0 or m < 0:
                raise GraphSyntaxError(lineno, "negative counts")
            rotations = [[] for _ in range(n)]
        elif tokens[0] == "v":
            if rotations is None:
                raise GraphSyntaxError(lineno, "vertex line before header")
            try:
                ids = [int(t) for t in tokens[1:]]
            except ValueError:
                raise GraphSyntaxError(lineno, "non-integer vertex id") from None
            if not ids:
                raise GraphSyntaxError(lineno, "missing vertex id")
            v, nbrs = ids[0], ids[1:]
            if not 0 <= v < n:
                raise GraphSyntaxError(lineno, f"vertex id {v} out of range")
            if v in seen:
                raise GraphSyntaxError(lineno, f"vertex {v} listed twice")
            seen.add(v)
            for w in nbrs:
                if not 0 <= w < n:
                    raise GraphSyntaxError(lineno, f"neighbor {w} out of range")
            rotations[v] = nbrs
        else:
            raise GraphSyntaxError(lineno, f"unknown record '{tokens[0]}'")
    if rotations is None:
        raise GraphSyntaxError(0, "missing header")
    total = sum(len(r) for r in rotations)
    if total != 2 * m:
        raise GraphSyntaxError(0, f"header claims {m} edges, found {total} darts")
    return rotations


def parse(text: str) -> PlaneGraph:
    return build(parse_rotations(text))


def serialize(g: PlaneGraph) -> str:
    """Canonical text form; requires dense ids (no dead vertices)."""
    n = len(g.v_alive)
    if g.n_alive != n:
        raise ValueError("cannot serialize a graph with dead vertex ids")
    lines = [f"p {n} {g.m_alive}"]
    for v in range(n):
        rot = list(g.neighbors(v))
        if rot:
            k = rot.index(min(rot))
            rot = rot[k:] + rot[:k]
        lines.append("v " + " ".join(str(t) for t in (v, *rot)))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphSyntaxError(lineno, "expected '<id> <color>'")
        try:
            v, c = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphSyntaxError(lineno, "non-integer field") from None
        if v in out:
            raise GraphSyntaxError(lineno, f"vertex {v} colored twice")
        out[v] = c
    return out


def format_coloring(coloring: dict[int, int]) -> str:
    return "".join(f"{v} {coloring[v]}\n" for v in sorted(coloring))
