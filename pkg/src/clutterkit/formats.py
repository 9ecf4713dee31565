"""Flat-file formats: clutters, ideals, complexes, and weighted graphs.

All formats are line based; ``#`` starts a comment and blank lines are
skipped.  Parse errors carry the 1-based line number of the offender.
"""

from __future__ import annotations

from fractions import Fraction

from .clutter import Clutter
from .graphs import WeightedGraph
from .ideals import SquarefreeIdeal
from .simplicial import SimplicialComplex


class FormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def _ints(body: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in body.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {body!r}", lineno) from None


def read_clutter(text: str) -> Clutter:
    """`n d` header, then one circuit per line as space-separated vertices."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing `n d` header", 1)
    lineno, body = lines[0]
    header = _ints(body, lineno)
    if len(header) != 2:
        raise FormatError("header must be `n d`", lineno)
    n, d = header
    circuits = []
    for lineno, body in lines[1:]:
        vs = _ints(body, lineno)
        if len(vs) != d:
            raise FormatError(f"circuit has {len(vs)} vertices, expected {d}", lineno)
        circuits.append(tuple(vs))
    try:
        return Clutter.from_circuits(n, d, circuits)
    except ValueError as exc:
        raise FormatError(str(exc), lines[0][0]) from None


def write_clutter(clutter: Clutter) -> str:
    lines = [f"{clutter.n} {clutter.d}"]
    lines += [" ".join(map(str, e)) for e in clutter.circuits]
    return "\n".join(lines) + "\n"


def read_ideal(text: str) -> SquarefreeIdeal:
    """`n` header, then one squarefree monomial per line as variable indices.

    The line order is kept: it is the candidate quotient order.
    """
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing `n` header", 1)
    lineno, body = lines[0]
    header = _ints(body, lineno)
    if len(header) != 1:
        raise FormatError("header must be a single variable count `n`", lineno)
    n = header[0]
    supports = []
    for lineno, body in lines[1:]:
        vs = _ints(body, lineno)
        if not vs:
            raise FormatError("empty monomial", lineno)
        supports.append(tuple(vs))
    try:
        return SquarefreeIdeal.from_supports(n, supports)
    except ValueError as exc:
        raise FormatError(str(exc), lines[0][0]) from None


def write_ideal(ideal: SquarefreeIdeal) -> str:
    lines = [str(ideal.n)]
    lines += [" ".join(map(str, g.support)) for g in ideal.generators]
    return "\n".join(lines) + "\n"


def read_complex(text: str) -> tuple[SimplicialComplex, list[tuple[int, ...]]]:
    """`n` header, then one facet per line; `-` denotes the empty facet.

    Returns the complex together with the facets in file order (shelling
    verification consumes the listed order).
    """
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing `n` header", 1)
    lineno, body = lines[0]
    header = _ints(body, lineno)
    if len(header) != 1:
        raise FormatError("header must be a single vertex count `n`", lineno)
    n = header[0]
    facets = []
    for lineno, body in lines[1:]:
        if body == "-":
            facets.append(())
            continue
        facets.append(tuple(sorted(_ints(body, lineno))))
    try:
        complex_ = SimplicialComplex(
            n, tuple(sorted(set(facets), key=lambda f: (len(f), f)))
        )
    except ValueError as exc:
        raise FormatError(str(exc), lines[0][0]) from None
    return complex_, facets


def write_complex(complex_: SimplicialComplex) -> str:
    lines = [str(complex_.n)]
    lines += [" ".join(map(str, f)) if f else "-" for f in complex_.facets]
    return "\n".join(lines) + "\n"


def read_weighted_graph(text: str) -> WeightedGraph:
    """Clutter format with d = 2 and a trailing rational weight per edge line."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing `n d` header", 1)
    lineno, body = lines[0]
    header = _ints(body, lineno)
    if len(header) != 2 or header[1] != 2:
        raise FormatError("weighted graphs need header `n 2`", lineno)
    n = header[0]
    edges = []
    for lineno, body in lines[1:]:
        toks = body.split()
        if len(toks) != 3:
            raise FormatError("edge lines are `u v weight`", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
            w = Fraction(toks[2])
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad edge line {body!r}", lineno) from None
        edges.append((u, v, w))
    try:
        return WeightedGraph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc), lines[0][0]) from None


def write_weighted_graph(weighted: WeightedGraph) -> str:
    lines = [f"{weighted.graph.n} 2"]
    for edge, w in zip(weighted.graph.circuits, weighted.weights):
        lines.append(f"{edge[0]} {edge[1]} {w}")
    return "\n".join(lines) + "\n"
