"""Edge-list text format.

Comment lines start with ``#`` and blank lines are ignored.  The first
data line is the header ``t n m``; the following m data lines each hold
t whitespace-separated 0-based vertex ids.  Emission is canonical
(header plus lexicographically sorted edges), so parse/emit round-trips
produce byte-identical files.
"""

from __future__ import annotations

from .errors import ParseError
from .hypergraph import Hypergraph


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse edge-list text into a validated Hypergraph.

    Raises :class:`~hgspec.errors.ParseError` carrying the 1-based line
    number of the offending line.
    """
    header = None
    edges = []
    seen = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}")
        if header is None:
            if len(values) != 3:
                raise ParseError(lineno, "header must be 't n m'")
            t, n, m = values
            if t < 2:
                raise ParseError(lineno, f"uniformity t={t} must be >= 2")
            if n < 1:
                raise ParseError(lineno, f"vertex count n={n} must be >= 1")
            if m < 0:
                raise ParseError(lineno, f"edge count m={m} must be >= 0")
            header = (t, n, m)
            continue
        t, n, m = header
        if len(edges) == m:
            raise ParseError(lineno, f"more than {m} edge lines")
        if len(values) != t:
            raise ParseError(lineno, f"expected {t} vertex ids, got "
                                     f"{len(values)}")
        edge = tuple(sorted(values))
        if len(set(edge)) != t:
            raise ParseError(lineno, f"repeated vertex in edge {line!r}")
        if edge[0] < 0 or edge[-1] >= n:
            raise ParseError(lineno, f"vertex id outside [0, {n}) in "
                                     f"{line!r}")
        if edge in seen:
            raise ParseError(lineno, f"duplicate edge {line!r}")
        seen.add(edge)
        edges.append(edge)
    if header is None:
        raise ParseError(last_line or 1, "missing 't n m' header line")
    t, n, m = header
    if len(edges) != m:
        raise ParseError(last_line or 1,
                         f"header promised {m} edges, found {len(edges)}")
    return Hypergraph(n, t, edges)


def emit_hypergraph(h: Hypergraph) -> str:
    """Canonical edge-list text for h (sorted edges, no comments)."""
    lines = [f"{h.t} {h.n} {h.m}"]
    lines.extend(" ".join(str(v) for v in edge) for edge in h.edges)
    return "\n".join(lines) + "\n"
