"""Plain-text facet files.

One facet per line as whitespace-separated non-negative integer vertex ids;
'#' starts a comment running to the end of the line; blank lines are
ignored; LF and CRLF both accepted. Parse errors cite the line number.
"""
from __future__ import annotations

from pathlib import Path

from .complexes import SimplicialComplex, build_from_facets

__all__ = ["loads", "load", "dumps", "dump"]


def loads(text: str) -> SimplicialComplex:
    facets: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        ids = []
        for tok in line.split():
            try:
                v = int(tok)
            except ValueError:
                raise ValueError(f"line {lineno}: {tok!r} is not an integer vertex id") from None
            if v < 0:
                raise ValueError(f"line {lineno}: vertex ids must be non-negative, got {v}")
            ids.append(v)
        if len(set(ids)) != len(ids):
            raise ValueError(f"line {lineno}: duplicate vertex in facet {ids}")
        facets.append(tuple(ids))
    if not facets:
        raise ValueError("no facets found")
    return build_from_facets(facets)


def load(path: str | Path) -> SimplicialComplex:
    return loads(Path(path).read_text())


def dumps(K: SimplicialComplex) -> str:
    lines = [" ".join(str(v) for v in f.vertices) for f in K.facets()]
    return "\n".join(lines) + "\n"


def dump(K: SimplicialComplex, path: str | Path) -> None:
    Path(path).write_text(dumps(K))
