"""Built-in example complexes used by the tests, docs, and CLI.

The first nine names form the bundled corpus; `annulus`, `cycle4`, and
`two_fans` are extra shapes used by walk analyses (a thickened hollow
triangle with nonzero first homology, an even cycle, and the two-triangles-
sharing-an-edge picture).
"""
from __future__ import annotations

from .complexes import SimplicialComplex, build_from_facets

__all__ = ["CORPUS_NAMES", "EXTRA_NAMES", "names", "facets_of", "load"]


def _torus_facets() -> tuple[tuple[int, ...], ...]:
    out = []
    for i in range(7):
        out.append(tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))))
        out.append(tuple(sorted(((i) % 7, (i + 2) % 7, (i + 3) % 7))))
    return tuple(out)


_FACETS: dict[str, tuple[tuple[int, ...], ...]] = {
    "hollow_triangle": ((0, 1), (0, 2), (1, 2)),
    "filled_triangle": ((0, 1, 2),),
    "sphere": ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)),
    "torus": _torus_facets(),
    "mobius": ((0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4), (0, 1, 4)),
    "projective_plane": (
        (0, 1, 4),
        (0, 1, 5),
        (0, 2, 3),
        (0, 2, 5),
        (0, 3, 4),
        (1, 2, 3),
        (1, 2, 4),
        (1, 3, 5),
        (2, 4, 5),
        (3, 4, 5),
    ),
    "two_triangles": ((0, 1, 2), (3, 4, 5)),
    "path": ((0, 1), (1, 2)),
    "cycle": ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)),
    "annulus": ((0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 5), (0, 2, 5), (0, 3, 5)),
    "cycle4": ((0, 1), (1, 2), (2, 3), (0, 3)),
    "two_fans": ((0, 1, 2), (1, 2, 3)),
}

CORPUS_NAMES: tuple[str, ...] = (
    "hollow_triangle",
    "filled_triangle",
    "sphere",
    "torus",
    "mobius",
    "projective_plane",
    "two_triangles",
    "path",
    "cycle",
)

EXTRA_NAMES: tuple[str, ...] = ("annulus", "cycle4", "two_fans")


def names() -> tuple[str, ...]:
    return CORPUS_NAMES + EXTRA_NAMES


def facets_of(name: str) -> tuple[tuple[int, ...], ...]:
    try:
        return _FACETS[name]
    except KeyError:
        known = ", ".join(names())
        raise KeyError(f"unknown complex {name!r}; known names: {known}") from None


def load(name: str) -> SimplicialComplex:
    return build_from_facets(list(facets_of(name)))
