"""Facet-list file formats.

Text format: one facet per line as whitespace-separated positive integers;
``#`` starts a comment; blank lines are ignored.  JSON format:
``{"name": str, "facets": [[int, ...], ...]}`` with an optional ``colors``
object mapping vertex to color.

Canonical output is bit-exact: facets in rev-lex order (descending-tuple
comparison, which restricts to the usual rev-lex on equal sizes), vertices
ascending within a facet.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complexes import SimplicialComplex, from_facets, revlex_key


def _canonical_facets(cx: SimplicialComplex) -> list[list[int]]:
    return [sorted(f) for f in sorted(cx.facets, key=revlex_key)]


def dumps_text(cx: SimplicialComplex) -> str:
    lines = [" ".join(str(v) for v in f) for f in _canonical_facets(cx)]
    return "\n".join(lines) + ("\n" if lines else "")


def loads_text(text: str) -> SimplicialComplex:
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            facets.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return from_facets(facets)


def dumps_json(cx: SimplicialComplex, name: str = "", colors: dict[int, int] | None = None) -> str:
    obj: dict = {"name": name, "facets": _canonical_facets(cx)}
    if colors is not None:
        obj["colors"] = {str(v): c for v, c in sorted(colors.items())}
    return json.dumps(obj)


def loads_json(text: str) -> SimplicialComplex:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "facets" not in obj:
        raise ValueError("JSON complex needs a 'facets' field")
    return from_facets(obj["facets"])


def loads(text: str) -> SimplicialComplex:
    """Sniff JSON vs text by the leading character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return loads_json(text)
    return loads_text(text)


def load_complex(path) -> tuple[SimplicialComplex, str]:
    """Read a complex from a file; the name is the JSON name or file stem."""
    p = Path(path)
    text = p.read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(text)
        cx = from_facets(obj["facets"])
        return cx, obj.get("name") or p.stem
    return loads_text(text), p.stem


def write_complex(cx: SimplicialComplex, path, fmt: str | None = None,
                  name: str = "", colors: dict[int, int] | None = None) -> None:
    p = Path(path)
    if fmt is None:
        fmt = "json" if p.suffix == ".json" else "text"
    if fmt == "json":
        p.write_text(dumps_json(cx, name or p.stem, colors) + "\n")
    elif fmt == "text":
        p.write_text(dumps_text(cx))
    else:
        raise ValueError(f"unknown format {fmt!r}")
