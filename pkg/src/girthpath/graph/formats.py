"""Edge-list, JSON, CSV and DOT formats for digraphs."""

import csv
import io
import json
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader

from ..core.errors import ParseError
from ..core.file_reader import read_file
from ..core.types import Arc, JSONDict
from .digraph import Digraph

JSON_FORMAT_TAG = "girthpath-digraph"

# Set up Jinja2 environment
template_dir = Path(__file__).parent.parent / "templates"
env = Environment(loader=FileSystemLoader(template_dir), keep_trailing_newline=True)


def canonical(digraph: Digraph) -> Digraph:
    """Same digraph with arcs sorted lexicographically."""
    return Digraph(digraph.vertex_count, tuple(sorted(digraph.arcs)))


def to_edge_list(digraph: Digraph) -> str:
    """Canonical edge-list text: ``n m`` header then sorted ``u v`` lines."""
    arcs = sorted(digraph.arcs)
    lines = [f"{digraph.vertex_count} {len(arcs)}"]
    lines.extend(f"{tail} {head}" for tail, head in arcs)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Digraph:
    """Parse edge-list text. The result is not validated.

    Raises:
        ParseError: If the header or an arc line is malformed or the arc count
            does not match the header
    """
    rows: list[tuple[int, list[str]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            rows.append((number, content.split()))

    if not rows:
        raise ParseError("Edge list is empty (missing 'n m' header)")

    header_line, header = rows[0]
    if len(header) != 2:
        raise ParseError(f"Line {header_line}: header must be 'n m', got {' '.join(header)!r}")
    n, m = (_parse_int(token, header_line) for token in header)
    if n < 0 or m < 0:
        raise ParseError(f"Line {header_line}: counts must be non-negative")

    arcs: list[Arc] = []
    for number, tokens in rows[1:]:
        if len(tokens) != 2:
            raise ParseError(f"Line {number}: arc must be 'u v', got {' '.join(tokens)!r}")
        arcs.append((_parse_int(tokens[0], number), _parse_int(tokens[1], number)))

    if len(arcs) != m:
        raise ParseError(f"Header announces {m} arcs but {len(arcs)} were listed")
    return Digraph(n, tuple(arcs))


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"Line {line}: {token!r} is not an integer") from e


def to_json_document(digraph: Digraph, manifest: JSONDict | None = None) -> JSONDict:
    document: JSONDict = {
        "format": JSON_FORMAT_TAG,
        "vertex_count": digraph.vertex_count,
        "arcs": [[tail, head] for tail, head in sorted(digraph.arcs)],
    }
    if manifest is not None:
        document["manifest"] = manifest
    return document


def to_json(digraph: Digraph, manifest: JSONDict | None = None) -> str:
    return json.dumps(to_json_document(digraph, manifest), indent=2, sort_keys=True) + "\n"


def parse_json(text: str) -> Digraph:
    """Parse a JSON digraph document. The result is not validated.

    Raises:
        ParseError: If the document is not a girthpath digraph
    """
    try:
        document: Any = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e}") from e

    if not isinstance(document, dict) or document.get("format") != JSON_FORMAT_TAG:
        raise ParseError(f"JSON document is not tagged '{JSON_FORMAT_TAG}'")
    try:
        n = int(document["vertex_count"])
        arcs = tuple((int(tail), int(head)) for tail, head in document["arcs"])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed digraph document: {e}") from e
    return Digraph(n, arcs)


def to_csv(digraph: Digraph) -> str:
    """Arc table with a ``tail,head`` header."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["tail", "head"])
    writer.writerows(sorted(digraph.arcs))
    return buffer.getvalue()


def to_dot(digraph: Digraph, name: str = "D") -> str:
    """DOT text for visualization; arc direction preserved."""
    template = env.get_template("digraph.dot.j2")
    return template.render(
        name=name,
        vertex_count=digraph.vertex_count,
        arcs=sorted(digraph.arcs),
    )


def parse_instance(text: str, suffix: str) -> Digraph:
    """Parse by file suffix: ``.json`` documents, anything else as edge list."""
    if suffix.lower() == ".json":
        return parse_json(text)
    return parse_edge_list(text)


def read_instance(file_path: str | Path) -> Digraph:
    """Read an edge-list or JSON instance file. The result is not validated."""
    return parse_instance(read_file(file_path), Path(file_path).suffix)
