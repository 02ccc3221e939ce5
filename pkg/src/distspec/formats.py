"""graph6 and edge-list input; CSV and JSON certificate reports."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, fields
from pathlib import Path
from typing import IO, Iterable, Iterator, Optional, Union

from .bounds import BoundCertificate
from .graph import Graph, GraphError

CSV_COLUMNS = (
    "graph_id",
    "n",
    "m",
    "diameter",
    "bound_id",
    "kind",
    "applicable",
    "bound_value",
    "observed_value",
    "slack",
    "equality_predicted",
    "equality_observed",
    "boundary",
)
SIGNIFICANT_DIGITS = 12
GRAPH6_HEADER = b">>graph6<<"


class FormatError(ValueError):
    def __init__(self, message: str, position: int, unit: str = "byte"):
        super().__init__(f"{message} (at {unit} {position})")
        self.position = position


# -- graph6 -------------------------------------------------------------------


def _as_bytes(data: Union[str, bytes]) -> bytes:
    if isinstance(data, str):
        try:
            return data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise FormatError("non-ASCII character", exc.start) from None
    return bytes(data)


def decode_graph6(line: Union[str, bytes]) -> Graph:
    raw = _as_bytes(line)
    start = len(GRAPH6_HEADER) if raw.startswith(GRAPH6_HEADER) else 0
    data = raw.rstrip(b"\r\n")
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise FormatError(f"byte {data[i]!r} outside the graph6 alphabet", i)
    pos = start
    if pos >= len(data):
        raise FormatError("missing vertex count", pos)
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    else:
        width = 6 if pos + 1 < len(data) and data[pos + 1] == 126 else 3
        lead = pos + (2 if width == 6 else 1)
        if lead + width > len(data):
            raise FormatError("truncated vertex count", len(data))
        n = 0
        for b in data[lead:lead + width]:
            n = n << 6 | (b - 63)
        pos = lead + width
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[pos:]
    if len(body) < nbytes:
        raise FormatError(f"truncated adjacency data: need {nbytes} bytes, got {len(body)}", len(data))
    if len(body) > nbytes:
        raise FormatError("trailing bytes after adjacency data", pos + nbytes)
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("nonzero padding bits", pos + nbytes - 1)
    return Graph(n, masks)


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 1 << 18:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError(f"graph6 cannot encode n = {n}")


def encode_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_n(g.n))
    acc = 0
    count = 0
    for j in range(1, g.n):
        mj = g.masks[j]
        for i in range(j):
            acc = acc << 1 | (mj >> i & 1)
            count += 1
            if count == 6:
                out.append(acc + 63)
                acc = count = 0
    if count:
        out.append((acc << (6 - count)) + 63)
    return bytes(out)


def read_graph6_lines(lines: Iterable[Union[str, bytes]]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors name the line."""
    for lineno, line in enumerate(lines, 1):
        stripped = _as_bytes(line).strip()
        if not stripped:
            continue
        try:
            yield lineno, decode_graph6(stripped)
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}", lineno, "line") from exc


# -- edge lists ----------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """First data line ``n m``, then ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        content = line.split("#", 1)[0].split()
        if content:
            rows.append((lineno, content))
    if not rows:
        raise FormatError("missing 'n m' header", 1, "line")
    lineno, header = rows[0]
    n, m = _ints(header, 2, lineno)
    if n < 1 or m < 0:
        raise FormatError(f"invalid header n={n} m={m}", lineno, "line")
    if len(rows) - 1 != m:
        raise FormatError(f"header declares {m} edges, found {len(rows) - 1}", rows[-1][0], "line")
    edges = []
    for lineno, content in rows[1:]:
        u, v = _ints(content, 2, lineno)
        if u == v:
            raise FormatError(f"self-loop ({u}, {v})", lineno, "line")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range in ({u}, {v})", lineno, "line")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _ints(tokens: list[str], count: int, lineno: int) -> list[int]:
    if len(tokens) != count:
        raise FormatError(f"expected {count} integers, got {len(tokens)}", lineno, "line")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"non-integer token in {' '.join(tokens)!r}", lineno, "line") from None


def read_edge_list(path: Union[str, Path]) -> Graph:
    return parse_edge_list(Path(path).read_text())


# -- certificate reports ---------------------------------------------------------


@dataclass(frozen=True)
class CertifiedGraph:
    graph_id: str
    n: int
    m: int
    diameter: int
    certificates: tuple[BoundCertificate, ...]

    @classmethod
    def of(cls, graph_id: str, g: Graph, certificates: Iterable[BoundCertificate]) -> "CertifiedGraph":
        return cls(graph_id, g.n, g.m, g.distances.diameter, tuple(certificates))


def format_real(x: Optional[float]) -> str:
    if x is None:
        return ""
    text = f"{x:.{SIGNIFICANT_DIGITS}g}"
    return "0" if text == "-0" else text


def _format_slack(c: BoundCertificate) -> str:
    if c.slack is None:
        return ""
    # slack is only meaningful to the resolution of the printed observed value
    if abs(c.slack) < 10.0 ** -SIGNIFICANT_DIGITS * max(1.0, abs(c.observed_value)):
        return "0"
    return format_real(c.slack)


def _flag(x: Optional[bool]) -> str:
    return "" if x is None else ("true" if x else "false")


def certificate_row(record: CertifiedGraph, c: BoundCertificate) -> list[str]:
    return [
        record.graph_id,
        str(record.n),
        str(record.m),
        str(record.diameter),
        c.bound_id,
        c.kind,
        _flag(c.applicable),
        format_real(c.bound_value),
        format_real(c.observed_value),
        _format_slack(c),
        _flag(c.equality_predicted),
        _flag(c.equality_observed),
        _flag(c.boundary),
    ]


def write_certificates_csv(records: Iterable[CertifiedGraph], sink: IO[str], header: bool = True) -> None:
    writer = csv.writer(sink, lineterminator="\n")
    if header:
        writer.writerow(CSV_COLUMNS)
    for record in records:
        for c in record.certificates:
            writer.writerow(certificate_row(record, c))


def _rounded(x: Optional[float]) -> Optional[float]:
    return None if x is None else float(format_real(x))


def certificate_to_json(c: BoundCertificate) -> dict:
    out = {}
    for f in fields(BoundCertificate):
        value = getattr(c, f.name)
        out[f.name] = _rounded(value) if isinstance(value, float) else value
    if c.slack is not None:
        out["slack"] = float(_format_slack(c))
    return out


def records_to_json(records: Iterable[CertifiedGraph]) -> list[dict]:
    return [
        {
            "graph_id": r.graph_id,
            "n": r.n,
            "m": r.m,
            "diameter": r.diameter,
            "certificates": [certificate_to_json(c) for c in r.certificates],
        }
        for r in records
    ]


def write_certificates_json(records: Iterable[CertifiedGraph], sink: IO[str]) -> None:
    json.dump(records_to_json(records), sink, indent=2)
    sink.write("\n")


def read_certificates_json(source: IO[str]) -> list[CertifiedGraph]:
    out = []
    for item in json.load(source):
        certs = tuple(BoundCertificate(**c) for c in item["certificates"])
        out.append(CertifiedGraph(item["graph_id"], item["n"], item["m"], item["diameter"], certs))
    return out
