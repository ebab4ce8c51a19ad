"""Text cache for group tables and DOT/CSV/JSON exports."""

import csv
import io as _io
import json

import numpy as np

from .errors import ChecksumMismatch, IoError, ParseError, VersionMismatch
from .exact import QSqrt5, parse_number
from .gamma import GammaGraphB, SignedGraph
from .groups import CoxeterSpec, GroupTable, format_key

MAGIC = "BRURIC-CACHE"
VERSION = "v1"

FNV_OFFSET = 0xcbf29ce484222325
FNV_PRIME = 0x100000001b3
MASK64 = (1 << 64) - 1


def fnv1a64(data):
    h = FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * FNV_PRIME) & MASK64
    return h


def _write(path, text, newline=None):
    try:
        with open(path, "w", encoding="utf-8", newline=newline) as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(str(exc)) from exc


# ---------------------------------------------------------------------------
# group cache

def _header(spec):
    parts = [MAGIC, VERSION, spec.family, str(spec.rank)]
    if spec.m is not None:
        parts.append(str(spec.m))
    return " ".join(parts)


def dump_group(g):
    """The cache file contents for ``g`` as a string."""
    lines = [_header(g.spec)]
    act = g.generator_action.T.tolist()
    for i, key in enumerate(g.elements):
        targets = ",".join(map(str, act[i]))
        lines.append(f"{i} {int(g.length[i])} {format_key(key)} {targets}")
    lines.append("reflections " + ",".join(map(str, g.reflections)))
    body = "\n".join(lines) + "\n"
    return body + f"checksum {fnv1a64(body.encode()):016x}\n"


def save_group(g, path):
    _write(path, dump_group(g), newline="\n")


def _parse_key(text, family, lineno):
    try:
        if family in ("H3", "F4", "E6"):
            conv = QSqrt5.parse if family == "H3" else parse_number
            return tuple(tuple(conv(x) for x in part.split(","))
                         for part in text.split("|"))
        return tuple(int(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad element key {text!r}", lineno) from exc


def parse_group(text):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty cache file", 1)
    head = lines[0].split()
    if len(head) < 4 or head[0] != MAGIC:
        raise ParseError("missing cache header", 1)
    if head[1] != VERSION:
        raise VersionMismatch(f"cache version {head[1]}, expected {VERSION}")
    try:
        m = int(head[4]) if len(head) > 4 else None
        spec = CoxeterSpec(head[2], int(head[3]), m)
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad header: {exc}", 1) from exc

    elements, lengths, actions = [], [], []
    lineno = 1
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("reflections"):
            break
        fields = line.split(" ")
        if len(fields) != 4:
            raise ParseError("expected 'index length key targets'", lineno)
        try:
            idx, length = int(fields[0]), int(fields[1])
            targets = [int(x) for x in fields[3].split(",")]
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from exc
        if idx != len(elements):
            raise ParseError(f"expected element {len(elements)}, found {idx}", lineno)
        if len(targets) != spec.rank:
            raise ParseError(f"expected {spec.rank} generator targets", lineno)
        elements.append(_parse_key(fields[2], spec.family, lineno))
        lengths.append(length)
        actions.append(targets)
    else:
        raise ParseError("missing reflections trailer", lineno + 1)

    refl_line = lineno
    try:
        refls = tuple(int(x) for x in lines[refl_line - 1].split(" ", 1)[1].split(",") if x)
    except (ValueError, IndexError) as exc:
        raise ParseError("bad reflections line", refl_line) from exc
    if len(lines) <= refl_line or not lines[refl_line].startswith("checksum "):
        raise ParseError("missing checksum trailer", refl_line + 1)
    if len(lines) > refl_line + 1:
        raise ParseError("unexpected text after checksum", refl_line + 2)
    try:
        stored = int(lines[refl_line].split(" ", 1)[1], 16)
    except ValueError as exc:
        raise ParseError("bad checksum value", refl_line + 1) from exc
    body = "\n".join(lines[:refl_line]) + "\n"
    actual = fnv1a64(body.encode())
    if stored != actual:
        raise ChecksumMismatch(f"checksum {stored:016x} != computed {actual:016x}")

    n = len(elements)
    action = np.array(actions, dtype=np.int64).reshape(n, spec.rank).T.copy()
    if action.size and (action.min() < 0 or action.max() >= n):
        raise ParseError("generator target out of range", 2)
    return GroupTable(spec, elements, np.array(lengths, dtype=np.int64), action, refls)


def load_group(path):
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoError(str(exc)) from exc
    return parse_group(text)


# ---------------------------------------------------------------------------
# exports

def _q(v):
    return '"' + str(v).replace('"', r'\"') + '"'


def dot_text(graph, name="G"):
    """Graphviz text for a Hasse graph, a Gamma graph or a signed graph."""
    out = [f"graph {name} {{"]
    if isinstance(graph, GammaGraphB):
        out += [f"  {_q(a)};" for a in range(1, graph.n + 1)]
        out += [f"  {_q(a)} -- {_q(a)};" for a in graph.loops]
        out += [f"  {_q(a)} -- {_q(b)};" for a, b in graph.plain]
        out += [f"  {_q(a)} -- {_q(b)} [style=dashed];" for a, b in graph.minus]
    elif isinstance(graph, SignedGraph):
        out += [f"  {_q(v)};" for v in graph.vertices]
        out += [f"  {_q(a)} -- {_q(b)};" for a, b in graph.edges]
    else:
        out += [f"  {v} [label={_q(graph.label(v))}];" for v in range(len(graph))]
        out += [f"  {u} -- {v};" for u, v in graph.edges().tolist()]
    out.append("}")
    return "\n".join(out) + "\n"


def export_dot(graph, path, name="G"):
    _write(path, dot_text(graph, name), newline="\n")


def csv_text(report):
    buf = _io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["degree", "count"])
    for degree, count in report.histogram.items():
        writer.writerow([degree, count])
    return buf.getvalue()


def export_csv(report, path):
    _write(path, csv_text(report), newline="")


def json_text(report):
    return json.dumps(report.to_dict(), indent=2) + "\n"


def export_json(report, path):
    _write(path, json_text(report), newline="\n")
