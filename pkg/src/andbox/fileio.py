"""Plain-text file formats and atomic writers.

All formats share the same conventions: UTF-8 text, one record per line,
blank lines and comment lines ("c" alone or "c " prefix) ignored,
rationals written as "<num>" or "<num>/<den>" in lowest terms with a
positive denominator.

  graph         "p and <n> <m>" header, then "e <u> <v>" with 1 <= u < v <= n
  realization   "r and <n> <d>" header, optional "central" flag line,
                then "v <id> <dim> <L> <R> <p>" (d lines per vertex)
  ordering      "o <v1> ... <vn>"
  implicit      "ic <id> <l> <rho> <p>" rank triples
  interval      "i <id> <L> <R>"
  outerplanar   "outer <v1> ... <vk>" once, then "chord <u> <v>" lines
  rooted path   "t <parent> <child>" tree lines (parent 0 marks the root),
                then "k <vid> <node> ..." path lines
  corner boxes  "b <id> <dim> <x_lo> <x_hi> <y_lo> <y_hi>"
  semi-squares  "s <id> <corner> <leg>"
"""

from __future__ import annotations

import os
import re
import tempfile
from fractions import Fraction

from .boxes import CornerBox, CornerBoxModel, SemiSquare, check_corner_box
from .families import IntervalModel, OuterplanarModel, RootedPathModel
from .graphs import Graph
from .orders import ImplicitCode, Ordering
from .realization import Realization, is_central


class FileFormatError(ValueError):
    pass


_RATIONAL = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def parse_rational(token: str) -> Fraction:
    """Strict rational syntax: optional sign, no leading zeros, lowest
    terms, positive denominator, no denominator 1 spelled out."""
    if not _RATIONAL.match(token):
        raise FileFormatError(f"bad rational {token!r}")
    f = Fraction(token)
    if format_rational(f) != token:
        raise FileFormatError(f"rational {token!r} is not in lowest terms")
    return f


def format_rational(f: Fraction) -> str:
    return str(f)


def _parse_int(token: str, minimum=None) -> int:
    if not re.match(r"-?(0|[1-9][0-9]*)$", token):
        raise FileFormatError(f"bad integer {token!r}")
    value = int(token)
    if minimum is not None and value < minimum:
        raise FileFormatError(f"integer {value} below {minimum}")
    return value


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        yield no, line.split()


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def atomic_write_text(path: str, text: str) -> None:
    """Write via a temp file in the same directory plus rename, so readers
    never observe a partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _fail(path, no, msg):
    raise FileFormatError(f"{path}:{no}: {msg}")


def _int_at(path, no, token, minimum=None) -> int:
    try:
        return _parse_int(token, minimum)
    except FileFormatError as e:
        _fail(path, no, str(e))


def _rat_at(path, no, token) -> Fraction:
    try:
        return parse_rational(token)
    except FileFormatError as e:
        _fail(path, no, str(e))


# ---------------------------------------------------------------------------
# graphs

def loads_graph(text: str, path: str = "<graph>") -> Graph:
    n = m = None
    edges = []
    for no, toks in _content_lines(text):
        if toks[0] == "p":
            if n is not None:
                _fail(path, no, "duplicate header")
            if len(toks) != 4 or toks[1] != "and":
                _fail(path, no, "header must be 'p and <n> <m>'")
            n = _int_at(path, no, toks[2], 0)
            m = _int_at(path, no, toks[3], 0)
        elif toks[0] == "e":
            if n is None:
                _fail(path, no, "edge before header")
            if len(toks) != 3:
                _fail(path, no, "edge line must be 'e <u> <v>'")
            u = _int_at(path, no, toks[1], 1)
            v = _int_at(path, no, toks[2], 1)
            if not (u < v):
                _fail(path, no, f"edges need u < v, got {u} {v}")
            if v > n:
                _fail(path, no, f"vertex {v} above n={n}")
            if (u, v) in edges:
                _fail(path, no, f"duplicate edge {u} {v}")
            edges.append((u, v))
        else:
            _fail(path, no, f"unknown record {toks[0]!r}")
    if n is None:
        _fail(path, 0, "missing 'p and <n> <m>' header")
    if len(edges) != m:
        _fail(path, 0, f"header says {m} edges, file has {len(edges)}")
    return Graph.from_edges(n, edges)


def dumps_graph(g: Graph) -> str:
    lines = [f"p and {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in sorted(map(tuple, map(sorted, g.edge_list())))]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    return loads_graph(_read(path), path)


def save_graph(path: str, g: Graph) -> None:
    atomic_write_text(path, dumps_graph(g))


# ---------------------------------------------------------------------------
# realizations

def loads_realization(text: str, path: str = "<realization>") -> Realization:
    header = None
    central_flag = False
    rows = {}
    for no, toks in _content_lines(text):
        if toks[0] == "r":
            if header is not None:
                _fail(path, no, "duplicate header")
            if len(toks) != 4 or toks[1] != "and":
                _fail(path, no, "header must be 'r and <n> <d>'")
            header = (_int_at(path, no, toks[2], 1), _int_at(path, no, toks[3], 1))
        elif toks[0] == "central":
            central_flag = True
        elif toks[0] == "v":
            if header is None:
                _fail(path, no, "vertex line before header")
            if len(toks) != 6:
                _fail(path, no, "vertex line must be 'v <id> <dim> <L> <R> <p>'")
            vid = _int_at(path, no, toks[1], 1)
            dim = _int_at(path, no, toks[2], 1)
            if dim > header[1]:
                _fail(path, no, f"dimension {dim} above d={header[1]}")
            lo, hi, p = (_rat_at(path, no, t) for t in toks[3:6])
            if (vid, dim) in rows:
                _fail(path, no, f"duplicate vertex/dimension {vid} {dim}")
            rows[(vid, dim)] = (lo, hi, p)
        else:
            _fail(path, no, f"unknown record {toks[0]!r}")
    if header is None:
        _fail(path, 0, "missing 'r and <n> <d>' header")
    n, d = header
    ids = sorted({vid for vid, _ in rows})
    if len(ids) != n:
        _fail(path, 0, f"header says {n} vertices, file has {len(ids)}")
    items = {}
    for vid in ids:
        box = []
        point = []
        for dim in range(1, d + 1):
            if (vid, dim) not in rows:
                _fail(path, 0, f"vertex {vid} missing dimension {dim}")
            lo, hi, p = rows[(vid, dim)]
            box.append((lo, hi))
            point.append(p)
        items[vid] = (tuple(box), tuple(point))
    r = Realization.build(d, items)
    if central_flag and not is_central(r):
        _fail(path, 0, "file claims 'central' but the realization is not")
    return r


def dumps_realization(r: Realization) -> str:
    lines = [f"r and {r.n} {r.d}"]
    if is_central(r):
        lines.append("central")
    for v, box, point in r.items():
        for dim, ((lo, hi), p) in enumerate(zip(box, point), start=1):
            lines.append(
                f"v {v} {dim} {format_rational(lo)} {format_rational(hi)}"
                f" {format_rational(p)}"
            )
    return "\n".join(lines) + "\n"


def load_realization(path: str) -> Realization:
    return loads_realization(_read(path), path)


def save_realization(path: str, r: Realization) -> None:
    atomic_write_text(path, dumps_realization(r))


# ---------------------------------------------------------------------------
# orderings and implicit codes

def loads_ordering(text: str, path: str = "<ordering>") -> Ordering:
    seq = None
    for no, toks in _content_lines(text):
        if toks[0] != "o":
            _fail(path, no, f"unknown record {toks[0]!r}")
        if seq is not None:
            _fail(path, no, "duplicate ordering line")
        if len(toks) < 2:
            _fail(path, no, "empty ordering")
        seq = tuple(_int_at(path, no, t, 1) for t in toks[1:])
        if len(set(seq)) != len(seq):
            _fail(path, no, "ordering repeats a vertex")
    if seq is None:
        _fail(path, 0, "missing 'o <v1> ...' line")
    return Ordering(seq)


def dumps_ordering(o: Ordering) -> str:
    return "o " + " ".join(str(v) for v in o.order) + "\n"


def load_ordering(path: str) -> Ordering:
    return loads_ordering(_read(path), path)


def save_ordering(path: str, o: Ordering) -> None:
    atomic_write_text(path, dumps_ordering(o))


def loads_implicit_codes(text: str, path: str = "<implicit>"):
    rows = {}
    for no, toks in _content_lines(text):
        if toks[0] != "ic" or len(toks) != 5:
            _fail(path, no, "lines must be 'ic <id> <l> <rho> <p>'")
        vid = _int_at(path, no, toks[1], 1)
        lo, hi, pos = (_int_at(path, no, t, 1) for t in toks[2:5])
        if vid in rows:
            _fail(path, no, f"duplicate code for vertex {vid}")
        if not (lo <= pos <= hi):
            _fail(path, no, f"rank {pos} outside [{lo},{hi}]")
        rows[vid] = ImplicitCode(lo, hi, pos)
    if sorted(rows) != list(range(1, len(rows) + 1)):
        _fail(path, 0, "implicit codes must cover vertices 1..n")
    return tuple(rows[v] for v in sorted(rows))


def dumps_implicit_codes(codes) -> str:
    lines = [
        f"ic {vid} {c.lo} {c.hi} {c.pos}"
        for vid, c in enumerate(codes, start=1)
    ]
    return "\n".join(lines) + "\n"


def load_implicit_codes(path: str):
    return loads_implicit_codes(_read(path), path)


def save_implicit_codes(path: str, codes) -> None:
    atomic_write_text(path, dumps_implicit_codes(codes))


# ---------------------------------------------------------------------------
# auxiliary models

def loads_interval_model(text: str, path: str = "<interval>") -> IntervalModel:
    rows = {}
    for no, toks in _content_lines(text):
        if toks[0] != "i" or len(toks) != 4:
            _fail(path, no, "lines must be 'i <id> <L> <R>'")
        vid = _int_at(path, no, toks[1], 1)
        lo, hi = _rat_at(path, no, toks[2]), _rat_at(path, no, toks[3])
        if lo > hi:
            _fail(path, no, f"empty interval [{lo},{hi}]")
        if vid in rows:
            _fail(path, no, f"duplicate interval for vertex {vid}")
        rows[vid] = (lo, hi)
    if sorted(rows) != list(range(1, len(rows) + 1)):
        _fail(path, 0, "interval ids must cover 1..n")
    return IntervalModel(tuple(rows[v] for v in sorted(rows)))


def dumps_interval_model(m: IntervalModel) -> str:
    lines = [
        f"i {v} {format_rational(lo)} {format_rational(hi)}"
        for v, (lo, hi) in enumerate(m.spans, start=1)
    ]
    return "\n".join(lines) + "\n"


def loads_outerplanar_model(text: str, path: str = "<outerplanar>") -> OuterplanarModel:
    outer = None
    chords = []
    for no, toks in _content_lines(text):
        if toks[0] == "outer":
            if outer is not None:
                _fail(path, no, "duplicate outer walk")
            if len(toks) < 2:
                _fail(path, no, "empty outer walk")
            outer = tuple(_int_at(path, no, t, 1) for t in toks[1:])
        elif toks[0] == "chord":
            if len(toks) != 3:
                _fail(path, no, "chord line must be 'chord <u> <v>'")
            u = _int_at(path, no, toks[1], 1)
            v = _int_at(path, no, toks[2], 1)
            if u >= v:
                _fail(path, no, f"chords need u < v, got {u} {v}")
            if (u, v) in chords:
                _fail(path, no, f"duplicate chord {u} {v}")
            chords.append((u, v))
        else:
            _fail(path, no, f"unknown record {toks[0]!r}")
    if outer is None:
        _fail(path, 0, "missing 'outer <v1> ...' line")
    return OuterplanarModel(outer, tuple(sorted(chords)))


def dumps_outerplanar_model(m: OuterplanarModel) -> str:
    lines = ["outer " + " ".join(str(v) for v in m.outer)]
    lines += [f"chord {u} {v}" for u, v in m.chords]
    return "\n".join(lines) + "\n"


def loads_rooted_path_model(text: str, path: str = "<rootedpath>") -> RootedPathModel:
    parent = {}
    paths = {}
    for no, toks in _content_lines(text):
        if toks[0] == "t":
            if len(toks) != 3:
                _fail(path, no, "tree line must be 't <parent> <child>'")
            p = _int_at(path, no, toks[1], 0)
            child = _int_at(path, no, toks[2], 1)
            if child in parent:
                _fail(path, no, f"node {child} listed twice")
            parent[child] = p
        elif toks[0] == "k":
            if len(toks) < 3:
                _fail(path, no, "path line must be 'k <vid> <node> ...'")
            vid = _int_at(path, no, toks[1], 1)
            if vid in paths:
                _fail(path, no, f"duplicate path for vertex {vid}")
            paths[vid] = tuple(_int_at(path, no, t, 1) for t in toks[2:])
        else:
            _fail(path, no, f"unknown record {toks[0]!r}")
    if not parent or not paths:
        _fail(path, 0, "need both 't' tree lines and 'k' path lines")
    if sorted(paths) != list(range(1, len(paths) + 1)):
        _fail(path, 0, "path ids must cover 1..n")
    m = RootedPathModel(parent, paths)
    try:
        m.validate()
    except Exception as e:
        _fail(path, 0, str(e))
    return m


def dumps_rooted_path_model(m: RootedPathModel) -> str:
    lines = [f"t {p} {child}" for child, p in sorted(m.parent.items())]
    lines += [
        "k " + " ".join(str(x) for x in (v,) + tuple(m.paths[v]))
        for v in sorted(m.paths)
    ]
    return "\n".join(lines) + "\n"


def load_interval_model(path: str) -> IntervalModel:
    return loads_interval_model(_read(path), path)


def save_interval_model(path: str, m: IntervalModel) -> None:
    atomic_write_text(path, dumps_interval_model(m))


def load_outerplanar_model(path: str) -> OuterplanarModel:
    return loads_outerplanar_model(_read(path), path)


def save_outerplanar_model(path: str, m: OuterplanarModel) -> None:
    atomic_write_text(path, dumps_outerplanar_model(m))


def load_rooted_path_model(path: str) -> RootedPathModel:
    return loads_rooted_path_model(_read(path), path)


def save_rooted_path_model(path: str, m: RootedPathModel) -> None:
    atomic_write_text(path, dumps_rooted_path_model(m))


# ---------------------------------------------------------------------------
# corner boxes and semi-squares

def loads_corner_boxes(text: str, path: str = "<boxes>") -> CornerBoxModel:
    rows = {}
    for no, toks in _content_lines(text):
        if toks[0] != "b" or len(toks) != 7:
            _fail(path, no, "lines must be 'b <id> <dim> <x_lo> <x_hi> <y_lo> <y_hi>'")
        vid = _int_at(path, no, toks[1], 1)
        dim = _int_at(path, no, toks[2], 1)
        xl, xh, yl, yh = (_rat_at(path, no, t) for t in toks[3:7])
        if (vid, dim) in rows:
            _fail(path, no, f"duplicate box factor {vid} {dim}")
        rows[(vid, dim)] = ((xl, xh), (yl, yh))
    if not rows:
        _fail(path, 0, "no corner boxes")
    d = max(dim for _, dim in rows)
    boxes = []
    for vid in sorted({v for v, _ in rows}):
        factors = []
        for dim in range(1, d + 1):
            if (vid, dim) not in rows:
                _fail(path, 0, f"vertex {vid} missing dimension {dim}")
            factors.append(rows[(vid, dim)])
        cb = CornerBox(vid, tuple(factors))
        try:
            check_corner_box(cb)
        except Exception as e:
            _fail(path, 0, str(e))
        boxes.append(cb)
    return CornerBoxModel(tuple(boxes), Fraction(0))


def dumps_corner_boxes(model) -> str:
    lines = []
    boxes = model.boxes if isinstance(model, CornerBoxModel) else tuple(model)
    for cb in boxes:
        for dim, ((xl, xh), (yl, yh)) in enumerate(cb.factors, start=1):
            lines.append(
                f"b {cb.vertex} {dim} {format_rational(xl)} {format_rational(xh)}"
                f" {format_rational(yl)} {format_rational(yh)}"
            )
    return "\n".join(lines) + "\n"


def load_corner_boxes(path: str) -> CornerBoxModel:
    return loads_corner_boxes(_read(path), path)


def save_corner_boxes(path: str, model) -> None:
    atomic_write_text(path, dumps_corner_boxes(model))


def loads_semisquares(text: str, path: str = "<semisquares>"):
    rows = {}
    for no, toks in _content_lines(text):
        if toks[0] != "s" or len(toks) != 4:
            _fail(path, no, "lines must be 's <id> <corner> <leg>'")
        vid = _int_at(path, no, toks[1], 1)
        corner, leg = _rat_at(path, no, toks[2]), _rat_at(path, no, toks[3])
        if leg < 0:
            _fail(path, no, "leg length must be nonnegative")
        if vid in rows:
            _fail(path, no, f"duplicate semi-square for vertex {vid}")
        rows[vid] = SemiSquare(vid, corner, leg)
    if not rows:
        _fail(path, 0, "no semi-squares")
    return tuple(rows[v] for v in sorted(rows))


def dumps_semisquares(squares) -> str:
    lines = [
        f"s {t.vertex} {format_rational(t.corner)} {format_rational(t.leg)}"
        for t in squares
    ]
    return "\n".join(lines) + "\n"


def load_semisquares(path: str):
    return loads_semisquares(_read(path), path)


def save_semisquares(path: str, squares) -> None:
    atomic_write_text(path, dumps_semisquares(squares))


# ---------------------------------------------------------------------------
# format sniffing (used by the CLI)

_KIND_BY_TOKEN = {
    "p": "graph",
    "e": "graph",
    "r": "realization",
    "v": "realization",
    "central": "realization",
    "o": "ordering",
    "ic": "implicit",
    "i": "interval",
    "outer": "outerplanar",
    "chord": "outerplanar",
    "t": "rootedpath",
    "k": "rootedpath",
    "b": "corner",
    "s": "semisquare",
}


def sniff_format(text: str) -> str:
    """Kind of the first content record; raises on unknown or empty."""
    for _, toks in _content_lines(text):
        kind = _KIND_BY_TOKEN.get(toks[0])
        if kind is None:
            raise FileFormatError(f"unknown record {toks[0]!r}")
        return kind
    raise FileFormatError("empty file")
