"""Verbatim matrices and betti tables shipped with the package.

Bracket-matrix fixtures store each entry as a list of terms
``[coefficient, [i0, ..., ik]]`` or, for matrices with parameters,
``[coefficient, [i0, ..., ik], [e1, e2, ...]]`` meaning
coefficient · r1^e1 · r2^e2 · ... · [i0 ... ik].
"""

from __future__ import annotations

import csv
import io
import json
import re
from functools import lru_cache
from importlib import resources

import jsonschema

from .grassmann import BracketPoly, format_bracket, parse_bracket

FIXTURES = ("pfaffian8", "stiefel6", "scroll3", "elliptic4", "hm-betti", "nullcorr-betti")
FORMATS = ("json", "csv", "latex", "text")


class UnknownFixture(KeyError):
    pass


def dump_fixture(obj: dict) -> str:
    """Canonical serialization: sorted keys, one matrix row per line."""
    head = {k: v for k, v in obj.items() if k not in ("entries", "rows")}
    body_key = "entries" if "entries" in obj else "rows"
    lines = ["{"]
    for key in sorted(head):
        lines.append(f"  {json.dumps(key)}: {json.dumps(head[key])},")
    rows = obj[body_key]
    lines.append(f"  {json.dumps(body_key)}: [")
    for i, row in enumerate(rows):
        sep = "," if i < len(rows) - 1 else ""
        lines.append(f"    {json.dumps(row)}{sep}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    return json.loads(resources.files("chowkit").joinpath("schemas", f"{name}.json").read_text())


def validate_fixture(obj: dict) -> dict:
    jsonschema.validate(obj, load_schema("fixture"))
    return obj


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    return resources.files("chowkit").joinpath("data", f"{name}.json").read_text()


def load_fixture(name: str) -> dict:
    return validate_fixture(json.loads(fixture_text(name)))


# ---------------------------------------------------------------------------
# entries


def entry_to_bracket(k: int, n: int, terms: list, params=None) -> BracketPoly:
    acc = BracketPoly(k, n)
    for term in terms:
        coeff = term[0]
        if len(term) > 2:
            if params is None:
                raise ValueError("this fixture needs parameter values")
            for value, e in zip(params, term[2]):
                coeff = coeff * value**e
        acc = acc + BracketPoly.bracket(k, n, term[1], coeff)
    return acc


def bracket_matrix(name_or_obj, params=None) -> list:
    """The fixture as a matrix (list of rows) of BracketPoly."""
    obj = load_fixture(name_or_obj) if isinstance(name_or_obj, str) else name_or_obj
    if obj["kind"] != "bracket-matrix":
        raise ValueError(f"fixture {obj['id']} is not a bracket matrix")
    k, n = obj["k"], obj["n"]
    return [[entry_to_bracket(k, n, e, params) for e in row] for row in obj["entries"]]


def render_entry(terms: list, names=("r1", "r2", "r3")) -> str:
    if not terms:
        return "0"
    parts = []
    for term in terms:
        c, br = term[0], term[1]
        factors = []
        if len(term) > 2:
            for nm, e in zip(names, term[2]):
                factors.extend([nm] * e)
        mag = abs(c)
        if mag != 1:
            factors.insert(0, str(mag))
        factors.append(format_bracket(br))
        parts.append(("-" if c < 0 else "+") + "*".join(factors))
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


_TERM = re.compile(r"([+-])?((?:(?:\d+|r\d)\*)*)(\[[0-9 ,]*\])")


def parse_entry(text: str, nparams: int = 0, size: int | None = None) -> list:
    """Inverse of :func:`render_entry`."""
    text = text.strip()
    if text == "0":
        return []
    out, pos = [], 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or (pos > 0 and not m.group(1)):
            raise ValueError(f"cannot parse entry {text!r} at position {pos}")
        c = -1 if m.group(1) == "-" else 1
        expo = [0] * nparams
        for f in filter(None, m.group(2).split("*")):
            if f.startswith("r"):
                idx = int(f[1:]) - 1
                if not 0 <= idx < nparams:
                    raise ValueError(f"unknown parameter {f} in {text!r}")
                expo[idx] += 1
            else:
                c *= int(f)
        term = [c, list(parse_bracket(m.group(3), size))]
        if any(expo):
            term.append(expo)
        out.append(term)
        pos = m.end()
    return out


# ---------------------------------------------------------------------------
# emitters


def _entry_grid(obj: dict) -> list:
    if obj["kind"] == "bracket-matrix":
        names = obj.get("parameters", ())
        return [[render_entry(e, names) for e in row] for row in obj["entries"]]
    return [["..." if x is None else str(x) for x in row] for row in obj["rows"]]


def emit(name_or_obj, fmt: str = "json") -> str:
    obj = load_fixture(name_or_obj) if isinstance(name_or_obj, str) else validate_fixture(name_or_obj)
    if fmt == "json":
        return dump_fixture(obj)
    grid = _entry_grid(obj)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerows(grid)
        return buf.getvalue()
    if fmt == "text":
        if obj["kind"] == "betti":
            from .veronese import betti_from_fixture

            return betti_from_fixture(obj).to_text() + "\n"
        width = max(len(c) for row in grid for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in grid) + "\n"
    if fmt == "latex":
        def cell(c):
            if obj["kind"] == "betti":
                return r"\ldots" if c == "..." else ("." if c == "0" else c)
            return re.sub(r"r(\d)", r"\\rho_\1", c).replace("*", " ")

        body = " \\\\\n".join(" & ".join(cell(c) for c in row) for row in grid)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def parse_emitted(text: str, fmt: str, like: dict | None = None) -> dict:
    """Read an emitted fixture back; csv needs the metadata of ``like``."""
    if fmt == "json":
        return validate_fixture(json.loads(text))
    if fmt != "csv":
        raise ValueError(f"format {fmt!r} is display-only")
    if like is None:
        raise ValueError("csv carries entries only; pass the fixture metadata as `like`")
    grid = list(csv.reader(io.StringIO(text)))
    obj = {k: v for k, v in like.items() if k not in ("entries", "rows")}
    if like["kind"] == "bracket-matrix":
        nparams = len(like.get("parameters", ()))
        obj["entries"] = [[parse_entry(c, nparams, like["k"] + 1) for c in row] for row in grid]
    else:
        obj["rows"] = [[None if c == "..." else int(c) for c in row] for row in grid]
    return validate_fixture(obj)
