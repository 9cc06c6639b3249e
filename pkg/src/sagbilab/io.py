"""Reading generator, ideal and matrix files.

Generator and ideal files share one format::

    vars: x y
    # comment
    x + y
    x*y^2

Matrix files hold one column per line as whitespace-separated integers.
"""

from __future__ import annotations

from pathlib import Path
from typing import List, Tuple

from .algebra import ParseError, Polynomial, parse


class InputFileError(ValueError):
    pass


def _lines(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc.strerror or exc}") from None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def read_polynomials(path) -> Tuple[Tuple[str, ...], List[Polynomial]]:
    vars = None
    polys = []
    for lineno, line in _lines(path):
        if vars is None:
            if not line.startswith("vars:"):
                raise InputFileError(f"{path}:{lineno}: expected a 'vars:' header")
            vars = tuple(line[len("vars:"):].replace(",", " ").split())
            if not vars:
                raise InputFileError(f"{path}:{lineno}: empty variable list")
            continue
        try:
            polys.append(parse(line, vars))
        except ParseError as exc:
            raise InputFileError(f"{path}:{lineno}: {exc}") from None
    if vars is None:
        raise InputFileError(f"{path}: missing 'vars:' header")
    return vars, polys


def read_matrix(path) -> List[Tuple[int, ...]]:
    cols = []
    for lineno, line in _lines(path):
        try:
            cols.append(tuple(int(v) for v in line.replace(",", " ").split()))
        except ValueError:
            raise InputFileError(f"{path}:{lineno}: expected integers") from None
    if not cols:
        raise InputFileError(f"{path}: no columns")
    return cols


def write_polynomials(path, vars, polys, order=None):
    from .algebra import format_poly

    lines = ["vars: " + " ".join(vars)] + [format_poly(p, order) for p in polys]
    Path(path).write_text("\n".join(lines) + "\n")
