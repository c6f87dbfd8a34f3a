"""Matrix Market I/O for square real matrices (array and coordinate formats).

Only the real, general-symmetry flavor is supported: complex files are
rejected explicitly, and symmetric/skew storage is out of scope.  Parse
failures carry the 1-based line number of the offending line.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .core import as_matrix
from .errors import MatrixMarketError

__all__ = ["format_matrix_market", "matrix_digest", "read_matrix_market", "write_matrix_market"]

_BANNER = "%%MatrixMarket"


def matrix_digest(A) -> str:
    """Content hash of a matrix: sha256 over the shape and raw entry bytes."""
    A = as_matrix(A)
    h = hashlib.sha256()
    h.update(str(A.shape[0]).encode("ascii"))
    h.update(b":")
    h.update(np.ascontiguousarray(A).tobytes())
    return "sha256:" + h.hexdigest()


def read_matrix_market(path) -> np.ndarray:
    """Read a square dense matrix from a Matrix Market file.

    Coordinate entries are placed at their (1-based) positions with every
    unlisted entry zero.  Non-square sizes and complex fields are rejected.
    """
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise MatrixMarketError("empty file", line=1)

    banner = lines[0].split()
    if len(banner) != 5 or banner[0] != _BANNER or banner[1].lower() != "matrix":
        raise MatrixMarketError("missing or malformed MatrixMarket banner", line=1)
    layout, field, symmetry = (tok.lower() for tok in banner[2:])
    if layout not in ("array", "coordinate"):
        raise MatrixMarketError(f"unsupported layout {layout!r}", line=1)
    if field == "complex":
        raise MatrixMarketError("complex field is unsupported; this toolkit is real-valued", line=1)
    if field not in ("real", "integer"):
        raise MatrixMarketError(f"unsupported field {field!r}", line=1)
    if symmetry != "general":
        raise MatrixMarketError(f"unsupported symmetry {symmetry!r}; only general storage", line=1)

    # Skip comments; find the size line.
    k = 1
    while k < len(lines) and (lines[k].startswith("%") or not lines[k].strip()):
        k += 1
    if k >= len(lines):
        raise MatrixMarketError("missing size line", line=len(lines))
    size_tokens = lines[k].split()

    def parse_int(tok, lineno):
        try:
            return int(tok)
        except ValueError:
            raise MatrixMarketError(f"expected an integer, got {tok!r}", line=lineno) from None

    def parse_real(tok, lineno):
        try:
            return float(tok)
        except ValueError:
            raise MatrixMarketError(f"expected a real number, got {tok!r}", line=lineno) from None

    if layout == "array":
        if len(size_tokens) != 2:
            raise MatrixMarketError("array size line needs exactly two integers", line=k + 1)
        rows = parse_int(size_tokens[0], k + 1)
        cols = parse_int(size_tokens[1], k + 1)
        if rows != cols:
            raise MatrixMarketError(f"matrix is not square: {rows} x {cols}", line=k + 1)
        values = []
        for lineno in range(k + 1, len(lines)):
            text = lines[lineno].strip()
            if not text or text.startswith("%"):
                continue
            for tok in text.split():
                values.append(parse_real(tok, lineno + 1))
        if len(values) != rows * cols:
            raise MatrixMarketError(
                f"expected {rows * cols} values, found {len(values)}", line=len(lines)
            )
        # Array format lists entries column-major.
        A = np.array(values, dtype=float).reshape((cols, rows)).T
        return as_matrix(A)

    if len(size_tokens) != 3:
        raise MatrixMarketError("coordinate size line needs exactly three integers", line=k + 1)
    rows = parse_int(size_tokens[0], k + 1)
    cols = parse_int(size_tokens[1], k + 1)
    nnz = parse_int(size_tokens[2], k + 1)
    if rows != cols:
        raise MatrixMarketError(f"matrix is not square: {rows} x {cols}", line=k + 1)
    A = np.zeros((rows, cols))
    seen = 0
    for lineno in range(k + 1, len(lines)):
        text = lines[lineno].strip()
        if not text or text.startswith("%"):
            continue
        tokens = text.split()
        if len(tokens) != 3:
            raise MatrixMarketError("coordinate entries need 'row col value'", line=lineno + 1)
        i = parse_int(tokens[0], lineno + 1)
        j = parse_int(tokens[1], lineno + 1)
        v = parse_real(tokens[2], lineno + 1)
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise MatrixMarketError(f"entry ({i}, {j}) outside the matrix", line=lineno + 1)
        A[i - 1, j - 1] = v
        seen += 1
    if seen != nnz:
        raise MatrixMarketError(f"expected {nnz} entries, found {seen}", line=len(lines))
    return as_matrix(A)


def format_matrix_market(A, comment=None) -> str:
    """Render a matrix in array format with full round-trip precision."""
    A = as_matrix(A)
    n = A.shape[0]
    lines = [f"{_BANNER} matrix array real general"]
    if comment:
        for row in str(comment).splitlines():
            lines.append(f"% {row}")
    lines.append(f"{n} {n}")
    for j in range(n):  # column-major per the format
        for i in range(n):
            lines.append(repr(float(A[i, j])))
    return "\n".join(lines) + "\n"


def write_matrix_market(path, A, comment=None) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_matrix_market(A, comment))
