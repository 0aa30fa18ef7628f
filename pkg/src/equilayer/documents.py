"""JSON interchange for matrices.

A document is one JSON object::

    {
      "schema_version": 1,
      "kind": "basis_element" | "weight_matrix" | "local_element",
      "spec": {"n": .., "k": .., "l": .., "group": "sn"|"an", "d_k": .., "d_l": ..}
              or {"factors": [{"n":..,"k":..,"l":..,"group":..}, ...]},
      "shape": [rows, cols],
      "entries": [[row, col, numerator, denominator], ...],
      "provenance": {...}
    }

Rows and columns are 0-based offsets (``offset(I) = sum((i_j - 1) n^(m-j))``,
channel index fastest).  Entries are sorted by ``(row, col)``, fractions are
reduced and denominators positive.  With ``--float`` the entries become
``[row, col, value]`` triples; such documents are for display only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, TextIO

from .sparse import SparseMatrix

SCHEMA_VERSION = 1

__all__ = ["SCHEMA_VERSION", "MatrixDocument", "DocumentError", "read_documents"]


class DocumentError(ValueError):
    pass


@dataclass
class MatrixDocument:
    kind: str
    spec: dict[str, Any]
    matrix: SparseMatrix
    provenance: dict[str, Any] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def to_dict(self, as_float: bool = False) -> dict[str, Any]:
        if as_float:
            entries = [[r, c, float(v)] for (r, c), v in self.matrix.items()]
        else:
            entries = [[r, c, v.numerator, v.denominator] for (r, c), v in self.matrix.items()]
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "spec": self.spec,
            "shape": [self.matrix.rows, self.matrix.cols],
            "entries": entries,
            "provenance": self.provenance,
        }

    def dumps(self, as_float: bool = False, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(as_float), indent=indent, sort_keys=False)

    @classmethod
    def from_dict(cls, obj: dict[str, Any]) -> "MatrixDocument":
        try:
            version = obj["schema_version"]
            if version != SCHEMA_VERSION:
                raise DocumentError(f"unsupported schema_version {version}")
            rows, cols = obj["shape"]
            data = {}
            for entry in obj["entries"]:
                if len(entry) == 4:
                    r, c, num, den = entry
                    if not isinstance(num, int) or not isinstance(den, int) or den <= 0:
                        raise DocumentError(f"bad fraction in entry {entry}")
                    value = Fraction(num, den)
                elif len(entry) == 3:
                    r, c, value = entry
                    value = Fraction(str(value))
                else:
                    raise DocumentError(f"bad entry {entry}")
                if (r, c) in data:
                    raise DocumentError(f"duplicate coordinate ({r}, {c})")
                data[(r, c)] = value
            return cls(
                kind=obj["kind"],
                spec=obj["spec"],
                matrix=SparseMatrix(rows, cols, data),
                provenance=obj.get("provenance", {}),
                schema_version=version,
            )
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            if isinstance(exc, DocumentError):
                raise
            raise DocumentError(f"malformed matrix document: {exc}") from exc

    @classmethod
    def loads(cls, text: str) -> "MatrixDocument":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(obj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixDocument):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def read_documents(stream: TextIO) -> Iterable[MatrixDocument]:
    """Read one document per non-blank line, or a single pretty-printed one."""
    text = stream.read()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        docs = [MatrixDocument.loads(ln) for ln in lines]
    except DocumentError:
        docs = [MatrixDocument.loads(text)]
    return docs
