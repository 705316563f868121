"""Matrix files and result records.

A matrix file is JSON: ``{"n": 2, "data": [[[re, im], [re, im]], ...]}`` with
rows in order.  An optional ``"expected"`` object carries reference values
used by ``stampfli verify``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from importlib import resources

import numpy as np

from .errors import InputError


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"{where}: expected a number, got {x!r}")
    if not math.isfinite(x):
        raise InputError(f"{where}: non-finite value")
    return float(x)


def matrix_from_doc(doc) -> np.ndarray:
    if not isinstance(doc, dict) or "n" not in doc or "data" not in doc:
        raise InputError("matrix file needs keys 'n' and 'data'")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"'n' must be a positive integer, got {n!r}")
    data = doc["data"]
    if not isinstance(data, list) or len(data) != n:
        raise InputError(f"'data' must have {n} rows")
    A = np.empty((n, n), dtype=complex)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"row {i} must have {n} entries")
        for j, pair in enumerate(row):
            if not isinstance(pair, list) or len(pair) != 2:
                raise InputError(f"entry ({i},{j}) must be an [re, im] pair")
            A[i, j] = complex(_number(pair[0], f"entry ({i},{j})"), _number(pair[1], f"entry ({i},{j})"))
    return A


def parse_matrix(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from None
    return matrix_from_doc(doc)


def read_document(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON: {exc}") from None
    matrix_from_doc(doc)
    return doc


def read_matrix(path) -> np.ndarray:
    return matrix_from_doc(read_document(path))


def matrix_to_doc(A) -> dict:
    A = np.asarray(A, dtype=complex)
    return {"n": int(A.shape[0]), "data": [[[float(z.real), float(z.imag)] for z in row] for row in A]}


def write_matrix(path, A):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_doc(A), fh)
        fh.write("\n")


def pair(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


@dataclass
class ResultRecord:
    input_path: str
    st_point: list
    min_norm: float
    method: str
    certificate_margin: float
    spectrum: list
    elapsed_ms: float

    def to_json(self) -> str:
        # json writes floats with repr, the shortest string that round-trips
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        return cls(**json.loads(text))


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def corpus_names() -> list[str]:
    files = resources.files("stampfli") / "corpus"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def corpus_document(name: str) -> dict:
    text = (resources.files("stampfli") / "corpus" / f"{name}.json").read_text(encoding="utf-8")
    doc = json.loads(text)
    matrix_from_doc(doc)
    return doc


def corpus_matrix(name: str) -> np.ndarray:
    return matrix_from_doc(corpus_document(name))
