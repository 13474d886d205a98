"""Access to bundled data files (the reference quartic and Gram matrices).

The directory can be overridden with the ULRICHCERT_CORPUS environment
variable, which is how tests and callers substitute their own inputs.
"""
from __future__ import annotations

import os
from pathlib import Path

ENV_VAR = "ULRICHCERT_CORPUS"


def corpus_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "corpus"


def read_text(name: str) -> str:
    path = corpus_dir() / f"{name}.txt"
    if not path.is_file():
        raise FileNotFoundError(f"corpus file {path} not found")
    return path.read_text()


def read_integer_matrix(name: str):
    """Parse a whitespace-separated integer matrix, one row per line."""
    rows = []
    for line in read_text(name).splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([int(tok) for tok in line.split()])
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError(f"corpus matrix {name!r} is empty or ragged")
    return rows
