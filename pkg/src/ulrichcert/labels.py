"""Node and trope labels for the sixteen-nodes configuration.

A node label is either ``(0,)``, the image of the origin, or a sorted pair
``(i, j)`` with 1 <= i < j <= 6 naming a difference of two Weierstrass
points. Tropes are labelled by an index 1..6 or by a triple ``(i, j, 6)``
with i < j <= 5. Tokens are the compact strings ``E0, E12, ..., E56`` and
``T1, ..., T6, T126, ..., T456``.
"""
from __future__ import annotations

NODE_LABELS = ((0,),) + tuple(
    (i, j) for i in range(1, 7) for j in range(i + 1, 7))

TROPE_LABELS = tuple(range(1, 7)) + tuple(
    (i, j, 6) for i in range(1, 6) for j in range(i + 1, 6))


def node_token(label) -> str:
    if label == (0,):
        return "E0"
    i, j = label
    return f"E{i}{j}"


def trope_token(label) -> str:
    if isinstance(label, int):
        return f"T{label}"
    i, j, k = label
    return f"T{i}{j}{k}"


def parse_node_token(token: str):
    token = token.strip()
    if token == "E0":
        return (0,)
    if len(token) == 3 and token[0] == "E" and token[1:].isdigit():
        i, j = int(token[1]), int(token[2])
        if 1 <= i < j <= 6:
            return (i, j)
    raise ValueError(f"bad node token {token!r}")


def parse_trope_token(token: str):
    token = token.strip()
    if len(token) == 2 and token[0] == "T" and token[1].isdigit():
        i = int(token[1])
        if 1 <= i <= 6:
            return i
    if len(token) == 4 and token[0] == "T" and token[1:].isdigit():
        i, j, k = int(token[1]), int(token[2]), int(token[3])
        if 1 <= i < j <= 5 and k == 6:
            return (i, j, 6)
    raise ValueError(f"bad trope token {token!r}")


def validate_node_label(label):
    """Normalize a node label; pairs may be given in either order."""
    if label == (0,):
        return label
    if isinstance(label, tuple) and len(label) == 2:
        i, j = label
        if isinstance(i, int) and isinstance(j, int) and i != j \
                and 1 <= i <= 6 and 1 <= j <= 6:
            return (i, j) if i < j else (j, i)
    raise ValueError(f"invalid node label {label!r}")
