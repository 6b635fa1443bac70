"""Kashiwara operators on proper Young walls via the signature rule."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .affine import AffineData
from .partition import partitions
from .wall import (Wall, add_options, empty_wall, enumerate_walls, ground_plus_partition,
                   remove_options, valid_near)


class ColumnMark(Enum):
    MinusMinus = "--"
    Minus = "-"
    MinusPlus = "-+"
    Plus = "+"
    PlusPlus = "++"
    Dot = ""


def _step_remove(Y: Wall, k: int, i: int) -> Optional[Wall]:
    for col, color in remove_options(Y.pattern, k, Y.col(k)):
        if color == i:
            Z = Y.with_column(k, col)
            if valid_near(Z, k):
                return Z
    return None


def _step_add(Y: Wall, k: int, i: int) -> Optional[Wall]:
    for col, color in add_options(Y.pattern, k, Y.col(k)):
        if color == i:
            Z = Y.with_column(k, col)
            if valid_near(Z, k):
                return Z
    return None


def _chain(Y: Wall, k: int, i: int, step) -> int:
    count = 0
    Z = step(Y, k, i)
    while Z is not None and count < 2:
        count += 1
        Z = step(Z, k, i)
    return count


def classify_column(Y: Wall, k: int, i: int) -> ColumnMark:
    removals = _chain(Y, k, i, _step_remove)
    additions = _chain(Y, k, i, _step_add)
    if removals == 2:
        return ColumnMark.MinusMinus
    if removals == 1:
        return ColumnMark.MinusPlus if additions else ColumnMark.Minus
    if additions == 2:
        return ColumnMark.PlusPlus
    return ColumnMark.Plus if additions else ColumnMark.Dot


@dataclass(frozen=True)
class SignatureResult:
    word: str  # reduced word, of the form -...-+...+
    minus_count: int
    plus_count: int
    e_column: Optional[int]
    f_column: Optional[int]


def signature(Y: Wall, i: int) -> SignatureResult:
    # leftmost column first: the wall is drawn with column 1 on the right
    letters: list[tuple[str, int]] = []
    for k in range(len(Y.columns) + 1, 0, -1):
        for ch in classify_column(Y, k, i).value:
            letters.append((ch, k))
    stack: list[tuple[str, int]] = []
    for ch, k in letters:
        if ch == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append((ch, k))
    minus = [k for ch, k in stack if ch == "-"]
    plus = [k for ch, k in stack if ch == "+"]
    return SignatureResult("".join(ch for ch, _ in stack), len(minus), len(plus),
                           minus[-1] if minus else None, plus[0] if plus else None)


def epsilon(Y: Wall, i: int) -> int:
    return signature(Y, i).minus_count


def phi(Y: Wall, i: int) -> int:
    return signature(Y, i).plus_count


def e_op(Y: Wall, i: int) -> Optional[Wall]:
    k = signature(Y, i).e_column
    return None if k is None else _step_remove(Y, k, i)


def f_op(Y: Wall, i: int) -> Optional[Wall]:
    k = signature(Y, i).f_column
    return None if k is None else _step_add(Y, k, i)


def is_highest(Y: Wall) -> bool:
    return all(signature(Y, i).minus_count == 0 for i in Y.data.index_set)


def highest_walls(data: AffineData, lam: int, max_delta: int) -> list[Wall]:
    """Highest-weight walls among the weight spaces Lambda - m*eps*delta, m <= max_delta."""
    out = []
    for m in range(max_delta + 1):
        target = data.delta_multiple(m * data.epsilon_decomp)
        out.extend(Y for Y in enumerate_walls(data, lam, target) if is_highest(Y))
    return out


def expected_highest(data: AffineData, lam: int, max_delta: int) -> list[Wall]:
    return [ground_plus_partition(data, lam, p) for m in range(max_delta + 1) for p in partitions(m)]


def wall_label(Y: Wall) -> str:
    return json.dumps([[b, o] for b, o in Y.columns], separators=(",", ":"))


def crystal_graph(data: AffineData, lam: int, depth: int) -> tuple[list[Wall], list[tuple[Wall, int, Wall]]]:
    """Breadth-first closure of the ground state under all f_i, ``depth`` layers deep."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    root = empty_wall(data, lam)
    seen = {root.columns: root}
    order = [root]
    edges = []
    frontier = deque([(root, 0)])
    while frontier:
        Y, d = frontier.popleft()
        if d == depth:
            continue
        for i in data.index_set:
            Z = f_op(Y, i)
            if Z is None:
                continue
            edges.append((Y, i, Z))
            if Z.columns not in seen:
                seen[Z.columns] = Z
                order.append(Z)
                frontier.append((Z, d + 1))
    return order, edges


def to_dot(vertices: list[Wall], edges: list[tuple[Wall, int, Wall]]) -> str:
    ids = {Y.columns: f"v{j}" for j, Y in enumerate(vertices)}
    lines = ["digraph crystal {"]
    for Y in vertices:
        label = json.dumps(Y.to_json()["columns"], separators=(",", ":")).replace('"', '\\"')
        lines.append(f'  {ids[Y.columns]} [label="{label}"];')
    for Y, i, Z in edges:
        lines.append(f'  {ids[Y.columns]} -> {ids[Z.columns]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
