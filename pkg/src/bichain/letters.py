"""Letter graphs and the letter encodings of Z and Z* grids.

A letter system is an alphabet ``{1..k}``, a set ``S`` of ordered letter
pairs and a word.  Positions ``p < q`` are adjacent iff
``(word[p], word[q])`` is in ``S``.  A pair ``(a, a)`` never makes a loop.

Grid encodings take the grid shape ``(cols, rows)`` as in
:func:`bichain.grids.z_grid`.  Letters are columns, and the word spells the
columns right to left once per row, starting from the top row.  So the
letter at 0-based position ``p`` is column ``cols - p % cols`` and its row
is ``rows - p // cols``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import GraphInputError
from .graph import Embedding, Graph
from .grids import grid_index


@dataclass(frozen=True)
class LetterSystem:
    k: int
    S: frozenset
    word: tuple

    def __init__(self, k: int, S, word):
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "S", frozenset((int(a), int(b)) for a, b in S))
        object.__setattr__(self, "word", tuple(int(x) for x in word))
        self.validate()

    def validate(self) -> None:
        if self.k < 1:
            raise GraphInputError("alphabet size must be positive")
        for a, b in self.S:
            if not (1 <= a <= self.k and 1 <= b <= self.k):
                raise GraphInputError("pair (%d, %d) is outside the alphabet 1..%d" % (a, b, self.k))
        for x in self.word:
            if not 1 <= x <= self.k:
                raise GraphInputError("letter %d is outside the alphabet 1..%d" % (x, self.k))

    def to_json(self) -> dict[str, Any]:
        return {"k": self.k, "S": sorted([a, b] for a, b in self.S), "word": list(self.word)}

    @classmethod
    def from_json(cls, obj: Any) -> "LetterSystem":
        try:
            return cls(obj["k"], obj["S"], obj["word"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphInputError("letter system JSON needs 'k', 'S' and 'word'") from exc

    def delete_position(self, p: int) -> "LetterSystem":
        return LetterSystem(self.k, self.S, self.word[:p] + self.word[p + 1:])


def decode_letter_graph(L: LetterSystem) -> Graph:
    w = L.word
    return Graph.from_edges(len(w), [(p, q) for p in range(len(w)) for q in range(p + 1, len(w))
                                     if (w[p], w[q]) in L.S])


def z_relation(cols: int) -> frozenset:
    r1 = {(2 * i - 1, 2 * i) for i in range(1, cols // 2 + 1)}
    half = (cols + 1) // 2 - 1
    r2 = {(2 * i + 1, 2 * i) for i in range(1, half + 1)}
    d = set()
    for i in range(1, half + 1):
        for j in range(i + 1, half + 1):
            d |= {(2 * i, 2 * j + 1), (2 * j + 1, 2 * i)}
    return frozenset(r1 | r2 | d)


def _grid_word(cols: int, rows: int) -> tuple:
    if cols < 1 or rows < 1:
        raise GraphInputError("grid dimensions must be positive")
    return tuple(range(cols, 0, -1)) * rows


def z_letter_encoding(cols: int, rows: int) -> LetterSystem:
    return LetterSystem(cols, z_relation(cols), _grid_word(cols, rows))


def zsplit_letter_encoding(cols: int, rows: int) -> LetterSystem:
    evens = range(2, cols + 1, 2)
    extra = {(a, b) for a in evens for b in evens}
    return LetterSystem(cols, z_relation(cols) | extra, _grid_word(cols, rows))


def position_coordinate(p: int, cols: int, rows: int) -> tuple[int, int]:
    """Grid ``(column, row)`` of 0-based word position ``p``."""
    return cols - p % cols, rows - p // cols


def position_map(cols: int, rows: int) -> Embedding:
    """Word positions to grid vertex indices; decode equals the grid under this map."""
    return Embedding(tuple(grid_index(*position_coordinate(p, cols, rows), rows) for p in range(cols * rows)))
