"""Latin squares underlying the color-matrix constructions.

The central object is the odd-order latin square that is simultaneously
commutative (symmetric), idempotent (cell(i,i) = i) and anti-circulant
(each row is the previous one shifted left by one).  Its closed form is
cell(i,j) = ((i+j)*(q+1)/2 - 1 mod q) + 1 with 1-based indices and
symbols 1..q.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LatinSquare:
    q: int
    cells: tuple[tuple[int, ...], ...]  # cells[i][j], 0-based, symbols 1..q

    def __post_init__(self):
        if len(self.cells) != self.q or any(len(r) != self.q for r in self.cells):
            raise ValueError("cells must be a q x q array")

    def cell(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        return self.cells[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        """1-based row."""
        return self.cells[i - 1]

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.cells) + "\n"


def anti_circulant_square(q: int) -> LatinSquare:
    """The commutative idempotent anti-circulant latin square of odd order q."""
    if q < 1 or q % 2 == 0:
        raise ValueError(f"order must be odd and positive, got {q}")
    h = (q + 1) // 2  # multiplicative inverse of 2 mod q
    cells = tuple(
        tuple(((i + j) * h - 1) % q + 1 for j in range(1, q + 1))
        for i in range(1, q + 1)
    )
    return LatinSquare(q, cells)


def is_latin(sq: LatinSquare) -> bool:
    want = set(range(1, sq.q + 1))
    for i in range(sq.q):
        if set(sq.cells[i]) != want:
            return False
        if {sq.cells[j][i] for j in range(sq.q)} != want:
            return False
    return True


def is_commutative(sq: LatinSquare) -> bool:
    return all(sq.cells[i][j] == sq.cells[j][i]
               for i in range(sq.q) for j in range(sq.q))


def is_idempotent(sq: LatinSquare) -> bool:
    return all(sq.cells[i][i] == i + 1 for i in range(sq.q))


def is_anti_circulant(sq: LatinSquare) -> bool:
    """Each row is the previous row cyclically shifted left by one."""
    for i in range(1, sq.q):
        prev = sq.cells[i - 1]
        if sq.cells[i] != prev[1:] + prev[:1]:
            return False
    return True
