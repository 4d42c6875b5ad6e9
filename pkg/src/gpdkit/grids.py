"""Rectangular arrangements of squares and their order-independent composite.

A grid is composable exactly when horizontally adjacent cells share their
vertical edge and vertically adjacent cells share their horizontal edge.  By
the interchange law every way of cutting the rectangle into sub-rectangles
evaluates to the same square, which is what lets a subdivision be undone.
"""

from dataclasses import dataclass

from .errors import EdgeMismatch, PreconditionFailed
from .squares import Square, comp_h, comp_v, is_thin


@dataclass(frozen=True)
class Grid:
    cells: tuple[tuple[Square, ...], ...]

    def __post_init__(self):
        if not self.cells or not self.cells[0]:
            raise EdgeMismatch("a grid needs at least one cell")
        width = len(self.cells[0])
        if any(len(row) != width for row in self.cells):
            raise EdgeMismatch("ragged grid")
        xm = self.cells[0][0].xm
        for i, row in enumerate(self.cells):
            for j, cell in enumerate(row):
                if cell.xm is not xm:
                    raise EdgeMismatch(f"cell ({i},{j}) lives over a different crossed module")
                if j + 1 < width and cell.right != row[j + 1].left:
                    raise EdgeMismatch(
                        f"cells ({i},{j})|({i},{j + 1}): right edge {cell.right} "
                        f"!= left edge {row[j + 1].left}"
                    )
                if i + 1 < len(self.cells) and cell.bottom != self.cells[i + 1][j].top:
                    raise EdgeMismatch(
                        f"cells ({i},{j})/({i + 1},{j}): bottom edge {cell.bottom} "
                        f"!= top edge {self.cells[i + 1][j].top}"
                    )

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])


def grid_compose(g: Grid) -> Square:
    """Fold each row left to right, then the rows top to bottom."""
    row_composites = []
    for row in g.cells:
        acc = row[0]
        for cell in row[1:]:
            acc = comp_h(acc, cell)
        row_composites.append(acc)
    out = row_composites[0]
    for r in row_composites[1:]:
        out = comp_v(out, r)
    return out


def grid_compose_columns_first(g: Grid) -> Square:
    """Fold each column top to bottom, then the columns left to right."""
    col_composites = []
    for j in range(g.cols):
        acc = g.cells[0][j]
        for i in range(1, g.rows):
            acc = comp_v(acc, g.cells[i][j])
        col_composites.append(acc)
    out = col_composites[0]
    for c in col_composites[1:]:
        out = comp_h(out, c)
    return out


def grid_compose_bracketed(g: Grid, choose_cut) -> Square:
    """Evaluate by recursive rectangle cuts.

    ``choose_cut(r0, r1, c0, c1, depth)`` inspects a sub-rectangle (half-open
    bounds) and returns ``("h", i)`` to cut between rows i-1 and i, or
    ``("v", j)`` to cut between columns j-1 and j.
    """

    def go(r0, r1, c0, c1, depth):
        if r1 - r0 == 1 and c1 - c0 == 1:
            return g.cells[r0][c0]
        direction, at = choose_cut(r0, r1, c0, c1, depth)
        if direction == "h":
            return comp_v(go(r0, at, c0, c1, depth + 1), go(at, r1, c0, c1, depth + 1))
        return comp_h(go(r0, r1, c0, at, depth + 1), go(r0, r1, at, c1, depth + 1))

    return go(0, g.rows, 0, g.cols, 0)


def alternating_cut(first: str):
    """Cut strategy that alternates directions, starting with ``first``."""

    def choose(r0, r1, c0, c1, depth):
        prefer_h = (depth % 2 == 0) == (first == "h")
        if prefer_h and r1 - r0 > 1:
            return ("h", r0 + (r1 - r0) // 2)
        if c1 - c0 > 1:
            return ("v", c0 + (c1 - c0) // 2)
        return ("h", r0 + (r1 - r0) // 2)

    return choose


def random_cut(rng):
    """Seeded random cut strategy for fold-order fuzzing."""

    def choose(r0, r1, c0, c1, depth):
        can_h = r1 - r0 > 1
        can_v = c1 - c0 > 1
        if can_h and (not can_v or rng.random() < 0.5):
            return ("h", rng.randrange(r0 + 1, r1))
        return ("v", rng.randrange(c0 + 1, c1))

    return choose


def collapse_commutative_row(chain: Grid):
    """Top and bottom composites of a height-1 chain of commutative squares.

    Requires every square thin (commuting boundary) and both outer vertical
    edges to be identities; under those hypotheses the top composite equals
    the bottom composite in the base groupoid.  Returns the pair of arrows
    together with the verdict.
    """
    if chain.rows != 1:
        raise PreconditionFailed(f"expected a height-1 chain, got {chain.rows} rows")
    row = chain.cells[0]
    xm = row[0].xm
    P = xm.base
    for j, cell in enumerate(row):
        if not is_thin(cell):
            raise PreconditionFailed(f"square {j} is not a commutative square")
    if not P.is_identity(row[0].left):
        raise PreconditionFailed(f"left outer edge {row[0].left} is not an identity")
    if not P.is_identity(row[-1].right):
        raise PreconditionFailed(f"right outer edge {row[-1].right} is not an identity")
    top = P.compose_all([c.top for c in row])
    bottom = P.compose_all([c.bottom for c in row])
    return top, bottom, top == bottom
