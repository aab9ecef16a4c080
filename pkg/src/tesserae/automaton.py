"""Column-step transfer automata over boundary profiles, with exact counting.

A partial tiling of a width-m strip, filled column by column, leaves behind
a boundary profile: the set of cells in the next few columns already covered
by tiles protruding past the current column.  Treating profiles as automaton
states and single-column fills as transitions turns exact tiling counts into
powers of a nonnegative integer matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .poly import Polyomino, TileSet


class AutomatonError(ValueError):
    """No tile variant fits within the requested strip width."""


class OracleLimitError(ValueError):
    """Brute-force request exceeds the configured cell budget."""


@dataclass(frozen=True)
class TransferAutomaton:
    """Counts strip tilings one column step at a time.

    states[i] is a boundary profile packed into an integer, row-major: bit
    (row * reach + j) is set when the cell j+1 columns past the boundary in
    that row is already covered.  matrix[i][j] is the number of ways to fill
    one full column entering with profile states[i] and leaving states[j].
    Counts of m x n rectangles are (matrix^n)[start][start].
    """

    width: int
    reach: int
    states: tuple[int, ...]
    start: int
    matrix: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CountSeries:
    """Exact tiling counts N(0..L) of width x n rectangles."""

    width: int
    terms: tuple[int, ...]


def _anchored_masks(
    variant: Polyomino, width: int, reach: int
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Placements of one variant inside a column step, per anchor row.

    The anchor is the variant's scan-first cell: the topmost cell of its
    leftmost column.  Yields (anchor_row, masks) where masks[j] holds the
    rows the placement occupies in column j of the working window.
    """
    lead_row = min(r for r, c in variant.cells if c == 0)
    for anchor in range(width):
        masks = [0] * (reach + 1)
        for r, c in variant.cells:
            row = anchor + r - lead_row
            if row < 0 or row >= width:
                break
            masks[c] |= 1 << row
        else:
            yield anchor, tuple(masks)


def _pack(profile_cols: tuple[int, ...], reach: int) -> int:
    packed = 0
    for j, col in enumerate(profile_cols):
        row = 0
        while col >> row:
            if (col >> row) & 1:
                packed |= 1 << (row * reach + j)
            row += 1
    return packed


def _profile_label(packed: int, width: int, reach: int) -> str:
    if reach == 0:
        return "flush"
    rows = (
        "".join("#" if packed >> (i * reach + j) & 1 else "." for j in range(reach))
        for i in range(width)
    )
    return "/".join(rows)


def build_automaton(tiles: TileSet, width: int) -> TransferAutomaton:
    """Compile a tile set and strip width into a transfer automaton.

    One transition fills the leftmost incomplete column cell by cell, top to
    bottom; every placement is anchored at the topmost cell of its leftmost
    column, so each tiling is generated exactly once.  Profiles are
    discovered lazily from the all-empty start profile, never enumerated
    wholesale.  Variants taller than the strip are dropped here.
    """
    if width < 1:
        raise AutomatonError("strip width must be at least 1")
    variants = [v for v in tiles.variants if v.height <= width]
    if not variants:
        raise AutomatonError(f"no tile variant fits in a strip of width {width}")
    reach = max(v.width for v in variants) - 1

    placements: list[list[tuple[int, ...]]] = [[] for _ in range(width)]
    for v in variants:
        for anchor, masks in _anchored_masks(v, width, reach):
            placements[anchor].append(masks)

    start = (0,) * reach
    index: dict[tuple[int, ...], int] = {start: 0}
    profiles: list[tuple[int, ...]] = [start]
    rows: list[dict[int, int]] = []

    pos = 0
    while pos < len(profiles):
        work = list(profiles[pos]) + [0]
        counts: dict[int, int] = {}

        def fill(row: int) -> None:
            col0 = work[0]
            while row < width and (col0 >> row) & 1:
                row += 1
            if row == width:
                leave = tuple(work[1:])
                j = index.get(leave)
                if j is None:
                    j = len(profiles)
                    index[leave] = j
                    profiles.append(leave)
                counts[j] = counts.get(j, 0) + 1
                return
            for masks in placements[row]:
                for j, mask in enumerate(masks):
                    if mask & work[j]:
                        break
                else:
                    for j, mask in enumerate(masks):
                        work[j] |= mask
                    fill(row + 1)
                    for j, mask in enumerate(masks):
                        work[j] &= ~mask

        fill(0)
        rows.append(counts)
        pos += 1

    n = len(profiles)
    matrix = tuple(tuple(row.get(j, 0) for j in range(n)) for row in rows)
    states = tuple(_pack(p, reach) for p in profiles)
    return TransferAutomaton(width=width, reach=reach, states=states, start=0, matrix=matrix)


def _apply(matrix: tuple[tuple[int, ...], ...], vec: list[int]) -> list[int]:
    out = [0] * len(vec)
    for i, v in enumerate(vec):
        if v:
            row = matrix[i]
            for j, w in enumerate(row):
                if w:
                    out[j] += v * w
    return out


def count_rect(a: TransferAutomaton, length: int) -> int:
    """Exact number of tilings of the width x length rectangle."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    vec = [0] * len(a.states)
    vec[a.start] = 1
    for _ in range(length):
        vec = _apply(a.matrix, vec)
    return vec[a.start]


def series(a: TransferAutomaton, length: int) -> CountSeries:
    """Counts N(0..length) from one iterated matrix-vector sweep."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    vec = [0] * len(a.states)
    vec[a.start] = 1
    terms = [1]
    for _ in range(length):
        vec = _apply(a.matrix, vec)
        terms.append(vec[a.start])
    return CountSeries(width=a.width, terms=tuple(terms))


def trim_reachable(a: TransferAutomaton) -> TransferAutomaton:
    """Drop states that cannot lie on any start-to-start path.

    Keeps exactly the states reachable from the start profile and
    co-reachable back to it; every count N(n) is unchanged.
    """
    n = len(a.states)
    fwd = [[j for j in range(n) if a.matrix[i][j]] for i in range(n)]
    back: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in fwd[i]:
            back[j].append(i)

    def closure(adj: list[list[int]]) -> set[int]:
        seen = {a.start}
        stack = [a.start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    keep = sorted(closure(fwd) & closure(back))
    matrix = tuple(tuple(a.matrix[i][j] for j in keep) for i in keep)
    states = tuple(a.states[i] for i in keep)
    return TransferAutomaton(a.width, a.reach, states, keep.index(a.start), matrix)


def brute_force_count(tiles: TileSet, width: int, length: int, max_cells: int = 64) -> int:
    """Count tilings by exhaustive backtracking over the whole rectangle.

    Independent oracle: shares nothing with build_automaton.  The grid is
    scanned row-major (the automaton scans column-major) and each step
    covers the first empty cell with every variant whose scan-first cell
    lands on it.
    """
    if width < 1 or length < 0:
        raise ValueError("need width >= 1 and length >= 0")
    if width * length > max_cells:
        raise OracleLimitError(
            f"{width}x{length} rectangle exceeds the {max_cells}-cell oracle budget"
        )
    shifted = []
    for v in tiles.variants:
        lead_col = min(c for r, c in v.cells if r == 0)
        shifted.append(sorted((r, c - lead_col) for r, c in v.cells))
    full = (1 << (width * length)) - 1

    def count(occupied: int) -> int:
        if occupied == full:
            return 1
        free = ((occupied + 1) & ~occupied).bit_length() - 1
        r, c = divmod(free, length)
        total = 0
        for cells in shifted:
            mask = 0
            for dr, dc in cells:
                rr, cc = r + dr, c + dc
                if rr >= width or cc < 0 or cc >= length:
                    break
                bit = 1 << (rr * length + cc)
                if occupied & bit:
                    break
                mask |= bit
            else:
                total += count(occupied | mask)
        return total

    return count(0)


def to_dot(a: TransferAutomaton) -> str:
    """Render the automaton as a DOT digraph.

    Nodes carry the profile bitmap, one strip row per '/'-separated group,
    '#' marking a protruding cell; edge labels carry multiplicities.
    """
    lines = ["digraph transfer {", "  rankdir=LR;"]
    for i, packed in enumerate(a.states):
        label = _profile_label(packed, a.width, a.reach)
        shape = ' shape="doublecircle"' if i == a.start else ""
        lines.append(f'  s{i} [label="{label}"{shape}];')
    for i, row in enumerate(a.matrix):
        for j, ways in enumerate(row):
            if ways:
                lines.append(f'  s{i} -> s{j} [label="{ways}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
