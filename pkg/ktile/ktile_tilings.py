"""
WHY: To give F(k,n) and L(k,n) a concrete combinatorial model that can be counted by brute force.
WHAT: Pieces, tilings of a 1 x (n+1) board, the type-A / type-B predicates, enumerators, tails and a text codec.
HOW: Explicit-stack depth-first generation in code order (b < g < w) with pruning on the black square's cell.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .ktile_config import enumeration_limit
from .ktile_errors import (
    BoardTooSmallError,
    EnumerationLimitError,
    InvalidArgumentError,
    InvariantViolationError,
    MalformedCodeError,
    NotTypeBError,
)
from .ktile_seqcore import SequenceCache, gen_fib, gen_lucas

logger = logging.getLogger(__name__)


class Piece(str, Enum):
    BLACK = "b"
    GRAY = "g"
    WHITE = "w"

    def width(self, k: int) -> int:
        return k if self is Piece.GRAY else 1


class TailSize(str, Enum):
    K_MINUS_1 = "k-1"
    K = "k"


def _violation(k: int, n: int, pieces: Sequence[Piece]) -> Optional[str]:
    """Reason why `pieces` is not a type-A tiling of board n+1, or None."""
    if not isinstance(k, int) or k < 2:
        return f"k must be an integer >= 2, got {k!r}"
    if not isinstance(n, int) or n < 0:
        return f"n must be an integer >= 0, got {n!r}"
    if not all(isinstance(p, Piece) for p in pieces):
        return "pieces must be Piece values"

    cell = 1
    black_at = None
    for piece in pieces:
        if piece is Piece.BLACK:
            if black_at is not None:
                return "more than one black square"
            black_at = cell
        cell += piece.width(k)

    if cell - 1 != n + 1:
        return f"piece widths sum to {cell - 1}, board has {n + 1} cells"
    if black_at is None:
        return "no black square"
    if black_at > k:
        return f"black square at cell {black_at}, must be within the first {k}"
    return None


@dataclass(frozen=True)
class Tiling:
    """A type-A tiling: one black square in the first k cells, whites and k-wide grays elsewhere."""
    k: int
    board_length: int
    pieces: Tuple[Piece, ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        reason = _violation(self.k, self.board_length - 1, self.pieces)
        if reason is not None:
            raise InvariantViolationError(reason)

    @property
    def n(self) -> int:
        return self.board_length - 1

    @property
    def code(self) -> str:
        return "".join(p.value for p in self.pieces)

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class TailDescriptor:
    """Tail of a type-B tiling.

    `gray_offset` counts the whites that precede the gray inside a size-k
    tail, so it ranges over 1..k-1; it is None for size k-1. Under this
    count k=3 "wbwgw" has offset 1, not the 1-based slot 2.
    """
    size: TailSize
    start_piece_index: int
    gray_offset: Optional[int] = None


def black_cell(t: Tiling) -> int:
    """1-based cell index of the black square."""
    cell = 1
    for piece in t.pieces:
        if piece is Piece.BLACK:
            return cell
        cell += piece.width(t.k)
    raise InvariantViolationError("no black square")


def is_type_a(k: int, n: int, pieces: Sequence[Piece]) -> bool:
    """True iff the widths fill n+1 cells with exactly one black square within the first k cells."""
    try:
        return _violation(k, n, tuple(pieces)) is None
    except TypeError:
        return False


def is_type_b(k: int, n: int, pieces: Sequence[Piece]) -> bool:
    """Type-A plus the Lucas-side conditions.

    For k <= n < 2k at least n-k+1 pieces follow the black square and at
    least n-k of all pieces after it are white. For n >= 2k at least k
    pieces exist and the last k include at least k-1 whites.
    """
    if not is_type_a(k, n, pieces):
        return False
    pieces = tuple(pieces)
    if n < k:
        return True
    if n < 2 * k:
        after = pieces[pieces.index(Piece.BLACK) + 1:]
        whites = sum(1 for p in after if p is Piece.WHITE)
        return len(after) >= n - k + 1 and whites >= n - k
    if len(pieces) < k:
        return False
    return sum(1 for p in pieces[-k:] if p is Piece.WHITE) >= k - 1


def _check_enumeration(k: int, n: int, limit: Optional[int]) -> None:
    if not isinstance(k, int) or k < 2:
        raise InvalidArgumentError(f"k must be >= 2, got {k!r}")
    if not isinstance(n, int) or n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n!r}")
    bound = enumeration_limit() if limit is None else limit
    if n > bound:
        logger.warning(f"Enumeration refused for k={k}, n={n}: limit is {bound}")
        raise EnumerationLimitError(
            f"n={n} exceeds the enumeration limit {bound} (raise it with --limit or KTILE_ENUM_LIMIT)")


def _type_a_pieces(k: int, n: int) -> Iterator[Tuple[Piece, ...]]:
    board = n + 1
    # (prefix, next free cell, black placed)
    stack = [((), 1, False)]
    while stack:
        prefix, cell, has_black = stack.pop()
        if cell > board:
            if has_black:
                yield prefix
            continue
        children = []
        if not has_black and cell <= k:
            children.append((prefix + (Piece.BLACK,), cell + 1, True))
        # a gray ahead of the black would push it past cell k
        if has_black and cell + k - 1 <= board:
            children.append((prefix + (Piece.GRAY,), cell + k, True))
        if has_black or cell < k:
            children.append((prefix + (Piece.WHITE,), cell + 1, has_black))
        stack.extend(reversed(children))


def enumerate_type_a(k: int, n: int, limit: Optional[int] = None) -> Iterator[Tiling]:
    """Every type-A tiling of a 1 x (n+1) board, in code order.

    Raises:
        EnumerationLimitError: if n exceeds `limit` (default KTILE_ENUM_LIMIT).
    """
    _check_enumeration(k, n, limit)
    return (Tiling(k, n + 1, pieces) for pieces in _type_a_pieces(k, n))


def enumerate_type_b(k: int, n: int, limit: Optional[int] = None) -> Iterator[Tiling]:
    """Every type-B tiling of a 1 x (n+1) board, in code order."""
    _check_enumeration(k, n, limit)
    return (Tiling(k, n + 1, pieces) for pieces in _type_a_pieces(k, n)
            if is_type_b(k, n, pieces))


def tail(t: Tiling) -> TailDescriptor:
    """Classify the tail of a type-B tiling with n >= 2k.

    Size k-1 when the last k-1 pieces are white, otherwise size k with one
    gray among the last k pieces, never in the first slot.

    Raises:
        BoardTooSmallError: if n < 2k.
        NotTypeBError: if t is not type-B.
    """
    k = t.k
    if t.n < 2 * k:
        raise BoardTooSmallError(f"tail needs n >= 2k = {2 * k}, got n={t.n}")
    if not is_type_b(k, t.n, t.pieces):
        raise NotTypeBError(f"{t.code} is not a type-B tiling for k={k}, n={t.n}")

    pieces = t.pieces
    if all(p is Piece.WHITE for p in pieces[-(k - 1):]):
        return TailDescriptor(TailSize.K_MINUS_1, len(pieces) - (k - 1))

    start = len(pieces) - k
    window = pieces[start:]
    offset = window.index(Piece.GRAY) if Piece.GRAY in window else 0
    # Verify: k-1 whites plus one gray that does not lead the tail
    if offset < 1 or window.count(Piece.WHITE) != k - 1:
        raise InvariantViolationError(f"{t.code}: malformed size-k tail {''.join(p.value for p in window)!r}")
    return TailDescriptor(TailSize.K, start, offset)


def tail_classes(k: int, n: int, limit: Optional[int] = None) -> Counter:
    """Type-B tilings of board n+1 (n >= 2k) counted by tail size."""
    return Counter(tail(t).size for t in enumerate_type_b(k, n, limit))


def encode(t: Tiling) -> str:
    """One character per piece: 'b', 'g' or 'w'."""
    return t.code


def decode(k: int, n: int, code: str) -> Tiling:
    """Parse a code string back into a validated Tiling.

    Raises:
        MalformedCodeError: on characters outside {w, b, g}.
        InvariantViolationError: if the pieces are not a type-A tiling.
    """
    if not isinstance(k, int) or k < 2 or not isinstance(n, int) or n < 0:
        raise InvalidArgumentError(f"Invalid board parameters k={k!r}, n={n!r}")
    bad = sorted({ch for ch in code if ch not in "bgw"})
    if bad or not code:
        raise MalformedCodeError(f"Code {code!r} must be non-empty over 'b', 'g', 'w' (bad: {''.join(bad)})")
    return Tiling(k, n + 1, tuple(Piece(ch) for ch in code))


def render(t: Tiling) -> str:
    """ASCII board: '#' black, ' ' white, '=' per gray cell, '|' between pieces."""
    cells = {Piece.BLACK: "#", Piece.WHITE: " ", Piece.GRAY: "=" * t.k}
    return "|" + "|".join(cells[p] for p in t.pieces) + "|"


@dataclass(frozen=True)
class OracleRecord:
    """Enumerated counts next to the sequence values at one (k, n)."""
    k: int
    n: int
    count_a: int
    fib: int
    count_b: int
    lucas: int

    @property
    def ok(self) -> bool:
        return self.count_a == self.fib and self.count_b == self.lucas

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "type_a": self.count_a, "F": self.fib,
                "type_b": self.count_b, "L": self.lucas, "agree": self.ok}


def count_oracle(k_values: Iterable[int], n_values: Iterable[int], limit: Optional[int] = None,
                 cache: Optional[SequenceCache] = None) -> List[OracleRecord]:
    """Brute-force counts of both tiling classes against F(k,n) and L(k,n).

    Raises:
        EnumerationLimitError: if any n exceeds the enumeration limit.
    """
    k_values = sorted(set(k_values))
    n_values = sorted(set(n_values))
    # Guard: refuse the whole grid before any enumeration starts
    for k in k_values:
        for n in n_values:
            _check_enumeration(k, n, limit)

    records = []
    for k in k_values:
        for n in n_values:
            count_a = count_b = 0
            for pieces in _type_a_pieces(k, n):
                count_a += 1
                count_b += is_type_b(k, n, pieces)
            record = OracleRecord(k, n, count_a, gen_fib(k, n, cache), count_b, gen_lucas(k, n, cache))
            if not record.ok:
                logger.warning(f"Enumeration disagrees with the sequences: {record}",
                               extra={"k": k, "n": n})
            records.append(record)
    return records
