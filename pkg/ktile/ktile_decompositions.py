"""
WHY: To turn the counting arguments behind each identity into explicit, checkable maps on tilings.
WHAT: Invertible decompositions (last piece, rightmost gray, trailing whites, piece before tail, last two grays) plus bijection certificates.
HOW: Each split follows Guard -> Do -> Verify: validate the tiling, cut the piece tuple, then confirm reassembly reproduces the input.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, Tuple

from .ktile_errors import (
    BoardTooSmallError,
    DecompositionError,
    FewerThanTwoGraysError,
    NoGrayError,
    NoPieceBeforeTailError,
    NotTypeBError,
    ReducedTilingNotTypeBError,
)
from .ktile_tilings import (
    Piece,
    TailSize,
    Tiling,
    enumerate_type_b,
    is_type_a,
    is_type_b,
    tail,
)

logger = logging.getLogger(__name__)


class DecompositionKind(str, Enum):
    LAST_PIECE = "last-piece"
    RIGHTMOST_GRAY = "rightmost-gray"
    TRAILING_WHITE_RUN = "trailing-white-run"
    BEFORE_TAIL = "before-tail"
    LAST_TWO_GRAYS = "last-two-grays"


def _code(pieces: Tuple[Piece, ...]) -> str:
    return "".join(p.value for p in pieces)


@dataclass(frozen=True)
class Decomposition:
    """A tiling cut into a remainder and a removed block.

    For BEFORE_TAIL the removed piece sits inside the sequence, at
    `parameters["position"]` of the remainder; every other kind removes a
    suffix.
    """
    kind: DecompositionKind
    k: int
    remainder: Tuple[Piece, ...]
    removed: Tuple[Piece, ...]
    parameters: Dict[str, int] = field(default_factory=dict)

    def reassemble(self) -> Tuple[Piece, ...]:
        if self.kind is DecompositionKind.BEFORE_TAIL:
            at = self.parameters["position"]
            return self.remainder[:at] + self.removed + self.remainder[at:]
        return self.remainder + self.removed

    def signature(self) -> Tuple[str, str, Tuple[Tuple[str, int], ...]]:
        return (_code(self.remainder), _code(self.removed), tuple(sorted(self.parameters.items())))

    def to_record(self) -> str:
        """Single-line `key=value` rendering used by the CLI."""
        params = " ".join(f"{name}={value}" for name, value in sorted(self.parameters.items()))
        line = f"kind={self.kind.value} k={self.k} remainder={_code(self.remainder) or '-'} removed={_code(self.removed)}"
        return f"{line} {params}" if params else line


def _verified(t: Tiling, d: Decomposition) -> Decomposition:
    # Verify: the cut must be lossless
    if d.reassemble() != t.pieces:
        raise DecompositionError(f"{d.kind.value} failed to reassemble {t.code}")
    return d


def split_last_piece(t: Tiling) -> Decomposition:
    """Remove the final piece, white or gray, of a type-A tiling with n >= k.

    The remainder is a type-A tiling of board n (white) or n-k+1 (gray).

    Raises:
        BoardTooSmallError: if n < k.
    """
    if t.n < t.k:
        raise BoardTooSmallError(f"last-piece split needs n >= k = {t.k}, got n={t.n}")
    last = t.pieces[-1]
    reduced_n = t.n - last.width(t.k)
    d = Decomposition(DecompositionKind.LAST_PIECE, t.k, t.pieces[:-1], (last,), {"reduced_n": reduced_n})
    return _verified(t, d)


def split_rightmost_gray(t: Tiling) -> Decomposition:
    """Remove the rightmost gray and the j whites after it.

    The remainder is a type-A tiling of n+1-k-j cells.

    Raises:
        NoGrayError: if the tiling holds no gray rectangle.
    """
    if Piece.GRAY not in t.pieces:
        raise NoGrayError(f"{t.code} has no gray rectangle")
    at = len(t.pieces) - 1 - t.pieces[::-1].index(Piece.GRAY)
    j = len(t.pieces) - at - 1
    d = Decomposition(DecompositionKind.RIGHTMOST_GRAY, t.k, t.pieces[:at], t.pieces[at:],
                      {"j": j, "reduced_n": t.n - t.k - j})
    return _verified(t, d)


def trailing_white_run(t: Tiling) -> Decomposition:
    """Remove the maximal run of trailing whites (r may be 0)."""
    r = 0
    while r < len(t.pieces) and t.pieces[-1 - r] is Piece.WHITE:
        r += 1
    cut = len(t.pieces) - r
    d = Decomposition(DecompositionKind.TRAILING_WHITE_RUN, t.k, t.pieces[:cut], t.pieces[cut:],
                      {"r": r, "reduced_n": t.n - r})
    return _verified(t, d)


def split_before_tail(t: Tiling) -> Decomposition:
    """Remove the single piece immediately preceding the tail of a type-B tiling.

    A white leaves a board of n cells, a gray one of n-k+1 cells; in both
    cases the remainder is checked to be type-B again. A black before the
    tail is returned as its own case, without a reduced board.

    Raises:
        BoardTooSmallError: if n < 2k.
        NotTypeBError: if t is not type-B.
        NoPieceBeforeTailError: if the tail covers the whole tiling.
        ReducedTilingNotTypeBError: if the shortened sequence is not type-B.
    """
    if t.n < 2 * t.k:
        raise BoardTooSmallError(f"before-tail split needs n >= 2k = {2 * t.k}, got n={t.n}")
    if not is_type_b(t.k, t.n, t.pieces):
        raise NotTypeBError(f"{t.code} is not a type-B tiling for k={t.k}, n={t.n}")

    descriptor = tail(t)
    at = descriptor.start_piece_index - 1
    if at < 0:
        raise NoPieceBeforeTailError(f"{t.code} has no piece before its tail")

    piece = t.pieces[at]
    parameters = {
        "position": at,
        "tail_size": t.k - 1 if descriptor.size is TailSize.K_MINUS_1 else t.k,
    }
    if piece is not Piece.BLACK:
        parameters["reduced_n"] = t.n - piece.width(t.k)

    d = _verified(t, Decomposition(DecompositionKind.BEFORE_TAIL, t.k,
                                   t.pieces[:at] + t.pieces[at + 1:], (piece,), parameters))
    if piece is not Piece.BLACK and not is_type_b(t.k, parameters["reduced_n"], d.remainder):
        logger.debug(f"Remainder {_code(d.remainder)} of {t.code} is not type-B",
                     extra={"k": t.k, "n": t.n})
        raise ReducedTilingNotTypeBError(
            f"removing {piece.value} before the tail of {t.code} leaves {_code(d.remainder)}, "
            f"not type-B for n={parameters['reduced_n']}", decomposition=d)
    return d


def split_last_two_grays(t: Tiling) -> Decomposition:
    """Remove the final [gray, w^i, gray, w^j] block.

    The remainder is a type-A tiling of n+1-2k-i-j cells.

    Raises:
        FewerThanTwoGraysError: if fewer than two grays are present.
    """
    grays = [idx for idx, p in enumerate(t.pieces) if p is Piece.GRAY]
    if len(grays) < 2:
        raise FewerThanTwoGraysError(f"{t.code} has {len(grays)} gray rectangle(s), needs 2")
    first, second = grays[-2], grays[-1]
    i = second - first - 1
    j = len(t.pieces) - second - 1
    d = Decomposition(DecompositionKind.LAST_TWO_GRAYS, t.k, t.pieces[:first], t.pieces[first:],
                      {"i": i, "j": j, "reduced_n": t.n - 2 * t.k - i - j})
    return _verified(t, d)


SPLITTERS: Dict[DecompositionKind, Callable[[Tiling], Decomposition]] = {
    DecompositionKind.LAST_PIECE: split_last_piece,
    DecompositionKind.RIGHTMOST_GRAY: split_rightmost_gray,
    DecompositionKind.TRAILING_WHITE_RUN: trailing_white_run,
    DecompositionKind.BEFORE_TAIL: split_before_tail,
    DecompositionKind.LAST_TWO_GRAYS: split_last_two_grays,
}


def decompose(kind: DecompositionKind, t: Tiling) -> Decomposition:
    return SPLITTERS[DecompositionKind(kind)](t)


@dataclass(frozen=True)
class BijectionCertificate:
    kind: DecompositionKind
    checked: int
    skipped: int
    reassembled: bool
    injective: bool

    @property
    def ok(self) -> bool:
        return self.reassembled and self.injective


def check_bijection(kind: DecompositionKind, tilings: Iterable[Tiling]) -> BijectionCertificate:
    """Reassembly and injectivity of one decomposition over a tiling set.

    Tilings outside the decomposition's domain (it raises a
    DecompositionError or a precondition error) are skipped and counted.
    Remainders that fail the type-B re-check still count, since the map
    itself is defined for them.
    """
    seen = set()
    checked = skipped = 0
    reassembled = injective = True
    for t in tilings:
        try:
            d = decompose(kind, t)
        except ReducedTilingNotTypeBError as e:
            d = e.decomposition
        except (DecompositionError, BoardTooSmallError, NotTypeBError):
            skipped += 1
            continue
        checked += 1
        if d.reassemble() != t.pieces:
            reassembled = False
        sig = d.signature()
        if sig in seen:
            injective = False
        seen.add(sig)
    return BijectionCertificate(DecompositionKind(kind), checked, skipped, reassembled, injective)


def count_by_grays(tilings: Iterable[Tiling]) -> Counter:
    """Tilings counted by their number of gray rectangles."""
    return Counter(t.pieces.count(Piece.GRAY) for t in tilings)


def class_sizes(kind: DecompositionKind, tilings: Iterable[Tiling], parameter: str) -> Counter:
    """Tilings grouped by one decomposition parameter.

    Out-of-domain tilings, and decompositions without that parameter, are
    counted under None.
    """
    sizes: Counter = Counter()
    for t in tilings:
        try:
            sizes[decompose(kind, t).parameters.get(parameter)] += 1
        except ReducedTilingNotTypeBError as e:
            sizes[e.decomposition.parameters.get(parameter)] += 1
        except (DecompositionError, BoardTooSmallError, NotTypeBError):
            sizes[None] += 1
    return sizes


def grays_before_tail_profile(k: int, n: int) -> Dict[Tuple[int, str], int]:
    """Type-B tilings (n >= 2k) by the run of grays just before the tail.

    Keys are (number of grays in the run, code of the piece preceding the
    run). Exploratory output only: the sizes are reported, not matched
    against predicted Lucas values.
    """
    profile: Counter = Counter()
    for t in enumerate_type_b(k, n):
        at = tail(t).start_piece_index - 1
        grays = 0
        while at >= 0 and t.pieces[at] is Piece.GRAY:
            grays += 1
            at -= 1
        profile[(grays, t.pieces[at].value if at >= 0 else "-")] += 1
    return dict(sorted(profile.items()))


def is_valid_remainder(d: Decomposition) -> bool:
    """True when the remainder is a type-A tiling of its reduced board."""
    if "reduced_n" not in d.parameters or d.parameters["reduced_n"] < 0:
        return False
    return is_type_a(d.k, d.parameters["reduced_n"], d.remainder)
