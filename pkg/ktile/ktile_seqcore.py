"""
WHY: To evaluate generalized Fibonacci and Lucas numbers exactly at any index.
WHAT: Memoized evaluators for F(k,n), L(k,n), the Lucas recurrence route, and the k=2 classics.
HOW: Bottom-up iteration over Python ints into a write-once cache; a sliding window when no cache is given.
"""

import logging
import threading
from collections import deque
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from .ktile_config import CLASSIC_LUCAS_SEEDS
from .ktile_errors import CacheConflictError, CacheFormatError, InvalidArgumentError

logger = logging.getLogger(__name__)


class SequenceKind(str, Enum):
    GEN_FIB = "GenFib"
    GEN_LUCAS = "GenLucas"
    # Lucas values reached through L(k,n) = L(k,n-1) + L(k,n-k); kept apart
    # from GEN_LUCAS so the two routes never share entries.
    GEN_LUCAS_REC = "GenLucasRec"


@dataclass(frozen=True, order=True)
class SequenceKey:
    kind: SequenceKind
    k: int
    n: int

    def __post_init__(self):
        _guard(self.k, self.n)


class SequenceCache:
    """Write-once memo table mapping SequenceKey to exact values.

    Reads are lock-free; inserts are serialized so worker threads may share
    one cache. Re-inserting an equal value is a no-op, a different value
    raises CacheConflictError.
    """

    def __init__(self, entries: Optional[Dict[SequenceKey, int]] = None):
        self._entries: Dict[SequenceKey, int] = {}
        self._lock = threading.Lock()
        for key, value in (entries or {}).items():
            self.put(key, value)

    def __contains__(self, key: SequenceKey) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, key: SequenceKey) -> Optional[int]:
        return self._entries.get(key)

    def put(self, key: SequenceKey, value: int) -> None:
        if value < 0:
            raise InvalidArgumentError(f"Negative value {value} for {key}")
        with self._lock:
            existing = self._entries.get(key)
            if existing is None:
                self._entries[key] = value
            elif existing != value:
                raise CacheConflictError(
                    f"{key.kind.value}({key.k},{key.n}) already cached as {existing}, refusing {value}")

    def items(self) -> Iterator[Tuple[SequenceKey, int]]:
        """Entries in key order (kind, k, n)."""
        return iter(sorted(self._entries.items()))

    def clone(self) -> "SequenceCache":
        copy = SequenceCache()
        copy._entries = dict(self._entries)
        return copy

    def save(self, path: Union[str, Path]) -> None:
        """Writes one `kind,k,n,value` line per entry."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            f.write("# kind,k,n,value\n")
            for key, value in self.items():
                f.write(f"{key.kind.value},{key.k},{key.n},{value}\n")
        logger.info(f"Saved {len(self)} cache entries to {path}")

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SequenceCache":
        """Reads a cache file written by save(). Loaded values are trusted."""
        cache = cls()
        with open(path, "r") as f:
            for lineno, line in enumerate(f, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split(",")
                if len(parts) != 4:
                    raise CacheFormatError(f"{path}:{lineno}: expected kind,k,n,value")
                try:
                    key = SequenceKey(SequenceKind(parts[0]), int(parts[1]), int(parts[2]))
                    value = int(parts[3])
                except (ValueError, InvalidArgumentError) as e:
                    raise CacheFormatError(f"{path}:{lineno}: {e}")
                cache.put(key, value)
        logger.info(f"Loaded {len(cache)} cache entries from {path}")
        return cache


def _guard(k: int, n: int) -> None:
    if not isinstance(k, int) or not isinstance(n, int):
        raise InvalidArgumentError(f"k and n must be integers, got k={k!r}, n={n!r}")
    if k < 2:
        raise InvalidArgumentError(f"k must be >= 2, got {k}")
    if n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n}")


def _fill(cache: SequenceCache, kind: SequenceKind, k: int, n: int, base_upto: int) -> int:
    """Bottom-up fill of `kind` for indices 0..n.

    Indices <= base_upto take the value m+1; above it the recurrence
    X(m) = X(m-1) + X(m-k) applies. Shared by F (base_upto = k-1) and the
    Lucas recurrence route (base_upto = 2k-1).
    """
    target = SequenceKey(kind, k, n)
    hit = cache.get(target)
    if hit is not None:
        return hit

    # Loaded cache files may hold gaps, so walk every index and skip hits
    for m in range(n + 1):
        key = SequenceKey(kind, k, m)
        if key in cache:
            continue
        if m <= base_upto:
            value = m + 1
        else:
            value = cache.get(SequenceKey(kind, k, m - 1)) + cache.get(SequenceKey(kind, k, m - k))
        cache.put(key, value)
    return cache.get(target)


def _window(k: int, n: int, base_upto: int) -> int:
    """Same recurrence as _fill but keeps only the last k values."""
    if n <= base_upto:
        return n + 1
    last = deque((m + 1 for m in range(base_upto - k + 1, base_upto + 1)), maxlen=k)
    for _ in range(base_upto + 1, n + 1):
        last.append(last[-1] + last[0])
    return last[-1]


def gen_fib(k: int, n: int, cache: Optional[SequenceCache] = None) -> int:
    """F(k,n): n+1 for n < k, else F(k,n-1) + F(k,n-k).

    With a cache every index 0..n of F(k,.) is memoized; without one the
    evaluation keeps O(k) values, which suits very large n.

    Raises:
        InvalidArgumentError: if k < 2 or n < 0.
    """
    _guard(k, n)
    if cache is None:
        return _window(k, n, k - 1)
    return _fill(cache, SequenceKind.GEN_FIB, k, n, k - 1)


def gen_lucas(k: int, n: int, cache: Optional[SequenceCache] = None) -> int:
    """L(k,n): n+1 for n <= 2k-1, else (k-1)F(k,n-(2k-1)) + F(k,n-(k-1)).

    Raises:
        InvalidArgumentError: if k < 2 or n < 0.
    """
    _guard(k, n)
    key = SequenceKey(SequenceKind.GEN_LUCAS, k, n)
    if cache is not None and key in cache:
        return cache.get(key)
    if n <= 2 * k - 1:
        value = n + 1
    else:
        value = (k - 1) * gen_fib(k, n - (2 * k - 1), cache) + gen_fib(k, n - (k - 1), cache)
    if cache is not None:
        cache.put(key, value)
    return value


def gen_lucas_rec(k: int, n: int, cache: Optional[SequenceCache] = None) -> int:
    """L(k,n) through the recurrence L(k,n) = L(k,n-1) + L(k,n-k).

    Seeded with L(k,m) = m+1 for m <= 2k-1; the recurrence is applied only
    from n = 2k on, because between k+1 and 2k-1 it contradicts the base
    values. Independent second route to gen_lucas.

    Raises:
        InvalidArgumentError: if k < 2 or n < 0.
    """
    _guard(k, n)
    if cache is None:
        return _window(k, n, 2 * k - 1)
    return _fill(cache, SequenceKind.GEN_LUCAS_REC, k, n, 2 * k - 1)


def classic_fib(n: int, cache: Optional[SequenceCache] = None) -> int:
    """F_n = F(2,n), with F_0 = 1 and F_1 = 2."""
    return gen_fib(2, n, cache)


def classic_lucas(n: int, cache: Optional[SequenceCache] = None) -> int:
    """Classical Lucas number L_n.

    Equals L(2,n) only for n >= 3. For n = 0, 1, 2 it returns 2, 1, 3,
    whereas L(2,n) = n+1 gives 1, 2, 3 there.

    Raises:
        InvalidArgumentError: if n < 0.
    """
    _guard(2, n)
    if n < len(CLASSIC_LUCAS_SEEDS):
        return CLASSIC_LUCAS_SEEDS[n]
    return gen_lucas(2, n, cache)


def fib_row(k: int, upto: int) -> List[int]:
    """F(k,0..upto) as a plain list, computed without any cache."""
    _guard(k, upto)
    row: List[int] = []
    for m in range(upto + 1):
        row.append(m + 1 if m < k else row[m - 1] + row[m - k])
    return row


def lucas_row(k: int, upto: int) -> List[int]:
    """L(k,0..upto) straight from the defining formula over fib_row."""
    _guard(k, upto)
    f = fib_row(k, upto)
    return [m + 1 if m <= 2 * k - 1 else (k - 1) * f[m - (2 * k - 1)] + f[m - (k - 1)]
            for m in range(upto + 1)]


# Reference table rows in print order
TABLE_ROWS: Tuple[Tuple[str, str, int], ...] = (
    ("F_n", "fib", 2),
    ("F(3,n)", "fib", 3),
    ("F(4,n)", "fib", 4),
    ("L_n", "classic_lucas", 2),
    ("L(3,n)", "lucas", 3),
    ("L(4,n)", "lucas", 4),
)


def table_rows(n_min: int, n_max: int, cache: Optional[SequenceCache] = None) -> List[Tuple[str, List[int]]]:
    """The six reference-table rows over columns n_min..n_max."""
    if n_min < 0 or n_max < n_min:
        raise InvalidArgumentError(f"Invalid column range {n_min}..{n_max}")
    rows = []
    for label, route, k in TABLE_ROWS:
        if route == "fib":
            values = [gen_fib(k, n, cache) for n in range(n_min, n_max + 1)]
        elif route == "classic_lucas":
            values = [classic_lucas(n, cache) for n in range(n_min, n_max + 1)]
        else:
            values = [gen_lucas(k, n, cache) for n in range(n_min, n_max + 1)]
        rows.append((label, values))
    return rows
