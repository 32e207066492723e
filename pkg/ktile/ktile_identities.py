"""
WHY: To check every printed identity on F(k,n) and L(k,n) exactly, and to expose where a printed form fails.
WHAT: The identity registry (as printed and corrected variants), per-point evaluation, grid verification with counterexamples.
HOW: Each identity carries two independent right-hand sides (memoized naive sums vs. straight-line rows with prefix or weighted sums); evaluation fails loudly if they ever disagree.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import accumulate
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .ktile_config import CLASSIC_LUCAS_SEEDS, multiplier_limit as default_multiplier_limit, worker_count
from .ktile_errors import (
    EvaluatorDisagreementError,
    InvalidArgumentError,
    NotApplicableError,
    UnknownIdentityError,
)
from .ktile_seqcore import (
    SequenceCache,
    classic_fib,
    classic_lucas,
    fib_row,
    gen_fib,
    gen_lucas,
    lucas_row,
)

logger = logging.getLogger(__name__)

CLASSIC = "classic"
GENERALIZED = "generalized"


class Variant(str, Enum):
    AS_PRINTED = "as-printed"
    CORRECTED = "corrected"


# (k, n, cache, convention) -> value
Evaluator = Callable[[int, int, SequenceCache, str], int]
# (k, n, convention) -> value, without the cache
CheckEvaluator = Callable[[int, int, str], int]
Predicate = Callable[[int, int], bool]


@dataclass(frozen=True)
class IdentityDescriptor:
    """One identity: where it applies and how to evaluate both sides.

    `explorable` marks points outside the stated range that are evaluated
    only on request; their verdicts never count toward pass/fail.
    For `multiplier` identities n is the multiplier of k, not a board index.
    """
    id: str
    argument: str
    statement: str
    variant: Variant
    applicable: Predicate
    lhs: Evaluator
    rhs: Evaluator
    rhs_check: CheckEvaluator
    explorable: Optional[Predicate] = None
    multiplier: bool = False
    conventions: Tuple[str, ...] = ("",)

    def label(self, convention: str = "") -> str:
        return f"{self.id}[{convention}]" if convention else self.id

    def applies(self, k: int, n: int) -> bool:
        return k >= 2 and n >= 0 and self.applicable(k, n)

    def explores(self, k: int, n: int) -> bool:
        return (k >= 2 and n >= 0 and self.explorable is not None
                and not self.applicable(k, n) and self.explorable(k, n))


@dataclass(frozen=True)
class EvaluationRecord:
    identity_id: str
    variant: Variant
    k: int
    n: int
    lhs: int
    rhs: int
    convention: str = ""
    exploratory: bool = False

    @property
    def matched(self) -> bool:
        return self.lhs == self.rhs

    @property
    def label(self) -> str:
        return f"{self.identity_id}[{self.convention}]" if self.convention else self.identity_id

    def to_dict(self) -> Dict[str, object]:
        return {
            "identity_id": self.identity_id,
            "variant": self.variant.value,
            "convention": self.convention,
            "k": self.k,
            "n": self.n,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "matched": self.matched,
            "exploratory": self.exploratory,
        }


@dataclass
class IdentitySummary:
    label: str
    identity_id: str
    variant: Variant
    passed: int = 0
    failed: int = 0
    first_counterexample: Optional[EvaluationRecord] = None
    explored_passed: int = 0
    explored_failed: int = 0
    explored_holds: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def evaluated(self) -> bool:
        return bool(self.passed or self.failed or self.explored_passed or self.explored_failed)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict[str, object]:
        first = self.first_counterexample
        return {
            "identity": self.label,
            "variant": self.variant.value,
            "passed": self.passed,
            "failed": self.failed,
            "first_counterexample": None if first is None else {
                "k": first.k, "n": first.n, "lhs": first.lhs, "rhs": first.rhs},
            "explored_passed": self.explored_passed,
            "explored_failed": self.explored_failed,
            "explored_holds": [list(point) for point in self.explored_holds],
            "evaluated": self.evaluated,
        }


@dataclass(frozen=True)
class GridSpec:
    ids: Tuple[str, ...]
    k_values: Tuple[int, ...]
    n_limit: int
    multiplier_limit: int
    explore: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "ids": list(self.ids),
            "k_values": list(self.k_values),
            "n_limit": self.n_limit,
            "multiplier_limit": self.multiplier_limit,
            "explore": self.explore,
        }


@dataclass
class VerificationReport:
    grid: GridSpec
    records: List[EvaluationRecord]
    summaries: List[IdentitySummary]

    @property
    def all_matched(self) -> bool:
        return all(s.ok for s in self.summaries)

    @property
    def exit_code(self) -> int:
        return 0 if self.all_matched else 1

    def to_dict(self) -> Dict[str, object]:
        return {
            "grid": self.grid.to_dict(),
            "records": [r.to_dict() for r in self.records],
            "summary": [s.to_dict() for s in self.summaries],
        }


# Summation helpers. The naive forms walk the memoized sequence term by
# term; the check forms work on a plain row with prefix or weighted sums.

def _span(row: Sequence[int], a: int, b: int) -> int:
    """sum(row[a..b]) through prefix sums; empty when b < a."""
    if b < a:
        return 0
    prefix = [0] + list(accumulate(row))
    return prefix[b + 1] - prefix[a]


def _double_naive(term: Callable[[int], int], m: int) -> int:
    """sum_{j=0}^{m} sum_{i=0}^{m-j} term(m-i-j)"""
    return sum(term(m - i - j) for j in range(m + 1) for i in range(m - j + 1))


def _weighted(row: Sequence[int], m: int) -> int:
    """sum_{s=0}^{m} (s+1) row[m-s], the collapsed double sum."""
    return sum((s + 1) * row[m - s] for s in range(m + 1))


def _classic_lucas_row(upto: int) -> List[int]:
    row = lucas_row(2, max(upto, 3))
    row[:3] = CLASSIC_LUCAS_SEEDS
    return row[:upto + 1]


def _lucas_term(convention: str, cache: SequenceCache) -> Callable[[int], int]:
    if convention == CLASSIC:
        return lambda i: classic_lucas(i, cache)
    return lambda i: gen_lucas(2, i, cache)


def _one_gray_as_printed(k: int, n: int) -> int:
    return (k - 1) * (n + 1 - k) - k * (k - 1) // 2


def _one_gray_corrected(k: int, n: int) -> int:
    return k * (n + 1 - k) - k * (k - 1) // 2


def _lucas_linear_as_printed(k: int, n: int) -> int:
    return (k + k * (k - 1) + (k - 1) * (n + 1 - (k - 1) - k)
            + (k - 1) * (n + 1 - (2 * k - 1) - k) - k * (k - 1))


def _build_registry() -> Tuple[IdentityDescriptor, ...]:
    F = gen_fib
    L = gen_lucas
    AS_PRINTED, CORRECTED = Variant.AS_PRINTED, Variant.CORRECTED

    return (
        IdentityDescriptor(
            id="I-3.1",
            argument="last piece before k-1 trailing whites",
            statement="F(k,n-(k-1)) = F(k,n-k) + F(k,n-(2k-1)), n >= 2k",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= 2 * k,
            lhs=lambda k, n, c, _: F(k, n - (k - 1), c),
            rhs=lambda k, n, c, _: F(k, n - k, c) + F(k, n - (2 * k - 1), c),
            rhs_check=lambda k, n, _: (lambda f: f[n - k] + f[n - (2 * k - 1)])(fib_row(k, n)),
        ),
        IdentityDescriptor(
            id="I-3.2",
            argument="rightmost gray and the whites after it",
            statement="F(k,n) = k + sum_{i=0}^{n-k} F(k,i), n >= k+1",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= k + 1,
            lhs=lambda k, n, c, _: F(k, n, c),
            rhs=lambda k, n, c, _: k + sum(F(k, i, c) for i in range(n - k + 1)),
            rhs_check=lambda k, n, _: k + _span(fib_row(k, n), 0, n - k),
        ),
        IdentityDescriptor(
            id="I-3.3",
            argument="white square followed by a run of grays at the end",
            statement="F(k,nk) = 1 + sum_{i=1}^{n} F(k,ik-1), multiplier n >= k",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= k,
            multiplier=True,
            lhs=lambda k, n, c, _: F(k, n * k, c),
            rhs=lambda k, n, c, _: 1 + sum(F(k, i * k - 1, c) for i in range(1, n + 1)),
            rhs_check=lambda k, n, _: 1 + sum(fib_row(k, n * k)[k - 1::k][:n]),
        ),
        IdentityDescriptor(
            id="I-3.4",
            argument="number of trailing whites, capped at k-1",
            statement="F(k,n) = sum_{i=0}^{k-1} F(k,n-(k-1)-i), n >= 2k-2",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= 2 * k - 2,
            lhs=lambda k, n, c, _: F(k, n, c),
            rhs=lambda k, n, c, _: sum(F(k, n - (k - 1) - i, c) for i in range(k)),
            rhs_check=lambda k, n, _: _span(fib_row(k, n), n - 2 * k + 2, n - k + 1),
        ),
        IdentityDescriptor(
            id="I-3.5",
            argument="swap k-2 trailing whites for a final gray",
            statement="F(k,n) = F(k,n-1) + F(k,n-2) - sum_{i=0}^{k-3} F(k,n-(2k-1)+i), n >= 2k-1",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= 2 * k - 1,
            lhs=lambda k, n, c, _: F(k, n, c),
            rhs=lambda k, n, c, _: (F(k, n - 1, c) + F(k, n - 2, c)
                                    - sum(F(k, n - (2 * k - 1) + i, c) for i in range(k - 2))),
            rhs_check=lambda k, n, _: (lambda f: f[n - 1] + f[n - 2]
                                       - _span(f, n - (2 * k - 1), n - k - 2))(fib_row(k, n)),
        ),
        IdentityDescriptor(
            id="I-3.6",
            argument="piece immediately before the tail",
            statement="L(k,n) = L(k,n-1) + L(k,n-k), checked for n >= 2k (printed: n >= k)",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= 2 * k,
            explorable=lambda k, n: k <= n < 2 * k,
            lhs=lambda k, n, c, _: L(k, n, c),
            rhs=lambda k, n, c, _: L(k, n - 1, c) + L(k, n - k, c),
            rhs_check=lambda k, n, _: (lambda r: r[n - 1] + r[n - k])(lucas_row(k, n)),
        ),
        IdentityDescriptor(
            id="I-3.7",
            argument="tail size, then the piece before a size k-1 tail",
            statement="L(k,n) = k F(k,n-(2k-1)) + F(k,n-k), n >= 2k",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= 2 * k,
            lhs=lambda k, n, c, _: L(k, n, c),
            rhs=lambda k, n, c, _: k * F(k, n - (2 * k - 1), c) + F(k, n - k, c),
            rhs_check=lambda k, n, _: (lambda f: k * f[n - (2 * k - 1)] + f[n - k])(fib_row(k, n)),
        ),
        IdentityDescriptor(
            id="I-3.8",
            argument="grays immediately before the tail",
            statement="L(k,nk+1) = sum_{i=0}^{n} L(k,ik), multiplier n >= 2k (explored from 1)",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= 2 * k,
            explorable=lambda k, n: 1 <= n < 2 * k,
            multiplier=True,
            lhs=lambda k, n, c, _: L(k, n * k + 1, c),
            rhs=lambda k, n, c, _: sum(L(k, i * k, c) for i in range(n + 1)),
            rhs_check=lambda k, n, _: list(accumulate(lucas_row(k, n * k + 1)[0::k]))[n],
        ),
        IdentityDescriptor(
            id="I-4.1",
            argument="trailing whites, at least k or fewer",
            statement="F(k,n+k) = F(k,n) + sum_{i=0}^{k-1} F(k,n-i), n >= k",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= k,
            lhs=lambda k, n, c, _: F(k, n + k, c),
            rhs=lambda k, n, c, _: F(k, n, c) + sum(F(k, n - i, c) for i in range(k)),
            rhs_check=lambda k, n, _: (lambda f: f[n] + _span(f, n - k + 1, n))(fib_row(k, n)),
        ),
        IdentityDescriptor(
            id="I-4.2p",
            argument="gray count, then whites between the last two grays",
            statement="F(k,n) = k + (k-1)(n+1-k) - k(k-1)/2 + sum_j sum_i F(k,n-2k-i-j), n >= 2k",
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= 2 * k,
            lhs=lambda k, n, c, _: F(k, n, c),
            rhs=lambda k, n, c, _: (k + _one_gray_as_printed(k, n)
                                    + _double_naive(lambda i: F(k, i, c), n - 2 * k)),
            rhs_check=lambda k, n, _: (k + _one_gray_as_printed(k, n)
                                       + _weighted(fib_row(k, n), n - 2 * k)),
        ),
        IdentityDescriptor(
            id="I-4.2c",
            argument="gray count, then whites between the last two grays",
            statement="F(k,n) = k + k(n+1-k) - k(k-1)/2 + sum_j sum_i F(k,n-2k-i-j), n >= 2k",
            variant=CORRECTED,
            applicable=lambda k, n: n >= 2 * k,
            lhs=lambda k, n, c, _: F(k, n, c),
            rhs=lambda k, n, c, _: (k + _one_gray_corrected(k, n)
                                    + _double_naive(lambda i: F(k, i, c), n - 2 * k)),
            rhs_check=lambda k, n, _: (k + _one_gray_corrected(k, n)
                                       + _weighted(fib_row(k, n), n - 2 * k)),
        ),
        IdentityDescriptor(
            id="I-4.3p",
            argument="gray count at k = 2",
            statement="F_n = n + sum_{i=0}^{n-4} (i+1) F_{n-4-i}, k = 2, n >= 4",
            variant=AS_PRINTED,
            applicable=lambda k, n: k == 2 and n >= 4,
            lhs=lambda k, n, c, _: classic_fib(n, c),
            rhs=lambda k, n, c, _: n + sum((i + 1) * classic_fib(n - 4 - i, c) for i in range(n - 3)),
            rhs_check=lambda k, n, _: n + _double_naive(fib_row(2, n).__getitem__, n - 4),
        ),
        IdentityDescriptor(
            id="I-4.3c",
            argument="gray count at k = 2",
            statement="F_n = (2n-1) + sum_{i=0}^{n-4} (i+1) F_{n-4-i}, k = 2, n >= 4",
            variant=CORRECTED,
            applicable=lambda k, n: k == 2 and n >= 4,
            lhs=lambda k, n, c, _: classic_fib(n, c),
            rhs=lambda k, n, c, _: (2 * n - 1 + sum((i + 1) * classic_fib(n - 4 - i, c)
                                                    for i in range(n - 3))),
            rhs_check=lambda k, n, _: 2 * n - 1 + _double_naive(fib_row(2, n).__getitem__, n - 4),
        ),
        IdentityDescriptor(
            id="I-4.4p",
            argument="gray count and tail size, then whites between the last two grays",
            statement=("L(k,n) = k + k(k-1) + (k-1)(n+1-(k-1)-k) + (k-1)(n+1-(2k-1)-k) - k(k-1)"
                       " + sum_j sum_i L(k,n-2k-i-j), n >= 2k"),
            variant=AS_PRINTED,
            applicable=lambda k, n: n >= 2 * k,
            lhs=lambda k, n, c, _: L(k, n, c),
            rhs=lambda k, n, c, _: (_lucas_linear_as_printed(k, n)
                                    + _double_naive(lambda i: L(k, i, c), n - 2 * k)),
            rhs_check=lambda k, n, _: (k + (k - 1) * (n + 2 - 2 * k) + (k - 1) * (n + 2 - 3 * k)
                                       + _weighted(lucas_row(k, n), n - 2 * k)),
        ),
        IdentityDescriptor(
            id="I-4.5p",
            argument="gray count and tail size at k = 2",
            statement="L_n = 2(n-2) + sum_{i=0}^{n-4} (i+1) L_{n-4-i}, k = 2, n >= 4",
            variant=AS_PRINTED,
            applicable=lambda k, n: k == 2 and n >= 4,
            conventions=(CLASSIC, GENERALIZED),
            lhs=lambda k, n, c, _: classic_lucas(n, c),
            rhs=lambda k, n, c, conv: (2 * (n - 2) + sum((i + 1) * _lucas_term(conv, c)(n - 4 - i)
                                                         for i in range(n - 3))),
            rhs_check=lambda k, n, conv: 2 * (n - 2) + _double_naive(
                (_classic_lucas_row(n) if conv == CLASSIC else lucas_row(2, n)).__getitem__, n - 4),
        ),
        IdentityDescriptor(
            id="I-3FN",
            argument="trailing-white count at k = 2, shifted by F(2,n-2)",
            statement="F(2,n+2) + F(2,n-2) = 3 F(2,n), k = 2, n >= 2",
            variant=AS_PRINTED,
            applicable=lambda k, n: k == 2 and n >= 2,
            lhs=lambda k, n, c, _: F(2, n + 2, c) + F(2, n - 2, c),
            rhs=lambda k, n, c, _: 3 * F(2, n, c),
            rhs_check=lambda k, n, _: 3 * fib_row(2, n)[n],
        ),
    )


_REGISTRY = _build_registry()
_BY_ID = {d.id: d for d in _REGISTRY}


def registry() -> List[IdentityDescriptor]:
    """Every registered identity, in report order."""
    return list(_REGISTRY)


def lookup(identity_id: str) -> IdentityDescriptor:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentityError(
            f"Unknown identity {identity_id!r}; known: {', '.join(_BY_ID)}")


def evaluate_identity(d: IdentityDescriptor, k: int, n: int, cache: Optional[SequenceCache] = None,
                      convention: Optional[str] = None) -> EvaluationRecord:
    """Evaluate both sides of `d` at (k, n).

    Points in the explorable range are evaluated too and tagged
    exploratory.

    Raises:
        NotApplicableError: outside both the stated and the explorable range.
        EvaluatorDisagreementError: if the two right-hand-side routes differ.
    """
    # Guard
    if d.applies(k, n):
        exploratory = False
    elif d.explores(k, n):
        exploratory = True
    else:
        raise NotApplicableError(f"{d.id} does not apply at k={k}, n={n}")
    if convention is None:
        convention = d.conventions[0]
    if convention not in d.conventions:
        raise InvalidArgumentError(f"{d.id} has no convention {convention!r}")
    cache = SequenceCache() if cache is None else cache

    # Do
    lhs = d.lhs(k, n, cache, convention)
    rhs = d.rhs(k, n, cache, convention)

    # Verify
    check = d.rhs_check(k, n, convention)
    if check != rhs:
        logger.error(f"{d.id}: right-hand sides disagree ({rhs} vs {check})",
                     extra={"identity": d.id, "k": k, "n": n})
        raise EvaluatorDisagreementError(f"{d.id} at k={k}, n={n}: rhs {rhs} != straight-line {check}")

    record = EvaluationRecord(d.id, d.variant, k, n, lhs, rhs, convention, exploratory)
    if not record.matched:
        logger.debug(f"{record.label}: {lhs} != {rhs}", extra={"identity": d.id, "k": k, "n": n})
    return record


def _select(ids: Optional[Iterable[str]]) -> List[IdentityDescriptor]:
    if ids is None:
        return registry()
    wanted = {lookup(i).id for i in ids}
    return [d for d in _REGISTRY if d.id in wanted]


def grid_points(d: IdentityDescriptor, k_values: Sequence[int], n_limit: int, m_limit: int,
                explore: bool) -> List[Tuple[int, int]]:
    top = m_limit if d.multiplier else n_limit
    return [(k, n) for k in k_values for n in range(top + 1)
            if d.applies(k, n) or (explore and d.explores(k, n))]


def verify_grid(ids: Optional[Iterable[str]], k_range: Iterable[int], n_limit: int,
                cache: Optional[SequenceCache] = None, multiplier_limit: Optional[int] = None,
                explore: bool = False, workers: Optional[int] = None,
                convention: Optional[str] = None) -> VerificationReport:
    """Evaluate the selected identities at every applicable grid point.

    Records are ordered by registry order, convention, k, then n, whatever
    the worker count. `convention` restricts multi-convention identities
    to one reading; None evaluates all of them.

    Raises:
        InvalidArgumentError: on an empty k range or a negative limit.
        UnknownIdentityError: if `ids` names an unregistered identity.
    """
    # Guard
    k_values = tuple(sorted(set(k_range)))
    if not k_values or k_values[0] < 2:
        raise InvalidArgumentError(f"k range must be non-empty with k >= 2, got {list(k_values)}")
    if n_limit < 0:
        raise InvalidArgumentError(f"n limit must be >= 0, got {n_limit}")
    m_limit = default_multiplier_limit() if multiplier_limit is None else multiplier_limit
    if m_limit < 0:
        raise InvalidArgumentError(f"multiplier limit must be >= 0, got {m_limit}")
    workers = worker_count() if workers is None else max(1, workers)
    selected = _select(ids)
    cache = SequenceCache() if cache is None else cache

    # Do
    jobs = []
    summaries: Dict[str, IdentitySummary] = {}
    for d in selected:
        conventions = d.conventions if convention is None or convention not in d.conventions else (convention,)
        for conv in conventions:
            label = d.label(conv)
            summaries[label] = IdentitySummary(label, d.id, d.variant)
            for k, n in grid_points(d, k_values, n_limit, m_limit, explore):
                jobs.append((d, k, n, conv))

    def run(job):
        d, k, n, conv = job
        return evaluate_identity(d, k, n, cache, conv)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run, jobs))
    else:
        records = [run(job) for job in jobs]

    for record in records:
        s = summaries[record.label]
        if record.exploratory:
            if record.matched:
                s.explored_passed += 1
                s.explored_holds.append((record.k, record.n))
            else:
                s.explored_failed += 1
        elif record.matched:
            s.passed += 1
        else:
            s.failed += 1
            if s.first_counterexample is None:
                s.first_counterexample = record

    # Verify
    for s in summaries.values():
        if not s.evaluated:
            logger.warning(f"{s.label}: no applicable point in the grid", extra={"identity": s.identity_id})
        logger.info(f"{s.label}: {s.passed} passed, {s.failed} failed", extra={"identity": s.identity_id})

    grid = GridSpec(tuple(d.id for d in selected), k_values, n_limit, m_limit, explore)
    return VerificationReport(grid, records, list(summaries.values()))


def validity_range(d: IdentityDescriptor, k: int, n_max: int, cache: Optional[SequenceCache] = None,
                   convention: Optional[str] = None) -> List[int]:
    """Every n in 0..n_max (multiplier for nk identities) where both sides are defined and equal."""
    cache = SequenceCache() if cache is None else cache
    return [n for n in range(n_max + 1)
            if (d.applies(k, n) or d.explores(k, n))
            and evaluate_identity(d, k, n, cache, convention).matched]


def equivalence_chain(k: int, n: int, cache: Optional[SequenceCache] = None) -> bool:
    """rhs(I-3.7) minus the defining formula of L(k,n) equals rhs(I-3.1) minus lhs(I-3.1)."""
    if not (k >= 2 and n >= 2 * k):
        raise NotApplicableError(f"Equivalence chain needs n >= 2k, got k={k}, n={n}")
    cache = SequenceCache() if cache is None else cache
    i37, i31 = lookup("I-3.7"), lookup("I-3.1")
    eq2 = (k - 1) * gen_fib(k, n - (2 * k - 1), cache) + gen_fib(k, n - (k - 1), cache)
    lhs_gap = i37.rhs(k, n, cache, "") - eq2
    rhs_gap = i31.rhs(k, n, cache, "") - i31.lhs(k, n, cache, "")
    return lhs_gap == rhs_gap


def variant_difference(base_id: str, k: int, n: int, cache: Optional[SequenceCache] = None) -> int:
    """rhs(corrected) - rhs(as printed) for a base id such as 'I-4.2'."""
    corrected, printed = lookup(base_id + "c"), lookup(base_id + "p")
    cache = SequenceCache() if cache is None else cache
    return (evaluate_identity(corrected, k, n, cache).rhs
            - evaluate_identity(printed, k, n, cache).rhs)
