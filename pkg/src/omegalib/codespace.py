"""Incremental allocation of prefix-free codewords with exact mass accounting.

The allocator owns a pool of *free prefixes*: binary words whose cylinders
partition the part of code space not yet spoken for.  The pool is kept
strictly sorted by decreasing length, which forces pairwise-distinct lengths
and makes "the longest free word of length <= n" the first fitting word in
pool order.  Serving a length-``n`` request splits that word's subtree: the
all-zeros extension of length ``n`` becomes the new codeword and the siblings
along the spine return to the pool.  Five checkable invariants tie the story
together: the free pool plus the issued codewords stay prefix-free, together
they carry measure exactly one, the issued mass matches the running ledger,
any still-pending request lengths fit inside the free measure, and the pool
lengths stay strictly decreasing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bits import prefix_free, validate_bits
from .errors import InsufficientMass, TargetTooShort
from .exact import DYADIC_ZERO, Dyadic, measure_of_lengths, pow2_neg


def extend_prefix(stem: str, target: int) -> list[str]:
    """Split ``stem`` so its subtree yields one word of length ``target``.

    Returns ``[stem + 0^k, stem + 0^(k-1)1, ..., stem + 01, stem + 1]`` where
    ``k = target - len(stem)``: the head is the allocatable all-zeros word and
    the tail holds the replacement prefixes, lengths running ``target`` down
    to ``len(stem) + 1``.  For ``target == len(stem)`` the word itself is the
    whole split.
    """
    validate_bits(stem)
    depth = target - len(stem)
    if depth < 0:
        raise TargetTooShort(
            f"target length {target} is below the stem length {len(stem)}")
    return [stem + "0" * depth] + [stem + "0" * j + "1"
                                   for j in range(depth - 1, -1, -1)]


@dataclass
class AllocatorState:
    """Mutable allocator state: free pool, issued codewords, mass ledger."""

    free: list[str] = field(default_factory=lambda: [""])
    allocated: list[str] = field(default_factory=list)
    mass_allocated: Dyadic = DYADIC_ZERO


def new_allocator() -> AllocatorState:
    """A fresh state owning all of code space: free pool {empty word}."""
    return AllocatorState()


def allocate(state: AllocatorState, n: int) -> str:
    """Issue a codeword of length ``n``, consuming ``2**-n`` of free measure.

    Picks the longest free word of length <= n (on a strictly sorted pool
    such a word exists exactly when the free measure is at least ``2**-n``),
    removes it, appends the new codeword to ``state.allocated`` and returns
    it.  Raises InsufficientMass when no free word fits.
    """
    if n < 0:
        raise ValueError("codeword lengths are natural numbers")
    pick = next((i for i, w in enumerate(state.free) if len(w) <= n), None)
    if pick is None:
        raise InsufficientMass(n)
    stem = state.free.pop(pick)
    words = extend_prefix(stem, n)
    state.free[pick:pick] = words[1:]
    state.allocated.append(words[0])
    state.mass_allocated = state.mass_allocated + pow2_neg(n)
    return words[0]


def allocate_all(requests: Iterable[tuple[int, str]]) -> list[tuple[str, str]]:
    """Serve ``(length, output)`` requests in order from a fresh state.

    Returns the ``(codeword, output)`` pairs.  On the first request that
    cannot be served, raises InsufficientMass carrying that request's
    zero-based index.
    """
    state = new_allocator()
    table: list[tuple[str, str]] = []
    for i, (n, y) in enumerate(requests):
        try:
            word = allocate(state, n)
        except InsufficientMass:
            raise InsufficientMass(n, index=i) from None
        table.append((word, validate_bits(y)))
    return table


@dataclass(frozen=True)
class InvariantReport:
    """Outcome of the five allocator invariants; ``None`` means not checked."""

    union_prefix_free: bool
    union_measure_is_one: bool
    mass_matches_ledger: bool
    remaining_requests_fit: bool | None
    free_lengths_distinct: bool

    @property
    def ok(self) -> bool:
        return False not in (self.union_prefix_free, self.union_measure_is_one,
                             self.mass_matches_ledger, self.remaining_requests_fit,
                             self.free_lengths_distinct)

    def failures(self) -> list[str]:
        return [name for name in ("union_prefix_free", "union_measure_is_one",
                                  "mass_matches_ledger", "remaining_requests_fit",
                                  "free_lengths_distinct")
                if getattr(self, name) is False]


def check_invariants(state: AllocatorState,
                     remaining_lengths: Sequence[int] | None = None) -> InvariantReport:
    """Recompute the five allocator invariants exactly from the raw state.

    The measures are recomputed from the pools themselves (integer arithmetic
    at a common power-of-two scale), so the report is meaningful even for
    hand-built states.  ``remaining_lengths`` — the lengths of requests still
    to come — enables the pending-requests-fit check; omitted, that field of
    the report is ``None``.
    """
    free, allocated = state.free, state.allocated
    union = free + allocated
    scale = max((len(w) for w in union), default=0)
    scale = max(scale, state.mass_allocated.exponent, 0)
    if remaining_lengths:
        scale = max(scale, max(remaining_lengths))

    free_mass = sum(1 << (scale - len(w)) for w in free)
    alloc_mass = sum(1 << (scale - len(w)) for w in allocated)
    ledger = state.mass_allocated.mantissa << (scale - state.mass_allocated.exponent)

    if remaining_lengths is None:
        fit = None
    else:
        fit = sum(1 << (scale - n) for n in remaining_lengths) <= free_mass

    return InvariantReport(
        union_prefix_free=prefix_free(union),
        union_measure_is_one=free_mass + alloc_mass == 1 << scale,
        mass_matches_ledger=alloc_mass == ledger,
        remaining_requests_fit=fit,
        free_lengths_distinct=all(len(free[i]) > len(free[i + 1])
                                  for i in range(len(free) - 1)),
    )


def pool_measure(words: Iterable[str]) -> Dyadic:
    """Exact measure of the union of the words' cylinders, assuming prefix-freeness."""
    return measure_of_lengths(len(w) for w in words)


def parse_request_lines(lines: Iterable[str]) -> list[tuple[int, str]]:
    """Parse ``n<TAB>y`` request lines; ``y`` is ``-`` for the empty output."""
    from .bits import parse_word

    requests: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'n<TAB>y', got {line!r}")
        n = int(fields[0])
        if n < 0:
            raise ValueError(f"line {lineno}: negative length {n}")
        requests.append((n, parse_word(fields[1])))
    return requests
