"""Dyadic staircases under increasing rational sequences.

A strictly increasing rational sequence in (0, 1) — the typical approximation
of a computably enumerable real from below — is converted into a staircase of
dyadic partial sums ``r_i = r_{i-1} + 2**-n_i``.  Each step length is the
tightest power of two fitting under the current term, which traps ``r_i``
between the midpoint ``(a_i + r_{i-1}) / 2`` and ``a_i`` itself, so the
staircase converges to the same limit as the sequence.  The step lengths
always satisfy the unit mass bound, so they can be fed straight into the
codeword allocator; the resulting machine's domain carries measure exactly
``r_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .codespace import allocate_all
from .errors import InvalidSequence, SequenceExhausted
from .exact import Dyadic, DYADIC_ZERO, ceil_neg_log2, as_fraction, pow2_neg
from .machines import MachineTable


class RationalSeq:
    """Strictly increasing rationals in the open unit interval.

    Wraps any iterable of rationals; terms are pulled and cached on demand,
    so generator-backed sequences extend their materialized prefix lazily.
    Monotonicity and range are checked as terms arrive: a bad source fails at
    its first offending term with InvalidSequence.
    """

    def __init__(self, source: Iterable[Fraction | int | str]):
        self._iter: Iterator = iter(source)
        self._cache: list[Fraction] = []

    def prefix(self, k: int) -> tuple[Fraction, ...]:
        """The first ``k`` terms; SequenceExhausted if fewer are available."""
        if k < 0:
            raise ValueError("prefix length must be a natural number")
        while len(self._cache) < k:
            try:
                raw = next(self._iter)
            except StopIteration:
                raise SequenceExhausted(
                    f"sequence ended after {len(self._cache)} terms, "
                    f"{k} were requested") from None
            term = Fraction(raw)
            if not 0 < term < 1:
                raise InvalidSequence(f"term {term} is outside (0, 1)")
            if self._cache and term <= self._cache[-1]:
                raise InvalidSequence(
                    f"term {term} does not increase past {self._cache[-1]}")
            self._cache.append(term)
        return tuple(self._cache[:k])


def parse_rational_terms(lines: Iterable[str]) -> list[Fraction]:
    """Raw ``p/q`` lines as fractions, skipping blanks; no monotonicity check."""
    from .exact import parse_rational

    return [parse_rational(line) for line in lines if line.strip()]


def parse_sequence_lines(lines: Iterable[str]) -> RationalSeq:
    """Build a checked increasing sequence from ``p/q`` lines."""
    return RationalSeq(parse_rational_terms(lines))


@dataclass(frozen=True)
class DyadicDecomposition:
    """Step lengths and dyadic partial sums of a staircase."""

    lengths: tuple[int, ...]
    partials: tuple[Dyadic, ...]

    def verify(self, terms: Sequence[Fraction]) -> None:
        """Re-check every defining identity exactly; ValueError on any break.

        Checks, for each step i: the recurrence ``r_i = r_{i-1} + 2**-n_i``,
        the strict gap ``r_{i-1} < a_i``, and the sandwich
        ``(a_i + r_{i-1}) / 2 <= r_i <= a_i``.
        """
        if not len(self.lengths) == len(self.partials) == len(terms):
            raise ValueError("decomposition and term prefix lengths differ")
        prev = DYADIC_ZERO
        for i, (n, r, a) in enumerate(zip(self.lengths, self.partials, terms), 1):
            a = as_fraction(a)
            if prev + pow2_neg(n) != r:
                raise ValueError(f"step {i}: recurrence broken")
            if not prev.as_fraction() < a:
                raise ValueError(f"step {i}: partial sum is not below the term")
            r_frac = r.as_fraction()
            if not (a + prev.as_fraction()) / 2 <= r_frac <= a:
                raise ValueError(f"step {i}: sandwich bound broken")
            prev = r


def dyadic_decompose(seq: RationalSeq, k: int) -> DyadicDecomposition:
    """Decompose the first ``k`` terms into a verified dyadic staircase.

    Each step takes ``n_i`` as the least natural with ``2**-n_i`` at most the
    gap ``a_i - r_{i-1}``, then advances ``r_i = r_{i-1} + 2**-n_i``.
    """
    terms = seq.prefix(k)
    lengths: list[int] = []
    partials: list[Dyadic] = []
    r = DYADIC_ZERO
    for a in terms:
        gap = a - r.as_fraction()
        if gap <= 0:
            raise InvalidSequence(f"term {a} does not clear the partial sum {r}")
        n = ceil_neg_log2(gap)
        r = r + pow2_neg(n)
        lengths.append(n)
        partials.append(r)
    decomposition = DyadicDecomposition(tuple(lengths), tuple(partials))
    decomposition.verify(terms)
    return decomposition


def to_machine(seq: RationalSeq, k: int) -> MachineTable:
    """Allocate one codeword per staircase step; outputs are placeholders.

    The returned table's domain measure equals the k-th partial sum ``r_k``.
    """
    decomposition = dyadic_decompose(seq, k)
    return MachineTable(allocate_all((n, "") for n in decomposition.lengths))
