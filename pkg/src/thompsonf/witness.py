"""Concrete elements of F on which given words do not vanish.

For a reduced word ``u_k ... u_1`` and dyadic points ``b_1 < ... < b_{k+1}``
the letters prescribe ``u_i(b_i) = b_{i+1}``.  Collected per generator these
constraints form strictly increasing partial maps (reducedness rules out a
clash), which :func:`complete` extends to elements of F.  The completed tuple
then moves ``b_1`` to ``b_{k+1}``, so the word's value is not the identity.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .dyadic import ONE, ZERO, DyadicRational
from .errors import (
    ArityMismatch,
    ConstraintConflict,
    NotMonotone,
    NotReduced,
    SizeLimitExceeded,
    TrivialWord,
)
from .interpolate import interpolate
from .plmap import FElement, identity, is_identity
from .words import FreeWord, act_word, count_reduced, enumerate_reduced, evaluate_word, format_word

__all__ = [
    "PartialDyadicMap",
    "WitnessReport",
    "default_partition",
    "raw_constraints",
    "constraints_from_word",
    "complete",
    "witness_for_word",
    "multi_witness",
    "universal_witness",
    "report_to_dict",
    "dump_reports",
    "DEFAULT_WORD_LIMIT",
]

# number of nontrivial reduced words of length <= 7 over two generators
DEFAULT_WORD_LIMIT = count_reduced(2, 8)

Constraint = tuple[DyadicRational, DyadicRational]


class PartialDyadicMap:
    """A finite strictly increasing partial map inside (0, 1)."""

    __slots__ = ("constraints",)

    def __init__(self, constraints: Iterable[Constraint] = ()):
        pairs = sorted((DyadicRational.coerce(a), DyadicRational.coerce(b)) for a, b in constraints)
        deduped: list[Constraint] = []
        for a, b in pairs:
            if not (ZERO < a < ONE and ZERO < b < ONE):
                raise ValueError(f"constraint {a} -> {b} is not inside (0, 1)")
            if deduped and deduped[-1][0] == a:
                if deduped[-1][1] != b:
                    raise ConstraintConflict(f"{a} is sent to both {deduped[-1][1]} and {b}")
                continue
            if deduped and not deduped[-1][1] < b:
                prev = deduped[-1]
                raise NotMonotone(f"{prev[0]} -> {prev[1]} and {a} -> {b} are not increasing")
            deduped.append((a, b))
        self.constraints = tuple(deduped)

    @property
    def inputs(self) -> list[DyadicRational]:
        return [a for a, _ in self.constraints]

    @property
    def outputs(self) -> list[DyadicRational]:
        return [b for _, b in self.constraints]

    def __len__(self):
        return len(self.constraints)

    def __eq__(self, other):
        if isinstance(other, PartialDyadicMap):
            return self.constraints == other.constraints
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(f"{a} -> {b}" for a, b in self.constraints)
        return f"PartialDyadicMap({{{inner}}})"


@dataclass
class WitnessReport:
    word: FreeWord
    partition: list[DyadicRational]
    tuple: list[FElement] = field(repr=False)
    moved_from: DyadicRational
    moved_to: DyadicRational
    verified: bool


def default_partition(k: int) -> list[DyadicRational]:
    """``i / 2**m`` for ``i = 1..k+1``, with ``m`` minimal such that ``2**m >= k + 2``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    m = (k + 1).bit_length()
    return [DyadicRational(i, m) for i in range(1, k + 2)]


def raw_constraints(letters: Sequence[tuple[int, int]], arity: int,
                    beta: Sequence[DyadicRational]) -> list[list[Constraint]]:
    """Per-generator constraint lists for a letter sequence, unvalidated.

    The last written letter is ``u_1``; a positive letter at step ``i``
    contributes ``b_i -> b_{i+1}``, a negative one ``b_{i+1} -> b_i``.
    """
    k = len(letters)
    if len(beta) != k + 1:
        raise ValueError(f"need {k + 1} partition points for a word of length {k}")
    out: list[list[Constraint]] = [[] for _ in range(arity)]
    for step, (idx, sign) in enumerate(reversed(letters)):
        lo, hi = beta[step], beta[step + 1]
        out[idx].append((lo, hi) if sign > 0 else (hi, lo))
    return out


def constraints_from_word(w, beta: Sequence[DyadicRational] | None = None) -> list[PartialDyadicMap]:
    letters = w.letters if isinstance(w, FreeWord) else tuple(w)
    arity = w.arity if isinstance(w, FreeWord) else max((i for i, _ in letters), default=0) + 1
    for (i, s), (j, t) in zip(letters, letters[1:]):
        if i == j and s == -t:
            raise NotReduced("word contains a cancelling pair")
    if not letters:
        raise TrivialWord("the trivial word imposes no constraints")
    beta = default_partition(len(letters)) if beta is None else [DyadicRational.coerce(b) for b in beta]
    for a, b in zip(beta, beta[1:]):
        if not a < b:
            raise ValueError("partition points must be strictly increasing")
    return [PartialDyadicMap(c) for c in raw_constraints(letters, arity, beta)]


def complete(partial: PartialDyadicMap) -> FElement:
    """Extend a partial map to an element of F."""
    if not partial.constraints:
        return identity()
    return interpolate([ZERO, *partial.inputs, ONE], [ZERO, *partial.outputs, ONE])


def _verify(w: FreeWord, elements: list[FElement], beta: Sequence[DyadicRational],
            full_check: bool) -> tuple[DyadicRational, bool]:
    moved = act_word(w, elements, beta[0])
    ok = moved == beta[-1] and moved != beta[0]
    if ok and full_check:
        ok = not is_identity(evaluate_word(w, elements))
    return moved, ok


def witness_for_word(w: FreeWord, beta: Sequence[DyadicRational] | None = None,
                     full_check: bool = False) -> WitnessReport:
    """Build a tuple of ``w.arity`` elements at which ``w`` is not the identity.

    ``full_check`` additionally composes the word and compares it with the
    identity element.
    """
    if not w.letters:
        raise TrivialWord("the trivial word vanishes everywhere")
    beta = default_partition(len(w)) if beta is None else [DyadicRational.coerce(b) for b in beta]
    elements = [complete(p) for p in constraints_from_word(w, beta)]
    moved, ok = _verify(w, elements, beta, full_check)
    return WitnessReport(w, list(beta), elements, beta[0], moved, ok)


def _window_size(m: int) -> int:
    # smallest power of two >= m + 1, as an exponent
    return m.bit_length()


def multi_witness(words: Sequence[FreeWord], arity: int,
                  full_check: bool = False) -> tuple[list[FElement], list[WitnessReport]]:
    """One tuple of ``arity`` elements witnessing every word at once.

    Word ``j`` gets its points from ``(j, j + 1) / M`` with ``M`` the smallest
    power of two ``>= len(words) + 1``; windows are disjoint and ordered, so
    the merged constraint lists stay increasing.
    """
    words = list(words)
    if not words:
        raise ValueError("multi_witness needs at least one word")
    for w in words:
        if not w.letters:
            raise TrivialWord("the trivial word vanishes everywhere")
        if max(i for i, _ in w.letters) >= arity:
            raise ArityMismatch(f"word {w} uses a generator beyond arity {arity}")
    shift = _window_size(len(words))
    merged: list[list[Constraint]] = [[] for _ in range(arity)]
    betas = []
    for j, w in enumerate(words):
        offset = DyadicRational(j)
        beta = [(offset + t).scale2(-shift) for t in default_partition(len(w))]
        betas.append(beta)
        for gen, cons in enumerate(raw_constraints(w.letters, arity, beta)):
            merged[gen].extend(cons)
    elements = [complete(PartialDyadicMap(c)) for c in merged]
    reports = []
    for w, beta in zip(words, betas):
        w_n = FreeWord._trusted(w.letters, arity)
        moved, ok = _verify(w_n, elements, beta, full_check)
        reports.append(WitnessReport(w_n, beta, elements, beta[0], moved, ok))
    return elements, reports


def universal_witness(n: int, k: int, dedup: str = "inversion_and_conjugacy",
                      word_limit: int = DEFAULT_WORD_LIMIT,
                      full_check: bool = False) -> tuple[list[FElement], list[WitnessReport]]:
    """``n`` elements satisfying no relation of length ``< k``.

    One report per dedup-class representative; inversion and conjugation
    preserve non-vanishing, so the whole class is covered.
    """
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    total = count_reduced(n, k)
    if total > word_limit:
        raise SizeLimitExceeded(
            f"{total} reduced words of length < {k} over {n} generators exceed the limit {word_limit}")
    words = enumerate_reduced(n, k, dedup)
    return multi_witness(words, n, full_check=full_check)


def report_to_dict(report: WitnessReport, include_tuple: bool = True) -> dict:
    """Plain-data form with keys in a fixed order; dyadics become literals."""
    out = {
        "word": format_word(report.word),
        "beta": [str(b) for b in report.partition],
    }
    if include_tuple:
        out["generators"] = [[[str(x), str(y)] for x, y in f.breakpoints] for f in report.tuple]
    out["moved_from"] = str(report.moved_from)
    out["moved_to"] = str(report.moved_to)
    out["verified"] = report.verified
    return out


def dump_reports(elements: list[FElement], reports: list[WitnessReport]) -> str:
    """JSON document for a shared tuple and its per-word reports."""
    doc = {
        "generators": [[[str(x), str(y)] for x, y in f.breakpoints] for f in elements],
        "reports": [report_to_dict(r, include_tuple=False) for r in reports],
        "all_verified": all(r.verified for r in reports),
    }
    return json.dumps(doc, indent=2)
