"""Reduced words in a free group, and their evaluation in F.

A letter is a pair ``(index, sign)`` with ``sign`` in ``{+1, -1}``.  In text,
lowercase ``a``..``z`` are generators 0..25 and uppercase letters their
inverses; ``g17`` / ``G17`` name any index.

Evaluation reads a written word ``u_k ... u_2 u_1`` as a composition of maps,
so the rightmost letter acts first.
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

from ._backend import kernels as _k
from .dyadic import DyadicRational
from .errors import (
    ArityMismatch,
    SizeLimitExceeded,
    TrivialRelation,
    TrivialWord,
    UnknownGenerator,
    WordParseError,
)
from .plmap import FElement, compose, identity, inverse

__all__ = [
    "FreeWord",
    "parse_word",
    "format_word",
    "reduce",
    "concat",
    "invert_word",
    "power",
    "commutator",
    "cyclic_reduce",
    "primitive_root",
    "commutes_free",
    "combine_identity",
    "embed_two_vars",
    "enumerate_reduced",
    "iter_reduced",
    "evaluate_word",
    "act_word",
    "DEFAULT_SIZE_LIMIT",
    "DEDUP_MODES",
]

Letter = tuple[int, int]

DEFAULT_SIZE_LIMIT = 10**6
DEDUP_MODES = ("none", "inversion", "inversion_and_conjugacy")


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for idx, sign in letters:
        if stack and stack[-1][0] == idx and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((idx, sign))
    return tuple(stack)


class FreeWord:
    """A freely reduced word over ``arity`` generators.

    The constructor reduces its input.  Equality compares letters only, so the
    same word declared with different arities compares equal.
    """

    __slots__ = ("letters", "arity")

    def __init__(self, letters: Iterable[Letter] = (), arity: int | None = None):
        letters = _free_reduce((int(i), 1 if s > 0 else -1) for i, s in letters)
        top = max((i for i, _ in letters), default=-1) + 1
        if arity is None:
            arity = max(top, 1)
        elif top > arity:
            raise UnknownGenerator(f"generator index {top - 1} is not below arity {arity}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "arity", arity)

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    @classmethod
    def _trusted(cls, letters: tuple, arity: int) -> FreeWord:
        obj = object.__new__(cls)
        object.__setattr__(obj, "letters", letters)
        object.__setattr__(obj, "arity", arity)
        return obj

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if isinstance(other, FreeWord):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return concat(self, other)

    def __pow__(self, m: int):
        return power(self, m)

    def __invert__(self):
        return invert_word(self)

    def sort_key(self) -> tuple:
        """Shortlex key; the letter order is ``a < A < b < B < ...``."""
        return (len(self.letters), tuple(2 * i + (s < 0) for i, s in self.letters))

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"FreeWord({format_word(self)!r}, arity={self.arity})"


_TOKEN = re.compile(r"\s*(?:([gG])(\d+)|([a-zA-Z]))")
_XY_WORD = re.compile(r"[\sxyXY]*\Z")
_XY_TO_AB = str.maketrans("xyXY", "abAB")


def parse_word(text: str, arity: int | None = None) -> FreeWord:
    """Parse and freely reduce a word.

    ``"1"`` (or an empty string) is the trivial word.  With ``arity == 2`` a
    word spelled only in ``x``/``y`` is read with ``x``, ``y`` as generators 0, 1.
    """
    if arity is not None and arity < 1:
        raise ValueError("arity must be at least 1")
    stripped = text.strip()
    if stripped in ("", "1"):
        return FreeWord((), arity)
    if arity == 2 and _XY_WORD.match(text):
        text = text.translate(_XY_TO_AB)
    letters = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordParseError(f"unexpected character {text[pos]!r} at offset {pos} in {text!r}")
        if m.group(1):
            idx = int(m.group(2))
            sign = 1 if m.group(1) == "g" else -1
        else:
            ch = m.group(3)
            idx = ord(ch.lower()) - ord("a")
            sign = 1 if ch.islower() else -1
        if arity is not None and idx >= arity:
            raise UnknownGenerator(f"generator {m.group(0).strip()!r} is not below arity {arity}")
        letters.append((idx, sign))
        pos = m.end()
    return FreeWord(letters, arity)


def format_word(w: FreeWord) -> str:
    """Letter form for arity <= 26, ``g0 G1`` tokens otherwise; ``"1"`` if empty."""
    if not w.letters:
        return "1"
    if w.arity <= 26:
        return "".join(chr(ord("a") + i) if s > 0 else chr(ord("A") + i) for i, s in w.letters)
    return " ".join(f"{'g' if s > 0 else 'G'}{i}" for i, s in w.letters)


def reduce(w: FreeWord | Sequence[Letter], arity: int | None = None) -> FreeWord:
    if isinstance(w, FreeWord):
        return w  # already reduced by construction
    return FreeWord(w, arity)


def concat(u: FreeWord, v: FreeWord) -> FreeWord:
    return FreeWord._trusted(_free_reduce(u.letters + v.letters), max(u.arity, v.arity))


def invert_word(w: FreeWord) -> FreeWord:
    return FreeWord._trusted(tuple((i, -s) for i, s in reversed(w.letters)), w.arity)


def power(w: FreeWord, m: int) -> FreeWord:
    base = w if m >= 0 else invert_word(w)
    conj, core = cyclic_reduce(base)
    # conj * core^|m| * conj^-1 is already reduced
    letters = conj.letters + core.letters * abs(m) + invert_word(conj).letters if m else ()
    return FreeWord._trusted(_free_reduce(letters), w.arity)


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """``[u, v] = u v u^-1 v^-1``."""
    letters = u.letters + v.letters + invert_word(u).letters + invert_word(v).letters
    return FreeWord._trusted(_free_reduce(letters), max(u.arity, v.arity))


def cyclic_reduce(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    """Split ``w = c * core * c^-1`` with ``core`` cyclically reduced."""
    letters = w.letters
    lo, hi = 0, len(letters) - 1
    while lo < hi and letters[lo][0] == letters[hi][0] and letters[lo][1] == -letters[hi][1]:
        lo += 1
        hi -= 1
    return (FreeWord._trusted(letters[:lo], w.arity),
            FreeWord._trusted(letters[lo:hi + 1], w.arity))


def primitive_root(w: FreeWord) -> tuple[FreeWord, int]:
    """Return ``(root, k)`` with ``w == root**k``, ``k >= 1`` and ``root`` not a proper power."""
    if not w.letters:
        raise TrivialWord("the trivial word has no primitive root")
    conj, core = cyclic_reduce(w)
    p = core.letters
    n = len(p)
    for q in range(1, n + 1):
        if n % q == 0 and p[:q] * (n // q) == p:
            break
    root = conj.letters + p[:q] + invert_word(conj).letters
    return FreeWord._trusted(root, w.arity), n // q


def commutes_free(u: FreeWord, v: FreeWord) -> bool:
    return not commutator(u, v).letters


def combine_identity(relations: Sequence[FreeWord], size_limit: int = DEFAULT_SIZE_LIMIT) -> FreeWord:
    """Fold a list of nontrivial words into one nontrivial word.

    The result vanishes at every tuple where any input vanishes: for commuting
    running word and next relation both are powers of a common root ``w`` and
    the step takes ``w**(alpha*beta)``; otherwise it takes their commutator.
    """
    if not relations:
        raise ValueError("combine_identity needs at least one relation")
    for f in relations:
        if not f.letters:
            raise TrivialRelation("relations must be nontrivial words")
    h = relations[0]
    for f in relations[1:]:
        if commutes_free(h, f):
            root_h, alpha = primitive_root(h)
            root_f, beta = primitive_root(f)
            if root_f != root_h:
                # commuting words have equal or mutually inverse roots
                assert root_f == invert_word(root_h), (h, f)
                beta = -beta
            projected = len(root_h) * abs(alpha * beta)
            if projected > size_limit:
                raise SizeLimitExceeded(f"combined word would have {projected} letters (limit {size_limit})")
            h = power(root_h, alpha * beta)
            h = FreeWord._trusted(h.letters, max(h.arity, f.arity))
        else:
            projected = 2 * (len(h) + len(f))
            if projected > size_limit:
                raise SizeLimitExceeded(f"combined word could reach {projected} letters (limit {size_limit})")
            h = commutator(h, f)
    return h


def embed_two_vars(f: FreeWord) -> FreeWord:
    """Substitute generator ``i`` by ``x^-i y x^i`` (x = generator 0, y = generator 1)."""
    out: list[Letter] = []
    for i, s in f.letters:
        out.extend([(0, -1)] * i)
        out.append((1, s))
        out.extend([(0, 1)] * i)
    return FreeWord._trusted(_free_reduce(out), 2)


def _alphabet(arity: int) -> list[Letter]:
    return [(i, s) for i in range(arity) for s in (1, -1)]


def iter_reduced(arity: int, max_len: int) -> Iterator[FreeWord]:
    """Yield nontrivial reduced words of length ``< max_len`` in shortlex order."""
    if arity < 1:
        raise ValueError("arity must be at least 1")
    alphabet = _alphabet(arity)
    level: list[tuple[Letter, ...]] = [()]
    for _ in range(1, max_len):
        nxt = []
        for letters in level:
            last = letters[-1] if letters else None
            for a in alphabet:
                if last is not None and a[0] == last[0] and a[1] == -last[1]:
                    continue
                w = letters + (a,)
                nxt.append(w)
                yield FreeWord._trusted(w, arity)
        level = nxt


def count_reduced(arity: int, max_len: int) -> int:
    """Number of nontrivial reduced words of length ``< max_len``."""
    return sum(2 * arity * (2 * arity - 1) ** (n - 1) for n in range(1, max_len))


def _conjugacy_key(w: FreeWord) -> tuple:
    core = cyclic_reduce(w)[1].letters
    inv = invert_word(FreeWord._trusted(core, w.arity)).letters
    ranks = []
    for seq in (core, inv):
        r = [2 * i + (s < 0) for i, s in seq]
        ranks.extend(tuple(r[k:] + r[:k]) for k in range(len(r)))
    return min(ranks)


def enumerate_reduced(arity: int, max_len: int, dedup: str = "none") -> list[FreeWord]:
    """All nontrivial reduced words of length ``<= max_len - 1``.

    ``dedup="inversion"`` keeps one of each pair ``{f, f^-1}``;
    ``"inversion_and_conjugacy"`` keeps one word per class under inversion and
    conjugation.  The kept representative is the shortlex-first one.
    """
    if dedup not in DEDUP_MODES:
        raise ValueError(f"dedup must be one of {DEDUP_MODES}")
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    words = iter_reduced(arity, max_len)
    if dedup == "none":
        return list(words)
    if dedup == "inversion":
        return [w for w in words if w.sort_key() < invert_word(w).sort_key()]
    seen = set()
    out = []
    for w in words:
        key = _conjugacy_key(w)
        if key not in seen:
            seen.add(key)
            out.append(w)
    return out


def _check_tuple(w: FreeWord, elements: Sequence[FElement]) -> None:
    if len(elements) != w.arity:
        raise ArityMismatch(f"word has arity {w.arity} but {len(elements)} elements were given")


def evaluate_word(w: FreeWord, elements: Sequence[FElement]) -> FElement:
    """The element ``w(a_1, ..., a_n)``; the written word's last letter acts first."""
    _check_tuple(w, elements)
    inverses: dict[int, FElement] = {}
    result = identity()
    for i, s in w.letters:
        if s > 0:
            g = elements[i]
        else:
            g = inverses.get(i)
            if g is None:
                g = inverses[i] = inverse(elements[i])
        result = compose(result, g)
    return result


def act_word(w: FreeWord, elements: Sequence[FElement], x) -> DyadicRational:
    """Image of the point ``x`` under ``w(a_1, ..., a_n)`` without composing."""
    _check_tuple(w, elements)
    x = DyadicRational.coerce(x)
    chain = [(elements[i]._pts, elements[i]._slopes, s) for i, s in reversed(w.letters)]
    return DyadicRational._raw(*_k.act(chain, x.numerator, x.exponent))
