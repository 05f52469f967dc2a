"""Integer polynomials in noncommuting variables over ``{a, b}`` or ``{c, d}``.

A polynomial is an immutable map from words (``str``) to nonzero ``int``
coefficients.  In the ``cd`` alphabet ``c`` has degree 1 and ``d`` degree 2;
``a`` and ``b`` both have degree 1.
"""

from __future__ import annotations

import re
from typing import Mapping

import numpy as np

from .errors import InputError

AB = "ab"
CD = "cd"
_DEGREE = {"a": 1, "b": 1, "c": 1, "d": 2}


def word_degree(word: str) -> int:
    return sum(_DEGREE[ch] for ch in word)


def _sort_key(word: str):
    return (word_degree(word), word)


class NCPolynomial:
    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, terms: Mapping[str, int] | None = None, alphabet: str = CD):
        if alphabet not in (AB, CD):
            raise InputError(f"unknown alphabet {alphabet!r}")
        clean = {}
        for w, c in (terms or {}).items():
            if any(ch not in alphabet for ch in w):
                raise InputError(f"word {w!r} is not over the alphabet {alphabet!r}")
            c = int(c)
            if c:
                clean[w] = clean.get(w, 0) + c
        self.alphabet = alphabet
        self._terms = {w: clean[w] for w in sorted(clean, key=_sort_key) if clean[w]}
        self._hash = None

    # construction helpers
    @classmethod
    def one(cls, alphabet: str = CD) -> "NCPolynomial":
        return cls({"": 1}, alphabet)

    @classmethod
    def zero(cls, alphabet: str = CD) -> "NCPolynomial":
        return cls({}, alphabet)

    @classmethod
    def monomial(cls, word: str, coeff: int = 1, alphabet: str | None = None) -> "NCPolynomial":
        if alphabet is None:
            alphabet = AB if set(word) <= set(AB) and word else CD
        return cls({word: coeff}, alphabet)

    # mapping-ish access
    def items(self):
        return self._terms.items()

    def words(self):
        return list(self._terms)

    def __getitem__(self, word: str) -> int:
        return self._terms.get(word, 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # arithmetic
    def _is_scalar(self) -> bool:
        return all(w == "" for w in self._terms)

    def _check(self, other: "NCPolynomial"):
        if other.alphabet != self.alphabet and not self._is_scalar() and not other._is_scalar():
            raise InputError(f"cannot combine {self.alphabet} and {other.alphabet} polynomials")

    def _coerce(self, other):
        if isinstance(other, int):
            return NCPolynomial({"": other}, self.alphabet)
        if isinstance(other, NCPolynomial):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, 0) + c
        return NCPolynomial(terms, self._alpha(other))

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial({w: -c for w, c in self._terms.items()}, self.alphabet)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return NCPolynomial({w: c * other for w, c in self._terms.items()}, self.alphabet)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        self._check(other)
        terms: dict[str, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return NCPolynomial(terms, self._alpha(other))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = NCPolynomial.one(self.alphabet)
        for _ in range(k):
            out = out * self
        return out

    def _alpha(self, other):
        return other.alphabet if self._is_scalar() else self.alphabet

    def exact_div(self, k: int) -> "NCPolynomial":
        """Divide every coefficient by ``k``; raises ``ValueError`` if inexact."""
        out = {}
        for w, c in self._terms.items():
            q, r = divmod(c, k)
            if r:
                raise ValueError(f"coefficient {c} of {w or '1'} is not divisible by {k}")
            out[w] = q
        return NCPolynomial(out, self.alphabet)

    def reverse(self) -> "NCPolynomial":
        return NCPolynomial({w[::-1]: c for w, c in self._terms.items()}, self.alphabet)

    # comparison
    def __eq__(self, other):
        if isinstance(other, int):
            other = NCPolynomial({"": other}, self.alphabet)
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        if self._is_scalar() and other._is_scalar():
            return self._terms == other._terms
        return self.alphabet == other.alphabet and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            tag = None if self._is_scalar() else self.alphabet
            self._hash = hash((tag, tuple(self._terms.items())))
        return self._hash

    # degree
    def degrees(self) -> set[int]:
        return {word_degree(w) for w in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        ds = self.degrees()
        return max(ds) if ds else 0

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    # dense ab vectors
    def to_dense(self, n: int) -> np.ndarray:
        """AB polynomial of degree ``n`` as a vector indexed by words (a=0, b=1, MSB first)."""
        if self.alphabet != AB and self._terms:
            raise InputError("dense form is only defined for ab-polynomials")
        v = np.zeros(1 << n, dtype=np.int64)
        for w, c in self._terms.items():
            if len(w) != n:
                raise InputError(f"word {w!r} does not have degree {n}")
            v[int(w.replace("a", "0").replace("b", "1") or "0", 2)] = c
        return v

    @classmethod
    def from_dense(cls, v, n: int) -> "NCPolynomial":
        terms = {}
        for idx in np.flatnonzero(v):
            w = format(int(idx), f"0{n}b").replace("0", "a").replace("1", "b") if n else ""
            terms[w] = int(v[idx])
        return cls(terms, AB)

    # text and json
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self._terms.items()):
            mono = _format_word(w)
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}{mono}" if mono else str(mag))
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"NCPolynomial({self.to_text()!r}, alphabet={self.alphabet!r})"

    def to_json(self) -> dict:
        return dict(self._terms)

    @classmethod
    def from_json(cls, data: Mapping[str, int], alphabet: str | None = None) -> "NCPolynomial":
        if alphabet is None:
            letters = set("".join(data))
            alphabet = AB if letters and letters <= set(AB) else CD
        return cls(dict(data), alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: str | None = None) -> "NCPolynomial":
        """Inverse of :meth:`to_text`, e.g. ``"c^3 + 3cd + 3dc"``."""
        s = text.replace(" ", "").replace("*", "").replace("·", "")
        if not s:
            raise InputError("empty polynomial")
        if alphabet is None:
            letters = set(re.sub(r"[^a-z]", "", s))
            alphabet = AB if letters and letters <= set(AB) else CD
        if s == "0":
            return cls.zero(alphabet)
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[str, int] = {}
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos:
                raise InputError(f"cannot parse polynomial {text!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            word = "".join(ch * int(e or 1) for ch, e in _FACTOR.findall(m.group(3)))
            if not word and not m.group(2):
                raise InputError(f"cannot parse polynomial {text!r}")
            terms[word] = terms.get(word, 0) + sign * coeff
        if pos != len(s):
            raise InputError(f"cannot parse polynomial {text!r}")
        return cls(terms, alphabet)


_TERM = re.compile(r"([+-])(\d*)((?:[a-d](?:\^\d+)?)*)")
_FACTOR = re.compile(r"([a-d])(?:\^(\d+))?")


def _format_word(w: str) -> str:
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        out.append(w[i] if run == 1 else f"{w[i]}^{run}")
        i = j
    return "".join(out)


def ab(text: str) -> NCPolynomial:
    return NCPolynomial.parse(text, AB)


def cd(text: str) -> NCPolynomial:
    return NCPolynomial.parse(text, CD)
