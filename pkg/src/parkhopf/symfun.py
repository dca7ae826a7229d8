"""Noncommutative symmetric functions: S and R bases on composition keys,
the extended algebra with a degree-zero generator, and the commutative
specializations (virtual alphabets) used by the characters.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from .combinat import (coarser_leq, comp_concat, comp_near_concat,
                       compositions)
from .exact import LinComb, Poly, RatFun


class SymElem:
    """An element of the free algebra on S_1, S_2, ... (or its R-basis form).

    ``extended`` admits zero parts in the keys, for words like ev(pi).0 in
    the algebra with the extra degree-zero indeterminate.
    """

    __slots__ = ("basis", "terms", "extended")

    def __init__(self, basis: str, terms: LinComb | None = None,
                 extended: bool = False):
        if basis not in ("S", "R"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = terms if terms is not None else LinComb()
        self.extended = extended
        floor = 0 if extended else 1
        for key, _ in self.terms:
            if any(p < floor for p in key):
                raise ValueError(f"invalid composition key {key} (extended={extended})")
        if extended and basis != "S":
            raise ValueError("the extended algebra only carries the S basis")

    @classmethod
    def s(cls, key, coeff=1, extended: bool = False) -> "SymElem":
        return cls("S", LinComb.term(tuple(key), coeff), extended)

    @classmethod
    def r(cls, key, coeff=1) -> "SymElem":
        return cls("R", LinComb.term(tuple(key), coeff))

    @classmethod
    def one(cls, basis: str = "S", extended: bool = False) -> "SymElem":
        return cls(basis, LinComb.term((), 1), extended)

    @classmethod
    def zero(cls, basis: str = "S", extended: bool = False) -> "SymElem":
        return cls(basis, LinComb(), extended)

    def _like(self, terms: LinComb) -> "SymElem":
        return SymElem(self.basis, terms, self.extended)

    def __add__(self, other: "SymElem") -> "SymElem":
        self._check_compatible(other)
        return self._like(self.terms + other.terms)

    def __sub__(self, other: "SymElem") -> "SymElem":
        self._check_compatible(other)
        return self._like(self.terms - other.terms)

    def __neg__(self):
        return self._like(-self.terms)

    def scale(self, c) -> "SymElem":
        return self._like(self.terms.scale(c))

    def _check_compatible(self, other: "SymElem"):
        if not isinstance(other, SymElem):
            raise TypeError(f"not a SymElem: {other!r}")
        if self.basis != other.basis or self.extended != other.extended:
            raise ValueError(
                f"basis mismatch: {self.basis}/{self.extended} vs "
                f"{other.basis}/{other.extended}")

    def __mul__(self, other: "SymElem") -> "SymElem":
        self._check_compatible(other)
        if self.basis == "S":
            rule = lambda k1, k2: LinComb.term(comp_concat(k1, k2))
        else:
            rule = _ribbon_rule
        out = LinComb()
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                out = out + rule(k1, k2).scale(c1 * c2)
        return self._like(out)

    def __eq__(self, other):
        return (isinstance(other, SymElem) and self.basis == other.basis
                and self.extended == other.extended and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.basis, self.extended, frozenset(self.terms.terms.items())))

    def coeff(self, key):
        return self.terms.coeff(tuple(key))

    def homogeneous_component(self, n: int) -> "SymElem":
        return self._like(LinComb((k, c) for k, c in self.terms if sum(k) == n))

    def __str__(self):
        if not self.terms:
            return "0"
        def key_str(k):
            return self.basis + "^{" + ("".join(map(str, k)) or "()") + "}"
        bits = []
        for k, c in sorted(self.terms, key=lambda kv: (sum(kv[0]), kv[0])):
            bits.append(f"{c}*{key_str(k)}" if c != 1 else key_str(k))
        return " + ".join(bits)

    def __repr__(self):
        return f"SymElem({self})"


def _ribbon_rule(i, j) -> LinComb:
    """R_I R_J = R_{I.J} + R_{I |> J}."""
    if not i:
        return LinComb.term(tuple(j))
    if not j:
        return LinComb.term(tuple(i))
    return LinComb.term(comp_concat(i, j)) + LinComb.term(comp_near_concat(i, j))


def s_product(a: SymElem, b: SymElem) -> SymElem:
    if a.basis != "S" or b.basis != "S":
        raise ValueError("s_product needs both factors in the S basis")
    return a * b


def ribbon_product(a: SymElem, b: SymElem) -> SymElem:
    if a.basis != "R" or b.basis != "R":
        raise ValueError("ribbon_product needs both factors in the R basis")
    return a * b


def _check_not_extended(a: SymElem):
    if a.extended:
        raise ValueError("basis change is not defined on extended keys")


def S_to_R(a: SymElem) -> SymElem:
    """S^I = sum of R_J over all J coarser than or equal to I."""
    _check_not_extended(a)
    if a.basis == "R":
        return a
    out = LinComb()
    for i, c in a.terms:
        for j in compositions(sum(i)):
            if coarser_leq(j, i):
                out = out + LinComb.term(j, c)
    return SymElem("R", out)


def R_to_S(a: SymElem) -> SymElem:
    """R_I = sum over J <= I of (-1)^(l(I)-l(J)) S^J (Moebius inversion)."""
    _check_not_extended(a)
    if a.basis == "S":
        return a
    out = LinComb()
    for i, c in a.terms:
        for j in compositions(sum(i)):
            if coarser_leq(j, i):
                sign = (-1) ** (len(i) - len(j))
                out = out + LinComb.term(j, sign * c)
    return SymElem("S", out)


def as2_axioms_check(n: int) -> bool:
    """(I *1 J) *2 K = I *1 (J *2 K) for *i in {concat, near-concat},
    over all composition triples of total size n, lifted to R-basis elements.
    """
    if n > 8:
        raise ValueError("as2_axioms_check supports n <= 8")
    ops = (comp_concat, comp_near_concat)
    for p in range(1, n - 1):
        for q in range(1, n - p):
            r = n - p - q
            if r < 1:
                continue
            for i in compositions(p):
                for j in compositions(q):
                    for k in compositions(r):
                        for op1, op2 in itertools.product(ops, repeat=2):
                            if op2(op1(i, j), k) != op1(i, op2(j, k)):
                                return False
                        lhs = SymElem.r(comp_concat(i, j)) * SymElem.r(k)
                        rhs = SymElem.r(i) * (SymElem.r(j) * SymElem.r(k))
                        if (SymElem.r(i) * SymElem.r(j)) * SymElem.r(k) != rhs or not lhs:
                            return False
    return True


# -- virtual alphabets -------------------------------------------------------


class VirtualAlphabet:
    """A character of commutative symmetric functions given by its power sums.

    The three alphabets used here: the binomial element (p_n = a), the
    two-parameter alphabet (1-x)/(1-q) with p_n = (1-x^n)/(1-q^n), and the
    rank-one multiple m(1-x) with p_n = m(1-x^n).
    """

    def __init__(self, kind: str, m: int | None = None):
        if kind not in ("binomial", "one_minus_x_over_one_minus_q",
                        "m_times_one_minus_x"):
            raise ValueError(f"unknown virtual alphabet {kind!r}")
        if kind == "m_times_one_minus_x" and m is None:
            raise ValueError("the rank-one alphabet needs its multiplier m")
        self.kind = kind
        self.m = m
        self._h: dict[int, RatFun] = {0: RatFun(1)}
        self._e: dict[int, RatFun] = {0: RatFun(1)}

    def p(self, n: int) -> RatFun:
        if n < 1:
            raise ValueError("power sums are indexed by n >= 1")
        if self.kind == "binomial":
            return RatFun(Poly.var("a"))
        x, q = Poly.var("x"), Poly.var("q")
        if self.kind == "one_minus_x_over_one_minus_q":
            return RatFun(1 - x ** n, 1 - q ** n)
        return RatFun((1 - x ** n).scale(self.m))

    def h(self, n: int) -> RatFun:
        """Complete functions by the Newton recurrence n h_n = sum p_k h_(n-k)."""
        if n not in self._h:
            acc = RatFun(0)
            for k in range(1, n + 1):
                acc = acc + self.p(k) * self.h(n - k)
            self._h[n] = acc * RatFun(Poly.const(Fraction(1, n)))
        return self._h[n]

    def e(self, n: int) -> RatFun:
        """Elementary functions via sum_k (-1)^k e_k h_(n-k) = 0."""
        if n not in self._e:
            acc = RatFun(0)
            for k in range(n):
                acc = acc + RatFun((-1) ** k) * self.e(k) * self.h(n - k)
            self._e[n] = acc * RatFun((-1) ** (n + 1))
        return self._e[n]


def evaluate(a: SymElem, alphabet: VirtualAlphabet) -> RatFun:
    """Commutative evaluation S^I -> prod_k h_(i_k)(A)."""
    if a.basis != "S":
        raise ValueError("evaluate expects the S basis")
    if a.extended:
        raise ValueError("evaluate rejects extended keys")
    total = RatFun(0)
    for key, c in a.terms:
        term = RatFun(1)
        for part in key:
            term = term * alphabet.h(part)
        total = total + RatFun(Poly.coerce(c)) * term
    return total


def rising_factorial(base: Poly, m: int) -> Poly:
    out = Poly.const(1)
    for j in range(m):
        out = out * (base + Poly.const(j))
    return out


def cycle_enumerator(i) -> Poly:
    """Z_I(a) = prod_k a(a+1)...(a+i_k-1), the cycle enumerator of the
    Young subgroup S_(i_1) x ... x S_(i_r)."""
    alpha = Poly.var("a")
    out = Poly.const(1)
    for part in i:
        out = out * rising_factorial(alpha, part)
    return out


def binomial_poly(shift: int, n: int) -> Poly:
    """C(a + shift, n) as a polynomial in a."""
    alpha = Poly.var("a")
    out = Poly.const(1)
    for j in range(n):
        out = out * (alpha + Poly.const(shift - j))
    return out.scale(Fraction(1, factorial(n)))
