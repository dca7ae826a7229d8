"""Exact coefficient arithmetic: multivariate polynomials over Q, normalized
rational functions, free-module linear combinations, and exact linear algebra.

Coefficients are `fractions.Fraction` throughout; there is no floating point
anywhere in this package.  Polynomials live in the fixed variable set
q, t, x, z, a (``a`` is the binomial-element parameter), stored as a sparse
map from dense exponent vectors to rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

VARS = ("q", "t", "x", "z", "a")
NVARS = len(VARS)
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO = (0,) * NVARS


class NonPolynomialError(ArithmeticError):
    """A rational function expected to be polynomial has a nontrivial denominator."""


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division requested for a non-divisor."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not a rational scalar: {c!r}")


def _term_key(exps):
    # graded lex, q most significant; used for leading terms and printing
    return (sum(exps), exps)


class Poly:
    """Sparse multivariate polynomial over Q in the variables q,t,x,z,a."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        cleaned: dict[tuple, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                c = _as_fraction(c)
                if c:
                    cleaned[tuple(exps)] = c
        self.terms = cleaned

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({_ZERO: _as_fraction(c)})

    @classmethod
    def var(cls, name: str, power: int = 1, coeff=1) -> "Poly":
        exps = [0] * NVARS
        exps[_VAR_INDEX[name]] = power
        return cls({tuple(exps): _as_fraction(coeff)})

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        return cls.const(value)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, RatFun):
            return NotImplemented
        other = Poly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, RatFun):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, RatFun):
            return NotImplemented
        other = Poly.coerce(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(e == _ZERO for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get(_ZERO, Fraction(0))

    def leading(self) -> tuple[tuple, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_term_key)
        return e, self.terms[e]

    def variables(self) -> set[str]:
        out = set()
        for e in self.terms:
            for i, p in enumerate(e):
                if p:
                    out.add(VARS[i])
        return out

    def coeffs_in(self, name: str) -> dict[int, "Poly"]:
        """Split into coefficients of powers of one variable."""
        i = _VAR_INDEX[name]
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            out.setdefault(e[i], {})[rest] = c
        return {k: Poly(v) for k, v in out.items()}

    def coefficient(self, name: str, power: int) -> "Poly":
        return self.coeffs_in(name).get(power, Poly())

    def substitute(self, name: str, value) -> "Poly":
        """Substitute a polynomial (or scalar) for one variable."""
        value = Poly.coerce(value)
        out = Poly()
        powers: dict[int, Poly] = {0: Poly.const(1)}

        def val_pow(k: int) -> Poly:
            if k not in powers:
                powers[k] = val_pow(k - 1) * value
            return powers[k]

        for k, coeff in self.coeffs_in(name).items():
            out = out + coeff * val_pow(k)
        return out

    def scale(self, c) -> "Poly":
        c = _as_fraction(c)
        return Poly({e: c * v for e, v in self.terms.items()})

    # -- printing ----------------------------------------------------------

    @staticmethod
    def _monomial_str(exps) -> str:
        parts = []
        for i, p in enumerate(exps):
            if p == 1:
                parts.append(VARS[i])
            elif p > 1:
                parts.append(f"{VARS[i]}^{p}")
        return "".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=lambda m: (sum(m), tuple(-k for k in m))):
            c = self.terms[e]
            mono = self._monomial_str(e)
            neg = c < 0
            c = abs(c)
            if mono and c == 1:
                body = mono
            elif mono:
                cs = str(c) if c.denominator == 1 else f"({c})"
                body = f"{cs}{mono}"
            else:
                body = str(c)
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"Poly({self})"


P_ZERO = Poly()
P_ONE = Poly.const(1)


# -- polynomial division and gcd ------------------------------------------


def poly_divexact(num: Poly, den: Poly) -> Poly:
    """Exact multivariate division; raises NotDivisibleError on failure."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return Poly()
    quot: dict[tuple, Fraction] = {}
    rem = num
    de, dc = den.leading()
    while rem:
        re, rc = rem.leading()
        me = tuple(a - b for a, b in zip(re, de))
        if any(p < 0 for p in me):
            raise NotDivisibleError(f"({num}) is not divisible by ({den})")
        mc = rc / dc
        quot[me] = mc
        rem = rem - Poly({me: mc}) * den
    return Poly(quot)


def _to_univariate(p: Poly, i: int) -> dict[int, Poly]:
    out: dict[int, dict] = {}
    for e, c in p.terms.items():
        rest = e[:i] + (0,) + e[i + 1:]
        out.setdefault(e[i], {})[rest] = c
    return {k: Poly(v) for k, v in out.items()}


def _from_univariate(coeffs: dict[int, Poly], i: int) -> Poly:
    out: dict[tuple, Fraction] = {}
    for k, p in coeffs.items():
        for e, c in p.terms.items():
            out[e[:i] + (k,) + e[i + 1:]] = c
    return Poly(out)


def _main_variable(a: Poly, b: Poly) -> int | None:
    for i in reversed(range(NVARS)):
        if any(e[i] for e in a.terms) or any(e[i] for e in b.terms):
            return i
    return None


def _content(coeffs: Iterable[Poly]) -> Poly:
    g = Poly()
    for c in coeffs:
        g = poly_gcd(g, c)
    return g


def _pseudo_rem(a: dict[int, Poly], b: dict[int, Poly]) -> dict[int, Poly]:
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        new: dict[int, Poly] = {}
        for k, c in r.items():
            new[k] = c * lb
        shift = dr - db
        for k, c in b.items():
            v = new.get(k + shift, Poly()) - lr * c
            if v:
                new[k + shift] = v
            else:
                new.pop(k + shift, None)
        r = {k: c for k, c in new.items() if c}
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via a primitive pseudo-remainder sequence."""
    if not a and not b:
        return Poly()
    if not a:
        return _monic(b)
    if not b:
        return _monic(a)
    i = _main_variable(a, b)
    if i is None:
        return P_ONE
    ua, ub = _to_univariate(a, i), _to_univariate(b, i)
    if max(ua) == 0 or max(ub) == 0:
        # one argument is free of the main variable: gcd of contents only
        return _monic(poly_gcd(_content(ua.values()), _content(ub.values())))
    ca, cb = _content(ua.values()), _content(ub.values())
    cont = poly_gcd(ca, cb)
    pa = {k: poly_divexact(c, ca) for k, c in ua.items()}
    pb = {k: poly_divexact(c, cb) for k, c in ub.items()}
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while True:
        r = _pseudo_rem(pa, pb)
        if not r:
            break
        cr = _content(r.values())
        pa, pb = pb, {k: poly_divexact(c, cr) for k, c in r.items()}
    return _monic(cont * _from_univariate(pb, i))


def _monic(p: Poly) -> Poly:
    if not p:
        return p
    _, lc = p.leading()
    return p.scale(Fraction(1) / lc)


# -- rational functions ----------------------------------------------------


class RatFun:
    """Quotient of polynomials, gcd-normalized with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=P_ONE):
        num = Poly.coerce(num)
        den = Poly.coerce(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = P_ZERO, P_ONE
            return
        g = poly_gcd(num, den)
        if not g.is_constant() or g.constant_value() != 1:
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
        _, lc = den.leading()
        if lc != 1:
            inv = Fraction(1) / lc
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, value) -> "RatFun":
        if isinstance(value, RatFun):
            return value
        return cls(Poly.coerce(value))

    def __add__(self, other):
        other = RatFun.coerce(other)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFun.coerce(other))

    def __rsub__(self, other):
        return RatFun.coerce(other) + (-self)

    def __mul__(self, other):
        other = RatFun.coerce(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFun.coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFun.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFun(self.den, self.num) ** (-n)
        return RatFun(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFun.coerce(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == P_ONE

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise NonPolynomialError(f"nontrivial denominator: {self.den}")
        return self.num

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFun({self})"


def ratfun_normalize(r: RatFun) -> RatFun:
    """Re-normalization (a no-op on well-formed values; construction normalizes)."""
    return RatFun(r.num, r.den)


def assert_polynomial(r: RatFun) -> Poly:
    return RatFun.coerce(r).as_poly()


# -- linear combinations ----------------------------------------------------


def _coeff_is_zero(c) -> bool:
    return not c


class LinComb:
    """Finitely supported map from basis keys to coefficients.

    Keys can be any hashable value; coefficients any exact scalar type
    (int, Fraction, Poly, RatFun) closed under + and *.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            s = data.get(k)
            s = c if s is None else s + c
            if _coeff_is_zero(s):
                data.pop(k, None)
            else:
                data[k] = s
        self.terms = data

    @classmethod
    def term(cls, key, coeff=1) -> "LinComb":
        return cls(((key, coeff),))

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if _coeff_is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        res = LinComb.__new__(LinComb)
        res.terms = out
        return res

    def __neg__(self):
        res = LinComb.__new__(LinComb)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, c) -> "LinComb":
        if _coeff_is_zero(c):
            return LinComb()
        res = LinComb.__new__(LinComb)
        res.terms = {k: c * v for k, v in self.terms.items()}
        return res

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def coeff(self, key):
        return self.terms.get(key, 0)

    def support(self):
        return set(self.terms)

    def map_keys(self, f: Callable) -> "LinComb":
        return LinComb((f(k), c) for k, c in self.terms.items())

    def apply_linear(self, f: Callable[..., "LinComb"]) -> "LinComb":
        out = LinComb()
        for k, c in self.terms.items():
            out = out + f(k).scale(c)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{k}]" for k, c in sorted(
            self.terms.items(), key=lambda kv: repr(kv[0])))

    def __repr__(self):
        return f"LinComb({self})"


def lincomb_bilinear_extend(rule: Callable) -> Callable[[LinComb, LinComb], LinComb]:
    """Extend a key-pair rule (returning a LinComb) bilinearly."""

    def product(a: LinComb, b: LinComb) -> LinComb:
        out = LinComb()
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                out = out + rule(k1, k2).scale(c1 * c2)
        return out

    return product


def tensor(a: LinComb, b: LinComb) -> LinComb:
    """Tensor product: LinComb over ordered key pairs."""
    return LinComb(((k1, k2), c1 * c2)
                   for k1, c1 in a.terms.items()
                   for k2, c2 in b.terms.items())


# -- exact linear algebra ----------------------------------------------------


def _field_lift(c):
    if isinstance(c, (int, Fraction)):
        return c
    if isinstance(c, Poly):
        return RatFun(c)
    if isinstance(c, RatFun):
        return c
    raise TypeError(f"unsupported coefficient for elimination: {c!r}")


def _rank(rows: list[list]) -> int:
    """Rank by Gaussian elimination over an exact field."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(rows):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pc = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            c = rows[r][col]
            if c:
                factor = c / pc
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def span_dimension(vectors: Iterable[LinComb]) -> int:
    """Dimension of the span of the given free-module elements."""
    vectors = list(vectors)
    keys = sorted({k for v in vectors for k in v.terms}, key=repr)
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [0] * len(keys)
        for k, c in v.terms.items():
            row[index[k]] = c
        rows.append(row)
    if any(isinstance(c, (Poly, RatFun)) for row in rows for c in row):
        rows = [[_field_lift(Poly.coerce(c) if isinstance(c, (int, Fraction)) else c)
                 for c in row] for row in rows]
    else:
        rows = [[Fraction(c) for c in row] for row in rows]
    return _rank(rows)


def kernel_dimension(basis: Iterable, linear_map: Callable[..., LinComb]) -> int:
    """Kernel dimension of a linear map given on a graded piece by its basis."""
    basis = list(basis)
    sized = [k for k in basis if hasattr(k, "__len__")]
    if sized and len({len(k) for k in sized}) > 1:
        raise ValueError("mixed gradings in kernel_dimension basis")
    images = [linear_map(k) for k in basis]
    return len(basis) - span_dimension(images)


# -- truncated power series in z --------------------------------------------


def series_sqrt_expand(p: Poly, order: int) -> Poly:
    """Square root of a z-series with constant term 1, truncated at z^order.

    Coefficients are computed degreewise from y*y = p (Newton's identity for
    the square), entirely in exact arithmetic.
    """
    coeffs = p.coeffs_in("z")
    c0 = coeffs.get(0, Poly())
    if c0 != P_ONE:
        raise ValueError(f"series square root needs constant term 1, got {c0}")
    y: dict[int, Poly] = {0: P_ONE}
    half = Fraction(1, 2)
    for n in range(1, order + 1):
        acc = coeffs.get(n, Poly())
        for i in range(1, n):
            acc = acc - y[i] * y[n - i]
        y[n] = acc.scale(half)
    z = Poly.var("z")
    out = Poly()
    for n, c in y.items():
        out = out + c * z ** n
    return out


def series_truncate(p: Poly, order: int) -> Poly:
    """Drop all terms of z-degree exceeding ``order``."""
    z_idx = _VAR_INDEX["z"]
    return Poly({e: c for e, c in p.terms.items() if e[z_idx] <= order})
