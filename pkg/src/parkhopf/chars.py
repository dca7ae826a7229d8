"""Characters and their combinatorial payloads: signed parking functions and
their statistics, super-Narayana polynomials, Dyck and Schroeder path
encodings, the bar character on quasi-ribbons, the binomial-element character,
and the q-analogue triangle of (n+1)^(n-1).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from .combinat import (QuasiRibbon, is_ndpf, is_parking, ndpfs,
                       packed_evaluation, parking_functions, quasi_ribbons,
                       shifted_shuffle)
from .exact import (LinComb, NotDivisibleError, Poly, RatFun,
                    assert_polynomial, poly_divexact, series_sqrt_expand)
from .lagrange import solve_g
from .symfun import VirtualAlphabet, cycle_enumerator, evaluate


# -- signed words --------------------------------------------------------------


class SignedWord:
    """A parking function with a sign in {+1, -1} attached to every letter."""

    __slots__ = ("word", "signs")

    def __init__(self, word, signs):
        self.word = tuple(word)
        self.signs = tuple(signs)
        if len(self.word) != len(self.signs):
            raise ValueError("sign word length mismatch")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1: {signs}")
        if not is_parking(self.word):
            raise ValueError(f"base word is not parking: {self.word}")

    def values(self) -> tuple:
        """The signed letters e_i a_i, compared in the usual integer order."""
        return tuple(s * v for s, v in zip(self.signs, self.word))

    @property
    def minus_count(self) -> int:
        return self.signs.count(-1)

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        return (isinstance(other, SignedWord) and self.word == other.word
                and self.signs == other.signs)

    def __hash__(self):
        return hash((self.word, self.signs))

    def __str__(self):
        return ",".join(str(s * v) for s, v in zip(self.signs, self.word))

    @classmethod
    def parse(cls, text: str) -> "SignedWord":
        vals = [int(p) for p in text.split(",") if p.strip()]
        return cls(tuple(abs(v) for v in vals),
                   tuple(1 if v > 0 else -1 for v in vals))

    def __repr__(self):
        return f"SignedWord({self})"


def signed_parking_functions(n: int):
    """All pairs (parking function, sign word); 2^n (n+1)^(n-1) of them."""
    for w in parking_functions(n):
        for signs in itertools.product((-1, 1), repeat=n):
            yield SignedWord(w, signs)


def signed_stats(s: SignedWord):
    """(minus count, signed inversions, signed descent set, signed major index).

    (i, j) with i < j is a signed inversion when v_i > v_j, or v_i = v_j with
    the common sign negative; descents are the adjacent version.
    """
    v = s.values()
    n = len(v)
    sinv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if v[i] > v[j] or (v[i] == v[j] and s.signs[i] == -1):
                sinv += 1
    sdes = frozenset(
        i for i in range(1, n)
        if v[i - 1] > v[i] or (v[i - 1] == v[i] and s.signs[i - 1] == -1))
    return s.minus_count, sinv, sdes, sum(sdes)


# -- super-Narayana polynomials --------------------------------------------------


def _qfact(n: int) -> Poly:
    """(q)_n = (1-q)(1-q^2)...(1-q^n)."""
    q = Poly.var("q")
    out = Poly.const(1)
    for k in range(1, n + 1):
        out = out * (1 - q ** k)
    return out


def _qbinom(n: int, k: int) -> Poly:
    return poly_divexact(_qfact(n), _qfact(k) * _qfact(n - k))


def super_narayana_count(n: int) -> Poly:
    """Sum of t^(minus) q^(sinv) over all signed parking functions of length n.

    The same polynomial with smaj in place of sinv is computed alongside and
    the equality of the two distributions is asserted.
    """
    if n > 6:
        raise ValueError("super_narayana_count supports n <= 6")
    by_sinv: dict[tuple, int] = {}
    by_smaj: dict[tuple, int] = {}
    for s in signed_parking_functions(n):
        m, sinv, _, smaj = signed_stats(s)
        by_sinv[m, sinv] = by_sinv.get((m, sinv), 0) + 1
        by_smaj[m, smaj] = by_smaj.get((m, smaj), 0) + 1
    assert by_sinv == by_smaj, "sinv and smaj distributions must agree"
    t, q = Poly.var("t"), Poly.var("q")
    return sum((t ** m * q ** j * Poly.const(c)
                for (m, j), c in by_sinv.items()), Poly())


def super_narayana_sym(n: int) -> Poly:
    """The symmetric-function route: (q)_n times the commutative image of g_n
    on the alphabet (1-x)/(1-q), then x -> -t; polynomiality is asserted."""
    if n > 6:
        raise ValueError("super_narayana_sym supports n <= 6")
    alphabet = VirtualAlphabet("one_minus_x_over_one_minus_q")
    gn = solve_g(n)[n]
    value = evaluate(gn, alphabet) * RatFun(_qfact(n))
    poly = assert_polynomial(value)
    return poly.substitute("x", -Poly.var("t"))


def fsigma_signed_weight(sigma) -> Poly:
    """Sum over sign words of (-x)^(minus) q^(smaj of the signed permutation)."""
    x, q = Poly.var("x"), Poly.var("q")
    out = Poly()
    for signs in itertools.product((-1, 1), repeat=len(sigma)):
        m, _, _, smaj = signed_stats(SignedWord(sigma, signs))
        out = out + (-x) ** m * q ** smaj
    return out


def qtF_identity_check(sigma) -> bool:
    """The signed-maj weight is a character up to the q-binomial normalization.

    Checks sum of weights over the shifted shuffles of sigma with every small
    tau against qbinom(n+m, n) * W(sigma) * W(tau), plus the base case
    W(1) = 1 - x.
    """
    sigma = tuple(sigma)
    if len(sigma) > 5:
        raise ValueError("qtF_identity_check supports |sigma| <= 5")
    if fsigma_signed_weight((1,)) != 1 - Poly.var("x"):
        return False
    n = len(sigma)
    for tau in [(1,), (1, 2), (2, 1)]:
        m = len(tau)
        lhs = Poly()
        for gamma in shifted_shuffle(sigma, tau, n):
            lhs = lhs + fsigma_signed_weight(gamma)
        rhs = _qbinom(n + m, n) * fsigma_signed_weight(sigma) \
            * fsigma_signed_weight(tau)
        if lhs != rhs:
            return False
    return True


def signed_shifted_shuffle(a: SignedWord, b: SignedWord):
    """Shifted shuffle of signed words: letters shift, signs travel along."""
    n, m = len(a), len(b)
    shifted = tuple(v + n for v in b.word)
    for positions in itertools.combinations(range(n + m), n):
        posset = set(positions)
        word, signs = [], []
        ia = ib = 0
        for i in range(n + m):
            if i in posset:
                word.append(a.word[ia])
                signs.append(a.signs[ia])
                ia += 1
            else:
                word.append(shifted[ib])
                signs.append(b.signs[ib])
                ib += 1
        yield SignedWord(word, signs)


def _signed_weight(s: SignedWord) -> Poly:
    x, q = Poly.var("x"), Poly.var("q")
    m, _, _, smaj = signed_stats(s)
    return (-x) ** m * q ** smaj


def s_character_check(n: int) -> bool:
    """The sign-spreading map composed with the signed-weight character.

    Verifies, for all parking-word pairs of total length <= n: the sum of
    weights over the signed shifted shuffles of all signings equals
    qbinom * (summed weight of left) * (summed weight of right); and that the
    full degree-n sum reproduces the super-Narayana polynomial at x = -t.
    """
    if n > 4:
        raise ValueError("s_character_check supports n <= 4")
    for n1 in range(1, n):
        n2 = n - n1
        for a in parking_functions(n1):
            for b in parking_functions(n2):
                lhs = Poly()
                for sa in (SignedWord(a, e)
                           for e in itertools.product((-1, 1), repeat=n1)):
                    for sb in (SignedWord(b, e)
                               for e in itertools.product((-1, 1), repeat=n2)):
                        for s in signed_shifted_shuffle(sa, sb):
                            lhs = lhs + _signed_weight(s)
                wa = sum((_signed_weight(SignedWord(a, e))
                          for e in itertools.product((-1, 1), repeat=n1)),
                         Poly())
                wb = sum((_signed_weight(SignedWord(b, e))
                          for e in itertools.product((-1, 1), repeat=n2)),
                         Poly())
                if lhs != _qbinom(n, n1) * wa * wb:
                    return False
    total = Poly()
    for s in signed_parking_functions(n):
        total = total + _signed_weight(s)
    return total.substitute("x", -Poly.var("t")) == super_narayana_count(n)


# -- Dyck and Schroeder paths ----------------------------------------------------


def dyck_paths(n: int):
    """All Dyck paths of semi-length n as strings over u, d."""
    out = []

    def rec(path, ups, downs):
        if ups == n and downs == n:
            out.append("".join(path))
            return
        if ups < n:
            path.append("u")
            rec(path, ups + 1, downs)
            path.pop()
        if downs < ups:
            path.append("d")
            rec(path, ups, downs + 1)
            path.pop()

    rec([], 0, 0)
    return out


def schroder_paths(n: int):
    """All Schroeder paths of semi-length n (h has width 2) as strings."""
    out = []

    def rec(path, width, height):
        if width == 0:
            if height == 0:
                out.append("".join(path))
            return
        if height < width:
            path.append("u")
            rec(path, width - 1, height + 1)
            path.pop()
        if height > 0:
            path.append("d")
            rec(path, width - 1, height - 1)
            path.pop()
        if width >= 2 and height <= width - 2:
            path.append("h")
            rec(path, width - 2, height)
            path.pop()

    rec([], 2 * n, 0)
    return out


def _validate_path(path: str, allow_h: bool):
    height = 0
    for step in path:
        if step == "u":
            height += 1
        elif step == "d":
            height -= 1
        elif step == "h" and allow_h:
            pass
        else:
            raise ValueError(f"bad step {step!r} in path {path!r}")
        if height < 0:
            raise ValueError(f"path dips below the axis: {path!r}")
    if height != 0:
        raise ValueError(f"path does not return to the axis: {path!r}")


def dyck_encode(path: str) -> tuple:
    """Each up step contributes the number of its diagonal
    (one plus the number of down steps before it); the word is an NDPF."""
    _validate_path(path, allow_h=False)
    word = []
    downs = 0
    for step in path:
        if step == "u":
            word.append(downs + 1)
        else:
            downs += 1
    return tuple(word)


def dyck_decode(pi) -> str:
    pi = tuple(pi)
    if not is_ndpf(pi):
        raise ValueError(f"not a nondecreasing parking function: {pi}")
    n = len(pi)
    path = []
    prev = 1
    for v in pi:
        path.append("d" * (v - prev))
        path.append("u")
        prev = v
    path.append("d" * (n - prev + 1))
    return "".join(path)


def schroder_encode(path: str) -> SignedWord:
    """Up steps give their diagonal; an h gives the barred diagonal of the
    peak it replaces.  The result is a nondecreasing-type signed word."""
    _validate_path(path, allow_h=True)
    word, signs = [], []
    diag = 1
    for step in path:
        if step == "u":
            word.append(diag)
            signs.append(1)
        elif step == "d":
            diag += 1
        else:
            word.append(diag)
            signs.append(-1)
            diag += 1
    return SignedWord(word, signs)


def schroder_decode(s: SignedWord) -> str:
    path = []
    diag = 1
    height = 0
    for v, sign in zip(s.word, s.signs):
        if v < diag:
            raise ValueError(f"letters out of order for a path: {s}")
        path.append("d" * (v - diag))
        height -= v - diag
        diag = v
        if sign == 1:
            path.append("u")
            height += 1
        else:
            path.append("h")
            diag += 1
        if height < 0:
            raise ValueError(f"not a path encoding: {s}")
    path.append("d" * height)
    return "".join(path)


def schroder_sort(s: SignedWord) -> SignedWord:
    """Reorder the letters by the signed-integer order (so -4 < -1 < 1 < 2)."""
    pairs = sorted(zip(s.word, s.signs), key=lambda p: p[0] * p[1])
    return SignedWord(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def _sorted_signed_pfs(n: int):
    """All signed parking functions with zero signed inversions.

    These are exactly the sorted words: distinct negative letters descending
    in absolute value, then the positive letters ascending.
    """
    for pi in ndpfs(n):
        distinct = sorted(set(pi))
        for r in range(len(distinct) + 1):
            for negs in itertools.combinations(distinct, r):
                remaining = list(pi)
                for v in negs:
                    remaining.remove(v)
                word = tuple(sorted(negs, reverse=True)) + tuple(remaining)
                signs = (-1,) * r + (1,) * (n - r)
                yield SignedWord(word, signs)


def schroder_polynomials(n: int) -> tuple[Poly, bool]:
    """P_n(t) = P_n(t, 0) by three routes: Schroeder paths by horizontal
    steps; signed parking functions without signed inversions by minus signs;
    and the square-root generating series.  Returns (P_n(t), all agree)."""
    if n > 7:
        raise ValueError("schroder_polynomials supports n <= 7")
    t = Poly.var("t")
    by_paths = Poly()
    for p in schroder_paths(n):
        by_paths = by_paths + t ** p.count("h")
    by_words = Poly()
    for s in _sorted_signed_pfs(n):
        assert signed_stats(s)[1] == 0
        by_words = by_words + t ** s.minus_count
    z = Poly.var("z")
    inner = (1 - t * z) ** 2 - 4 * z
    sqrt = series_sqrt_expand(inner, n + 1)
    numerator = 1 - t * z - sqrt
    by_series = numerator.coeffs_in("z").get(n + 1, Poly()).scale(Fraction(1, 2))
    return by_paths, (by_paths == by_words == by_series)


def narayana_from_pn(pn_t: Poly) -> Poly:
    """c_n with t c_n(t) = P_n(t - 1): substitute and divide by t exactly."""
    t = Poly.var("t")
    shifted = pn_t.substitute("t", t - 1)
    return poly_divexact(shifted, t)


# -- the bar character on quasi-ribbons -------------------------------------------


def bar_distribution(n: int) -> Poly:
    """Sum of t^(number of bars) over the parking quasi-ribbons of size n."""
    t = Poly.var("t")
    out = Poly()
    for q in quasi_ribbons(n):
        out = out + t ** q.bar_count
    return out


def _peak_after_last_h(path: str) -> bool:
    last_h = path.rfind("h")
    return "ud" in path[last_h + 1:]


def _peaks(path: str):
    """(number of ud factors, any peak at level one)."""
    count = 0
    level_one = False
    height = 0
    for i, step in enumerate(path):
        if step == "u":
            height += 1
            if i + 1 < len(path) and path[i + 1] == "d":
                count += 1
                if height == 1:
                    level_one = True
        elif step == "d":
            height -= 1
    return count, level_one


def chi_path_model_check(n: int) -> bool:
    """Bar distribution against two Schroeder path statistics.

    #{quasi-ribbons, k bars} equals #{paths, k h-steps, with a peak after the
    last h or no h at all}; equivalently #{paths, k+1 h-steps, no peak after
    the last h}; and also #{paths, k peaks, none at level one}.
    """
    bars = bar_distribution(n).coeffs_in("t")
    bar_counts = {k: p.constant_value() for k, p in bars.items()}
    paths = schroder_paths(n)
    with_peak: dict[int, int] = {}
    without_peak: dict[int, int] = {}
    by_peaks: dict[int, int] = {}
    for p in paths:
        k = p.count("h")
        if "h" not in p or _peak_after_last_h(p):
            with_peak[k] = with_peak.get(k, 0) + 1
        else:
            without_peak[k] = without_peak.get(k, 0) + 1
        npeaks, level_one = _peaks(p)
        if not level_one:
            by_peaks[npeaks] = by_peaks.get(npeaks, 0) + 1
    kmax = max(bar_counts, default=0)
    for k in range(kmax + 2):
        expected = bar_counts.get(k, 0)
        if with_peak.get(k, 0) != expected:
            return False
        if without_peak.get(k + 1, 0) != expected:
            return False
        if by_peaks.get(k, 0) != expected:
            return False
    return True


def chi_sqsym(n: int) -> tuple[Poly, bool]:
    """The bar character chi(P_q) = (1+t) t^(bars).

    Returns ((1+t) * bar distribution, checks) where the checks cover the
    character property on products, the Narayana value of the degree-n sum,
    and the path model.
    """
    if n > 7:
        raise ValueError("chi_sqsym supports n <= 7")
    t = Poly.var("t")
    dist = bar_distribution(n)
    chi_gn = (1 + t) * dist
    pn, routes_ok = schroder_polynomials(n)
    cn = narayana_from_pn(pn)
    ok = routes_ok
    # chi(G_n) = (1+t) c_n(1+t)
    ok = ok and chi_gn == (1 + t) * cn.substitute("t", 1 + t)
    ok = ok and dist == cn.substitute("t", 1 + t)
    ok = ok and chi_path_model_check(n)
    ok = ok and _chi_character_property(min(n, 4))
    return chi_gn, ok


def _chi_value(q: QuasiRibbon) -> Poly:
    t = Poly.var("t")
    return (1 + t) * t ** q.bar_count


def _chi_character_property(n: int) -> bool:
    """chi(P_q' P_q'') = chi(P_q') chi(P_q'') for total degree <= n."""
    from .hopf import sqsym_product
    for n1 in range(1, n):
        for n2 in range(1, n - n1 + 1):
            for q1 in quasi_ribbons(n1):
                for q2 in quasi_ribbons(n2):
                    product = sqsym_product(LinComb.term(q1), LinComb.term(q2))
                    lhs = Poly()
                    for q, c in product:
                        lhs = lhs + _chi_value(q).scale(c)
                    if lhs != _chi_value(q1) * _chi_value(q2):
                        return False
    return True


# -- the binomial-element character ------------------------------------------------


def psi_alpha_value(w) -> Poly:
    """psi_a(F_w) = Z_t(w)(a) / n!."""
    return cycle_enumerator(packed_evaluation(w)).scale(
        Fraction(1, factorial(len(w))))


def pn_alpha(n: int) -> Poly:
    """P_n(a) = a (prod over k=1..n-1 of ((n+1) a + k))."""
    alpha = Poly.var("a")
    out = alpha
    for k in range(1, n):
        out = out * (alpha.scale(n + 1) + Poly.const(k))
    return out


def fixed_pair_counts(n: int) -> dict[int, int]:
    """#{(a, sigma) : a a parking function, sigma with k cycles, a o sigma = a}
    with (a o sigma)_i = a_(sigma(i)); keyed by k."""
    if n > 5:
        raise ValueError("fixed_pair_counts supports n <= 5")
    out: dict[int, int] = {}
    perms = list(itertools.permutations(range(1, n + 1)))
    cycles = {}
    for sigma in perms:
        seen = [False] * n
        k = 0
        for i in range(n):
            if not seen[i]:
                k += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = sigma[j] - 1
        cycles[sigma] = k
    for a in parking_functions(n):
        for sigma in perms:
            if all(a[sigma[i] - 1] == a[i] for i in range(n)):
                k = cycles[sigma]
                out[k] = out.get(k, 0) + 1
    return out


def psi_alpha(n: int) -> tuple[Poly, bool]:
    """Returns (P_n(a), checks): the character property on small products,
    the closed product formula for the degree-n sum, and (for n <= 5) the
    fixed-pair interpretation of the coefficients."""
    if n > 6:
        raise ValueError("psi_alpha supports n <= 6")
    target = pn_alpha(n)
    by_eval: dict[tuple, int] = {}
    for a in parking_functions(n):
        comp = packed_evaluation(a)
        by_eval[comp] = by_eval.get(comp, 0) + 1
    total = sum((cycle_enumerator(comp).scale(count)
                 for comp, count in by_eval.items()), Poly())
    ok = total == target
    ok = ok and _psi_alpha_character_property(min(n, 4))
    if n <= 5:
        counts = fixed_pair_counts(n)
        coeffs = target.coeffs_in("a")
        ok = ok and all(
            coeffs.get(k, Poly()).constant_value() == counts.get(k, 0)
            for k in range(n + 1))
    return target, ok


def _psi_alpha_character_property(n: int) -> bool:
    from .hopf import pqsym_product
    for n1 in range(1, n):
        for n2 in range(1, n - n1 + 1):
            for a in parking_functions(n1):
                for b in parking_functions(n2):
                    product = pqsym_product(LinComb.term(a), LinComb.term(b))
                    lhs = Poly()
                    for w, c in product:
                        lhs = lhs + psi_alpha_value(w).scale(c)
                    if lhs != psi_alpha_value(a) * psi_alpha_value(b):
                        return False
    return True


# -- the q-triangle -----------------------------------------------------------------


def qn_polynomial(n: int) -> Poly:
    """Q_n(q) = prod over k=2..n of ((n+1-k) q + k), a q-analogue of (n+1)^(n-1)."""
    q = Poly.var("q")
    out = Poly.const(1)
    for k in range(2, n + 1):
        out = out * (q.scale(n + 1 - k) + Poly.const(k))
    return out


def q_triangle(n_max: int) -> list[list[int]]:
    """Coefficient rows of Q_n(q), n = 1..n_max, constant term first.

    Checks the reciprocal identity Q_n(q) = (q-1)^n P_n(1/(q-1))
    (P_n has degree n and no constant term, so Q_n has degree n-1)
    and that column 0 is n!.
    """
    if n_max > 10:
        raise ValueError("q_triangle supports n_max <= 10")
    q = Poly.var("q")
    rows = []
    for n in range(1, n_max + 1):
        qn = qn_polynomial(n)
        # reciprocal identity through the alpha-coefficients of P_n
        pn = pn_alpha(n)
        recip = Poly()
        for k, c in pn.coeffs_in("a").items():
            recip = recip + c * (q - 1) ** (n - k)
        if recip != qn:
            raise AssertionError(f"reciprocal identity fails at n={n}")
        coeffs = qn.coeffs_in("q")
        row = [int(coeffs.get(k, Poly()).constant_value())
               for k in range(n)]
        if row[0] != factorial(n):
            raise AssertionError(f"column 0 is not n! at n={n}")
        rows.append(row)
    return rows


# -- the Narayana cross-check ---------------------------------------------------------


def lassalle_narayana(n: int) -> Poly:
    """c_n(q) through the rank-one alphabet: evaluate h_n on (n+1)(1-x),
    divide by n+1, substitute x = 1-q, divide by q."""
    if n > 7:
        raise ValueError("lassalle_narayana supports n <= 7")
    alphabet = VirtualAlphabet("m_times_one_minus_x", m=n + 1)
    hn = assert_polynomial(alphabet.h(n)).scale(Fraction(1, n + 1))
    q = Poly.var("q")
    value = hn.substitute("x", 1 - q)
    try:
        return poly_divexact(value, q)
    except NotDivisibleError as exc:
        raise NotDivisibleError(
            f"h_n((n+1)(1-x))/(n+1) is not divisible by q at n={n}") from exc
