"""The five combinatorial algebras on parking-function-like objects.

Elements are LinComb values over the natural basis keys of each algebra:

* parking-word algebra, F basis, keys = parking functions (tuples);
* Catalan subalgebra, P basis, keys = nondecreasing parking functions;
* Schroeder subalgebra, P basis, keys = QuasiRibbon;
* permutation algebra, G basis (F handled through inversion), keys = permutations;
* packed-word algebra, M basis, keys = packed words.

Products, the duplicial / dendriform / tridendriform partial operations, the
duplicial coproduct, and the morphisms between the algebras all live here as
module-level functions; everything is pure and stateless.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinat import (NotInSubalgebraError, QuasiRibbon,
                       hypoplactic_quasi_ribbon, packed_evaluation,
                       parking_functions, parkize, shifted_concat_len,
                       shifted_concat_max, shifted_shuffle,
                       sort_ascending, standardize, word_to_text)
from .exact import LinComb
from .symfun import SymElem


def unit() -> LinComb:
    """The empty word is the unit of every full product here."""
    return LinComb.term(())


# -- parking-word algebra (F basis) -------------------------------------------


def pqsym_product(a: LinComb, b: LinComb) -> LinComb:
    """F_a F_b: length-shifted shuffle."""
    out = LinComb()
    for k1, c1 in a:
        for k2, c2 in b:
            out = out + LinComb(
                (w, c1 * c2) for w in shifted_shuffle(k1, k2, len(k1)))
    return out


def pqsym_dup_prec(a: LinComb, b: LinComb) -> LinComb:
    """The normalized left duplicial operation on parking words.

    With m = max(a): F_a < F_b = (|a|_m! |b|_1! / (|a|_m + |b|_1)!) times the
    sum over the shuffle of a with b shifted by m - 1.
    """
    out = LinComb()
    for k1, c1 in a:
        if not k1:
            raise ValueError("left duplicial operation needs a nonempty left key")
        m = max(k1)
        am = k1.count(m)
        for k2, c2 in b:
            if not k2:
                raise ValueError("duplicial operations live on the augmentation ideal")
            b1 = k2.count(1)
            coeff = Fraction(factorial(am) * factorial(b1),
                             factorial(am + b1)) * c1 * c2
            out = out + LinComb(
                (w, coeff) for w in shifted_shuffle(k1, k2, m - 1))
    return out


def pqsym_dup_succ(a: LinComb, b: LinComb) -> LinComb:
    """The right duplicial operation on parking words is the ordinary product."""
    return pqsym_product(a, b)


# -- Catalan subalgebra (P basis on nondecreasing parking functions) ----------


def cqsym_succ(a: LinComb, b: LinComb) -> LinComb:
    """P^alpha > P^beta = P^(alpha.beta[len]) - the multiplicative product."""
    out = LinComb()
    for k1, c1 in a:
        for k2, c2 in b:
            out = out + LinComb.term(shifted_concat_len(k1, k2), c1 * c2)
    return out


def cqsym_prec(a: LinComb, b: LinComb) -> LinComb:
    """P^alpha < P^beta = P^(alpha.beta[max-1]); empty left keys are rejected."""
    out = LinComb()
    for k1, c1 in a:
        for k2, c2 in b:
            out = out + LinComb.term(shifted_concat_max(k1, k2), c1 * c2)
    return out


def cqsym_expand_F(a: LinComb) -> LinComb:
    """P^pi = sum of F_a over the rearrangements a of pi."""
    out = LinComb()
    for pi, c in a:
        out = out + LinComb(
            (w, c) for w in set(itertools.permutations(pi)))
    return out


def pqsym_project_P(a: LinComb) -> LinComb:
    """Regroup an F-expansion on reordering classes; fail if not constant."""
    groups: dict[tuple, dict] = {}
    for w, c in a:
        groups.setdefault(sort_ascending(w), {})[w] = c
    out = LinComb()
    for pi, members in groups.items():
        expected = set(itertools.permutations(pi))
        coeffs = set(members.values())
        if set(members) != expected or len(coeffs) != 1:
            raise NotInSubalgebraError(
                f"not constant on the reordering class of {pi}")
        out = out + LinComb.term(pi, coeffs.pop())
    return out


def dup_coproduct(a: LinComb) -> LinComb:
    """The reduced duplicial coproduct on the P basis.

    delta(P^pi) = sum over proper cuts k of
    P^park(prefix) (x) P^park(suffix starting at k+1); single letters are
    primitive.
    """
    out = LinComb()
    for pi, c in a:
        n = len(pi)
        for k in range(1, n):
            out = out + LinComb.term(
                (parkize(pi[:k]), parkize(pi[k:])), c)
    return out


def dup_bracket(a: LinComb, b: LinComb) -> LinComb:
    """{a, b} = a < b - a > b (magmatic, preserves primitives)."""
    return cqsym_prec(a, b) - cqsym_succ(a, b)


def primitive_dimension(n: int) -> int:
    """Kernel dimension of the duplicial coproduct in degree n."""
    from .combinat import ndpfs
    from .exact import kernel_dimension
    if n > 7:
        raise ValueError("primitive_dimension supports n <= 7")
    return kernel_dimension(
        ndpfs(n), lambda pi: dup_coproduct(LinComb.term(pi)))


# -- Schroeder subalgebra (P basis on parking quasi-ribbons) -------------------


@lru_cache(maxsize=None)
def _hypoplactic_classes(n: int) -> dict:
    classes: dict[QuasiRibbon, tuple] = {}
    for w in parking_functions(n):
        classes.setdefault(hypoplactic_quasi_ribbon(w), []).append(w)
    return {q: tuple(ws) for q, ws in classes.items()}


def sqsym_expand_F(a: LinComb) -> LinComb:
    """P_q = sum of F_a over the hypoplactic class of q."""
    out = LinComb()
    for q, c in a:
        members = _hypoplactic_classes(len(q)).get(q)
        if members is None:
            raise ValueError(f"no parking function has hypoplactic class {q}")
        out = out + LinComb((w, c) for w in members)
    return out


def pqsym_project_sqsym(a: LinComb) -> LinComb:
    """Regroup an F-expansion on hypoplactic classes; fail if not closed."""
    groups: dict[QuasiRibbon, dict] = {}
    for w, c in a:
        groups.setdefault(hypoplactic_quasi_ribbon(w), {})[w] = c
    out = LinComb()
    for q, members in groups.items():
        expected = set(_hypoplactic_classes(len(q))[q])
        coeffs = set(members.values())
        if set(members) != expected or len(coeffs) != 1:
            raise NotInSubalgebraError(
                f"not constant on the hypoplactic class of {q}")
        out = out + LinComb.term(q, coeffs.pop())
    return out


def sqsym_product(a: LinComb, b: LinComb) -> LinComb:
    """Product computed in F coordinates and regrouped; closure is asserted."""
    return pqsym_project_sqsym(
        pqsym_product(sqsym_expand_F(a), sqsym_expand_F(b)))


def qr_succ(q1: QuasiRibbon, q2: QuasiRibbon) -> QuasiRibbon:
    """Shift the second factor by the length of the first; bars carried along."""
    k = len(q1)
    return QuasiRibbon(shifted_concat_len(q1.word, q2.word),
                       q1.bars | {b + k for b in q2.bars})


def qr_prec(q1: QuasiRibbon, q2: QuasiRibbon) -> QuasiRibbon:
    """Shift the second factor by max - 1; bars carried along, none added."""
    k = len(q1)
    return QuasiRibbon(shifted_concat_max(q1.word, q2.word),
                       q1.bars | {b + k for b in q2.bars})


def qr_mid(q1: QuasiRibbon, q2: QuasiRibbon) -> QuasiRibbon:
    """Length-shifted concatenation with a new bar at the junction."""
    k = len(q1)
    return QuasiRibbon(shifted_concat_len(q1.word, q2.word),
                       q1.bars | {k} | {b + k for b in q2.bars})


def tridup_succ(a: LinComb, b: LinComb) -> LinComb:
    return LinComb((qr_succ(k1, k2), c1 * c2) for k1, c1 in a for k2, c2 in b)


def tridup_prec(a: LinComb, b: LinComb) -> LinComb:
    return LinComb((qr_prec(k1, k2), c1 * c2) for k1, c1 in a for k2, c2 in b)


def tridup_mid(a: LinComb, b: LinComb) -> LinComb:
    return LinComb((qr_mid(k1, k2), c1 * c2) for k1, c1 in a for k2, c2 in b)


# -- permutation algebra (G basis) --------------------------------------------


def perm_inverse(sigma) -> tuple:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma, start=1):
        inv[v - 1] = i
    return tuple(inv)


def _convolution_terms(alpha, beta):
    """All gamma = uv with std(u) = alpha, std(v) = beta."""
    n, m = len(alpha), len(beta)
    values = range(1, n + m + 1)
    for chosen in itertools.combinations(values, n):
        rest = sorted(set(values) - set(chosen))
        u = tuple(chosen[v - 1] for v in alpha)
        v = tuple(rest[w - 1] for w in beta)
        yield u + v, (n + m) in chosen


def fqsym_product(a: LinComb, b: LinComb) -> LinComb:
    """G_alpha G_beta: the convolution product."""
    out = LinComb()
    for k1, c1 in a:
        for k2, c2 in b:
            out = out + LinComb(
                (g, c1 * c2) for g, _ in _convolution_terms(k1, k2))
    return out


def fqsym_left(a: LinComb, b: LinComb) -> LinComb:
    """Terms of the convolution whose maximum letter falls in the left factor."""
    out = LinComb()
    for k1, c1 in a:
        for k2, c2 in b:
            out = out + LinComb(
                (g, c1 * c2) for g, max_left in _convolution_terms(k1, k2)
                if max_left)
    return out


def fqsym_right(a: LinComb, b: LinComb) -> LinComb:
    """Complementary half: the maximum letter falls in the right factor."""
    out = LinComb()
    for k1, c1 in a:
        for k2, c2 in b:
            out = out + LinComb(
                (g, c1 * c2) for g, max_left in _convolution_terms(k1, k2)
                if not max_left)
    return out


def fqsym_F(sigma) -> LinComb:
    """F_sigma = G_(sigma^-1) as an element in G coordinates."""
    return LinComb.term(perm_inverse(tuple(sigma)))


def fqsym_scalar(a: LinComb, b: LinComb):
    """<G_sigma, G_tau> = [sigma = tau^-1], extended bilinearly."""
    total = 0
    for k1, c1 in a:
        c2 = b.coeff(perm_inverse(k1))
        if c2:
            total = total + c1 * c2
    return total


def fqsym_product_F(a: LinComb, b: LinComb) -> LinComb:
    """The product in F coordinates is the length-shifted shuffle."""
    return pqsym_product(a, b)


# -- packed-word algebra (M basis) --------------------------------------------


def _packed_convolution(u1, u2):
    """All packed v.w with pack(v) = u1, pack(w) = u2, with a max comparison tag.

    Yields (word, cmp) where cmp is the sign of max(second part) - max(first).
    """
    k1 = max(u1, default=0)
    k2 = max(u2, default=0)
    for k in range(max(k1, k2), k1 + k2 + 1):
        for img1 in itertools.combinations(range(1, k + 1), k1):
            for img2 in itertools.combinations(range(1, k + 1), k2):
                if set(img1) | set(img2) != set(range(1, k + 1)):
                    continue
                left = tuple(img1[v - 1] for v in u1)
                right = tuple(img2[v - 1] for v in u2)
                m1 = max(left, default=0)
                m2 = max(right, default=0)
                yield left + right, (m2 > m1) - (m2 < m1)


def wqsym_product(a: LinComb, b: LinComb) -> LinComb:
    out = LinComb()
    for k1, c1 in a:
        for k2, c2 in b:
            out = out + LinComb(
                (w, c1 * c2) for w, _ in _packed_convolution(k1, k2))
    return out


def wqsym_thirds(a: LinComb, b: LinComb):
    """The tridendriform splitting (left, mid, right) by max comparison."""
    left, mid, right = LinComb(), LinComb(), LinComb()
    for k1, c1 in a:
        for k2, c2 in b:
            for w, cmp in _packed_convolution(k1, k2):
                t = LinComb.term(w, c1 * c2)
                if cmp < 0:
                    left = left + t
                elif cmp == 0:
                    mid = mid + t
                else:
                    right = right + t
    return left, mid, right


def wqsym_left(a, b):
    return wqsym_thirds(a, b)[0]


def wqsym_mid(a, b):
    return wqsym_thirds(a, b)[1]


def wqsym_right(a, b):
    return wqsym_thirds(a, b)[2]


def _packed_fibers(sigma):
    """All packed words u with std(u) = sigma.

    Merging the values j and j+1 of sigma is allowed exactly when j+1 occurs
    to the right of j (left-to-right tie breaking).
    """
    sigma = tuple(sigma)
    n = len(sigma)
    if n == 0:
        yield ()
        return
    pos = {v: i for i, v in enumerate(sigma)}
    mergeable = [j for j in range(1, n) if pos[j + 1] > pos[j]]
    for r in range(len(mergeable) + 1):
        for merges in itertools.combinations(mergeable, r):
            label = {}
            nxt = 0
            for v in range(1, n + 1):
                if v > 1 and (v - 1) in merges:
                    label[v] = label[v - 1]
                else:
                    nxt += 1
                    label[v] = nxt
            yield tuple(label[v] for v in sigma)


def embed_fqsym_wqsym(a: LinComb) -> LinComb:
    """G_sigma -> sum of M_u over packed words with std(u) = sigma."""
    out = LinComb()
    for sigma, c in a:
        out = out + LinComb((u, c) for u in _packed_fibers(sigma))
    return out


# -- morphisms ----------------------------------------------------------------


def morphism_istar(a: LinComb) -> LinComb:
    """F_a -> F_std(a): parking words onto permutations (F coordinates)."""
    return a.map_keys(standardize)


def istar_on_cqsym(a: LinComb) -> SymElem:
    """P^pi -> S^t(pi) with t the packed evaluation."""
    out = SymElem.zero("S")
    for pi, c in a:
        out = out + SymElem.s(packed_evaluation(pi), c)
    return out


def istar_on_sqsym(a: LinComb) -> SymElem:
    """P_q -> R_I with I the shape (segment lengths) of the quasi-ribbon q."""
    out = SymElem.zero("R")
    for q, c in a:
        out = out + SymElem.r(q.shape(), c)
    return out


def morphism_psi(a: LinComb) -> SymElem:
    """F_a -> S^t(a) / n!: the algebra morphism onto symmetric functions."""
    out = SymElem.zero("S")
    for w, c in a:
        out = out + SymElem.s(packed_evaluation(w),
                              Fraction(c) / factorial(len(w)))
    return out


# -- axiom suites ---------------------------------------------------------------


def _keys_by_total(family, max_total: int, arity: int):
    """Tuples of basis keys with positive sizes summing to at most max_total."""
    sizes = range(1, max_total)
    for split in itertools.product(sizes, repeat=arity):
        if sum(split) > max_total:
            continue
        pools = [family(s) for s in split]
        yield from itertools.product(*pools)


def duplicial_axioms_cqsym(max_total: int = 6) -> bool:
    """Both associativities and (x>y)<z = x>(y<z) on the multiplicative basis."""
    from .combinat import ndpfs
    for a, b, c in _keys_by_total(ndpfs, max_total, 3):
        if shifted_concat_max(shifted_concat_max(a, b), c) != \
                shifted_concat_max(a, shifted_concat_max(b, c)):
            return False
        if shifted_concat_len(shifted_concat_len(a, b), c) != \
                shifted_concat_len(a, shifted_concat_len(b, c)):
            return False
        if shifted_concat_max(shifted_concat_len(a, b), c) != \
                shifted_concat_len(a, shifted_concat_max(b, c)):
            return False
    return True


def cross_relation_fails_cqsym() -> bool:
    """The absent relation (x<y)>z = x<(y>z) breaks on the single generator."""
    one = (1,)
    lhs = shifted_concat_len(shifted_concat_max(one, one), one)
    rhs = shifted_concat_max(one, shifted_concat_len(one, one))
    return lhs == (1, 1, 3) and rhs == (1, 1, 2) and lhs != rhs


def duplicial_axioms_pqsym(max_total: int = 5) -> bool:
    """The normalized duplicial pair on parking words, on basis triples."""
    from .combinat import parking_functions
    for a, b, c in _keys_by_total(parking_functions, max_total, 3):
        fa, fb, fc = LinComb.term(a), LinComb.term(b), LinComb.term(c)
        if pqsym_dup_prec(pqsym_dup_prec(fa, fb), fc) != \
                pqsym_dup_prec(fa, pqsym_dup_prec(fb, fc)):
            return False
        if pqsym_product(pqsym_product(fa, fb), fc) != \
                pqsym_product(fa, pqsym_product(fb, fc)):
            return False
        if pqsym_dup_prec(pqsym_product(fa, fb), fc) != \
                pqsym_product(fa, pqsym_dup_prec(fb, fc)):
            return False
    return True


def triduplicial_axioms(max_total: int = 6) -> bool:
    """Three associativities and the four mixed relations on quasi-ribbons."""
    from .combinat import quasi_ribbons
    pairs = [(qr_succ, qr_prec), (qr_mid, qr_prec),
             (qr_succ, qr_mid), (qr_mid, qr_succ)]
    for a, b, c in _keys_by_total(quasi_ribbons, max_total, 3):
        for op in (qr_prec, qr_succ, qr_mid):
            if op(op(a, b), c) != op(a, op(b, c)):
                return False
        for f, g in pairs:
            if g(f(a, b), c) != f(a, g(b, c)):
                return False
    return True


def dendriform_axioms_fqsym(max_total: int = 6) -> bool:
    """(x<y)<z = x<(yz), (x>y)<z = x>(y<z), (xy)>z = x>(y>z), and the
    splitting of the convolution product into the two halves."""
    from .combinat import permutations
    for a, b, c in _keys_by_total(permutations, max_total, 3):
        ga, gb, gc = LinComb.term(a), LinComb.term(b), LinComb.term(c)
        if fqsym_left(fqsym_left(ga, gb), gc) != \
                fqsym_left(ga, fqsym_product(gb, gc)):
            return False
        if fqsym_left(fqsym_right(ga, gb), gc) != \
                fqsym_right(ga, fqsym_left(gb, gc)):
            return False
        if fqsym_right(fqsym_product(ga, gb), gc) != \
                fqsym_right(ga, fqsym_right(gb, gc)):
            return False
    for a, b in _keys_by_total(permutations, min(max_total, 5), 2):
        ga, gb = LinComb.term(a), LinComb.term(b)
        if fqsym_product(ga, gb) != fqsym_left(ga, gb) + fqsym_right(ga, gb):
            return False
    return True


def tridendriform_axioms_wqsym(max_total: int = 5) -> bool:
    """The seven relations of the three-piece splitting on packed words."""
    from .combinat import packed_words
    for a, b, c in _keys_by_total(packed_words, max_total, 3):
        ma, mb, mc = LinComb.term(a), LinComb.term(b), LinComb.term(c)
        checks = (
            wqsym_left(wqsym_left(ma, mb), mc)
            == wqsym_left(ma, wqsym_product(mb, mc)),
            wqsym_left(wqsym_right(ma, mb), mc)
            == wqsym_right(ma, wqsym_left(mb, mc)),
            wqsym_right(wqsym_product(ma, mb), mc)
            == wqsym_right(ma, wqsym_right(mb, mc)),
            wqsym_mid(wqsym_right(ma, mb), mc)
            == wqsym_right(ma, wqsym_mid(mb, mc)),
            wqsym_mid(wqsym_left(ma, mb), mc)
            == wqsym_mid(ma, wqsym_right(mb, mc)),
            wqsym_left(wqsym_mid(ma, mb), mc)
            == wqsym_mid(ma, wqsym_left(mb, mc)),
            wqsym_mid(wqsym_mid(ma, mb), mc)
            == wqsym_mid(ma, wqsym_mid(mb, mc)),
        )
        if not all(checks):
            return False
    for a, b in _keys_by_total(packed_words, min(max_total, 4), 2):
        ma, mb = LinComb.term(a), LinComb.term(b)
        left, mid, right = wqsym_thirds(ma, mb)
        if wqsym_product(ma, mb) != left + mid + right:
            return False
    return True


def _pair_key_op(op):
    def apply(x_key, y_key):
        return op(LinComb.term(x_key), LinComb.term(y_key))
    return apply


def bialgebra_axiom_check(max_total: int = 5) -> bool:
    """delta(x*y) = x(x)y + sum x1 (x) (x2*y) + sum (x*y1) (x) y2
    for * in {<, >} on pairs of basis keys of total degree <= max_total."""
    from .combinat import ndpfs
    for op in (cqsym_prec, cqsym_succ):
        key_op = _pair_key_op(op)
        for a, b in _keys_by_total(ndpfs, max_total, 2):
            x, y = LinComb.term(a), LinComb.term(b)
            lhs = dup_coproduct(op(x, y))
            rhs = LinComb.term((a, b))
            for (x1, x2), c in dup_coproduct(x):
                rhs = rhs + LinComb(
                    ((x1, k), c * c2) for k, c2 in key_op(x2, b))
            for (y1, y2), c in dup_coproduct(y):
                rhs = rhs + LinComb(
                    ((k, y2), c * c2) for k, c2 in key_op(a, y1))
            if lhs != rhs:
                return False
    return True


def coassociativity_check(max_degree: int = 5) -> bool:
    """(delta (x) id) delta = (id (x) delta) delta, flattened to triples."""
    from .combinat import ndpfs
    for n in range(1, max_degree + 1):
        for pi in ndpfs(n):
            delta = dup_coproduct(LinComb.term(pi))
            lhs = LinComb()
            for (k1, k2), c in delta:
                lhs = lhs + LinComb(
                    ((a, b, k2), c * c2)
                    for (a, b), c2 in dup_coproduct(LinComb.term(k1)))
            rhs = LinComb()
            for (k1, k2), c in delta:
                rhs = rhs + LinComb(
                    ((k1, a, b), c * c2)
                    for (a, b), c2 in dup_coproduct(LinComb.term(k2)))
            if lhs != rhs:
                return False
    return True


# -- serialization -------------------------------------------------------------


def _key_text(key) -> str:
    if isinstance(key, QuasiRibbon):
        return str(key)
    return word_to_text(key)


def element_to_json(a: LinComb, basis: str) -> dict:
    terms = sorted(((_key_text(k), str(c)) for k, c in a), key=lambda kv: kv[0])
    return {"basis": basis,
            "terms": [{"key": k, "coeff": c} for k, c in terms]}


def element_to_json_str(a: LinComb, basis: str) -> str:
    return json.dumps(element_to_json(a, basis), sort_keys=True)
