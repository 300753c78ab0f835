"""Symbolic Toeplitz ring over a finite coefficient ring: the free unital
ring on alpha, alpha* subject to alpha.alpha* = 1, in the normal-form basis
{alpha*^p alpha^q}, plus its band-matrix representation."""

import random
from dataclasses import dataclass

from . import cone
from .errors import IdentityFailed, RingMismatch


@dataclass(frozen=True)
class ToeplitzElement:
    ring: object
    support: tuple                # sorted ((p, q), coeff), coeff nonzero

    def coeff(self, p, q):
        for (pp, qq), c in self.support:
            if (pp, qq) == (p, q):
                return c
        return self.ring.zero

    def __str__(self):
        if not self.support:
            return "0"
        def term(p, q, c):
            s = "" if c == self.ring.one else f"{c}."
            s += "s" * p + "a" * q
            return s or "1"
        return " + ".join(term(p, q, c) for (p, q), c in self.support)


def _make(ring, coeffs):
    support = tuple(sorted((pq, c) for pq, c in coeffs.items()
                           if c != ring.zero))
    return ToeplitzElement(ring, support)


def t_zero(ring):
    return _make(ring, {})


def t_mono(ring, c, p, q):
    """c . alpha*^p alpha^q."""
    return _make(ring, {(p, q): c})


def t_one(ring):
    return t_mono(ring, ring.one, 0, 0)


def t_alpha(ring):
    return t_mono(ring, ring.one, 0, 1)


def t_alpha_star(ring):
    return t_mono(ring, ring.one, 1, 0)


def t_add(x, y):
    _same(x, y)
    out = dict(x.support)
    for pq, c in y.support:
        out[pq] = x.ring.add(out.get(pq, x.ring.zero), c)
    return _make(x.ring, out)


def t_neg(x):
    return _make(x.ring, {pq: x.ring.neg(c) for pq, c in x.support})


def t_sub(x, y):
    return t_add(x, t_neg(y))


def t_scalar(c, x):
    return _make(x.ring, {pq: x.ring.mul(c, cc) for pq, cc in x.support})


def t_mul(x, y):
    """(a*^p a^q)(a*^r a^s) = a*^{p+max(r-q,0)} a^{s+max(q-r,0)}."""
    _same(x, y)
    ring = x.ring
    out = {}
    for (p, q), c in x.support:
        for (r, s), d in y.support:
            key = (p + max(r - q, 0), s + max(q - r, 0))
            out[key] = ring.add(out.get(key, ring.zero), ring.mul(c, d))
    return _make(ring, out)


def _same(x, y):
    if x.ring is not y.ring:
        raise RingMismatch(x.ring.name, y.ring.name)


def e_unit(ring, p, q):
    """The matrix unit e_{p,q} = a*^{p-1} a^{q-1} - a*^p a^q (1-based)."""
    return t_sub(t_mono(ring, ring.one, p - 1, q - 1),
                 t_mono(ring, ring.one, p, q))


# ---------------------------------------------------------------------------
# word rewriting (confluence evidence for the normal form)


def reduce_word(word, rng=None):
    """Reduce a word over {'a': alpha, 's': alpha*} by the rule 'as' -> ''
    (alpha.alpha* = 1), applying reductions at randomly chosen positions."""
    rng = rng or random.Random(0)
    w = list(word)
    while True:
        sites = [i for i in range(len(w) - 1) if w[i] == "a" and w[i + 1] == "s"]
        if not sites:
            return "".join(w)
        i = rng.choice(sites)
        del w[i:i + 2]


def word_element(ring, word):
    acc = t_one(ring)
    for ch in word:
        acc = t_mul(acc, t_alpha(ring) if ch == "a" else t_alpha_star(ring))
    return acc


# ---------------------------------------------------------------------------
# band-matrix representation


def embed_toeplitz(t):
    """alpha -> sum e_{i,i+1}, alpha* -> sum e_{i+1,i}; a*^p a^q maps to the
    band sum_i e_{i+p, i+q}."""
    ring = t.ring

    def entry(r, c):
        acc = ring.zero
        for (p, q), coeff in t.support:
            if r - p == c - q and r - p >= 1:
                acc = ring.add(acc, coeff)
        return acc

    def row_support(r):
        return tuple(r - p + q for (p, q), _ in t.support if r - p >= 1)

    def col_support(c):
        return tuple(c - q + p for (p, q), _ in t.support if c - q >= 1)

    nbands = len(t.support)
    vals = frozenset({ring.zero}) | {c for _, c in t.support}
    acc = frozenset({ring.zero})
    for _ in range(nbands):
        acc = acc | frozenset(ring.add(v, x) for v in acc for x in vals)
    return cone.LazyMatrix(t.ring, entry, row_support, col_support,
                           value_set=acc, row_count=nbands, col_count=nbands,
                           description=f"toeplitz({t})")


def matrix_unit_law(ring, bound=6):
    """e_{p,q} e_{r,s} = delta_{q,r} e_{p,s} for all p, q, r, s <= bound."""
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            left = e_unit(ring, p, q)
            for r in range(1, bound + 1):
                for s in range(1, bound + 1):
                    got = t_mul(left, e_unit(ring, r, s))
                    want = e_unit(ring, p, s) if q == r else t_zero(ring)
                    if got != want:
                        raise IdentityFailed(
                            "matrix unit law", (p, q, r, s, str(got)))
    return True


# ---------------------------------------------------------------------------
# the Q involution


def _m2_mul(x, y):
    return tuple(tuple(
        t_add(t_mul(x[i][0], y[0][j]), t_mul(x[i][1], y[1][j]))
        for j in range(2)) for i in range(2))


def q_involution_check(ring):
    """Q = [[1 - a*a, a*], [a, 0]] squares to 1 and conjugates
    diag(j(a), j_inf(a)) to diag(j_inf(a), 0), where j(a) = a.e_{1,1} and
    j_inf(a) = a.1."""
    one, zero = t_one(ring), t_zero(ring)
    q = ((t_sub(one, t_mul(t_alpha_star(ring), t_alpha(ring))),
          t_alpha_star(ring)),
         (t_alpha(ring), zero))
    ident = ((one, zero), (zero, one))
    if _m2_mul(q, q) != ident:
        raise IdentityFailed("Q^2 = 1", q)
    for a in range(ring.order):
        j_a = t_scalar(a, e_unit(ring, 1, 1))
        j_inf = t_mono(ring, a, 0, 0)
        lhs = _m2_mul(_m2_mul(q, ((j_a, zero), (zero, j_inf))), q)
        rhs = ((j_inf, zero), (zero, zero))
        if lhs != rhs:
            raise IdentityFailed("Q.diag(j(a), j_inf(a)).Q = diag(j_inf(a), 0)",
                                 (a,))
    return {"q_squared": True, "conjugation": True, "ring": ring.name}


def _random_element(ring, rng, terms=3, bound=4):
    acc = t_zero(ring)
    for _ in range(terms):
        acc = t_add(acc, t_mono(ring, rng.randrange(ring.order),
                                rng.randrange(bound), rng.randrange(bound)))
    return acc


def verify_toeplitz(ring, bound=6, window=16, pairs=100, words=50, seed=0):
    """The matrix-unit law, the Q-involution identities, agreement of the
    band embedding with matrix units and with multiplication on windows,
    and confluence of the normal-form rewriting."""
    results = []
    matrix_unit_law(ring, bound)
    results.append({"identity": f"matrix unit law (indices <= {bound})",
                    "pass": True})
    q = q_involution_check(ring)
    results.append({"identity": "Q^2 = 1 and Q-conjugation", "pass": True})
    assert q["q_squared"] and q["conjugation"]
    for p in range(1, 5):
        for qq in range(1, 5):
            m = embed_toeplitz(e_unit(ring, p, qq))
            unit = cone._e_unit_matrix(ring, p, qq)
            witness = cone.windows_equal(m, unit, window)
            if witness is not None:
                raise IdentityFailed("embed(e_pq) = matrix unit", witness)
    results.append({"identity": "embed(e_pq) = matrix unit on windows",
                    "pass": True})
    rng = random.Random(int(ring.digest(), 16) + seed)
    for _ in range(pairs):
        x = _random_element(ring, rng)
        y = _random_element(ring, rng)
        lhs = embed_toeplitz(t_mul(x, y))
        rhs = cone.mul(embed_toeplitz(x), embed_toeplitz(y))
        # band indices move by at most `bound`, so the certified sub-window
        # of the product stays exact well inside `window`
        witness = cone.windows_equal(lhs, rhs, window)
        if witness is not None:
            raise IdentityFailed("embed multiplicative", witness)
    results.append({"identity": f"embed multiplicative ({pairs} pairs)",
                    "pass": True})
    for _ in range(words):
        w = "".join(rng.choice("as") for _ in range(rng.randrange(11)))
        r1 = reduce_word(w, random.Random(rng.randrange(10 ** 6)))
        r2 = reduce_word(w, random.Random(rng.randrange(10 ** 6)))
        if r1 != r2:
            raise IdentityFailed("rewriting confluent", w)
        if ring.one is not None and word_element(ring, w) != \
                word_element(ring, r1):
            raise IdentityFailed("rewriting preserves the element", w)
    results.append({"identity": f"rewriting confluent ({words} words)",
                    "pass": True})
    return results
