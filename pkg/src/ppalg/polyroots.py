"""Exact root extraction for polynomials that split over the rationals.

Used when decomposing modules: the minimal polynomial of a central element
of a split semisimple endomorphism quotient has distinct, real, rational
roots, so Sturm bisection plus simplest-rational reconstruction finds them
all exactly. No floating point: intervals are Fractions throughout.

Polynomials are coefficient lists in ascending degree order.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor


def poly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p):
    return [c * i for i, c in enumerate(p)][1:]


def poly_divmod(a, b):
    a = [Fraction(c) for c in a]
    b = poly_trim([Fraction(c) for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a[:]
    while len(poly_trim(r)) >= len(b):
        r = poly_trim(r)
        shift = len(r) - len(b)
        coeff = r[-1] / b[-1]
        q[shift] = coeff
        for i, bc in enumerate(b):
            r[shift + i] -= coeff * bc
    return poly_trim(q), poly_trim(r)


def poly_gcd(a, b):
    a, b = poly_trim(list(a)), poly_trim(list(b))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def squarefree_part(p):
    p = poly_trim([Fraction(c) for c in p])
    if len(p) <= 1:
        return p
    g = poly_gcd(p, poly_derivative(p))
    if len(g) <= 1:
        return [c / p[-1] for c in p]
    q, r = poly_divmod(p, g)
    assert not r
    return [c / q[-1] for c in q]


def _sturm_chain(p):
    chain = [p, poly_trim(poly_derivative(p))]
    while chain[-1]:
        _, r = poly_divmod(chain[-2], chain[-1])
        r = poly_trim([-c for c in r])
        if not r:
            break
        chain.append(r)
    return [c for c in chain if c]


def _variations(chain, x):
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    count = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            count += 1
    return count


def simplest_between(lo, hi):
    """The rational with smallest denominator in the closed interval."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    n = ceil(lo)
    if n <= hi:
        return Fraction(n)
    n = floor(lo)
    return n + 1 / simplest_between(1 / (hi - n), 1 / (lo - n))


def rational_roots_split(p, max_refine=400):
    """All roots of p, assuming p splits into linear factors over Q.

    Raises ValueError if the assumption is detectably false (complex roots)
    or an irrational root resists reconstruction.
    """
    q = squarefree_part(p)
    deg = len(q) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [-q[0] / q[1]]
    chain = _sturm_chain(q)
    bound = 1 + max(abs(c / q[-1]) for c in q[:-1])
    lo, hi = -bound, bound
    total = _variations(chain, lo) - _variations(chain, hi)
    if total != deg:
        raise ValueError("polynomial has non-real roots; cannot split over Q")
    roots = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            for _ in range(max_refine):
                cand = simplest_between(a, b)
                if poly_eval(q, cand) == 0:
                    roots.append(cand)
                    break
                mid = (a + b) / 2
                if poly_eval(q, mid) == 0:
                    roots.append(mid)
                    break
                left = _variations(chain, a) - _variations(chain, mid)
                if left == 1:
                    b = mid
                else:
                    a = mid
            else:
                raise ValueError("root did not reconstruct as a rational")
            continue
        mid = (a + b) / 2
        while poly_eval(q, mid) == 0:
            # nudge the split point off a root
            mid = (a + mid) / 2
        left = _variations(chain, a) - _variations(chain, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, k - left))
    roots.sort()
    return roots
