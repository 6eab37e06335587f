"""Composition-series counting over prime fields and the flag-based
polynomial attached to a module.

A flag of type (i_1, ..., i_k) is a chain of submodules whose successive
quotients are the simples S_{i_1}, ..., S_{i_k} read from the top: the first
letter names the quotient by the largest proper member. Counting such flags
point by point over several prime fields pins down the count as a polynomial
in the field size; its value at 1 is the Euler characteristic that enters the
coefficients of the phi polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count as _ints
from math import factorial

from .fields import QQ, PrimeField
from .linalg import Matrix
from .quivers import DynkinType
from .reps import Representation, dq_of

FLAG_DIM_CAP = 8


def w0_pattern(dt):
    """Reduced-word letter pattern used for the phi polynomial."""
    dt = dt if isinstance(dt, DynkinType) else DynkinType.parse(dt)
    word = []
    for v in range(1, dt.rank + 1):
        word.extend(range(v, 0, -1))
    return tuple(word)


def reduce_mod_p(rep, p):
    """The same matrices over GF(p); raises ZeroDivisionError when a
    denominator vanishes."""
    f = PrimeField(p)
    mats = {}
    for name, m in rep.mats.items():
        mats[name] = Matrix(f, [[f.of(m[i, j]) for j in range(m.ncols)]
                                for i in range(m.nrows)], ncols=m.ncols)
    return Representation(rep.dt, rep.dims, mats, f)


def _rref_rows(rows, width, p):
    """In-place style reduced row echelon form mod p; returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(width):
        pr = None
        for i in range(rank, len(rows)):
            if rows[i][col] % p:
                pr = i
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p
                           for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _functional_basis(wrows, pivots, width, p):
    """Basis of the functionals vanishing on the row span (kernel of the
    rref matrix, as row vectors)."""
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * width
        vec[f] = 1
        for i, c in enumerate(pivots):
            vec[c] = (-wrows[i][f]) % p
        basis.append(vec)
    return basis


def _count(dims, mats, inc, out, word, k, p):
    if k == len(word):
        return 1
    v = word[k] - 1
    d = dims[v]
    if d == 0:
        return 0
    wvecs = []
    for name in inc[v]:
        m = mats[name]
        if m:
            for j in range(len(m[0])):
                wvecs.append([m[i][j] for i in range(d)])
    wrows, pivots = _rref_rows(wvecs, d, p)
    funs = _functional_basis(wrows, pivots, d, p)
    m = len(funs)
    if m == 0:
        return 0
    total = 0
    for lead in range(m):
        tail = m - lead - 1
        combo = [0] * tail
        while True:
            phi = list(funs[lead])
            for t, c in enumerate(combo):
                if c:
                    row = funs[lead + 1 + t]
                    phi = [(x + c * y) % p for x, y in zip(phi, row)]
            piv = next(i for i, x in enumerate(phi) if x % p)
            inv = pow(phi[piv], p - 2, p)
            phi = [x * inv % p for x in phi]
            keep = [i for i in range(d) if i != piv]
            dims2 = list(dims)
            dims2[v] = d - 1
            mats2 = dict(mats)
            for name in inc[v]:
                m0 = mats2[name]
                mats2[name] = [m0[i] for i in keep]
            for name in out[v]:
                m0 = mats2[name]
                mats2[name] = [
                    [(row[j] - phi[j] * row[piv]) % p for j in keep]
                    for row in m0]
            total += _count(dims2, mats2, inc, out, word, k + 1, p)
            t = tail - 1
            while t >= 0 and combo[t] == p - 1:
                combo[t] = 0
                t -= 1
            if t < 0:
                break
            combo[t] += 1
    return total


def count_flags_fq(rep, word):
    """Number of composition-series flags of the given top-first type in a
    representation over a prime field."""
    if not isinstance(rep.field, PrimeField):
        raise TypeError("flag counting needs a representation over GF(p)")
    n = rep.dt.rank
    word = tuple(word)
    content = [0] * n
    for i in word:
        if not 1 <= i <= n:
            raise ValueError(f"letter {i} is not a vertex of {rep.dt}")
        content[i - 1] += 1
    if content != list(rep.dims):
        return 0
    p = rep.field.p
    dq = dq_of(rep.dt)
    inc = {v: [] for v in range(n)}
    out = {v: [] for v in range(n)}
    for a in dq.arrows:
        inc[a.tgt - 1].append(a.name)
        out[a.src - 1].append(a.name)
    mats = {}
    for a in dq.arrows:
        m = rep.mat(a.name)
        mats[a.name] = [[m[i, j] % p for j in range(m.ncols)]
                        for i in range(m.nrows)]
    return _count(list(rep.dims), mats, inc, out, word, 0, p)


def _primes():
    found = []
    for c in _ints(2):
        if all(c % q for q in found):
            found.append(c)
            yield c


def euler_char(rep, word):
    """Value at q=1 of the polynomial counting flags of the given type over
    GF(q); 0 for words whose content does not match the dimension vector."""
    n = rep.dt.rank
    word = tuple(word)
    content = [0] * n
    for i in word:
        if not 1 <= i <= n:
            raise ValueError(f"letter {i} is not a vertex of {rep.dt}")
        content[i - 1] += 1
    if content != list(rep.dims):
        return 0
    degree = sum(d * (d - 1) // 2 for d in rep.dims)
    points = []
    gen = _primes()
    while len(points) < degree + 2:
        p = next(gen)
        try:
            mp = reduce_mod_p(rep, p)
        except ZeroDivisionError:
            continue
        points.append((p, count_flags_fq(mp, word)))
    fit, check = points[: degree + 1], points[degree + 1]

    def evaluate(q):
        total = Fraction(0)
        for i, (xi, yi) in enumerate(fit):
            term = Fraction(yi)
            for j, (xj, _) in enumerate(fit):
                if j != i:
                    term *= Fraction(q - xj, xi - xj)
            total += term
        return total

    if evaluate(check[0]) != check[1]:
        raise ValueError("non-polynomial count")
    value = evaluate(1)
    if value.denominator != 1:
        raise ValueError("non-polynomial count")
    return int(value)


class PhiPoly:
    """Polynomial in t_1..t_k with exact rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(e)] = c

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return PhiPoly(self.nvars, out)

    def __sub__(self, other):
        return self + PhiPoly(other.nvars,
                              {e: -c for e, c in other.terms.items()})

    def __mul__(self, other):
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return PhiPoly(self.nvars, out)

    def __eq__(self, other):
        return (isinstance(other, PhiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items(), reverse=True):
            body = "*".join(f"t{i + 1}" if x == 1 else f"t{i + 1}^{x}"
                            for i, x in enumerate(e) if x)
            cs = str(c.numerator) if c.denominator == 1 else str(c)
            if not body:
                bits.append(cs)
            elif c == 1:
                bits.append(body)
            elif c == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{cs}*{body}")
        s = bits[0]
        for b in bits[1:]:
            s += f" - {b[1:]}" if b.startswith("-") else f" + {b}"
        return s

    def __repr__(self):
        return f"PhiPoly({self})"


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def phi_evaluate(rep, pattern=None):
    """The flag polynomial of a module: one monomial t^a per composition a
    supported on the pattern, with coefficient euler_char / prod(a_j!)."""
    if rep.field != QQ:
        raise TypeError("phi is computed from an exact representation")
    if rep.total_dim > FLAG_DIM_CAP:
        raise ValueError(
            f"module of dimension {rep.total_dim} exceeds the flag-counting "
            f"cap {FLAG_DIM_CAP}")
    n = rep.dt.rank
    if pattern is None:
        pattern = w0_pattern(rep.dt)
    pattern = tuple(pattern)
    if any(not 1 <= i <= n for i in pattern):
        raise ValueError(f"pattern letters must lie in 1..{n}")
    k = len(pattern)
    slots = {v: [j for j, i in enumerate(pattern) if i == v]
             for v in range(1, n + 1)}
    for v in range(1, n + 1):
        if rep.dims[v - 1] and not slots[v]:
            return PhiPoly(k)
    assignments = [()]
    for v in range(1, n + 1):
        ways = list(_compositions(rep.dims[v - 1], len(slots[v])))
        assignments = [a + (w,) for a in assignments for w in ways]
    result = PhiPoly(k)
    for assignment in assignments:
        a = [0] * k
        for v in range(1, n + 1):
            for j, m in zip(slots[v], assignment[v - 1]):
                a[j] = m
        word = []
        for j in range(k):
            word.extend([pattern[j]] * a[j])
        chi = euler_char(rep, word)
        if not chi:
            continue
        coeff = Fraction(chi)
        for m in a:
            coeff /= factorial(m)
        result = result + PhiPoly(k, {tuple(a): coeff})
    return result
