"""Matrix mutation, Laurent-polynomial seeds, and the exchange graph of
basic complete rigid modules.

Cluster variables are ratios of sparse integer polynomials in x_1..x_r
(positional names following the slot order of the initial vertex). The
constructor reduces every ratio until the denominator is a single monomial
and raises if that is impossible, so the Laurent property is enforced
structurally rather than assumed. Exchange-graph vertices store seeds aligned
to the canonical slot order of their module; propagating a seed across a
non-tree edge must reproduce the stored one exactly, which is the
well-definedness check of the module-to-seed correspondence.
"""

from __future__ import annotations

from collections import deque
from math import gcd

from .approx import canonical_slots, initial_rigid, mutate_slots
from .catalog import ModuleSum
from .endo import exchange_data


def matrix_mutate(B, k):
    """One mutation of an integer matrix in direction k (1-based column)."""
    nrows, ncols = len(B), len(B[0]) if B else 0
    if not 1 <= k <= min(nrows, ncols):
        raise ValueError(f"mutation index {k} out of range")
    a = k - 1
    out = []
    for i in range(nrows):
        row = []
        for j in range(ncols):
            if i == a or j == a:
                row.append(-B[i][j])
            else:
                row.append(B[i][j] + (abs(B[i][a]) * B[a][j]
                                      + B[i][a] * abs(B[a][j])) // 2)
        out.append(row)
    return out


# -- sparse integer polynomials: dict from exponent tuple to coefficient ----


def _padd(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _pmul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _pneg(a):
    return {e: -c for e, c in a.items()}


def _divexact(a, b):
    """Quotient a/b in the integer polynomial ring, or None. Cancels leading
    terms in lex order; exact divisibility keeps every step integral."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = {}
    r = dict(a)
    lb = max(b)
    cb = b[lb]
    while r:
        la = max(r)
        ca = r[la]
        e = tuple(x - y for x, y in zip(la, lb))
        if any(x < 0 for x in e) or ca % cb:
            return None
        c = ca // cb
        q[e] = c
        for eb, vb in b.items():
            key = tuple(x + y for x, y in zip(e, eb))
            v = r.get(key, 0) - c * vb
            if v:
                r[key] = v
            else:
                r.pop(key, None)
    return q


def _content(p):
    g = 0
    for c in p.values():
        g = gcd(g, abs(c))
    return g or 1


def _min_exponents(p):
    it = iter(p)
    mins = list(next(it))
    for e in it:
        mins = [min(m, x) for m, x in zip(mins, e)]
    return mins


class LaurentExpr:
    """Reduced ratio of integer polynomials whose denominator is a positive
    monomial."""

    __slots__ = ("nvars", "num", "den")

    def __init__(self, nvars, num, den=None):
        self.nvars = nvars
        if den is None:
            den = {(0,) * nvars: 1}
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = {}
            self.den = {(0,) * nvars: 1}
            return
        if len(den) > 1:
            # split off the monomial content of the denominator, then the
            # remaining polynomial factor must divide the numerator
            mins = _min_exponents(den)
            cont = _content(den)
            poly = {tuple(x - m for x, m in zip(e, mins)): c // cont
                    for e, c in den.items()}
            q = _divexact(num, poly)
            if q is None:
                raise ValueError("does not reduce to a Laurent polynomial")
            num = q
            den = {tuple(mins): cont}
        (de, dc), = den.items()
        mins = [min(m, x) for m, x in zip(_min_exponents(num), de)]
        num = {tuple(x - m for x, m in zip(e, mins)): c
               for e, c in num.items()}
        de = tuple(x - m for x, m in zip(de, mins))
        g = gcd(_content(num), abs(dc))
        if dc < 0:
            g = -g
        self.num = {e: c // g for e, c in num.items()}
        self.den = {de: dc // g}

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c} if c else {})

    def __add__(self, other):
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return LaurentExpr(self.nvars, num, _pmul(self.den, other.den))

    def __sub__(self, other):
        return self + LaurentExpr(other.nvars, _pneg(other.num), other.den)

    def __mul__(self, other):
        return LaurentExpr(self.nvars, _pmul(self.num, other.num),
                           _pmul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by the zero expression")
        return LaurentExpr(self.nvars, _pmul(self.num, other.den),
                           _pmul(self.den, other.num))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = LaurentExpr.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, LaurentExpr) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((frozenset(self.num.items()),
                     frozenset(self.den.items())))

    @property
    def den_is_monomial(self):
        return len(self.den) == 1

    def degree(self):
        if not self.num:
            return 0
        de = next(iter(self.den))
        return max(sum(e) for e in self.num) - sum(de)

    def _mono_str(self, e, c, with_one):
        parts = [f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}"
                 for i, p in enumerate(e) if p]
        if not parts:
            return str(c)
        body = "*".join(parts)
        if abs(c) == 1 and not with_one:
            return body if c > 0 else f"-{body}"
        return f"{c}*{body}"

    def __str__(self):
        if not self.num:
            return "0"
        terms = sorted(self.num.items(), key=lambda t: t[0], reverse=True)
        s = self._mono_str(*terms[0], with_one=False)
        for e, c in terms[1:]:
            if c < 0:
                s += " - " + self._mono_str(e, -c, with_one=False)
            else:
                s += " + " + self._mono_str(e, c, with_one=False)
        (de, dc), = self.den.items()
        if dc == 1 and not any(de):
            return s
        ds = self._mono_str(de, dc, with_one=dc != 1)
        if "*" in ds or "^" in ds:
            ds = f"({ds})"
        if len(self.num) > 1:
            return f"({s})/{ds}"
        return f"{s}/{ds}"

    def __repr__(self):
        return f"LaurentExpr({self})"


class Seed:
    """Cluster variables plus the exchange matrix, aligned to one slot
    order; the last n (projective) positions are frozen."""

    def __init__(self, variables, matrix):
        self.variables = list(variables)
        self.matrix = [list(row) for row in matrix]

    @classmethod
    def initial(cls, r, matrix):
        return cls([LaurentExpr.variable(r, i) for i in range(r)], matrix)

    def permuted(self, perm):
        r = len(self.variables)
        m = len(self.matrix[0]) if self.matrix else 0
        vs = [None] * r
        for p, v in enumerate(self.variables):
            vs[perm[p]] = v
        mat = [[0] * m for _ in range(r)]
        for i in range(r):
            for j in range(m):
                mat[perm[i]][perm[j]] = self.matrix[i][j]
        return Seed(vs, mat)

    def __eq__(self, other):
        return (isinstance(other, Seed) and self.variables == other.variables
                and self.matrix == other.matrix)

    def to_json(self):
        return {"variables": [str(v) for v in self.variables],
                "matrix": self.matrix}


def seed_mutate(s, k):
    """Exchange relation at position k plus matrix mutation."""
    B = s.matrix
    ncols = len(B[0]) if B else 0
    if not 1 <= k <= ncols:
        raise ValueError(f"position {k} is not exchangeable")
    r = len(s.variables)
    nv = s.variables[0].nvars
    pos = LaurentExpr.const(nv, 1)
    neg = LaurentExpr.const(nv, 1)
    for i in range(r):
        b = B[i][k - 1]
        if b > 0:
            pos = pos * s.variables[i] ** b
        elif b < 0:
            neg = neg * s.variables[i] ** (-b)
    new = (pos + neg) / s.variables[k - 1]
    variables = list(s.variables)
    variables[k - 1] = new
    return Seed(variables, matrix_mutate(B, k))


# -- the exchange graph -------------------------------------------------------


class GraphVertex:
    __slots__ = ("sum", "order", "seed", "data")

    def __init__(self, sum, order, seed, data):
        self.sum = sum
        self.order = order
        self.seed = seed
        self.data = data


class ExchangeGraph:
    def __init__(self, catalog, vertices, edges, payload):
        self.catalog = catalog
        self.vertices = vertices
        self.edges = edges      # directed (vi, k, vj), both orientations
        self.payload = payload
        self._adj = {}
        for vi, k, vj in edges:
            self._adj.setdefault(vi, []).append((k, vj))

    def __len__(self):
        return len(self.vertices)

    def neighbors(self, vi):
        return sorted(self._adj.get(vi, []))

    @property
    def num_edges(self):
        return len(self.edges) // 2

    def vertex_of(self, module_sum):
        for i, v in enumerate(self.vertices):
            if v.sum == module_sum:
                return i
        raise LookupError("module sum not in the exchange graph")

    def to_json(self, with_seeds=True):
        verts = []
        for v in self.vertices:
            d = {"summands": v.sum.to_json()["summands"],
                 "order": list(v.order)}
            if with_seeds and v.seed is not None:
                d["seed"] = v.seed.to_json()
                d["b_cols"] = v.data.b_cols
            verts.append(d)
        return {"type": str(self.catalog.dt),
                "vertices": verts,
                "edges": [list(e) for e in self.edges]}

    def to_dot(self):
        lines = ["graph exchange {"]
        for i, v in enumerate(self.vertices):
            label = " + ".join(self.catalog.entry(j).display()
                               for j in v.order)
            lines.append(f'  t{i} [label="{label}"];')
        seen = set()
        for vi, k, vj in self.edges:
            key = (min(vi, vj), max(vi, vj))
            if key not in seen:
                seen.add(key)
                lines.append(f"  t{vi} -- t{vj};")
        lines.append("}")
        return "\n".join(lines)


def _complement_neighbor(catalog, ids, x):
    """The unique other completion of ids minus x (pairwise-Ext search)."""
    rest = [j for j in ids if j != x]
    found = []
    for y in range(len(catalog.entries)):
        if y == x or y in rest:
            continue
        if all(catalog.ext(y, j) == 0 for j in rest):
            found.append(y)
    if len(found) != 1:
        raise AssertionError(
            f"expected exactly one exchange partner, found {found}")
    return found[0]


def exchange_graph(catalog, initial=None, payload=None, progress=None):
    """BFS closure of a basic complete rigid module under mutation at every
    exchangeable position. payload 'full' stores per-vertex ExchangeData and
    seeds (default for A2/A3); 'counts' stores vertices and edges only
    (default and recommended for A4)."""
    if payload is None:
        payload = "counts" if catalog.dt.rank >= 4 else "full"
    T0 = initial if initial is not None else initial_rigid(catalog)
    T0 = ModuleSum.from_ids(catalog, T0.expanded)
    r, n = catalog.r, catalog.n
    order0 = canonical_slots(T0)
    if payload == "full":
        data0 = exchange_data(T0)
        seed0 = Seed.initial(r, data0.b_cols)
        start = GraphVertex(T0, order0, seed0, data0)
    else:
        start = GraphVertex(T0, order0, None, None)
    vertices = [start]
    index = {T0: 0}
    edges = []
    queue = deque([0])
    while queue:
        vi = queue.popleft()
        V = vertices[vi]
        targets = []
        for k in range(1, r - n + 1):
            if payload == "full":
                new_slots, _ = mutate_slots(catalog, V.order, k)
                S2 = ModuleSum.from_ids(catalog, new_slots)
                stepped = seed_mutate(V.seed, k)
                canon = canonical_slots(S2)
                perm = [canon.index(i) for i in new_slots]
                canon_seed = stepped.permuted(perm)
                if S2 in index:
                    vj = index[S2]
                    if vertices[vj].seed != canon_seed:
                        raise AssertionError(
                            "seed propagation is path-dependent")
                else:
                    data2 = exchange_data(S2, order=canon)
                    if data2.b_cols != canon_seed.matrix:
                        raise AssertionError(
                            "matrix mutation disagrees with the quiver")
                    vj = len(vertices)
                    vertices.append(GraphVertex(S2, canon, canon_seed,
                                                data2))
                    index[S2] = vj
                    queue.append(vj)
            else:
                x = V.order[k - 1]
                y = _complement_neighbor(catalog, V.sum.expanded, x)
                S2 = V.sum.remove(x).add(y)
                if S2 in index:
                    vj = index[S2]
                else:
                    vj = len(vertices)
                    vertices.append(GraphVertex(S2, canonical_slots(S2),
                                                None, None))
                    index[S2] = vj
                    queue.append(vj)
            edges.append((vi, k, vj))
            targets.append(vj)
        if len(set(targets)) != r - n:
            raise AssertionError("mutation directions collide")
        if progress and vi % 50 == 0:
            progress(f"expanded {vi + 1}/{len(vertices)} vertices")
    return ExchangeGraph(catalog, vertices, edges, payload)


def count_complete_rigid_exhaustive(catalog):
    """Independent tally of basic complete rigid modules: brute force over
    all (r-n)-subsets of non-projective entries joined with the projectives."""
    from itertools import combinations
    nonproj = [e.id for e in catalog.entries if not e.projective]
    proj = catalog.projective_ids
    count = 0
    for combo in combinations(nonproj, catalog.r - catalog.n):
        ids = list(combo) + proj
        if all(catalog.ext(i, j) == 0
               for a, i in enumerate(ids) for j in ids[a:]):
            count += 1
    return count


def cluster_monomials(graph, max_degree):
    """Monomials in the variables of a single seed, degree at most the
    bound, deduplicated as reduced expressions."""
    if max_degree < 0:
        raise ValueError("negative degree bound")
    seen = {}
    for V in graph.vertices:
        if V.seed is None:
            raise ValueError("graph was built without seeds")
        r = len(V.seed.variables)
        nv = V.seed.variables[0].nvars

        def sweep(pos, remaining, acc):
            seen.setdefault(acc, None)
            if pos == r or remaining == 0:
                return
            for m in range(1, remaining + 1):
                sweep(pos + 1, remaining - m, acc * V.seed.variables[pos] ** m)
            sweep(pos + 1, remaining, acc)

        sweep(0, max_degree, LaurentExpr.const(nv, 1))
    return sorted(seen, key=lambda e: (e.degree(), str(e)))
