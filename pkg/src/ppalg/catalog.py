"""Canonical catalog of all indecomposable modules for types A2, A3, A4.

Enumeration starts from the simples and the indecomposable projectives and
closes under middle terms of extensions with a simple submodule, one level
of total dimension at a time (every indecomposable M sits in an extension
0 -> S -> M -> M/S -> 0 with S a simple submodule and M/S a sum of strictly
smaller indecomposables, so level induction is complete). A syzygy closure
pass runs afterwards as an extra generator, and the final count must match
the known tally exactly or the build aborts.
"""

from __future__ import annotations

import itertools

from .algebras import build_preprojective
from .fields import QQ
from .linalg import Matrix
from .quivers import DynkinType, bilinear_form
from .reps import (
    Representation, _indec_iso_witness, direct_sum_with_slices, ext1_classes,
    ext1_dim, extension_middle, hom_dim, projective_rep, socle_profile,
    socle_series, split_indecomposables, syzygy,
)

EXPECTED_COUNTS = {("A", 2): 4, ("A", 3): 12, ("A", 4): 40}

# class vectors to try for a single copy with ext dimension e (orbit
# representatives are covered heuristically; the count certificate backstops)
_CLASS_GRIDS = {
    1: [(1,)],
    2: [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1)],
}


def _class_grid(e):
    if e in _CLASS_GRIDS:
        return _CLASS_GRIDS[e]
    vecs = [tuple(1 if i == j else 0 for i in range(e)) for j in range(e)]
    vecs.append((1,) * e)
    return vecs


class CatalogEntry:
    def __init__(self, id, rep, name, projective, rigid):
        self.id = id
        self.rep = rep
        self.name = name
        self.layers = [tuple(l) for l in reversed(socle_series(rep))]
        self.profile = socle_profile(rep)
        self.projective = projective
        self.rigid = rigid

    @property
    def dims(self):
        return self.rep.dims

    @property
    def total_dim(self):
        return self.rep.total_dim

    def display(self):
        """Socle-profile rendering, top layer first, e.g. '(2 / 1 3)'."""
        return "(" + " / ".join(self.profile.split("/")) + ")"

    def to_json_dict(self, with_rep=False):
        d = {
            "id": self.id,
            "name": self.name,
            "display": self.display(),
            "dim": list(self.dims),
            "profile": self.profile,
            "layers": [list(l) for l in self.layers],
            "projective": self.projective,
            "rigid": self.rigid,
        }
        if with_rep:
            d["rep"] = self.rep.to_json_dict()
        return d

    def __repr__(self):
        return f"CatalogEntry({self.id}, {self.name})"


class ModuleSum:
    """Multiset of catalog ids; the canonical form of a direct sum."""

    def __init__(self, catalog, counts):
        self.catalog = catalog
        self.counts = {int(i): int(m) for i, m in counts.items() if m}
        for i, m in self.counts.items():
            if m < 1 or not 0 <= i < len(catalog.entries):
                raise ValueError(f"bad summand ({i}, {m})")

    @classmethod
    def from_ids(cls, catalog, ids):
        counts = {}
        for i in ids:
            counts[i] = counts.get(i, 0) + 1
        return cls(catalog, counts)

    def items(self):
        return sorted(self.counts.items())

    @property
    def expanded(self):
        out = []
        for i, m in self.items():
            out.extend([i] * m)
        return out

    def total(self):
        return sum(self.counts.values())

    def is_basic(self):
        return all(m == 1 for m in self.counts.values())

    def rep(self):
        reps = [self.catalog.entry(i).rep for i in self.expanded]
        return direct_sum_with_slices(reps)[0]

    def add(self, i):
        counts = dict(self.counts)
        counts[i] = counts.get(i, 0) + 1
        return ModuleSum(self.catalog, counts)

    def remove(self, i):
        counts = dict(self.counts)
        if counts.get(i, 0) < 1:
            raise ValueError(f"summand {i} not present")
        counts[i] -= 1
        return ModuleSum(self.catalog, counts)

    def __contains__(self, i):
        return i in self.counts

    def __eq__(self, other):
        return (isinstance(other, ModuleSum)
                and self.catalog is other.catalog
                and self.counts == other.counts)

    def __hash__(self):
        return hash((id(self.catalog), tuple(self.items())))

    def __repr__(self):
        inner = " + ".join(
            self.catalog.entry(i).name if m == 1
            else f"{self.catalog.entry(i).name}^{m}"
            for i, m in self.items())
        return f"ModuleSum({inner})"

    def to_json(self):
        return {"summands": [[i, m] for i, m in self.items()]}


class Catalog:
    def __init__(self, dt, ppa, entries):
        self.dt = dt
        self.ppa = ppa
        self.entries = entries
        self._by_key = {}
        for e in entries:
            self._by_key.setdefault((e.dims, e.profile), []).append(e)
        self._by_name = {e.name: e for e in entries}
        self._hom_cache = {}
        self._ext_cache = {}

    @property
    def field(self):
        return self.ppa.field

    @property
    def n(self):
        return self.dt.rank

    @property
    def r(self):
        return self.dt.num_positive_roots

    def entry(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    @property
    def simple_ids(self):
        return list(range(self.n))

    @property
    def projective_ids(self):
        return list(range(self.n, 2 * self.n))

    def lookup(self, name):
        """Find an entry by name ('S1', 'P2') or profile ('2/1 3')."""
        if name in self._by_name:
            return self._by_name[name]
        stripped = name.strip("()").replace(" / ", "/")
        for e in self.entries:
            if e.profile == stripped:
                return e
        raise LookupError(f"no catalog entry named {name!r}")

    def identify(self, rep):
        """Catalog id of an indecomposable representation."""
        key = (rep.dims, socle_profile(rep))
        for e in self._by_key.get(key, []):
            if _indec_iso_witness(e.rep, rep) is not None:
                return e.id
        raise LookupError(
            f"indecomposable with dims {rep.dims} not in catalog "
            "(enumeration bug)")

    def canonical_sum(self, rep):
        counts = {}
        for part, _ in split_indecomposables(rep):
            i = self.identify(part)
            counts[i] = counts.get(i, 0) + 1
        return ModuleSum(self, counts)

    def sum_of(self, ids):
        return ModuleSum.from_ids(self, ids)

    def hom(self, i, j):
        """dim Hom between catalog entries, cached."""
        key = (i, j)
        if key not in self._hom_cache:
            self._hom_cache[key] = hom_dim(self.entry(i).rep,
                                           self.entry(j).rep)
        return self._hom_cache[key]

    def ext(self, i, j):
        """dim Ext^1 between catalog entries, cached."""
        key = (min(i, j), max(i, j))
        if key not in self._ext_cache:
            a, b = self.entry(key[0]).rep, self.entry(key[1]).rep
            self._ext_cache[key] = (self.hom(key[0], key[1])
                                    + self.hom(key[1], key[0])
                                    - bilinear_form(self.dt, a.dims, b.dims))
        return self._ext_cache[key]

    def to_json(self, with_reps=False):
        return {
            "type": str(self.dt),
            "count": len(self.entries),
            "entries": [e.to_json_dict(with_rep=with_reps)
                        for e in self.entries],
        }


def _try_add(known, keymap, W):
    key = (W.dims, socle_profile(W))
    for idx in keymap.get(key, []):
        if _indec_iso_witness(known[idx], W) is not None:
            return False
    keymap.setdefault(key, []).append(len(known))
    known.append(W)
    return True


def _enumerate_indecomposables(dt, ppa, field, expected):
    n = dt.rank
    simples = [Representation.simple(dt, v, field) for v in range(1, n + 1)]
    projs = [projective_rep(ppa, v) for v in range(1, n + 1)]
    known, keymap = [], {}
    for m in simples + projs:
        _try_add(known, keymap, m)

    hom_cache = {}

    def homd(i, j):
        if (i, j) not in hom_cache:
            hom_cache[(i, j)] = hom_dim(known[i], known[j])
        return hom_cache[(i, j)]

    def extd(i, j):
        return (homd(i, j) + homd(j, i)
                - bilinear_form(dt, known[i].dims, known[j].dims))

    class_cache = {}

    def classes(i, sv):
        if (i, sv) not in class_cache:
            class_cache[(i, sv)] = ext1_classes(known[i], simples[sv])[0]
        return class_cache[(i, sv)]

    max_level = 2 * max(p.total_dim for p in projs)
    quiet_levels = 0
    for level in range(2, max_level + 1):
        found_here = False
        for sv in range(n):
            cands = [(i, extd(i, sv)) for i in range(len(known))
                     if known[i].total_dim <= level - 1]
            cands = [(i, e) for i, e in cands if e > 0]
            for multiset in _multisets_of_dim(known, cands, level - 1):
                for W in _middles(known, simples, sv, multiset, classes,
                                  field):
                    for part, _ in split_indecomposables(W):
                        if part.total_dim == level:
                            if _try_add(known, keymap, part):
                                found_here = True
        if len(known) > expected:
            raise RuntimeError(
                f"enumeration produced {len(known)} indecomposables for "
                f"{dt}, more than the expected {expected}")
        if len(known) == expected:
            quiet_levels = 0 if found_here else quiet_levels + 1
            if quiet_levels >= 1:
                break
    # closure under syzygies as an independent extra generator
    for idx in range(len(known)):
        if n <= idx < 2 * n:
            continue
        K, _, _, _ = syzygy(ppa, known[idx])
        if K.total_dim:
            for part, _ in split_indecomposables(K):
                _try_add(known, keymap, part)
    if len(known) != expected:
        raise RuntimeError(
            f"enumeration found {len(known)} indecomposables for {dt}, "
            f"expected exactly {expected}")
    return known


def _multisets_of_dim(known, cands, target):
    """Multisets [(index, mult)] with sum of total dims = target and
    mult bounded by the ext dimension of the candidate."""
    out = []

    def rec(pos, remaining, acc):
        if remaining == 0:
            out.append(list(acc))
            return
        if pos == len(cands):
            return
        i, e = cands[pos]
        d = known[i].total_dim
        max_m = min(e, remaining // d)
        for m in range(max_m, -1, -1):
            if m:
                acc.append((i, m))
            rec(pos + 1, remaining - m * d, acc)
            if m:
                acc.pop()

    rec(0, target, [])
    return out


def _middles(known, simples, sv, multiset, classes, field):
    """Middle terms of extensions 0 -> S_sv -> E -> Q -> 0 where Q is the
    direct sum described by the multiset; sweeps class-vector choices."""
    S = simples[sv]
    expanded = []
    per_copy_choices = []
    for i, m in multiset:
        basis = classes(i, sv)
        e = len(basis)
        if m > e:
            return
        if m >= 2:
            # independent classes reduce to the identity pattern
            for j in range(m):
                expanded.append(i)
                vec = tuple(1 if k == j else 0 for k in range(e))
                per_copy_choices.append([(basis, vec)])
        else:
            expanded.append(i)
            per_copy_choices.append([(basis, v) for v in _class_grid(e)])
    Q, slices = direct_sum_with_slices([known[i] for i in expanded])
    dq = Q.dquiver
    combo_cap = 64
    for combo in itertools.islice(
            itertools.product(*per_copy_choices), combo_cap):
        c = {}
        for a in dq.arrows:
            t, s = a.tgt - 1, a.src - 1
            M = Matrix.zeros(field, S.dims[t], Q.dims[s])
            for copy_idx, (basis, vec) in enumerate(combo):
                c0 = slices[copy_idx][s][0]
                for coeff, cls in zip(vec, basis):
                    if coeff == 0:
                        continue
                    block = cls[a.name]
                    for r in range(block.nrows):
                        for cc in range(block.ncols):
                            M[r, c0 + cc] = field.add(
                                M[r, c0 + cc],
                                field.mul(field.of(coeff), block[r, cc]))
            c[a.name] = M
        yield extension_middle(Q, S, c)


_catalog_cache = {}


def build_catalog(dt, field=QQ):
    dt = dt if isinstance(dt, DynkinType) else DynkinType.parse(dt)
    key = (dt, field)
    if key in _catalog_cache:
        return _catalog_cache[key]
    if (dt.family, dt.rank) not in EXPECTED_COUNTS:
        raise ValueError(
            f"catalog enumeration supports A2, A3, A4 only, not {dt}")
    expected = EXPECTED_COUNTS[(dt.family, dt.rank)]
    ppa = build_preprojective(dt, field)
    n = dt.rank
    known = _enumerate_indecomposables(dt, ppa, field, expected)
    simple_part = known[:n]
    proj_part = known[n:2 * n]
    rest = sorted(known[2 * n:],
                  key=lambda w: (w.total_dim, socle_profile(w)))
    ordered = simple_part + proj_part + rest
    entries = []
    for idx, rep in enumerate(ordered):
        if idx < n:
            name = f"S{idx + 1}"
            projective = False
        elif idx < 2 * n:
            name = f"P{idx - n + 1}"
            projective = True
        else:
            name = "(" + " / ".join(socle_profile(rep).split("/")) + ")"
            projective = False
        rigid = ext1_dim(rep, rep) == 0
        entries.append(CatalogEntry(idx, rep, name, projective, rigid))
    cat = Catalog(dt, ppa, entries)
    _catalog_cache[key] = cat
    return cat
