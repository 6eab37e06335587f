"""Simply laced Dynkin quivers, their doubles, and the symmetric bilinear form.

Vertices are labelled 1..n. Fixed orientations (documented bit-exactly so that
arrow ids are reproducible):

- A_n: chain 1 -> 2 -> ... -> n, arrows a1..a{n-1} with ak: k -> k+1
- D_n: a1: 1 -> 3, a2: 2 -> 3, then a{k}: k -> k+1 for k = 3..n-1
- E_n (n = 6,7,8), Bourbaki numbering with vertex 2 the branch leaf:
  a1: 1 -> 3, a2: 2 -> 4, then a{k}: k -> k+1 for k = 3..n-1

The double quiver adds the reversed arrow "ak*" for each original "ak".
Dimension vectors are plain tuples of length n, entry i-1 for vertex i.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam == "A":
            ok = n >= 2
        elif fam == "D":
            ok = n >= 4
        elif fam == "E":
            ok = n in (6, 7, 8)
        else:
            ok = False
        if not ok:
            raise ValueError(f"invalid Dynkin type {fam}{n}")

    @classmethod
    def parse(cls, s):
        m = re.fullmatch(r"\s*([ADE])\s*(\d+)\s*", s)
        if not m:
            raise ValueError(f"cannot parse Dynkin type {s!r}")
        return cls(m.group(1), int(m.group(2)))

    @property
    def num_positive_roots(self):
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family == "D":
            return n * n - n
        return {6: 36, 7: 63, 8: 120}[self.rank]

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Arrow:
    name: str
    src: int
    tgt: int


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = vertices
        self.arrows = tuple(arrows)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow ids")
        for a in self.arrows:
            if not (1 <= a.src <= vertices and 1 <= a.tgt <= vertices):
                raise ValueError(f"arrow {a.name} endpoint out of range")
        self.by_name = {a.name: a for a in self.arrows}

    def arrows_from(self, v):
        return [a for a in self.arrows if a.src == v]

    def arrows_to(self, v):
        return [a for a in self.arrows if a.tgt == v]

    def to_json_dict(self):
        return {"vertices": self.vertices,
                "arrows": [{"id": a.name, "src": a.src, "tgt": a.tgt}
                           for a in self.arrows]}

    def to_json(self):
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d):
        return cls(d["vertices"],
                   [Arrow(a["id"], a["src"], a["tgt"]) for a in d["arrows"]])


def build_quiver(dt: DynkinType) -> Quiver:
    n = dt.rank
    arrows = []
    if dt.family == "A":
        for k in range(1, n):
            arrows.append(Arrow(f"a{k}", k, k + 1))
    elif dt.family == "D":
        arrows.append(Arrow("a1", 1, 3))
        arrows.append(Arrow("a2", 2, 3))
        for k in range(3, n):
            arrows.append(Arrow(f"a{k}", k, k + 1))
    else:
        arrows.append(Arrow("a1", 1, 3))
        arrows.append(Arrow("a2", 2, 4))
        for k in range(3, n):
            arrows.append(Arrow(f"a{k}", k, k + 1))
    return Quiver(n, arrows)


class DoubleQuiver(Quiver):
    """Original arrows plus a star partner for each, with swapped endpoints."""

    def __init__(self, base: Quiver):
        arrows = list(base.arrows)
        for a in base.arrows:
            arrows.append(Arrow(a.name + "*", a.tgt, a.src))
        super().__init__(base.vertices, arrows)
        self.base = base
        self.original = tuple(base.arrows)
        self._star = {}
        for a in base.arrows:
            self._star[a.name] = a.name + "*"
            self._star[a.name + "*"] = a.name

    def star(self, name):
        return self.by_name[self._star[name]]


def double_quiver(q: Quiver) -> DoubleQuiver:
    return DoubleQuiver(q)


def bilinear_form(dt: DynkinType, d, e) -> int:
    """The symmetric form 2 sum_i d_i e_i - sum_arrows (d_s e_t + e_s d_t),
    taken over the original (single) quiver; orientation-independent."""
    q = build_quiver(dt)
    n = dt.rank
    if len(d) != n or len(e) != n:
        raise ValueError(f"dimension vector length mismatch for {dt}")
    val = 2 * sum(d[i] * e[i] for i in range(n))
    for a in q.arrows:
        val -= d[a.src - 1] * e[a.tgt - 1] + e[a.src - 1] * d[a.tgt - 1]
    return val


def dim_total(d):
    return sum(d)


def check_dim_vector(dt: DynkinType, d):
    if len(d) != dt.rank:
        raise ValueError(f"dimension vector {d} has wrong length for {dt}")
    if any(x < 0 for x in d):
        raise ValueError(f"dimension vector {d} has negative entries")
    return tuple(int(x) for x in d)
