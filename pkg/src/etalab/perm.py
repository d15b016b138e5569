"""Finite permutation groups with full element enumeration.

Points are 0-based internally (the group file format is 1-based, see
groupfile).  Permutations compare lexicographically on their image tuples and
that order is the tie-break for every canonical choice downstream: class
ordering, chief series steps, transversal scans.

Groups are enumerated by breadth-first closure of the generators, capped at
2^21 elements.  Subgroups carry a reference to the ambient group they were cut
from; they share its degree and are otherwise ordinary groups.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from math import lcm
from typing import Iterable, NamedTuple, Optional

from .errors import GroupError, PermutationError

DEFAULT_ORDER_CAP = 1 << 21

__all__ = [
    "DEFAULT_ORDER_CAP",
    "ConjugacyClassSet",
    "PGroupInfo",
    "PermGroup",
    "Permutation",
    "center",
    "centralizer",
    "chief_series",
    "conjugacy_classes",
    "group_from_generators",
    "is_p_group",
    "power_map",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {0, ..., n-1} stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = self.images
        if not isinstance(imgs, tuple):
            imgs = tuple(imgs)
            object.__setattr__(self, "images", imgs)
        n = len(imgs)
        seen = [False] * n
        for x in imgs:
            if not isinstance(x, int) or x < 0 or x >= n or seen[x]:
                raise PermutationError(f"invalid permutation: {imgs!r}")
            seen[x] = True

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[tuple[int, ...]]) -> "Permutation":
        """Build from disjoint 0-based cycles; repeated points are rejected."""
        images = list(range(degree))
        used = set()
        for cyc in cycles:
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise PermutationError(f"invalid permutation: point {pt} out of range")
                if pt in used:
                    raise PermutationError(f"invalid permutation: point {pt} repeated")
                used.add(pt)
            for i, pt in enumerate(cyc):
                images[pt] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self first, then other
        if len(self.images) != len(other.images):
            raise PermutationError("invalid permutation: degree mismatch in product")
        o = other.images
        return Permutation(tuple(o[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def __pow__(self, n: int) -> "Permutation":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = Permutation.identity(len(self.images))
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugated_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def order(self) -> int:
        out = 1
        for cyc in self.cycles(include_fixed=True):
            out = lcm(out, len(cyc))
        return out

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def __repr__(self):
        return f"Permutation({self.images!r})"


def _close_generators(degree: int, gens: tuple[Permutation, ...], cap: int) -> set[Permutation]:
    ident = Permutation.identity(degree)
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elems:
                    if len(elems) >= cap:
                        raise GroupError("group too large")
                    elems.add(y)
                    new.append(y)
        frontier = new
    return elems


class PGroupInfo(NamedTuple):
    is_p_group: bool
    p: int
    exponent: int
    is_trivial: bool


@dataclass(frozen=True)
class ConjugacyClassSet:
    """Conjugacy classes in canonical order.

    Ordering: class size ascending, ties broken by the lexicographically
    smallest member; the representative of a class is that smallest member.
    Class 0 is always the class of the identity.
    """

    group: "PermGroup"
    representatives: tuple[Permutation, ...]
    sizes: tuple[int, ...]
    members: tuple[tuple[Permutation, ...], ...]

    def __post_init__(self):
        index = {}
        for i, mem in enumerate(self.members):
            for x in mem:
                index[x.images] = i
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.sizes)

    def class_of(self, x: Permutation) -> int:
        try:
            return self._index[x.images]
        except KeyError:
            raise GroupError("element not in group") from None

    def centralizer_order(self, i: int) -> int:
        return self.group.order // self.sizes[i]


class PermGroup:
    """A finite permutation group, fully enumerated."""

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation],
        *,
        parent: Optional["PermGroup"] = None,
        order_cap: int = DEFAULT_ORDER_CAP,
        _elements: Optional[frozenset] = None,
    ):
        if degree < 1:
            raise GroupError(f"degree must be positive, got {degree}")
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Permutation):
                raise PermutationError(f"invalid permutation: {g!r}")
            if g.degree != degree:
                raise PermutationError(
                    f"invalid permutation: degree {g.degree} generator in degree {degree} group"
                )
        self.degree = degree
        self.generators = gens
        self.parent = parent
        if _elements is None:
            _elements = frozenset(_close_generators(degree, gens, order_cap))
        self.element_set = _elements
        self.elements = tuple(sorted(_elements))
        self.order = len(_elements)
        if parent is not None:
            if parent.degree != degree:
                raise GroupError("not a subgroup")
            if not _elements <= parent.element_set:
                raise GroupError("not a subgroup")
        self._classes: Optional[ConjugacyClassSet] = None
        self._exponent: Optional[int] = None
        self._pinfo: Optional[PGroupInfo] = None
        self._series = None
        self._content_key: Optional[str] = None
        self._char_table = None
        self._stab_memo: dict = {}
        self._descent_memo: dict = {}

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, x: Permutation) -> bool:
        return x in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def subgroup_from_elements(
        self, elements: Iterable[Permutation], generators: Optional[Iterable[Permutation]] = None
    ) -> "PermGroup":
        elems = frozenset(elements)
        if generators is None:
            generators = tuple(x for x in sorted(elems) if not x.is_identity())
        return PermGroup(self.degree, generators, parent=self, _elements=elems)

    def subgroup(self, generators: Iterable[Permutation], order_cap: int = DEFAULT_ORDER_CAP) -> "PermGroup":
        return PermGroup(self.degree, generators, parent=self, order_cap=order_cap)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    def is_normal_in(self, other: "PermGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        for g in other.generators:
            ginv = g.inverse()
            for s in self.generators:
                if ginv * s * g not in self.element_set:
                    return False
        return True

    def same_elements(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.element_set == other.element_set

    @property
    def content_key(self) -> str:
        if self._content_key is None:
            h = hashlib.sha256()
            h.update(self.degree.to_bytes(4, "big"))
            for x in self.elements:
                for i in x.images:
                    h.update(i.to_bytes(4, "big"))
            self._content_key = h.hexdigest()
        return self._content_key

    def conjugacy_classes(self) -> ConjugacyClassSet:
        if self._classes is None:
            self._classes = _compute_classes(self)
        return self._classes

    def center(self) -> "PermGroup":
        gens = self.generators
        elems = frozenset(x for x in self.elements if all(x * g == g * x for g in gens))
        return self.subgroup_from_elements(elems)

    def centralizer(self, g: Permutation) -> "PermGroup":
        if g not in self.element_set:
            raise GroupError("element not in group")
        elems = frozenset(x for x in self.elements if x * g == g * x)
        return self.subgroup_from_elements(elems)

    def exponent(self) -> int:
        if self._exponent is None:
            out = 1
            for x in self.elements:
                out = lcm(out, x.order())
            self._exponent = out
        return self._exponent

    def p_group_info(self) -> PGroupInfo:
        if self._pinfo is None:
            n = self.order
            if n == 1:
                self._pinfo = PGroupInfo(True, 1, 1, True)
            else:
                p = 2
                while n % p:
                    p += 1
                m = n
                while m % p == 0:
                    m //= p
                self._pinfo = PGroupInfo(m == 1, p if m == 1 else 0, self.exponent(), False)
        return self._pinfo

    def chief_series(self) -> list["PermGroup"]:
        if self._series is None:
            self._series = _chief_series(self)
        return self._series


def group_from_generators(
    degree: int, generators: Iterable[Permutation], order_cap: int = DEFAULT_ORDER_CAP
) -> PermGroup:
    """Enumerate the group generated by the given permutations."""
    return PermGroup(degree, generators, order_cap=order_cap)


def _compute_classes(G: PermGroup) -> ConjugacyClassSet:
    gens = G.generators
    gen_invs = [g.inverse() for g in gens]
    assigned: set[tuple[int, ...]] = set()
    classes: list[list[Permutation]] = []
    for x in G.elements:
        if x.images in assigned:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            new = []
            for y in frontier:
                for g, gi in zip(gens, gen_invs):
                    z = gi * y * g
                    if z not in orbit:
                        orbit.add(z)
                        new.append(z)
            frontier = new
        members = sorted(orbit)
        classes.append(members)
        assigned.update(m.images for m in members)
    classes.sort(key=lambda mem: (len(mem), mem[0].images))
    return ConjugacyClassSet(
        group=G,
        representatives=tuple(mem[0] for mem in classes),
        sizes=tuple(len(mem) for mem in classes),
        members=tuple(tuple(mem) for mem in classes),
    )


def conjugacy_classes(G: PermGroup) -> ConjugacyClassSet:
    return G.conjugacy_classes()


def center(G: PermGroup) -> PermGroup:
    return G.center()


def centralizer(G: PermGroup, g: Permutation) -> PermGroup:
    return G.centralizer(g)


def is_p_group(G: PermGroup) -> PGroupInfo:
    return G.p_group_info()


def _chief_series(G: PermGroup) -> list[PermGroup]:
    info = G.p_group_info()
    if not info.is_p_group:
        raise GroupError("not a p-group")
    if G.order == 1:
        return [G]
    p = info.p
    ident = G.identity
    cur_set = frozenset([ident])
    cur = G.subgroup_from_elements(cur_set, generators=())
    series = [cur]
    gens = G.generators
    while len(cur_set) < G.order:
        chosen = None
        for g in G.elements:
            if g in cur_set:
                continue
            if g ** p not in cur_set:
                continue
            ginv = g.inverse()
            if all(ginv * x.inverse() * g * x in cur_set for x in gens):
                chosen = g
                break
        if chosen is None:
            raise GroupError("chief series construction failed")
        new_set = set(cur_set)
        pw = chosen
        for _ in range(p - 1):
            new_set.update(pw * n for n in cur_set)
            pw = pw * chosen
        cur_set = frozenset(new_set)
        cur = G.subgroup_from_elements(cur_set, generators=cur.generators + (chosen,))
        series.append(cur)
    series[-1] = G
    return series


def chief_series(G: PermGroup) -> list[PermGroup]:
    return G.chief_series()


def power_map(G: PermGroup, classes: ConjugacyClassSet, j: int) -> list[int]:
    """Class index of rep^j for each class, in canonical class order."""
    return [classes.class_of(rep ** j) for rep in classes.representatives]
