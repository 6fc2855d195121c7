"""Finite groupoids as validated composition tables, with their intrinsic invariants.

A groupoid is stored as explicit finite tables: source/target/unit/inverse maps
plus a partial composition table ``comp[(g, h)] = g∘h`` defined exactly when
``src(g) == tgt(h)``.  Arrows compose like functions: for ``g: b→c`` and
``h: a→b`` the composite ``g∘h`` runs ``a→c``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    BoundsTooLarge,
    DomainMismatch,
    NotAGroup,
    NotAnEquivalence,
    UnknownObject,
    ValidationFailed,
    ValidationReport,
)

#: Default guard on the number of composable pairs a validator will enumerate.
MAX_COMPOSABLE_PAIRS = 10**6


def ident_key(value):
    """Total order key for identifiers of mixed type (ints, strings, tuples).

    Only used to fix *a* deterministic order; the order itself carries no
    mathematical meaning.
    """
    if isinstance(value, bool):
        return (0, int(value))
    if isinstance(value, int):
        return (0, value)
    if isinstance(value, str):
        return (1, value)
    if isinstance(value, tuple):
        return (2, tuple(ident_key(v) for v in value))
    return (3, type(value).__name__, repr(value))


def sorted_idents(values):
    return tuple(sorted(values, key=ident_key))


class UnionFind:
    """Plain union-find with path compression, for quotient partitions."""

    def __init__(self, elements):
        self.parent = {e: e for e in elements}

    def find(self, e):
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def classes(self):
        groups = {}
        for e in self.parent:
            groups.setdefault(self.find(e), []).append(e)
        return {min(members, key=ident_key): sorted_idents(members)
                for members in groups.values()}


@dataclass(frozen=True)
class OrbitPartition:
    """A partition of a finite set into orbit classes.

    Class identifiers are the ident_key-least member of each class, so two
    runs over the same data name classes identically.
    """

    classes: dict  # class id -> sorted tuple of members
    class_of: dict  # member -> class id

    @classmethod
    def from_edges(cls, elements, edges):
        uf = UnionFind(elements)
        for a, b in edges:
            uf.union(a, b)
        classes = uf.classes()
        class_of = {m: rep for rep, members in classes.items() for m in members}
        return cls(classes=classes, class_of=class_of)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def reps(self):
        return sorted_idents(self.classes)

    def members(self, rep):
        return self.classes[rep]

    def check_partition(self, elements) -> bool:
        """The classes are disjoint, nonempty, and cover ``elements``."""
        seen = []
        for members in self.classes.values():
            if not members:
                return False
            seen.extend(members)
        return len(seen) == len(set(seen)) and set(seen) == set(elements)


def validate_groupoid(objects, arrows, src, tgt, unit, inv, comp,
                      max_pairs: int = MAX_COMPOSABLE_PAIRS) -> ValidationReport:
    """Check raw groupoid tables against every axiom.

    Returns a report listing each violated law with an offending witness;
    dangling identifiers short-circuit the law checks that depend on them.
    """
    report = ValidationReport("groupoid")
    objects = set(objects)
    arrows = set(arrows)

    for name, mapping, keys, values in (
        ("src", src, arrows, objects),
        ("tgt", tgt, arrows, objects),
        ("unit", unit, objects, arrows),
        ("inv", inv, arrows, arrows),
    ):
        for k in keys:
            if k not in mapping:
                report.add("dangling-identifier", (name, "missing", k))
        for k, v in mapping.items():
            if k not in keys:
                report.add("dangling-identifier", (name, "key", k))
            elif v not in values:
                report.add("dangling-identifier", (name, "value", k, v))
    for (g, h), gh in comp.items():
        if g not in arrows or h not in arrows or gh not in arrows:
            report.add("dangling-identifier", ("comp", g, h, gh))
    if not report.ok:
        return report

    composable = [(g, h) for g in arrows for h in arrows if src[g] == tgt[h]]
    if len(composable) > max_pairs:
        raise BoundsTooLarge(len(composable), max_pairs)

    for g, h in composable:
        if (g, h) not in comp:
            report.add("composition-missing", (g, h))
    for (g, h), gh in comp.items():
        if src[g] != tgt[h]:
            report.add("composition-domain", (g, h))
        else:
            if src[gh] != src[h] or tgt[gh] != tgt[g]:
                report.add("composition-source-target", (g, h, gh))
    if not report.ok:
        return report

    for x in objects:
        u = unit[x]
        if src[u] != x or tgt[u] != x:
            report.add("unit-source-target", (x, u))
    for g in arrows:
        if (unit.get(tgt[g]), g) in comp and comp[(unit[tgt[g]], g)] != g:
            report.add("unit-identity", ("left", g))
        if (g, unit.get(src[g])) in comp and comp[(g, unit[src[g]])] != g:
            report.add("unit-identity", ("right", g))
        if inv[inv[g]] != g:
            report.add("inverse-involution", (g,))
        if src[inv[g]] != tgt[g] or tgt[inv[g]] != src[g]:
            report.add("inverse-source-target", (g,))
        else:
            if comp.get((inv[g], g)) != unit[src[g]]:
                report.add("inverse-identity", ("left", g))
            if comp.get((g, inv[g])) != unit[tgt[g]]:
                report.add("inverse-identity", ("right", g))

    for g, h in composable:
        gh = comp[(g, h)]
        for k in arrows:
            if src[h] == tgt[k]:
                if comp[(gh, k)] != comp[(g, comp[(h, k)])]:
                    report.add("associativity", (g, h, k))
    return report


@dataclass(frozen=True)
class FiniteGroupoid:
    """An immutable finite groupoid; construct through :meth:`from_tables`."""

    objects: tuple
    arrows: tuple
    src: dict
    tgt: dict
    unit: dict
    inv: dict
    comp: dict

    @classmethod
    def from_tables(cls, objects, arrows, src, tgt, unit, inv, comp,
                    max_pairs: int = MAX_COMPOSABLE_PAIRS) -> "FiniteGroupoid":
        report = validate_groupoid(objects, arrows, src, tgt, unit, inv, comp,
                                   max_pairs=max_pairs)
        if not report.ok:
            raise ValidationFailed(report)
        return cls(objects=sorted_idents(objects), arrows=sorted_idents(arrows),
                   src=dict(src), tgt=dict(tgt), unit=dict(unit), inv=dict(inv),
                   comp=dict(comp))

    # -- basic structure ----------------------------------------------------

    def compose(self, g, h):
        try:
            return self.comp[(g, h)]
        except KeyError:
            raise DomainMismatch(f"arrows not composable: {g!r}∘{h!r}") from None

    def identity(self, x):
        if x not in self.unit:
            raise UnknownObject(repr(x))
        return self.unit[x]

    def inverse(self, g):
        return self.inv[g]

    def is_composable(self, g, h) -> bool:
        return self.src[g] == self.tgt[h]

    def composable_pairs(self):
        return ((g, h) for g in self.arrows for h in self.arrows
                if self.src[g] == self.tgt[h])

    def arrows_between(self, source_obj, target_obj):
        return sorted_idents(g for g in self.arrows
                             if self.src[g] == source_obj and self.tgt[g] == target_obj)

    # -- invariants ----------------------------------------------------------

    def isotropy_group(self, x):
        """All arrows from and to ``x``; closed under composition and inverse."""
        if x not in self.unit:
            raise UnknownObject(repr(x))
        members = sorted_idents(
            g for g in self.arrows if self.src[g] == x and self.tgt[g] == x)
        for g in members:
            assert self.inv[g] in members
            for h in members:
                assert self.comp[(g, h)] in members
        return members

    def isotropy_groupoid(self) -> "FiniteGroupoid":
        """The subgroupoid of all arrows whose source equals their target."""
        iso = [g for g in self.arrows if self.src[g] == self.tgt[g]]
        keep = set(iso)
        return FiniteGroupoid.from_tables(
            self.objects, iso,
            {g: self.src[g] for g in iso}, {g: self.tgt[g] for g in iso},
            dict(self.unit), {g: self.inv[g] for g in iso},
            {(g, h): gh for (g, h), gh in self.comp.items()
             if g in keep and h in keep})

    def orbit_space(self) -> OrbitPartition:
        """Objects partitioned by arrow-reachability."""
        return OrbitPartition.from_edges(
            self.objects, ((self.src[g], self.tgt[g]) for g in self.arrows))

    def is_fibrating(self) -> bool:
        """Whether g ↦ (tgt g, src g) covers all object pairs."""
        image = {(self.tgt[g], self.src[g]) for g in self.arrows}
        return image == {(a, b) for a in self.objects for b in self.objects}

    # -- plumbing ------------------------------------------------------------

    def rename(self, obj_map, arrow_map) -> "FiniteGroupoid":
        """Relabel objects and arrows through the given injective maps."""
        return FiniteGroupoid.from_tables(
            [obj_map[x] for x in self.objects],
            [arrow_map[g] for g in self.arrows],
            {arrow_map[g]: obj_map[self.src[g]] for g in self.arrows},
            {arrow_map[g]: obj_map[self.tgt[g]] for g in self.arrows},
            {obj_map[x]: arrow_map[self.unit[x]] for x in self.objects},
            {arrow_map[g]: arrow_map[self.inv[g]] for g in self.arrows},
            {(arrow_map[g], arrow_map[h]): arrow_map[gh]
             for (g, h), gh in self.comp.items()})

    def canonical_relabeling(self):
        """Maps sending objects and arrows to 0-based integer labels."""
        return ({x: i for i, x in enumerate(self.objects)},
                {g: i for i, g in enumerate(self.arrows)})

    def __repr__(self):
        return (f"FiniteGroupoid({len(self.objects)} objects, "
                f"{len(self.arrows)} arrows)")


# -- constructors -------------------------------------------------------------


def pair_groupoid(n: int) -> FiniteGroupoid:
    """The full relation groupoid on {0..n-1}: arrow (i, j) runs j→i."""
    if n < 1:
        raise ValueError("pair_groupoid needs n >= 1")
    objects = range(n)
    arrows = [(i, j) for i in objects for j in objects]
    return FiniteGroupoid.from_tables(
        objects, arrows,
        {(i, j): j for i, j in arrows}, {(i, j): i for i, j in arrows},
        {i: (i, i) for i in objects}, {(i, j): (j, i) for i, j in arrows},
        {((i, j), (j2, k)): (i, k) for i, j in arrows for j2, k in arrows
         if j == j2})


def relation_groupoid(carrier, relation) -> FiniteGroupoid:
    """Groupoid of an equivalence relation given as a list of related pairs.

    Composition is (z, y)∘(y, x) = (z, x); the relation is checked to be
    reflexive, symmetric and transitive before any table is built.
    """
    carrier = sorted_idents(carrier)
    pairs = set(relation)
    for a, b in pairs:
        if a not in carrier or b not in carrier:
            raise NotAnEquivalence(f"pair {(a, b)!r} leaves the carrier")
    for x in carrier:
        if (x, x) not in pairs:
            raise NotAnEquivalence(f"not reflexive at {x!r}")
    for a, b in pairs:
        if (b, a) not in pairs:
            raise NotAnEquivalence(f"not symmetric on {(a, b)!r}")
    for a, b in pairs:
        for c, d in pairs:
            if b == c and (a, d) not in pairs:
                raise NotAnEquivalence(f"not transitive on {(a, b, d)!r}")
    arrows = sorted_idents(pairs)
    return FiniteGroupoid.from_tables(
        carrier, arrows,
        {(i, j): j for i, j in arrows}, {(i, j): i for i, j in arrows},
        {x: (x, x) for x in carrier}, {(i, j): (j, i) for i, j in arrows},
        {((i, j), (j2, k)): (i, k) for (i, j) in arrows for (j2, k) in arrows
         if j == j2})


def unit_groupoid(carrier) -> FiniteGroupoid:
    """The groupoid with only identity arrows on the given objects."""
    return relation_groupoid(carrier, [(x, x) for x in carrier])


def validate_group_table(elements, mult) -> ValidationReport:
    report = ValidationReport("group")
    elements = sorted_idents(elements)
    for a in elements:
        for b in elements:
            if mult.get((a, b)) not in elements:
                report.add("group-closure", (a, b))
    if not report.ok:
        return report
    identity = None
    for e in elements:
        if all(mult[(e, a)] == a and mult[(a, e)] == a for a in elements):
            identity = e
            break
    if identity is None:
        report.add("group-identity", ())
        return report
    for a in elements:
        if not any(mult[(a, b)] == identity and mult[(b, a)] == identity
                   for b in elements):
            report.add("group-inverse", (a,))
    for a in elements:
        for b in elements:
            for c in elements:
                if mult[(mult[(a, b)], c)] != mult[(a, mult[(b, c)])]:
                    report.add("group-associativity", (a, b, c))
    return report


def group_as_groupoid(elements, mult, object_id="*") -> FiniteGroupoid:
    """A group, presented by its multiplication table, as a one-object groupoid."""
    report = validate_group_table(elements, mult)
    if not report.ok:
        raise NotAGroup(str(report))
    elements = sorted_idents(elements)
    identity = next(e for e in elements
                    if all(mult[(e, a)] == a and mult[(a, e)] == a
                           for a in elements))
    inv = {a: next(b for b in elements if mult[(a, b)] == identity)
           for a in elements}
    return FiniteGroupoid.from_tables(
        [object_id], elements,
        {a: object_id for a in elements}, {a: object_id for a in elements},
        {object_id: identity}, inv, dict(mult))


def transitive_groupoid(n_objects: int, elements, mult) -> FiniteGroupoid:
    """The transitive groupoid on n objects with isotropy the given group.

    Arrows are triples (i, k, j) from j to i; composition multiplies the group
    parts.  With the trivial group this is exactly the pair groupoid.
    """
    if n_objects < 1:
        raise ValueError("need at least one object")
    report = validate_group_table(elements, mult)
    if not report.ok:
        raise NotAGroup(str(report))
    elements = sorted_idents(elements)
    identity = next(e for e in elements
                    if all(mult[(e, a)] == a and mult[(a, e)] == a
                           for a in elements))
    ginv = {a: next(b for b in elements if mult[(a, b)] == identity)
            for a in elements}
    objects = range(n_objects)
    arrows = [(i, k, j) for i in objects for k in elements for j in objects]
    return FiniteGroupoid.from_tables(
        objects, arrows,
        {(i, k, j): j for (i, k, j) in arrows},
        {(i, k, j): i for (i, k, j) in arrows},
        {i: (i, identity, i) for i in objects},
        {(i, k, j): (j, ginv[k], i) for (i, k, j) in arrows},
        {((i, k, j), (j2, k2, j3)): (i, mult[(k, k2)], j3)
         for (i, k, j) in arrows for (j2, k2, j3) in arrows if j == j2})


def disjoint_union(*groupoids) -> FiniteGroupoid:
    """Disjoint union, with components tagged by their position index."""
    tagged = [g.rename({x: (i, x) for x in g.objects},
                       {a: (i, a) for a in g.arrows})
              for i, g in enumerate(groupoids)]
    objects = list(itertools.chain.from_iterable(g.objects for g in tagged))
    arrows = list(itertools.chain.from_iterable(g.arrows for g in tagged))
    src, tgt, unit, inv, comp = {}, {}, {}, {}, {}
    for g in tagged:
        src.update(g.src)
        tgt.update(g.tgt)
        unit.update(g.unit)
        inv.update(g.inv)
        comp.update(g.comp)
    return FiniteGroupoid.from_tables(objects, arrows, src, tgt, unit, inv, comp)
