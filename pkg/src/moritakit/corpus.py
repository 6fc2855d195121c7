"""Deterministic corpus of small groupoids, actions, bundles and bibundles.

Every finite groupoid splits into transitive pieces, and a transitive piece on
m objects with isotropy group K has m²·|K| arrows.  The generator therefore
enumerates multisets of (m, K) pieces from a catalog of groups complete through
order 7 — that covers every isomorphism class within the size bounds, exactly
once, in a fixed order.  Derived objects (translation actions, canonical
bundles, identity/opposite/linking bibundles, equivariant maps) are built from
the same canonical instances so that composability is plain equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundsTooLarge
from .actions import (
    EquivariantMap,
    GroupoidBundle,
    LeftAction,
    RightAction,
    left_translation_action,
    object_action,
    right_translation_action,
    self_bundle,
)
from .bibundles import Bibundle, identity_bibundle
from .groupoid import (
    FiniteGroupoid,
    disjoint_union,
    group_as_groupoid,
    transitive_groupoid,
)

ENUMERATION_GUARD = 10**7
GROUP_CATALOG_MAX_ORDER = 7


def cyclic_table(n: int):
    elements = list(range(n))
    return elements, {(a, b): (a + b) % n for a in elements for b in elements}


def klein_table():
    # (Z/2)² realized as xor on {0,1,2,3}
    elements = [0, 1, 2, 3]
    return elements, {(a, b): a ^ b for a in elements for b in elements}


def sym3_table():
    elements = sorted(itertools.permutations(range(3)))
    mult = {(p, q): tuple(p[q[i]] for i in range(3))
            for p in elements for q in elements}
    return elements, mult


#: name -> (elements, multiplication table); complete through order 7.
GROUPS = {
    "1": cyclic_table(1),
    "Z2": cyclic_table(2),
    "Z3": cyclic_table(3),
    "Z4": cyclic_table(4),
    "V4": klein_table(),
    "Z5": cyclic_table(5),
    "Z6": cyclic_table(6),
    "S3": sym3_table(),
    "Z7": cyclic_table(7),
}

_GROUP_ORDER = [  # fixed presentation order: by order, then name
    "1", "Z2", "Z3", "Z4", "V4", "Z5", "Z6", "S3", "Z7",
]


@dataclass(frozen=True)
class CorpusSpec:
    """Size bounds and the sampling seed for a generated corpus."""

    max_objects: int = 3
    max_arrows: int = 6
    max_carrier: int = 5
    seed: int = 0

    def validate(self):
        if min(self.max_objects, self.max_arrows, self.max_carrier) < 0:
            raise ValueError("corpus bounds must be nonnegative")
        if self.max_arrows > GROUP_CATALOG_MAX_ORDER:
            raise BoundsTooLarge(self.max_arrows, GROUP_CATALOG_MAX_ORDER)

    @classmethod
    def parse(cls, text: str) -> "CorpusSpec":
        """Parse 'max_objects=3,max_arrows=6,max_carrier=5,seed=0'."""
        values = {}
        for chunk in filter(None, (c.strip() for c in text.split(","))):
            key, _, value = chunk.partition("=")
            if key not in ("max_objects", "max_arrows", "max_carrier", "seed"):
                raise ValueError(f"unknown corpus field {key!r}")
            values[key] = int(value)
        return cls(**values)


@dataclass(frozen=True)
class CorpusItem:
    name: str
    value: object


@dataclass(frozen=True)
class Corpus:
    """All generated objects, each tagged with a stable instance name."""

    spec: CorpusSpec
    groupoids: tuple
    actions: tuple
    bundles: tuple
    bibundles: tuple
    equivariant_maps: tuple

    def serializable_objects(self):
        for collection in (self.groupoids, self.actions, self.bundles,
                           self.bibundles):
            yield from collection

    def groupoid(self, name: str) -> FiniteGroupoid:
        for item in self.groupoids:
            if item.name == name:
                return item.value
        raise KeyError(name)


def _piece_catalog(max_objects: int, max_arrows: int):
    """Transitive pieces (m, group name) within the bounds, in fixed order."""
    pieces = []
    for m in range(1, max_objects + 1):
        for gname in _GROUP_ORDER:
            order = len(GROUPS[gname][0])
            if m * m * order <= max_arrows:
                pieces.append((m, gname))
    return pieces


def _piece_name(m: int, gname: str) -> str:
    if m == 1:
        return gname
    return f"pair({m})" if gname == "1" else f"pair({m})x{gname}"


def _build_piece(m: int, gname: str) -> FiniteGroupoid:
    elements, mult = GROUPS[gname]
    if m == 1:
        return group_as_groupoid(elements, mult)
    return transitive_groupoid(m, elements, mult)


def _canonical(groupoid: FiniteGroupoid) -> FiniteGroupoid:
    obj_map, arrow_map = groupoid.canonical_relabeling()
    return groupoid.rename(obj_map, arrow_map)


def generate_groupoids(spec: CorpusSpec):
    """Every isomorphism class within the bounds, as canonically labeled tables."""
    spec.validate()
    pieces = _piece_catalog(spec.max_objects, spec.max_arrows)
    multisets = [()]
    for count in range(1, spec.max_objects + 1):
        multisets.extend(itertools.combinations_with_replacement(pieces, count))
    if len(multisets) > ENUMERATION_GUARD:
        raise BoundsTooLarge(len(multisets), ENUMERATION_GUARD)

    items = []
    for multiset in multisets:
        total_objects = sum(m for m, _ in multiset)
        total_arrows = sum(m * m * len(GROUPS[g][0]) for m, g in multiset)
        if total_objects > spec.max_objects or total_arrows > spec.max_arrows:
            continue
        if not multiset:
            empty = FiniteGroupoid.from_tables([], [], {}, {}, {}, {}, {})
            items.append(CorpusItem("empty", empty))
            continue
        built = [_build_piece(m, g) for m, g in multiset]
        merged = built[0] if len(built) == 1 else disjoint_union(*built)
        name = "+".join(_piece_name(m, g) for m, g in multiset)
        items.append(CorpusItem(name, _canonical(merged)))
    return tuple(items)


def _linking_bibundle(m: int, gname: str) -> Bibundle:
    """The biprincipal bibundle between a transitive groupoid and its isotropy group.

    Carrier points are (object, group element); the transitive groupoid acts on
    the object slot and the group on the group slot.
    """
    elements, mult = GROUPS[gname]
    transitive = _build_piece(m, gname)
    group = _build_piece(1, gname)
    carrier = [(i, k) for i in range(m) for k in elements]
    left = LeftAction.from_tables(
        transitive, carrier, {(i, k): i for i, k in carrier},
        {(arrow, (j, k)): (arrow[0], mult[(arrow[1], k)])
         for arrow in transitive.arrows for (j, k) in carrier
         if transitive.src[arrow] == j})
    right = RightAction.from_tables(
        group, carrier, {(i, k): "*" for i, k in carrier},
        {(((i, k)), g): (i, mult[(k, g)]) for i, k in carrier
         for g in elements})
    bib = Bibundle.from_actions(left, right)

    # align the groupoids with their canonical corpus instances
    t_obj, t_arr = transitive.canonical_relabeling()
    g_obj, g_arr = group.canonical_relabeling()
    left_canon = LeftAction.from_tables(
        transitive.rename(t_obj, t_arr), carrier,
        {x: t_obj[left.moment[x]] for x in carrier},
        {(t_arr[g], x): y for (g, x), y in left.act.items()})
    right_canon = RightAction.from_tables(
        group.rename(g_obj, g_arr), carrier,
        {x: g_obj[right.moment[x]] for x in carrier},
        {(x, g_arr[g]): y for (x, g), y in right.act.items()})
    del bib
    return Bibundle.from_actions(left_canon, right_canon)


def generate_corpus(spec: CorpusSpec = CorpusSpec()) -> Corpus:
    """Build the full deterministic corpus for the given bounds."""
    groupoids = generate_groupoids(spec)

    actions = []
    for item in groupoids:
        gpd = item.value
        if len(gpd.arrows) <= spec.max_carrier:
            actions.append(CorpusItem(f"self:{item.name}",
                                      left_translation_action(gpd)))
            actions.append(CorpusItem(f"selfR:{item.name}",
                                      right_translation_action(gpd)))
        if len(gpd.objects) <= spec.max_carrier:
            actions.append(CorpusItem(f"objects:{item.name}", object_action(gpd)))

    bibundles = []
    for item in groupoids:
        gpd = item.value
        if len(gpd.arrows) <= spec.max_carrier:
            ident = identity_bibundle(gpd)
            bibundles.append(CorpusItem(f"id:{item.name}", ident))
            bibundles.append(CorpusItem(f"op:id:{item.name}", ident.opposite()))
    for m, gname in _piece_catalog(spec.max_objects, spec.max_arrows):
        if m >= 2 and m * len(GROUPS[gname][0]) <= spec.max_carrier:
            link = _linking_bibundle(m, gname)
            name = _piece_name(m, gname)
            bibundles.append(CorpusItem(f"link:{name}", link))
            bibundles.append(CorpusItem(f"op:link:{name}", link.opposite()))

    bundles = []
    for item in groupoids:
        gpd = item.value
        if len(gpd.arrows) <= spec.max_carrier:
            bundles.append(CorpusItem(f"self:{item.name}", self_bundle(gpd)))
            padded_base = tuple(gpd.objects) + ("pad",)
            bundles.append(CorpusItem(
                f"self+pad:{item.name}",
                GroupoidBundle.from_parts(left_translation_action(gpd),
                                          padded_base,
                                          {g: gpd.src[g] for g in gpd.arrows})))
        if len(gpd.objects) <= spec.max_carrier:
            orbits = gpd.orbit_space()
            bundles.append(CorpusItem(
                f"orbits:{item.name}",
                GroupoidBundle.from_parts(object_action(gpd), orbits.reps(),
                                          dict(orbits.class_of))))
    for item in bibundles:
        bundles.append(CorpusItem(f"left:{item.name}", item.value.left_bundle()))
        bundles.append(CorpusItem(f"right:{item.name}", item.value.right_bundle()))

    equivariant_maps = []
    by_name = {item.name: item.value for item in actions}
    for item in groupoids:
        gpd = item.value
        self_action = by_name.get(f"self:{item.name}")
        obj_action = by_name.get(f"objects:{item.name}")
        if self_action is not None:
            equivariant_maps.append(CorpusItem(
                f"id:self:{item.name}",
                EquivariantMap.checked(self_action, self_action,
                                       {x: x for x in self_action.carrier})))
            if obj_action is not None:
                equivariant_maps.append(CorpusItem(
                    f"collapse:{item.name}",
                    EquivariantMap.checked(self_action, obj_action,
                                           {g: gpd.tgt[g] for g in gpd.arrows})))
            if len(gpd.objects) == 1:
                for k in gpd.arrows:
                    equivariant_maps.append(CorpusItem(
                        f"rho:{item.name}:{k}",
                        EquivariantMap.checked(
                            self_action, self_action,
                            {g: gpd.comp[(g, k)] for g in gpd.arrows})))

    return Corpus(spec=spec, groupoids=groupoids, actions=tuple(actions),
                  bundles=tuple(bundles), bibundles=tuple(bibundles),
                  equivariant_maps=tuple(equivariant_maps))
