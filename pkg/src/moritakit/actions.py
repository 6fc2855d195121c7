"""Groupoid actions along moment maps, equivariant maps, bundles, principality.

An action is a partial table: ``act[(g, x)]`` for left actions (defined exactly
when ``src(g) == moment(x)``) and ``act[(x, g)]`` for right actions (defined
exactly when ``moment(x) == tgt(g)``).  Lookups outside the domain raise
DomainMismatch; nothing is ever defaulted silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DomainMismatch,
    NotPrePrincipal,
    ValidationFailed,
    ValidationReport,
    Violation,
)
from .groupoid import FiniteGroupoid, OrbitPartition, ident_key, sorted_idents


def _check_moment(report, groupoid, carrier, moment):
    objects = set(groupoid.objects)
    carrier_set = set(carrier)
    for x in carrier:
        if x not in moment:
            report.add("moment-dangling", ("missing", x))
        elif moment[x] not in objects:
            report.add("moment-dangling", ("value", x, moment[x]))
    for x in moment:
        if x not in carrier_set:
            report.add("moment-dangling", ("key", x))


def validate_left_action(groupoid: FiniteGroupoid, carrier, moment, act) -> ValidationReport:
    """Check a left-action table against the three action conditions."""
    report = ValidationReport("left-action")
    carrier = sorted_idents(carrier)
    carrier_set = set(carrier)
    arrows = set(groupoid.arrows)
    _check_moment(report, groupoid, carrier, moment)
    for (g, x), y in act.items():
        if g not in arrows or x not in carrier_set or y not in carrier_set:
            report.add("dangling-identifier", ("act", g, x, y))
    if not report.ok:
        return report

    for (g, x) in act:
        if groupoid.src[g] != moment[x]:
            report.add("action-domain", (g, x))
    for g in groupoid.arrows:
        for x in carrier:
            if groupoid.src[g] == moment[x] and (g, x) not in act:
                report.add("action-missing", (g, x))
    if not report.ok:
        return report

    moment_ok = True
    for (g, x), y in act.items():
        if moment[y] != groupoid.tgt[g]:
            report.add("action-moment", (g, x, y))
            moment_ok = False
    for x in carrier:
        if act[(groupoid.unit[moment[x]], x)] != x:
            report.add("action-unit", (x,))
    if moment_ok:
        for (g, x), y in act.items():
            for h in groupoid.arrows:
                if groupoid.src[h] == groupoid.tgt[g]:
                    if act[(h, y)] != act[(groupoid.comp[(h, g)], x)]:
                        report.add("action-composition", (h, g, x))
    return report


def validate_right_action(groupoid: FiniteGroupoid, carrier, moment, act) -> ValidationReport:
    """Check a right-action table; the mirror of :func:`validate_left_action`."""
    report = ValidationReport("right-action")
    carrier = sorted_idents(carrier)
    carrier_set = set(carrier)
    arrows = set(groupoid.arrows)
    _check_moment(report, groupoid, carrier, moment)
    for (x, g), y in act.items():
        if g not in arrows or x not in carrier_set or y not in carrier_set:
            report.add("dangling-identifier", ("act", x, g, y))
    if not report.ok:
        return report

    for (x, g) in act:
        if moment[x] != groupoid.tgt[g]:
            report.add("action-domain", (x, g))
    for g in groupoid.arrows:
        for x in carrier:
            if moment[x] == groupoid.tgt[g] and (x, g) not in act:
                report.add("action-missing", (x, g))
    if not report.ok:
        return report

    moment_ok = True
    for (x, g), y in act.items():
        if moment[y] != groupoid.src[g]:
            report.add("action-moment", (x, g, y))
            moment_ok = False
    for x in carrier:
        if act[(x, groupoid.unit[moment[x]])] != x:
            report.add("action-unit", (x,))
    if moment_ok:
        for (x, g), y in act.items():
            for h in groupoid.arrows:
                if groupoid.src[g] == groupoid.tgt[h]:
                    if act[(y, h)] != act[(x, groupoid.comp[(g, h)])]:
                        report.add("action-composition", (x, g, h))
    return report


@dataclass(frozen=True)
class LeftAction:
    """A validated left groupoid action; construct through :meth:`from_tables`."""

    groupoid: FiniteGroupoid
    carrier: tuple
    moment: dict
    act: dict
    tensor: object = field(default=None, compare=False, repr=False)

    side = "left"

    @classmethod
    def from_tables(cls, groupoid, carrier, moment, act, tensor=None) -> "LeftAction":
        report = validate_left_action(groupoid, carrier, moment, act)
        if not report.ok:
            raise ValidationFailed(report)
        return cls(groupoid=groupoid, carrier=sorted_idents(carrier),
                   moment=dict(moment), act=dict(act), tensor=tensor)

    def apply(self, g, x):
        try:
            return self.act[(g, x)]
        except KeyError:
            raise DomainMismatch(f"left action undefined on {(g, x)!r}") from None

    def moment_fibre(self, obj):
        return sorted_idents(x for x in self.carrier if self.moment[x] == obj)

    def orbits(self) -> OrbitPartition:
        return OrbitPartition.from_edges(
            self.carrier, ((x, y) for (g, x), y in self.act.items()))

    def is_free(self) -> bool:
        return all(g == self.groupoid.unit[self.moment[x]]
                   for (g, x), y in self.act.items() if y == x)


@dataclass(frozen=True)
class RightAction:
    """A validated right groupoid action; construct through :meth:`from_tables`."""

    groupoid: FiniteGroupoid
    carrier: tuple
    moment: dict
    act: dict
    tensor: object = field(default=None, compare=False, repr=False)

    side = "right"

    @classmethod
    def from_tables(cls, groupoid, carrier, moment, act, tensor=None) -> "RightAction":
        report = validate_right_action(groupoid, carrier, moment, act)
        if not report.ok:
            raise ValidationFailed(report)
        return cls(groupoid=groupoid, carrier=sorted_idents(carrier),
                   moment=dict(moment), act=dict(act), tensor=tensor)

    def apply(self, x, g):
        try:
            return self.act[(x, g)]
        except KeyError:
            raise DomainMismatch(f"right action undefined on {(x, g)!r}") from None

    def moment_fibre(self, obj):
        return sorted_idents(x for x in self.carrier if self.moment[x] == obj)

    def orbits(self) -> OrbitPartition:
        return OrbitPartition.from_edges(
            self.carrier, ((x, y) for (x, g), y in self.act.items()))

    def is_free(self) -> bool:
        return all(g == self.groupoid.unit[self.moment[x]]
                   for (x, g), y in self.act.items() if y == x)


def action_orbit_space(action) -> OrbitPartition:
    return action.orbits()


def is_equivariant(mapping, source, target) -> bool:
    """Whether ``mapping`` intertwines moments and actions of two same-side actions."""
    if source.groupoid != target.groupoid or source.side != target.side:
        return False
    if set(mapping) != set(source.carrier):
        return False
    target_carrier = set(target.carrier)
    for x in source.carrier:
        y = mapping[x]
        if y not in target_carrier or source.moment[x] != target.moment[y]:
            return False
    if source.side == "left":
        return all(mapping[y] == target.act[(g, mapping[x])]
                   for (g, x), y in source.act.items())
    return all(mapping[y] == target.act[(mapping[x], g)]
               for (x, g), y in source.act.items())


@dataclass(frozen=True)
class EquivariantMap:
    """A checked equivariant map between two actions of the same groupoid."""

    source: object
    target: object
    mapping: dict

    @classmethod
    def checked(cls, source, target, mapping) -> "EquivariantMap":
        if not is_equivariant(mapping, source, target):
            report = ValidationReport("equivariant-map")
            report.add("not-equivariant", ())
            raise ValidationFailed(report)
        return cls(source=source, target=target, mapping=dict(mapping))

    def is_bijective(self) -> bool:
        values = set(self.mapping.values())
        return (len(values) == len(self.mapping)
                and values == set(self.target.carrier))

    def __call__(self, x):
        return self.mapping[x]


@dataclass(frozen=True)
class ActionMap:
    """The explicit map (g, x) ↦ (g·x, x) of a bundle, with enumerated ends."""

    domain: tuple
    codomain: tuple
    mapping: dict

    def is_bijection(self) -> bool:
        values = set(self.mapping.values())
        return (len(values) == len(self.mapping)
                and values == set(self.codomain))


@dataclass(frozen=True)
class GroupoidBundle:
    """An action together with an invariant projection onto a base set."""

    action: object  # LeftAction or RightAction
    base: tuple
    proj: dict

    @classmethod
    def from_parts(cls, action, base, proj) -> "GroupoidBundle":
        report = validate_bundle(action, base, proj)
        if not report.ok:
            raise ValidationFailed(report)
        return cls(action=action, base=sorted_idents(base), proj=dict(proj))

    @property
    def side(self):
        return self.action.side

    @property
    def carrier(self):
        return self.action.carrier

    def same_fibre_pairs(self):
        return tuple((x1, x2) for x1 in self.carrier for x2 in self.carrier
                     if self.proj[x1] == self.proj[x2])

    def action_map(self) -> ActionMap:
        act = self.action.act
        if self.side == "left":
            mapping = {(g, x): (y, x) for (g, x), y in act.items()}
        else:
            mapping = {(x, g): (y, x) for (x, g), y in act.items()}
        domain = tuple(sorted(mapping, key=ident_key))
        return ActionMap(domain=domain, codomain=self.same_fibre_pairs(),
                         mapping=mapping)

    def is_pre_principal(self) -> bool:
        return self.action_map().is_bijection()

    def is_fibre_transitive(self) -> bool:
        """Independent double-loop oracle for the transitivity half of pre-principality."""
        act = self.action.act
        for x1, x2 in self.same_fibre_pairs():
            if self.side == "left":
                hits = [g for g in self.action.groupoid.arrows
                        if act.get((g, x2)) == x1]
            else:
                hits = [g for g in self.action.groupoid.arrows
                        if act.get((x2, g)) == x1]
            if not hits:
                return False
        return True

    def is_free_and_fibre_transitive(self) -> bool:
        return self.action.is_free() and self.is_fibre_transitive()

    def is_subductive(self) -> bool:
        return {self.proj[x] for x in self.carrier} == set(self.base)

    def is_principal(self) -> bool:
        return self.is_subductive() and self.is_pre_principal()

    def division_map(self) -> "DivisionMap":
        """Invert the action map and keep the arrow component."""
        amap = self.action_map()
        if not amap.is_bijection():
            raise NotPrePrincipal("action map is not a bijection")
        if self.side == "left":
            table = {pair: g for (g, x), pair in amap.mapping.items()}
        else:
            table = {pair: g for (x, g), pair in amap.mapping.items()}
        return DivisionMap(bundle=self, table=table)


def validate_bundle(action, base, proj) -> ValidationReport:
    report = ValidationReport("bundle")
    base_set = set(base)
    for x in action.carrier:
        if x not in proj:
            report.add("projection-dangling", ("missing", x))
        elif proj[x] not in base_set:
            report.add("projection-dangling", ("value", x, proj[x]))
    if not report.ok:
        return report
    if action.side == "left":
        for (g, x), y in action.act.items():
            if proj[y] != proj[x]:
                report.add("projection-not-invariant", (g, x))
    else:
        for (x, g), y in action.act.items():
            if proj[y] != proj[x]:
                report.add("projection-not-invariant", (x, g))
    return report


@dataclass(frozen=True)
class DivisionMap:
    """⟨x1, x2⟩: the unique arrow carrying x2 to x1 within a projection fibre."""

    bundle: GroupoidBundle
    table: dict

    def at(self, x1, x2):
        try:
            return self.table[(x1, x2)]
        except KeyError:
            raise DomainMismatch(
                f"division undefined on {(x1, x2)!r} (different fibres?)") from None


def division_map_violations(bundle: GroupoidBundle, division: DivisionMap = None):
    """Check every division-map law on every defined pair; return violations.

    Laws, for a left bundle: ⟨x1,x2⟩·x2 = x1; source/target of ⟨x1,x2⟩ are the
    moments of x2/x1; ⟨x1,x2⟩⁻¹ = ⟨x2,x1⟩; ⟨x,x⟩ is the unit; and
    ⟨g·x1, x2⟩ = g∘⟨x1,x2⟩.  Right bundles check the mirrored laws.
    """
    division = division or bundle.division_map()
    action = bundle.action
    gpd = action.groupoid
    table = division.table
    out = []
    if set(table) != set(bundle.same_fibre_pairs()):
        out.append(Violation("division-domain", ()))
        return out
    for (x1, x2), g in table.items():
        if action.side == "left":
            if action.act.get((g, x2)) != x1:
                out.append(Violation("division-carries", (x1, x2)))
            if gpd.src[g] != action.moment[x2] or gpd.tgt[g] != action.moment[x1]:
                out.append(Violation("division-source-target", (x1, x2)))
        else:
            if action.act.get((x2, g)) != x1:
                out.append(Violation("division-carries", (x1, x2)))
            if gpd.src[g] != action.moment[x1] or gpd.tgt[g] != action.moment[x2]:
                out.append(Violation("division-source-target", (x1, x2)))
        if gpd.inv[g] != table[(x2, x1)]:
            out.append(Violation("division-inverse", (x1, x2)))
    for x in action.carrier:
        if table[(x, x)] != gpd.unit[action.moment[x]]:
            out.append(Violation("division-unit", (x,)))
    for (x1, x2), g0 in table.items():
        if action.side == "left":
            for h in gpd.arrows:
                if gpd.src[h] == action.moment[x1]:
                    moved = action.act[(h, x1)]
                    if table[(moved, x2)] != gpd.comp[(h, g0)]:
                        out.append(Violation("division-translation", (h, x1, x2)))
        else:
            for h in gpd.arrows:
                if action.moment[x1] == gpd.tgt[h]:
                    moved = action.act[(x1, h)]
                    if table[(moved, x2)] != gpd.comp[(g0, h)]:
                        out.append(Violation("division-translation", (x1, h, x2)))
    return out


def is_bundle_morphism(mapping, bundle1: GroupoidBundle, bundle2: GroupoidBundle) -> bool:
    """Equivariant map between bundles over the same base that preserves fibres."""
    if set(bundle1.base) != set(bundle2.base):
        return False
    if not is_equivariant(mapping, bundle1.action, bundle2.action):
        return False
    return all(bundle1.proj[x] == bundle2.proj[mapping[x]]
               for x in bundle1.carrier)


# -- canonical actions ---------------------------------------------------------


def left_translation_action(groupoid: FiniteGroupoid) -> LeftAction:
    """The groupoid acting on its own arrows from the left, along the target map."""
    return LeftAction.from_tables(
        groupoid, groupoid.arrows,
        {g: groupoid.tgt[g] for g in groupoid.arrows}, dict(groupoid.comp))


def right_translation_action(groupoid: FiniteGroupoid) -> RightAction:
    """The groupoid acting on its own arrows from the right, along the source map."""
    return RightAction.from_tables(
        groupoid, groupoid.arrows,
        {g: groupoid.src[g] for g in groupoid.arrows}, dict(groupoid.comp))


def object_action(groupoid: FiniteGroupoid) -> LeftAction:
    """The tautological action on the object set: g·x = tgt(g) when src(g) = x."""
    return LeftAction.from_tables(
        groupoid, groupoid.objects, {x: x for x in groupoid.objects},
        {(g, groupoid.src[g]): groupoid.tgt[g] for g in groupoid.arrows})


def self_bundle(groupoid: FiniteGroupoid) -> GroupoidBundle:
    """The left translation action over the object set, projected by source."""
    return GroupoidBundle.from_parts(
        left_translation_action(groupoid), groupoid.objects,
        {g: groupoid.src[g] for g in groupoid.arrows})
