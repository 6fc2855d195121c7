"""Bibundles, balanced tensor products, composition, and coherence witnesses.

A bibundle carries commuting left-G and right-H actions whose moment maps are
mutually invariant.  Composition is the balanced tensor product: the fibred
product of carriers quotiented by the diagonal action of the middle groupoid.
Tensor classes are named by their ident_key-least representative pair, so every
construction here is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    GroupoidMismatch,
    IllDefined,
    ValidationFailed,
    ValidationReport,
    Violation,
)
from .actions import (
    GroupoidBundle,
    LeftAction,
    RightAction,
    left_translation_action,
    right_translation_action,
)
from .groupoid import FiniteGroupoid, UnionFind, ident_key, sorted_idents


def validate_bibundle(left: LeftAction, right: RightAction) -> ValidationReport:
    """Check the bibundle conditions on a pair of already-valid actions."""
    report = ValidationReport("bibundle")
    if set(left.carrier) != set(right.carrier):
        report.add("carrier-mismatch", (len(left.carrier), len(right.carrier)))
        return report
    for (x, h), y in right.act.items():
        if left.moment[y] != left.moment[x]:
            report.add("left-moment-not-invariant", (x, h))
    for (g, x), y in left.act.items():
        if right.moment[y] != right.moment[x]:
            report.add("right-moment-not-invariant", (g, x))
    if not report.ok:
        return report
    for (g, x), gx in left.act.items():
        for h in right.groupoid.arrows:
            if right.moment[x] == right.groupoid.tgt[h]:
                if right.act[(gx, h)] != left.act[(g, right.act[(x, h)])]:
                    report.add("actions-do-not-commute", (g, x, h))
    return report


@dataclass(frozen=True)
class PrincipalityFlags:
    """The four principality flags of a bibundle's two underlying bundles."""

    left_subductive: bool
    right_subductive: bool
    left_pre_principal: bool
    right_pre_principal: bool

    @property
    def left_principal(self):
        return self.left_subductive and self.left_pre_principal

    @property
    def right_principal(self):
        return self.right_subductive and self.right_pre_principal

    @property
    def biprincipal(self):
        return self.left_principal and self.right_principal

    def swapped(self) -> "PrincipalityFlags":
        return PrincipalityFlags(self.right_subductive, self.left_subductive,
                                 self.right_pre_principal, self.left_pre_principal)


@dataclass(frozen=True)
class Bibundle:
    """Commuting left and right actions on one carrier; see :meth:`from_actions`."""

    left: LeftAction
    right: RightAction
    tensor: object = field(default=None, compare=False, repr=False)

    @classmethod
    def from_actions(cls, left, right, tensor=None) -> "Bibundle":
        report = validate_bibundle(left, right)
        if not report.ok:
            raise ValidationFailed(report)
        return cls(left=left, right=right, tensor=tensor)

    @property
    def carrier(self):
        return self.left.carrier

    @property
    def left_groupoid(self) -> FiniteGroupoid:
        return self.left.groupoid

    @property
    def right_groupoid(self) -> FiniteGroupoid:
        return self.right.groupoid

    @property
    def left_moment(self):
        return self.left.moment

    @property
    def right_moment(self):
        return self.right.moment

    def left_bundle(self) -> GroupoidBundle:
        """The underlying left bundle: the left action projected by the right moment."""
        return GroupoidBundle.from_parts(
            self.left, self.right_groupoid.objects, dict(self.right.moment))

    def right_bundle(self) -> GroupoidBundle:
        """The underlying right bundle: the right action projected by the left moment."""
        return GroupoidBundle.from_parts(
            self.right, self.left_groupoid.objects, dict(self.left.moment))

    def principality(self) -> PrincipalityFlags:
        lb, rb = self.left_bundle(), self.right_bundle()
        return PrincipalityFlags(
            left_subductive=lb.is_subductive(),
            right_subductive=rb.is_subductive(),
            left_pre_principal=lb.is_pre_principal(),
            right_pre_principal=rb.is_pre_principal())

    def opposite(self) -> "Bibundle":
        """Swap the moment maps and act through inverses; an involution."""
        gl, gr = self.left_groupoid, self.right_groupoid
        opp_left = LeftAction.from_tables(
            gr, self.carrier, dict(self.right.moment),
            {(h, x): self.right.act[(x, gr.inv[h])]
             for x in self.carrier for h in gr.arrows
             if gr.src[h] == self.right.moment[x]})
        opp_right = RightAction.from_tables(
            gl, self.carrier, dict(self.left.moment),
            {(x, g): self.left.act[(gl.inv[g], x)]
             for x in self.carrier for g in gl.arrows
             if gl.tgt[g] == self.left.moment[x]})
        return Bibundle.from_actions(opp_left, opp_right)

    def __repr__(self):
        return (f"Bibundle({len(self.left_groupoid.arrows)}-arrow groupoid ⟲ "
                f"{len(self.carrier)} points ⟲ "
                f"{len(self.right_groupoid.arrows)}-arrow groupoid)")


def bibundle_principality(bibundle: Bibundle) -> PrincipalityFlags:
    return bibundle.principality()


def identity_bibundle(groupoid: FiniteGroupoid) -> Bibundle:
    """The groupoid's arrow space acting on itself from both sides."""
    return Bibundle.from_actions(left_translation_action(groupoid),
                                 right_translation_action(groupoid))


def opposite_bibundle(bibundle: Bibundle) -> Bibundle:
    return bibundle.opposite()


# -- balanced tensor product ---------------------------------------------------


@dataclass(frozen=True)
class BalancedTensor:
    """Quotient of a fibred product of carriers by the diagonal middle action.

    ``pairs`` is the fibred product {(x, y) : r(x) = l(y)}; classes are orbits
    of (x, y)·h = (x·h, h⁻¹·y), named by their least member.
    """

    xside: RightAction
    yside: LeftAction
    pairs: tuple
    class_of: dict
    classes: dict  # representative -> sorted members

    @property
    def reps(self):
        return sorted_idents(self.classes)

    @property
    def class_count(self):
        return len(self.classes)

    def rep_of(self, x, y):
        return self.class_of[(x, y)]

    def members(self, rep):
        return self.classes[rep]


def balanced_tensor(xside: RightAction, yside: LeftAction) -> BalancedTensor:
    if xside.groupoid != yside.groupoid:
        raise GroupoidMismatch("tensor factors act along different groupoids")
    mid = xside.groupoid
    pairs = sorted_idents((x, y) for x in xside.carrier for y in yside.carrier
                          if xside.moment[x] == yside.moment[y])
    uf = UnionFind(pairs)
    for x, y in pairs:
        for h in mid.arrows:
            if mid.tgt[h] == xside.moment[x]:
                uf.union((x, y),
                         (xside.act[(x, h)], yside.act[(mid.inv[h], y)]))
    classes = uf.classes()
    class_of = {p: rep for rep, members in classes.items() for p in members}
    return BalancedTensor(xside=xside, yside=yside, pairs=pairs,
                          class_of=class_of, classes=classes)


def induced_left_action(bibundle: Bibundle, action: LeftAction) -> LeftAction:
    """The left action g·(x⊗y) = (g·x)⊗y on a balanced tensor product.

    Well-definedness over every representative of every class is asserted,
    not assumed; a failure raises IllDefined and means a bug.
    """
    tensor = balanced_tensor(bibundle.right, action)
    gpd = bibundle.left_groupoid
    moment = {}
    for rep, members in tensor.classes.items():
        values = {bibundle.left.moment[x] for x, _ in members}
        if len(values) != 1:
            raise IllDefined(f"moment not constant on class {rep!r}")
        moment[rep] = values.pop()
    act = {}
    for rep, members in tensor.classes.items():
        for g in gpd.arrows:
            if gpd.src[g] != moment[rep]:
                continue
            images = {tensor.class_of[(bibundle.left.act[(g, x)], y)]
                      for x, y in members}
            if len(images) != 1:
                raise IllDefined(f"action not constant on class {rep!r}")
            act[(g, rep)] = images.pop()
    return LeftAction.from_tables(gpd, tensor.reps, moment, act, tensor=tensor)


def induced_right_action(action: RightAction, bibundle: Bibundle,
                         tensor: BalancedTensor) -> RightAction:
    """The right action (x⊗y)·k = x⊗(y·k) on an existing tensor of classes."""
    gpd = bibundle.right_groupoid
    moment = {}
    for rep, members in tensor.classes.items():
        values = {bibundle.right.moment[y] for _, y in members}
        if len(values) != 1:
            raise IllDefined(f"moment not constant on class {rep!r}")
        moment[rep] = values.pop()
    act = {}
    for rep, members in tensor.classes.items():
        for k in gpd.arrows:
            if moment[rep] != gpd.tgt[k]:
                continue
            images = {tensor.class_of[(x, bibundle.right.act[(y, k)])]
                      for x, y in members}
            if len(images) != 1:
                raise IllDefined(f"action not constant on class {rep!r}")
            act[(rep, k)] = images.pop()
    return RightAction.from_tables(gpd, tensor.reps, moment, act, tensor=tensor)


def compose_bibundles(first: Bibundle, second: Bibundle) -> Bibundle:
    """Balanced tensor product of a (G,H)- and an (H,K)-bibundle."""
    if first.right_groupoid != second.left_groupoid:
        raise GroupoidMismatch("middle groupoids differ")
    left = induced_left_action(first, second.left)
    right = induced_right_action(second.right, second, left.tensor)
    return Bibundle.from_actions(left, right, tensor=left.tensor)


# -- biequivariant maps ---------------------------------------------------------


@dataclass(frozen=True)
class BiequivariantMap:
    """A map of bibundle carriers intertwining both moments and both actions."""

    source: Bibundle
    target: Bibundle
    mapping: dict

    def __call__(self, x):
        return self.mapping[x]

    def is_iso(self) -> bool:
        return is_biequivariant_iso(self.mapping, self.source, self.target)

    def inverse(self) -> "BiequivariantMap":
        inverted = {y: x for x, y in self.mapping.items()}
        if len(inverted) != len(self.mapping):
            raise IllDefined("map is not injective; no inverse")
        return BiequivariantMap(source=self.target, target=self.source,
                                mapping=inverted)

    @classmethod
    def checked_iso(cls, source, target, mapping) -> "BiequivariantMap":
        if not is_biequivariant_iso(mapping, source, target):
            report = ValidationReport("biequivariant-map")
            report.add("not-biequivariant-iso", ())
            raise ValidationFailed(report)
        return cls(source=source, target=target, mapping=dict(mapping))


def is_biequivariant(mapping, source: Bibundle, target: Bibundle) -> bool:
    if (source.left_groupoid != target.left_groupoid
            or source.right_groupoid != target.right_groupoid):
        return False
    if set(mapping) != set(source.carrier):
        return False
    target_carrier = set(target.carrier)
    for x in source.carrier:
        y = mapping[x]
        if y not in target_carrier:
            return False
        if (source.left_moment[x] != target.left_moment[y]
                or source.right_moment[x] != target.right_moment[y]):
            return False
    for (g, x), y in source.left.act.items():
        if mapping[y] != target.left.act[(g, mapping[x])]:
            return False
    for (x, h), y in source.right.act.items():
        if mapping[y] != target.right.act[(mapping[x], h)]:
            return False
    return True


def is_biequivariant_iso(mapping, source: Bibundle, target: Bibundle) -> bool:
    if not is_biequivariant(mapping, source, target):
        return False
    values = set(mapping.values())
    return len(values) == len(mapping) and values == set(target.carrier)


# -- coherence witnesses ---------------------------------------------------------


def _well_defined_map(classes, value_of, what):
    """Evaluate value_of on every member of every class; assert agreement."""
    mapping = {}
    for rep, members in classes.items():
        values = {value_of(member) for member in members}
        if len(values) != 1:
            raise IllDefined(f"{what} differs across class {rep!r}")
        mapping[rep] = values.pop()
    return mapping


def left_unitor(bibundle: Bibundle) -> BiequivariantMap:
    """G⊗X → X through the action, g⊗x ↦ g·x; a biequivariant bijection."""
    composite = compose_bibundles(identity_bibundle(bibundle.left_groupoid),
                                  bibundle)
    mapping = _well_defined_map(
        composite.tensor.classes,
        lambda pair: bibundle.left.act[pair], "left unitor")
    return BiequivariantMap.checked_iso(composite, bibundle, mapping)


def right_unitor(bibundle: Bibundle) -> BiequivariantMap:
    """X⊗H → X through the action, x⊗h ↦ x·h; a biequivariant bijection."""
    composite = compose_bibundles(bibundle,
                                  identity_bibundle(bibundle.right_groupoid))
    mapping = _well_defined_map(
        composite.tensor.classes,
        lambda pair: bibundle.right.act[pair], "right unitor")
    return BiequivariantMap.checked_iso(composite, bibundle, mapping)


def associator(first: Bibundle, second: Bibundle, third: Bibundle) -> BiequivariantMap:
    """(X⊗Y)⊗Z → X⊗(Y⊗Z) by reassociating representative pairs."""
    comp12 = compose_bibundles(first, second)
    comp23 = compose_bibundles(second, third)
    left_way = compose_bibundles(comp12, third)
    right_way = compose_bibundles(first, comp23)

    def reassociate(member):
        (pair12, z) = member
        values = {right_way.tensor.class_of[
            (x, comp23.tensor.class_of[(y, z)])]
            for x, y in comp12.tensor.members(pair12)}
        if len(values) != 1:
            raise IllDefined("associator differs across inner class")
        return values.pop()

    mapping = _well_defined_map(left_way.tensor.classes, reassociate,
                                "associator")
    return BiequivariantMap.checked_iso(left_way, right_way, mapping)


def bibundle_division_violations(bibundle: Bibundle):
    """The two division laws that involve the other-side action.

    For a left pre-principal bibundle: ⟨x1·h, x2·h⟩ = ⟨x1,x2⟩ and, through the
    opposite action, ⟨x1, x2·g... g⁻¹·x2⟩ stated as ⟨x1, x2·g⟩ = ⟨x1,x2⟩∘g for
    arrows g of the left groupoid acting oppositely.
    """
    out = []
    division = bibundle.left_bundle().division_map()
    gl, gr = bibundle.left_groupoid, bibundle.right_groupoid
    for (x1, x2), g0 in division.table.items():
        for h in gr.arrows:
            if (bibundle.right_moment[x1] == gr.tgt[h]
                    and bibundle.right_moment[x2] == gr.tgt[h]):
                moved = (bibundle.right.act[(x1, h)], bibundle.right.act[(x2, h)])
                if division.table.get(moved) != g0:
                    out.append(Violation("division-right-invariance", (x1, x2, h)))
        for g in gl.arrows:
            if gl.tgt[g] == bibundle.left_moment[x2]:
                opposite_moved = bibundle.left.act[(gl.inv[g], x2)]
                if (x1, opposite_moved) in division.table:
                    if division.table[(x1, opposite_moved)] != gl.comp[(g0, g)]:
                        out.append(Violation("division-opposite-action", (x1, x2, g)))
    return out
