"""Biprincipality witnesses, bounded Morita search, and the Morita invariants.

The forward direction produces explicit certificates: for a biprincipal
bibundle the opposite bibundle is a weak inverse, witnessed by division-map
isomorphisms onto the identity bibundles.  The converse is sampled exhaustively
by `enumerate_bibundles` within a carrier budget.  Invariants: orbit-space
bijection, fibrating invariance, and the action-category round trip μ.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GroupoidMismatch,
    IllDefined,
    MoritakitError,
    NotBiprincipal,
    NotPrePrincipal,
)
from .actions import EquivariantMap, LeftAction
from .bibundles import (
    BiequivariantMap,
    Bibundle,
    _well_defined_map,
    compose_bibundles,
    identity_bibundle,
    induced_left_action,
    is_biequivariant_iso,
    validate_bibundle,
)
from .groupoid import FiniteGroupoid
from .actions import validate_left_action, validate_right_action
from .search import enumerate_bibundles


def is_biprincipal(bibundle: Bibundle) -> bool:
    return bibundle.principality().biprincipal


@dataclass(frozen=True)
class MoritaCertificate:
    """A biprincipal bibundle with its weak inverse and the two witness isos."""

    bibundle: Bibundle
    inverse: Bibundle
    iso_g: BiequivariantMap  # compose(bibundle, inverse) → identity of G
    iso_h: BiequivariantMap  # compose(inverse, bibundle) → identity of H

    @property
    def left_groupoid(self):
        return self.bibundle.left_groupoid

    @property
    def right_groupoid(self):
        return self.bibundle.right_groupoid


def weak_inverse_witness(bibundle: Bibundle) -> MoritaCertificate:
    """Certificate that the opposite bibundle is a weak inverse.

    iso_g sends x1⊗x2 to the unique arrow of G carrying x2 to x1; iso_h is
    built the same way from the opposite bibundle's division map.
    """
    if not is_biprincipal(bibundle):
        raise NotBiprincipal("weak_inverse_witness needs a biprincipal bibundle")
    inverse = bibundle.opposite()

    towards_g = compose_bibundles(bibundle, inverse)
    division_g = bibundle.left_bundle().division_map()
    iso_g = BiequivariantMap.checked_iso(
        towards_g, identity_bibundle(bibundle.left_groupoid),
        _well_defined_map(towards_g.tensor.classes,
                          lambda pair: division_g.table[pair], "iso_g"))

    towards_h = compose_bibundles(inverse, bibundle)
    division_h = inverse.left_bundle().division_map()
    iso_h = BiequivariantMap.checked_iso(
        towards_h, identity_bibundle(bibundle.right_groupoid),
        _well_defined_map(towards_h.tensor.classes,
                          lambda pair: division_h.table[pair], "iso_h"))

    return MoritaCertificate(bibundle=bibundle, inverse=inverse,
                             iso_g=iso_g, iso_h=iso_h)


def certificate_violations(certificate: MoritaCertificate):
    """Re-validate every part of a claimed certificate; returns failure strings."""
    problems = []
    b, c = certificate.bibundle, certificate.inverse
    try:
        for bib, tag in ((b, "bibundle"), (c, "inverse")):
            for action, validator in ((bib.left, validate_left_action),
                                      (bib.right, validate_right_action)):
                report = validator(action.groupoid, action.carrier,
                                   action.moment, action.act)
                if not report.ok:
                    problems.append(f"{tag}: {report}")
            report = validate_bibundle(bib.left, bib.right)
            if not report.ok:
                problems.append(f"{tag}: {report}")
        if problems:
            return problems
        if (c.left_groupoid != b.right_groupoid
                or c.right_groupoid != b.left_groupoid):
            return problems + ["inverse connects the wrong groupoids"]
        towards_g = compose_bibundles(b, c)
        towards_h = compose_bibundles(c, b)
        if not is_biequivariant_iso(certificate.iso_g.mapping, towards_g,
                                    identity_bibundle(b.left_groupoid)):
            problems.append("iso_g is not a biequivariant isomorphism")
        if not is_biequivariant_iso(certificate.iso_h.mapping, towards_h,
                                    identity_bibundle(b.right_groupoid)):
            problems.append("iso_h is not a biequivariant isomorphism")
    except (MoritakitError, KeyError) as exc:
        problems.append(f"certificate re-validation failed: {exc!r}")
    return problems


def verify_certificate(certificate: MoritaCertificate) -> bool:
    return not certificate_violations(certificate)


@dataclass(frozen=True)
class MoritaSearchResult:
    """Outcome of a budgeted search; `certificate is None` means absent.

    `examined` counts complete bibundle candidates that reached the final
    biprincipality test — informational metadata, not a failure signal.
    """

    certificate: object
    examined: int
    budget: int

    def __bool__(self):
        return self.certificate is not None


def decide_morita(left_groupoid: FiniteGroupoid, right_groupoid: FiniteGroupoid,
                  carrier_budget: int) -> MoritaSearchResult:
    """Search carriers of size ≤ budget for a biprincipal bibundle.

    Deterministic: returns a certificate for the first biprincipal bibundle in
    canonical enumeration order, or an absent result once the budget is
    exhausted.  Sound by construction (the certificate re-verifies); complete
    only up to the budget.
    """
    stats = {"candidates": 0}
    for bib in enumerate_bibundles(left_groupoid, right_groupoid,
                                   carrier_budget, biprincipal_only=True,
                                   stats=stats):
        return MoritaSearchResult(certificate=weak_inverse_witness(bib),
                                  examined=stats["candidates"],
                                  budget=carrier_budget)
    return MoritaSearchResult(certificate=None, examined=stats["candidates"],
                              budget=carrier_budget)


# -- the balanced-tensor action-map inverse Ψ -----------------------------------


@dataclass(frozen=True)
class TensorActionInverse:
    """Explicit two-sided inverse Ψ of the composite's left action map Φ."""

    composite: Bibundle
    forward: dict   # Φ: (g, class) -> (g·class, class)
    backward: dict  # Ψ: (class1, class2) -> (g, class2)


def tensor_action_inverse(first: Bibundle, second: Bibundle) -> TensorActionInverse:
    """Build Ψ(x1⊗y1, x2⊗y2) = (⟨x1·⟨y1,y2⟩, x2⟩, x2⊗y2) and check it inverts Φ.

    Well-definedness is checked over every representative pair of both classes.
    """
    flags1, flags2 = first.principality(), second.principality()
    if not (flags1.left_pre_principal and flags2.left_pre_principal):
        raise NotPrePrincipal("both bibundles must be left pre-principal")
    composite = compose_bibundles(first, second)
    division_x = first.left_bundle().division_map().table
    division_y = second.left_bundle().division_map().table
    tensor = composite.tensor

    forward = {(g, rep): (composite.left.act[(g, rep)], rep)
               for (g, rep) in composite.left.act}

    backward = {}
    reps = composite.carrier
    rmom = composite.right.moment
    for rep1 in reps:
        for rep2 in reps:
            if rmom[rep1] != rmom[rep2]:
                continue
            values = set()
            for x1, y1 in tensor.members(rep1):
                for x2, y2 in tensor.members(rep2):
                    h = division_y[(y1, y2)]
                    moved = first.right.act[(x1, h)]
                    values.add(division_x[(moved, x2)])
            if len(values) != 1:
                raise IllDefined(
                    f"Ψ differs across representatives of {(rep1, rep2)!r}")
            backward[(rep1, rep2)] = (values.pop(), rep2)

    return TensorActionInverse(composite=composite, forward=forward,
                               backward=backward)


def tensor_inverse_violations(psi: TensorActionInverse):
    """Ψ∘Φ = id and Φ∘Ψ = id, elementwise."""
    problems = []
    for key, pair in psi.forward.items():
        if psi.backward.get(pair) != key:
            problems.append(("psi-after-phi", key))
    for key, pair in psi.backward.items():
        if psi.forward.get(pair) != key:
            problems.append(("phi-after-psi", key))
    return problems


# -- Morita invariants -----------------------------------------------------------


@dataclass(frozen=True)
class OrbitBijection:
    """Mutually inverse maps between the orbit partitions of two groupoids."""

    forward: dict
    backward: dict


def orbit_bijection(bibundle: Bibundle) -> OrbitBijection:
    """The orbit-space bijection induced by a biprincipal bibundle.

    For a G-orbit, every carrier point over every object of the orbit must
    project to the same H-orbit; that independence is re-checked over all
    choices rather than assumed.
    """
    if not is_biprincipal(bibundle):
        raise NotBiprincipal("orbit_bijection needs a biprincipal bibundle")
    orbits_g = bibundle.left_groupoid.orbit_space()
    orbits_h = bibundle.right_groupoid.orbit_space()
    lmom, rmom = bibundle.left_moment, bibundle.right_moment

    def one_direction(source_orbits, target_orbits, fibre_moment, push_moment):
        out = {}
        for rep, members in source_orbits.classes.items():
            images = {target_orbits.class_of[push_moment[x]]
                      for a in members for x in bibundle.carrier
                      if fibre_moment[x] == a}
            if len(images) != 1:
                raise IllDefined(f"orbit image not unique for class {rep!r}")
            out[rep] = images.pop()
        return out

    forward = one_direction(orbits_g, orbits_h, lmom, rmom)
    backward = one_direction(orbits_h, orbits_g, rmom, lmom)
    for rep, image in forward.items():
        if backward.get(image) != rep:
            raise IllDefined("orbit maps are not mutually inverse")
    for rep, image in backward.items():
        if forward.get(image) != rep:
            raise IllDefined("orbit maps are not mutually inverse")
    return OrbitBijection(forward=forward, backward=backward)


def fibrating_invariance_check(bibundle: Bibundle) -> bool:
    """Both groupoids of a biprincipal bibundle agree on being fibrating."""
    if not is_biprincipal(bibundle):
        raise NotBiprincipal("fibrating invariance needs a biprincipal bibundle")
    return (bibundle.left_groupoid.is_fibrating()
            == bibundle.right_groupoid.is_fibrating())


def transport_action(bibundle: Bibundle, action: LeftAction) -> LeftAction:
    """Carry an action of the right groupoid over to the left groupoid."""
    if action.groupoid != bibundle.right_groupoid:
        raise GroupoidMismatch("action is not along the bibundle's right groupoid")
    return induced_left_action(bibundle, action)


def transport_map(bibundle: Bibundle, phi: EquivariantMap) -> EquivariantMap:
    """Functorial image of an equivariant map: x⊗y ↦ x⊗φ(y)."""
    source = transport_action(bibundle, phi.source)
    target = transport_action(bibundle, phi.target)
    mapping = _well_defined_map(
        source.tensor.classes,
        lambda pair: target.tensor.class_of[(pair[0], phi.mapping[pair[1]])],
        "transported map")
    return EquivariantMap.checked(source, target, mapping)


def roundtrip_natural_iso(bibundle: Bibundle, action: LeftAction,
                          certificate: MoritaCertificate = None) -> EquivariantMap:
    """The equivariant bijection μ: X̄⊗(X⊗Y) → Y, elementwise x̄⊗(x⊗y) ↦ φ_H(x̄⊗x)·y.

    μ is the composite of the associator, the inverse-witness iso tensored with
    the identity, and the action map of Y, in that order.
    """
    if certificate is None:
        certificate = weak_inverse_witness(bibundle)
    inner = transport_action(bibundle, action)
    outer = transport_action(certificate.inverse, inner)
    toward_h = certificate.iso_h.source.tensor
    phi_h = certificate.iso_h.mapping

    def evaluate(member):
        xbar, inner_rep = member
        values = {action.act[(phi_h[toward_h.class_of[(xbar, x)]], y)]
                  for x, y in inner.tensor.members(inner_rep)}
        if len(values) != 1:
            raise IllDefined("μ differs across inner representatives")
        return values.pop()

    mapping = _well_defined_map(outer.tensor.classes, evaluate, "μ")
    mu = EquivariantMap.checked(outer, action, mapping)
    if not mu.is_bijective():
        raise IllDefined("μ is not a bijection")
    return mu


def naturality_square_commutes(bibundle: Bibundle, phi: EquivariantMap,
                               certificate: MoritaCertificate = None) -> bool:
    """φ∘μ_Y = μ_Z∘(id⊗(id⊗φ)) on every class of the round trip."""
    if certificate is None:
        certificate = weak_inverse_witness(bibundle)
    mu_y = roundtrip_natural_iso(bibundle, phi.source, certificate)
    mu_z = roundtrip_natural_iso(bibundle, phi.target, certificate)
    lifted = transport_map(certificate.inverse, transport_map(bibundle, phi))
    return all(phi.mapping[mu_y.mapping[c]] == mu_z.mapping[lifted.mapping[c]]
               for c in mu_y.source.carrier)


def morita_equivalence_relation_checks(named_bibundles):
    """Reflexivity, symmetry and transitivity, each re-verified with is_biprincipal.

    Takes (name, bibundle) pairs; only the biprincipal ones are exercised.
    Returns a list of (check, instance, passed) triples.
    """
    results = []
    biprincipal = [(name, bib) for name, bib in named_bibundles
                   if is_biprincipal(bib)]
    groupoids = []
    for name, bib in biprincipal:
        for tag, gpd in ((f"{name}.left", bib.left_groupoid),
                         (f"{name}.right", bib.right_groupoid)):
            if all(g != gpd for _, g in groupoids):
                groupoids.append((tag, gpd))
    for tag, gpd in groupoids:
        results.append(("reflexivity", tag,
                        is_biprincipal(identity_bibundle(gpd))))
    for name, bib in biprincipal:
        results.append(("symmetry", name, is_biprincipal(bib.opposite())))
    for name1, bib1 in biprincipal:
        for name2, bib2 in biprincipal:
            if bib1.right_groupoid == bib2.left_groupoid:
                results.append(
                    ("transitivity", f"{name1}∘{name2}",
                     is_biprincipal(compose_bibundles(bib1, bib2))))
    return results
