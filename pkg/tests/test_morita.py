"""Biprincipality, certificates, the bounded Morita search, and invariants."""

import pytest

from moritakit import (
    BiequivariantMap,
    Bibundle,
    LeftAction,
    NotBiprincipal,
    NotPrePrincipal,
    RightAction,
    certificate_violations,
    compose_bibundles,
    decide_morita,
    enumerate_bibundles,
    fibrating_invariance_check,
    find_biequivariant_iso,
    identity_bibundle,
    is_biprincipal,
    left_translation_action,
    morita_equivalence_relation_checks,
    naturality_square_commutes,
    object_action,
    orbit_bijection,
    pair_groupoid,
    roundtrip_natural_iso,
    tensor_action_inverse,
    tensor_inverse_violations,
    transport_action,
    transport_map,
    unit_groupoid,
    verify_certificate,
    weak_inverse_witness,
)
from moritakit.actions import EquivariantMap
from moritakit.corpus import _linking_bibundle


def trivial_one_point_bibundle(z2, trivial_group):
    """A left action of Z2 on a point that is not free; never biprincipal."""
    left = LeftAction.from_tables(z2, ["p"], {"p": "*"},
                                  {(g, "p"): "p" for g in z2.arrows})
    right = RightAction.from_tables(
        trivial_group, ["p"], {"p": "*"},
        {("p", trivial_group.arrows[0]): "p"})
    return Bibundle.from_actions(left, right)


class TestIsBiprincipal:
    def test_identity_bibundles(self, z2, z3):
        for g in (z2, z3, pair_groupoid(2)):
            assert is_biprincipal(identity_bibundle(g))

    def test_linking_bibundle(self):
        assert is_biprincipal(_linking_bibundle(2, "1"))

    def test_z2_vs_trivial_exhaustive(self, z2, trivial_group):
        # no bibundle with carrier ≤ 3 is biprincipal; freeness of the Z2
        # action forces even fibres while right pre-principality forces
        # singleton fibres
        found = list(enumerate_bibundles(z2, trivial_group, 3,
                                         biprincipal_only=True))
        assert found == []
        all_bibundles = list(enumerate_bibundles(z2, trivial_group, 3))
        assert all_bibundles  # plenty of bibundles exist, none biprincipal
        assert not any(is_biprincipal(b) for b in all_bibundles)


class TestTensorActionInverse:
    def test_identity_pair_identities(self, z2, z3):
        for g in (z2, z3, pair_groupoid(2)):
            bib = identity_bibundle(g)
            psi = tensor_action_inverse(bib, bib)
            assert tensor_inverse_violations(psi) == []

    def test_composite_division_reduction(self, z2):
        bib = identity_bibundle(z2)
        psi = tensor_action_inverse(bib, bib)
        # Ψ's arrow component is the unique g with g·(class2) = class1, which
        # for translation actions is division by composition
        for (rep1, rep2), (arrow, kept) in psi.backward.items():
            assert kept == rep2
            assert psi.forward[(arrow, rep2)] == (rep1, rep2)

    def test_rejects_non_pre_principal(self, z2, trivial_group):
        bad = trivial_one_point_bibundle(z2, trivial_group)
        with pytest.raises(NotPrePrincipal):
            tensor_action_inverse(bad, identity_bibundle(trivial_group))


class TestWeakInverseWitness:
    def test_identity_witness_is_division_by_inverse(self, z3):
        certificate = weak_inverse_witness(identity_bibundle(z3))
        for (g1, g2), value in certificate.iso_g.mapping.items():
            assert value == z3.comp[(g1, z3.inv[g2])]

    def test_linking_iso_h_single_class(self):
        link = _linking_bibundle(2, "1")
        certificate = weak_inverse_witness(link)
        # X̄⊗X over pair(2) collapses to one class per arrow of the point
        assert len(certificate.iso_h.mapping) == 1

    def test_certificate_verifies(self, z2):
        for bib in (identity_bibundle(z2), _linking_bibundle(2, "1")):
            certificate = weak_inverse_witness(bib)
            assert verify_certificate(certificate)

    def test_rejects_non_biprincipal(self, z2, trivial_group):
        with pytest.raises(NotBiprincipal):
            weak_inverse_witness(trivial_one_point_bibundle(z2, trivial_group))


class TestVerifyCertificate:
    def test_tampered_iso_fails(self, z3):
        # a transposition of two images is a bijection but (unlike a
        # translation) not equivariant for Z3
        certificate = weak_inverse_witness(identity_bibundle(z3))
        reps = sorted(certificate.iso_g.mapping)
        mapping = dict(certificate.iso_g.mapping)
        mapping[reps[0]], mapping[reps[1]] = mapping[reps[1]], mapping[reps[0]]
        broken = type(certificate)(
            bibundle=certificate.bibundle, inverse=certificate.inverse,
            iso_g=BiequivariantMap(source=certificate.iso_g.source,
                                   target=certificate.iso_g.target,
                                   mapping=mapping),
            iso_h=certificate.iso_h)
        assert not verify_certificate(broken)
        assert any("iso_g" in p for p in certificate_violations(broken))

    def test_corrupted_inverse_action_fails(self, z2):
        certificate = weak_inverse_witness(identity_bibundle(z2))
        inverse = certificate.inverse
        act = dict(inverse.left.act)
        key = next(iter(act))
        other = next(v for v in inverse.carrier if v != act[key])
        act[key] = other
        corrupted = Bibundle(
            left=LeftAction(inverse.left.groupoid, inverse.left.carrier,
                            inverse.left.moment, act),
            right=inverse.right)
        broken = type(certificate)(
            bibundle=certificate.bibundle, inverse=corrupted,
            iso_g=certificate.iso_g, iso_h=certificate.iso_h)
        assert not verify_certificate(broken)


class TestDecideMorita:
    def test_z2_self_equivalence(self, z2):
        result = decide_morita(z2, z2, 2)
        assert result.certificate is not None
        assert len(result.certificate.bibundle.carrier) == 2
        assert verify_certificate(result.certificate)
        again = decide_morita(z2, z2, 2)
        assert again.certificate.bibundle == result.certificate.bibundle

    def test_pair_vs_point_found(self, trivial_group):
        result = decide_morita(pair_groupoid(2), trivial_group, 2)
        assert result.certificate is not None
        assert len(result.certificate.bibundle.carrier) == 2
        assert verify_certificate(result.certificate)

    def test_z2_vs_point_absent(self, z2, trivial_group):
        result = decide_morita(z2, trivial_group, 3)
        assert result.certificate is None
        assert not result
        assert result.budget == 3

    def test_first_found_is_isomorphic_to_identity(self, z2):
        result = decide_morita(z2, z2, 2)
        found = result.certificate.bibundle
        assert find_biequivariant_iso(found, identity_bibundle(z2)) is not None

    def test_transitive_groupoid_equivalent_to_isotropy(self):
        from moritakit import transitive_groupoid, group_as_groupoid
        elements = [0, 1]
        mult = {(a, b): (a + b) % 2 for a in elements for b in elements}
        big = transitive_groupoid(2, elements, mult)
        small = group_as_groupoid(elements, mult)
        result = decide_morita(big, small, 4)
        assert result.certificate is not None
        assert len(result.certificate.bibundle.carrier) == 4


class TestEquivalenceRelation:
    def test_sweep(self, z2):
        named = [("id:Z2", identity_bibundle(z2)),
                 ("link", _linking_bibundle(2, "1"))]
        results = morita_equivalence_relation_checks(named)
        assert results
        assert all(passed for _, _, passed in results)
        checks = {check for check, _, _ in results}
        assert checks == {"reflexivity", "symmetry", "transitivity"}


class TestOrbitBijection:
    def test_identity_bibundle_gives_identity(self, z3):
        for g in (z3, pair_groupoid(2), unit_groupoid("ab")):
            bijection = orbit_bijection(identity_bibundle(g))
            for rep, image in bijection.forward.items():
                assert rep == image

    def test_linking_single_orbit_pair(self):
        bijection = orbit_bijection(_linking_bibundle(2, "1"))
        assert len(bijection.forward) == 1
        assert len(bijection.backward) == 1

    def test_requires_biprincipal(self, z2, trivial_group):
        with pytest.raises(NotBiprincipal):
            orbit_bijection(trivial_one_point_bibundle(z2, trivial_group))


class TestFibratingInvariance:
    def test_identity_always_true(self, z2):
        for g in (z2, pair_groupoid(2), unit_groupoid("ab")):
            assert fibrating_invariance_check(identity_bibundle(g))

    def test_linking_both_fibrating(self):
        link = _linking_bibundle(2, "1")
        assert link.left_groupoid.is_fibrating()
        assert link.right_groupoid.is_fibrating()
        assert fibrating_invariance_check(link)

    def test_requires_biprincipal(self, z2, trivial_group):
        with pytest.raises(NotBiprincipal):
            fibrating_invariance_check(
                trivial_one_point_bibundle(z2, trivial_group))


class TestTransport:
    def test_transport_along_identity_matches_unitor(self, z2):
        bib = identity_bibundle(z2)
        action = object_action(z2)
        transported = transport_action(bib, action)
        assert transported.orbits().class_count == action.orbits().class_count
        # explicit equivariant bijection h⊗y ↦ h·y
        unitor_like = {rep: action.act[rep] for rep in transported.carrier}
        EquivariantMap.checked(transported, action, unitor_like)

    def test_transport_of_identity_map_is_identity(self, z2):
        bib = identity_bibundle(z2)
        action = left_translation_action(z2)
        identity = EquivariantMap.checked(action, action,
                                          {x: x for x in action.carrier})
        lifted = transport_map(bib, identity)
        assert all(lifted.mapping[rep] == rep for rep in lifted.source.carrier)

    def test_transport_preserves_orbit_counts(self):
        link = _linking_bibundle(2, "1")
        point = link.right_groupoid
        action = object_action(point)
        transported = transport_action(link, action)
        assert transported.orbits().class_count == \
            action.orbits().class_count


class TestRoundtrip:
    def test_mu_class_count(self, z2):
        bib = identity_bibundle(z2)
        action = left_translation_action(z2)
        mu = roundtrip_natural_iso(bib, action)
        assert mu.is_bijective()
        assert len(mu.source.carrier) == len(action.carrier)

    def test_naturality_identity_map(self, z2):
        bib = identity_bibundle(z2)
        action = left_translation_action(z2)
        identity = EquivariantMap.checked(action, action,
                                          {x: x for x in action.carrier})
        assert naturality_square_commutes(bib, identity)

    def test_naturality_collapse_map(self, z3):
        bib = identity_bibundle(z3)
        source = left_translation_action(z3)
        target = object_action(z3)
        collapse = EquivariantMap.checked(source, target,
                                          {g: z3.tgt[g] for g in z3.arrows})
        assert naturality_square_commutes(bib, collapse)

    def test_mu_through_linking(self):
        link = _linking_bibundle(2, "1")
        action = object_action(link.right_groupoid)
        mu = roundtrip_natural_iso(link, action)
        assert mu.is_bijective()
        assert len(mu.source.carrier) == len(action.carrier)


class TestFindBiequivariantIso:
    def test_finds_self_iso(self, z2):
        bib = identity_bibundle(z2)
        mapping = find_biequivariant_iso(bib, bib)
        assert mapping is not None
        from moritakit import is_biequivariant_iso
        assert is_biequivariant_iso(mapping, bib, bib)

    def test_distinguishes_non_isomorphic(self, z2, trivial_group):
        bib = identity_bibundle(z2)
        other = trivial_one_point_bibundle(z2, trivial_group)
        assert find_biequivariant_iso(bib, other) is None
