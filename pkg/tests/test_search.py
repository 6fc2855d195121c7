"""Action/bibundle enumeration: validity, completeness spots, determinism."""

from moritakit import (
    enumerate_bibundles,
    enumerate_left_actions,
    enumerate_right_actions,
    pair_groupoid,
    unit_groupoid,
    validate_left_action,
    validate_right_action,
)


class TestActionEnumeration:
    def test_z2_involutions_on_three_points(self, z2):
        carrier = (0, 1, 2)
        moment = {x: "*" for x in carrier}
        actions = list(enumerate_left_actions(z2, carrier, moment))
        # the generator's image must be an involution: 4 of them on 3 points
        assert len(actions) == 4
        for act in actions:
            assert validate_left_action(z2, carrier, moment, act).ok

    def test_z3_on_three_points(self, z3):
        carrier = (0, 1, 2)
        moment = {x: "*" for x in carrier}
        actions = list(enumerate_left_actions(z3, carrier, moment))
        # order-dividing-3 permutations of a 3-set: identity plus two 3-cycles
        assert len(actions) == 3
        for act in actions:
            assert validate_left_action(z3, carrier, moment, act).ok

    def test_unbalanced_fibres_give_nothing(self):
        g = pair_groupoid(2)
        carrier = (0, 1, 2)
        moment = {0: 0, 1: 0, 2: 1}
        assert list(enumerate_left_actions(g, carrier, moment)) == []

    def test_pair_groupoid_balanced_fibres(self):
        g = pair_groupoid(2)
        carrier = (0, 1, 2, 3)
        moment = {0: 0, 1: 0, 2: 1, 3: 1}
        actions = list(enumerate_left_actions(g, carrier, moment))
        # determined by the bijection chosen for one crossing arrow
        assert len(actions) == 2
        for act in actions:
            assert validate_left_action(g, carrier, moment, act).ok

    def test_right_enumeration_mirrors(self, z2):
        carrier = (0, 1)
        moment = {x: "*" for x in carrier}
        actions = list(enumerate_right_actions(z2, carrier, moment))
        assert len(actions) == 2
        for act in actions:
            assert validate_right_action(z2, carrier, moment, act).ok

    def test_empty_carrier(self, z2):
        assert list(enumerate_left_actions(z2, (), {})) == [{}]


class TestBibundleEnumeration:
    def test_all_yielded_bibundles_validate(self, z2):
        two = unit_groupoid([0, 1])
        count = 0
        for bib in enumerate_bibundles(z2, two, 3, validate=True):
            count += 1
        assert count > 0

    def test_deterministic_order(self, z2, trivial_group):
        first = [b for b in enumerate_bibundles(z2, trivial_group, 3)]
        second = [b for b in enumerate_bibundles(z2, trivial_group, 3)]
        assert first == second

    def test_biprincipal_filter_is_sound(self, z2):
        from moritakit import is_biprincipal
        for bib in enumerate_bibundles(z2, z2, 3, biprincipal_only=True):
            assert is_biprincipal(bib)

    def test_biprincipal_filter_is_complete_within_bounds(self, z2):
        from moritakit import is_biprincipal
        everything = [b for b in enumerate_bibundles(z2, z2, 2)
                      if is_biprincipal(b)]
        filtered = list(enumerate_bibundles(z2, z2, 2, biprincipal_only=True))
        assert len(everything) == len(filtered)
        assert everything == filtered

    def test_counts_match_validated_mode(self, z2, trivial_group):
        plain = list(enumerate_bibundles(z2, trivial_group, 2))
        checked = list(enumerate_bibundles(z2, trivial_group, 2,
                                           validate=True))
        assert len(plain) == len(checked)
