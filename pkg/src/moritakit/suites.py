"""Property-suite runner: executes the library's laws over a generated corpus.

Suites: axioms, division, coherence, morita-forward, morita-converse,
invariants-orbit, invariants-fibrating, invariants-actions.  Each suite yields
one result row per (instance, law) with a witness string on failure, so a
corrupted object pinpoints itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import MoritakitError, UnknownSuite
from .actions import (
    division_map_violations,
    is_bundle_morphism,
    validate_bundle,
    validate_left_action,
    validate_right_action,
)
from .bibundles import (
    associator,
    bibundle_division_violations,
    compose_bibundles,
    identity_bibundle,
    left_unitor,
    right_unitor,
    validate_bibundle,
)
from .corpus import Corpus
from .groupoid import (
    group_as_groupoid,
    pair_groupoid,
    unit_groupoid,
    validate_groupoid,
)
from .morita import (
    certificate_violations,
    decide_morita,
    fibrating_invariance_check,
    is_biprincipal,
    morita_equivalence_relation_checks,
    naturality_square_commutes,
    orbit_bijection,
    roundtrip_natural_iso,
    tensor_action_inverse,
    tensor_inverse_violations,
    transport_action,
    weak_inverse_witness,
)
from .search import enumerate_bibundles, find_biequivariant_iso

SUITE_NAMES = ("axioms", "division", "coherence", "morita-forward",
               "morita-converse", "invariants-orbit", "invariants-fibrating",
               "invariants-actions")

#: Above this many composable chains, the coherence suite samples (seeded).
COHERENCE_CHAIN_CAP = 600


@dataclass
class InstanceResult:
    instance: str
    law: str
    passed: bool
    witness: str = ""


@dataclass
class SuiteReport:
    suite: str
    results: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def record(self, instance, law, passed, witness=""):
        self.results.append(InstanceResult(instance, law, bool(passed),
                                           str(witness)))

    def guard(self, instance, law, thunk):
        """Run a check that signals failure by raising; record the outcome."""
        try:
            value = thunk()
        except MoritakitError as exc:
            self.record(instance, law, False, repr(exc))
            return None
        self.record(instance, law, True)
        return value

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r.passed]

    def summary(self) -> str:
        return (f"suite {self.suite}: {len(self.results)} checks, "
                f"{len(self.failures)} failed")


# -- mutation set (one violated axiom per case) ---------------------------------


def mutation_cases():
    """Raw-table mutations, each violating one named axiom family.

    Returns (name, expected kinds, thunk returning a ValidationReport).
    """
    cases = []

    def groupoid_case(name, expected, mutate):
        base = pair_groupoid(2)

        def run():
            tables = dict(objects=list(base.objects), arrows=list(base.arrows),
                          src=dict(base.src), tgt=dict(base.tgt),
                          unit=dict(base.unit), inv=dict(base.inv),
                          comp=dict(base.comp))
            mutate(tables)
            return validate_groupoid(**tables)

        cases.append((name, expected, run))

    groupoid_case("groupoid:dangling", {"dangling-identifier"},
                  lambda t: t["src"].__setitem__((0, 1), 7))
    groupoid_case("groupoid:comp-missing", {"composition-missing"},
                  lambda t: t["comp"].__delitem__(((0, 1), (1, 0))))
    groupoid_case("groupoid:comp-domain", {"composition-domain"},
                  lambda t: t["comp"].__setitem__(((0, 1), (0, 1)), (0, 1)))
    groupoid_case("groupoid:comp-src-tgt", {"composition-source-target"},
                  lambda t: t["comp"].__setitem__(((0, 1), (1, 0)), (1, 0)))
    groupoid_case("groupoid:unit-src-tgt", {"unit-source-target"},
                  lambda t: t["unit"].__setitem__(0, (1, 0)))
    groupoid_case("groupoid:inverse-src-tgt", {"inverse-source-target"},
                  lambda t: t["inv"].__setitem__((0, 1), (0, 1)))

    def z3_case(name, expected, mutate):
        base = group_as_groupoid(*_z3_tables())

        def run():
            tables = dict(objects=list(base.objects), arrows=list(base.arrows),
                          src=dict(base.src), tgt=dict(base.tgt),
                          unit=dict(base.unit), inv=dict(base.inv),
                          comp=dict(base.comp))
            mutate(tables)
            return validate_groupoid(**tables)

        cases.append((name, expected, run))

    z3_case("groupoid:associativity", {"associativity"},
            lambda t: t["comp"].__setitem__((1, 1), 0))
    z3_case("groupoid:unit-identity", {"unit-identity"},
            lambda t: t["comp"].__setitem__((0, 1), 2))
    z3_case("groupoid:inverse-involution", {"inverse-involution"},
            lambda t: t["inv"].update({1: 2, 2: 2}))
    z3_case("groupoid:inverse-identity", {"inverse-identity"},
            lambda t: t["inv"].update({1: 1, 2: 2}))

    base_gpd = pair_groupoid(2)
    base_act = {(g, h): base_gpd.comp[(g, h)] for (g, h) in base_gpd.comp}
    moment = {g: base_gpd.tgt[g] for g in base_gpd.arrows}

    def action_case(name, expected, mutate):
        def run():
            act = dict(base_act)
            mom = dict(moment)
            mutate(act, mom)
            return validate_left_action(base_gpd, base_gpd.arrows, mom, act)

        cases.append((name, expected, run))

    action_case("action:moment-dangling", {"moment-dangling"},
                lambda act, mom: mom.__setitem__((0, 0), 9))
    action_case("action:dangling", {"dangling-identifier"},
                lambda act, mom: act.__setitem__(((0, 0), (0, 0)), 9))
    action_case("action:domain", {"action-domain"},
                lambda act, mom: act.__setitem__(((0, 1), (0, 0)), (0, 0)))
    action_case("action:missing", {"action-missing"},
                lambda act, mom: act.__delitem__(((0, 0), (0, 0))))
    action_case("action:condition-1", {"action-moment"},
                lambda act, mom: act.__setitem__(((0, 1), (1, 0)), (1, 0)))
    action_case("action:condition-2", {"action-unit"},
                lambda act, mom: act.update({((0, 0), (0, 0)): (0, 1),
                                             ((0, 0), (0, 1)): (0, 0)}))
    action_case("action:condition-3", {"action-composition", "action-unit"},
                lambda act, mom: act.__setitem__(((0, 1), (1, 1)), (0, 0)))

    def right_action_case():
        gpd = pair_groupoid(2)
        act = {(h, g): gpd.comp[(h, g)] for (h, g) in gpd.comp}
        # (1,0)∘(0,1) = (1,1) with source 1; redirect to an arrow with source 0
        act[((1, 0), (0, 1))] = (0, 0)
        mom = {g: gpd.src[g] for g in gpd.arrows}
        return validate_right_action(gpd, gpd.arrows, mom, act)

    cases.append(("action:right-condition-1", {"action-moment", "action-composition"},
                  right_action_case))

    def bundle_case():
        gpd = group_as_groupoid([0, 1],
                                {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0})
        action_tables = {(g, h): gpd.comp[(g, h)] for (g, h) in gpd.comp}
        from .actions import LeftAction
        action = LeftAction.from_tables(gpd, gpd.arrows,
                                        {g: gpd.tgt[g] for g in gpd.arrows},
                                        action_tables)
        return validate_bundle(action, [0, 1], {0: 0, 1: 1})

    cases.append(("bundle:not-invariant", {"projection-not-invariant"},
                  bundle_case))

    def bibundle_commutation_case():
        from .actions import LeftAction, RightAction
        z2 = group_as_groupoid([0, 1],
                               {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0})
        carrier = [0, 1, 2, 3]
        sigma = {0: 1, 1: 0, 2: 3, 3: 2}   # left: (01)(23)
        tau = {0: 0, 1: 2, 2: 1, 3: 3}     # right: (12); does not commute
        left = LeftAction.from_tables(
            z2, carrier, {x: "*" for x in carrier},
            {(g, x): (sigma[x] if g == 1 else x)
             for g in z2.arrows for x in carrier})
        right = RightAction.from_tables(
            z2, carrier, {x: "*" for x in carrier},
            {(x, g): (tau[x] if g == 1 else x)
             for g in z2.arrows for x in carrier})
        return validate_bibundle(left, right)

    cases.append(("bibundle:commutation", {"actions-do-not-commute"},
                  bibundle_commutation_case))

    def bibundle_invariance_case():
        from .actions import LeftAction, RightAction
        z2 = group_as_groupoid([0, 1],
                               {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0})
        two = unit_groupoid(["a", "b"])
        carrier = [0, 1]
        left = LeftAction.from_tables(
            two, carrier, {0: "a", 1: "b"},
            {(two.unit["a"], 0): 0, (two.unit["b"], 1): 1})
        right = RightAction.from_tables(
            z2, carrier, {x: "*" for x in carrier},
            {(x, g): ((1 - x) if g == 1 else x)
             for g in z2.arrows for x in carrier})
        return validate_bibundle(left, right)

    cases.append(("bibundle:moment-invariance", {"left-moment-not-invariant"},
                  bibundle_invariance_case))
    return cases


def _z3_tables():
    return [0, 1, 2], {(a, b): (a + b) % 3 for a in range(3) for b in range(3)}


# -- individual suites ------------------------------------------------------------


def suite_axioms(corpus: Corpus) -> SuiteReport:
    report = SuiteReport("axioms")
    for item in corpus.groupoids:
        g = item.value
        ok = validate_groupoid(g.objects, g.arrows, g.src, g.tgt, g.unit,
                               g.inv, g.comp)
        report.record(item.name, "groupoid-axioms", ok.ok, ok if not ok.ok else "")
    for item in corpus.actions:
        a = item.value
        validator = (validate_left_action if a.side == "left"
                     else validate_right_action)
        ok = validator(a.groupoid, a.carrier, a.moment, a.act)
        report.record(item.name, "action-axioms", ok.ok, ok if not ok.ok else "")
    for item in corpus.bundles:
        ok = validate_bundle(item.value.action, item.value.base, item.value.proj)
        report.record(item.name, "bundle-axioms", ok.ok, ok if not ok.ok else "")
    for item in corpus.bibundles:
        ok = validate_bibundle(item.value.left, item.value.right)
        report.record(item.name, "bibundle-axioms", ok.ok, ok if not ok.ok else "")

    for name, expected, run in mutation_cases():
        outcome = run()
        detected = (not outcome.ok) and (outcome.kinds() & expected)
        report.record(name, "mutation-detected", detected,
                      "" if detected else f"kinds={sorted(outcome.kinds())}, "
                                          f"expected one of {sorted(expected)}")

    # surjection laws on maps this library produces
    for item in corpus.groupoids:
        g = item.value
        orbits = g.orbit_space()
        tgt_image = {g.tgt[a] for a in g.arrows}
        tgt_surjective = tgt_image == set(g.objects)
        composed_image = {orbits.class_of[g.tgt[a]] for a in g.arrows}
        report.record(item.name, "surjection-compose",
                      not tgt_surjective or composed_image == set(orbits.reps()))
        identity_like = {orbits.class_of[x] for x in g.objects}
        report.record(item.name, "surjection-right-factor",
                      identity_like == set(orbits.reps()))
    for item in corpus.bundles:
        amap = item.value.action_map()
        injective = len(set(amap.mapping.values())) == len(amap.mapping)
        surjective = set(amap.mapping.values()) == set(amap.codomain)
        report.record(item.name, "injective-surjection-bijection",
                      (not (injective and surjective))
                      or len(amap.domain) == len(amap.codomain))
    return report


def suite_division(corpus: Corpus) -> SuiteReport:
    report = SuiteReport("division")
    for item in corpus.bundles:
        bundle = item.value
        if len(bundle.carrier) > 5 or not bundle.is_pre_principal():
            continue
        violations = division_map_violations(bundle)
        report.record(item.name, "division-laws", not violations,
                      violations[:3] if violations else "")
    for item in corpus.bibundles:
        bib = item.value
        if len(bib.carrier) > 5:
            continue
        if not bib.left_bundle().is_pre_principal():
            continue
        violations = bibundle_division_violations(bib)
        report.record(item.name, "division-bibundle-laws", not violations,
                      violations[:3] if violations else "")
    # bundle-morphism compatibility: the left unitor is a bundle morphism
    # between pre-principal bundles over the same base
    for item in corpus.bibundles:
        bib = item.value
        if len(bib.carrier) > 5 or not bib.left_bundle().is_pre_principal():
            continue
        unitor = left_unitor(bib)
        source_bundle = unitor.source.left_bundle()
        target_bundle = bib.left_bundle()
        if not source_bundle.is_pre_principal():
            continue
        ok = is_bundle_morphism(unitor.mapping, source_bundle, target_bundle)
        div_s = source_bundle.division_map().table
        div_t = target_bundle.division_map().table
        compatible = all(
            div_t[(unitor.mapping[x1], unitor.mapping[x2])] == arrow
            for (x1, x2), arrow in div_s.items())
        bijective = len(set(unitor.mapping.values())) == len(unitor.mapping)
        report.record(item.name, "division-morphism-compatibility",
                      ok and compatible, "" if ok and compatible else "mismatch")
        report.record(item.name, "principal-morphism-bijective",
                      (not source_bundle.is_principal()) or bijective)
    return report


def _composable_pairs(bibundles):
    for name1, b1 in bibundles:
        for name2, b2 in bibundles:
            if b1.right_groupoid == b2.left_groupoid:
                yield f"{name1}∘{name2}", b1, b2


def _composable_triples(bibundles):
    for name1, b1 in bibundles:
        for name2, b2 in bibundles:
            if b1.right_groupoid != b2.left_groupoid:
                continue
            for name3, b3 in bibundles:
                if b2.right_groupoid == b3.left_groupoid:
                    yield f"{name1}∘{name2}∘{name3}", b1, b2, b3


def _capped(iterable, cap, seed, note_sink, what):
    chains = list(iterable)
    if len(chains) > cap:
        rng = random.Random(seed)
        chains = rng.sample(chains, cap)
        note_sink.append(f"sampled {cap} of {what}")
    return chains


def suite_coherence(corpus: Corpus) -> SuiteReport:
    report = SuiteReport("coherence")
    named = [(i.name, i.value) for i in corpus.bibundles]
    for name, bib in named:
        unitor = report.guard(name, "left-unitor-build", lambda b=bib: left_unitor(b))
        if unitor is not None:
            report.record(name, "left-unitor-iso", unitor.is_iso())
            formula = all(unitor.mapping[rep] == bib.left.act[rep]
                          for rep in unitor.source.carrier)
            report.record(name, "left-unitor-formula", formula)
            inverse = unitor.inverse()
            roundtrip = all(
                inverse.mapping[unitor.mapping[rep]] == rep
                for rep in unitor.source.carrier)
            report.record(name, "left-unitor-inverse", roundtrip)
        runitor = report.guard(name, "right-unitor-build",
                               lambda b=bib: right_unitor(b))
        if runitor is not None:
            report.record(name, "right-unitor-iso", runitor.is_iso())
            formula = all(runitor.mapping[rep] == bib.right.act[rep]
                          for rep in runitor.source.carrier)
            report.record(name, "right-unitor-formula", formula)

    pairs = _capped(_composable_pairs(named), COHERENCE_CHAIN_CAP,
                    corpus.spec.seed, report.notes, "composable pairs")
    for name, b1, b2 in pairs:
        composite = report.guard(name, "composition-valid",
                                 lambda a=b1, b=b2: compose_bibundles(a, b))
        if composite is None:
            continue
        if (b1.left_bundle().is_pre_principal()
                and b2.left_bundle().is_pre_principal()):
            psi = report.guard(name, "tensor-inverse-build",
                               lambda a=b1, b=b2: tensor_action_inverse(a, b))
            if psi is not None:
                violations = tensor_inverse_violations(psi)
                report.record(name, "tensor-inverse-identities", not violations,
                              violations[:3] if violations else "")

    triples = _capped(_composable_triples(named), COHERENCE_CHAIN_CAP,
                      corpus.spec.seed, report.notes, "composable triples")
    for name, b1, b2, b3 in triples:
        assoc = report.guard(name, "associator-build",
                             lambda a=b1, b=b2, c=b3: associator(a, b, c))
        if assoc is not None:
            report.record(name, "associator-iso", assoc.is_iso())
            inverse = assoc.inverse()
            report.record(name, "associator-inverse",
                          all(inverse.mapping[assoc.mapping[rep]] == rep
                              for rep in assoc.source.carrier))
    return report


def suite_morita_forward(corpus: Corpus) -> SuiteReport:
    report = SuiteReport("morita-forward")
    named = [(i.name, i.value) for i in corpus.bibundles]
    for name, bib in named:
        if not is_biprincipal(bib):
            continue
        certificate = report.guard(name, "witness-build",
                                   lambda b=bib: weak_inverse_witness(b))
        if certificate is not None:
            problems = certificate_violations(certificate)
            report.record(name, "certificate-verifies", not problems,
                          problems[:3] if problems else "")
    for check, instance, passed in morita_equivalence_relation_checks(named):
        report.record(instance, f"equivalence-{check}", passed)
    return report


#: The tiny corpus for the exhaustive converse search (carrier budget 4).
def converse_tiny_corpus():
    z2 = group_as_groupoid(*cyclic_tables(2))
    z3 = group_as_groupoid(*cyclic_tables(3))
    trivial = group_as_groupoid(*cyclic_tables(1))
    return [
        ("1", trivial),
        ("Z2", z2),
        ("Z3", z3),
        ("unit(2)", unit_groupoid([0, 1])),
        ("pair(2)", pair_groupoid(2)),
    ]


def cyclic_tables(n):
    return list(range(n)), {(a, b): (a + b) % n
                            for a in range(n) for b in range(n)}


def suite_morita_converse(corpus: Corpus, max_carrier: int = 4) -> SuiteReport:
    """Exhaustive weak-inverse search over the tiny corpus.

    Every (B, C) pair whose composites are biequivariantly isomorphic to the
    identity bibundles must have biprincipal B, surjective moments, and free
    actions.  The groupoid corpus here is intentionally tiny; the search over
    bibundle pairs is exhaustive within carrier ≤ max_carrier.
    """
    report = SuiteReport("morita-converse")
    tiny = converse_tiny_corpus()
    report.notes.append(
        f"tiny corpus: {[n for n, _ in tiny]}, carriers ≤ {max_carrier}")

    pools = {}
    for gname, gpd in tiny:
        for hname, hpd in tiny:
            pools[(gname, hname)] = list(
                enumerate_bibundles(gpd, hpd, max_carrier))
    report.notes.append(
        "bibundle pool sizes: "
        + ", ".join(f"{g}->{h}:{len(v)}" for (g, h), v in pools.items()))

    identities = {name: identity_bibundle(gpd) for name, gpd in tiny}
    witnesses = 0
    for gname, gpd in tiny:
        for hname, hpd in tiny:
            id_g, id_h = identities[gname], identities[hname]
            arrows_g, arrows_h = len(gpd.arrows), len(hpd.arrows)
            for i, bib in enumerate(pools[(gname, hname)]):
                matched = None
                for j, candidate in enumerate(pools[(hname, gname)]):
                    to_g = compose_bibundles(bib, candidate)
                    if len(to_g.carrier) != arrows_g:
                        continue
                    if find_biequivariant_iso(to_g, id_g) is None:
                        continue
                    to_h = compose_bibundles(candidate, bib)
                    if len(to_h.carrier) != arrows_h:
                        continue
                    if find_biequivariant_iso(to_h, id_h) is None:
                        continue
                    matched = j
                    break
                if matched is None:
                    continue
                witnesses += 1
                tag = f"{gname}->{hname}[{i}]~[{matched}]"
                report.record(tag, "weakly-invertible-is-biprincipal",
                              is_biprincipal(bib))
                flags = bib.principality()
                report.record(tag, "bisubductive",
                              flags.left_subductive and flags.right_subductive)
                inverse = pools[(hname, gname)][matched]
                free = (bib.left.is_free() and bib.right.is_free()
                        and inverse.left.is_free() and inverse.right.is_free())
                report.record(tag, "all-four-actions-free", free)
    report.notes.append(f"verified weak-inverse pairs: {witnesses}")

    # spot instances for the bounded decision procedure
    z2 = group_as_groupoid(*cyclic_tables(2))
    trivial = group_as_groupoid(*cyclic_tables(1))
    absent = decide_morita(z2, trivial, 3)
    report.record("decide:Z2-vs-1(budget=3)", "absent",
                  absent.certificate is None,
                  f"examined={absent.examined}")
    found = decide_morita(pair_groupoid(2), trivial, 2)
    report.record("decide:pair(2)-vs-1(budget=2)", "certificate-found",
                  found.certificate is not None
                  and len(found.certificate.bibundle.carrier) == 2
                  and not certificate_violations(found.certificate))
    return report


def suite_invariants_orbit(corpus: Corpus) -> SuiteReport:
    report = SuiteReport("invariants-orbit")
    for item in corpus.groupoids:
        g = item.value
        orbits = g.orbit_space()
        report.record(item.name, "orbit-partition",
                      orbits.check_partition(g.objects))
        joined = all(orbits.class_of[g.src[a]] == orbits.class_of[g.tgt[a]]
                     for a in g.arrows)
        report.record(item.name, "orbit-arrows-connected", joined)
    for item in corpus.actions:
        orbits = item.value.orbits()
        report.record(item.name, "action-orbit-partition",
                      orbits.check_partition(item.value.carrier))
    for item in corpus.bibundles:
        if not is_biprincipal(item.value):
            continue
        bijection = report.guard(item.name, "orbit-bijection",
                                 lambda b=item.value: orbit_bijection(b))
        if bijection is not None:
            left_orbits = item.value.left_groupoid.orbit_space()
            right_orbits = item.value.right_groupoid.orbit_space()
            report.record(item.name, "orbit-bijection-total",
                          set(bijection.forward) == set(left_orbits.reps())
                          and set(bijection.backward) == set(right_orbits.reps()))
    return report


def suite_invariants_fibrating(corpus: Corpus) -> SuiteReport:
    report = SuiteReport("invariants-fibrating")
    for item in corpus.groupoids:
        g = item.value
        oracle = all(g.arrows_between(b, a) for a in g.objects for b in g.objects)
        report.record(item.name, "fibrating-oracle",
                      g.is_fibrating() == oracle)
    for item in corpus.bibundles:
        if not is_biprincipal(item.value):
            continue
        report.record(item.name, "fibrating-invariance",
                      fibrating_invariance_check(item.value))
    return report


def suite_invariants_actions(corpus: Corpus) -> SuiteReport:
    report = SuiteReport("invariants-actions")
    for item in corpus.bundles:
        bundle = item.value
        report.record(item.name, "pre-principality-oracle",
                      bundle.is_pre_principal()
                      == bundle.is_free_and_fibre_transitive())
    for item in corpus.groupoids:
        g = item.value
        for x in g.objects:
            iso = g.isotropy_group(x)
            closed = all(g.comp[(a, b)] in set(iso) for a in iso for b in iso)
            has_unit = g.unit[x] in set(iso)
            has_inverse = all(g.inv[a] in set(iso) for a in iso)
            report.record(item.name, f"isotropy-group@{x}",
                          closed and has_unit and has_inverse)

    biprincipal = [(i.name, i.value) for i in corpus.bibundles
                   if is_biprincipal(i.value)]
    for name, bib in biprincipal:
        certificate = weak_inverse_witness(bib)
        matching = [a for a in corpus.actions
                    if a.value.side == "left"
                    and a.value.groupoid == bib.right_groupoid]
        for action_item in matching:
            tag = f"{name}⋉{action_item.name}"
            transported = report.guard(tag, "transport-valid",
                                       lambda b=bib, a=action_item.value:
                                       transport_action(b, a))
            if transported is not None:
                report.record(tag, "transport-orbit-count",
                              transported.orbits().class_count
                              == action_item.value.orbits().class_count)
            mu = report.guard(tag, "roundtrip-iso",
                              lambda b=bib, a=action_item.value, c=certificate:
                              roundtrip_natural_iso(b, a, c))
            if mu is not None:
                report.record(tag, "roundtrip-bijective", mu.is_bijective())
        for map_item in corpus.equivariant_maps:
            phi = map_item.value
            if phi.source.groupoid != bib.right_groupoid:
                continue
            tag = f"{name}⋉{map_item.name}"
            report.guard(tag, "roundtrip-naturality",
                         lambda b=bib, p=phi, c=certificate:
                         _naturality_true(b, p, c))
    return report


def _naturality_true(bib, phi, certificate):
    from .errors import IllDefined
    if not naturality_square_commutes(bib, phi, certificate):
        raise IllDefined("naturality square does not commute")
    return True


SUITES = {
    "axioms": suite_axioms,
    "division": suite_division,
    "coherence": suite_coherence,
    "morita-forward": suite_morita_forward,
    "morita-converse": suite_morita_converse,
    "invariants-orbit": suite_invariants_orbit,
    "invariants-fibrating": suite_invariants_fibrating,
    "invariants-actions": suite_invariants_actions,
}


def run_suite(corpus: Corpus, name: str) -> SuiteReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuite(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return suite(corpus)


def run_all_suites(corpus: Corpus):
    return [run_suite(corpus, name) for name in SUITE_NAMES]
