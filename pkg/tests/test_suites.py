"""Suite runner behaviour: dispatch, pinpointing, and mutation detection."""

import pytest

from moritakit import UnknownSuite, run_suite
from moritakit.corpus import Corpus, CorpusItem
from moritakit.groupoid import FiniteGroupoid
from moritakit.suites import mutation_cases


class TestDispatch:
    def test_unknown_suite(self, small_corpus):
        with pytest.raises(UnknownSuite):
            run_suite(small_corpus, "nonsense")

    @pytest.mark.parametrize("name", ["axioms", "division", "coherence",
                                      "morita-forward", "invariants-orbit",
                                      "invariants-fibrating",
                                      "invariants-actions"])
    def test_suites_pass_on_small_corpus(self, small_corpus, name):
        report = run_suite(small_corpus, name)
        assert report.results, name
        assert report.passed, [str(f) for f in report.failures[:3]]


class TestMutationDetection:
    def test_every_mutation_detected(self):
        for name, expected, run in mutation_cases():
            outcome = run()
            assert not outcome.ok, f"{name} not flagged at all"
            assert outcome.kinds() & expected, (
                f"{name}: got {sorted(outcome.kinds())}, "
                f"wanted one of {sorted(expected)}")


class TestPinpointing:
    def test_corrupted_object_named_in_report(self, small_corpus):
        bad_unit = unit_broken_groupoid()
        corrupted = Corpus(
            spec=small_corpus.spec,
            groupoids=small_corpus.groupoids + (
                CorpusItem("injected-bad", bad_unit),),
            actions=(), bundles=(), bibundles=(), equivariant_maps=())
        report = run_suite(corrupted, "axioms")
        assert not report.passed
        offenders = {(f.instance, f.law) for f in report.failures}
        assert ("injected-bad", "groupoid-axioms") in offenders


def unit_broken_groupoid():
    """A raw structure whose unit map is wrong, built without validation."""
    return FiniteGroupoid(
        objects=(0, 1), arrows=((0, 0), (1, 1)),
        src={(0, 0): 0, (1, 1): 1}, tgt={(0, 0): 0, (1, 1): 1},
        unit={0: (1, 1), 1: (0, 0)},
        inv={(0, 0): (0, 0), (1, 1): (1, 1)},
        comp={((0, 0), (0, 0)): (0, 0), ((1, 1), (1, 1)): (1, 1)})
