"""Serialization round trips, reference resolution, and loader rejection."""

import json

import pytest

from moritakit import (
    GroupoidBundle,
    ParseError,
    UnresolvedReference,
    ValidationFailed,
    identity_bibundle,
    left_translation_action,
    load,
    pair_groupoid,
    save,
    self_bundle,
    weak_inverse_witness,
)
from moritakit.storage import encode_ident


def renamed(groupoid):
    return groupoid.rename({x: encode_ident(x) for x in groupoid.objects},
                           {a: encode_ident(a) for a in groupoid.arrows})


class TestRoundTrip:
    def test_groupoid(self, tmp_path, z3):
        for g in (pair_groupoid(2), z3):
            path = tmp_path / "g.json"
            save(g, path)
            assert load(path) == renamed(g)

    def test_action(self, tmp_path, z2):
        action = left_translation_action(z2)
        path = tmp_path / "a.json"
        save(action, path)
        loaded = load(path)
        assert loaded.groupoid == renamed(z2)
        assert len(loaded.carrier) == len(action.carrier)
        assert loaded.orbits().class_count == action.orbits().class_count

    def test_bundle(self, tmp_path):
        bundle = self_bundle(pair_groupoid(2))
        path = tmp_path / "b.json"
        save(bundle, path)
        loaded = load(path)
        assert loaded.is_principal() == bundle.is_principal()
        assert len(loaded.base) == len(bundle.base)

    def test_bibundle(self, tmp_path, z2):
        bib = identity_bibundle(z2)
        path = tmp_path / "bib.json"
        save(bib, path)
        loaded = load(path)
        assert loaded.principality() == bib.principality()
        assert loaded.left_groupoid == renamed(z2)

    def test_certificate(self, tmp_path, z2):
        from moritakit import verify_certificate
        certificate = weak_inverse_witness(identity_bibundle(z2))
        path = tmp_path / "cert.json"
        save(certificate, path)
        loaded = load(path)
        assert verify_certificate(loaded)

    def test_save_is_deterministic(self, tmp_path, z2):
        bib = identity_bibundle(z2)
        save(bib, tmp_path / "one.json")
        save(bib, tmp_path / "two.json")
        one = (tmp_path / "one.json").read_text()
        two = (tmp_path / "two.json").read_text()
        assert one.replace("one", "two") == two

    def test_double_round_trip_is_stable(self, tmp_path):
        g = pair_groupoid(2)
        save(g, tmp_path / "first.json")
        loaded = load(tmp_path / "first.json")
        save(loaded, tmp_path / "second.json")
        assert load(tmp_path / "second.json") == loaded


class TestRejection:
    def test_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            load(path)

    def test_future_format_version(self, tmp_path):
        path = tmp_path / "future.json"
        path.write_text(json.dumps({"format_version": 2, "kind": "groupoid",
                                    "payload": {}, "references": {}}))
        with pytest.raises(ParseError):
            load(path)

    def test_unknown_kind(self, tmp_path):
        path = tmp_path / "odd.json"
        path.write_text(json.dumps({"format_version": 1, "kind": "poset",
                                    "payload": {}, "references": {}}))
        with pytest.raises(ParseError):
            load(path)

    def test_dangling_comp_entry(self, tmp_path):
        save(pair_groupoid(2), tmp_path / "g.json")
        raw = json.loads((tmp_path / "g.json").read_text())
        raw["payload"]["comp"][0][2] = "ghost"
        (tmp_path / "g.json").write_text(json.dumps(raw))
        with pytest.raises(ValidationFailed) as exc:
            load(tmp_path / "g.json")
        assert "dangling-identifier" in exc.value.report.kinds()

    def test_missing_reference(self, tmp_path, z2):
        save(identity_bibundle(z2), tmp_path / "bib.json")
        (tmp_path / "bib.left_groupoid.json").unlink()
        with pytest.raises(UnresolvedReference):
            load(tmp_path / "bib.json")

    def test_missing_file(self, tmp_path):
        with pytest.raises(UnresolvedReference):
            load(tmp_path / "absent.json")

    def test_corrupted_action_table(self, tmp_path, z2):
        save(left_translation_action(z2), tmp_path / "a.json")
        raw = json.loads((tmp_path / "a.json").read_text())
        entry = next(e for e in raw["payload"]["act"] if e[2] != e[1])
        entry[2] = entry[1]  # redirect one action value
        (tmp_path / "a.json").write_text(json.dumps(raw))
        with pytest.raises(ValidationFailed):
            load(tmp_path / "a.json")


class TestReferences:
    def test_reuse_existing_groupoid_file(self, tmp_path, z2):
        save(z2, tmp_path / "shared.json")
        bib = identity_bibundle(z2)
        save(bib, tmp_path / "bib.json",
             references={"left_groupoid": "shared.json",
                         "right_groupoid": "shared.json"})
        assert not (tmp_path / "bib.left_groupoid.json").exists()
        loaded = load(tmp_path / "bib.json")
        assert loaded.principality().biprincipal

    def test_bundle_base_preserved(self, tmp_path, z2):
        action = left_translation_action(z2)
        bundle = GroupoidBundle.from_parts(
            action, ["pt", "unused"], {x: "pt" for x in action.carrier})
        save(bundle, tmp_path / "bundle.json")
        loaded = load(tmp_path / "bundle.json")
        assert not loaded.is_subductive()
        assert loaded.is_pre_principal()


class TestCorpusRoundTrip:
    def test_first_hundred_objects(self, tmp_path, default_corpus):
        objects = list(default_corpus.serializable_objects())[:100]
        assert len(objects) == 100
        for index, item in enumerate(objects):
            path = tmp_path / f"obj{index}.json"
            save(item.value, path)
            load(path)
