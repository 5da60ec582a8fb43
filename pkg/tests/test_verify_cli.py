"""Verification suites and the command-line front end."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from nsplanar import families
from nsplanar.canon import canonical_form
from nsplanar.encoding import from_graph6, to_graph6
from nsplanar.verify import (
    SUITES,
    build_prism_complement_certificate,
    run_suite,
    shared_endpoint_long_chord_signature,
    stated_apex_sets,
)
from nsplanar.minors import validate_certificate


def run_cli(args: list[str], stdin: str = "") -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "nsplanar.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=600,
    )


class TestSuites:
    def test_unknown_suite_rejected(self):
        with pytest.raises(KeyError):
            run_suite("nope")

    def test_remark45(self):
        rep = run_suite("remark45")
        assert rep.ok and rep.entries[0].verdict == "verified"

    def test_thm1_small_order(self):
        rep = run_suite("thm1", n_values=[7])
        assert rep.ok
        assert len(rep.entries) == 4 + 1 + 1  # polygons, wheel, prism

    def test_thm2_small_order(self):
        rep = run_suite("thm2", n_values=[7])
        assert rep.ok

    def test_stated_sets_cover_all_kinds(self):
        for spec in families.maximal_nonseparating_specs(9):
            sets = stated_apex_sets(spec, spec.build())
            assert sets and all(len(s) == 2 for s in sets)

    def test_prism_certificates_build_and_validate(self):
        for counts in ((2, 1, 1), (2, 2, 0), (3, 1, 0), (4, 0, 0)):
            cg, cert = build_prism_complement_certificate(counts)
            assert validate_certificate(cg, cert)

    def test_chord_signature_detector(self):
        # the configuration itself: a 5-chord whose endpoint carries both
        # 3-chords, and no 4-chords at the 5-chord's ends
        g = families.max_outerplanar_from_chords(
            10, [(1, 9), (2, 5), (2, 7), (2, 9), (3, 5), (5, 7), (7, 9)]
        )
        assert shared_endpoint_long_chord_signature(g)
        fan = families.max_outerplanar_from_chords(
            10, [(0, k) for k in range(2, 9)]
        )
        assert not shared_endpoint_long_chord_signature(fan)
        # rotation of the labels must not change the answer
        rot = [(i + 4) % 10 for i in range(10)]
        assert shared_endpoint_long_chord_signature(g.relabeled(rot))


class TestCli:
    def test_gen_and_nonsep_pipeline(self):
        out = run_cli(["gen", "wheel", "10"])
        assert out.returncode == 0
        res = run_cli(["check", "nonsep"], stdin=out.stdout)
        assert "wheel-subgraph" in res.stdout

    def test_complement_then_minor(self):
        g6 = run_cli(["gen", "eprism", "2", "1", "1"]).stdout
        res = run_cli(
            ["check", "complement", "--then", "minor", "--target", "K331_1", "--json"],
            stdin=g6,
        )
        assert json.loads(res.stdout)["has_minor"] is True

    def test_complement_then_planar_on_mop7(self):
        g6 = run_cli(["gen", "maxouterplanar", "7"]).stdout
        res = run_cli(["check", "complement", "--then", "planar"], stdin=g6)
        lines = [l for l in res.stdout.splitlines() if l]
        assert len(lines) == 4 and all("planar=True" in l for l in lines)

    def test_closure_cli(self):
        res = run_cli(
            ["closure", "--seed", "K6", "--moves", "ty,yt", "--max-order", "10"]
        )
        assert len(res.stdout.split()) == 7

    def test_json_round_trip_preserves_canonical_form(self):
        g6 = run_cli(["gen", "eprisms", "10"]).stdout
        back = run_cli(
            ["from-json"], stdin=run_cli(["to-json"], stdin=g6).stdout
        ).stdout
        orig = [canonical_form(from_graph6(l)) for l in g6.split()]
        after = [canonical_form(from_graph6(l)) for l in back.split()]
        assert orig == after

    def test_verify_paper_deterministic_reports_identical(self):
        a = run_cli(
            ["verify-paper", "remark45", "--deterministic", "--seed", "7", "--json"]
        )
        b = run_cli(
            ["verify-paper", "remark45", "--deterministic", "--seed", "7", "--json"]
        )
        assert a.returncode == 0
        assert a.stdout == b.stdout

    def test_verify_paper_thm1_exit_code(self):
        res = run_cli(["verify-paper", "thm1", "--n", "7"])
        assert res.returncode == 0
        assert "suite thm1: ok" in res.stdout

    def test_check_mu_with_core_rules_only(self):
        g6 = to_graph6(families.wheel(8).complement())
        res = run_cli(
            ["check", "mu", "--json", "--paper-rules-only"], stdin=g6
        )
        obj = json.loads(res.stdout)
        assert (obj["lo"], obj["hi"]) == (4, 4)

    def test_malformed_graph6_is_a_clean_error(self):
        res = run_cli(["check", "planar"], stdin="D" + chr(30) + "\n")
        assert res.returncode == 2
        assert "byte offset" in res.stderr

    def test_sparse6_output(self):
        res = run_cli(["gen", "named", "Petersen", "--sparse6"])
        assert res.stdout.startswith(":")
