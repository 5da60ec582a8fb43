"""Intrinsic linking/knotting verdicts and maximality certifiers."""

from __future__ import annotations

from nsplanar import families
from nsplanar.apex import apex_number
from nsplanar.canon import canonical_form
from nsplanar.encoding import to_graph6
from nsplanar.minors import has_minor, validate_certificate
from nsplanar.topology import (
    CERTIFIED,
    IK,
    NIK,
    REFUTED,
    UNKNOWN,
    certify_max_nik,
    ik_obstruction_library,
    ik_status,
    is_il,
    is_max_nil,
    petersen_family,
)

from conftest import random_graph

# frozen sizes of the triangle-to-star expansion libraries
IK_LIBRARY_SIZE = 14 + 26


class TestObstructionSets:
    def test_petersen_family_has_seven_members(self):
        pf = petersen_family()
        assert len(pf) == 7
        assert sorted(g.n for g in pf) == [6, 7, 7, 8, 8, 9, 10]
        assert canonical_form(families.petersen_graph()) in {
            canonical_form(g) for g in pf
        }

    def test_library_members_and_plug_in(self):
        lib = ik_obstruction_library()
        assert len(lib.members) == IK_LIBRARY_SIZE
        assert {m.graph.edge_count() for m in lib.members} == {21, 22}
        bigger = lib.with_extra(
            to_graph6(families.named("K7")), "hand-supplied duplicate seed"
        )
        assert len(bigger.members) == IK_LIBRARY_SIZE + 1
        assert bigger.members[-1].provenance.startswith("hand-supplied")


class TestIsIl:
    def test_k6_linked(self):
        r = is_il(families.named("K6"))
        assert r.linked and validate_certificate(families.named("K6"), r.certificate)

    def test_one_apex_graphs_not_linked(self):
        r = is_il(families.wheel(8).join(families.empty(2)))
        assert not r.linked

    def test_order9_complement_linked(self):
        g = families.wheel(9).complement()
        r = is_il(g)
        assert r.linked and validate_certificate(g, r.certificate)

    def test_consistent_with_low_apex(self, rng):
        # independently computed apex number at most 1 forces "unlinked"
        count = 0
        while count < 15:
            g = random_graph(rng, rng.randrange(5, 8), 0.5)
            k, _ = apex_number(g)
            if k <= 1:
                count += 1
                assert not is_il(g).linked

    def test_monotone_under_minors(self, rng):
        for _ in range(10):
            g = families.wheel(rng.randrange(7, 9)).complement()
            if not is_il(g).linked:
                continue
            # adding anything keeps it linked
            for u, v in g.non_edges()[:3]:
                assert is_il(g.add_edge(u, v)).linked


class TestIkStatus:
    def test_k7_is_ik(self):
        v = ik_status(families.named("K7"))
        assert v.status == IK and v.obstruction_name == "K7.0"

    def test_wheel_join_path_is_nik(self):
        v = ik_status(families.wheel(9).join(families.path_by_edges(2)))
        assert v.status == NIK
        assert len(v.apex_certificate.removed) == 2

    def test_prism_complements_are_ik(self):
        for g in families.enumerate_elongated_prisms(10):
            cg = g.complement()
            v = ik_status(cg)
            assert v.status == IK
            assert validate_certificate(cg, v.minor_certificate)

    def test_exclusivity_of_certificates(self, rng):
        # a validated knotting minor never coexists with a 2-apex witness
        for _ in range(10):
            g = random_graph(rng, 9, 0.7)
            v = ik_status(g)
            if v.status == IK:
                assert validate_certificate(g, v.minor_certificate)
                k, _ = apex_number(g)
                assert k > 2
            elif v.status == NIK:
                lib = ik_obstruction_library()
                for m in lib.fitting(g)[:4]:
                    assert has_minor(g, m.graph) is None

    def test_unknown_carries_strategies(self):
        v = ik_status(families.wheel(10).complement())
        assert v.status == UNKNOWN
        assert any("library" in s for s in v.exhausted)


class TestMaximality:
    def test_wheel_join_empty_maxnil(self):
        for n in (5, 6):
            assert is_max_nil(families.wheel(n).join(families.empty(2))).maximal

    def test_mop_join_k2_maxnil(self):
        (h,) = families.enumerate_max_outerplanar(5)
        assert is_max_nil(h.join(families.complete(2))).maximal

    def test_complete_nil_graph_vacuously_maximal(self):
        assert is_max_nil(families.named("K5")).maximal

    def test_linked_graph_not_maxnil(self):
        r = is_max_nil(families.named("K6"))
        assert not r.maximal and r.base.linked

    def test_wheel_join_path_maxnik(self):
        r = certify_max_nik(families.wheel(5).join(families.path_by_edges(2)))
        assert r.status == CERTIFIED

    def test_mop_join_k3_maxnik(self):
        (h,) = families.enumerate_max_outerplanar(4)
        r = certify_max_nik(h.join(families.complete(3)))
        assert r.status == CERTIFIED

    def test_k7_refuted(self):
        assert certify_max_nik(families.named("K7")).status == REFUTED
