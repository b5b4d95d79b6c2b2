import pytest

from dfw.abelian import PresentedGroup
from dfw.derived import NestedPresentation, Presentation
from dfw.linalg import IntMatrix
from dfw.theorems import (
    CHECKS,
    TrialConfig,
    check_cross_effect,
    check_exact4,
    check_exponent_shadow,
    check_presentation_independence,
    check_superlie_kernel,
    check_thm_3_1,
    check_thm_3_2,
    evaluate_section4,
    exact4_instance,
    replay_counterexample,
    thm_3_1_instance,
    thm_3_2_instance,
)

CFG = TrialConfig(seed=11, trials=25)


def nested(r, inner_cols, outer_cols):
    return NestedPresentation.build(
        r,
        IntMatrix.from_cols(inner_cols, rows=r),
        IntMatrix.from_cols(outer_cols, rows=r),
    )


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            TrialConfig(trials=0)
        with pytest.raises(ValueError):
            TrialConfig(max_rank=0)
        with pytest.raises(ValueError):
            TrialConfig(seed=2**64)


class TestThm31:
    def test_trivial_middle_when_lattices_equal(self):
        u = [[2, 0], [0, 3]]
        lhs, rhs = thm_3_1_instance(nested(2, u, u))
        assert lhs == rhs == "0"

    def test_full_outer_lattice(self):
        # outer = whole lattice: the complex on E itself is exact in the
        # middle because the derived square of the zero group vanishes
        lhs, rhs = thm_3_1_instance(nested(2, [[2, 0], [0, 2]], [[1, 0], [0, 1]]))
        assert lhs == rhs == "0"

    def test_suite_passes(self):
        v = check_thm_3_1(CFG)
        assert v.failed == 0 and v.passed == CFG.trials


class TestThm32:
    def test_zero_inner_lattice(self):
        r = 2
        outer = [[2, 0], [0, 2]]
        np = NestedPresentation.build(
            r,
            IntMatrix.zeros(r, 0),
            IntMatrix.from_cols(outer, rows=r),
        )
        lhs, rhs = thm_3_2_instance(np)
        assert lhs == rhs

    def test_free_case_both_sides_trivial(self):
        np = NestedPresentation.build(2, IntMatrix.zeros(2, 0), IntMatrix.zeros(2, 0))
        lhs, rhs = thm_3_2_instance(np)
        assert lhs == rhs == "0"

    def test_suite_passes(self):
        v = check_thm_3_2(CFG)
        assert v.failed == 0


class TestExact4:
    def test_free_presentation(self):
        lhs, rhs = exact4_instance(Presentation(3, IntMatrix.zeros(3, 0)))
        assert lhs == rhs == "exact"

    def test_rank_one(self):
        lhs, rhs = exact4_instance(Presentation(1, IntMatrix.from_rows([[6]])))
        assert lhs == rhs == "exact"

    def test_suite_passes(self):
        assert check_exact4(CFG).failed == 0


class TestCrossEffect:
    def test_worked_pair(self):
        from dfw.theorems import cross_effect_instance

        pa = Presentation.from_group(PresentedGroup.cyclic(2))
        pb = Presentation.from_group(PresentedGroup.cyclic(4))
        lhs, rhs = cross_effect_instance(pa, pb)
        assert lhs == rhs == "Z/2"

    def test_free_second_summand(self):
        from dfw.theorems import cross_effect_instance

        pa = Presentation.from_group(PresentedGroup.from_invariants(0, (2, 4)))
        pb = Presentation(2, IntMatrix.zeros(2, 0))
        lhs, rhs = cross_effect_instance(pa, pb)
        assert lhs == rhs == "Z/2"

    def test_suite_passes(self):
        assert check_cross_effect(CFG).failed == 0


class TestPresentationIndependence:
    def test_z6_two_ways(self):
        from dfw.theorems import presentation_independence_instance

        p1 = Presentation.from_group(PresentedGroup.cyclic(6))
        p2 = Presentation.from_group(
            PresentedGroup(2, IntMatrix.from_cols([[2, 1], [0, 3]], rows=2))
        )
        assert p1.quotient().canonical == p2.quotient().canonical
        lhs, rhs = presentation_independence_instance(p1, p2)
        assert lhs == rhs

    def test_suite_passes(self):
        assert check_presentation_independence(CFG).failed == 0


class TestExtraSuites:
    def test_superlie_kernel(self):
        assert check_superlie_kernel(CFG).failed == 0

    def test_exponent_shadow(self):
        v = check_exponent_shadow(CFG)
        assert v.failed == 0
        assert v.monitor["trials"] == CFG.trials
        assert 0 <= v.monitor["l2_superlie3_exponent_divides"] <= CFG.trials


class TestDeterminismAndReplay:
    def test_identical_seeds_identical_records(self):
        for name, fn in CHECKS.items():
            a = fn(TrialConfig(seed=5, trials=8))
            b = fn(TrialConfig(seed=5, trials=8))
            assert a == b

    def test_exact4_rows_carry_no_instance_data(self):
        # passing exactness rows are identical across seeds by design;
        # only failures embed the sampled instance
        a = check_exact4(TrialConfig(seed=1, trials=10))
        b = check_exact4(TrialConfig(seed=2, trials=10))
        assert [r.lhs for r in a.records] == ["exact"] * 10
        assert a.records == b.records
        assert a.failed == b.failed == 0

    def test_replay_counterexamples(self):
        # all suites pass, so exercise replay through the serialization
        # path with hand-built "counterexamples" of passing instances
        np = nested(2, [[4, 0], [0, 4]], [[2, 0], [0, 2]])
        ce = {"instance": {"nested": np.to_dict()}}
        lhs, rhs = replay_counterexample("thm31", ce)
        assert lhs == rhs
        lhs, rhs = replay_counterexample("thm32", ce)
        assert lhs == rhs
        p = Presentation(2, IntMatrix.from_cols([[2, 0], [0, 6]], rows=2))
        ce2 = {"instance": {"presentation": p.to_dict()}}
        assert replay_counterexample("exact4", ce2) == ("exact", "exact")
        ce3 = {"instance": {"a": p.to_dict(), "b": p.to_dict()}}
        lhs, rhs = replay_counterexample("crosseffect", ce3)
        assert lhs == rhs
        with pytest.raises(ValueError):
            replay_counterexample("nonsense", ce3)

    def test_verdict_counts(self):
        v = check_thm_3_1(TrialConfig(seed=3, trials=9))
        assert v.passed + v.failed == 9
        assert len(v.records) == 9


class TestSection4:
    def test_cyclic_all_zero(self):
        rep = evaluate_section4(PresentedGroup.cyclic(7))
        assert rep == {
            "H2": "0",
            "L1SP2(H2)": "0",
            "L2Ls3(H2)": "0",
            "L1SP3(Gab)": "0",
            "L1SP4(Gab)": "0",
        }

    def test_klein_four(self):
        rep = evaluate_section4(PresentedGroup.from_invariants(0, (2, 2)))
        assert rep["H2"] == "Z/2"
        assert rep["L1SP2(H2)"] == "0"

    def test_elementary_abelian_rank_three(self):
        rep = evaluate_section4(PresentedGroup.from_invariants(0, (2, 2, 2)))
        # closed-form oracle: H2 has three invariant factors 2, pairs give
        # gcd 2 three times
        assert rep["H2"] == "Z/2 + Z/2 + Z/2"
        assert rep["L1SP2(H2)"] == "Z/2 + Z/2 + Z/2"

    def test_free_input(self):
        rep = evaluate_section4(PresentedGroup.free(3))
        assert rep["H2"] == "Z^3"
        assert rep["L1SP2(H2)"] == "0"
        assert rep["L1SP3(Gab)"] == "0"
        assert rep["L1SP4(Gab)"] == "0"
