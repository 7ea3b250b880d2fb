import random

import pytest

from isoprod import (
    FinAbGroup,
    GeneratingSystem,
    OrbifoldPresentation,
    ProductPresentation,
    Word,
    builtin_case,
    difference_hom,
    free_reduce,
    freeness_check,
    validate_generating_system,
)
from conftest import random_valid_system, random_word


class TestWords:
    def test_reduce_to_empty(self):
        assert free_reduce(Word.parse("a1 a1^-1")) == Word()

    def test_reduce_inner_pair(self):
        assert free_reduce(Word.parse("a1 a2 a2^-1 a1")) == Word.parse("a1 a1")

    def test_reduce_leading_pair(self):
        assert free_reduce(Word.parse("b2^-1 b2 b2")) == Word.parse("b2")

    def test_reduce_cascades(self):
        w = Word.parse("a1 a2 a3 a3^-1 a2^-1 a1^-1")
        assert free_reduce(w) == Word()

    def test_parse_and_str(self):
        w = Word.parse("a1*b2^-1 a3^2")
        assert str(w) == "a1*b2^-1*a3*a3"
        assert Word.parse("1") == Word()
        with pytest.raises(ValueError):
            Word.parse("c1")

    def test_inverse_and_power(self):
        w = Word.parse("a1 a2")
        assert w.inverse() == Word.parse("a2^-1 a1^-1")
        assert w ** 2 == Word.parse("a1 a2 a1 a2")
        assert w ** -1 == w.inverse()

    def test_degree(self):
        w = Word.parse("a1 a1 a2^-1 b1")
        assert w.degree("a", 1) == 2
        assert w.degree("a", 2) == -1
        assert w.degree("b", 1) == 1


class TestPresentations:
    def test_orbifold_relators(self):
        pres = OrbifoldPresentation(3, 2)
        rels = pres.relators("a")
        assert rels == (
            Word.parse("a1 a1"),
            Word.parse("a2 a2"),
            Word.parse("a3 a3"),
            Word.parse("a1 a2 a3"),
        )

    def test_orbifold_bounds(self):
        with pytest.raises(ValueError):
            OrbifoldPresentation(2, 2)
        with pytest.raises(ValueError):
            OrbifoldPresentation(3, 1)

    def test_product_relator_count(self):
        pres = ProductPresentation(OrbifoldPresentation(5, 2), OrbifoldPresentation(6, 2))
        assert len(pres.relators()) == 5 + 1 + 6 + 1 + 30
        assert len(pres.generators()) == 11


class TestEvaluate:
    def test_case4_long_product_is_zero(self):
        case = builtin_case(4)
        assert case.phi.evaluate(Word.parse("a1 a2 a3")).is_zero()

    def test_empty_word(self):
        case = builtin_case(1)
        assert case.phi.evaluate(Word()).is_zero()

    def test_case2_psi_product(self):
        case = builtin_case(2)
        # Componentwise sum of psi(b3) and psi(b4) mod 2, computed independently.
        expected = [
            (x + y) % 2
            for x, y in zip(case.psi.images[2].coeffs, case.psi.images[3].coeffs)
        ]
        assert case.psi.evaluate(Word.parse("b3 b4")).coeffs == tuple(expected)

    def test_out_of_range_rejected(self):
        case = builtin_case(4)
        with pytest.raises(IndexError):
            case.phi.evaluate(Word.parse("a4"))

    def test_reduction_preserves_value(self):
        rng = random.Random(19)
        case = builtin_case(3)
        for _ in range(50):
            w = random_word(rng, "a", case.n, rng.randint(0, 10))
            assert case.phi.evaluate(free_reduce(w)) == case.phi.evaluate(w)


class TestDifferenceMap:
    def test_case3_mixed_word(self):
        case = builtin_case(3)
        diff = difference_hom(case.phi, case.psi)
        # e1 - (e1 + e2) = -e2 = 2 e2
        assert diff.evaluate(Word.parse("a1 b1")) == 2 * case.group.basis()[1]

    def test_case1_kernel_word(self):
        case = builtin_case(1)
        diff = difference_hom(case.phi, case.psi)
        assert diff.evaluate(Word.parse("a1 a4")).is_zero()

    def test_empty(self):
        case = builtin_case(2)
        assert difference_hom(case.phi, case.psi).evaluate(Word()).is_zero()

    def test_all_relators_die(self, cases):
        for case in cases:
            pres = ProductPresentation(case.phi.presentation(), case.psi.presentation())
            diff = difference_hom(case.phi, case.psi)
            for relator in pres.relators():
                assert diff.evaluate(relator).is_zero()

    def test_group_mismatch_rejected(self):
        case1, case3 = builtin_case(1), builtin_case(3)
        with pytest.raises(ValueError):
            difference_hom(case1.phi, case3.psi)


class TestValidation:
    def test_builtin_cases_valid(self, cases):
        for case in cases:
            assert validate_generating_system(case.phi).ok
            assert validate_generating_system(case.psi).ok

    def test_broken_product_detected(self):
        case = builtin_case(1)
        images = list(case.phi.images)
        images[4] = case.group.basis()[1]  # a5 -> e2 breaks the product
        report = validate_generating_system(
            GeneratingSystem(case.group, tuple(images), case.k)
        )
        assert not report.ok
        assert any("sum" in f for f in report.failures)

    def test_generation_failure_detected(self):
        G = FinAbGroup((2, 2))
        e1 = G.basis()[0]
        report = validate_generating_system(GeneratingSystem(G, (e1, e1, G.zero()), 2))
        assert not report.ok
        assert any("generate" in f for f in report.failures)
        assert any("order" in f for f in report.failures)  # the zero image

    def test_empty_system(self):
        G = FinAbGroup((2, 2))
        report = validate_generating_system(GeneratingSystem(G, (), 2))
        assert report.failures == ("empty generating system",)

    def test_wrong_image_order_detected(self):
        G = FinAbGroup((4,))
        g = G.element((2,))  # order 2, not 4
        report = validate_generating_system(GeneratingSystem(G, (g, g, g, g), 4))
        assert any("order" in f for f in report.failures)


class TestFreeness:
    def test_builtin_cases_free(self, cases):
        for case in cases:
            assert freeness_check(case.phi, case.psi)

    def test_shared_cyclic_subgroup_detected(self):
        case = builtin_case(4)
        images = list(case.psi.images)
        images[0] = case.group.basis()[0]  # now e1 lies in both unions
        broken = GeneratingSystem(case.group, tuple(images), case.k)
        assert not freeness_check(case.phi, broken)

    def test_disjoint_cyclic_subgroups(self):
        G = FinAbGroup((2, 2))
        e1, e2 = G.basis()
        phi = GeneratingSystem(G, (e1,), 2)
        psi = GeneratingSystem(G, (e2,), 2)
        assert freeness_check(phi, psi)

    def test_symmetric(self):
        rng = random.Random(29)
        G = FinAbGroup((3, 3))
        for _ in range(20):
            phi = random_valid_system(rng, G, 3, rng.randint(3, 5))
            psi = random_valid_system(rng, G, 3, rng.randint(3, 5))
            assert freeness_check(phi, psi) == freeness_check(psi, phi)
