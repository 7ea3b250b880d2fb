import random

import pytest

from isoprod import (
    FinAbGroup,
    GeneratingSystem,
    InvalidCaseError,
    InvariantFactors,
    ProductPresentation,
    Word,
    builtin_case,
    coset_table,
    difference_hom,
    free_reduce,
    kernel_h1,
    relation_matrix,
    rewrite_relator,
    schreier_transversal,
)
from isoprod.oracle import rewrite_trace

KNOWN_H1 = {
    1: InvariantFactors((2, 2, 2, 2, 4, 4)),
    2: InvariantFactors((4, 4, 4, 4)),
    3: InvariantFactors((3, 3, 3, 3, 3)),
    4: InvariantFactors((5, 5, 5)),
}


def case_machinery(case, gen_order=None):
    pres = ProductPresentation(case.phi.presentation(), case.psi.presentation())
    diff = difference_hom(case.phi, case.psi)
    table = coset_table(pres, diff, gen_order)
    return pres, diff, table, schreier_transversal(table)


def trivial_pair(n, m, k=2):
    T = FinAbGroup(())
    return (
        GeneratingSystem(T, (T.zero(),) * n, k),
        GeneratingSystem(T, (T.zero(),) * m, k),
    )


class TestCosetTable:
    def test_case1_has_eight_cosets(self):
        _, _, table, _ = case_machinery(builtin_case(1))
        assert table.size == 8

    def test_case4_has_25_cosets(self):
        _, _, table, _ = case_machinery(builtin_case(4))
        assert table.size == 25

    def test_trivial_group_single_coset(self):
        phi, psi = trivial_pair(4, 3)
        pres = ProductPresentation(phi.presentation(), psi.presentation())
        table = coset_table(pres, difference_hom(phi, psi))
        assert table.size == 1

    def test_generators_act_by_permutation(self):
        _, _, table, _ = case_machinery(builtin_case(3))
        for moves in table.moves:
            assert sorted(moves) == list(range(table.size))

    def test_step_inverts_cleanly(self):
        from isoprod import Letter

        _, _, table, _ = case_machinery(builtin_case(3))
        for c in range(table.size):
            for letter in table.letters:
                forward = table.step(c, letter)
                assert table.step(forward, letter.inverse()) == c

    def test_non_surjective_rejected(self):
        G = FinAbGroup((2, 2))
        e1 = G.basis()[0]
        phi = GeneratingSystem(G, (e1, e1, e1, e1), 2)
        psi = GeneratingSystem(G, (e1, e1, e1, e1), 2)
        pres = ProductPresentation(phi.presentation(), psi.presentation())
        with pytest.raises(ValueError, match="not surjective"):
            coset_table(pres, difference_hom(phi, psi))

    def test_bad_gen_order_rejected(self):
        case = builtin_case(4)
        with pytest.raises(ValueError, match="permutation"):
            case_machinery(case, gen_order=[0, 0, 1, 2, 3, 4])


class TestSchreierTransversal:
    def test_trivial_group(self):
        phi, psi = trivial_pair(3, 3)
        pres = ProductPresentation(phi.presentation(), psi.presentation())
        data = schreier_transversal(coset_table(pres, difference_hom(phi, psi)))
        assert data.transversal == (Word(),)
        assert data.ncols == 6  # every (coset, generator) pair is nontrivial

    def test_case3_first_coset_representative(self):
        case = builtin_case(3)
        _, diff, table, data = case_machinery(case)
        e1 = case.group.basis()[0]
        idx = table.cosets.index(e1)
        assert data.transversal[idx] == Word.parse("a1")

    def test_words_evaluate_to_their_coset(self, cases):
        for case in cases:
            _, diff, table, data = case_machinery(case)
            for c in range(table.size):
                assert diff.evaluate(data.transversal[c]) == table.cosets[c]

    def test_prefix_closed(self, cases):
        for case in cases:
            _, _, table, data = case_machinery(case)
            words = {w.letters for w in data.transversal}
            for w in data.transversal:
                for cut in range(len(w.letters)):
                    assert w.letters[:cut] in words

    def test_case1_tree_and_column_counts(self):
        case = builtin_case(1)
        _, _, table, data = case_machinery(case)
        assert len(data.tree) == 7
        assert data.ncols == 8 * 11 - 7 == 81

    def test_counting_formula(self, cases):
        for case in cases:
            _, _, table, data = case_machinery(case)
            total = table.size * (case.n + case.m)
            assert data.ncols == total - (table.size - 1)


class TestRewriting:
    def test_case1_square_relator_at_identity(self):
        case = builtin_case(1)
        _, _, table, data = case_machinery(case)
        row = rewrite_relator(Word.parse("a1 a1"), data.transversal[0], data)
        e1 = case.group.basis()[0]
        expected_column = data.columns[(table.cosets.index(e1), 0)]
        assert row[expected_column] == 1
        assert sum(abs(x) for x in row) == 1

    def test_commutator_relator_weight(self):
        case = builtin_case(1)
        _, _, table, data = case_machinery(case)
        row = rewrite_relator(
            Word.parse("a1 b1 a1^-1 b1^-1"), data.transversal[0], data
        )
        assert sum(abs(x) for x in row) <= 4

    def test_expansion_is_freely_equal_to_conjugate(self, cases):
        # Expanding the emitted kernel generators back to words of F must
        # reproduce t r t^-1 up to free reduction.
        rng = random.Random(37)
        for case in cases:
            pres, _, table, data = case_machinery(case)
            relators = pres.relators()
            for _ in range(8):
                c = rng.randrange(table.size)
                r = relators[rng.randrange(len(relators))]
                t = data.transversal[c]
                conjugate = t * r * t.inverse()
                expansion = Word()
                for (coset, pos), sign in rewrite_trace(conjugate, data):
                    piece = data.generator_word(coset, pos)
                    expansion = expansion * (piece if sign == 1 else piece.inverse())
                assert free_reduce(expansion) == free_reduce(conjugate)

    def test_rewritten_rows_are_kernel_elements(self):
        case = builtin_case(3)
        pres, diff, table, data = case_machinery(case)
        for r in pres.relators():
            for c in range(table.size):
                t = data.transversal[c]
                assert diff.evaluate(t * r * t.inverse()).is_zero()


class TestKernelH1:
    @pytest.mark.parametrize("case_id", [1, 2, 3, 4])
    def test_known_values(self, case_id):
        case = builtin_case(case_id)
        assert kernel_h1(case.phi, case.psi) == KNOWN_H1[case_id]

    def test_trivial_group_gives_free_module(self):
        for n, m, k in ((4, 3, 2), (3, 3, 3), (5, 4, 2)):
            phi, psi = trivial_pair(n, m, k)
            assert kernel_h1(phi, psi) == InvariantFactors((k,) * (n + m - 2))

    def test_independent_of_bfs_generator_order(self):
        rng = random.Random(41)
        for case_id in (1, 3):
            case = builtin_case(case_id)
            base = kernel_h1(case.phi, case.psi)
            size = case.n + case.m
            orders = [list(reversed(range(size)))]
            for _ in range(2):
                perm = list(range(size))
                rng.shuffle(perm)
                orders.append(perm)
            for perm in orders:
                assert kernel_h1(case.phi, case.psi, gen_order=perm) == base

    def test_matrix_shape_case2(self):
        case = builtin_case(2)
        matrix = relation_matrix(case.phi, case.psi)
        assert (matrix.rows, matrix.cols) == (16 * 37, 145)

    def test_invalid_case_rejected(self):
        case = builtin_case(1)
        images = list(case.phi.images)
        images[4] = case.group.basis()[1]
        broken = GeneratingSystem(case.group, tuple(images), case.k)
        with pytest.raises(InvalidCaseError):
            kernel_h1(broken, case.psi)
