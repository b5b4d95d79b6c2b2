import math
import random

import pytest

from dfw.abelian import CanonicalForm, PresentedGroup
from dfw.functors import (
    FreeComplex,
    basis,
    ext_relations,
    functor_on_group,
    induced_map,
    is_lyndon,
    koszul_sp,
    lie3_embedding,
    sym_relations,
)
from dfw.linalg import IntMatrix, kron, rank, smith_diagonal, solve_matrix


def random_matrix(rng, rows, cols, bound=3):
    return IntMatrix(rows, cols, (rng.randint(-bound, bound) for _ in range(rows * cols)))


class TestBases:
    def test_counts_match_closed_formulas(self):
        for r in range(0, 7):
            assert basis("tensor", 3, r).size == r**3
            assert basis("sym", 2, r).size == math.comb(r + 1, 2)
            assert basis("sym", 4, r).size == math.comb(r + 3, 4)
            assert basis("ext", 2, r).size == math.comb(r, 2)
            assert basis("ext", 3, r).size == math.comb(r, 3)
            assert basis("lie3", 3, r).size == (r**3 - r) // 3

    def test_index_round_trips(self):
        for kind, degree in [("tensor", 2), ("sym", 3), ("ext", 2), ("lie3", 3)]:
            b = basis(kind, degree, 4)
            for i in range(b.size):
                assert b.rank_of(b.tuple_at(i)) == i

    def test_degree_bounds(self):
        with pytest.raises(ValueError):
            basis("sym", 6, 2)
        with pytest.raises(ValueError):
            basis("ext", 4, 5)
        with pytest.raises(ValueError):
            basis("lie3", 2, 2)

    def test_lyndon_words(self):
        assert is_lyndon((0, 0, 1))
        assert is_lyndon((0, 1, 1))
        assert not is_lyndon((0, 0, 0))
        assert not is_lyndon((1, 0, 1))
        assert basis("lie3", 3, 2).elements == ((0, 0, 1), (0, 1, 1))


class TestInducedMaps:
    def test_sym2_identity(self):
        m = induced_map("sym", 2, IntMatrix.identity(2))
        assert m == IntMatrix.identity(3)

    def test_sym2_swap(self):
        # hand expansion of (x <-> y) on monomials x^2, xy, y^2
        swap = IntMatrix.from_rows([[0, 1], [1, 0]])
        m = induced_map("sym", 2, swap)
        assert m == IntMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])

    def test_ext2_diagonal(self):
        # 2e1 ∧ 3e2 = 6 (e1 ∧ e2)
        m = induced_map("ext", 2, IntMatrix.from_rows([[2, 0], [0, 3]]))
        assert m == IntMatrix.from_rows([[6]])

    def test_functoriality_random_pairs(self):
        rng = random.Random(42)
        for kind, degree in [("tensor", 2), ("sym", 2), ("sym", 3), ("ext", 2), ("lie3", 3)]:
            for _ in range(100):
                a = rng.randint(1, 3)
                b = rng.randint(1, 3)
                c = rng.randint(1, 3)
                f = random_matrix(rng, a, b)
                g = random_matrix(rng, b, c)
                lhs = induced_map(kind, degree, f @ g)
                rhs = induced_map(kind, degree, f) @ induced_map(kind, degree, g)
                assert lhs == rhs
            n = rng.randint(1, 4)
            assert induced_map(kind, degree, IntMatrix.identity(n)) == IntMatrix.identity(
                basis(kind, degree, n).size
            )


class TestLie3Embedding:
    def test_rank_one_is_zero(self):
        assert lie3_embedding(1).cols == 0

    def test_rank_two_hand_expansion(self):
        # [x,[x,y]] = xxy - 2 xyx + yxx ; [[x,y],y] = xyy - 2 yxy + yyx
        emb = lie3_embedding(2)
        cube = basis("tensor", 3, 2)
        col0 = emb.col_list(0)
        assert col0[cube.rank_of((0, 0, 1))] == 1
        assert col0[cube.rank_of((0, 1, 0))] == -2
        assert col0[cube.rank_of((1, 0, 0))] == 1
        assert sum(abs(c) for c in col0) == 4
        col1 = emb.col_list(1)
        assert col1[cube.rank_of((0, 1, 1))] == 1
        assert col1[cube.rank_of((1, 0, 1))] == -2
        assert col1[cube.rank_of((1, 1, 0))] == 1

    def test_full_column_rank_matches_witt_count(self):
        for r in range(1, 5):
            emb = lie3_embedding(r)
            expected = (r**3 - r) // 3
            assert emb.cols == expected
            assert rank(emb) == expected
            # saturated sublattice: all invariant factors are 1
            assert all(d == 1 for d in smith_diagonal(emb))

    def test_sublattice_expansion_stays_in_u_u_q(self):
        # expansions of brackets of U-columns keep the first two tensor
        # factors inside U
        rng = random.Random(9)
        for _ in range(10):
            r = rng.randint(2, 4)
            s = rng.randint(2, r)
            u = random_matrix(rng, r, s)
            from dfw.linalg import column_basis

            u = column_basis(u)
            if u.cols < 2:
                continue
            cube_u = induced_map("tensor", 3, u)
            mapped = cube_u @ lie3_embedding(u.cols)
            uuq = kron(kron(u, u), IntMatrix.identity(r))
            assert solve_matrix(uuq, mapped) is not None


class TestKoszul:
    def test_rank_one_collapse(self):
        u = IntMatrix.from_rows([[5]])
        cx = koszul_sp(2, u)
        assert cx.terms == (1, 1, 0)
        assert cx.differentials[0] == IntMatrix.from_rows([[5]])

    def test_rank_one_degree_three(self):
        u = IntMatrix.from_rows([[2]])
        cx = koszul_sp(3, u)
        assert cx.terms == (1, 1, 0)
        assert cx.differentials[0] == IntMatrix.from_rows([[2]])

    def test_d_compose_d_zero_random(self):
        rng = random.Random(31)
        for _ in range(25):
            r = rng.randint(1, 4)
            s = rng.randint(0, r)
            from dfw.linalg import column_basis

            u = column_basis(random_matrix(rng, r, s, 5))
            for m in (2, 3, 4):
                cx = koszul_sp(m, u)  # constructor asserts d o d = 0
                assert (cx.differentials[0] @ cx.differentials[1]).is_zero

    def test_dependent_columns_rejected(self):
        u = IntMatrix.from_cols([[1, 0], [2, 0]], rows=2)
        with pytest.raises(ValueError):
            koszul_sp(2, u)

    def test_free_complex_validates(self):
        with pytest.raises(ValueError):
            FreeComplex(
                terms=(1, 1, 1),
                differentials=(
                    IntMatrix.from_rows([[1]]),
                    IntMatrix.from_rows([[1]]),
                ),
            )


class TestFunctorOnGroup:
    def test_sym2_of_cyclic(self):
        for n in (2, 3, 6):
            g = functor_on_group("sym", 2, PresentedGroup.cyclic(n))
            assert g.canonical == CanonicalForm(0, (n,))

    def test_ext2_of_two_torsion(self):
        g = PresentedGroup.from_invariants(0, (2, 2))
        v = functor_on_group("ext", 2, g)
        assert v.canonical == CanonicalForm(0, (2,))

    def test_superlie3_of_z(self):
        # one bracket {x,x,x} with the cyclic relation 3{x,x,x} = 0
        v = functor_on_group("superlie3", 3, PresentedGroup.free(1))
        assert v.canonical == CanonicalForm(0, (3,))

    def test_tensor_power(self):
        g = PresentedGroup.cyclic(4)
        v = functor_on_group("tensor", 3, g)
        assert v.canonical == CanonicalForm(0, (4,))
        assert functor_on_group("tensor", 0, g).canonical == CanonicalForm(1, ())

    def test_sym_relations_free_quotient(self):
        u = IntMatrix.zeros(3, 0)
        assert sym_relations(2, u).cols == 0
        assert ext_relations(2, u).cols == 0
