import random
from fractions import Fraction

import pytest

from fk3hh.exactmath import (
    QQ,
    FieldError,
    PrimeField,
    SparseMat,
    Subspace,
    field_from_name,
)


def dense(mat):
    return [[mat.get(i, j) for j in range(mat.cols)] for i in range(mat.rows)]


def random_sparse(rng, rows, cols, density=0.2, field=QQ):
    ent = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                ent[(i, j)] = field.of(rng.randint(-5, 5))
    return SparseMat(rows, cols, ent, field)


def naive_rank(mat):
    # plain dense fraction-based elimination, no pivot strategy
    rows = [[Fraction(mat.field.of(mat.get(i, j))) if mat.field is QQ else mat.get(i, j)
             for j in range(mat.cols)] for i in range(mat.rows)]
    F = mat.field
    rank = 0
    col = 0
    r = 0
    while r < len(rows) and col < mat.cols:
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col] != F.zero:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        for i in range(len(rows)):
            if i != r and rows[i][col] != F.zero:
                coef = F.div(rows[i][col], pv)
                rows[i] = [F.sub(x, F.mul(coef, y)) for x, y in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        col += 1
    return rank


def test_field_parsing():
    assert field_from_name("q") is QQ
    assert field_from_name("prime:10007").p == 10007
    with pytest.raises(FieldError):
        field_from_name("prime:4")
    with pytest.raises(FieldError):
        PrimeField(3)
    with pytest.raises(FieldError):
        field_from_name("float")


def test_prime_field_ops():
    F = PrimeField(7)
    assert F.of(Fraction(1, 3)) == 5  # 3*5 = 15 = 1 mod 7
    assert F.mul(3, 5) == 1
    assert F.inv(2) == 4
    with pytest.raises(FieldError):
        F.of(Fraction(1, 7))


def test_rank_trivial():
    assert SparseMat.zero(0, 0).rank() == 0
    assert SparseMat.identity(12).rank() == 12
    assert SparseMat.zero(5, 7).rank() == 0


def test_kernel_trivial():
    assert SparseMat.identity(4).kernel().dim == 0
    ker = SparseMat.zero(3, 3).kernel()
    assert ker.dim == 3


def test_image_trivial():
    assert SparseMat.zero(3, 3).image().dim == 0
    m = SparseMat(2, 2, {(0, 0): 1, (1, 0): 2})
    img = m.image()
    assert img.dim == 1
    assert img.contains({0: Fraction(1), 1: Fraction(2)})
    assert not img.contains({0: Fraction(1)})


def test_solve_trivial():
    ident = SparseMat.identity(3)
    rhs = {0: Fraction(2), 2: Fraction(-1)}
    assert ident.solve(rhs) == rhs
    zero = SparseMat.zero(2, 2)
    assert zero.solve({0: Fraction(1)}) is None
    assert zero.solve({}) == {}


def test_solve_exact_property():
    rng = random.Random(7)
    for _ in range(25):
        m = random_sparse(rng, rng.randint(1, 12), rng.randint(1, 12))
        x0 = {j: Fraction(rng.randint(-3, 3)) for j in range(m.cols) if rng.random() < 0.5}
        rhs = m.apply(x0)
        sol = m.solve(rhs)
        assert sol is not None
        assert m.apply(sol) == rhs


def test_solve_many_mixed_consistency():
    # first rhs inconsistent, second consistent: no cross-contamination
    m = SparseMat(2, 1, {(0, 0): 1})  # x |-> (x, 0)
    bad = {1: Fraction(1)}
    good = {0: Fraction(3)}
    sols = m.solve_many([bad, good, bad])
    assert sols[0] is None and sols[2] is None
    assert sols[1] == {0: Fraction(3)}


def test_rank_transpose_agreement():
    rng = random.Random(1234)
    for _ in range(10):
        m = random_sparse(rng, rng.randint(1, 40), rng.randint(1, 40), 0.15)
        assert m.rank() == m.transpose().rank()
    # one larger sparse instance
    big = random_sparse(rng, 200, 200, 0.02)
    assert big.rank() == big.transpose().rank()


def test_rank_matches_naive_and_modp():
    rng = random.Random(99)
    Fp = PrimeField(10007)
    for _ in range(10):
        rows, cols = rng.randint(1, 25), rng.randint(1, 25)
        m = random_sparse(rng, rows, cols, 0.25)
        r = m.rank()
        assert r == naive_rank(m)
        # over a big prime the ranks of these small-entry matrices agree
        mp = SparseMat(rows, cols, {k: v for (k, v) in
                                    ((t[:2], t[2]) for t in m.triplets())}, Fp)
        assert mp.rank() == r


def test_rank_nullity():
    rng = random.Random(5)
    for _ in range(15):
        m = random_sparse(rng, rng.randint(1, 20), rng.randint(1, 20), 0.3)
        assert m.kernel().dim + m.rank() == m.cols
        assert m.image().dim == m.rank()


def test_kernel_vectors_annihilate():
    rng = random.Random(21)
    for _ in range(10):
        m = random_sparse(rng, 8, 10, 0.3)
        for vec in m.kernel().basis_dicts():
            assert m.apply(vec) == {}


def test_subspace_canonical_equality():
    # same plane presented by different spanning sets
    s1 = Subspace.span(3, [{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(1), 2: Fraction(1)}])
    s2 = Subspace.span(3, [{0: Fraction(2), 1: Fraction(2)},
                           {0: Fraction(1), 2: Fraction(-1)}])
    assert s1 == s2
    assert s1.dim == 2


def test_matmul_and_apply_agree():
    rng = random.Random(3)
    a = random_sparse(rng, 6, 5, 0.4)
    b = random_sparse(rng, 5, 4, 0.4)
    ab = a.matmul(b)
    for j in range(4):
        col = b.col_dict(j)
        assert a.apply(col) == ab.col_dict(j)


def test_triplets_canonical():
    m = SparseMat(2, 2, [(1, 1, 3), (0, 0, 1), (1, 1, -3)])
    assert m.triplets() == [(0, 0, Fraction(1))]
    assert m == SparseMat(2, 2, {(0, 0): 1})


def test_factorized_solver_matches_solve():
    rng = random.Random(17)
    for _ in range(15):
        m = random_sparse(rng, rng.randint(1, 12), rng.randint(1, 12), 0.3)
        solver = m.solver()
        for _ in range(4):
            if rng.random() < 0.5:
                x0 = {j: Fraction(rng.randint(-3, 3)) for j in range(m.cols)
                      if rng.random() < 0.5}
                rhs = m.apply(x0)
            else:
                rhs = {i: Fraction(rng.randint(-3, 3)) for i in range(m.rows)
                       if rng.random() < 0.5}
            got = solver.solve(rhs)
            want = m.solve(rhs)
            assert (got is None) == (want is None)
            if got is not None:
                assert m.apply(got) == {k: v for k, v in rhs.items() if v}
