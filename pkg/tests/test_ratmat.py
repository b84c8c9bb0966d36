from fractions import Fraction as Q

from liepar.ratmat import (
    BilinearForm,
    Matrix,
    Subspace,
    kernel,
    rref,
    solve,
)


def unit(n, i):
    v = [Q(0)] * n
    v[i] = Q(1)
    return v


def test_rref_rank_collapse():
    m = Matrix([[2, 4], [1, 2]])
    assert rref(m) == Matrix([[1, 2]])


def test_rref_identity_and_permutation():
    assert rref(Matrix.identity(3)) == Matrix.identity(3)
    assert rref(Matrix([[0, 1], [1, 0]])) == Matrix.identity(2)


def test_rref_idempotent():
    m = Matrix([[1, 2, 3], [2, 4, 7], [0, 0, 1]])
    assert rref(rref(m)) == rref(m)


def test_sum_intersect_contains():
    e1 = Subspace.from_vectors(3, [unit(3, 0)])
    e2 = Subspace.from_vectors(3, [unit(3, 1)])
    s12 = Subspace.from_vectors(3, [unit(3, 0), unit(3, 1)])
    s23 = Subspace.from_vectors(3, [unit(3, 1), unit(3, 2)])
    assert e1.sum(e2) == s12
    assert s12.intersect(s23) == e2
    assert Subspace.full(3).contains(s23)
    assert s12.contains(s12.intersect(s23))
    assert s12.sum(s23).contains(s12)


def test_dim_formula():
    s = Subspace.from_vectors(4, [[1, 0, 1, 0], [0, 1, 0, 0]])
    t = Subspace.from_vectors(4, [[1, 1, 1, 0], [0, 0, 0, 1]])
    assert s.sum(t).dim + s.intersect(t).dim == s.dim + t.dim


def test_solve_cases():
    ident = Matrix.identity(2)
    part, ker = solve(ident, [Q(3), Q(5)])
    assert part == (Q(3), Q(5)) and ker.dim == 0
    part, ker = solve(Matrix.zero(2, 2), [Q(0), Q(0)])
    assert ker.dim == 2
    part, ker = solve(Matrix([[1, 1]]), [Q(2)])
    # particular + kernel describes the full affine line
    assert part[0] + part[1] == 2
    assert ker == Subspace.from_vectors(2, [[1, -1]])
    assert solve(Matrix([[1], [1]]), [Q(0), Q(1)]) is None


def test_kernel():
    k = kernel(Matrix([[1, 2, 3]]))
    assert k.dim == 2
    for v in k.vectors():
        assert v[0] + 2 * v[1] + 3 * v[2] == 0


# Gram matrix of tr(xy) on gl_2 in the basis E11, E12, E21, E22:
# tr(E_ij E_kl) = delta_jk delta_li
GL2_GRAM = Matrix([
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1],
])


def test_perp_gl2_trace_form():
    form = BilinearForm(GL2_GRAM)
    assert form.is_nondegenerate()
    upper = Subspace.from_vectors(4, [unit(4, 0), unit(4, 1), unit(4, 3)])
    p = upper.perp(form)
    assert p == Subspace.from_vectors(4, [unit(4, 1)])
    assert Subspace.full(4).perp(form).dim == 0
    assert Subspace.zero(4).perp(form) == Subspace.full(4)


def test_perp_inclusion_reversing_and_involutive():
    form = BilinearForm(GL2_GRAM)
    s = Subspace.from_vectors(4, [[1, 2, 0, 0], [0, 0, 1, 1]])
    t = Subspace.from_vectors(4, [[1, 2, 0, 0]])
    assert s.contains(t)
    assert t.perp(form).contains(s.perp(form))
    assert s.perp(form).perp(form) == s
    assert s.dim + s.perp(form).dim == 4


def test_reduce_and_coordinates():
    s = Subspace.from_vectors(3, [[1, 0, 1], [0, 1, 0]])
    assert s.contains_vector([2, 3, 2])
    assert not s.contains_vector([1, 0, 0])
    r = s.reduce([2, 3, 5])
    assert s.reduce(r) == r  # canonical residual is idempotent
    assert s.coordinates_of([2, 3, 2]) == (Q(2), Q(3))


def test_structural_equality():
    a = Subspace.from_vectors(3, [[1, 1, 0], [0, 0, 2]])
    b = Subspace.from_vectors(3, [[2, 2, 2], [0, 0, 1]])
    assert a == b and hash(a) == hash(b)
