"""Structure-constant Lie algebras over the rationals.

Brackets, transporters, normalizers/centralizers, induced filtrations,
nilpotency tests, trace forms, ad-Jordan semisimple parts, terminating
exponentials, and quotient algebras.  An algebra may carry a faithful
matrix realization; its trace form then serves as the invariant form
used for perps.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Optional, Sequence

from .errors import DomainError, InternalCheckError
from .ratmat import (
    BilinearForm,
    Matrix,
    Q,
    Subspace,
    kernel,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)

__all__ = ["LieAlgebra", "Filtration", "minimal_polynomial"]


# ---------------------------------------------------------------------------
# polynomials over Q, coefficient lists low-to-high

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_monic(p):
    lead = p[-1]
    if lead == 1:
        return p
    return [c / lead for c in p]


def _poly_divmod(a, b):
    a = list(a)
    q = [Q(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        s = len(a) - len(b)
        q[s] = f
        for i, c in enumerate(b):
            a[s + i] -= f * c
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return _poly_monic(a) if a else a


def _poly_lcm(a, b):
    if not a:
        return list(b)
    if not b:
        return list(a)
    g = _poly_gcd(a, b)
    q, r = _poly_divmod(a, g)
    assert not r
    prod = [Q(0)] * (len(q) + len(b) - 1)
    for i, c in enumerate(q):
        if c:
            for j, d in enumerate(b):
                prod[i + j] += c * d
    return _poly_monic(_poly_trim(prod))


def _poly_deriv(p):
    return _poly_trim([Q(i) * c for i, c in enumerate(p)][1:])


def poly_squarefree_part(p):
    g = _poly_gcd(p, _poly_deriv(p))
    if len(g) <= 1:
        return _poly_monic(list(p))
    q, r = _poly_divmod(p, g)
    assert not r
    return _poly_monic(q)


def poly_eval_matrix(p, m: Matrix) -> Matrix:
    out = Matrix.zero(m.rows, m.cols)
    for c in reversed(p):
        out = out * m
        if c:
            out = out + Matrix.identity(m.rows).scale(c)
    return out


def poly_rational_roots(p):
    """All rational roots with multiplicity: list of (root, mult).

    Returns (roots, remainder_degree); remainder_degree > 0 means the
    polynomial does not split into rational linear factors.
    """
    p = _poly_monic(list(p))
    roots = []
    # clear denominators, then rational root theorem on the result
    while len(p) > 1:
        den = 1
        for c in p:
            den = den * c.denominator // _gcd(den, c.denominator)
        ip = [int(c * den) for c in p]
        while ip and ip[0] == 0:
            # factor of t
            roots.append(Q(0))
            p, r = _poly_divmod(p, [Q(0), Q(1)])
            assert not r
            ip = ip[1:]
        if len(p) <= 1:
            break
        found = None
        a0, an = abs(ip[0]), abs(ip[-1])
        for num in _divisors(a0):
            for den2 in _divisors(an):
                for s in (1, -1):
                    cand = Q(s * num, den2)
                    if _poly_eval(p, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return roots, len(p) - 1
        roots.append(found)
        p, r = _poly_divmod(p, [-found, Q(1)])
        assert not r
    return roots, 0


def _poly_eval(p, x):
    v = Q(0)
    for c in reversed(p):
        v = v * x + c
    return v


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def minimal_polynomial(m: Matrix):
    """Monic minimal polynomial of m, by Krylov iteration per basis
    vector and lcm over vectors (low-to-high coefficient list)."""
    n = m.rows
    mp = [Q(1)]
    for j in range(n):
        v = tuple(Q(1) if i == j else Q(0) for i in range(n))
        ann = _vector_annihilator(m, v)
        mp = _poly_lcm(mp, ann)
        if len(mp) == n + 1:
            break
    return mp


def _vector_annihilator(m: Matrix, v):
    # echelon of Krylov vectors, each tagged with the poly producing it
    basis = []  # (reduced vec, poly, pivot)
    raw = v
    k = 0
    while True:
        w = list(raw)
        q = [Q(0)] * k + [Q(1)]  # t^k
        for bv, bp, piv in basis:
            f = w[piv]
            if f:
                w = [a - f * b for a, b in zip(w, bv)]
                for i, c in enumerate(bp):
                    q[i] -= f * c
        if vec_is_zero(w):
            return _poly_monic(_poly_trim(q))
        piv = next(i for i, x in enumerate(w) if x != 0)
        inv = 1 / w[piv]
        basis.append(
            ([x * inv for x in w], [c * inv for c in q] + [Q(0)], piv)
        )
        raw = m.mulvec(raw)
        k += 1


def _matrix_inverse(m: Matrix) -> Matrix:
    n = m.rows
    aug = [list(r) + [Q(1) if i == j else Q(0) for j in range(n)]
           for i, r in enumerate(m.data)]
    from .ratmat import _rref_rows

    red = _rref_rows(aug)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        raise DomainError("matrix not invertible")
    return Matrix([r[n:] for r in red])


# ---------------------------------------------------------------------------


class Filtration:
    """Integer-indexed increasing chain of subspaces, constant outside
    [min_index, max_index]."""

    def __init__(self, levels: dict, check: Optional[Callable] = None):
        self.levels = dict(levels)
        self.min_index = min(self.levels)
        self.max_index = max(self.levels)
        ks = sorted(self.levels)
        for a, b in zip(ks, ks[1:]):
            if b != a + 1:
                raise DomainError("filtration indices not contiguous")
            if not self.levels[b].contains(self.levels[a]):
                raise DomainError("filtration not monotone")
        if check is not None:
            check(self)

    def level(self, k: int) -> Subspace:
        if k < self.min_index:
            k = self.min_index
        elif k > self.max_index:
            k = self.max_index
        return self.levels[k]

    def indices(self):
        return range(self.min_index, self.max_index + 1)


class LieAlgebra:
    """Lie algebra given by structure constants c[i][j] = coordinates
    of [b_i, b_j].

    ``realization`` is an optional faithful list of square matrices;
    ``form`` is the invariant symmetric form used for perps (defaults
    to the realization's trace form).
    """

    def __init__(self, structure, labels=None, realization=None, form=None,
                 validate=True):
        self.dim = len(structure)
        self.structure = tuple(
            tuple(tuple(Q(x) for x in vec) for vec in row) for row in structure
        )
        for row in self.structure:
            if len(row) != self.dim or any(len(v) != self.dim for v in row):
                raise DomainError("structure tensor shape mismatch")
        self.labels = tuple(labels) if labels else tuple(
            "b%d" % i for i in range(self.dim)
        )
        self.realization = tuple(realization) if realization else None
        if self.realization is not None and len(self.realization) != self.dim:
            raise DomainError("realization size mismatch")
        self.trace_form = None
        if self.realization is not None:
            gram = Matrix(
                [[(ri * rj).trace() for rj in self.realization]
                 for ri in self.realization]
            )
            self.trace_form = BilinearForm(gram)
        self.form = form if form is not None else self.trace_form
        self._derived = None
        self._center = None
        if validate:
            self._validate()

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def from_matrices(mats: Sequence[Matrix], labels=None) -> "LieAlgebra":
        """Build structure constants from commutators of a linearly
        independent family of matrices closed under commutator."""
        mats = list(mats)
        n = len(mats)
        sz = mats[0].rows
        flat = Subspace.from_vectors(
            sz * sz, [[m[i, j] for i in range(sz) for j in range(sz)]
                      for m in mats]
        )
        if flat.dim != n:
            raise DomainError("matrices not linearly independent")
        coords_cache = {}

        def coords(m):
            key = m
            if key not in coords_cache:
                v = [m[i, j] for i in range(sz) for j in range(sz)]
                cs = _solve_coords(mats, v, sz)
                if cs is None:
                    raise DomainError("family not closed under commutator")
                coords_cache[key] = cs
            return coords_cache[key]

        structure = []
        for i in range(n):
            row = []
            for j in range(n):
                if j < i:
                    row.append(vec_scale(-1, structure[j][i]))
                elif j == i:
                    row.append(zero_vec(n))
                else:
                    comm = mats[i] * mats[j] - mats[j] * mats[i]
                    row.append(coords(comm))
            structure.append(tuple(row))
        return LieAlgebra(structure, labels=labels, realization=mats)

    def _validate(self):
        c = self.structure
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                if c[i][j] != vec_scale(-1, c[j][i]):
                    raise DomainError(
                        "antisymmetry fails at (%d,%d)" % (i, j)
                    )
        for i in range(n):
            for j in range(i + 1, n):
                cij = c[i][j]
                for k in range(j + 1, n):
                    # [b_i,[b_j,b_k]] = [[b_i,b_j],b_k] + [b_j,[b_i,b_k]]
                    lhs = self._bracket_basis_vec(i, c[j][k])
                    rhs = vec_add(
                        vec_scale(-1, self._bracket_basis_vec(k, cij)),
                        self._bracket_basis_vec(j, c[i][k]),
                    )
                    if lhs != rhs:
                        raise DomainError(
                            "Jacobi fails at (%d,%d,%d)" % (i, j, k)
                        )
        if self.realization is not None:
            for i in range(n):
                for j in range(i + 1, n):
                    comm = (self.realization[i] * self.realization[j]
                            - self.realization[j] * self.realization[i])
                    want = Matrix.zero(comm.rows, comm.cols)
                    for k, x in enumerate(c[i][j]):
                        if x:
                            want = want + self.realization[k].scale(x)
                    if comm != want:
                        raise DomainError(
                            "realization disagrees with structure at"
                            " (%d,%d)" % (i, j)
                        )

    # -- brackets ------------------------------------------------------------

    @property
    def _sparse(self):
        # structure tensor as {(i, j): [(k, c), ...]} over nonzeros;
        # the tensor is sparse for all catalog algebras, so bracketing
        # through it beats the dense loops by a wide margin
        sp = getattr(self, "_sparse_cache", None)
        if sp is None:
            sp = {}
            for i, row in enumerate(self.structure):
                for j, vec in enumerate(row):
                    ent = [(k, c) for k, c in enumerate(vec) if c]
                    if ent:
                        sp[(i, j)] = ent
            self._sparse_cache = sp
        return sp

    def _bracket_basis_vec(self, i, v):
        """[b_i, v] for a coordinate vector v."""
        out = [Q(0)] * self.dim
        sp = self._sparse
        for j, x in enumerate(v):
            if x:
                ent = sp.get((i, j))
                if ent:
                    for k, c in ent:
                        out[k] += x * c
        return tuple(out)

    def bracket(self, x, y):
        out = [Q(0)] * self.dim
        sp = self._sparse
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                ent = sp.get((i, j))
                if ent:
                    xy = xi * yj
                    for k, c in ent:
                        out[k] += xy * c
        return tuple(out)

    def ad(self, x) -> Matrix:
        """Matrix of ad(x): v ↦ [x, v] on coordinates."""
        cols = [self.bracket(x, _unit(self.dim, j)) for j in range(self.dim)]
        return Matrix([[cols[j][k] for j in range(self.dim)]
                       for k in range(self.dim)])

    def basis_element(self, i):
        return _unit(self.dim, i)

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.dim)

    def bracket_spaces(self, s: Subspace, t: Subspace) -> Subspace:
        vecs = []
        for u in s.vectors():
            for v in t.vectors():
                vecs.append(self.bracket(u, v))
        return Subspace.from_vectors(self.dim, vecs)

    def is_subalgebra(self, s: Subspace) -> bool:
        return s.contains(self.bracket_spaces(s, s))

    # -- transporters --------------------------------------------------------

    def transporter(self, a: Subspace, b: Subspace) -> Subspace:
        """c_g(a,b) = {x : [x, a] ⊆ b}."""
        n = self.dim
        if a.dim == 0:
            return Subspace.full(n)
        rows = []
        for av in a.vectors():
            # column i of the constraint block: [b_i, av] reduced mod b
            cols = [b.reduce(self._bracket_basis_vec(i, av)) for i in range(n)]
            for k in range(n):
                row = [cols[i][k] for i in range(n)]
                if not vec_is_zero(row):
                    rows.append(row)
        if not rows:
            return Subspace.full(n)
        return kernel(Matrix(rows))

    def normalizer(self, s: Subspace) -> Subspace:
        return self.transporter(s, s)

    def centralizer(self, s: Subspace) -> Subspace:
        return self.transporter(s, Subspace.zero(self.dim))

    def centralizer_element(self, x) -> Subspace:
        return kernel(self.ad(x))

    def center(self) -> Subspace:
        if self._center is None:
            self._center = self.centralizer(Subspace.full(self.dim))
        return self._center

    # -- derived series / nilpotency ----------------------------------------

    def derived_algebra(self) -> Subspace:
        if self._derived is None:
            vecs = []
            for i in range(self.dim):
                for j in range(i + 1, self.dim):
                    vecs.append(self.structure[i][j])
            self._derived = Subspace.from_vectors(self.dim, vecs)
        return self._derived

    def lower_central_series(self, s: Subspace):
        if not self.is_subalgebra(s):
            raise DomainError("not a subalgebra")
        series = [s]
        while True:
            nxt = self.bracket_spaces(s, series[-1])
            if nxt == series[-1]:
                break
            series.append(nxt)
            if nxt.dim == 0:
                break
        return series

    def is_nilpotent_subalgebra(self, s: Subspace) -> bool:
        return self.lower_central_series(s)[-1].dim == 0

    # -- filtrations ---------------------------------------------------------

    def induced_filtration(self, n: Subspace, p: Subspace) -> Filtration:
        """Filtration with f^(-1) = n, f^(0) = p, negative levels by
        bracketing with n, positive levels by transporting into the
        previous level."""
        if not self.is_subalgebra(n):
            raise DomainError("n not a subalgebra")
        if not self.is_subalgebra(p):
            raise DomainError("p not a subalgebra")
        if not p.contains(n):
            raise DomainError("n not contained in p")
        if not self.normalizer(n).contains(p):
            raise DomainError("p does not normalize n")
        levels = {-1: n, 0: p}
        cap = 2 * self.dim + 1
        k = -1
        while True:
            nxt = self.bracket_spaces(n, levels[k])
            if nxt == levels[k]:
                if nxt.dim != 0:
                    raise DomainError("negative levels do not stabilize at 0"
                                      " (n not nilpotent)")
                break
            levels[k - 1] = nxt
            k -= 1
            if len(levels) > cap:
                raise InternalCheckError("filtration failed to stabilize")
        k = 0
        while True:
            nxt = self.transporter(n, levels[k])
            if nxt == levels[k]:
                break
            levels[k + 1] = nxt
            k += 1
            if len(levels) > cap:
                raise InternalCheckError("filtration failed to stabilize")

        def _check(f):
            for i in f.indices():
                for j in f.indices():
                    br = self.bracket_spaces(f.level(i), f.level(j))
                    if not f.level(i + j).contains(br):
                        raise InternalCheckError(
                            "filtration compatibility fails at (%d,%d)"
                            % (i, j)
                        )

        return Filtration(levels, check=_check)

    # -- nilpotent cone, Jordan, exp ----------------------------------------

    def in_nilpotent_cone(self, x) -> bool:
        if not self.derived_algebra().contains_vector(x):
            return False
        mp = minimal_polynomial(self.ad(x))
        return all(c == 0 for c in mp[:-1])

    def is_ad_nilpotent(self, x) -> bool:
        mp = minimal_polynomial(self.ad(x))
        return all(c == 0 for c in mp[:-1])

    def is_ad_semisimple(self, x) -> bool:
        mp = minimal_polynomial(self.ad(x))
        g = _poly_gcd(mp, _poly_deriv(mp))
        return len(g) <= 1

    def ad_semisimple_part(self, x) -> Matrix:
        """Semisimple part of ad(x) via Newton iteration on the
        squarefree part of the minimal polynomial."""
        m = self.ad(x)
        mp = minimal_polynomial(m)
        f = poly_squarefree_part(mp)
        fp = _poly_deriv(f)
        s = m
        for _ in range(self.dim + 1):
            fs = poly_eval_matrix(f, s)
            if fs.is_zero():
                return s
            s = s - fs * _matrix_inverse(poly_eval_matrix(fp, s))
        raise InternalCheckError("Jordan iteration did not converge")

    def exp_ad(self, x, check=False) -> Matrix:
        mp = minimal_polynomial(self.ad(x))
        if any(c != 0 for c in mp[:-1]):
            raise DomainError("exp_ad requires an ad-nilpotent element")
        m = self.ad(x)
        out = Matrix.identity(self.dim)
        term = Matrix.identity(self.dim)
        for k in range(1, len(mp)):
            term = term * m
            out = out + term.scale(Q(1, factorial(k)))
        if check:
            self._check_automorphism(out)
        return out

    def _check_automorphism(self, a: Matrix):
        for i in range(self.dim):
            ai = a.col(i)
            for j in range(i + 1, self.dim):
                lhs = a.mulvec(self.structure[i][j])
                if lhs != self.bracket(ai, a.col(j)):
                    raise InternalCheckError("not an automorphism")
        if self.form is not None:
            g = self.form.gram
            if a.transpose() * g * a != g:
                raise InternalCheckError("automorphism does not fix the form")

    def apply_auto(self, a: Matrix, s: Subspace) -> Subspace:
        return Subspace.from_vectors(
            self.dim, [a.mulvec(v) for v in s.vectors()]
        )

    # -- forms ---------------------------------------------------------------

    def is_reductive(self):
        """True if the attached trace form is nondegenerate; None
        (inconclusive) if it is degenerate; raises without realization."""
        if self.trace_form is None:
            raise DomainError("no realization attached")
        if self.trace_form.is_nondegenerate():
            return True
        return None

    def perp(self, s: Subspace) -> Subspace:
        if self.form is None:
            raise DomainError("no invariant form available")
        return s.perp(self.form)

    # -- subalgebras and quotients -------------------------------------------

    def restrict(self, space: Subspace):
        """Structure constants of a subalgebra on its canonical basis.

        Returns (sub_algebra, to_sub, to_ambient) where to_sub maps
        ambient coordinate vectors of elements of the subalgebra to
        subalgebra coordinates and to_ambient is the inverse inclusion.
        """
        if not self.is_subalgebra(space):
            raise DomainError("not a subalgebra")
        basis = space.vectors()
        d = len(basis)
        structure = []
        for i in range(d):
            row = []
            for j in range(d):
                if j < i:
                    row.append(vec_scale(-1, structure[j][i]))
                elif j == i:
                    row.append(zero_vec(d))
                else:
                    br = self.bracket(basis[i], basis[j])
                    cs = space.coordinates_of(br)
                    assert cs is not None
                    row.append(cs)
            structure.append(tuple(row))
        form = None
        if self.form is not None:
            form = self.form.restrict(basis)
        sub = LieAlgebra(structure, form=form, validate=False)

        def to_sub(v):
            cs = space.coordinates_of(v)
            if cs is None:
                raise DomainError("vector not in subalgebra")
            return cs

        def to_ambient(c):
            out = zero_vec(self.dim)
            for ci, b in zip(c, basis):
                if ci:
                    out = vec_add(out, vec_scale(ci, b))
            return out

        return sub, to_sub, to_ambient

    def quotient_algebra(self, ideal: Subspace):
        """Quotient by a verified ideal.

        Returns (quotient, proj, section) with proj mapping coordinate
        vectors to quotient coordinates and section a list of ambient
        coordinate vectors representing the quotient basis.
        """
        if not ideal.contains(
            self.bracket_spaces(Subspace.full(self.dim), ideal)
        ):
            raise DomainError("not an ideal")
        pivset = set(ideal._pivots)
        comp = [k for k in range(self.dim) if k not in pivset]
        d = len(comp)

        def proj(v):
            w = ideal.reduce(v)
            return tuple(w[k] for k in comp)

        section = [_unit(self.dim, k) for k in comp]
        structure = []
        for i in range(d):
            row = []
            for j in range(d):
                if j < i:
                    row.append(vec_scale(-1, structure[j][i]))
                elif j == i:
                    row.append(zero_vec(d))
                else:
                    row.append(proj(self.bracket(section[i], section[j])))
            structure.append(tuple(row))
        quo = LieAlgebra(structure, validate=True)
        return quo, proj, section


def _unit(n, i):
    return tuple(Q(1) if k == i else Q(0) for k in range(n))


def _solve_coords(mats, flat_target, sz):
    rows = [[m[i, j] for m in mats] for i in range(sz) for j in range(sz)]
    from .ratmat import solve

    res = solve(Matrix(rows), flat_target)
    if res is None:
        return None
    return res[0]
