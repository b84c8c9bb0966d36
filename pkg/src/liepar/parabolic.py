"""Parabolic subalgebras of reductive Lie algebras.

Recognition with cross-checked certificates, nilradicals and induced
filtrations, Levi quotients, grading lifts and opposites, the pairwise
relations (costandard / weakly opposite / opposite), compatible lifts,
common Levis, parabolic projection, and lowest-weight lines in exterior
powers of the adjoint representation.
"""

from __future__ import annotations

import os
from math import comb
from typing import Optional

from .errors import DomainError, InternalCheckError
from .liealg import Filtration, LieAlgebra, minimal_polynomial
from .ratmat import (
    Matrix,
    Q,
    Subspace,
    kernel,
    solve,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)

__all__ = [
    "ParabolicData",
    "LeviQuotient",
    "is_parabolic",
    "make_parabolic",
    "conjugate_parabolic",
    "grading_lift",
    "ad_eigenspaces",
    "opposite",
    "is_costandard",
    "is_weakly_opposite",
    "is_opposite",
    "project",
    "compatible_lifts",
    "common_levi",
    "lowest_weight_line",
]

EXT_BUDGET_ENV = "LIEPAR_EXT_BUDGET"
DEFAULT_EXT_BUDGET = 512


def _require_form(g: LieAlgebra):
    if g.form is None:
        raise DomainError("no invariant form available")
    if not g.form.is_nondegenerate():
        raise DomainError("invariant form is degenerate")


def is_parabolic(g: LieAlgebra, p: Subspace):
    """Recognize a parabolic subalgebra; returns (bool, certificate).

    The primary test is: p contains its perp and is self-normalizing.
    Three further characterizations are evaluated independently — via
    the nilpotency ideal p ∩ p^perp — and any disagreement among the
    four raises InternalCheckError, since they are provably equivalent
    for subalgebras of a reductive algebra with nondegenerate form.
    """
    _require_form(g)
    if not g.is_subalgebra(p):
        raise DomainError("not a subalgebra")
    pp = g.perp(p)
    nil_ideal = p.intersect(pp)  # radical of the restricted form
    norm_p = g.normalizer(p)
    c4 = p.contains(pp) and norm_p == p
    c5 = g.normalizer(nil_ideal) == p
    c6 = (
        p.contains(pp)
        and pp == nil_ideal
        and g.is_subalgebra(pp)
        and g.is_nilpotent_subalgebra(pp)
        and pp.contains(g.bracket_spaces(p, pp))
    )
    c7 = g.dim - p.dim == nil_ideal.dim
    cert = {
        "perp": pp,
        "normalizer": norm_p,
        "nil_ideal": nil_ideal,
        "conditions": (c4, c5, c6, c7),
    }
    if len({c4, c5, c6, c7}) != 1:
        raise InternalCheckError(
            "parabolic characterizations disagree: %s" % (cert["conditions"],)
        )
    return c4, cert


class LeviQuotient:
    """Levi quotient q/nil(q) with projection and section maps.

    The quotient algebra carries the form induced from the ambient
    one, which is well defined and nondegenerate because the radical
    of the restricted form is exactly the nilradical.
    """

    def __init__(self, parent: "ParabolicData"):
        g = parent.ambient
        sub, to_sub, to_amb = g.restrict(parent.space)
        ideal = Subspace.from_vectors(
            sub.dim, [to_sub(v) for v in parent.nilradical.vectors()]
        )
        quo, proj, section = sub.quotient_algebra(ideal)
        gram = Matrix(
            [[sub.form.value(si, sj) for sj in section] for si in section]
        )
        from .ratmat import BilinearForm

        form = BilinearForm(gram)
        if not form.is_nondegenerate():
            raise InternalCheckError("induced Levi form degenerate")
        self.algebra = LieAlgebra(quo.structure, form=form, validate=False)
        self._to_sub = to_sub
        self._to_amb = to_amb
        self._proj = proj
        self._section = section
        self.parent = parent

    def project_vector(self, v):
        """Ambient coordinates of an element of q ↦ quotient coords."""
        return self._proj(self._to_sub(v))

    def section_vector(self, c):
        """Quotient coordinates ↦ ambient coordinates of a
        representative in the chosen Levi section."""
        out = zero_vec(self.parent.ambient.dim)
        for ci, s in zip(c, self._section):
            if ci:
                out = vec_add(out, vec_scale(ci, self._to_amb(s)))
        return out

    def project_space(self, s: Subspace) -> Subspace:
        return Subspace.from_vectors(
            self.algebra.dim, [self.project_vector(v) for v in s.vectors()]
        )


class ParabolicData:
    """A recognized parabolic with its computed companions."""

    def __init__(self, ambient: LieAlgebra, space: Subspace,
                 nilradical: Subspace, filtration: Filtration = None,
                 certificate=None):
        self.ambient = ambient
        self.space = space
        self.nilradical = nilradical
        self._filtration = filtration
        self.certificate = certificate
        self.grading_element: Optional[tuple] = None
        self._levi: Optional[LeviQuotient] = None

    def __eq__(self, other):
        return (
            isinstance(other, ParabolicData)
            and self.ambient is other.ambient
            and self.space == other.space
        )

    def __hash__(self):
        return hash((id(self.ambient), self.space))

    def __repr__(self):
        return "ParabolicData(dim %d of %d)" % (
            self.space.dim, self.ambient.dim
        )

    @property
    def dim(self):
        return self.space.dim

    @property
    def filtration(self) -> Filtration:
        # computed lazily: consumers that only need the subspace and
        # nilradical (e.g. projection sampling) skip the level checks
        if self._filtration is None:
            self._filtration = self.ambient.induced_filtration(
                self.nilradical, self.space
            )
        return self._filtration

    def levi_quotient(self) -> LeviQuotient:
        if self._levi is None:
            self._levi = LeviQuotient(self)
        return self._levi

    def is_minimal_hint(self) -> bool:
        # a parabolic is minimal iff its Levi quotient has no proper
        # parabolics, which we do not test here; callers that know
        # minimality pass it explicitly where it matters
        raise NotImplementedError


def make_parabolic(g: LieAlgebra, space: Subspace,
                   expect=True) -> ParabolicData:
    ok, cert = is_parabolic(g, space)
    if not ok:
        raise DomainError("subspace is not parabolic")
    nil = cert["perp"]
    pd = ParabolicData(g, space, nil, certificate=cert)
    return pd


def conjugate_parabolic(pd: ParabolicData, auto: Matrix) -> ParabolicData:
    """Image of a parabolic under an algebra automorphism."""
    g = pd.ambient
    return make_parabolic(g, g.apply_auto(auto, pd.space))


def grading_lift(pd: ParabolicData, constraint: Optional[Subspace] = None,
                 commute_with=None):
    """Solve for a grading element lift of the filtration.

    Finds ξ in ``constraint`` with [ξ, x] ≡ j·x mod f^(j-1) for every
    basis vector x of every level f^(j).  Returns (ξ, torsor) where
    the torsor is the solution space direction.  Without the extra
    commutation constraint the torsor must equal nil(p) ∩ constraint,
    and this is asserted.
    """
    g = pd.ambient
    if constraint is None:
        constraint = pd.space
    cb = constraint.vectors()
    if not cb:
        raise DomainError("empty constraint space")
    rows = []
    rhs = []
    filt = pd.filtration
    for j in filt.indices():
        below = filt.level(j - 1)
        for x in filt.level(j).vectors():
            cols = [below.reduce(g.bracket(c, x)) for c in cb]
            target = below.reduce(vec_scale(j, x))
            for k in range(g.dim):
                row = [cols[r][k] for r in range(len(cb))]
                if vec_is_zero(row) and target[k] == 0:
                    continue
                rows.append(row)
                rhs.append(target[k])
    if commute_with is not None:
        for r in range(g.dim):
            row = [g.bracket(c, commute_with)[r] for c in cb]
            if not vec_is_zero(row):
                rows.append(row)
                rhs.append(Q(0))
    if not rows:
        xi = zero_vec(g.dim)
        return xi, pd.nilradical.intersect(constraint)
    res = solve(Matrix(rows), rhs)
    if res is None:
        raise DomainError("no grading lift in the constraint space")
    t, ker = res
    xi = zero_vec(g.dim)
    for ti, c in zip(t, cb):
        if ti:
            xi = vec_add(xi, vec_scale(ti, c))
    torsor_vecs = []
    for kv in ker.vectors():
        v = zero_vec(g.dim)
        for ti, c in zip(kv, cb):
            if ti:
                v = vec_add(v, vec_scale(ti, c))
        torsor_vecs.append(v)
    torsor = Subspace.from_vectors(g.dim, torsor_vecs)
    if commute_with is None:
        expected = pd.nilradical.sum(g.center()).intersect(constraint)
        if torsor != expected:
            raise InternalCheckError(
                "grading-lift torsor is not (nil(p) + z(g)) ∩"
                " constraint"
            )
    return xi, torsor


def ad_eigenspaces(g: LieAlgebra, xi):
    """Decompose g into rational ad(ξ)-eigenspaces; errors if ad(ξ) is
    not split semisimple."""
    from .liealg import poly_rational_roots

    m = g.ad(xi)
    mp = minimal_polynomial(m)
    roots, rem = poly_rational_roots(mp)
    if rem:
        raise DomainError("ad(ξ) has irrational eigenvalues")
    if len(set(roots)) != len(roots) or len(roots) != len(mp) - 1:
        raise DomainError("ad(ξ) not semisimple")
    spaces = {}
    total = 0
    ident = Matrix.identity(g.dim)
    for lam in sorted(set(roots)):
        es = kernel(m - ident.scale(lam))
        spaces[lam] = es
        total += es.dim
    if total != g.dim:
        raise DomainError("eigenspaces do not span")
    return spaces


def opposite(pd: ParabolicData, xi=None) -> ParabolicData:
    """Opposite parabolic through a grading lift: the span of the
    nonnegative ad(ξ)-eigenspaces (parabolics being nonpositive
    parts)."""
    g = pd.ambient
    if xi is None:
        xi, _ = grading_lift(pd)
    spaces = ad_eigenspaces(g, xi)
    for lam in spaces:
        if lam.denominator != 1:
            raise DomainError("non-integer grading eigenvalue")
    vecs = []
    for lam, es in spaces.items():
        if lam >= 0:
            vecs.extend(es.vectors())
    op_space = Subspace.from_vectors(g.dim, vecs)
    neg = Subspace.from_vectors(
        g.dim,
        [v for lam, es in spaces.items() if lam <= 0 for v in es.vectors()],
    )
    if neg != pd.space:
        raise DomainError("ξ is not a grading lift of this parabolic")
    op = make_parabolic(g, op_space)
    # defining relations of an opposite pair
    if pd.space.sum(op.nilradical) != g.full_space():
        raise InternalCheckError("opposite fails p + nil(op) = g")
    if pd.nilradical.intersect(op.space).dim != 0:
        raise InternalCheckError("opposite fails nil(p) ∩ op = 0")
    return op


def is_costandard(p: ParabolicData, q: ParabolicData, check=False) -> bool:
    _same_ambient(p, q)
    res = q.space.contains(p.nilradical)
    if res and check:
        inter = p.space.intersect(q.space)
        ok, _ = is_parabolic(p.ambient, inter)
        if not ok:
            raise InternalCheckError(
                "costandard pair with non-parabolic intersection"
            )
    return res


def is_weakly_opposite(p: ParabolicData, q: ParabolicData) -> bool:
    _same_ambient(p, q)
    return p.space.sum(q.space) == p.ambient.full_space()


def is_opposite(p: ParabolicData, q: ParabolicData) -> bool:
    _same_ambient(p, q)
    return (
        p.space.intersect(q.nilradical).dim == 0
        and p.nilradical.intersect(q.space).dim == 0
    )


def project(q: ParabolicData, p: ParabolicData):
    """Parabolic projection: r = p∩q + nil(q) in g, and its image in
    the Levi quotient of q.  Returns (r_in_g, r_in_q0)."""
    _same_ambient(p, q)
    g = p.ambient
    inter = p.space.intersect(q.space)
    r_space = inter.sum(q.nilradical)
    try:
        r = make_parabolic(g, r_space)
    except DomainError as e:
        raise InternalCheckError(
            "projection p∩q + nil(q) not parabolic: %s" % e
        )
    want_nil = p.nilradical.intersect(q.space).sum(q.nilradical)
    if r.nilradical != want_nil:
        raise InternalCheckError(
            "nil(r) differs from nil(p)∩q + nil(q)"
        )
    levi = q.levi_quotient()
    r0_space = levi.project_space(r_space)
    try:
        r0 = make_parabolic(levi.algebra, r0_space)
    except DomainError as e:
        raise InternalCheckError(
            "projected subalgebra not parabolic in the Levi quotient: %s" % e
        )
    return r, r0


def compatible_lifts(p: ParabolicData, q: ParabolicData):
    """Commuting grading lifts (ξ_p, ξ_q) inside p ∩ q."""
    _same_ambient(p, q)
    inter = p.space.intersect(q.space)
    try:
        xi_q, _ = grading_lift(q, inter)
    except DomainError:
        raise InternalCheckError(
            "no grading lift of q inside p ∩ q"
        )
    try:
        xi_p, _ = grading_lift(p, inter, commute_with=xi_q)
    except DomainError:
        raise InternalCheckError(
            "no commuting grading lift of p inside p ∩ q"
        )
    if not vec_is_zero(p.ambient.bracket(xi_p, xi_q)):
        raise InternalCheckError("compatible lifts do not commute")
    return xi_p, xi_q


def common_levi(p: ParabolicData, q: ParabolicData,
                check_complement=False) -> Subspace:
    """Joint centralizer of a compatible lift pair.

    When the inputs are minimal parabolics the result must be a Levi
    complement of both nilradicals; pass check_complement=True to
    assert that.  Assertion failures are surfaced as
    InternalCheckError, never patched.
    """
    g = p.ambient
    xi_p, xi_q = compatible_lifts(p, q)
    l = g.centralizer_element(xi_p).intersect(g.centralizer_element(xi_q))
    if not p.space.intersect(q.space).contains(l):
        raise InternalCheckError("common Levi not inside p ∩ q")
    if not g.is_subalgebra(l):
        raise InternalCheckError("common Levi not a subalgebra")
    if check_complement:
        for pd in (p, q):
            if l.sum(pd.nilradical) != pd.space or \
                    l.intersect(pd.nilradical).dim != 0:
                raise InternalCheckError(
                    "common Levi is not a complement of the nilradical"
                )
    return l


def _wedge_of(vectors, n):
    """Exterior product of coordinate vectors as a sparse dict
    {sorted index tuple: coefficient}."""
    cur = {(): Q(1)}
    for v in vectors:
        nxt = {}
        for tup, c in cur.items():
            for idx in range(n):
                x = v[idx]
                if not x or idx in tup:
                    continue
                pos = 0
                while pos < len(tup) and tup[pos] < idx:
                    pos += 1
                sign = -1 if (len(tup) - pos) % 2 else 1
                key = tup[:pos] + (idx,) + tup[pos:]
                val = nxt.get(key, Q(0)) + sign * c * x
                if val:
                    nxt[key] = val
                elif key in nxt:
                    del nxt[key]
        cur = nxt
    return cur


def _wedge_act(g: LieAlgebra, i, w):
    """Action of basis element b_i on a wedge dict (derivation rule)."""
    out = {}
    ci = g.structure[i]
    for tup, c in w.items():
        for pos, idx in enumerate(tup):
            u = ci[idx]  # [b_i, e_idx]
            for idx2, x in enumerate(u):
                if not x:
                    continue
                rest = tup[:pos] + tup[pos + 1:]
                if idx2 in rest:
                    continue
                p2 = 0
                while p2 < len(rest) and rest[p2] < idx2:
                    p2 += 1
                # sign: remove at pos, insert at p2
                sign = (-1) ** pos * (-1) ** p2
                key = rest[:p2] + (idx2,) + rest[p2:]
                val = out.get(key, Q(0)) + sign * c * x
                if val:
                    out[key] = val
                elif key in out:
                    del out[key]
    return out


def lowest_weight_line(q: ParabolicData):
    """Line Λ^d nil(q) in the d-th exterior power of the adjoint
    representation, with its stabilizer verified to equal q.

    Returns (module_dim, line_dict, stabilizer).
    """
    g = q.ambient
    d = q.nilradical.dim
    budget = int(os.environ.get(EXT_BUDGET_ENV, DEFAULT_EXT_BUDGET))
    mod_dim = comb(g.dim, d)
    if mod_dim > budget:
        raise DomainError(
            "exterior power dimension %d exceeds budget %d"
            % (mod_dim, budget)
        )
    if d == 0:
        return 1, {(): Q(1)}, g.full_space()
    w = _wedge_of(q.nilradical.vectors(), g.dim)
    if not w:
        raise InternalCheckError("wedge of nilradical basis vanished")
    actions = [_wedge_act(g, i, w) for i in range(g.dim)]
    support = set(w)
    for a in actions:
        support.update(a)
    support = sorted(support)
    rows = []
    for key in support:
        row = [a.get(key, Q(0)) for a in actions]
        row.append(-w.get(key, Q(0)))
        rows.append(row)
    ker = kernel(Matrix(rows))
    stab = Subspace.from_vectors(
        g.dim, [kv[: g.dim] for kv in ker.vectors()]
    )
    if stab != q.space:
        raise InternalCheckError(
            "exterior-power stabilizer differs from the parabolic"
        )
    return mod_dim, w, stab


def _same_ambient(p: ParabolicData, q: ParabolicData):
    if p.ambient is not q.ambient:
        raise DomainError("parabolics from different ambient algebras")
