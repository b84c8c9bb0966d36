"""Concrete algebras (gl_n, sl_n, so(p,q)) with matrix realizations,
standard Cartans and minimal Levis, flag <-> parabolic dictionaries,
and the small combinatorial incidence models.

so(p,q) uses a basis adapted to q hyperbolic planes plus a definite
complement so that the standard Cartan is split over the rationals:
the defining space has ordered basis u_1, v_1, ..., u_q, v_q,
w_1, ..., w_{p-q} with pairings <u_i, v_i> = 1 and <w_j, w_j> = 1.
"""

from __future__ import annotations

from fractions import Fraction as Q
from functools import lru_cache
from itertools import combinations

from .errors import DomainError, InternalCheckError
from .liealg import LieAlgebra
from .building import IncidenceSystem
from .parabolic import ParabolicData, make_parabolic
from .ratmat import Matrix, Subspace, kernel, solve
from .rootdata import (
    RootDatum,
    SimpleSystem,
    parabolic_from_subset,
    root_decomposition,
    simple_system,
)

__all__ = [
    "gl",
    "sl",
    "so",
    "FlagSpec",
    "flag_stabilizer",
    "isotropic_flag_stabilizer",
    "flag_from_parabolic",
    "standard_minimal_levi",
    "standard_borel",
    "standard_simple_system",
    "standard_parabolic",
    "all_standard_parabolics",
    "element_from_matrix",
    "incidence_model_subsets",
    "incidence_model_admissible",
]


def _eij(n, i, j):
    rows = [[Q(0)] * n for _ in range(n)]
    rows[i][j] = Q(1)
    return Matrix(rows)


@lru_cache(maxsize=None)
def gl(n: int) -> LieAlgebra:
    if n < 1:
        raise DomainError("n must be >= 1")
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            mats.append(_eij(n, i, j))
            labels.append("E[%d,%d]" % (i + 1, j + 1))
    g = LieAlgebra.from_matrices(mats, labels=labels)
    g.kind = ("gl", n)
    g.defining_dim = n
    g.defining_form = None
    return g


@lru_cache(maxsize=None)
def sl(n: int) -> LieAlgebra:
    if n < 2:
        raise DomainError("n must be >= 2")
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                mats.append(_eij(n, i, j))
                labels.append("E[%d,%d]" % (i + 1, j + 1))
    for i in range(n - 1):
        mats.append(_eij(n, i, i) - _eij(n, i + 1, i + 1))
        labels.append("H[%d]" % (i + 1))
    g = LieAlgebra.from_matrices(mats, labels=labels)
    g.kind = ("sl", n)
    g.defining_dim = n
    g.defining_form = None
    return g


def _so_gram(p: int, q: int) -> Matrix:
    sz = p + q
    rows = [[Q(0)] * sz for _ in range(sz)]
    for i in range(q):
        rows[2 * i][2 * i + 1] = Q(1)
        rows[2 * i + 1][2 * i] = Q(1)
    for j in range(2 * q, sz):
        rows[j][j] = Q(1)
    return Matrix(rows)


@lru_cache(maxsize=None)
def so(p: int, q: int) -> LieAlgebra:
    if not (p >= q >= 1):
        raise DomainError("need p >= q >= 1")
    sz = p + q
    s = _so_gram(p, q)
    mats, labels = [], []
    for i in range(sz):
        for j in range(i + 1, sz):
            mats.append(s * (_eij(sz, i, j) - _eij(sz, j, i)))
            labels.append("X[%d,%d]" % (i + 1, j + 1))
    g = LieAlgebra.from_matrices(mats, labels=labels)
    g.kind = ("so", p, q)
    g.defining_dim = sz
    g.defining_form = s
    # skew-with-respect-to-the-form sanity on the basis
    for m in mats:
        assert (m.transpose() * s + s * m).is_zero()
    return g


def element_from_matrix(g: LieAlgebra, m: Matrix):
    """Coordinates of a realization matrix in the algebra basis."""
    if g.realization is None:
        raise DomainError("algebra has no realization")
    sz = m.rows
    cols = Matrix([
        [r[i, j] for r in g.realization]
        for i in range(sz) for j in range(sz)
    ])
    target = [m[i, j] for i in range(sz) for j in range(sz)]
    res = solve(cols, target)
    if res is None:
        raise DomainError("matrix not in the algebra")
    return res[0]


# ---------------------------------------------------------------------------
# flags


class FlagSpec:
    """Strictly increasing chain of proper nonzero subspaces of the
    defining space; with a form attached, each member must be
    isotropic."""

    def __init__(self, ambient_dim: int, chain, form: Matrix = None):
        self.ambient_dim = ambient_dim
        self.chain = tuple(chain)
        self.form = form
        for w in self.chain:
            if w.ambient_dim != ambient_dim:
                raise DomainError("flag member in wrong space")
            if w.dim == 0 or w.dim == ambient_dim:
                raise DomainError("flag members must be proper and"
                                  " nonzero")
        for a, b in zip(self.chain, self.chain[1:]):
            if not (b.contains(a) and b.dim > a.dim):
                raise DomainError("chain not strictly increasing")
        if form is not None:
            for w in self.chain:
                for x in w.vectors():
                    for y in w.vectors():
                        val = sum(
                            (Q(a) * b for a, b in
                             zip(x, form.mulvec([Q(c) for c in y]))),
                            Q(0),
                        )
                        if val != 0:
                            raise DomainError("flag member not"
                                              " isotropic")

    def __eq__(self, other):
        return (isinstance(other, FlagSpec)
                and self.ambient_dim == other.ambient_dim
                and self.chain == other.chain)

    def __repr__(self):
        return "FlagSpec(dims=%s)" % ([w.dim for w in self.chain],)


def _action_stabilizer(g: LieAlgebra, members) -> Subspace:
    """{x in g : x . W subseteq W for all members W}, acting through
    the realization."""
    if g.realization is None:
        raise DomainError("algebra has no realization")
    rows = []
    for w in members:
        for v in w.vectors():
            imgs = [w.reduce(r.mulvec(v)) for r in g.realization]
            if all(all(c == 0 for c in im) for im in imgs):
                continue
            for k in range(len(imgs[0])):
                rows.append([imgs[j][k] for j in range(g.dim)])
    if not rows:
        return g.full_space()
    return kernel(Matrix(rows))


def flag_stabilizer(g: LieAlgebra, f: FlagSpec) -> ParabolicData:
    if f.ambient_dim != g.defining_dim:
        raise DomainError("flag in the wrong defining space")
    space = _action_stabilizer(g, f.chain)
    return make_parabolic(g, space)


def isotropic_flag_stabilizer(g: LieAlgebra, f: FlagSpec) -> ParabolicData:
    if getattr(g, "defining_form", None) is None:
        raise DomainError("algebra carries no defining form")
    if f.form is None:
        f = FlagSpec(f.ambient_dim, f.chain, form=g.defining_form)
    return flag_stabilizer(g, f)


def flag_from_parabolic(p: ParabolicData) -> FlagSpec:
    """Chain of iterated nilradical images of the defining space,
    reversed; orthogonal case keeps the isotropic members.  The
    round-trip through flag_stabilizer is the correctness criterion.
    """
    g = p.ambient
    if g.realization is None:
        raise DomainError("algebra has no realization")
    sz = g.defining_dim
    nil_mats = []
    for v in p.nilradical.vectors():
        m = Matrix.zero(sz, sz)
        for c, r in zip(v, g.realization):
            m = m + r.scale(c)
        nil_mats.append(m)
    chain = []
    cur = Subspace.full(sz)
    while cur.dim > 0:
        vecs = []
        for m in nil_mats:
            for w in cur.vectors():
                vecs.append(m.mulvec(w))
        nxt = Subspace.from_vectors(sz, vecs)
        if nxt.dim >= cur.dim:
            raise InternalCheckError("nilradical image chain does not"
                                     " descend")
        chain.append(nxt)
        cur = nxt
    members = [w for w in reversed(chain) if 0 < w.dim < sz]
    form = getattr(g, "defining_form", None)
    if form is not None:
        kept = []
        for w in members:
            try:
                FlagSpec(sz, [w], form=form)
            except DomainError:
                continue
            kept.append(w)
        members = kept
    f = FlagSpec(sz, members, form=form)
    back = (isotropic_flag_stabilizer(g, f) if form is not None
            else flag_stabilizer(g, f))
    if back.space != p.space:
        raise InternalCheckError("flag round-trip failed")
    return f


# ---------------------------------------------------------------------------
# standard Cartans, Levis, Borels


def standard_minimal_levi(g: LieAlgebra):
    """(minimal Levi subspace, RootDatum on the split part)."""
    kind = getattr(g, "kind", None)
    if kind is None:
        raise DomainError("not a catalog algebra")
    if kind[0] in ("gl", "sl"):
        n = kind[1]
        diag = [_eij(n, i, i) for i in range(n)]
        if kind[0] == "sl":
            diag = [_eij(n, i, i) - _eij(n, i + 1, i + 1)
                    for i in range(n - 1)]
        vecs = [element_from_matrix(g, m) for m in diag]
        a = Subspace.from_vectors(g.dim, vecs)
    else:
        _, p, q = kind
        sz = p + q
        vecs = []
        for i in range(q):
            h = _eij(sz, 2 * i, 2 * i) - _eij(sz, 2 * i + 1, 2 * i + 1)
            vecs.append(element_from_matrix(g, h))
        a = Subspace.from_vectors(g.dim, vecs)
    rd = root_decomposition(g, a)
    return rd.levi, rd


def _standard_flag_members(g: LieAlgebra):
    kind = g.kind
    if kind[0] in ("gl", "sl"):
        n = kind[1]
        return [
            Subspace.from_vectors(
                n, [_unit_vec(n, i) for i in range(d)]
            )
            for d in range(1, n)
        ]
    _, p, q = kind
    sz = p + q
    return [
        Subspace.from_vectors(
            sz, [_unit_vec(sz, 2 * i) for i in range(d)]
        )
        for d in range(1, q + 1)
    ]


def _unit_vec(n, i):
    v = [Q(0)] * n
    v[i] = Q(1)
    return v


def standard_borel(g: LieAlgebra) -> ParabolicData:
    """Stabilizer of the standard (isotropic, in the orthogonal case)
    full coordinate flag; the standard minimal parabolic."""
    members = _standard_flag_members(g)
    form = getattr(g, "defining_form", None)
    f = FlagSpec(g.defining_dim, members, form=form)
    return flag_stabilizer(g, f)


def standard_simple_system(g: LieAlgebra) -> SimpleSystem:
    ss = getattr(g, "_standard_ss", None)
    if ss is None:
        _, rd = standard_minimal_levi(g)
        pb = standard_borel(g)
        ss = simple_system(rd, pb)
        g._standard_ss = ss
    return ss


def standard_parabolic(g: LieAlgebra, J) -> ParabolicData:
    return parabolic_from_subset(standard_simple_system(g), J)


def all_standard_parabolics(g: LieAlgebra):
    """All 2^rank standard parabolics over the standard Borel, keyed
    by type subset."""
    ss = standard_simple_system(g)
    out = {}
    for r in range(len(ss.simples) + 1):
        for J in combinations(ss.simples, r):
            out[frozenset(J)] = parabolic_from_subset(ss, J)
    return out


# ---------------------------------------------------------------------------
# combinatorial incidence models


def incidence_model_subsets(n: int) -> IncidenceSystem:
    """Proper nonempty subsets of an (n+1)-set, typed by cardinality,
    incident iff comparable under containment."""
    if n < 1:
        raise DomainError("n must be >= 1")
    base = range(1, n + 2)
    els = []
    for r in range(1, n + 1):
        els.extend(frozenset(c) for c in combinations(base, r))
    types = {e: len(e) for e in els}
    edges = [
        (u, v) for u, v in combinations(els, 2)
        if len(u) != len(v) and (u < v or v < u)
    ]
    return IncidenceSystem(types, edges)


def incidence_model_admissible(n: int) -> IncidenceSystem:
    """Nonempty admissible signed subsets of {±1..±n} (no index with
    both signs), typed by cardinality, incident iff comparable."""
    if n < 1:
        raise DomainError("n must be >= 1")
    els = []
    for r in range(1, n + 1):
        for idx in combinations(range(1, n + 1), r):
            for signs in range(1 << r):
                els.append(frozenset(
                    i if not (signs >> k) & 1 else -i
                    for k, i in enumerate(idx)
                ))
    types = {e: len(e) for e in els}
    edges = [
        (u, v) for u, v in combinations(els, 2)
        if len(u) != len(v) and (u < v or v < u)
    ]
    return IncidenceSystem(types, edges)
