"""Geometric configurations: incidence morphisms from the small
combinatorial models into the maximal parabolics of a catalog
algebra, and their projection into Levi quotients.

A standard configuration is realized by a witness (a point frame, or
an isotropic frame of hyperbolic planes); projecting it through a
center parabolic q restricts the model along the type map nu_q and
pushes each element through parabolic projection.
"""

from __future__ import annotations

import json
from fractions import Fraction as Q
from itertools import combinations

from .building import IncidenceSystem, to_dot
from .catalog import (
    FlagSpec,
    _action_stabilizer,
    incidence_model_admissible,
    incidence_model_subsets,
    standard_simple_system,
)
from .errors import DomainError, InternalCheckError
from .parabolic import (
    ParabolicData,
    common_levi,
    grading_lift,
    is_costandard,
    is_weakly_opposite,
    make_parabolic,
    project,
)
from .ratmat import Matrix, Subspace, vec_add, vec_scale, zero_vec
from .rootdata import (
    duality_involution,
    root_decomposition,
    simple_system,
    type_of_any,
)

__all__ = [
    "Configuration",
    "StandardConfiguration",
    "simplex_configuration",
    "cross_configuration",
    "project_configuration",
    "incidence_report",
    "tetrahedron_example",
    "octahedron_example",
]


class Configuration:
    """Assignment of parabolics to the elements of an incidence
    system; incident elements must map to costandard parabolics."""

    def __init__(self, source: IncidenceSystem, targets: dict,
                 algebra, verify=True):
        self.source = source
        self.targets = dict(targets)
        self.algebra = algebra
        if set(self.targets) != set(source.elements()):
            raise DomainError("assignment does not cover the model")
        if verify:
            self.verify_morphism()

    def verify_morphism(self):
        for e in self.source.elements():
            for f in self.source.neighbors(e):
                if not is_costandard(self.targets[e], self.targets[f]):
                    raise DomainError(
                        "incident elements with non-costandard images"
                    )


class StandardConfiguration(Configuration):
    """Configuration realized by a witness frame; injective, with all
    images containing the frame's minimal Levi."""

    def __init__(self, source, targets, algebra, witness, levi_space):
        super().__init__(source, targets, algebra)
        self.witness = witness
        self.levi_space = levi_space
        spaces = [t.space for t in self.targets.values()]
        if len({s for s in spaces}) != len(spaces):
            raise DomainError("assignment not injective")
        for t in self.targets.values():
            if not t.space.contains(levi_space):
                raise DomainError(
                    "image does not contain the frame Levi"
                )


def _span(dim, vectors):
    return Subspace.from_vectors(dim, [list(map(Q, v)) for v in vectors])


def simplex_configuration(g, points) -> StandardConfiguration:
    """Subsets of a spanning point frame ↦ stabilizers of their
    spans."""
    n1 = g.defining_dim
    points = [tuple(map(Q, p)) for p in points]
    if len(points) != n1:
        raise DomainError("need dim-many points")
    if _span(n1, points).dim != n1:
        raise DomainError("points do not span")
    model = incidence_model_subsets(n1 - 1)
    targets = {}
    for e in model.elements():
        span = _span(n1, [points[i - 1] for i in sorted(e)])
        if span.dim != len(e):
            raise DomainError("degenerate point subset")
        f = FlagSpec(n1, [span])
        targets[e] = _stabilizer(g, f)
    ml = _frame_levi(g, [_span(n1, [p]) for p in points])
    return StandardConfiguration(model, targets, g, points, ml)


def cross_configuration(g, planes) -> StandardConfiguration:
    """Admissible signed subsets of an isotropic frame of hyperbolic
    planes ↦ stabilizers of their (isotropic) spans."""
    form = getattr(g, "defining_form", None)
    if form is None:
        raise DomainError("algebra carries no defining form")
    sz = g.defining_dim
    planes = [
        (tuple(map(Q, u)), tuple(map(Q, v))) for u, v in planes
    ]
    n = len(planes)
    model = incidence_model_admissible(n)

    def line_of(i):
        u, v = planes[abs(i) - 1]
        return u if i > 0 else v

    targets = {}
    for e in model.elements():
        span = _span(sz, [line_of(i) for i in sorted(e)])
        if span.dim != len(e):
            raise DomainError("degenerate frame subset")
        f = FlagSpec(sz, [span], form=form)  # isotropy checked here
        targets[e] = _stabilizer(g, f)
    lines = [_span(sz, [line_of(s * i)]) for i in range(1, n + 1)
             for s in (1, -1)]
    ml = _frame_levi(g, lines)
    return StandardConfiguration(model, targets, g, planes, ml)


def _stabilizer(g, f: FlagSpec) -> ParabolicData:
    return make_parabolic(g, _action_stabilizer(g, f.chain))


def _frame_levi(g, lines) -> Subspace:
    """Simultaneous stabilizer of all frame lines: the minimal Levi of
    the apartment the configuration spans."""
    out = g.full_space()
    for ln in lines:
        out = out.intersect(_action_stabilizer(g, [ln]))
    return out


# ---------------------------------------------------------------------------
# the type map nu_q and projection of configurations


class _CenterStructures:
    """Structures attached to a projection center q: its Levi
    quotient with a split Cartan and simple system, the inclusion
    iota of quotient simples into base types, and nu = op ∘ iota ∘ op.
    """

    def __init__(self, q: ParabolicData, base_ss):
        g = q.ambient
        self.q = q
        self.base_ss = base_ss
        pb = base_ss.chamber
        if q.space.contains(pb.space):
            l = base_ss.rd.cartan
            rd_q = base_ss.rd
            chamber = pb
            ss_q = base_ss
            local_label = {a: a for a in base_ss.simples}
        else:
            l = common_levi(q, pb)
            rd_q = root_decomposition(g, l)
            chamber = _chamber_inside(q, rd_q)
            ss_q = simple_system(rd_q, chamber)
            local_label = None  # filled below via canonical types
        lq = q.levi_quotient()
        self.lq = lq
        a0 = lq.project_space(l)
        if chamber.space == g.full_space():
            # q = g: the quotient is g itself and nu is a relabelling
            pass
        rd0 = root_decomposition(lq.algebra, a0)
        pb0_space = lq.project_space(chamber.space)
        pb0 = make_parabolic(lq.algebra, pb0_space)
        self.ss0 = simple_system(rd0, pb0)
        # local g-simples not crossed in q, matched to quotient simples
        # by projecting their root spaces
        t_local = set()
        for a in ss_q.simples:
            if not q.space.contains(rd_q.root_spaces[a]):
                t_local.add(a)
        iota_local = {}
        for b in self.ss0.simples:
            match = None
            for a in ss_q.simples:
                if a in t_local:
                    continue
                if lq.project_space(rd_q.root_spaces[a]) == \
                        rd0.root_spaces[b]:
                    match = a
                    break
            if match is None:
                raise InternalCheckError(
                    "quotient simple with no matching root space"
                )
            iota_local[b] = match
        if local_label is None:
            from .rootdata import parabolic_from_subset

            local_label = {}
            for a in ss_q.simples:
                qa = parabolic_from_subset(ss_q, {a})
                t = type_of_any(base_ss, qa)
                if len(t) != 1:
                    raise InternalCheckError("non-singleton type for a"
                                             " maximal parabolic")
                local_label[a] = next(iter(t))
        self.iota = {b: local_label[iota_local[b]]
                     for b in self.ss0.simples}
        op_g = duality_involution(base_ss)
        op_q0 = duality_involution(self.ss0)
        self.nu = {b: op_g(self.iota[op_q0(b)])
                   for b in self.ss0.simples}

    def nu_image(self):
        return frozenset(self.nu.values())

    def nu_preimage(self, types):
        return frozenset(b for b, a in self.nu.items() if a in types)

    def iota_preimage(self, types):
        return frozenset(b for b, a in self.iota.items() if a in types)


def _chamber_inside(q: ParabolicData, rd_q) -> ParabolicData:
    """Minimal parabolic between rd_q's Levi and q: dominate the
    grading levels of q by a large multiple and break ties with a
    regular element."""
    g = q.ambient
    xi_q, _ = grading_lift(q, rd_q.cartan)
    d = rd_q.cartan.dim
    cb = rd_q.cartan.vectors()
    m = 1
    while True:
        small = zero_vec(g.dim)
        for i, v in enumerate(cb):
            small = vec_add(small, vec_scale(Q(m) ** i, v))
        if all(rd_q.eval_root(a, small) != 0 for a in rd_q.roots):
            break
        m += 1
        if m > 10 * len(rd_q.roots) + 10:
            raise InternalCheckError("no regular element found")
    bound = max(abs(rd_q.eval_root(a, small)) for a in rd_q.roots)
    big = 2 * bound + 1
    xi = vec_add(vec_scale(big, xi_q), small)
    vecs = list(rd_q.levi.vectors())
    for a in rd_q.roots:
        if rd_q.eval_root(a, xi) < 0:
            vecs.extend(rd_q.root_spaces[a].vectors())
    space = Subspace.from_vectors(g.dim, vecs)
    if not q.space.contains(space):
        raise InternalCheckError("dominated chamber escapes q")
    return make_parabolic(g, space)


def center_structures(q: ParabolicData, base_ss=None) -> _CenterStructures:
    if base_ss is None:
        base_ss = standard_simple_system(q.ambient)
    return _CenterStructures(q, base_ss)


def project_configuration(q: ParabolicData, c: Configuration,
                          base_ss=None) -> Configuration:
    """Restrict the configuration along nu_q and project elementwise
    into the Levi quotient of q.

    Elements whose type survives the restriction must be weakly
    opposite to q; violators are reported.  The projected assignment
    is verified to be an incidence morphism and to obey the type law
    (quotient type = nu_q-preimage of the source type).
    """
    st = center_structures(q, base_ss)
    base_ss = st.base_ss
    image = st.nu_image()
    kept = []
    violators = []
    types_of = {}
    for e in c.source.elements():
        t = type_of_any(base_ss, c.targets[e])
        types_of[e] = t
        if not t or not t <= image:
            continue
        if not is_weakly_opposite(c.targets[e], q):
            violators.append(e)
            continue
        kept.append(e)
    if violators:
        raise DomainError(
            "elements not weakly opposite to the center: %s"
            % sorted(map(_element_label, violators))
        )
    targets0 = {}
    for e in kept:
        _, r0 = project(q, c.targets[e])
        t0 = type_of_any(st.ss0, r0)
        if t0 != st.nu_preimage(types_of[e]):
            raise InternalCheckError("projected type violates the"
                                     " nu_q type law")
        targets0[e] = r0
    sub_types = {e: c.source.types[e] for e in kept}
    sub_edges = [
        tuple(sorted(edge, key=repr)) for edge in c.source.edges
        if all(x in targets0 for x in edge)
    ]
    sub = IncidenceSystem(sub_types, sub_edges)
    out = Configuration(sub, targets0, st.lq.algebra)
    out.center = st
    return out


# ---------------------------------------------------------------------------
# reports


def _element_label(e) -> str:
    if isinstance(e, frozenset):
        def one(i):
            if isinstance(i, int) and i < 0:
                return "-%d" % -i
            return "%s" % (i,)
        return "{%s}" % ",".join(one(i) for i in sorted(e, key=_sort_key))
    return str(e)


def _sort_key(i):
    if isinstance(i, int):
        return (abs(i), 0 if i > 0 else 1)
    return (i,)


def incidence_report(c: Configuration) -> dict:
    """Per-type element lists and bipartite incidence matrices between
    consecutive types, incidence taken as costandardness of the
    assigned parabolics.  Deterministic ordering throughout."""
    types = sorted({c.source.types[e] for e in c.source.elements()},
                   key=repr)
    elements = {
        t: sorted(c.source.elements_of_type(t),
                  key=lambda e: sorted(e, key=_sort_key))
        for t in types
    }
    report = {
        "types": [str(t) for t in types],
        "elements": {
            str(t): [_element_label(e) for e in elements[t]]
            for t in types
        },
        "incidence": {},
    }
    for t1, t2 in zip(types, types[1:]):
        rows = []
        for e1 in elements[t1]:
            row = []
            for e2 in elements[t2]:
                row.append(
                    1 if is_costandard(c.targets[e1], c.targets[e2])
                    else 0
                )
            rows.append(row)
        report["incidence"]["%s:%s" % (t1, t2)] = {
            "matrix": rows,
            "row_sums": [sum(r) for r in rows],
            "col_sums": [sum(r[j] for r in rows)
                         for j in range(len(rows[0]) if rows else 0)],
        }
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def report_dot(c: Configuration) -> str:
    return to_dot(c.source)


# ---------------------------------------------------------------------------
# worked examples with fixed rational witnesses


def tetrahedron_example():
    """Coordinate simplex in dimension 4 projected from the stabilizer
    of a generic point: four points and six lines in the quotient
    plane forming a complete quadrilateral."""
    from .catalog import gl

    g = gl(4)
    pts = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    cfg = simplex_configuration(g, pts)
    center_line = _span(4, [(1, 1, 1, 1)])
    q = make_parabolic(g, _action_stabilizer(g, [center_line]))
    proj = project_configuration(q, cfg)
    return cfg, q, proj


def octahedron_example():
    """Standard isotropic cross in so(4,3) projected from the
    stabilizer of a generic isotropic line: twelve points and eight
    lines in the quotient quadric."""
    from .catalog import so

    g = so(4, 3)
    sz = 7

    def unit(i):
        v = [0] * sz
        v[i] = 1
        return tuple(v)

    planes = [(unit(2 * i), unit(2 * i + 1)) for i in range(3)]
    cfg = cross_configuration(g, planes)
    # u1+u2+u3 + v1+v2-2v3 is isotropic and pairs nontrivially with
    # every frame line
    w = [1, 1, 1, 1, 1, -2, 0]
    center_line = _span(sz, [w])
    q = make_parabolic(g, _action_stabilizer(g, [center_line]))
    proj = project_configuration(q, cfg)
    return cfg, q, proj
