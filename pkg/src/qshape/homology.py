"""Corner functors, mesh homology, stalk resolutions, and the decision
procedures for exactness, projectivity, injectivity, and weak equivalence.

The two corner functors at a vertex q are

* K_q(X): the intersection of the kernels of X(g) over the finite basis
  of radical morphisms g out of q, a submodule of X(q);
* C_q(X): the quotient of X(q) by the images of X(f) over the radical
  basis morphisms f into q.

Derived versions are computed from projective resolutions of the two
stalk functors at q: the covariant one is resolved by representable
summands Q(r, -), the contravariant one by summands Q(-, r).  Both
resolutions start from the canonical basis-indexed presentation and are
extended degreewise by covering vertexwise kernels with representables;
exactness at every computed level holds by construction and is asserted
in the test suite.

Everything is desk-scale exact arithmetic: homology groups come back as
presented modules in invariant-factor normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundaryVertex, InvalidMorphism, WindowTooSmall
from .exactalg import (Matrix, ModuleMap, PresentedModule, kernel_basis,
                       middle_homology, induced_on_homology)
from .exactalg.modules import HomologyData, coordinates_mod
from .meshcat import MeshCategory
from .quiver import DOUBLE_AN, REPETITIVE_AN, format_vertex
from .repmod import Representation, RepMorphism, validate_morphism

SIDE_CO = "co"   # covariant stalk: resolves S_[q>, derives H^i (cohomology)
SIDE_CN = "cn"   # contravariant stalk: resolves S_<q], derives H_i (homology)


# ---------------------------------------------------------------------------
# corner functors and the radical filtration
# ---------------------------------------------------------------------------

@dataclass
class CornerValues:
    vertex: object
    K: PresentedModule
    K_inclusion: Matrix
    C: PresentedModule

    def describe(self):
        return {"vertex": format_vertex(self.vertex),
                "K": self.K.describe(), "C": self.C.describe()}


def radical_filtration(X: Representation, q, power: int):
    """(K^power ⊆ X(q), X(q) ↠ C^power) cut out by radical powers.

    power 0 uses the identity among the test morphisms, so K^0 = 0 and
    C^0 = 0; power 1 gives the plain corner functors; at the nilpotency
    index K reaches all of X(q).
    """
    C = X.category
    Xq = X.value(q)
    outs = [X.evaluate_matrix(C.ring.one, e) for e in C.radical_out(q, power)]
    if outs:
        stacked = Matrix.vstack(outs)
        tgt = PresentedModule(
            X.ring, stacked.rows,
            Matrix.block_diag(X.ring, [X.value(e.target).relations
                                       for e in C.radical_out(q, power)]))
        kmod, incl = ModuleMap(Xq, tgt, stacked, check=False).kernel()
    else:
        kmod, incl = Xq, Matrix.identity(X.ring, Xq.generators)
    ins = [X.evaluate_matrix(C.ring.one, e) for e in C.radical_in(q, power)]
    pieces = ins + [Xq.relations]
    cmod = PresentedModule(X.ring, Xq.generators, Matrix.hstack(pieces)) \
        if Xq.generators else Xq
    return kmod, incl, cmod


def corner_functors(X: Representation, q) -> CornerValues:
    kmod, incl, cmod = radical_filtration(X, q, 1)
    return CornerValues(q, kmod, incl, cmod)


# ---------------------------------------------------------------------------
# mesh homology
# ---------------------------------------------------------------------------

def mesh_complex(X: Representation, q):
    """The three-term complex X(tau q) -> ⊕ X(p_i) -> X(q) of the mesh at q."""
    mesh = X.category.quiver.mesh_at(q)  # raises BoundaryVertex when truncated
    middles = [X.value(a.source) for a in mesh.arrows]
    middle = middles[0]
    for m in middles[1:]:
        middle = middle.direct_sum(m)
    f = ModuleMap(X.value(mesh.tau_vertex), middle,
                  Matrix.vstack([X.arrow_matrix(sa) for sa in mesh.paired]),
                  check=False)
    g = ModuleMap(middle, X.value(q),
                  Matrix.hstack([X.arrow_matrix(a) for a in mesh.arrows]),
                  check=False)
    return f, g


def mesh_homology_data(X: Representation, q) -> HomologyData:
    f, g = mesh_complex(X, q)
    return middle_homology(f, g)


def mesh_homology(X: Representation, q) -> PresentedModule:
    """Middle homology of the mesh complex at q."""
    return mesh_homology_data(X, q).module


def mesh_homology_map(phi: RepMorphism, q) -> ModuleMap:
    """The induced map mH_q(source) -> mH_q(target)."""
    hx = mesh_homology_data(phi.source, q)
    hy = mesh_homology_data(phi.target, q)
    mesh = phi.source.category.quiver.mesh_at(q)
    block = Matrix.block_diag(phi.source.ring,
                              [phi.component(a.source) for a in mesh.arrows])
    return induced_on_homology(hx, hy, block)


# ---------------------------------------------------------------------------
# stalk resolutions
# ---------------------------------------------------------------------------

class _Side:
    """Direction-dependent plumbing shared by the resolution engine."""

    def __init__(self, C: MeshCategory, side: str):
        self.C = C
        self.side = side

    def entry_basis(self, a, b):
        """Basis of the homs a boundary entry between summands a, b lives in."""
        return self.C.hom_basis(a, b) if self.side == SIDE_CO \
            else self.C.hom_basis(b, a)

    def value_dim(self, r, s):
        """Rank of the r-summand's value at vertex s."""
        return self.C.d(r, s) if self.side == SIDE_CO else self.C.d(s, r)

    def act_matrix(self, entry, a, b, s) -> Matrix:
        """Component at s of the boundary entry: summand-b coords to summand-a."""
        ring = self.C.ring
        rows = self.value_dim(a, s)
        cols = self.value_dim(b, s)
        out = Matrix.zeros(ring, rows, cols)
        for coeff, e in zip(entry, self.entry_basis(a, b)):
            if coeff == ring.zero:
                continue
            if self.side == SIDE_CO:
                out = out + self.C.right_mult_matrix(coeff, e, s)
            else:
                out = out + self.C.left_mult_matrix(coeff, e, s)
        return out

    def radical_head(self, q):
        """(basis element, new summand vertex) for the degree-one boundary."""
        if self.side == SIDE_CO:
            return [(e, e.target) for e in self.C.radical_out(q)]
        return [(e, e.source) for e in self.C.radical_in(q)]

    def margin_ok(self, r) -> bool:
        """Summand supports must stay inside the window for exactness."""
        if self.C.flavor == DOUBLE_AN:
            return True
        i_min, i_max = self.C.quiver.window
        col = r[1]
        if self.side == SIDE_CO:
            return col - (self.C.n - 1) >= i_min
        return col + (self.C.n - 1) <= i_max

    def orbit_action(self, h, comp_vertex, src, dst) -> Matrix:
        """Action of the engine-direction morphism h: src -> dst on the
        comp_vertex component of a level value, in value coordinates."""
        if self.side == SIDE_CO:
            return self.C.left_mult_matrix(self.C.ring.one, h, comp_vertex)
        return self.C.right_mult_matrix(self.C.ring.one, h, comp_vertex)

    def x_value_block(self, X: Representation, entry, a, b) -> Matrix:
        """X applied to a boundary entry.

        co: entry in Q(a, b) gives X(a) -> X(b).
        cn: entry in Q(b, a) gives X(b) -> X(a).
        """
        ring = self.C.ring
        if self.side == SIDE_CO:
            rows = X.value(b).generators
            cols = X.value(a).generators
        else:
            rows = X.value(a).generators
            cols = X.value(b).generators
        out = Matrix.zeros(ring, rows, cols)
        for coeff, e in zip(entry, self.entry_basis(a, b)):
            if coeff != ring.zero:
                out = out + X.evaluate_matrix(coeff, e)
        return out


@dataclass
class StalkResolution:
    """Levels of representable summands with boundary entry tables.

    terms[i] is the list of summand vertices of level i; boundaries[i]
    (for i >= 1) maps (a, b) to the coefficient tuple of the entry
    between summand a of level i-1 and summand b of level i.
    """
    side: str
    vertex: object
    terms: list
    boundaries: list
    _engine: _Side

    def length(self) -> int:
        return len(self.terms) - 1

    def level_matrix(self, i: int, s) -> Matrix:
        """The boundary P_i -> P_{i-1} evaluated at the vertex s."""
        eng = self._engine
        prev, cur = self.terms[i - 1], self.terms[i]
        blocks = []
        for a, ra in enumerate(prev):
            row = []
            for b, rb in enumerate(cur):
                entry = self.boundaries[i].get((a, b))
                if entry is None:
                    row.append(Matrix.zeros(eng.C.ring,
                                            eng.value_dim(ra, s),
                                            eng.value_dim(rb, s)))
                else:
                    row.append(eng.act_matrix(entry, ra, rb, s))
            blocks.append(row)
        return _assemble(eng.C.ring, blocks,
                         [eng.value_dim(r, s) for r in prev],
                         [eng.value_dim(r, s) for r in cur])


def _assemble(ring, blocks, row_dims, col_dims):
    rows = sum(row_dims)
    cols = sum(col_dims)
    out = [[ring.zero] * cols for _ in range(rows)]
    r0 = 0
    for a, rd in enumerate(row_dims):
        c0 = 0
        for b, cd in enumerate(col_dims):
            blk = blocks[a][b]
            for i in range(rd):
                for j in range(cd):
                    out[r0 + i][c0 + j] = blk[i, j]
            c0 += cd
        r0 += rd
    return Matrix(ring, rows, cols, [x for row in out for x in row])


def resolve_stalk(C: MeshCategory, q, side: str, length: int) -> StalkResolution:
    """Projective resolution of the stalk functor at q, out to the given length.

    The head is the basis-indexed presentation: level one has one
    representable summand for every radical-basis morphism out of
    (side co) or into (side cn) the vertex q.  Further levels cover the
    vertexwise kernels.  Results are cached on the category.
    """
    key = (q, side)
    cached = C._resolution_cache.get(key)
    if cached is not None and cached.length() >= length:
        return cached
    eng = _Side(C, side)
    if not eng.margin_ok(q):
        raise WindowTooSmall(f"stalk resolution at {format_vertex(q)} "
                             "reaches outside the window")
    terms = [[q]]
    boundaries = [None]
    head = eng.radical_head(q)
    for _, r in head:
        if not eng.margin_ok(r):
            raise WindowTooSmall("resolution summand too close to the window edge")
    terms.append([r for _, r in head])
    bd1 = {}
    for b, (e, r) in enumerate(head):
        basis = eng.entry_basis(q, r)
        coeffs = [C.ring.one if x == e else C.ring.zero for x in basis]
        bd1[(0, b)] = tuple(coeffs)
    boundaries.append(bd1)
    res = StalkResolution(side, q, terms, boundaries, eng)
    _extend_resolution(res, length)
    C._resolution_cache[key] = res
    return res


def _extend_resolution(res: StalkResolution, length: int):
    eng = res._engine
    C = eng.C
    while res.length() < length:
        i = res.length()
        cur = res.terms[i]
        # vertices where the level can be nonzero; the translate of the
        # resolved vertex goes first so the mesh syzygy summand is chosen
        spots = [s for s in C.vertices
                 if any(eng.value_dim(r, s) for r in cur)]
        if C.quiver.has_tau(res.vertex):
            tau_v = C.quiver.tau(res.vertex)
            if tau_v in spots:
                spots = [tau_v] + [s for s in spots if s != tau_v]
        kernels = {s: kernel_basis(res.level_matrix(i, s)) for s in spots}
        chosen = _greedy_cover(eng, cur, spots, kernels)
        new_terms = []
        new_entries = {}
        dims_at = {s: [eng.value_dim(r, s) for r in cur] for s in spots}
        for s, vec in chosen:
            b_new = len(new_terms)
            new_terms.append(s)
            off = 0
            for b, d in enumerate(dims_at[s]):
                entry = tuple(vec[off:off + d])
                off += d
                if any(x != C.ring.zero for x in entry):
                    new_entries[(b, b_new)] = entry
        res.terms.append(new_terms)
        res.boundaries.append(new_entries)


def _greedy_cover(eng: _Side, cur, spots, kernels):
    """Vertexwise kernel generators not already generated by earlier picks.

    The subfunctor generated by elements v_j at vertices r_j has, at s,
    exactly the span of their images under the hom bases Q(r_j, s) in
    the engine direction, so membership is one linear solve; picks are
    repeated until a full pass adds nothing.
    """
    from .exactalg import solve
    ring = eng.C.ring
    chosen = []
    changed = True
    while changed:
        changed = False
        for s in spots:
            K = kernels[s]
            if K.cols == 0:
                continue
            spanned = _spanned_at(eng, cur, chosen, s)
            for col in range(K.cols):
                v = K.column_matrix(col)
                if v.is_zero:
                    continue
                if spanned is not None and spanned.cols \
                        and solve(spanned, v) is not None:
                    continue
                if not eng.margin_ok(s):
                    raise WindowTooSmall(
                        "resolution kernel reaches the window edge; widen the window")
                chosen.append((s, K.col(col)))
                changed = True
                spanned = _spanned_at(eng, cur, chosen, s)
    return chosen


def _spanned_at(eng: _Side, cur, chosen, s):
    """Images at s of all chosen elements, as columns in level coordinates."""
    if not chosen:
        return None
    ring = eng.C.ring
    dims = [eng.value_dim(r, s) for r in cur]
    total = sum(dims)
    cols = []
    for r, vec in chosen:
        for h in eng.entry_basis(r, s):
            image = []
            off = 0
            for b, rb in enumerate(cur):
                d = eng.value_dim(rb, r)
                piece = Matrix.column(ring, vec[off:off + d])
                off += d
                act = eng.orbit_action(h, rb, r, s)
                image.extend((act * piece).col(0))
            cols.append(image)
    if not cols:
        return None
    return Matrix(ring, total, len(cols),
                  [cols[j][i] for i in range(total) for j in range(len(cols))])


# ---------------------------------------------------------------------------
# derived (co)homology
# ---------------------------------------------------------------------------

def _complex_from_resolution(res: StalkResolution, X: Representation):
    """Presented-module complex obtained by pairing the resolution with X.

    Level i carries ⊕_a X(r_a); for side co the differentials run
    upward (a cochain complex), for side cn downward (a chain complex).
    Returns (modules, maps) with maps[i]: level i -> level i+1 (co) or
    level i -> level i-1 (cn, for i >= 1).
    """
    eng = res._engine
    ring = eng.C.ring
    modules = []
    for level in res.terms:
        mod = PresentedModule.free(ring, 0)
        for r in level:
            mod = mod.direct_sum(X.value(r))
        modules.append(mod)
    maps = {}
    for i in range(1, len(res.terms)):
        prev, cur = res.terms[i - 1], res.terms[i]
        if res.side == SIDE_CO:
            blocks = [[None] * len(prev) for _ in range(len(cur))]
            for b, rb in enumerate(cur):
                for a, ra in enumerate(prev):
                    entry = res.boundaries[i].get((a, b))
                    blocks[b][a] = (eng.x_value_block(X, entry, ra, rb)
                                    if entry is not None else
                                    Matrix.zeros(ring, X.value(rb).generators,
                                                 X.value(ra).generators))
            M = _assemble(ring, blocks,
                          [X.value(r).generators for r in cur],
                          [X.value(r).generators for r in prev])
            maps[i - 1] = ModuleMap(modules[i - 1], modules[i], M, check=False)
        else:
            blocks = [[None] * len(cur) for _ in range(len(prev))]
            for a, ra in enumerate(prev):
                for b, rb in enumerate(cur):
                    entry = res.boundaries[i].get((a, b))
                    blocks[a][b] = (eng.x_value_block(X, entry, ra, rb)
                                    if entry is not None else
                                    Matrix.zeros(ring, X.value(ra).generators,
                                                 X.value(rb).generators))
            M = _assemble(ring, blocks,
                          [X.value(r).generators for r in prev],
                          [X.value(r).generators for r in cur])
            maps[i] = ModuleMap(modules[i], modules[i - 1], M, check=False)
    return modules, maps


def derived_homology_data(X: Representation, q, side: str, max_degree: int = 2):
    """HomologyData per degree 0..max_degree for one side at one vertex."""
    res = resolve_stalk(X.category, q, side, max_degree + 1)
    modules, maps = _complex_from_resolution(res, X)
    ring = X.ring
    zero = PresentedModule.free(ring, 0)
    out = {}
    for i in range(max_degree + 1):
        if side == SIDE_CO:
            incoming = maps[i - 1] if i >= 1 else ModuleMap.zero(zero, modules[0])
            outgoing = maps[i]
        else:
            incoming = maps[i + 1]
            outgoing = maps[i] if i >= 1 else ModuleMap.zero(modules[0], zero)
        out[i] = middle_homology(incoming, outgoing)
    return out


def derived_homology(X: Representation, q, side: str = SIDE_CN,
                     max_degree: int = 2) -> dict:
    """Presented modules H_i (side cn) or H^i (side co) for i <= max_degree."""
    data = derived_homology_data(X, q, side, max_degree)
    return {i: d.module for i, d in data.items()}


def derived_homology_map(phi: RepMorphism, q, side: str, degree: int,
                         max_degree: int | None = None) -> ModuleMap:
    """The induced map on one derived homology group."""
    if max_degree is None:
        max_degree = max(degree, 2)
    res = resolve_stalk(phi.source.category, q, side, max_degree + 1)
    dx = derived_homology_data(phi.source, q, side, max_degree)
    dy = derived_homology_data(phi.target, q, side, max_degree)
    level = res.terms[degree]
    ring = phi.source.ring
    block = Matrix.block_diag(ring, [phi.component(r) for r in level]) \
        if level else Matrix.zeros(ring, 0, 0)
    return induced_on_homology(dx[degree], dy[degree], block)


# ---------------------------------------------------------------------------
# probes: where homology can live
# ---------------------------------------------------------------------------

def homology_probe_vertices(X: Representation, spread: int = 0):
    """Interior vertices where any considered homology group can be nonzero.

    For the double flavor every vertex qualifies.  For a windowed
    repetitive category the probes are the interior vertices within
    `spread` columns of the support (resolution summands move at most
    n-1 columns per homological degree).
    """
    C = X.category
    if C.flavor == DOUBLE_AN:
        return list(C.vertices)
    if not X.support:
        return []
    cols = [v[1] for v in X.support]
    lo, hi = min(cols) - spread, max(cols) + spread
    return [v for v in C.quiver.interior_vertices() if lo <= v[1] <= hi]


def _cn_probes(X: Representation, Y: Representation, max_degree: int):
    """Vertices where some H_i (i <= max_degree) of X or Y can be nonzero.

    The contravariant stalk resolution at q has level-i summands within
    i*(n-1) columns above q, so only probes from max support column down
    to min support column minus the total reach matter.
    """
    C = X.category
    if C.flavor == DOUBLE_AN:
        return list(C.vertices)
    support = X.support | Y.support
    if not support:
        return []
    cols = [v[1] for v in support]
    reach = (max_degree + 1) * (C.n - 1)
    lo, hi = min(cols) - reach, max(cols)
    return [v for v in C.quiver.interior_vertices() if lo <= v[1] <= hi]


# ---------------------------------------------------------------------------
# decision procedures
# ---------------------------------------------------------------------------

NOT_THEOREM_BACKED = "not_theorem_backed"


@dataclass
class ClassificationVerdict:
    is_exact: object            # True | False | NOT_THEOREM_BACKED
    is_projective: object
    is_injective: object
    homology_vanishes: bool
    witnesses: dict = field(default_factory=dict)

    def describe(self):
        return {"is_exact": self.is_exact,
                "is_projective": self.is_projective,
                "is_injective": self.is_injective,
                "homology_vanishes": self.homology_vanishes,
                "witnesses": dict(self.witnesses)}


def classify_object(X: Representation, spread: int = 2) -> ClassificationVerdict:
    """Exactness via vanishing mesh homology; projectivity and injectivity
    by combining it with corner projectivity/injectivity.

    The mesh-homology characterization of the exact class is only
    theorem-backed over hereditary base rings (Z, Q, Z/p); over Z/p^k
    with k >= 2 the computation is still reported but the exactness
    verdict is flagged.  The projective/injective characterizations hold
    over every supported ring.
    """
    witnesses = {}
    vanishes = True
    for q in homology_probe_vertices(X, spread):
        H = mesh_homology(X, q)
        if not H.is_zero:
            vanishes = False
            witnesses.setdefault("nonvanishing_mesh_homology", []).append(
                (format_vertex(q), H.describe()))
    projective = vanishes
    injective = vanishes
    if vanishes:
        for q in sorted(X.support, key=format_vertex):
            corner = corner_functors(X, q)
            if not corner.C.is_projective():
                projective = False
                witnesses.setdefault("non_projective_corner", []).append(
                    (format_vertex(q), corner.C.describe()))
            if not corner.K.is_injective():
                injective = False
                witnesses.setdefault("non_injective_corner", []).append(
                    (format_vertex(q), corner.K.describe()))
    else:
        projective = injective = False
    exact = vanishes if X.ring.is_hereditary else NOT_THEOREM_BACKED
    return ClassificationVerdict(exact, projective, injective, vanishes,
                                 witnesses)


def zero_test(X: Representation) -> dict:
    """X = 0 tested directly and through both corner routes; the three
    verdicts agree whenever the pseudo-radical is nilpotent."""
    direct = X.is_zero()
    k_route = True
    c_route = True
    witness = None
    for q in sorted(X.support, key=format_vertex):
        corner = corner_functors(X, q)
        if not corner.K.is_zero:
            k_route = False
            witness = witness or ("K", format_vertex(q), corner.K.describe())
        if not corner.C.is_zero:
            c_route = False
            witness = witness or ("C", format_vertex(q), corner.C.describe())
    agree = direct == k_route == c_route
    return {"is_zero": direct, "kernel_route": k_route,
            "cokernel_route": c_route, "routes_agree": agree,
            "witness": witness}


def homology_report(X: Representation, vertices=None, max_degree: int = 2,
                    sides=(SIDE_CN, SIDE_CO)) -> dict:
    """Mesh homology plus derived (co)homology per vertex, as normal forms.

    Keys: "mesh" maps vertex labels to module descriptions; "H_" and
    "H^" map "i at vertex" to descriptions for i = 0..max_degree.
    """
    C = X.category
    if vertices is None:
        vertices = [q for q in C.vertices if C.is_interior(q)]
    report = {"mesh": {}, "H_": {}, "H^": {}}
    for q in vertices:
        label = format_vertex(q)
        if C.is_interior(q):
            report["mesh"][label] = mesh_homology(X, q).describe()
        if SIDE_CN in sides:
            for i, mod in derived_homology(X, q, SIDE_CN, max_degree).items():
                report["H_"][f"{i} at {label}"] = mod.describe()
        if SIDE_CO in sides:
            for i, mod in derived_homology(X, q, SIDE_CO, max_degree).items():
                report["H^"][f"{i} at {label}"] = mod.describe()
    return report


def is_weak_equivalence(phi: RepMorphism, max_degree: int = 2) -> dict:
    """Whether H_i(phi) is an isomorphism for i = 1..max_degree at every
    vertex; degrees one and two decide (and when the radical squares to
    zero, degree one alone does, which is cross-checked)."""
    check = validate_morphism(phi)
    if not check["ok"]:
        raise InvalidMorphism(str(check["failures"]))
    C = phi.source.category
    table = {}
    verdict = True
    degree_one = True
    for q in _cn_probes(phi.source, phi.target, max_degree):
        for i in range(1, max_degree + 1):
            f = derived_homology_map(phi, q, SIDE_CN, i, max_degree)
            iso = f.is_isomorphism()
            table[(format_vertex(q), i)] = iso
            if not iso:
                verdict = False
                if i == 1:
                    degree_one = False
    result = {"is_weak_equivalence": verdict, "iso_table": table,
              "max_degree": max_degree}
    if C.nilpotency_index() == 2:
        result["degree_one_route"] = degree_one
        result["routes_agree"] = (degree_one == verdict)
    return result
