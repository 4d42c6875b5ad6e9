"""Finite double-groupoid models: all squares over a crossed module.

``lambda_functor`` builds the model of every filled square over a crossed
module; ``square_model`` is the special case of trivial fibers, whose squares
are exactly the commuting edge quadruples of the base groupoid.  ``gamma``
goes back: it reads a crossed module off a model using only the model's own
compositions and degeneracies.  Exhaustive law sweeps (units, inverses,
associativity, interchange, thin closure) run over integer composition
tables so that six-figure quadruple counts stay affordable.
"""

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .crossed import CrossedModuleData, trivial_crossed_module, validate_crossed_module
from .errors import InvalidCrossedModule, InvalidDgt
from .finite import FiniteGroup, FiniteGroupoid
from .reporting import LawReport
from .squares import (
    Square,
    comp_h,
    comp_v,
    conn_minus,
    conn_plus,
    eps_h,
    eps_v,
    identity_square,
    inv_h,
    inv_v,
    is_thin,
    recheck_boundary,
)

_EDGES = ("top", "right", "bottom", "left")


@dataclass
class SquareTables:
    """Integer-indexed composition tables; -1 marks an undefined pasting."""

    squares: list[Square]
    index: dict[tuple, int]
    H: np.ndarray
    V: np.ndarray


@dataclass
class DgtModel:
    """Edge groupoid plus the full set of squares with both compositions."""

    name: str
    xm: CrossedModuleData
    edges: FiniteGroupoid
    squares: tuple[Square, ...]
    connections_minus: dict[str, Square]
    connections_plus: dict[str, Square]
    index: dict[tuple, int] = field(default=None, repr=False)
    _by_edge: dict = field(default=None, repr=False)
    _tables: SquareTables = field(default=None, repr=False)

    def __post_init__(self):
        if self.index is None:
            self.index = {s.key(): i for i, s in enumerate(self.squares)}
        by_edge = {e: {} for e in _EDGES}
        for s in self.squares:
            for e in _EDGES:
                by_edge[e].setdefault(getattr(s, e), []).append(s)
        self._by_edge = by_edge

    def __contains__(self, s: Square) -> bool:
        return s.key() in self.index

    def size(self) -> int:
        return len(self.squares)

    @property
    def thin_squares(self) -> list[Square]:
        return [s for s in self.squares if is_thin(s)]

    def squares_with(self, **edges) -> list[Square]:
        """All squares whose named edges carry the given arrows."""
        pools = []
        for e, val in edges.items():
            if e not in _EDGES:
                raise ValueError(f"unknown edge {e!r}")
            pools.append(self._by_edge[e].get(val, []))
        if not pools:
            return list(self.squares)
        smallest = min(pools, key=len)
        return [
            s
            for s in smallest
            if all(getattr(s, e) == val for e, val in edges.items())
        ]

    # The two compositions, degeneracies, connections and inverses just
    # delegate to the square calculus over self.xm.
    def compose_h(self, a: Square, b: Square) -> Square:
        return comp_h(a, b)

    def compose_v(self, a: Square, b: Square) -> Square:
        return comp_v(a, b)

    def inv_h(self, s: Square) -> Square:
        return inv_h(s)

    def inv_v(self, s: Square) -> Square:
        return inv_v(s)

    def eps_v(self, edge: str) -> Square:
        return eps_v(self.xm, edge)

    def eps_h(self, edge: str) -> Square:
        return eps_h(self.xm, edge)

    def identity_square(self, obj: str) -> Square:
        return identity_square(self.xm, obj)

    def random_square(self, rng: random.Random) -> Square:
        return self.squares[rng.randrange(len(self.squares))]

    def tables(self) -> SquareTables:
        if self._tables is None:
            squares = list(self.squares)
            index = dict(self.index)
            n = len(squares)
            H = np.full((n, n), -1, dtype=np.int32)
            V = np.full((n, n), -1, dtype=np.int32)
            by_left = {}
            by_top = {}
            for j, s in enumerate(squares):
                by_left.setdefault(s.left, []).append(j)
                by_top.setdefault(s.top, []).append(j)
            for i, s in enumerate(squares):
                for j in by_left.get(s.right, ()):
                    H[i, j] = index[comp_h(s, squares[j]).key()]
                for j in by_top.get(s.bottom, ()):
                    V[i, j] = index[comp_v(s, squares[j]).key()]
            self._tables = SquareTables(squares, index, H, V)
        return self._tables


def lambda_functor(x: CrossedModuleData, name: str | None = None) -> DgtModel:
    """All filled squares over a valid crossed module, with its structure."""
    report = validate_crossed_module(x)
    if not report.ok:
        raise InvalidCrossedModule(report)
    P = x.base
    arrows = sorted(P.arrows)
    preimage: dict[str, dict[str, list[str]]] = {
        s: {} for s in P.objects
    }
    for s in P.objects:
        for m in x.fibers[s].elements:
            preimage[s].setdefault(x.mu[s][m], []).append(m)
    squares = []
    for top in arrows:
        rights = [a for a in arrows if P.src[a] == P.dst[top]]
        lefts = [a for a in arrows if P.src[a] == P.src[top]]
        for left in lefts:
            for right in rights:
                z = P.dst[right]
                for bottom in P.hom(P.dst[left], z):
                    word = P.compose_all([P.inv(bottom), P.inv(left), top, right])
                    for elt in preimage[z].get(word, ()):
                        squares.append(Square(x, elt, top, right, bottom, left))
    squares.sort(key=lambda s: s.key())
    return DgtModel(
        name or f"squares({x.name})",
        x,
        P,
        tuple(squares),
        {a: conn_minus(x, a) for a in arrows},
        {a: conn_plus(x, a) for a in arrows},
    )


def square_model(g: FiniteGroupoid, name: str | None = None) -> DgtModel:
    """Commuting squares of a groupoid: the trivial-fiber model, all thin."""
    return lambda_functor(trivial_crossed_module(g), name=name or f"sq({g.name})")


# -- law sweeps ---------------------------------------------------------------

def comp_h_unconjugated(left: Square, right: Square):
    """Deliberately wrong horizontal pasting that skips the conjugation step.

    Negative-control variant: composing elements as a bare product breaks
    the interchange law, which the sweep must be able to detect.
    """
    if left.right != right.left:
        from .errors import EdgeMismatch

        raise EdgeMismatch("shared vertical edge differs")
    xm = left.xm
    P = xm.base
    alpha = xm.fibers[right.corner_se].mul(left.elt, right.elt)
    return Square(
        xm,
        alpha,
        P.compose(left.top, right.top),
        right.right,
        P.compose(left.bottom, right.bottom),
        left.left,
    )


def interchange_exhaustive(model: DgtModel) -> tuple[int, int, tuple | None]:
    """Check interchange on every edge-compatible 2x2 arrangement.

    Returns (number of quadruples checked, number of violations, first
    violating quadruple of square indices or None).
    """
    t = model.tables()
    H, V = t.H, t.V
    n = len(t.squares)
    h_valid = [np.nonzero(H[i] >= 0)[0] for i in range(n)]
    v_valid = [np.nonzero(V[i] >= 0)[0] for i in range(n)]
    checked = 0
    bad = 0
    first = None
    for x in range(n):
        ys = h_valid[x]
        zs = v_valid[x]
        if not len(ys) or not len(zs):
            continue
        p = H[x, ys]
        Vy = V[ys]
        r = V[x, zs]
        for zi, z in enumerate(zs):
            ws = h_valid[z]
            if not len(ws):
                continue
            q = H[z, ws]
            vyw = Vy[:, ws]
            mask = vyw >= 0
            cnt = int(mask.sum())
            if cnt == 0:
                continue
            checked += cnt
            lhs = V[p[:, None], q[None, :]]
            rhs = H[r[zi], np.where(mask, vyw, 0)]
            viol = mask & (lhs != rhs)
            nb = int(viol.sum())
            if nb:
                bad += nb
                if first is None:
                    yi, wi = map(int, np.argwhere(viol)[0])
                    first = (x, int(ys[yi]), z, int(ws[wi]))
    return checked, bad, first


def count_compatible_quadruples(model: DgtModel) -> int:
    """Independent count of edge-compatible 2x2 arrangements.

    Uses only edge bookkeeping (no composition tables): a quadruple
    [[x, y], [z, w]] is determined by x, a right-edge match for y, a
    bottom-edge match for z, and a (left, top) match for w.
    """
    pair_count: dict[tuple[str, str], int] = {}
    for s in model.squares:
        pair_count[(s.left, s.top)] = pair_count.get((s.left, s.top), 0) + 1
    by_left: dict[str, list[Square]] = {}
    by_top: dict[str, list[Square]] = {}
    for s in model.squares:
        by_left.setdefault(s.left, []).append(s)
        by_top.setdefault(s.top, []).append(s)
    total = 0
    for x in model.squares:
        for y in by_left.get(x.right, ()):
            for z in by_top.get(x.bottom, ()):
                total += pair_count.get((z.right, y.bottom), 0)
    return total


def find_interchange_counterexample(model: DgtModel, comp2=comp_h, limit: int | None = None):
    """First 2x2 arrangement on which the two evaluation orders differ.

    Scans quadruples in the model's canonical order using ``comp2`` for the
    horizontal pasting; with the real composition this returns None.
    """
    scanned = 0
    for x in model.squares:
        for y in model.squares_with(left=x.right):
            upper = comp2(x, y)
            for z in model.squares_with(top=x.bottom):
                left_side = comp_v(x, z)
                for w in model.squares_with(left=z.right, top=y.bottom):
                    lhs = comp_v(upper, comp2(z, w))
                    rhs = comp2(left_side, comp_v(y, w))
                    scanned += 1
                    if lhs != rhs:
                        return (x, y, z, w)
                    if limit is not None and scanned >= limit:
                        return None
    return None


def _assoc_sweep(table: np.ndarray, squares: list[Square], edge_out, edge_in) -> tuple[int, int]:
    """Exhaustive associativity over one composition table."""
    n = len(squares)
    groups: dict[str, np.ndarray] = {}
    for j, s in enumerate(squares):
        groups.setdefault(edge_in(s), None)
    for e in groups:
        groups[e] = np.array(
            [j for j, s in enumerate(squares) if edge_in(s) == e], dtype=np.int64
        )
    checked = 0
    bad = 0
    for x in range(n):
        ys = groups.get(edge_out(squares[x]))
        if ys is None or not len(ys):
            continue
        p = table[x, ys]
        # group the middle factors by their outgoing edge
        for e, zs in groups.items():
            sel = [yi for yi, y in enumerate(ys) if edge_out(squares[y]) == e]
            if not sel or not len(zs):
                continue
            ysel = ys[sel]
            psel = p[sel]
            inner = table[ysel[:, None], zs[None, :]]
            lhs = table[psel[:, None], zs[None, :]]
            rhs = table[x, inner]
            checked += lhs.size
            bad += int((lhs != rhs).sum())
    return checked, bad


def validate_dgt(model: DgtModel, interchange: str = "auto", seed: int = 0,
                 samples: int = 20000) -> LawReport:
    """Sweep the double-groupoid axioms over the whole model.

    ``interchange`` is "exhaustive", "sampled", or "auto" (exhaustive when
    the quadruple count stays below 2e8, sampled otherwise).
    """
    report = LawReport(f"dgt {model.name}")
    P = model.edges
    for s in model.squares:
        report.count()
        if not recheck_boundary(s):
            report.fail("boundary", f"square {s} violates the boundary law")
    # degeneracies and connections are present and thin
    for a in sorted(P.arrows):
        for builder, label in (
            (model.eps_v, "eps_v"),
            (model.eps_h, "eps_h"),
            (lambda e: model.connections_minus[e], "conn-"),
            (lambda e: model.connections_plus[e], "conn+"),
        ):
            report.count()
            sq = builder(a)
            if sq not in model:
                report.fail("degeneracy-closure", f"{label}({a}) not in model")
            elif not is_thin(sq):
                report.fail("degeneracy-thin", f"{label}({a}) is not thin")
    for a in sorted(P.arrows):
        gm = model.connections_minus[a]
        gp = model.connections_plus[a]
        e_dst = P.id_at(P.dst[a])
        e_src = P.id_at(P.src[a])
        report.count(2)
        if (gm.top, gm.left, gm.right, gm.bottom) != (a, a, e_dst, e_dst):
            report.fail("connection-boundary", f"conn-({a}) has wrong edges")
        if (gp.bottom, gp.right, gp.top, gp.left) != (a, a, e_src, e_src):
            report.fail("connection-boundary", f"conn+({a}) has wrong edges")
    # units, inverses, closure
    for s in model.squares:
        report.count(4)
        if comp_h(s, model.eps_h(s.right)) != s or comp_h(model.eps_h(s.left), s) != s:
            report.fail("h-unit", f"eps_h unit law fails at {s}")
        if comp_v(model.eps_v(s.top), s) != s or comp_v(s, model.eps_v(s.bottom)) != s:
            report.fail("v-unit", f"eps_v unit law fails at {s}")
        report.count(2)
        hi = inv_h(s)
        if hi not in model or comp_h(s, hi) != model.eps_h(s.left):
            report.fail("h-inverse", f"inv_h fails at {s}")
        vi = inv_v(s)
        if vi not in model or comp_v(s, vi) != model.eps_v(s.top):
            report.fail("v-inverse", f"inv_v fails at {s}")
    t = model.tables()
    report.count(int((t.H >= 0).sum() + (t.V >= 0).sum()))
    # composites stay inside the model by construction of the tables; any
    # KeyError would have surfaced while building them.
    ch, bh = _assoc_sweep(t.H, t.squares, lambda s: s.right, lambda s: s.left)
    report.count(ch)
    if bh:
        report.fail("h-associativity", f"{bh} violating triples")
    cv, bv = _assoc_sweep(t.V, t.squares, lambda s: s.bottom, lambda s: s.top)
    report.count(cv)
    if bv:
        report.fail("v-associativity", f"{bv} violating triples")
    # thin squares closed under both compositions
    thin = model.thin_squares
    thin_keys = {s.key() for s in thin}
    for s in thin:
        for u in model.squares_with(left=s.right):
            if u.key() in thin_keys:
                report.count()
                if not is_thin(comp_h(s, u)):
                    report.fail("thin-closure", f"{s} o2 {u} is not thin")
        for u in model.squares_with(top=s.bottom):
            if u.key() in thin_keys:
                report.count()
                if not is_thin(comp_v(s, u)):
                    report.fail("thin-closure", f"{s} o1 {u} is not thin")
    # interchange
    mode = interchange
    if mode == "auto":
        mode = "exhaustive" if count_compatible_quadruples(model) <= 2 * 10**8 else "sampled"
    if mode == "exhaustive":
        checked, bad, first = interchange_exhaustive(model)
        report.count(checked)
        if bad:
            report.fail("interchange", f"{bad} violations, first at indices {first}")
    elif mode == "sampled":
        rng = random.Random(seed)
        done = 0
        while done < samples:
            x = model.random_square(rng)
            ys = model.squares_with(left=x.right)
            zs = model.squares_with(top=x.bottom)
            if not ys or not zs:
                continue
            y = ys[rng.randrange(len(ys))]
            z = zs[rng.randrange(len(zs))]
            ws = model.squares_with(left=z.right, top=y.bottom)
            if not ws:
                continue
            w = ws[rng.randrange(len(ws))]
            done += 1
            report.count()
            if comp_v(comp_h(x, y), comp_h(z, w)) != comp_h(comp_v(x, z), comp_v(y, w)):
                report.fail("interchange", f"sampled violation at {x}, {y}, {z}, {w}")
    else:
        raise ValueError(f"unknown interchange mode {interchange!r}")
    return report


# -- connection transport law ---------------------------------------------------

def thin_candidate_family(model: DgtModel) -> list[Square]:
    """Degeneracies and connections of every edge, deduplicated by value."""
    out = {}
    for a in sorted(model.edges.arrows):
        for sq in (
            model.eps_v(a),
            model.eps_h(a),
            model.connections_minus[a],
            model.connections_plus[a],
        ):
            out[sq.key()] = sq
    return [out[k] for k in sorted(out)]


def transport_fill_search(model: DgtModel, a: str, b: str):
    """Corner fills making [[conn-(a), X], [Y, conn-(b)]] compose to conn-(ab).

    Searches the thin candidate family under the seam constraints plus the
    requirement that the outer boundary equal that of conn-(a*b); returns the
    list of (X, Y) fills that survive.
    """
    P = model.edges
    ab = P.compose(a, b)
    target = model.connections_minus[ab]
    corner_a = model.connections_minus[a]
    corner_b = model.connections_minus[b]
    family = thin_candidate_family(model)
    xs = [
        s
        for s in family
        if s.left == corner_a.right
        and s.bottom == corner_b.top
        and P.compose(corner_a.top, s.top) == target.top
        and P.compose(s.right, corner_b.right) == target.right
    ]
    ys = [
        s
        for s in family
        if s.top == corner_a.bottom
        and s.right == corner_b.left
        and P.compose(corner_a.left, s.left) == target.left
        and P.compose(s.bottom, corner_b.bottom) == target.bottom
    ]
    return [(x, y) for x in xs for y in ys]


def connection_transport_report(model: DgtModel) -> LawReport:
    """Uniqueness and correctness of the 2x2 transport layout for conn-."""
    from .grids import Grid, grid_compose

    report = LawReport(f"transport {model.name}")
    P = model.edges
    for a in sorted(P.arrows):
        for b in sorted(P.arrows):
            if P.dst[a] != P.src[b]:
                continue
            report.count()
            fills = transport_fill_search(model, a, b)
            if len(fills) != 1:
                report.fail(
                    "transport-uniqueness",
                    f"conn-({a}*{b}): {len(fills)} edge-compatible fills",
                )
                continue
            x, y = fills[0]
            grid = Grid(((model.connections_minus[a], x), (y, model.connections_minus[b])))
            if grid_compose(grid) != model.connections_minus[P.compose(a, b)]:
                report.fail("transport-value", f"conn-({a}*{b}) not reproduced")
    return report


# -- gamma: crossed module of a model --------------------------------------------

def gamma(d: DgtModel, name: str | None = None) -> CrossedModuleData:
    """Read a crossed module off a model using only its own operations.

    The fiber at an object collects the squares whose top, left and right
    edges are identities there; they form a group under horizontal pasting,
    the boundary is the bottom edge, and arrows act by the degenerate
    three-square sandwich  eps_v(p^-1) o2 m o2 eps_v(p).
    """
    P = d.edges
    fibers: dict[str, FiniteGroup] = {}
    mu: dict[str, dict[str, str]] = {}
    fiber_squares: dict[str, list[Square]] = {}
    elt_name: dict[tuple, str] = {}
    for s in sorted(P.objects):
        e = P.id_at(s)
        members = sorted(d.squares_with(top=e, left=e, right=e), key=lambda q: q.key())
        if d.identity_square(s) not in members:
            raise InvalidDgt(f"{d.name}: no identity square at {s!r}")
        fiber_squares[s] = members
        names = {}
        for i, q in enumerate(members):
            nm = f"q{i}"
            names[q.key()] = nm
            elt_name[q.key()] = nm
        table = {}
        for q1 in members:
            for q2 in members:
                prod = d.compose_h(q1, q2)
                if prod.key() not in names:
                    raise InvalidDgt(
                        f"{d.name}: fiber at {s!r} is not closed under pasting"
                    )
                table[(names[q1.key()], names[q2.key()])] = names[prod.key()]
        ident = names[d.identity_square(s).key()]
        inverse = {}
        for q1 in members:
            for q2 in members:
                if table[(names[q1.key()], names[q2.key()])] == ident:
                    inverse[names[q1.key()]] = names[q2.key()]
        if len(inverse) != len(members):
            raise InvalidDgt(f"{d.name}: fiber at {s!r} has no inverses")
        fibers[s] = FiniteGroup(
            f"gamma@{s}",
            tuple(sorted(names.values(), key=lambda nm: int(nm[1:]))),
            table,
            ident,
            inverse,
        )
        mu[s] = {names[q.key()]: q.bottom for q in members}
    action: dict[tuple[str, str], str] = {}
    for p in P.arrows:
        s, t = P.src[p], P.dst[p]
        left_wall = d.eps_v(P.inv(p))
        right_wall = d.eps_v(p)
        for q in fiber_squares[s]:
            moved = d.compose_h(d.compose_h(left_wall, q), right_wall)
            nm = elt_name.get(moved.key())
            if nm is None or moved not in d:
                raise InvalidDgt(f"{d.name}: sandwich of {q} along {p} escapes the fibers")
            action[(elt_name[q.key()], p)] = nm
    return CrossedModuleData(name or f"gamma({d.name})", P, fibers, mu, action)


# -- crossed module isomorphism over a fixed base --------------------------------

def _fiber_isos(ma: FiniteGroup, mb: FiniteGroup, mu_a: dict[str, str], mu_b: dict[str, str]):
    """Yield every group isomorphism ma -> mb compatible with the boundaries."""
    if ma.order() != mb.order():
        return
    candidates = {
        m: [
            n
            for n in mb.elements
            if mu_b[n] == mu_a[m] and ((m == ma.identity) == (n == mb.identity))
        ]
        for m in ma.elements
    }
    order = sorted(ma.elements)

    def extend(i, phi, used):
        if i == len(order):
            full = dict(phi)
            if all(
                full[ma.mul(m1, m2)] == mb.mul(full[m1], full[m2])
                for m1 in ma.elements
                for m2 in ma.elements
            ):
                yield full
            return
        m = order[i]
        for n in candidates[m]:
            if n in used:
                continue
            phi[m] = n
            used.add(n)
            ok = True
            for m2 in list(phi):
                if phi.get(ma.mul(m, m2)) not in (None, mb.mul(n, phi[m2])):
                    ok = False
                    break
                if phi.get(ma.mul(m2, m)) not in (None, mb.mul(phi[m2], n)):
                    ok = False
                    break
            if ok:
                yield from extend(i + 1, phi, used)
            used.discard(n)
            del phi[m]

    yield from extend(0, {}, set())


def find_xmod_isomorphism(a: CrossedModuleData, b: CrossedModuleData):
    """Fiberwise group isomorphism over the shared base, or None.

    Searches all boundary-compatible fiber isomorphisms and keeps the first
    combination that is also equivariant for the base action.
    """
    if (
        a.base.objects != b.base.objects
        or a.base.arrows != b.base.arrows
        or a.base.table != b.base.table
    ):
        return None
    objects = sorted(a.base.objects)
    per_object = []
    for s in objects:
        isos = list(_fiber_isos(a.fibers[s], b.fibers[s], a.mu[s], b.mu[s]))
        if not isos:
            return None
        per_object.append(isos)
    for combo in itertools.product(*per_object):
        iso = dict(zip(objects, combo))
        if all(
            iso[a.base.dst[p]][a.action[(m, p)]] == b.action[(iso[a.base.src[p]][m], p)]
            for p in a.base.arrows
            for m in a.fibers[a.base.src[p]].elements
        ):
            return iso
    return None
