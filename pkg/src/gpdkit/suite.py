"""The bundled verification battery: twelve exact checks, one per property.

Each criterion returns a Report with its counts and witnesses; `run_suite`
executes any subset and prints one pass/fail line per criterion.  All
randomness is seeded; every assertion is exact (no tolerances anywhere).
"""

import random
import time

from .crossed import from_normal_subgroup, automorphism_xmod, perturb_action_entry, validate_crossed_module
from .cubes import (
    commutativity_oracle,
    compose_cubes,
    enumerate_cubes,
    is_commutative_cube,
    random_commutative_cube,
)
from .dgt import (
    comp_h_unconjugated,
    connection_transport_report,
    count_compatible_quadruples,
    find_interchange_counterexample,
    find_xmod_isomorphism,
    gamma,
    interchange_exhaustive,
    lambda_functor,
    square_model,
)
from .eckmann import eckmann_hilton_scan
from .errors import PreconditionFailed
from .finite import (
    cyclic_group,
    even_elements,
    group_as_groupoid,
    standard_battery,
    symmetric_group,
    trivial_group,
)
from .grids import Grid, collapse_commutative_row, grid_compose, grid_compose_bracketed, grid_compose_columns_first, alternating_cut
from .morphisms import GroupoidMorphism
from .presentations import GroupoidPresentation, discrete_presentation
from .report import Report
from .squares import comp_h, comp_v, conn_minus, conn_plus, is_thin, recheck_boundary, thin_square
from .vkt import Span, check_pushout_universal, pushout, tietze_simplify, vertex_group
from .freemodules import FreeModule, induce_free_module
from .words import ArrowGen, Word, generator_word


def circle_span() -> Span:
    """Two interval legs glued over the discrete two-point apex."""
    apex = discrete_presentation("apex01", ("0", "1"))
    arc1 = GroupoidPresentation("arc1", ("0", "1"), (ArrowGen("a", "0", "1"),))
    arc2 = GroupoidPresentation("arc2", ("0", "1"), (ArrowGen("b", "0", "1"),))
    ident = {"0": "0", "1": "1"}
    return Span(
        apex,
        GroupoidMorphism("arc1_leg", apex, arc1, dict(ident), {}),
        GroupoidMorphism("arc2_leg", apex, arc2, dict(ident), {}),
    )


def a3_s3_xmod():
    s3 = symmetric_group(3)
    return from_normal_subgroup(s3, even_elements(s3), name="a3s3")


_MODEL_CACHE = {}


def a3_s3_model():
    if "a3s3" not in _MODEL_CACHE:
        _MODEL_CACHE["a3s3"] = lambda_functor(a3_s3_xmod())
    return _MODEL_CACHE["a3s3"]


def criterion_1_circle(seed: int = 0) -> Report:
    """Circle via two base points reduces to one free generator."""
    r = Report("criterion-1 circle-vertex-group")
    po = pushout(circle_span(), name="circle")
    vg = tietze_simplify(vertex_group(po.presentation, "0"))
    r.counts["generators"] = len(vg.generators)
    r.counts["relators"] = len(vg.relators)
    r.payload.append(vg.pretty())
    if len(vg.generators) != 1 or len(vg.relators) != 0:
        r.fail(f"expected one free generator, got {vg.pretty()}")
    return r


def criterion_2_universal(seed: int = 0) -> Report:
    """Universal property of the circle pushout against the battery."""
    r = Report("criterion-2 universal-property")
    span = circle_span()
    po = pushout(span, name="circle")
    for f in standard_battery():
        verdict = check_pushout_universal(span, po, f)
        r.counts[f"{f.name}_morphisms"] = verdict.candidate_count
        r.counts[f"{f.name}_cocones"] = verdict.pair_count
        if not verdict.ok:
            r.fail(f"{f.name}: {verdict}")
    if r.counts.get("s3_morphisms") != 36 or r.counts.get("s3_cocones") != 36:
        r.fail("expected 36 = 36 against the six-element symmetric group")
    return r


def criterion_3_crossed_modules(seed: int = 0) -> Report:
    """Axiom sweeps pass; all 50 seeded action perturbations are caught."""
    r = Report("criterion-3 crossed-module-axioms")
    s3 = symmetric_group(3)
    modules = [
        a3_s3_xmod(),
        automorphism_xmod(s3),
        automorphism_xmod(cyclic_group(3)),
        from_normal_subgroup(trivial_group(), {"e"}, name="trivial_module"),
    ]
    for xm in modules:
        law = validate_crossed_module(xm)
        r.counts[f"{xm.name}_checks"] = law.checks
        if not law.ok:
            r.fail(f"{xm.name}: {law.violations[0]}")
    caught = 0
    base = a3_s3_xmod()
    for k in range(50):
        rng = random.Random(seed + k)
        bad = perturb_action_entry(base, rng)
        if not validate_crossed_module(bad).ok:
            caught += 1
    r.counts["perturbations_caught"] = caught
    if caught != 50:
        r.fail(f"only {caught}/50 action perturbations detected")
    return r


def criterion_4_interchange(seed: int = 0) -> Report:
    """Exhaustive interchange over the 648-square model; corrupted control."""
    r = Report("criterion-4 interchange")
    model = a3_s3_model()
    r.counts["squares"] = model.size()
    if model.size() != 648:
        r.fail(f"expected 648 squares, got {model.size()}")
    expected = count_compatible_quadruples(model)
    checked, bad, first = interchange_exhaustive(model)
    r.counts["quadruples"] = checked
    r.counts["violations"] = bad
    if checked != expected:
        r.fail(f"sweep covered {checked} quadruples, edge count says {expected}")
    if bad:
        r.fail(f"{bad} interchange violations, first {first}")
    ce = find_interchange_counterexample(model, comp2=comp_h_unconjugated)
    r.counts["corrupted_counterexample"] = int(ce is not None)
    if ce is None:
        r.fail("corrupted composition produced no counterexample")
    return r


def criterion_5_boundary(seed: int = 0) -> Report:
    """mu(composite) always re-evaluates to the boundary word."""
    r = Report("criterion-5 boundary-law")
    model = a3_s3_model()
    rng = random.Random(seed)
    bad = 0
    for _ in range(1000):
        x = model.random_square(rng)
        ys = model.squares_with(left=x.right)
        y = ys[rng.randrange(len(ys))]
        if not recheck_boundary(comp_h(x, y)):
            bad += 1
        zs = model.squares_with(top=x.bottom)
        z = zs[rng.randrange(len(zs))]
        if not recheck_boundary(comp_v(x, z)):
            bad += 1
    r.counts["composites"] = 2000
    r.counts["violations"] = bad
    if bad:
        r.fail(f"{bad} composites broke the boundary law")
    return r


def criterion_6_grids(seed: int = 0) -> Report:
    """500 seeded 3x3 grids agree across four fold orders."""
    r = Report("criterion-6 grid-fold-orders")
    model = a3_s3_model()
    rng = random.Random(seed)
    disagreements = 0
    for _ in range(500):
        cells = []
        for i in range(3):
            row = []
            for j in range(3):
                constraints = {}
                if j > 0:
                    constraints["left"] = row[j - 1].right
                if i > 0:
                    constraints["top"] = cells[i - 1][j].bottom
                options = model.squares_with(**constraints)
                row.append(options[rng.randrange(len(options))])
            cells.append(tuple(row))
        grid = Grid(tuple(cells))
        results = {
            grid_compose(grid),
            grid_compose_columns_first(grid),
            grid_compose_bracketed(grid, alternating_cut("h")),
            grid_compose_bracketed(grid, alternating_cut("v")),
        }
        if len(results) != 1:
            disagreements += 1
    r.counts["grids"] = 500
    r.counts["disagreements"] = disagreements
    if disagreements:
        r.fail(f"{disagreements} grids had order-dependent folds")
    return r


def criterion_7_connections(seed: int = 0) -> Report:
    """Connections are thin with commuting boundaries; transport is unique."""
    r = Report("criterion-7 connections")
    model = a3_s3_model()
    xm = model.xm
    P = model.edges
    for a in sorted(P.arrows):
        for sq in (conn_minus(xm, a), conn_plus(xm, a)):
            if not is_thin(sq) or not recheck_boundary(sq):
                r.fail(f"connection at {a} is not a thin commutative square")
    law = connection_transport_report(model)
    r.merge_laws(law)
    return r


def criterion_8_cubes(seed: int = 0) -> Report:
    """Cube composites stay commutative; fold agrees with the scalar oracle."""
    r = Report("criterion-8 commutative-cubes")
    sq_c2 = square_model(group_as_groupoid(cyclic_group(2), name="c2"))
    cubes = list(enumerate_cubes(sq_c2))
    r.counts["c2_cubes"] = len(cubes)
    oracle_checked = 0
    for c in cubes:
        if not is_commutative_cube(c) or not commutativity_oracle(c):
            r.fail(f"cube in the 2-element model fails: {c.faces}")
        oracle_checked += 1
    by_face = {d: {} for d in (1, 2, 3)}
    slot = {1: ("d1+", "d1-"), 2: ("d2+", "d2-"), 3: ("d3+", "d3-")}
    for d in (1, 2, 3):
        plus, minus = slot[d]
        for c in cubes:
            by_face[d].setdefault(c.face(minus), []).append(c)
    composite_count = 0
    for d in (1, 2, 3):
        plus, minus = slot[d]
        for c1 in cubes:
            for c2 in by_face[d].get(c1.face(plus), ()):  # shared face
                comp = compose_cubes(c1, c2, d)
                composite_count += 1
                if not is_commutative_cube(comp) or not commutativity_oracle(comp):
                    r.fail(f"direction-{d} composite is not commutative")
    r.counts["c2_composites"] = composite_count

    model = square_model(group_as_groupoid(symmetric_group(3), name="s3"))
    rng = random.Random(seed)
    for _ in range(1000):
        d = rng.randrange(1, 4)
        c1 = random_commutative_cube(model, rng)
        if d == 1:
            c2 = c1
            c1 = random_commutative_cube(model, rng, fixed=("d1+", c2.face("d1-")))
        elif d == 2:
            c2 = random_commutative_cube(model, rng, fixed=("d2-", c1.face("d2+")))
        else:
            c2 = random_commutative_cube(model, rng, fixed=("d3-", c1.face("d3+")))
        comp = compose_cubes(c1, c2, d)
        oracle_checked += 3
        for c in (c1, c2, comp):
            if not is_commutative_cube(c) or not commutativity_oracle(c):
                r.fail(f"sampled direction-{d} composite fails")
                break
    r.counts["s3_samples"] = 1000
    r.counts["oracle_agreements"] = oracle_checked
    return r


def criterion_9_row_collapse(seed: int = 0) -> Report:
    """Identity-framed chains of commutative squares force a = b."""
    r = Report("criterion-9 row-collapse")
    model = square_model(group_as_groupoid(symmetric_group(3), name="s3"))
    xm = model.xm
    P = model.edges
    rng = random.Random(seed)
    arrows = sorted(P.arrows)
    failures = 0
    for _ in range(200):
        n = rng.randrange(1, 7)
        verticals = ["e"] + [arrows[rng.randrange(len(arrows))] for _ in range(n - 1)] + ["e"]
        tops = [arrows[rng.randrange(len(arrows))] for _ in range(n)]
        cells = []
        for i in range(n):
            bottom = P.compose_all([P.inv(verticals[i]), tops[i], verticals[i + 1]])
            cells.append(thin_square(xm, tops[i], verticals[i + 1], bottom, verticals[i]))
        top, bottom, equal = collapse_commutative_row(Grid((tuple(cells),)))
        direct = P.compose_all(tops) == P.compose_all([c.bottom for c in cells])
        if not equal or not direct:
            failures += 1
    r.counts["chains"] = 200
    r.counts["failures"] = failures
    if failures:
        r.fail(f"{failures} chains broke the collapse lemma")
    # negative fixture: a non-identity outer edge must be rejected
    t = arrows[0] if arrows[0] != "e" else arrows[1]
    sq = thin_square(xm, "e", t, P.inv(t), "e")
    try:
        collapse_commutative_row(Grid(((sq,),)))
        r.fail("non-identity outer edge was accepted")
    except PreconditionFailed:
        r.counts["negative_fixture"] = 1
    return r


def criterion_10_roundtrip(seed: int = 0) -> Report:
    """gamma(lambda(X)) is isomorphic to X by an explicit matching."""
    r = Report("criterion-10 equivalence-roundtrip")
    s3 = symmetric_group(3)
    modules = [
        a3_s3_xmod(),
        automorphism_xmod(s3),
        from_normal_subgroup(trivial_group(), {"e"}, name="trivial_module"),
    ]
    for xm in modules:
        model = lambda_functor(xm)
        back = gamma(model)
        law = validate_crossed_module(back)
        if not law.ok:
            r.fail(f"gamma(lambda({xm.name})) is not a crossed module: {law.violations[0]}")
            continue
        iso = find_xmod_isomorphism(xm, back)
        r.counts[f"{xm.name}_iso"] = int(iso is not None)
        if iso is None:
            r.fail(f"no isomorphism {xm.name} -> gamma(lambda({xm.name}))")
    return r


def criterion_11_eckmann_hilton(seed: int = 0, max_size: int = 3) -> Report:
    """Interchange forces one commutative monoid structure."""
    r = Report("criterion-11 eckmann-hilton")
    law = eckmann_hilton_scan(max_size)
    for n, t in law.totals.items():
        r.counts[f"size{n}_pairs"] = t["pairs"]
        r.counts[f"size{n}_interchange"] = t["interchange_pairs"]
    r.merge_laws(law)
    return r


def criterion_12_free_module(seed: int = 0) -> Report:
    """Induced interval module is free of rank one with a working action."""
    r = Report("criterion-12 free-module")
    from .presentations import interval_groupoid

    iv = interval_groupoid()
    mod = FreeModule("disk_module", iv, (("x", "0"),))
    t = ArrowGen("t", "*", "*")
    cinf = GroupoidPresentation("cinf", ("*",), (t,))
    u = GroupoidMorphism(
        "wrap", iv, cinf, {"0": "*", "1": "*"}, {"i": generator_word(t)}
    )
    ind = induce_free_module(mod, u)
    r.counts["rank"] = ind.rank()
    if ind.rank() != 1:
        r.fail(f"induced module has rank {ind.rank()}")
    # action laws on all elements with coefficient words of length <= 3
    tw = generator_word(t)
    words = [Word("*", ())]
    frontier = [Word("*", ())]
    for _ in range(3):
        nxt = []
        for w in frontier:
            for exp in (1, -1):
                try:
                    w2 = w * Word("*", ((t, exp),))
                except Exception:
                    continue
                if w2 not in words:
                    words.append(w2)
                    nxt.append(w2)
        frontier = nxt
    x = ind.basis_element("x")
    elements = [x.acted(w) for w in words]
    checked = 0
    for e in elements:
        for w1 in words:
            for w2 in words:
                checked += 1
                if e.acted(w1 * w2) != e.acted(w1).acted(w2):
                    r.fail(f"action not functorial on {e} with {w1}, {w2}")
        if e.acted(tw).acted(~tw) != e:
            r.fail(f"action by t not undone by t^-1 on {e}")
    two_t_minus_one = 2 * x.acted(tw) - x
    one_minus_t = x - x.acted(tw)
    if two_t_minus_one + one_minus_t != x.acted(tw):
        r.fail("coefficient arithmetic broke on (2t-1)x + (1-t)x")
    r.counts["action_checks"] = checked
    return r


CRITERIA = [
    ("1", criterion_1_circle, "circle pushout reduces to one free generator"),
    ("2", criterion_2_universal, "universal property counts agree on the battery"),
    ("3", criterion_3_crossed_modules, "crossed-module axioms and perturbation fuzzing"),
    ("4", criterion_4_interchange, "exhaustive interchange plus corrupted control"),
    ("5", criterion_5_boundary, "composites satisfy the boundary law"),
    ("6", criterion_6_grids, "grid folds are order-independent"),
    ("7", criterion_7_connections, "connections thin; transport layout unique"),
    ("8", criterion_8_cubes, "commutative cubes compose; scalar oracle agrees"),
    ("9", criterion_9_row_collapse, "row collapse forces top = bottom"),
    ("10", criterion_10_roundtrip, "gamma after lambda recovers the module"),
    ("11", criterion_11_eckmann_hilton, "interchange collapses monoid pairs"),
    ("12", criterion_12_free_module, "induced free module of rank one"),
]


def run_suite(seed: int = 0, only: set[str] | None = None, out=print) -> Report:
    """Run the battery; one line per criterion, aggregated into one report."""
    total = Report("suite")
    for key, fn, blurb in CRITERIA:
        if only and key not in only:
            continue
        t0 = time.perf_counter()
        rep = fn(seed=seed)
        rep.wall_time = time.perf_counter() - t0
        status = "PASS" if rep.ok else "FAIL"
        out(f"CRITERION {key} {status} ({rep.wall_time:.2f}s) {blurb}")
        total.counts[f"criterion_{key}"] = rep.status
        total.wall_time += rep.wall_time
        if not rep.ok:
            for w in rep.witnesses:
                total.fail(f"criterion {key}: {w}")
    return total
