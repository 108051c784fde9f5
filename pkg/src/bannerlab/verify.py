"""Structural verification suites behind the CLI ``verify`` command.

Each suite re-checks one structural claim on a pinned catalog of instances
(plus seeded random complexes) and yields one report per check.  Suites are
deterministic given the seed, and report order follows catalog order.  The
check codes accepted by ``run_suite`` are stable identifiers; see the module
table ``SUITES`` for the code -> suite mapping.

The ``D6.1-chain`` suite is diagnostic only: it reports whether the
b-invariant sequence is non-increasing but never fails the run, since direct
evaluation produces counterexamples (see the suite body).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations
from math import comb

from . import balanced as bal
from . import banner as ban
from . import cm as cmv
from .complexes import (
    SimplicialComplex,
    from_facets,
    is_connected,
    missing_faces,
    suspension,
)
from .generators import (
    banner3_sphere,
    banner_step_complex,
    cross_polytope,
    csaszar_torus,
    cycle,
    grid_torus,
    random_complex,
    rp2_6,
    simplex_boundary,
)
from .homology import DEFAULT_FIELDS, FieldSpec, reduced_betti


@dataclass
class TheoremReport:
    check: str
    instance: str
    params: dict
    verdict: str  # "pass" | "fail" | "info" | "skip"
    witness: object = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        def clean(x):
            if isinstance(x, (frozenset, set)):
                return sorted(x)
            if isinstance(x, FieldSpec):
                return x.characteristic
            if isinstance(x, tuple):
                return [clean(v) for v in x]
            if isinstance(x, dict):
                return {str(k): clean(v) for k, v in x.items()}
            return x

        return {
            "check": self.check,
            "instance": self.instance,
            "params": clean(self.params),
            "verdict": self.verdict,
            "witness": clean(self.witness),
            "seconds": round(self.seconds, 4),
        }


@dataclass
class SuiteContext:
    fields: tuple = DEFAULT_FIELDS
    seed: int = 7
    random_count: int | None = None
    instances: list[tuple[str, SimplicialComplex]] | None = None

    def corpus(self, default_count: int, max_vertices: int = 8):
        n = self.random_count if self.random_count is not None else default_count
        return random_corpus(n, self.seed, max_vertices)


def random_corpus(count: int, seed: int, max_vertices: int = 8):
    """Seeded random complexes: (label, complex) pairs."""
    out = []
    rng = random.Random(seed)
    for t in range(count):
        n = rng.randint(1, max_vertices)
        dmax = rng.randint(0, 3)
        sub_seed = rng.randrange(2**30)
        out.append((f"random(n={n},dmax={dmax},seed={sub_seed})",
                    random_complex(n, dmax, sub_seed)))
    return out


# -- pinned catalog -----------------------------------------------------------


@lru_cache(maxsize=None)
def _named(name: str) -> SimplicialComplex:
    builders = {
        "cross_polytope(3)": lambda: cross_polytope(3),
        "cross_polytope(4)": lambda: cross_polytope(4),
        "simplex_boundary(3)": lambda: simplex_boundary(3),
        "simplex_boundary(4)": lambda: simplex_boundary(4),
        "simplex_boundary(5)": lambda: simplex_boundary(5),
        "banner3_sphere(3)": lambda: banner3_sphere(3),
        "banner3_sphere(4)": lambda: banner3_sphere(4),
        "suspension(banner3_sphere(3))": lambda: suspension(banner3_sphere(3)),
        "grid_torus(4,4)": lambda: grid_torus(4, 4),
        "csaszar_torus": csaszar_torus,
        "rp2_6": rp2_6,
        "cycle(4)": lambda: cycle(4),
        "banner_step_complex(3,2)": lambda: banner_step_complex(3, 2),
        "banner_step_complex(4,2)": lambda: banner_step_complex(4, 2),
        "banner_step_complex(4,3)": lambda: banner_step_complex(4, 3),
        "banner_step_complex(5,2)": lambda: banner_step_complex(5, 2),
        "banner_step_complex(5,4)": lambda: banner_step_complex(5, 4),
    }
    return builders[name]()


def catalog(names) -> list[tuple[str, SimplicialComplex]]:
    return [(n, _named(n)) for n in names]


FULL_CATALOG = (
    "cross_polytope(3)", "cross_polytope(4)",
    "simplex_boundary(3)", "simplex_boundary(4)", "simplex_boundary(5)",
    "banner3_sphere(3)", "banner3_sphere(4)",
    "suspension(banner3_sphere(3))",
    "grid_torus(4,4)", "csaszar_torus", "rp2_6", "cycle(4)",
    "banner_step_complex(3,2)", "banner_step_complex(4,2)",
    "banner_step_complex(4,3)", "banner_step_complex(5,2)",
    "banner_step_complex(5,4)",
)

# homology spheres, small enough for exhaustive q-sweeps
SWEEP_SPHERES = (
    "cross_polytope(3)", "cross_polytope(4)",
    "simplex_boundary(3)", "simplex_boundary(4)", "simplex_boundary(5)",
    "banner3_sphere(3)", "suspension(banner3_sphere(3))",
)

SPHERES = SWEEP_SPHERES + ("banner3_sphere(4)",)

MANIFOLDS = SPHERES + ("grid_torus(4,4)", "csaszar_torus", "rp2_6")

# manifolds that stay small under Buchsbaum sweeps
SWEEP_MANIFOLDS = (
    "cross_polytope(3)", "cross_polytope(4)", "grid_torus(4,4)",
    "csaszar_torus", "rp2_6", "cycle(4)",
)

NAMED_CATALOGS = {
    "full": FULL_CATALOG,
    "spheres": SPHERES,
    "sweep-spheres": SWEEP_SPHERES,
    "manifolds": MANIFOLDS,
    "banner-manifolds": MANIFOLDS,
}


def _timed(fn):
    t0 = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - t0


def _instances(ctx: SuiteContext, default_names, with_corpus: int = 0):
    if ctx.instances is not None:
        return list(ctx.instances)
    out = catalog(default_names)
    if with_corpus:
        out += ctx.corpus(with_corpus)
    return out


def _agg(check: str, label: str, params: dict, failures: list, seconds: float,
         verdict_ok: str = "pass") -> TheoremReport:
    if failures:
        return TheoremReport(check, label, params, "fail", failures[0], seconds)
    return TheoremReport(check, label, params, verdict_ok, None, seconds)


# -- banner lemma suites ------------------------------------------------------


def _suite_banner_monotone(ctx: SuiteContext):
    """L3.2: i-banner implies (i+1)-banner; (dim+2)-banner always holds."""
    insts = _instances(ctx, FULL_CATALOG, with_corpus=300)
    failures = []
    t0 = time.perf_counter()
    for label, cx in insts:
        seq = [ban.is_i_banner(cx, i) for i in range(1, cx.dim + 3)]
        if not seq or not seq[-1]:
            failures.append({"instance": label, "reason": "top index not banner"})
            continue
        for a, b in zip(seq, seq[1:]):
            if a and not b:
                failures.append({"instance": label, "reason": "monotonicity broken"})
                break
    yield _agg("L3.2", f"{len(insts)} instances", {}, failures,
               time.perf_counter() - t0)


def _suite_flag_equivalence(ctx: SuiteContext):
    """L3.3: flag <=> 1-banner <=> 2-banner."""
    insts = _instances(ctx, FULL_CATALOG, with_corpus=1000)
    failures = []
    t0 = time.perf_counter()
    for label, cx in insts:
        flag = ban.is_flag(cx)
        b1 = ban.is_i_banner(cx, 1)
        b2 = ban.is_i_banner(cx, 2)
        if not (flag == b1 == b2):
            failures.append({"instance": label, "flag": flag, "b1": b1, "b2": b2})
    yield _agg("L3.3", f"{len(insts)} instances", {}, failures,
               time.perf_counter() - t0)


def _suite_link_banner(ctx: SuiteContext):
    """L3.4: links of i-banner complexes (i >= 2) are (i-1)-banner, and a
    face on link vertices missing from the link has dimension <= i-2."""
    insts = _instances(ctx, FULL_CATALOG, with_corpus=300)
    failures = []
    t0 = time.perf_counter()
    for label, cx in insts:
        if cx.dim < 0:
            continue
        i = max(ban.banner_index(cx), 2)
        for v in cx.vertices:
            lk = cx.link({v})
            if not ban.is_i_banner(lk, i - 1):
                failures.append({"instance": label, "i": i, "vertex": v})
                break
            lkverts = set(lk.vertices)
            # faces of dimension > i-2 on link vertices must lie in the link
            for k in range(max(i - 1, 0), cx.dim + 1):
                for f in cx.faces(k):
                    if set(f) <= lkverts and not lk.has_face(f):
                        failures.append({"instance": label, "i": i,
                                         "vertex": v, "face": sorted(f)})
                        break
    yield _agg("L3.4", f"{len(insts)} instances", {}, failures,
               time.perf_counter() - t0)


def _suite_suspension_shift(ctx: SuiteContext):
    """L3.5: i-banner <=> suspension is (i+1)-banner, both directions."""
    insts = _instances(ctx, FULL_CATALOG[:8], with_corpus=300)
    failures = []
    t0 = time.perf_counter()
    for label, cx in insts:
        sus = suspension(cx)
        for i in range(1, cx.dim + 3):
            if ban.is_i_banner(cx, i) != ban.is_i_banner(sus, i + 1):
                failures.append({"instance": label, "i": i})
                break
    yield _agg("L3.5", f"{len(insts)} instances", {}, failures,
               time.perf_counter() - t0)


def _suite_missing_face_bound(ctx: SuiteContext):
    """L3.6: an i-banner complex (i >= 2) has no missing face of size > i."""
    insts = _instances(ctx, FULL_CATALOG, with_corpus=300)
    failures = []
    t0 = time.perf_counter()
    for label, cx in insts:
        i = max(ban.banner_index(cx), 2)
        toobig = [sorted(m) for m in missing_faces(cx) if len(m) > i]
        if toobig:
            failures.append({"instance": label, "i": i, "missing": toobig[0]})
    yield _agg("L3.6", f"{len(insts)} instances", {}, failures,
               time.perf_counter() - t0)


def _suite_subdivided_sphere(ctx: SuiteContext):
    """P4.2: the subdivided-join spheres have the advertised vertex counts,
    are homology spheres over every field, and have banner index 3 with a
    unique size-3 missing clique."""
    expected = {3: (17, (1, 17, 45, 30)), 4: (45, None)}
    for d, (nverts, fv) in expected.items():
        t0 = time.perf_counter()
        cx = _named(f"banner3_sphere({d})")
        probs = []
        if cx.n_vertices != nverts:
            probs.append({"n_vertices": cx.n_vertices, "expected": nverts})
        if fv is not None and cx.f_vector() != fv:
            probs.append({"f": cx.f_vector(), "expected": fv})
        for f in ctx.fields:
            if not cmv.is_homology_sphere(cx, f):
                probs.append({"not_sphere_over": str(FieldSpec.coerce(f))})
        if ban.banner_index(cx) != 3:
            probs.append({"banner_index": ban.banner_index(cx)})
        big = [sorted(m) for m in missing_faces(cx) if len(m) >= 3]
        if big != [[1, 2, 3]]:
            probs.append({"missing": big})
        yield _agg("P4.2", f"banner3_sphere({d})", {"d": d}, probs,
                   time.perf_counter() - t0)


def _suite_suspension_family(ctx: SuiteContext):
    """C4.3: suspending the banner-3 sphere shifts the banner index up by
    one per suspension, giving (i+1)-banner-not-i-banner spheres."""
    cases = [(4, 3), (5, 4)]
    for d, i in cases:
        t0 = time.perf_counter()
        cx = _named("banner3_sphere(3)")
        for _ in range(i - 2):
            cx = suspension(cx)
        probs = []
        if cx.dim != d - 1:
            probs.append({"dim": cx.dim})
        bi = ban.banner_index(cx)
        if bi != i + 1:
            probs.append({"banner_index": bi, "expected": i + 1})
        if not cmv.is_homology_sphere(cx, 2):
            probs.append({"not_sphere": True})
        yield _agg("C4.3", f"suspension^{i - 2}(banner3_sphere(3))",
                   {"d": d, "i": i}, probs, time.perf_counter() - t0)


# -- CM connectivity suites ---------------------------------------------------


def _suite_sphere_skeleton_cm(ctx: SuiteContext):
    """T5.1: for an i-banner homology sphere of dimension d-1 and t = i..d,
    the (d-t)-skeleton is 2t-CM (exhaustive deletion sweeps)."""
    insts = _instances(ctx, SWEEP_SPHERES)
    for label, cx in insts:
        d = cx.dim + 1
        bi = ban.banner_index(cx)
        if bi > d:
            yield TheoremReport("T5.1", label, {"banner_index": bi}, "skip",
                                "banner index exceeds d")
            continue
        for f in ctx.fields:
            fs = FieldSpec.coerce(f)
            for t in range(bi, d + 1):
                t0 = time.perf_counter()
                rep = cmv.is_q_cm(cx.skeleton(d - t), 2 * t, fs)
                verdict = "pass" if rep.holds else "fail"
                wit = None if rep.holds else {"W": sorted(rep.failing_W or ()),
                                              "reason": rep.reason}
                yield TheoremReport(
                    "T5.1", label,
                    {"i+j": t, "skeleton": d - t, "q": 2 * t, "field": str(fs)},
                    verdict, wit, time.perf_counter() - t0)


def _suite_manifold_vertex_bound(ctx: SuiteContext):
    """L5.2: an i-banner homology manifold of dimension d-1 with i <= d has
    at least 2d vertices."""
    insts = _instances(ctx, MANIFOLDS)
    for label, cx in insts:
        t0 = time.perf_counter()
        d = cx.dim + 1
        if not cmv.is_homology_manifold(cx, 2):
            yield TheoremReport("L5.2", label, {}, "skip", "not a homology manifold",
                                time.perf_counter() - t0)
            continue
        bi = ban.banner_index(cx)
        if bi > d:
            yield TheoremReport("L5.2", label, {"banner_index": bi}, "skip",
                                "banner index exceeds d", time.perf_counter() - t0)
            continue
        ok = cx.n_vertices >= 2 * d
        yield TheoremReport("L5.2", label,
                            {"banner_index": bi, "n": cx.n_vertices, "2d": 2 * d},
                            "pass" if ok else "fail",
                            None if ok else {"n": cx.n_vertices},
                            time.perf_counter() - t0)


_SWEEP_CAP = 40_000


def _sweep_size(n: int, q: int) -> int:
    return sum(comb(n, s) for s in range(0, min(q - 1, n) + 1))


def _suite_manifold_skeleton_buchsbaum(ctx: SuiteContext):
    """C5.3: for an (i+1)-banner homology manifold of dimension dm, the
    (dm+1-i-j)-skeleton is 2(i+j)-Buchsbaum, and deletions of fewer than
    2(i+j) vertices stay connected."""
    insts = _instances(ctx, SWEEP_MANIFOLDS)
    for label, cx in insts:
        dm = cx.dim
        if not cmv.is_homology_manifold(cx, 2):
            yield TheoremReport("C5.3", label, {}, "skip", "not a homology manifold")
            continue
        bi = ban.banner_index(cx)
        i = max(bi - 1, 1)
        if not ban.is_i_banner(cx, i + 1) or i > dm:
            yield TheoremReport("C5.3", label, {"banner_index": bi}, "skip",
                                "no valid i")
            continue
        for j in range(0, dm + 2 - i):
            q = 2 * (i + j)
            if _sweep_size(cx.n_vertices, q) > _SWEEP_CAP:
                yield TheoremReport("C5.3", label, {"i": i, "j": j, "q": q},
                                    "skip", "sweep too large")
                continue
            for f in ctx.fields:
                fs = FieldSpec.coerce(f)
                t0 = time.perf_counter()
                rep = cmv.is_q_buchsbaum(cx.skeleton(dm + 1 - i - j), q, fs)
                wit = None if rep.holds else {"W": sorted(rep.failing_W or ()),
                                              "reason": rep.reason}
                yield TheoremReport(
                    "C5.3", label,
                    {"i": i, "j": j, "skeleton": dm + 1 - i - j, "q": q,
                     "field": str(fs)},
                    "pass" if rep.holds else "fail", wit,
                    time.perf_counter() - t0)
        # Connectivity part, capped at j = dm - i: the extreme j = dm + 1 - i
        # over-deletes on small vertex sets (removing four of the
        # octahedron's six vertices can leave two antipodal points).
        j_conn = dm - i
        if j_conn >= 0 and is_connected(cx):
            q = 2 * (i + j_conn)
            if _sweep_size(cx.n_vertices, q) > _SWEEP_CAP:
                yield TheoremReport("C5.3", label, {"connectivity_q": q},
                                    "skip", "sweep too large")
            else:
                t0 = time.perf_counter()
                rep = cmv.deletion_connected(cx, q)
                wit = None if rep.holds else {"W": sorted(rep.failing_W or ())}
                yield TheoremReport("C5.3", label, {"connectivity_q": q},
                                    "pass" if rep.holds else "fail", wit,
                                    time.perf_counter() - t0)


def _suite_duality(ctx: SuiteContext):
    """DUALITY: on homology spheres, deleting W and restricting to W give
    mirrored Betti numbers (seeded W, fields cycled)."""
    insts = _instances(ctx, ("cross_polytope(3)", "simplex_boundary(3)",
                             "simplex_boundary(4)", "cross_polytope(4)",
                             "banner3_sphere(3)"))
    count = ctx.random_count if ctx.random_count is not None else 200
    for label, cx in insts:
        rng = random.Random(ctx.seed)
        vs = list(cx.vertices)
        t0 = time.perf_counter()
        failures = []
        for t in range(count):
            w = frozenset(rng.sample(vs, rng.randint(0, len(vs))))
            f = ctx.fields[t % len(ctx.fields)]
            if not cmv.alexander_duality_holds(cx, w, f):
                failures.append({"W": sorted(w), "field": str(FieldSpec.coerce(f))})
                break
        yield _agg("DUALITY", label, {"checks": count}, failures,
                   time.perf_counter() - t0)


def _suite_link_skeleton_identity(ctx: SuiteContext):
    """EQ1: linking inside a deleted skeleton equals deleting from the
    skeleton of the link, as face sets."""
    count = ctx.random_count if ctx.random_count is not None else 200
    rng = random.Random(ctx.seed)
    t0 = time.perf_counter()
    failures = []
    done = 0
    while done < count:
        n = rng.randint(1, 8)
        cx = random_complex(n, rng.randint(0, 3), rng.randrange(2**30))
        k = rng.randint(-1, cx.dim + 1)
        w = frozenset(rng.sample(list(cx.vertices), rng.randint(0, cx.n_vertices)))
        skel = cx.skeleton(k).deletion(w)
        candidates = [f for f in skel.all_faces()]
        if not candidates:
            continue
        f = candidates[rng.randrange(len(candidates))]
        left = skel.link(f)
        right = cx.link(f).skeleton(k - len(f)).deletion(w)
        if left != right:
            failures.append({"n": n, "k": k, "W": sorted(w), "F": sorted(f)})
            break
        done += 1
    yield _agg("EQ1", f"{count} random identities", {"seed": ctx.seed},
               failures, time.perf_counter() - t0)


def _suite_b_chain(ctx: SuiteContext):
    """D6.1-chain (diagnostic only): reports whether b_0 >= b_1 >= ... >= 0.

    Direct evaluation of the definition produces counterexamples (the
    banner-3 spheres give b = (0, 1, 0)), so violations are reported as
    information, never as failures.
    """
    insts = _instances(ctx, FULL_CATALOG, with_corpus=50)
    for label, cx in insts:
        if cx.dim < 0:
            continue
        t0 = time.perf_counter()
        values = ban.b_invariants(cx).values
        chain = all(a >= b for a, b in zip(values, values[1:]))
        yield TheoremReport("D6.1-chain", label, {"b": values},
                            "pass" if chain else "info",
                            None if chain else {"chain_violated": values},
                            time.perf_counter() - t0)


def _suite_skeleton_cm_from_b(ctx: SuiteContext):
    """T6.2: for a homology sphere, the i-skeleton is (2(d-i)-b_i)-CM; when
    b_i < d-i-1 the same bound propagates to lower skeleta."""
    insts = _instances(ctx, ("cross_polytope(3)", "cross_polytope(4)",
                             "simplex_boundary(3)", "simplex_boundary(4)",
                             "simplex_boundary(5)", "banner3_sphere(3)"))
    for label, cx in insts:
        d = cx.dim + 1
        bvals = ban.b_invariants(cx).values
        targets = {}
        for i in range(d):
            targets[(i, 2 * (d - i) - bvals[i])] = f"i={i}"
            if bvals[i] < d - i - 1:
                for k in range(0, i + 1):
                    targets.setdefault((k, 2 * (d - k) - bvals[i]), f"i={i},k={k}")
        for (k, q), why in sorted(targets.items()):
            if q < 1:
                continue
            if _sweep_size(cx.n_vertices, q) > _SWEEP_CAP:
                yield TheoremReport("T6.2", label, {"skeleton": k, "q": q},
                                    "skip", "sweep too large")
                continue
            for f in ctx.fields:
                fs = FieldSpec.coerce(f)
                t0 = time.perf_counter()
                rep = cmv.is_q_cm(cx.skeleton(k), q, fs)
                wit = None if rep.holds else {"W": sorted(rep.failing_W or ()),
                                              "reason": rep.reason}
                yield TheoremReport("T6.2", label,
                                    {"skeleton": k, "q": q, "b": bvals,
                                     "case": why, "field": str(fs)},
                                    "pass" if rep.holds else "fail", wit,
                                    time.perf_counter() - t0)


def _max_q(limit, check) -> int:
    q = 0
    while q < limit and check(q + 1):
        q += 1
    return q


def _suite_link_cm_lift(ctx: SuiteContext):
    """L6.4 with its corollary and the codimension-one skeleton fact: if all
    vertex links of a CM complex are q-CM then the codimension-one skeleton
    is (q+1)-CM; skeleton bounds of links lift to the complex with a shift;
    and the codimension-one skeleton of a q-CM complex is (q+1)-CM."""
    insts = _instances(ctx, ("cross_polytope(3)", "simplex_boundary(3)",
                             "simplex_boundary(4)", "banner3_sphere(3)"))
    fs = FieldSpec.coerce(2)
    for label, cx in insts:
        d = cx.dim + 1
        if d < 2 or not cmv.is_cm(cx, fs).holds:
            yield TheoremReport("L6.4", label, {}, "skip", "not CM or too small")
            continue
        t0 = time.perf_counter()
        q_link = min(
            _max_q(cx.n_vertices,
                   lambda q, v=v: cmv.is_q_cm(cx.link({v}), q, fs).holds)
            for v in cx.vertices
        )
        rep = cmv.is_q_cm(cx.skeleton(d - 2), q_link + 1, fs)
        yield TheoremReport("L6.4", label,
                            {"links_q": q_link, "q+1": q_link + 1},
                            "pass" if rep.holds else "fail",
                            None if rep.holds else {"W": sorted(rep.failing_W or ())},
                            time.perf_counter() - t0)
        # codimension-one skeleton of a q-CM complex is (q+1)-CM
        t0 = time.perf_counter()
        q_cx = _max_q(cx.n_vertices, lambda q: cmv.is_q_cm(cx, q, fs).holds)
        rep2 = cmv.is_q_cm(cx.skeleton(d - 2), q_cx + 1, fs)
        yield TheoremReport("L6.4", label,
                            {"codim1_of_qcm": q_cx, "q+1": q_cx + 1},
                            "pass" if rep2.holds else "fail",
                            None if rep2.holds else {"W": sorted(rep2.failing_W or ())},
                            time.perf_counter() - t0)
        # corollary instance: links' skeleton bound lifts with shift s=1
        if d >= 3:
            t0 = time.perf_counter()
            k = d - 3
            q_sk = min(
                _max_q(cx.n_vertices,
                       lambda q, v=v: cmv.is_q_cm(cx.link({v}).skeleton(k), q, fs).holds)
                for v in cx.vertices
            )
            rep3 = cmv.is_q_cm(cx.skeleton(k), q_sk + 1, fs)
            yield TheoremReport("L6.4", label,
                                {"corollary_k": k, "links_skel_q": q_sk,
                                 "q+s": q_sk + 1},
                                "pass" if rep3.holds else "fail",
                                None if rep3.holds else {"W": sorted(rep3.failing_W or ())},
                                time.perf_counter() - t0)


# -- face number suites -------------------------------------------------------


def banner_corpus(count: int, seed: int, max_vertices: int = 8):
    """Seeded corpus of (label, complex, i) with each complex i-banner and
    2 <= i <= dim+1; falls back to the clique complex of the 1-skeleton
    (which is flag) when a random complex has banner index above dim+1."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, max_vertices)
        cx = random_complex(n, rng.randint(1, 3), rng.randrange(2**30))
        if cx.dim < 1:
            continue
        d = cx.dim + 1
        bi = ban.banner_index(cx)
        if max(bi, 2) <= d:
            out.append((f"corpus[{len(out)}]", cx, max(bi, 2)))
            continue
        flagged = from_facets(
            list(ban.cliques(cx, (1, None)))
        )
        if flagged.dim >= 1:
            out.append((f"corpus[{len(out)}:flagged]", flagged, 2))
    return out


def _suite_balanced_companion(ctx: SuiteContext):
    """T7.1: the balanced companion exists, is balanced, keeps the vertex
    count, and matches face numbers from dimension i-1 up."""
    pinned = [("cross_polytope(3)", _named("cross_polytope(3)"), 2),
              ("cross_polytope(4)", _named("cross_polytope(4)"), 2),
              ("banner3_sphere(3)", _named("banner3_sphere(3)"), 3),
              ("grid_torus(4,4)", _named("grid_torus(4,4)"), 2)]
    count = ctx.random_count if ctx.random_count is not None else 200
    cases = pinned + banner_corpus(count, ctx.seed)
    failures = []
    t0 = time.perf_counter()
    checked = 0
    for label, cx, i in cases:
        try:
            cc = bal.balanced_companion(cx, i)
        except bal.SynthesisInvariantError as exc:
            failures.append({"instance": label, "i": i, "contradiction": str(exc)})
            break
        except ValueError as exc:
            failures.append({"instance": label, "i": i, "rejected": str(exc)})
            break
        probs = []
        if cc.complex.n_vertices != cx.n_vertices:
            probs.append("vertex count")
        if not bal.validate_coloring(cc) or not bal.is_balanced(cc.complex):
            probs.append("not balanced")
        for k in range(i, cx.dim + 2):
            if cc.complex.n_faces(k - 1) != cx.n_faces(k - 1):
                probs.append(f"f_{k - 1}")
        if probs:
            failures.append({"instance": label, "i": i, "problems": probs})
            break
        checked += 1
    yield _agg("T7.1", f"{checked} constructions", {"seed": ctx.seed},
               failures, time.perf_counter() - t0)


def _suite_colorable_companion(ctx: SuiteContext):
    """L7.3: the level-(k-1, k) colorable companion exists with matching
    face numbers for i-banner complexes and i <= k <= d-1; out-of-range k
    is rejected."""
    pinned = [("cross_polytope(3)", _named("cross_polytope(3)"), 2),
              ("cross_polytope(4)", _named("cross_polytope(4)"), 2),
              ("banner3_sphere(4)", _named("banner3_sphere(4)"), 3)]
    count = ctx.random_count if ctx.random_count is not None else 100
    cases = pinned + banner_corpus(count, ctx.seed + 1)
    failures = []
    t0 = time.perf_counter()
    checked = 0
    for label, cx, i in cases:
        d = cx.dim + 1
        for k in range(i, d):
            try:
                cc = bal.colorable_companion(cx, i, k)
            except bal.SynthesisInvariantError as exc:
                failures.append({"instance": label, "i": i, "k": k,
                                 "contradiction": str(exc)})
                break
            if (cc.complex.n_faces(k - 1) != cx.n_faces(k - 1)
                    or cc.complex.n_faces(k) != cx.n_faces(k)
                    or not bal.validate_coloring(cc)):
                failures.append({"instance": label, "i": i, "k": k})
                break
            checked += 1
        if failures:
            break
    # empty parameter range must be rejected
    t_rej = _named("banner3_sphere(3)")
    try:
        bal.colorable_companion(t_rej, 3, 3)
        failures.append({"instance": "banner3_sphere(3)",
                         "expected": "range rejection"})
    except ValueError:
        pass
    yield _agg("L7.3", f"{checked} constructions", {"seed": ctx.seed},
               failures, time.perf_counter() - t0)


def _suite_turan_bound(ctx: SuiteContext):
    """L7.4: an i-banner complex on n vertices has at most (n over i)_d
    faces of dimension i-1."""
    pinned = [(n, _named(n)) for n in
              ("cross_polytope(3)", "cross_polytope(4)", "banner3_sphere(3)",
               "banner3_sphere(4)", "grid_torus(4,4)")]
    count = ctx.random_count if ctx.random_count is not None else 200
    cases = [(label, cx, max(ban.banner_index(cx), 1)) for label, cx in pinned
             if ban.banner_index(cx) <= cx.dim + 1]
    cases += banner_corpus(count, ctx.seed + 2)
    failures = []
    t0 = time.perf_counter()
    for label, cx, i in cases:
        d = cx.dim + 1
        for ii in range(i, d + 1):
            if not bal.turan_bound_holds(cx, ii):
                failures.append({"instance": label, "i": ii,
                                 "f": cx.n_faces(ii - 1),
                                 "bound": bal.turan_count(cx.n_vertices, ii, d)})
                break
        if failures:
            break
    yield _agg("L7.4", f"{len(cases)} instances", {}, failures,
               time.perf_counter() - t0)


def _suite_h_bound(ctx: SuiteContext):
    """R7.5: doubly-CM complexes of dimension d-1 that are d-banner have
    h_j >= C(d, j)."""
    insts = _instances(ctx, ("cross_polytope(3)", "cross_polytope(4)",
                             "banner3_sphere(3)", "banner3_sphere(4)"))
    for label, cx in insts:
        t0 = time.perf_counter()
        d = cx.dim + 1
        if ban.banner_index(cx) > d:
            yield TheoremReport("R7.5", label, {}, "skip", "not d-banner")
            continue
        hv = cx.h_vector()
        bad = [(j, hv[j], comb(d, j)) for j in range(d + 1) if hv[j] < comb(d, j)]
        yield TheoremReport("R7.5", label, {"h": hv},
                            "pass" if not bad else "fail",
                            None if not bad else {"violations": bad},
                            time.perf_counter() - t0)


def _count_cliques(adj, n, j) -> int:
    return sum(
        1 for c in combinations(range(n), j)
        if all(b in adj[a] for a, b in combinations(c, 2))
    )


def _suite_zykov(ctx: SuiteContext):
    """ZYKOV: the balanced multipartite graph maximizes j-clique counts
    among d-colorable graphs.  Exhaustive over complete multipartite part
    profiles for n <= 8 (cliques are monotone under subgraphs, so complete
    multipartite graphs are the extremal candidates), plus a genuinely
    exhaustive check over all graphs for n <= 5."""
    t0 = time.perf_counter()
    failures = []
    for d in (1, 2, 3):
        for n in range(1, 9):
            for j in range(1, d + 1):
                if bal.turan_count(n, j, d) != bal.max_cliques_over_partitions(n, j, d):
                    failures.append({"n": n, "j": j, "d": d})
    yield _agg("ZYKOV", "profiles n<=8, d<=3", {}, failures,
               time.perf_counter() - t0)

    t0 = time.perf_counter()
    failures = []
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            adj = {v: set() for v in range(n)}
            for t, (a, b) in enumerate(pairs):
                if bits >> t & 1:
                    adj[a].add(b)
                    adj[b].add(a)
            for d in (1, 2, 3):
                cxg = from_facets([[v + 1] for v in range(n)]
                                  + [[a + 1, b + 1] for a, b in pairs
                                     if b in adj[a]])
                if bal.find_coloring(cxg, d) is None:
                    continue
                for j in range(1, d + 1):
                    if _count_cliques(adj, n, j) > bal.turan_count(n, j, d):
                        failures.append({"n": n, "d": d, "j": j, "bits": bits})
        if failures:
            break
    yield _agg("ZYKOV", "all graphs n<=5", {}, failures,
               time.perf_counter() - t0)


def _suite_pascal(ctx: SuiteContext):
    """PASCAL: the multipartite clique-count recursion (split i-cliques by a
    fixed vertex of a largest part) for n <= 40, i <= d <= 6."""
    t0 = time.perf_counter()
    failures = []
    for d in range(1, 7):
        for i in range(1, d + 1):
            for n in range(1, 41):
                if not bal.turan_recursion_holds(n, i, d):
                    failures.append({"n": n, "i": i, "d": d})
    yield _agg("PASCAL", "n<=40, i<=d<=6", {}, failures,
               time.perf_counter() - t0)


SUITES = {
    "L3.2": _suite_banner_monotone,
    "L3.3": _suite_flag_equivalence,
    "L3.4": _suite_link_banner,
    "L3.5": _suite_suspension_shift,
    "L3.6": _suite_missing_face_bound,
    "P4.2": _suite_subdivided_sphere,
    "C4.3": _suite_suspension_family,
    "T5.1": _suite_sphere_skeleton_cm,
    "L5.2": _suite_manifold_vertex_bound,
    "C5.3": _suite_manifold_skeleton_buchsbaum,
    "DUALITY": _suite_duality,
    "EQ1": _suite_link_skeleton_identity,
    "D6.1-chain": _suite_b_chain,
    "T6.2": _suite_skeleton_cm_from_b,
    "L6.4": _suite_link_cm_lift,
    "T7.1": _suite_balanced_companion,
    "L7.3": _suite_colorable_companion,
    "L7.4": _suite_turan_bound,
    "R7.5": _suite_h_bound,
    "ZYKOV": _suite_zykov,
    "PASCAL": _suite_pascal,
}


def run_suite(check: str, ctx: SuiteContext | None = None) -> list[TheoremReport]:
    if check not in SUITES:
        raise KeyError(f"unknown check {check!r}")
    return list(SUITES[check](ctx or SuiteContext()))


def run_all(ctx: SuiteContext | None = None) -> list[TheoremReport]:
    out = []
    for check in SUITES:
        out += run_suite(check, ctx)
    return out
