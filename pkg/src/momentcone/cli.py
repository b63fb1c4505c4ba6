"""Command line interface: ``momentcone kron|horn|check|verify``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .candidates import extremal_edges, subsystem_perm_group
from .polyhedral import DimensionDeficiencyError, dedupe_up_to_perms
from .ressayre import EXACT, PIT_ONLY, KroneckerCone, RessayrePolicy, kronecker_cone, normalized_ray

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DEFICIENT = 3


class UsageError(Exception):
    pass


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {s!r}") from exc


# -- result documents ------------------------------------------------------------


def facet_reps(cone: KroneckerCone):
    group = subsystem_perm_group(cone.dims, 1)
    by_flat = {f.flat: f for f in cone.facets}
    out = []
    for rep, size in dedupe_up_to_perms(by_flat, group):
        out.append((by_flat[rep], size))
    return out


def ray_reps(cone: KroneckerCone):
    group = subsystem_perm_group(cone.dims)
    normalized = [tuple(x for part in normalized_ray(r, cone.dims) for x in part) for r in cone.rays]
    return dedupe_up_to_perms(normalized, group)


def _split(flat, dims):
    out, pos = [], 0
    for d in dims:
        out.append(list(flat[pos:pos + d]))
        pos += d
    return out


def result_document(cone: KroneckerCone, policy: RessayrePolicy, dedupe: bool = False,
                    samples: dict | None = None) -> dict:
    stages = {name: {"total": t, "up_to_perms": u} for name, (t, u) in cone.stages.items()}
    if dedupe:
        facets = [{"H": [list(p) for p in f.parts], "z": f.z, "markers": list(f.markers),
                   "orbit_size": size} for f, size in facet_reps(cone)]
        rays = [{"spectra": [[frac_str(x) for x in part] for part in _split(r, cone.dims)],
                 "orbit_size": size} for r, size in ray_reps(cone)]
    else:
        facets = [{"H": [list(p) for p in f.parts], "z": f.z, "markers": list(f.markers)}
                  for f in cone.facets]
        rays = [{"spectra": [[frac_str(x) for x in part] for part in normalized_ray(r, cone.dims)]}
                for r in cone.rays]
    doc = {
        "dims": list(cone.dims),
        "mode": cone.mode,
        "stages": stages,
        "facets": facets,
        "rays": rays,
        "provenance": {"seed": policy.seed, "trials": policy.trials, "policy": policy.mode,
                       "version": __version__},
    }
    if samples is not None:
        doc["samples"] = samples
    return doc


def serialize(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_document(text: str) -> dict:
    return json.loads(text)


def _fmt_vec(v):
    return "(" + ",".join(frac_str(x) for x in v) + ")"


def print_cone(cone: KroneckerCone, out=None):
    out = out or sys.stdout
    print(f"C{cone.dims}  [{cone.mode}]", file=out)
    for name, (t, u) in cone.stages.items():
        print(f"  {name:<13} {t} ({u})", file=out)
    print("\nFacets (one row per orbit):", file=out)
    print(f"  {'#':>3}  {'H_A':<16} {'H_B':<16} {'H_C':<16} {'z':>3}  remarks", file=out)
    for n, (f, _) in enumerate(facet_reps(cone), start=1):
        parts = [_fmt_vec(p) for p in f.parts] + [""] * (3 - len(f.parts))
        remark = ",".join({"origin": "†", "highest": "★"}[m] for m in f.markers) or "-"
        print(f"  {n:>3}  {parts[0]:<16} {parts[1]:<16} {parts[2]:<16} {f.z:>3}  {remark}", file=out)
    print("\nExtreme rays (one row per orbit):", file=out)
    for n, (r, _) in enumerate(ray_reps(cone), start=1):
        print(f"  {n:>3}  " + "  ".join(_fmt_vec(p) for p in _split(r, cone.dims)), file=out)


# -- commands --------------------------------------------------------------------


def _policy(args) -> RessayrePolicy:
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    if args.seed < 0:
        raise UsageError("--seed must be non-negative")
    return RessayrePolicy(EXACT if args.exact else PIT_ONLY, args.trials, args.seed)


def _sample_report(cone: KroneckerCone, n: int, seed: int) -> dict:
    from .oracle import facet_violations, sample_spectra_array

    a, b, c = cone.dims
    arr = sample_spectra_array(a, b, c, n, seed)
    normals = cone.hrep.inequalities
    import numpy as np

    vals = arr @ np.array(normals, dtype=float).T
    return {"n": n, "violations": facet_violations(arr, normals), "min_value": float(vals.min())}


def cmd_kron(args) -> int:
    dims = (args.a, args.b, args.c)
    if min(dims) < 1:
        raise UsageError("dimensions must be positive")
    policy = _policy(args)
    try:
        cone = kronecker_cone(*dims, policy=policy)
    except DimensionDeficiencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEFICIENT
    samples = _sample_report(cone, args.verify_samples, args.seed) if args.verify_samples else None
    doc = result_document(cone, policy, args.dedupe, samples)
    if not args.quiet:
        print_cone(cone)
        if samples:
            print(f"\nSampling: {samples['n']} states, {samples['violations']} violations")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(serialize(doc))
    return 0


def _parse_subset(text: str):
    text = text.strip().strip("{}")
    try:
        return tuple(sorted(int(x) for x in text.split(",") if x.strip()))
    except ValueError as exc:
        raise UsageError(f"malformed subset {text!r}") from exc


def cmd_horn(args) -> int:
    from .horncone import SubsetTriple, horn_membership, horn_sets

    d = args.d
    if d < 2:
        raise UsageError("d must be at least 2")
    if args.r is not None and not (1 <= args.r < d):
        raise UsageError("need 1 <= r < d")
    if args.contains:
        pieces = args.contains.split(";")
        if len(pieces) != 3:
            raise UsageError("--contains expects three subsets separated by ';'")
        I, J, K = (_parse_subset(p) for p in pieces)
        try:
            t = SubsetTriple(d, I, J, K)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        member = t in horn_sets(d, t.r)
        print("member" if member else "not a member")
        return 0
    if args.point:
        pieces = args.point.split(";")
        if len(pieces) != 3:
            raise UsageError("--point expects x;y;z")
        vecs = [[parse_frac(x) for x in p.split(",")] for p in pieces]
        if any(len(v) != d for v in vecs):
            raise UsageError(f"each spectrum must have {d} entries")
        ok, reason = horn_membership(*vecs)
        print(("inside" if ok else "outside") + f": {reason}")
        return 0
    ranks = [args.r] if args.r is not None else list(range(1, d))
    for r in ranks:
        triples = sorted(horn_sets(d, r), key=lambda t: (t.I, t.J, t.K))
        print(f"Horn({d},{r}): {len(triples)} triples")
        if not args.count_only:
            for t in triples:
                print(f"  {set_str(t.I)} {set_str(t.J)} {set_str(t.K)}")
    return 0


def set_str(s):
    return "{" + ",".join(map(str, s)) + "}"


def _check(label: str, got, want, failures: list) -> None:
    ok = got == want
    print(f"[{'ok' if ok else 'MISMATCH'}] {label}: got {got}, expected {want}")
    if not ok:
        failures.append(label)


def reference_facet_reps():
    """Orbit representatives of the reference facet list as (flat, markers)."""
    from .fixtures import REFERENCE_FACETS_444

    group = subsystem_perm_group((4, 4, 4), 1)
    out = {}
    for ha, hb, hc, z, markers in REFERENCE_FACETS_444:
        flat = tuple(ha) + tuple(hb) + tuple(hc) + (z,)
        rep = dedupe_up_to_perms([flat], group)[0][0]
        out[rep] = tuple(sorted(markers))
    return out


def reference_ray_reps():
    from .fixtures import REFERENCE_RAYS_444

    group = subsystem_perm_group((4, 4, 4))
    out = set()
    for row in REFERENCE_RAYS_444:
        flat = tuple(Fraction(x) for part in row for x in part)
        out.add(dedupe_up_to_perms([flat], group)[0][0])
    return out


def compare_444(cone: KroneckerCone, failures: list) -> None:
    want_f = reference_facet_reps()
    got_f = {f.flat: tuple(sorted(f.markers)) for f, _ in facet_reps(cone)}
    missing = sorted(set(want_f) - set(got_f))
    extra = sorted(set(got_f) - set(want_f))
    for m in missing:
        print(f"  facet missing: {m}")
    for e in extra:
        print(f"  facet not in table: {e}")
    _check("C(4,4,4) facet representatives", len(set(want_f) & set(got_f)), len(want_f), failures)
    bad = [k for k in want_f if k in got_f and want_f[k] != got_f[k]]
    _check("C(4,4,4) facet markers", len(bad), 0, failures)
    want_r = reference_ray_reps()
    got_r = {r for r, _ in ray_reps(cone)}
    for m in sorted(want_r - got_r):
        print(f"  ray missing: {tuple(map(frac_str, m))}")
    for e in sorted(got_r - want_r):
        print(f"  ray not in table: {tuple(map(frac_str, e))}")
    _check("C(4,4,4) ray representatives", len(want_r & got_r) if want_r == got_r else -1, len(want_r),
           failures)


def cmd_check(args) -> int:
    from .fixtures import EDGE_COUNTS, STAGE_COUNTS, STAGE_NAMES

    policy = _policy(args)
    failures: list = []
    for (a, b), want in sorted(EDGE_COUNTS.items()):
        if a > args.max_dim:
            continue
        e = extremal_edges(a, b)
        _check(f"edge counts ({a},{b})", (e.tableaux, e.cubicles, len(e.edges), e.edges_up_to_perms), want, failures)
    for dims, want in sorted(STAGE_COUNTS.items()):
        if dims[0] > args.max_dim:
            continue
        t0 = time.time()
        cone = kronecker_cone(*dims, policy=policy)
        got = tuple(cone.stages[s] for s in STAGE_NAMES)
        _check(f"stage counts {dims} ({time.time() - t0:.1f}s)", got, want, failures)
        if dims == (4, 4, 4):
            compare_444(cone, failures)
    print("all checks passed" if not failures else f"{len(failures)} check(s) failed")
    return EXIT_MISMATCH if failures else 0


def cmd_verify(args) -> int:
    dims = (args.a, args.b, args.c)
    if min(dims) < 1 or args.samples < 1:
        raise UsageError("dimensions and sample count must be positive")
    policy = _policy(args)
    try:
        cone = kronecker_cone(*dims, policy=policy)
    except DimensionDeficiencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEFICIENT
    rep = _sample_report(cone, args.samples, args.seed)
    print(f"C{dims}: {len(cone.facets)} facets, {rep['n']} sampled states, "
          f"{rep['violations']} violations beyond 1e-9 (smallest value {rep['min_value']:.3e})")
    return EXIT_MISMATCH if rep["violations"] else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for the randomized determinant test")
    common.add_argument("--trials", type=int, default=2, help="random evaluations per determinant")
    common.add_argument("--exact", action="store_true",
                        help="confirm zero verdicts symbolically (matrices up to size 12)")

    p = argparse.ArgumentParser(prog="momentcone", description="Moment cones of Kronecker and Horn problems")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kron", parents=[common], help="compute the Kronecker cone C(a,b,c)")
    k.add_argument("-a", type=int, required=True)
    k.add_argument("-b", type=int, required=True)
    k.add_argument("-c", type=int, required=True)
    k.add_argument("--json", metavar="FILE", help="write the result document to FILE")
    k.add_argument("--dedupe", action="store_true", help="list one representative per subsystem orbit")
    k.add_argument("--verify-samples", type=int, default=0, metavar="N",
                   help="check N random states against the facets")
    k.add_argument("--quiet", action="store_true", help="suppress the human-readable tables")
    k.set_defaults(func=cmd_kron)

    h = sub.add_parser("horn", help="list Horn triples or test membership in the Horn cone")
    h.add_argument("-d", type=int, required=True)
    h.add_argument("-r", type=int)
    h.add_argument("--contains", metavar="I;J;K", help='e.g. "{1,3,5};{1,3,5};{1,3,5}"')
    h.add_argument("--point", metavar="x;y;z", help='spectra as comma separated p/q, e.g. "1,0;1,0;-1,-1"')
    h.add_argument("--count-only", action="store_true")
    h.set_defaults(func=cmd_horn)

    c = sub.add_parser("check", parents=[common], help="recompute the reference tables and compare")
    c.add_argument("--max-dim", type=int, default=4, help="skip cases with local dimension above this")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", parents=[common], help="sample random states against computed facets")
    v.add_argument("-a", type=int, required=True)
    v.add_argument("-b", type=int, required=True)
    v.add_argument("-c", type=int, required=True)
    v.add_argument("--samples", type=int, default=10000)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
