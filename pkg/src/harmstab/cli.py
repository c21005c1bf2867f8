"""Command-line driver: verification suites, stabilizer tables, and
dimension reports, with deterministic machine-readable output.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 bad
usage.  The environment variable SHUFFLE_STAB_THREADS caps the number
of worker threads used for per-degree computations (default 1); report
assembly is ordered by degree regardless of execution order.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from random import Random
from typing import Callable, Dict, List, Tuple

from .coproducts import (
    delta_seq,
    delta_seq_direct,
    delta_w,
    primitive_defect,
    primitives_basis,
)
from .decomposition import (
    bound_N,
    in_im_j,
    map_H,
    map_h,
    map_h_eval,
    map_j,
    stabilization_report,
    verify_decomposition,
)
from .derivations import (
    der_m10,
    der_v1,
    der_v10,
    der_w1,
    ihara_bracket,
    theta,
)
from .freealg import (
    E0,
    E1,
    NCPoly,
    all_words,
    bracket,
    is_lie_element,
    lyndon_basis,
    witt_dimension,
)
from .sampling import (
    random_cert,
    random_htriple,
    random_lie_element,
    random_word_poly,
    random_wpoly,
)
from .stabilizers import stab_m_lie, stab_report_json, stab_w_lie
from .walg import (
    MElem,
    Tensor2,
    WPoly,
    sigma,
    to_m,
    w_from_v,
    w_to_v,
    ytilde,
)

Check = Tuple[str, str, bool]  # (claim id, inputs summary, passed)


def _max_workers() -> int:
    raw = os.environ.get("SHUFFLE_STAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def _map_degrees(fn: Callable[[int], dict], degrees: List[int]) -> List[dict]:
    workers = _max_workers()
    if workers == 1 or len(degrees) <= 1:
        return [fn(d) for d in degrees]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, degrees))


# -- verification suites ----------------------------------------------


def _suite_bracket(max_degree: int, n_window: int, seed: int) -> List[Check]:
    rng = Random(seed)
    checks: List[Check] = []
    checks.append(
        ("ihara-e0-e1-zero", "v=e0 v'=e1", ihara_bracket(E0, E1).is_zero())
    )
    ok = True
    for _ in range(20):
        d1 = rng.randint(1, 4)
        d2 = rng.randint(1, 4)
        x = random_word_poly(rng, d1)
        y = random_word_poly(rng, d2)
        if ihara_bracket(x, y) + ihara_bracket(y, x) != NCPoly.zero():
            ok = False
    checks.append(("ihara-antisymmetry", "20 random pairs deg<=4", ok))
    ok = True
    for _ in range(20):
        ds = [rng.randint(1, 3) for _ in range(3)]
        if sum(ds) > 9:
            continue
        x, y, z = (random_word_poly(rng, d) for d in ds)
        j = (
            ihara_bracket(x, ihara_bracket(y, z))
            + ihara_bracket(y, ihara_bracket(z, x))
            + ihara_bracket(z, ihara_bracket(x, y))
        )
        if not j.is_zero():
            ok = False
    checks.append(("ihara-jacobi", "20 random triples total deg<=9", ok))
    ok = True
    cap = min(max_degree, 6)
    for d1 in range(1, cap):
        for d2 in range(1, cap + 1 - d1):
            for a in lyndon_basis(d1):
                for b in lyndon_basis(d2):
                    br = ihara_bracket(a.poly, b.poly)
                    if not (br.is_zero() or is_lie_element(br)):
                        ok = False
    checks.append(("ihara-lie-closure", f"lyndon pairs total deg<={cap}", ok))
    return checks


def _suite_theta(max_degree: int, n_window: int, seed: int) -> List[Check]:
    rng = Random(seed)
    checks: List[Check] = []
    checks.append(("theta-e0-zero", "x=e0", theta(E0).is_zero()))
    checks.append(("theta-e1-double", "x=e1", theta(E1) == E1.scale(2)))
    expected = bracket(E0, E1) + (E1 * E1).scale(Fraction(1, 2))
    checks.append(("theta-bracket-value", "x=[e0,e1]", theta(bracket(E0, E1)) == expected))
    ok = True
    for _ in range(25):
        d1 = rng.randint(1, 4)
        d2 = rng.randint(1, min(4, 9 - d1))
        x = random_lie_element(rng, d1)
        y = random_lie_element(rng, d2)
        if theta(ihara_bracket(x, y)) != ihara_bracket(theta(x), theta(y)):
            ok = False
    checks.append(("theta-lie-morphism", "25 random lie pairs total deg<=9", ok))
    return checks


def _coassoc_defect(t_of: Callable[[WPoly], Tensor2], n: int) -> bool:
    # (delta (x) id - id (x) delta) applied to delta(y[n]), over triple keys
    left: Dict[tuple, object] = {}
    for (u, v), x in delta_w(ytilde(n)).items():
        for (p, q), y in delta_w(WPoly({u: 1})).items():
            k = (p, q, v)
            left[k] = left.get(k, 0) + x * y
        for (p, q), y in delta_w(WPoly({v: 1})).items():
            k = (u, p, q)
            left[k] = left.get(k, 0) - x * y
    return all(not c for c in left.values())


def _suite_coproducts(max_degree: int, n_window: int, seed: int) -> List[Check]:
    rng = Random(seed)
    checks: List[Check] = []
    cap = min(max_degree, 8)
    ok = all(delta_seq(n) == delta_seq_direct(n) for n in range(1, cap + 1))
    checks.append(("coproduct-generator-values", f"n<={cap}", ok))
    ok = all(_coassoc_defect(delta_w, n) for n in range(1, cap + 1))
    checks.append(("coproduct-coassociative", f"generators n<={cap}", ok))
    ok = True
    for _ in range(15):
        a = random_wpoly(rng, cap)
        if sigma(delta_w(a)) != delta_w(a):
            ok = False
        counit = WPoly()
        for (u, v), x in delta_w(a).items():
            if not u:
                counit = counit + WPoly({v: x})
        if counit != a:
            ok = False
    checks.append(("coproduct-cocommutative-counit", "15 random wpolys", ok))
    ok = True
    for d in range(1, min(max_degree, 5) + 1):
        pb = primitives_basis(d)
        for m in pb.basis:
            if not primitive_defect(m).is_zero():
                ok = False
    checks.append(("primitive-kernel", f"degrees 1..{min(max_degree, 5)}", ok))
    want = MElem({(2,): 2, (1, 1): 1})
    pb2 = primitives_basis(2)
    ok = pb2.dim == 1 and pb2.basis[0] == want
    checks.append(("primitive-degree-2", "2*y2 + y1^2", ok))
    return checks


def _suite_derivations(max_degree: int, n_window: int, seed: int) -> List[Check]:
    rng = Random(seed)
    checks: List[Check] = []
    checks.append(
        ("derivation-generator-rule", "der_{e1}(e0)", der_v1(E1, E0) == bracket(E1, E0))
    )
    y1 = ytilde(1)
    ok = all(
        der_w1(E1, ytilde(n)) == y1 * ytilde(n) - ytilde(n) * y1
        for n in range(1, n_window + 1)
    )
    checks.append(("derivation-w-generator-images", f"v=e1 n<={n_window}", ok))
    checks.append(("derivation-v10-unit", "der^(10)_v(1)=v", der_v10(E0 * E1, NCPoly.one()) == E0 * E1))
    ok = True
    for _ in range(15):
        v = random_word_poly(rng, rng.randint(1, 3))
        a = random_wpoly(rng, 4)
        if der_w1(v, a) != w_from_v(der_v1(v, w_to_v(a))):
            ok = False
    checks.append(("derivation-w-matches-v", "15 random (v,a)", ok))
    ok = True
    for _ in range(15):
        v = random_word_poly(rng, rng.randint(1, 3))
        vp = random_word_poly(rng, rng.randint(1, 3))
        a = random_word_poly(rng, rng.randint(1, 3))
        lhs = der_v1(ihara_bracket(v, vp), a)
        rhs = der_v1(v, der_v1(vp, a)) - der_v1(vp, der_v1(v, a))
        if lhs != rhs:
            ok = False
    checks.append(("derivation-commutator-v1", "15 random triples", ok))
    ok = True
    for _ in range(10):
        v = random_word_poly(rng, rng.randint(1, 3))
        vp = random_word_poly(rng, rng.randint(1, 3))
        m = to_m(random_word_poly(rng, rng.randint(1, 3)))
        lhs = der_m10(ihara_bracket(v, vp), m)
        rhs = der_m10(v, der_m10(vp, m)) - der_m10(vp, der_m10(v, m))
        if lhs != rhs:
            ok = False
    checks.append(("derivation-commutator-m10", "10 random triples", ok))
    return checks


def _suite_decomposition(max_degree: int, n_window: int, seed: int) -> List[Check]:
    cap = min(max_degree, 8)
    ok = True
    count = 0
    for d in range(1, cap + 1):
        for w in all_words(d):
            count += 1
            if not verify_decomposition(NCPoly.from_word(w), n_window):
                ok = False
    return [("decomposition-identity", f"{count} basis words deg<={cap} n<={n_window}", ok)]


def _suite_kerh(max_degree: int, n_window: int, seed: int) -> List[Check]:
    rng = Random(seed)
    checks: List[Check] = []
    ok = True
    for _ in range(60):
        t = random_htriple(rng, min(max_degree, 6))
        member, _ = in_im_j(t)
        window = 2 * bound_N(t) + 4
        vanishes = all(map_h_eval(t, n).is_zero() for n in range(1, window + 1))
        if member != vanishes:
            ok = False
    checks.append(("kernel-image-exactness", "60 random triples", ok))
    ok = True
    for _ in range(30):
        c = random_cert(rng)
        s = map_h(map_j(c))
        if any(not s(n).is_zero() for n in range(1, 13)):
            ok = False
    checks.append(("h-after-j-zero", "30 random certificates n<=12", ok))
    ok = True
    for _ in range(20):
        t = random_htriple(rng, min(max_degree, 5))
        if not stabilization_report(t, k_max=4)["ok"]:
            ok = False
    checks.append(("stabilization-limits", "20 random triples k<=4", ok))
    return checks


def _suite_square(max_degree: int, n_window: int, seed: int) -> List[Check]:
    rng = Random(seed)
    checks: List[Check] = []
    cap = min(max_degree, 8)
    ok = True
    for d in range(1, cap + 1):
        for w in all_words(d):
            v = NCPoly.from_word(w)
            a0 = map_H(v).a.get(0, Tensor2())
            if a0 != primitive_defect(to_m(v)):
                ok = False
    checks.append(("square-slot-zero", f"basis words deg<={cap}", ok))
    ok = True
    for _ in range(40):
        c = random_cert(rng)
        a0 = map_j(c).a.get(0, Tensor2())
        if a0 != Tensor2.one().scale(c.get(0, Fraction(0))):
            ok = False
    checks.append(("triangle-slot-zero", "40 random certificates", ok))
    return checks


def _suite_stab(max_degree: int, n_window: int, seed: int) -> List[Check]:
    reports = _map_degrees(stab_report_json, list(range(1, max_degree + 1)))
    checks: List[Check] = []
    for rep in reports:
        d = rep["degree"]
        summary = f"d={d} dims=({rep['dim_stab_w']},{rep['dim_stab_m']})"
        checks.append((f"stab-table-d{d}", summary, rep["equal"] and rep["inclusion_aux"]))
    return checks


def _suite_main(max_degree: int, n_window: int, seed: int) -> List[Check]:
    from .stabilizers import verify_main_equality

    reports = _map_degrees(verify_main_equality, list(range(1, max_degree + 1)))
    checks: List[Check] = []
    for rep in reports:
        d = rep["degree"]
        summary = f"d={d} dims=({rep['dim_stab_w']},{rep['dim_stab_m']})"
        checks.append(
            (f"main-equality-d{d}", summary, rep["equal"] and rep["inclusion_m_in_w"])
        )
    return checks


SUITES: Dict[str, Callable[[int, int, int], List[Check]]] = {
    "bracket": _suite_bracket,
    "theta": _suite_theta,
    "coproducts": _suite_coproducts,
    "derivations": _suite_derivations,
    "decomposition": _suite_decomposition,
    "kerh": _suite_kerh,
    "square": _suite_square,
    "stab": _suite_stab,
    "main": _suite_main,
}


# -- report rendering -------------------------------------------------


def _render_checks(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["check", "inputs", "pass"])
        for c in report["checks"]:
            writer.writerow([c["check"], c["inputs"], str(c["pass"]).lower()])
        return
    for c in report["checks"]:
        status = "PASS" if c["pass"] else "FAIL"
        out.write(f"{status} {c['check']} ({c['inputs']})\n")
    out.write("ok\n" if report["ok"] else "FAILED\n")


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    checks = suite(args.max_degree, args.n_window, args.seed)
    report = {
        "suite": args.suite,
        "max_degree": args.max_degree,
        "seed": args.seed,
        "checks": [
            {"check": name, "inputs": inputs, "pass": passed}
            for name, inputs, passed in checks
        ],
        "ok": all(passed for _, _, passed in checks),
    }
    _render_checks(report, args.format, sys.stdout)
    return 0 if report["ok"] else 1


def cmd_stab(args) -> int:
    space = stab_w_lie(args.degree) if args.coproduct == "W" else stab_m_lie(args.degree)
    report = space.to_json()
    report["coproduct"] = args.coproduct
    if args.format == "json":
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["degree", "coproduct", "ambient_dim", "dim"])
        writer.writerow([args.degree, args.coproduct, report["ambient_dim"], report["dim"]])
    else:
        sys.stdout.write(
            f"stab {args.coproduct} degree {args.degree}: "
            f"dim {report['dim']} of {report['ambient_dim']}\n"
        )
        for vec in report["basis"]:
            sys.stdout.write(f"  {vec}\n")
    return 0


def cmd_dims(args) -> int:
    def one(d: int) -> dict:
        sw = stab_w_lie(d)
        sm = stab_m_lie(d)
        return {
            "degree": d,
            "dim_lie": witt_dimension(d),
            "dim_stab_w": sw.dim,
            "dim_stab_m": sm.dim,
            "equal": list(sw.vectors) == list(sm.vectors),
        }

    rows = _map_degrees(one, list(range(1, args.max_degree + 1)))
    if args.format == "json":
        json.dump({"rows": rows}, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["degree", "dim_lie", "dim_stab_w", "dim_stab_m", "equal"])
        for r in rows:
            writer.writerow(
                [r["degree"], r["dim_lie"], r["dim_stab_w"], r["dim_stab_m"], str(r["equal"]).lower()]
            )
    else:
        for r in rows:
            sys.stdout.write(
                f"d={r['degree']} lie={r['dim_lie']} "
                f"stab_w={r['dim_stab_w']} stab_m={r['dim_stab_m']} equal={r['equal']}\n"
            )
    return 0 if all(r["equal"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmstab",
        description="Exact verification of harmonic-coproduct stabilizer identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    p_verify.add_argument("--max-degree", type=int, default=None)
    p_verify.add_argument("--n-window", type=int, default=6)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=["json", "csv", "text"], default="text")

    p_stab = sub.add_parser("stab", help="stabilizer subspace in one degree")
    p_stab.add_argument("--coproduct", required=True, choices=["W", "M"])
    p_stab.add_argument("--degree", type=int, required=True)
    p_stab.add_argument("--format", choices=["json", "csv", "text"], default="json")

    p_dims = sub.add_parser("dims", help="dimension table per degree")
    p_dims.add_argument("--max-degree", type=int, required=True)
    p_dims.add_argument("--format", choices=["json", "csv", "text"], default="csv")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.max_degree is None:
            args.max_degree = 10 if args.suite in ("stab", "main") else 8
        if args.max_degree < 1 or args.n_window < 1:
            parser.error("--max-degree and --n-window must be >= 1")
        return cmd_verify(args)
    if args.command == "stab":
        if args.degree < 1:
            parser.error("--degree must be >= 1")
        return cmd_stab(args)
    if args.max_degree < 1:
        parser.error("--max-degree must be >= 1")
    return cmd_dims(args)


if __name__ == "__main__":
    sys.exit(main())
