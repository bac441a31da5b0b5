"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or infeasible family),
2 usage error.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import classify, clifford, fiducial, geometry
from .basis import check_completeness, check_orthonormal, orbit, schmidt_spectra, schur_weights, weights_uniform
from .linalg import TOL_GEOM, TOL_NORM, DimensionError, num_sites, partial_trace
from .pauli import tetra_group

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FAMILIES = ("ejm", "ejm-theta", "ppi", "rect", "czartowski", "phases")


class UsageError(ValueError):
    pass


class InfeasibleFamily(Exception):
    def __init__(self, certificate):
        super().__init__("no fiducial exists")
        self.certificate = certificate


@dataclass
class RunConfig:
    tol_norm: float = TOL_NORM
    tol_geom: float = TOL_GEOM
    n: int = None
    k: int = None
    max_m: int = 8
    fmt: str = "json"
    out: str = None
    threads: int = 1

    def __post_init__(self):
        if not (self.tol_norm > 0 and self.tol_geom > 0):
            raise UsageError("tolerances must be positive")
        if self.fmt not in ("json", "csv"):
            raise UsageError(f"unknown format {self.fmt!r}")
        if self.threads < 1:
            raise UsageError("thread count must be at least 1")
        if not 2 <= self.max_m <= 12:
            raise UsageError("--max-m must lie in 2..12")


def thread_count(arg):
    if arg is not None:
        return arg
    env = os.environ.get("ORBITBASIS_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"ORBITBASIS_THREADS={env!r} is not an integer")
    return 1


# ---------------------------------------------------------------------------
# serialization


def complex_pairs(v):
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex).ravel()]


def from_pairs(pairs):
    a = np.asarray(pairs, dtype=float)
    return a[..., 0] + 1j * a[..., 1]


def emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def to_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# basis


def _parse_fraction(text, name):
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {name}={text!r}")


def _angle(text, name="theta"):
    try:
        return clifford.parse_angle(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {name}={text!r}: {exc}")


def build_family(args):
    """Return ``(n, d, fiducial_state, phase_info)``; ``phase_info`` may be None."""
    fam = args.family
    if fam == "ejm":
        pv = fiducial.PhaseVector(2, 2, fiducial.EJM_PHASES)
        return 2, 2, fiducial.fiducial_from_phases(pv), pv
    if fam == "ejm-theta":
        radians, turns = _angle(args.theta or "0")
        pv = fiducial.ejm_theta_phases(radians)
        return 2, 2, fiducial.fiducial_from_phases(pv), pv
    if fam == "ppi":
        n = args.n or 3
        sol = fiducial.ppi_solve(n)
        if not sol:
            raise InfeasibleFamily(sol)
        return n, 2, fiducial.ppi_state(sol), None
    if fam == "rect":
        n = args.n or 2
        if n < 2:
            raise UsageError("rect needs --n >= 2")
        return n, 2, fiducial.rect_fiducial(n), None
    if fam == "czartowski":
        d = args.d or 3
        if d != 3:
            raise UsageError("only d=3 has a built-in SIC fiducial")
        q = _parse_fraction(args.q or "1/3", "q")
        try:
            alpha = _angle(args.alpha)[0] if args.alpha else fiducial.czartowski_alpha(d, q)
            state = fiducial.czartowski_fiducial(d, fiducial.hesse_sic(0.0), q, alpha)
        except fiducial.ConstraintError as exc:
            raise UsageError(str(exc))
        return 2, d, state, None
    if fam == "phases":
        if args.poly:
            if not (args.n and args.m):
                raise UsageError("--poly needs --n and --m")
            try:
                f = clifford.PhasePolynomial.parse(args.poly, args.n, args.m)
            except ValueError as exc:
                raise UsageError(str(exc))
            pv = clifford.phase_vector_from_polynomial(f)
            return f.n, 2, fiducial.fiducial_from_phases(pv), pv
        if not args.phases:
            raise UsageError("phases family needs --phases or --poly")
        d = args.d or 2
        alphas = [_angle(t, "phase")[0] for t in args.phases.split(",")]
        try:
            n = num_sites(len(alphas), d)
        except (ValueError, DimensionError):
            raise UsageError(f"{len(alphas)} phases do not match d={d}")
        pv = fiducial.PhaseVector(n, d, alphas)
        return n, d, fiducial.fiducial_from_phases(pv), pv
    raise UsageError(f"unknown family {fam!r}")


def basis_report(n, d, state, pv=None, tol_norm=TOL_NORM, tol_geom=TOL_GEOM, meta=None):
    """Everything the CLI writes about an orbit basis, as plain JSON data."""
    gd = tetra_group(n, d)
    ob = orbit(gd, state)
    ortho = check_orthonormal(ob, tol_norm)
    comp = check_completeness(gd, state, tol_norm)
    weights = schur_weights(state, n=n, d=d)
    spectra = schmidt_spectra(ob)
    iso = float(np.max(np.abs(spectra - spectra[0])))
    report = {
        **(meta or {}),
        "n": n,
        "d": d,
        "labels": [list(g) for g in ob.labels],
        "fiducial": complex_pairs(state),
        "states": [complex_pairs(s) for s in ob.states],
        "orthonormality": {"max_offdiag": ortho.max_offdiag, "max_norm_err": ortho.max_norm_err, "passed": ortho.passed},
        "completeness": {"max_dev_from_identity": comp.max_dev_from_identity, "passed": comp.passed},
        "schur_weights": [float(w) for w in weights],
        "schur_uniform": weights_uniform(weights, tol_norm),
        "isoentanglement_spread": iso,
    }
    if pv is not None:
        report["phases"] = [float(a) for a in pv.alphas]
        if d == 2:
            try:
                turns = [clifford.dyadic_turns(a) for a in pv.alphas]
                report["phases_exact"] = [clifford.format_turns(t) for t in turns]
                report["level"] = clifford.level_of_measurement(pv)
            except clifford.NotRepresentableError:
                pass
    if d == 2:
        geo = geometry.geometry_report(ob, tol_geom)
        report["geometry"] = [
            {
                "class": s.cls.value,
                "representative": [float(x) for x in s.representative],
                "circumradius": s.circumradius,
                "edge_lengths": list(s.edge_lengths),
                "volume": float(s.volume),
                "orientation": s.orientation,
            }
            for s in geo.per_site
        ]
    else:
        marg = [geometry_free_marginals(s, n, d) for s in ob.states]
        report["marginal_distances"] = pairwise_spread(marg)
    report["passed"] = bool(ortho.passed and comp.passed)
    return report


def geometry_free_marginals(state, n, d):
    return np.concatenate([partial_trace(state, i, d).ravel() for i in range(n)])


def pairwise_spread(marginals):
    """Min and max Hilbert-Schmidt distance between marginals of distinct states."""
    m = np.asarray(marginals)
    dist = [np.linalg.norm(m[i] - m[j]) for i in range(len(m)) for j in range(i + 1, len(m))]
    return {"min": float(min(dist)), "max": float(max(dist))}


def verify_report(data, tol_norm=TOL_NORM, tol_geom=TOL_GEOM):
    """Re-check a loaded basis file; returns a fresh report from its fiducial and states."""
    n, d = int(data["n"]), int(data["d"])
    state = from_pairs(data["fiducial"])
    pv = fiducial.PhaseVector(n, d, data["phases"]) if "phases" in data else None
    fresh = basis_report(n, d, state, pv, tol_norm, tol_geom, {k: data[k] for k in ("family", "params") if k in data})
    stored = from_pairs(data["states"])
    fresh["stored_states_match"] = bool(np.max(np.abs(stored - from_pairs(fresh["states"]))) <= tol_norm)
    fresh["passed"] = fresh["passed"] and fresh["stored_states_match"]
    return fresh


def basis_csv(report):
    rows = []
    for lab, st in zip(report["labels"], report["states"]):
        for j, (re, im) in enumerate(st):
            rows.append(["".join(map(str, lab)), j, repr(re), repr(im)])
    return to_csv(["label", "component", "re", "im"], rows)


def render_basis(report, fmt):
    return json.dumps(report, indent=1) + "\n" if fmt == "json" else basis_csv(report)


def summarize(report):
    o = report["orthonormality"]
    lines = [
        f"orthonormality: max offdiag {o['max_offdiag']:.3e}, max norm err {o['max_norm_err']:.3e}",
        f"completeness: max deviation {report['completeness']['max_dev_from_identity']:.3e}",
    ]
    for i, g in enumerate(report.get("geometry", [])):
        lines.append(f"site {i + 1}: {g['class']} circumradius {g['circumradius']:.12f}")
    if "marginal_distances" in report:
        md = report["marginal_distances"]
        lines.append(f"marginal distances: min {md['min']:.12f} max {md['max']:.12f}")
    if "level" in report:
        lines.append(f"Clifford level of D_alpha: {report['level']}")
    lines.append("PASS" if report["passed"] else "FAIL")
    return "\n".join(lines) + "\n"


def cmd_basis(args, cfg: RunConfig):
    if args.action == "verify":
        if not args.file:
            raise UsageError("basis verify needs a basis file")
        try:
            with open(args.file, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read {args.file}: {exc}")
        report = verify_report(data, cfg.tol_norm, cfg.tol_geom)
        if cfg.out:
            emit(render_basis(report, cfg.fmt), cfg.out)
        sys.stderr.write(summarize(report))
        return EXIT_OK if report["passed"] else EXIT_FAIL

    if not args.family:
        raise UsageError("basis build needs --family")
    try:
        n, d, state, pv = build_family(args)
    except InfeasibleFamily as exc:
        cert = exc.certificate
        sys.stderr.write(
            f"no PPI fiducial for n={cert.n}: the middle weight a_{cert.n // 2}^2 must equal "
            f"{cert.middle_from_diagonal} and {cert.middle_from_flip} at once\n"
        )
        return EXIT_FAIL
    params = {k: v for k, v in vars(args).items() if k in ("n", "d", "theta", "q", "alpha", "phases", "poly", "m") and v is not None}
    report = basis_report(n, d, state, pv, cfg.tol_norm, cfg.tol_geom, {"family": args.family, "params": params})
    text = render_basis(report, cfg.fmt)
    emit(text, cfg.out)
    if args.verify and cfg.fmt == "json":
        again = verify_report(json.loads(text), cfg.tol_norm, cfg.tol_geom)
        report["passed"] = report["passed"] and again["passed"]
    sys.stderr.write(summarize(report))
    return EXIT_OK if report["passed"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# census and fig3

CENSUS_HEADER = ["m", "polynomial", "level", "fiducial", "bloch", "geometry"]


def census_rows(entries):
    rows = []
    for e in entries:
        rows.append(
            [
                e.m,
                str(e.polynomial),
                e.level,
                json.dumps(complex_pairs(np.round(e.fiducial, 15) + 0.0)),
                json.dumps([[round(float(x), 15) + 0.0 for x in r] for r in e.bloch_representatives()]),
                "|".join(c.value for c in e.report.classes),
            ]
        )
    return rows


def cmd_census(args, cfg: RunConfig):
    try:
        entries = classify.census(cfg.n, cfg.k, workers=cfg.threads, include_product=True)
    except classify.EnvelopeError as exc:
        raise UsageError(str(exc))
    entangled = [e for e in entries if not e.is_product]
    if not entangled:
        sys.stderr.write(f"level {cfg.k}: only product (fully separable) bases\n")
        shown = entries
    else:
        shown = entangled
    rows = census_rows(shown)
    if cfg.fmt == "csv":
        text = to_csv(CENSUS_HEADER, rows)
    else:
        text = json.dumps([dict(zip(CENSUS_HEADER, r)) for r in rows], indent=1) + "\n"
    emit(text, cfg.out)
    sys.stderr.write(f"{len(shown)} geometry classes\n")
    return EXIT_OK


def cmd_fig3(args, cfg: RunConfig):
    rows = [[theta / np.pi, k] for theta, k in classify.fig3_data(cfg.max_m)]
    if cfg.fmt == "csv":
        text = to_csv(["theta_over_pi", "k"], [[repr(t), k] for t, k in rows])
    else:
        text = json.dumps([{"theta_over_pi": t, "k": k} for t, k in rows]) + "\n"
    emit(text, cfg.out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="orbitbasis", description="Tetrahedral orbit bases: build, verify, census.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--tol-norm", type=float, default=TOL_NORM)
    common.add_argument("--tol-geom", type=float, default=TOL_GEOM)
    common.add_argument("--threads", type=int, help="worker processes (env ORBITBASIS_THREADS)")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", parents=[common], help="build or verify an orbit basis")
    b.add_argument("action", choices=("build", "verify"))
    b.add_argument("file", nargs="?", help="basis JSON file (verify)")
    b.add_argument("--family", choices=FAMILIES)
    b.add_argument("--n", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--m", type=int, help="precision for --poly")
    b.add_argument("--theta", help='angle, e.g. "0", "pi/4", "3/16*2pi"')
    b.add_argument("--q", help='Czartowski q, e.g. "1/3"')
    b.add_argument("--alpha", help="Czartowski phase (default from the cos relation)")
    b.add_argument("--phases", help="comma-separated phases in label order")
    b.add_argument("--poly", help='phase polynomial, e.g. "z1 z2"')
    b.add_argument("--verify", action="store_true", help="reload the written JSON and re-verify")

    c = sub.add_parser("census", parents=[common], help="level-k geometry census")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)

    f = sub.add_parser("fig3", parents=[common], help="EJM-family level staircase data")
    f.add_argument("--max-m", type=int, default=8)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        cfg = RunConfig(
            tol_norm=args.tol_norm,
            tol_geom=args.tol_geom,
            n=getattr(args, "n", None),
            k=getattr(args, "k", None),
            max_m=getattr(args, "max_m", 8),
            fmt=args.fmt,
            out=args.out,
            threads=thread_count(args.threads),
        )
        handler = {"basis": cmd_basis, "census": cmd_census, "fig3": cmd_fig3}[args.command]
        return handler(args, cfg)
    except UsageError as exc:
        sys.stderr.write(f"orbitbasis: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
