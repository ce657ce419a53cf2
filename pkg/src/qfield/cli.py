"""Command-line front end.

Every subcommand emits a CSV table (header always present, floats at 17
significant digits, complex values as re/im column pairs) so runs are
byte-reproducible and suitable for golden-file testing.  Exit codes:
0 success, 1 computation error (typed error on stderr), 2 usage error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

import numpy as np

from . import dirac, fock, propagator, scattering, wick
from .errors import QFieldError
from .qcore import basic_number, q_occupancy

DEFAULT_GOLDEN_DIR = "golden"


def fmt(x) -> str:
    return "%.17g" % float(x)


def parse_ops(text: str):
    """Parse operator tokens like 'a0,a0+' or 'a+ b1' into LadderOps."""
    ops = []
    for tok in text.replace(",", " ").split():
        dagger = tok.endswith("+")
        body = tok[:-1] if dagger else tok
        if not body or body[0] not in "ab":
            raise ValueError(f"bad operator token {tok!r}")
        mode = int(body[1:]) if len(body) > 1 else 0
        species = fock.PARTICLE if body[0] == "a" else fock.ANTIPARTICLE
        kind = fock.CREATE if dagger else fock.ANNIHILATE
        ops.append(fock.LadderOp(kind, fock.ModeLabel(species, mode)))
    return tuple(ops)


def ops_repr(ops) -> str:
    return " ".join(repr(op) for op in ops)


def parse_vec3(text: str) -> np.ndarray:
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"need 3 components, got {text!r}")
    return np.array(parts)


def parse_grid(text: str):
    lo, hi, n = text.split(":")
    return np.linspace(float(lo), float(hi), int(n))


# ---------------------------------------------------------------- commands

def cmd_qnum(args):
    header = ["q", "n", "basic_number"]
    rows = [[fmt(args.q), str(args.n), fmt(basic_number(args.q, args.n))]]
    return header, rows


def cmd_planck(args):
    header = ["x", "q", "occupancy"]
    rows = [[fmt(args.x), fmt(args.q), fmt(q_occupancy(args.x, args.q))]]
    return header, rows


def cmd_fock_vev(args):
    ops = parse_ops(args.ops)
    val = fock.vev(ops, args.q, args.n_max)
    header = ["ops", "q", "vev_re", "vev_im"]
    rows = [[ops_repr(ops), fmt(args.q), fmt(val.real), fmt(val.imag)]]
    return header, rows


def cmd_wick_normal(args):
    ops = parse_ops(args.ops)
    nf = wick.normal_order(ops, args.q)
    header = ["term", "coeff_re", "coeff_im", "q_power"]
    rows = []
    for term in sorted(nf.terms, key=lambda t: (len(t), repr(t))):
        poly = nf.terms[term]
        c = poly(args.q)
        p = poly.pure_power()
        rows.append([ops_repr(term) or "1", fmt(c.real), fmt(c.imag),
                     "" if p is None else str(p)])
    return header, rows


def cmd_wick_expand(args):
    ops = parse_ops(args.ops)
    diagrams = wick.wick_expand(ops, args.q)
    header = ["pairs", "unpaired", "crossings", "coeff_re", "coeff_im"]
    rows = []
    for d in diagrams:
        rows.append(["|".join(f"{i}-{j}" for i, j in d.pairs) or "-",
                     "|".join(str(i) for i in d.unpaired) or "-",
                     str(d.crossings),
                     fmt(complex(d.coefficient).real),
                     fmt(complex(d.coefficient).imag)])
    return header, rows


def cmd_wick_verify(args):
    max_diff = 0.0
    count = 0
    for length in range(1, args.max_len + 1):
        for bits in range(2 ** length):
            ops = tuple(fock.a_dag(0) if (bits >> i) & 1 else fock.a(0)
                        for i in range(length))
            rep = wick.verify_wick(ops, args.q)
            max_diff = max(max_diff, rep.abs_diff)
            count += 1
    header = ["q", "max_len", "strings", "max_abs_diff", "passed"]
    rows = [[fmt(args.q), str(args.max_len), str(count), fmt(max_diff),
             str(max_diff <= 1e-9).lower()]]
    return header, rows


def cmd_dirac_check(args):
    checks = []
    anti_err = 0.0
    for mu in range(4):
        for nu in range(4):
            acomm = dirac.gamma(mu) @ dirac.gamma(nu) + dirac.gamma(nu) @ dirac.gamma(mu)
            anti_err = max(anti_err, float(np.max(np.abs(
                acomm - 2 * dirac.METRIC[mu, nu] * np.eye(4)))))
    checks.append(("gamma_anticommutators", anti_err, 1e-14))

    rng = np.random.default_rng(12345)
    m = 1.0
    comp_err = pol_err = conj_err = 0.0
    for _ in range(20):
        p = dirac.onshell_momentum(rng.uniform(-3, 3, 3), m)
        comp_err = max(comp_err, float(np.max(np.abs(
            dirac.spin_sum(p, m, "u") - dirac.theta_projector(p, +1, m)))))
        pol_err = max(pol_err, float(np.max(np.abs(
            dirac.polarization_sum(p, m)
            - dirac.polarization_sum_closed_form(p, m)))))
        u = dirac.u_spinor(p, 1, m)
        v = dirac.charge_conjugate_spinor(u)
        conj_err = max(conj_err, float(np.max(np.abs(
            (dirac.slash(p) + m * np.eye(4)) @ v.components))))
    checks.append(("spin_sum_completeness", comp_err, 1e-12))
    checks.append(("polarization_sum_closed_form", pol_err, 1e-12))
    checks.append(("charge_conjugation_dirac_eq", conj_err, 1e-10))

    header = ["check", "max_error", "tolerance", "passed"]
    rows = [[name, fmt(err), fmt(tol), str(err <= tol).lower()]
            for name, err, tol in checks]
    return header, rows


def _propagator_rows(args, kind: str):
    kvec = parse_vec3(args.kvec)
    k0_values = parse_grid(args.k0_grid) if getattr(args, "k0_grid", None) \
        else [args.k0]
    header = ["q", "m", "k0", "kx", "ky", "kz"]
    if kind == "scalar":
        header += ["value_re", "value_im", "onshell_distance"]
    else:
        header += ["component", "value_re", "value_im", "onshell_distance"]
    rows = []
    for k0 in k0_values:
        k = np.array([k0, *kvec])
        if kind == "scalar":
            pv = propagator.scalar_propagator_momentum(k, args.m, args.q)
            rows.append([fmt(args.q), fmt(args.m), fmt(k0), *map(fmt, kvec),
                         fmt(pv.value.real), fmt(pv.value.imag),
                         fmt(pv.onshell_distance)])
        else:
            fn = (propagator.spinor_propagator_momentum if kind == "spinor"
                  else propagator.photon_propagator_momentum)
            pv = fn(k, args.m, args.q)
            for i in range(4):
                for j in range(4):
                    rows.append([fmt(args.q), fmt(args.m), fmt(k0),
                                 *map(fmt, kvec), f"{i}{j}",
                                 fmt(pv.value[i, j].real),
                                 fmt(pv.value[i, j].imag),
                                 fmt(pv.onshell_distance)])
    return header, rows


def cmd_propagator_residues(args):
    kvec = parse_vec3(args.kvec)
    rp, rm = propagator.pole_residues(kvec, args.m, args.q)
    w = propagator.omega(kvec, args.m)
    header = ["q", "m", "omega", "residue_plus", "residue_minus"]
    rows = [[fmt(args.q), fmt(args.m), fmt(w), fmt(rp), fmt(rm)]]
    return header, rows


def cmd_propagator_position(args):
    pv = propagator.causal_position(args.t, args.r, args.m, args.q)
    header = ["q", "m", "t", "r", "value_re", "value_im", "quad_error"]
    rows = [[fmt(args.q), fmt(args.m), fmt(args.t), fmt(args.r),
             fmt(pv.value.real), fmt(pv.value.imag), fmt(pv.quad_error)]]
    return header, rows


def cmd_propagator_spacelike(args):
    r_values = parse_grid(args.r_grid) if args.r_grid else [args.r]
    header = ["q", "m", "r", "value", "quad_error"]
    rows = []
    for r in r_values:
        pv = propagator.spacelike_q_commutator(r, args.m, args.q)
        rows.append([fmt(args.q), fmt(args.m), fmt(r), fmt(pv.value),
                     fmt(pv.quad_error)])
    return header, rows


def cmd_scatter_moller(args):
    kin = scattering.cm_elastic_kinematics(args.energy, args.theta, args.m)
    if args.beta:
        kin = kin.boosted(scattering.Boost(parse_vec3(args.beta)))
    spins = tuple(int(s) for s in args.spins.split(","))
    amp = scattering.moller_amplitude(kin, spins, args.q,
                                      args.strict_paper_mode)
    header = ["q", "m", "energy", "theta", "spins", "amp_re", "amp_im"]
    rows = [[fmt(args.q), fmt(args.m), fmt(args.energy), fmt(args.theta),
             args.spins, fmt(amp.real), fmt(amp.imag)]]
    return header, rows


def cmd_scatter_annihilate(args):
    kin = scattering.cm_annihilation_kinematics(args.energy, args.theta, args.m)
    if args.beta:
        kin = kin.boosted(scattering.Boost(parse_vec3(args.beta)))
    f1, f2 = scattering.annihilation_correction_pair(kin, args.q)
    header = ["q", "m", "energy", "theta", "F1", "F2"]
    rows = [[fmt(args.q), fmt(args.m), fmt(args.energy), fmt(args.theta),
             fmt(f1), fmt(f2)]]
    return header, rows


def cmd_scatter_frame_scan(args):
    if args.flavor == scattering.PHOTON_LINE:
        kin = scattering.cm_elastic_kinematics(args.energy, args.theta, args.m)
    else:
        kin = scattering.cm_annihilation_kinematics(args.energy, args.theta,
                                                    args.m)
    boosts = [scattering.Boost(parse_vec3(tok))
              for tok in args.betas.split(";")]
    rows_raw = scattering.frame_scan(kin, args.q, boosts, args.flavor)
    header = ["bx", "by", "bz", "F1", "F2"]
    rows = [[*map(fmt, beta), fmt(f1), fmt(f2)] for beta, f1, f2 in rows_raw]
    return header, rows


# ------------------------------------------------------------------ driver

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfield",
        description="q-deformed field quantization toolkit")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="write output to FILE instead of stdout")
    parser.add_argument("--golden", choices=("write", "check"),
                        help="persist or verify a golden file for this run")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_q(p, default=1.0):
        p.add_argument("--q", type=float, default=default)

    p = sub.add_parser("qnum", help="basic number <n>_q")
    add_q(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_qnum)

    p = sub.add_parser("planck", help="deformed occupancy 1/(e^x - q)")
    add_q(p)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=cmd_planck)

    pf = sub.add_parser("fock", help="Fock-space operations")
    fsub = pf.add_subparsers(dest="subcommand", required=True)
    p = fsub.add_parser("vev", help="brute-force vacuum expectation value")
    add_q(p)
    p.add_argument("--ops", required=True,
                   help="operator tokens, e.g. 'a0,a0+' (rightmost acts first)")
    p.add_argument("--n-max", type=int, default=fock.DEFAULT_N_MAX)
    p.set_defaults(func=cmd_fock_vev)

    pw = sub.add_parser("wick", help="q-Wick machinery")
    wsub = pw.add_subparsers(dest="subcommand", required=True)
    p = wsub.add_parser("normal", help="normal-order an operator string")
    add_q(p)
    p.add_argument("--ops", required=True)
    p.set_defaults(func=cmd_wick_normal)
    p = wsub.add_parser("expand", help="pairing-diagram expansion")
    add_q(p)
    p.add_argument("--ops", required=True)
    p.set_defaults(func=cmd_wick_expand)
    p = wsub.add_parser("verify", help="sweep strings against the Fock oracle")
    add_q(p, default=0.7)
    p.add_argument("--max-len", type=int, default=6)
    p.set_defaults(func=cmd_wick_verify)

    pd = sub.add_parser("dirac", help="Dirac algebra self-checks")
    dsub = pd.add_subparsers(dest="subcommand", required=True)
    p = dsub.add_parser("check", help="run the identity battery")
    p.set_defaults(func=cmd_dirac_check)

    pp = sub.add_parser("propagator", help="propagator evaluations")
    psub = pp.add_subparsers(dest="subcommand", required=True)
    for kind in ("scalar", "spinor", "photon"):
        p = psub.add_parser(kind)
        add_q(p)
        p.add_argument("--m", type=float, default=1.0)
        p.add_argument("--k0", type=float, default=0.0)
        p.add_argument("--kvec", default="1,0,0")
        p.add_argument("--k0-grid", help="lo:hi:count sweep over k0")
        p.set_defaults(func=lambda a, kind=kind: _propagator_rows(a, kind))
    p = psub.add_parser("residues")
    add_q(p)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--kvec", default="0,0,0")
    p.set_defaults(func=cmd_propagator_residues)
    p = psub.add_parser("position")
    add_q(p)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    p.set_defaults(func=cmd_propagator_position)
    p = psub.add_parser("spacelike")
    add_q(p, default=0.5)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--r-grid", help="lo:hi:count sweep over r")
    p.set_defaults(func=cmd_propagator_spacelike)

    ps = sub.add_parser("scatter", help="QED scattering probes")
    ssub = ps.add_subparsers(dest="subcommand", required=True)
    p = ssub.add_parser("moller")
    add_q(p)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--energy", type=float, default=2.0)
    p.add_argument("--theta", type=float, default=1.0)
    p.add_argument("--spins", default="1,1,1,1")
    p.add_argument("--beta", help="boost CM kinematics by this velocity")
    p.add_argument("--strict-paper-mode", action="store_true")
    p.set_defaults(func=cmd_scatter_moller)
    p = ssub.add_parser("annihilate")
    add_q(p)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--energy", type=float, default=2.0)
    p.add_argument("--theta", type=float, default=1.0)
    p.add_argument("--beta")
    p.set_defaults(func=cmd_scatter_annihilate)
    p = ssub.add_parser("frame-scan")
    add_q(p, default=0.5)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--energy", type=float, default=2.0)
    p.add_argument("--theta", type=float, default=1.0)
    p.add_argument("--betas", default="0,0,0;0,0,0.25;0,0,0.5",
                   help="semicolon-separated boost velocities")
    p.add_argument("--flavor", choices=(scattering.PHOTON_LINE,
                                        scattering.ELECTRON_LINE),
                   default=scattering.PHOTON_LINE)
    p.set_defaults(func=cmd_scatter_frame_scan)

    return parser


def render(header, rows, fmt_kind: str) -> str:
    if fmt_kind == "json":
        objs = [dict(zip(header, row)) for row in rows]
        return json.dumps(objs, indent=2) + "\n"
    lines = [",".join(header)]
    lines += [",".join(row) for row in rows]
    return "\n".join(lines) + "\n"


def golden_path(argv) -> str:
    root = os.environ.get("QFIELD_GOLDEN_DIR", DEFAULT_GOLDEN_DIR)
    # key on the invocation minus the --golden flag itself, so `write` and
    # `check` runs of the same command resolve to the same file
    keyed = []
    skip = False
    for a in argv:
        if skip:
            skip = False
            continue
        if a == "--golden":
            skip = True
            continue
        if a.startswith("--golden="):
            continue
        keyed.append(a)
    name = next((a for a in keyed if not a.startswith("-")), "run")
    digest = hashlib.sha256(" ".join(keyed).encode()).hexdigest()[:16]
    return os.path.join(root, name, f"{digest}.csv")


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        header, rows = args.func(args)
    except QFieldError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.error(str(exc))  # exits 2
    text = render(header, rows, args.format)
    if args.golden:
        path = golden_path(argv)
        if args.golden == "write":
            os.makedirs(os.path.dirname(path), exist_ok=True)
            with open(path, "w") as fh:
                fh.write(text)
        else:
            if not os.path.exists(path):
                print(f"error: no golden file at {path}", file=sys.stderr)
                return 1
            with open(path) as fh:
                if fh.read() != text:
                    print(f"error: output differs from golden {path}",
                          file=sys.stderr)
                    return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
