"""Command line interface: ``branecharge {analyze,chern,genus,charge,verify} FILE``.

Exit codes: 0 success, 1 input or parse error, 2 unsupported variety
(non-reflexive, non-smooth, or dimension above 4), 3 internal invariant
violation (including a failed cross-check).
"""

import argparse
from fractions import Fraction
import json
import os
import sys

from . import __version__
from .charges import (MAX_DIM, charge_general, chi_L_cy3, chi_cy3,
                      specialized_charge, variety_descriptor, verify_grr)
from .errors import (BraneChargeError, DimensionUnsupported, InputError,
                     InternalError, NotReflexive, NotSmooth, UnsupportedVariety)
from .fan import normal_fan
from .inputs import parse_document
from .intersection import (DivisorClass, GradedClass, c2_wall_sum, chern_total,
                           degree, equivalent, is_nef, pairings, todd_class)
from .oracle import chi_hypersurface, euler_characteristic_top
from .polytope import LatticePolytope

FORMATS_HELP = """\
input formats
  json    {"dim": n, "vertices": [[...], ...], "divisor": [...]}   (divisor optional)
  matrix  first line "d k", then d rows of k integers; points are columns
          (if d > k the rows are the points)

Divisor coefficients, from --divisor or the "divisor" field, are indexed by
the facets of the polytope in lexicographic order of their inward normals;
`analyze` lists that order.  Rationals in --format json output are strings
"p/q" (or "p" for integers).
"""


class Lcg:
    """64-bit linear congruential generator used for divisor sweeps."""

    MUL = 6364136223846793005
    INC = 1442695040888963407

    def __init__(self, seed):
        self.state = seed % 2 ** 64

    def next(self):
        self.state = (self.state * self.MUL + self.INC) % 2 ** 64
        return self.state

    def coefficient(self, bound):
        return (self.next() >> 33) % (2 * bound + 1) - bound

    def divisor(self, length, bound):
        return [self.coefficient(bound) for _ in range(length)]


def to_json_value(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, GradedClass):
        return class_to_json(x)
    if isinstance(x, dict):
        return {k: to_json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_json_value(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def class_to_json(cls):
    return {"dim": cls.dim,
            "terms": [{"cone": sorted(c), "coeff": str(v)} for c, v in cls.items()]}


def class_from_json(obj):
    return GradedClass(obj["dim"], {frozenset(t["cone"]): Fraction(t["coeff"])
                                    for t in obj["terms"]})


def _style(text, ok):
    if os.environ.get("BRANECHARGE_NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _flag(ok):
    return _style("PASS" if ok else "FAIL", ok)


def load_variety(path, polar=False, fmt=None):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    doc = parse_document(text, fmt)
    poly = LatticePolytope(doc.vertices)
    if polar:
        poly = poly.dual()
    return doc, poly


def _require_supported(poly, fan):
    if poly.dim > MAX_DIM:
        raise DimensionUnsupported(f"dimension {poly.dim} > {MAX_DIM}")
    if not poly.is_reflexive():
        raise NotReflexive(f"polytope is not reflexive (facet offsets "
                           f"{sorted(set(poly.offsets))})")
    if not fan.smooth:
        raise NotSmooth("normal fan has a non-unimodular maximal cone")


def _divisor(args, doc, fan):
    raw = args.divisor if args.divisor is not None else doc.divisor
    return parse_divisor(raw, fan)


def parse_divisor(raw, fan):
    if raw is None:
        return DivisorClass()
    if isinstance(raw, str):
        try:
            raw = [int(x) for x in raw.split(",") if x.strip()]
        except ValueError:
            raise InputError(f"--divisor must be comma-separated integers, got {raw!r}") from None
    if len(raw) != len(fan.rays):
        raise InputError(f"divisor has {len(raw)} coefficients, the polytope has "
                         f"{len(fan.rays)} facets")
    return DivisorClass(list(raw))


def header(poly, fan):
    return {"variety": variety_descriptor(fan),
            "facet_order": [list(n) for n in poly.normals]}


def cmd_analyze(args, doc, poly, fan):
    out = header(poly, fan)
    out.update({
        "reflexive": poly.is_reflexive(),
        "smooth": fan.smooth,
        "complete": fan.complete,
        "f_vector": list(poly.f_vector),
        "vertices": [list(v) for v in poly.vertices],
        "dropped_points": [list(v) for v in poly.dropped],
        "rays": len(fan.rays),
        "max_cones": [sorted(c) for c in fan.max_cones],
        "codim2_faces": len(poly.faces[poly.dim - 2]) if poly.dim >= 2 else 0,
    })
    return out, []


def cmd_chern(args, doc, poly, fan):
    _require_supported(poly, fan)
    k = fan.dim if args.max_degree is None else min(args.max_degree, fan.dim)
    a = DivisorClass.anticanonical(fan)
    c = chern_total(fan)
    td = todd_class(fan, k)
    wall = c2_wall_sum(fan)
    checks = [
        ("c_2 = wall sum", True, fan.dim < 2 or equivalent(fan, c.component(2), wall)),
        ("deg c_n = #max cones", euler_characteristic_top(fan), degree(c)),
    ]
    if k == fan.dim:
        checks.append(("deg td_n = 1", Fraction(1), degree(td)))
    out = header(poly, fan)
    out.update({
        "test_divisor": "-K",
        "chern_pairings": pairings(fan, c, a)[:k + 1],
        "todd_pairings": pairings(fan, td, a)[:k + 1],
        "chern": c.truncate(k),
        "todd": td,
        "c2_wall_sum": wall,
    })
    return out, checks


def cmd_genus(args, doc, poly, fan):
    _require_supported(poly, fan)
    D = _divisor(args, doc, fan)
    chi = chi_cy3(fan, D)
    chi_l = chi_L_cy3(fan)
    K = DivisorClass.canonical(fan)
    checks = [("chi_L = chi(-3K)", chi_l, chi_cy3(fan, K * -3))]
    out = header(poly, fan)
    out.update({"divisor": D.vector(len(fan.rays)), "chi": chi, "chi_L": chi_l})
    if is_nef(fan, D):
        checks.append(("chi = lattice-point oracle", chi_hypersurface(fan, D), chi))
    else:
        out["oracle_skipped"] = "divisor is not nef"
    checks.append(("chi_L = lattice-point oracle", chi_hypersurface(fan, K * -3), chi_l))
    return out, checks


def cmd_charge(args, doc, poly, fan):
    _require_supported(poly, fan)
    D = _divisor(args, doc, fan)
    A = DivisorClass.anticanonical(fan)
    if args.test_divisor is not None:
        A = parse_divisor(args.test_divisor, fan)
    general = charge_general(fan, D)
    special = specialized_charge(fan, D)
    checks = [("codim-1 part = -K", True,
               equivalent(fan, general.component(1),
                          GradedClass(fan.dim, {frozenset([i]): 1
                                                for i in range(len(fan.rays))})))]
    out = header(poly, fan)
    out.update({"divisor": D.vector(len(fan.rays)),
                "test_divisor": A.vector(len(fan.rays)),
                "pairings": pairings(fan, general, A),
                "degree": degree(general),
                "charge": general})
    if special is not None:
        out["closed_form"] = special
        checks.append(("closed form = general", True, equivalent(fan, special, general)))
    else:
        K = DivisorClass.canonical(fan)
        checks.append(("genus formula = deg charge", degree(general), chi_cy3(fan, D - K)))
    return out, checks


def cmd_verify(args, doc, poly, fan):
    _require_supported(poly, fan)
    rng = Lcg(args.seed)
    results = []
    checks = []
    for t in range(args.trials):
        coeffs = rng.divisor(len(fan.rays), args.max_coeff)
        rep = verify_grr(fan, DivisorClass(coeffs))
        results.append({"divisor": coeffs, "genus": rep.genus,
                        "checks": {c.name: c.passed for c in rep.checks},
                        "skipped": rep.skipped})
        for c in rep.checks:
            checks.append((f"trial {t}: {c.name}", c.expected, c.got))
    out = header(poly, fan)
    out.update({"trials": args.trials, "seed": args.seed,
                "max_coeff": args.max_coeff, "results": results})
    return out, checks


COMMANDS = {"analyze": cmd_analyze, "chern": cmd_chern, "genus": cmd_genus,
            "charge": cmd_charge, "verify": cmd_verify}


def _render_text(command, out, checks):
    lines = [f"{command}: dim={out['variety']['dim']} rays={out['variety']['rays']} "
             f"digest={out['variety']['digest']}",
             "facet order: " + " ".join(str(tuple(n)) for n in out["facet_order"])]
    for k, v in out.items():
        if k in ("variety", "facet_order", "results"):
            continue
        if isinstance(v, GradedClass):
            v = " + ".join(f"{c}*V{sorted(s)}" for s, c in v.items()) or "0"
        elif isinstance(v, (list, tuple)):
            v = ", ".join(str(x) for x in v)
        lines.append(f"{k}: {v}")
    if command == "verify":
        failed = sum(1 for c in checks if c[1] != c[2])
        lines.append(f"checks: {len(checks)} run, {failed} failed")
        for name, want, got in checks:
            if want != got:
                lines.append(f"  {_flag(False)} {name}: expected {want}, got {got}")
    else:
        for name, want, got in checks:
            lines.append(f"{_flag(want == got)} {name}: expected {want}, got {got}")
    return "\n".join(lines)


def build_parser():
    p = argparse.ArgumentParser(
        prog="branecharge",
        description="Exact D-brane charges and genera on anticanonical "
                    "hypersurfaces of smooth Fano toric varieties.",
        epilog=FORMATS_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn in COMMANDS.items():
        s = sub.add_parser(name, help=fn.__name__.replace("cmd_", ""),
                           epilog=FORMATS_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        s.add_argument("file")
        s.add_argument("--format", choices=["text", "json"], default="text")
        s.add_argument("--input-format", choices=["json", "matrix"], default=None)
        s.add_argument("--polar", action="store_true",
                       help="treat the input points as ray generators and use "
                            "the dual polytope")
        if name in ("genus", "charge"):
            s.add_argument("--divisor", help="comma-separated integers, facet order")
        if name == "charge":
            s.add_argument("--test-divisor",
                           help="divisor paired against the charge (default -K)")
        if name == "chern":
            s.add_argument("--max-degree", type=int, default=None)
        if name == "verify":
            s.add_argument("--trials", type=int, default=20)
            s.add_argument("--seed", type=int, default=0)
            s.add_argument("--max-coeff", type=int, default=3)
    return p


def run(argv=None, stdout=None):
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        doc, poly = load_variety(args.file, args.polar, args.input_format)
        fan = normal_fan(poly)
        out, checks = COMMANDS[args.command](args, doc, poly, fan)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except UnsupportedVariety as e:
        print(f"unsupported variety: {e}", file=sys.stderr)
        return 2
    except (InternalError, AssertionError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3
    except BraneChargeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    ok = all(want == got for _, want, got in checks)
    if args.format == "json":
        out["checks"] = [{"name": n, "expected": w, "got": g, "pass": w == g}
                         for n, w, g in checks]
        out["pass"] = ok
        print(json.dumps(to_json_value(out), indent=2), file=stdout)
    else:
        print(_render_text(args.command, out, checks), file=stdout)
    return 0 if ok else 3


def main():
    sys.exit(run())
