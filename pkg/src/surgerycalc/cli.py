"""Command-line front end.

Exit status: 0 on success, 1 on invalid input, 2 when the question is well
posed but the answer is negative (e.g. the aux knot is not nullhomologous).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import homology as hom
from .fileformat import dump_diagram, fmt, load_diagram, parse_pair, parse_rational
from .legendrian import (NotApplicable, bennequin_check, contact_to_topological, max_tb_bound, surgery_theorem_scan,
                         tb_after_surgery, tbq_after_surgery, topological_to_contact)
from .lens import cosmetic_pair_check, glue_standard_neighborhoods, lens_from_unknot_surgery
from .linalg import DimensionError
from .model import DiagramError
from .moves import contact_rolfsen, rolfsen_twist

CONVENTION = "-p/q surgery on the unknot is L(p,q); intersection pairing mu.lambda = +1"

# argparse treats "-3/2" as an option flag; widen its negative-number test.
_NEGATIVE = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+/\d+$")


class Report:
    def __init__(self, command: str, argv: list[str], digest: str):
        self.data = {"command": command, "argv": argv, "input_digest": digest, "results": {}, "warnings": []}
        self.status = 0

    @property
    def results(self) -> dict:
        return self.data["results"]

    def warn(self, msg: str):
        self.data["warnings"].append(msg)

    def diagram(self, d, aux):
        self.data.update(dump_diagram(d, aux))


def _load(path: str):
    raw = Path(path).read_bytes()
    try:
        obj = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DiagramError(f"{path}: not a UTF-8 JSON document ({exc})") from None
    d, aux = load_diagram(obj)
    return d, aux, hashlib.sha256(raw).hexdigest()


def _need_aux(aux):
    if aux is None:
        raise DiagramError("this command needs an 'aux' knot in the diagram file")
    return aux


def _component_key(value: str):
    # numeric keys are 1-based positions, anything else is a component id
    return int(value) - 1 if re.fullmatch(r"\d+", value) else value


def cmd_homology(args, rep: Report):
    d, aux, rep.data["input_digest"] = _load(args.file)
    Q = hom.build_q(d)
    h = hom.first_homology(d)
    rep.results.update(Q=Q.tolist(), det_Q=Q.det(), h1=str(h), torsion=list(h.torsion), free_rank=h.free_rank)
    if aux is not None:
        e = hom.exterior_homology(d, aux)
        rep.results["exterior_h1"] = str(e)
    rep.diagram(d, aux)


def cmd_nullhomology(args, rep: Report):
    d, aux, rep.data["input_digest"] = _load(args.file)
    cert = hom.nullhomology(d, _need_aux(aux))
    if cert is None:
        rep.results.update(order=None, nullhomologous=False, rationally_nullhomologous=False)
        rep.status = 2
    else:
        rep.results.update(order=cert.order, nullhomologous=cert.nullhomologous, rationally_nullhomologous=True,
                           witness=list(cert.witness), kernel=[list(v) for v in cert.kernel])
        if cert.order != 1:
            rep.status = 2
    rep.diagram(d, aux)


def _tb(args, rep: Report, fn):
    d, aux, rep.data["input_digest"] = _load(args.file)
    rep.diagram(d, aux)
    res = fn(d, _need_aux(aux))
    rep.results.update(tb_new=fmt(res.value), tb_old=res.tb_old, order=res.order,
                       correction=res.correction, witness=list(res.witness))


def cmd_tb(args, rep):
    _tb(args, rep, tb_after_surgery)


def cmd_tbq(args, rep):
    _tb(args, rep, tbq_after_surgery)


def cmd_convert(args, rep: Report):
    if (args.contact is None) == (args.topological is None):
        raise DiagramError("give exactly one of --contact and --topological")
    if args.contact is not None:
        c = parse_rational(args.contact)
        r = contact_to_topological(c, args.tb)
    else:
        r = parse_rational(args.topological)
        c = topological_to_contact(r, args.tb)
    rep.results.update(contact=fmt(c), tb=args.tb, topological=fmt(r))


def _move_warnings(rep: Report, before, after, aux_before, aux_after):
    if any(c.legendrian is not None and c.legendrian.rot is not None for c in before.components) or (
            aux_before is not None and aux_before.rot_old is not None):
        rep.warn("rotation numbers were cleared: they are not transformed by Rolfsen twists")
    lost = [c.id for c in before.components if c.unknot
            and any(a.id == c.id and not a.unknot for a in after.components)]
    if lost:
        rep.warn(f"unknot labels cleared on {', '.join(lost)}: twisting may change knot types")


def cmd_rolfsen(args, rep: Report):
    d, aux, rep.data["input_digest"] = _load(args.file)
    i = d.index(_component_key(args.component))
    d2, aux2 = rolfsen_twist(d, aux, i, args.twists)
    if d.components[i].legendrian is not None:
        rep.warn(f"Legendrian decoration of the twisted component {d.components[i].id} was dropped")
    _move_warnings(rep, d, d2, aux, aux2)
    rep.results.update(component=d.components[i].id, twists=args.twists, slope=str(d2.components[i].slope))
    rep.diagram(d2, aux2)


def cmd_contact_rolfsen(args, rep: Report):
    d, aux, rep.data["input_digest"] = _load(args.file)
    i = d.index(_component_key(args.component))
    d2, aux2 = contact_rolfsen(d, aux, i)
    _move_warnings(rep, d, d2, aux, aux2)
    s = d.components[i].slope
    rep.results.update(removed=d.components[i].id, n=s.p * s.q, remaining=d2.n)
    rep.diagram(d2, aux2)


def cmd_lens(args, rep: Report):
    num, den = parse_pair(args.coefficient) if args.coefficient.strip().lower() not in ("inf", "infinity") else (1, 0)
    L = lens_from_unknot_surgery(None if den == 0 else Fraction(num, den))
    rep.results.update(coefficient=args.coefficient, lens=str(L), p=L.p, q=L.q, convention=CONVENTION)


def cmd_cosmetic_pair(args, rep: Report):
    c1, c2 = parse_rational(args.c1), parse_rational(args.c2)
    res = cosmetic_pair_check(c1, c2, args.tb)
    rep.results.update(contact=[fmt(c1), fmt(c2)], tb=args.tb, topological=[fmt(r) for r in res.topological],
                       lens=[str(L) for L in res.lens], oriented_homeomorphic=res.oriented_homeomorphic,
                       homeomorphic=res.homeomorphic, convention=CONVENTION)


def cmd_glue(args, rep: Report):
    g = glue_standard_neighborhoods(args.tb, args.p)
    rep.results.update(lens=str(g.lens), q=g.q, r=g.r, s=g.s, mu1_image=list(g.gluing.mu_image),
                       lambda1_image=list(g.gluing.lambda_image), determinant=g.gluing.determinant,
                       tbq_spine1=fmt(g.tbq_spine1), tbq_spine2=fmt(g.tbq_spine2), convention=CONVENTION)


def cmd_bennequin(args, rep: Report):
    tb = parse_rational(args.tb)
    if args.chi is not None:
        v = bennequin_check(tb, args.rot, euler_characteristic=args.chi)
    elif args.bound is not None:
        v = bennequin_check(tb, args.rot, max_tb_bound=parse_rational(args.bound))
    elif args.type is not None:
        v = bennequin_check(tb, args.rot, max_tb_bound=max_tb_bound(args.type))
    else:
        raise DiagramError("give one of --type, --bound or --chi")
    rep.results.update(tb=fmt(v.computed_tb), bound=fmt(v.witness_bound), violated=v.violated)


def cmd_scan(args, rep: Report):
    rows = surgery_theorem_scan(args.start, args.stop)
    rep.results["rows"] = [dict(n=r.n, aux_linking=r.aux_linking, tb_new=fmt(r.tb_new), knot_type=r.knot_type,
                                bound=fmt(r.bound), violated=r.violated) for r in rows]
    rep.results["all_violated"] = all(r.violated for r in rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surgerycalc", description="Surgery diagram and Thurston-Bennequin calculator")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p._negative_number_matcher = _NEGATIVE
        p.set_defaults(func=fn)
        return p

    for name, fn, text in [("homology", cmd_homology, "H_1 of the surgered manifold"),
                           ("nullhomology", cmd_nullhomology, "order of the aux knot in H_1"),
                           ("tb", cmd_tb, "tb of the aux knot after surgery"),
                           ("tbq", cmd_tbq, "rational tb of the aux knot after surgery")]:
        add(name, fn, text).add_argument("file")
    p = add("convert", cmd_convert, "contact <-> topological surgery coefficient")
    p.add_argument("--contact")
    p.add_argument("--topological")
    p.add_argument("--tb", type=int, required=True)
    p = add("rolfsen", cmd_rolfsen, "Rolfsen twist along an unknotted component")
    p.add_argument("file")
    p.add_argument("--component", required=True, help="component id or 1-based position")
    p.add_argument("--twists", type=int, required=True)
    p = add("contact-rolfsen", cmd_contact_rolfsen, "remove a tb=-1 unknot with contact coefficient 1+1/n")
    p.add_argument("file")
    p.add_argument("--component", required=True, help="component id or 1-based position")
    p = add("lens", cmd_lens, "lens space from surgery on the unknot")
    p.add_argument("--coefficient", required=True, help="topological coefficient p/q, or inf")
    p = add("cosmetic-pair", cmd_cosmetic_pair, "compare two contact surgeries on a Legendrian unknot")
    p.add_argument("--c1", required=True)
    p.add_argument("--c2", required=True)
    p.add_argument("--tb", type=int, required=True)
    p = add("glue", cmd_glue, "glue two standard neighbourhoods into L(p,p-1)")
    p.add_argument("--tb", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p = add("bennequin", cmd_bennequin, "Bennequin inequality check")
    p.add_argument("--tb", required=True)
    p.add_argument("--rot", type=int)
    p.add_argument("--type", help="knot type label, e.g. unknot or negative-torus(2,5)")
    p.add_argument("--bound", help="explicit maximal tb")
    p.add_argument("--chi", type=int, help="Euler characteristic of a Seifert surface")
    p = add("scan-surgery-theorem", cmd_scan, "tb obstruction for 1/n surgeries over a range of n")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    return parser


def _render_text(rep: Report) -> str:
    lines = []
    res = rep.results
    for key, value in res.items():
        if key == "rows":
            for row in value:
                verdict = "Bennequin violated" if row["violated"] else "consistent"
                lines.append(f"n={row['n']:>4}  tb_new={row['tb_new']:>6}  {row['knot_type']:<22} "
                             f"bound={row['bound']:>6}  {verdict}")
        else:
            lines.append(f"{key}: {value}")
    if "components" in rep.data and rep.data["command"] in ("rolfsen", "contact-rolfsen"):
        lines.append("diagram: " + json.dumps({k: rep.data[k] for k in ("components", "linking", "aux") if k in rep.data}))
    lines.extend(f"warning: {w}" for w in rep.data["warnings"])
    return "\n".join(lines)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    digest = hashlib.sha256(json.dumps(argv).encode()).hexdigest()
    rep = Report(args.command, argv, digest)
    try:
        args.func(args, rep)
    except NotApplicable as exc:
        rep.status = 2
        rep.results.update(applicable=False, reason=str(exc))
        order = getattr(exc, "order", None)
        if order is not None:
            rep.results["order"] = order
    except (DiagramError, DimensionError, ValueError, OSError) as exc:
        if args.json:
            rep.data["error"] = str(exc)
            print(json.dumps(rep.data, indent=2), file=out)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(rep.data, indent=2), file=out)
    else:
        print(_render_text(rep), file=out)
    return rep.status


def main():
    sys.exit(run())
