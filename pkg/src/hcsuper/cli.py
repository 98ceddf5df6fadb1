"""Command line interface: ``python -m hcsuper <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a failing check and 2
on bad arguments.  Output is JSON with sorted keys unless ``--format text``.
"""
import argparse
import json
import sys

from . import hciso, hwmod, possys, verify
from .rootsys import FamilyError, add, build_root_system, fmt, frac, pairing, parse_family, to_json
from .weyl import even_weyl_group


class UsageError(Exception):
    pass


def _family(args):
    try:
        return parse_family(args.family, args.m, args.n, args.alpha)
    except (FamilyError, ValueError) as exc:
        raise UsageError(str(exc))


def _weight(fam, text):
    try:
        return fam.normalize([frac(x) for x in text.replace(" ", "").split(",") if x != ""])
    except (FamilyError, ValueError, ZeroDivisionError) as exc:
        raise UsageError("bad weight %r: %s" % (text, exc))


def _pair(args):
    fam = _family(args)
    key = possys.family_key(fam)
    tag = args.form or possys.FORM_TAGS[key][0]
    params = ()
    if fam.tag == "A":
        M, N = fam.m + 1, fam.n + 1
        p = M if args.p is None else args.p
        r = N if args.r is None else args.r
        q = M - p if args.q is None else args.q
        s = N - r if args.s is None else args.s
        params = (p, q, r, s)
    try:
        return possys.build_hermitian_pair(fam, tag, params)
    except possys.NotAdmissible as exc:
        raise UsageError(str(exc))


def _positive(pair, args):
    P = pair.standard_positive_system()
    if getattr(args, "flip", False):
        P = possys.flip_noncompact(pair, P)
    return P


def _highest(args):
    pair = _pair(args)
    P = _positive(pair, args)
    lam = _weight(pair.family, args.lam)
    try:
        return hwmod.HighestWeight(lam, pair, P)
    except (hwmod.NotDominant, possys.NotAdmissible, ValueError) as exc:
        raise UsageError(str(exc))


def _w(v):
    return [fmt(x) for x in v]


def _roots(rs):
    return [_w(r.coords) for r in sorted(rs, key=lambda r: r.coords)]


def pair_report(pair, P):
    pk, pn0, pn1 = possys.split(pair, P)
    adm = possys.is_admissible(pair, P)
    return {
        "family": pair.family.label(),
        "form": pair.label,
        "simple": _roots(possys.simple_roots(P)),
        "noncompact_simple": [_w(c) for c in sorted(pair.noncompact_simple)],
        "P_k": _roots(pk),
        "P_n0": _roots(pn0),
        "P_n1": _roots(pn1),
        "admissible": adm,
        "components_p1": possys.count_p1_components(pair, P) if adm else None,
    }


def cmd_roots(args):
    return to_json(build_root_system(_family(args)))


def cmd_admissible(args):
    pair = _pair(args)
    P = _positive(pair, args)
    out = pair_report(pair, P)
    if args.enumerate:
        out["admissible_systems"] = [_roots(Q.roots) for Q in possys.enumerate_admissible(pair)]
    return out


def cmd_components(args):
    pair = _pair(args)
    return {"components_p1": possys.count_p1_components(pair, _positive(pair, args))}


def cmd_character(args):
    hw = _highest(args)
    if args.depth < 0:
        raise UsageError("depth must be non-negative")
    fn = hwmod.character_formula if args.method == "formula" else hwmod.character_bruteforce
    return fn(hw, args.depth).to_json()


def cmd_irreducible(args):
    hw = _highest(args)
    out = {"criterion": hwmod.check_irreducibility_criterion(hw), "depth": args.depth}
    if hw.sys.family.realized:
        out["singular_vectors"] = [
            {"mu": _w(mu), "vector": [{"monomial": list(m), "f": f, "coeff": fmt(c)}
                                      for (m, f), c in sorted(vec.items())]}
            for mu, vec in hwmod.find_singular_vectors(hw, args.depth)
        ]
    else:
        out["singular_vectors"] = None
    return out


def cmd_linkage(args):
    hw = _highest(args)
    mu = _weight(hw.sys.family, args.mu)
    W = even_weyl_group(hw.sys)
    try:
        linked = hciso.linkage(hw.sys, W, hw.P, hw.lam, mu)
    except hciso.AtypicalWeight as exc:
        raise UsageError(str(exc))
    return {"linked": linked, "lambda": _w(hw.lam), "mu": _w(mu)}


def cmd_typical(args):
    pair = _pair(args)
    P = _positive(pair, args)
    lam = _weight(pair.family, args.lam)
    r = hwmod.rho(P)
    lr = add(lam, r)
    vals = [{"root": _w(a.coords), "pairing": fmt(pairing(pair.sys, lr, a.coords))}
            for a in sorted(pair.sys.isotropic_roots()) if a in P.roots]
    return {"typical": hciso.is_typical(pair.sys, r, lam), "rho": _w(r), "isotropic_pairings": vals}


def cmd_table(args):
    fam = _family(args)
    key = possys.family_key(fam)
    tags = [args.form] if args.form else list(possys.FORM_TAGS[key])
    rows = []
    for tag in tags:
        args.form = tag
        if fam.tag == "A" and args.p is None and args.r is None:
            M, N = fam.m + 1, fam.n + 1
            splits = [(p, M - p, r, N - r) for p in range(M + 1) for r in range(N + 1)]
        else:
            splits = [None]
        for sp in splits:
            if sp is not None:
                pair = possys.build_hermitian_pair(fam, tag, sp)
            else:
                pair = _pair(args)
            rep = pair_report(pair, pair.standard_positive_system())
            if sp is not None:
                rep["params"] = list(sp)
            rows.append(rep)
    return {"rows": rows}


def cmd_verify(args):
    results = verify.run(seed=args.seed)
    failed = [r for r in results if not r[1]]
    return {
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "checks": [{"name": n, "ok": ok} for n, ok, _ in results],
    }


def _text(obj):
    if isinstance(obj, dict) and len(obj) == 1:
        (v,) = obj.values()
        if isinstance(v, bool):
            return str(v).lower()
        if isinstance(v, (int, str)):
            return str(v)
    return json.dumps(obj, sort_keys=True, indent=2)


def build_parser():
    ap = argparse.ArgumentParser(prog="hcsuper", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def family_args(p, pair=True):
        p.add_argument("--family", required=True, choices=["A", "B", "C", "D", "D21a", "F4", "G3"])
        p.add_argument("--m", type=int, default=0)
        p.add_argument("--n", type=int, default=0)
        p.add_argument("--alpha", default=None, help="rational parameter of D(2,1;alpha), e.g. 1/2")
        p.add_argument("--format", choices=["json", "text"], default="json")
        if pair:
            p.add_argument("--form", default=None, help="real form tag")
            for k in "pqrs":
                p.add_argument("--" + k, type=int, default=None)
            p.add_argument("--flip", action="store_true", help="use P_k with -P_n")

    p = sub.add_parser("roots", help="root system as JSON")
    family_args(p, pair=False)
    p = sub.add_parser("admissible", help="P_k, P_n0, P_n1 and admissibility")
    family_args(p)
    p.add_argument("--enumerate", action="store_true", help="also list all admissible systems")
    p = sub.add_parser("components", help="number of k-components of p1+")
    family_args(p)
    p = sub.add_parser("character", help="truncated character of U^lambda")
    family_args(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--method", choices=["formula", "bruteforce"], default="formula")
    p = sub.add_parser("irreducible", help="irreducibility criterion and singular vectors")
    family_args(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--depth", type=int, default=6)
    p = sub.add_parser("linkage", help="whether mu + rho is in W(lambda + rho)")
    family_args(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p = sub.add_parser("typical", help="typicality of lambda")
    family_args(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p = sub.add_parser("table", help="case tables for a family")
    family_args(p)
    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"], default="json")
    return ap


COMMANDS = {
    "roots": cmd_roots, "admissible": cmd_admissible, "components": cmd_components,
    "character": cmd_character, "irreducible": cmd_irreducible, "linkage": cmd_linkage,
    "typical": cmd_typical, "table": cmd_table, "verify": cmd_verify,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.format == "text":
        out.write(_text(result) + "\n")
    else:
        out.write(json.dumps(result, sort_keys=True) + "\n")
    if args.command == "verify" and result["failed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
