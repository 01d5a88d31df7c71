"""Command-line front end: ``fone-rep <command> ...``.

All output is canonical JSON (sorted keys).  Exit status: 0 on success, 2 on
validation errors, 3 when a size cap is exceeded; errors are reported as JSON
on stderr.

Schemas
  group    JSON list of cyclic orders, e.g. [2, 2]; [] is the trivial group.
  element  {"g": [residues], "b": "<basis name>"} or a bare basis name.
  matrix   {"rows": m, "cols": n, "entries": [null | {"row": i, "g": [..]}, ...]}
           one entry per column, rows 1-based.
  monoid   {"group": [..], "basis": [names], "one": name,
            "mult": [{"l": a, "r": b, "res": null | element}, ...],
            "matrices": {name: matrix}  (optional realization)}
           every ordered pair of basis names appears exactly once in "mult".
  rep      {"dim": d, "action": {name: matrix, ...}} for every basis name.
  quiver   {"vertices": [..], "arrows": [{"name", "source", "target"}],
            "relations": [{"lhs": [arrows], "rhs": null | vertex | [arrows]}]}
           paths compose left to right.
  order    [[x, y], ...] meaning x <= y (elements or "0"); closed
           reflexively and transitively.
  subgroup list of elements of the maximal subgroup (ambient elements), or
           for phi-h a name (1, A<n>, S<n>, V4) or a list of 1-based permutations.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import cmp, monoid, ordered, rep
from .errors import FoneRepError, ValidationError
from .fvect import PointedGroup


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None


def _load_monoid(path: str) -> monoid.GLinearMonoid:
    data = _load_json(path)
    try:
        return monoid.monoid_from_json(data)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"{path}: malformed monoid ({exc})") from None


def _load_rep(M, path: str) -> rep.Representation:
    data = _load_json(path)
    try:
        return rep.rep_from_json(M, data)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"{path}: malformed representation ({exc})") from None


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        raise ValidationError(f"expected JSON, got {text!r}") from None


def _group(text: str) -> PointedGroup:
    orders = _json_arg(text)
    if not isinstance(orders, list) or not all(isinstance(m, int) and m >= 1 for m in orders):
        raise ValidationError("--group must be a list of positive integers")
    return PointedGroup(orders)


def _coords(cs) -> list:
    return [c + 1 for c in sorted(cs)]


def _key(V) -> str:
    return rep.key_digest(rep.iso_key(V))


# ---------------------------------------------------------------------------
# reports


def jclass_report(M) -> list:
    report = M.jreport
    out = []
    for cls in report.classes:
        entry = {
            "index": cls.index,
            "members": [M.basis[b] for b in cls.members],
            "regular": cls.regular,
            "idempotents": [M.element_json(e) for e in cls.idempotents],
            "below": [j for j in range(len(report.classes)) if j != cls.index and report.leq(j, cls.index)],
        }
        if cls.regular and not cls.is_zero:
            GJ = monoid.maximal_subgroup(M, cls.idempotents[0])
            entry["maximal_subgroup"] = {
                "order": GJ.dim * M.group.size,
                "elements": [M.element_json(x) for x in GJ.embedding],
            }
        out.append(entry)
    return out


def verdict_json(v: cmp.Verdict) -> dict:
    out = {"status": v.status, "reason": v.reason}
    if v.witness is not None:
        out["witness"] = v.witness.to_json()
        out["subrep"] = _coords(v.sub)
    return out


def simples_json(M, max_order: int, max_dim: int) -> list:
    return [{"apex": s.apex, "dim": s.dim, "key": _key(s.rep)}
            for s in cmp.all_simples(M, max_order, max_dim)]


def analyze(M, max_dim: int = 64, max_order: int = cmp.MAX_SUBGROUP_ORDER, search_dim: int = 3) -> dict:
    left = monoid.is_left_inductive(M)
    flags = {
        "regular": monoid.is_regular(M),
        "inverse": monoid.is_inverse(M),
        "left_inductive": left,
        "right_inductive": monoid.is_right_inductive(M),
    }
    report = {
        "monoid": {"size": M.size, "dim": M.dim, "group": M.group.to_json()},
        "j_classes": jclass_report(M),
        "flags": flags,
        "idempotents": [M.element_json(e) for e in monoid.idempotents(M)],
        "semisimple": verdict_json(cmp.is_semisimple(M, search_dim)),
    }
    if left:
        report["simples"] = simples_json(M, max_order, max_dim)
    return report


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> dict:
    return analyze(_load_monoid(args.monoid), args.max_dim, args.max_subgroup_order, args.search_dim)


def cmd_make(args) -> dict:
    G = _group(args.group)
    if args.kind == "in":
        if args.n is None or args.n < 1:
            raise ValidationError("make in needs --n >= 1")
        M = monoid.symmetric_inverse_monoid(args.n, G)
    elif args.kind == "null":
        if args.n is None or args.n < 1:
            raise ValidationError("make null needs --n >= 1")
        M = monoid.null_monoid(args.n, G)
    else:
        if not args.quiver:
            raise ValidationError("make path needs --quiver")
        data = _load_json(args.quiver)
        try:
            q = monoid.Quiver.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed quiver ({exc})") from None
        M = monoid.path_monoid(q, G)
    return M.to_json()


def cmd_check_rep(args) -> dict:
    M = _load_monoid(args.monoid)
    V = _load_rep(M, args.rep)
    return {"valid": True, "dim": V.dim, "simple": rep.is_simple(V),
            "indecomposable": rep.is_indecomposable(V)}


def cmd_decompose(args) -> dict:
    M = _load_monoid(args.monoid)
    V = _load_rep(M, args.rep)
    ks = rep.krull_schmidt(V)
    jh = rep.jordan_holder(V)
    ap = rep.apex(V)
    return {
        "dim": V.dim,
        "krull_schmidt": [{"coords": _coords(s.coords), "dim": len(s.coords),
                           "key": rep.key_digest(s.key)} for s in ks.summands],
        "jordan_holder": sorted(rep.key_digest(k) for k in jh.keys),
        "annihilator": sorted(M.basis[b] for b in rep.annihilator(V)),
        "apex": None if ap is None else ap.index,
    }


def cmd_simples(args) -> list:
    M = _load_monoid(args.monoid)
    return simples_json(M, args.max_subgroup_order, args.max_dim)


def cmd_semisimple(args) -> dict:
    return verdict_json(cmp.is_semisimple(_load_monoid(args.monoid), args.search_dim))


def cmd_induce(args) -> dict:
    M = _load_monoid(args.monoid)
    e = M.element_from_json(_json_arg(args.idempotent) if args.idempotent.lstrip().startswith("{") else args.idempotent)
    monoid.check_idempotent(M, e)
    GJ = monoid.maximal_subgroup(M, e)
    T = cmp.group_table(GJ, args.max_subgroup_order)
    if args.subgroup:
        elems = _load_json(args.subgroup)
        if not isinstance(elems, list):
            raise ValidationError("--subgroup file must hold a JSON list of elements")
        codes = []
        for item in elems:
            x = M.element_from_json(item)
            # ambient g * rep  ->  (g relative to the orbit rep, index)
            for a, r in enumerate(GJ.embedding):
                if x is not None and x[1] == r[1]:
                    g = M.group._mul[x[0]][M.group.inv(r[0])]
                    codes.append(T.code((g, a)))
                    break
            else:
                raise ValidationError(f"{item!r} is not in the maximal subgroup")
        H = cmp.generate_subgroup(T, codes)
    else:
        H = frozenset([T.identity])
    W = cmp.coset_rep(GJ, H)
    ind = cmp.induce(W, e)
    N = cmp.radical(ind)
    Q = rep.quotient(ind.rep, N)
    return {"induced": ind.rep.to_json(), "radical": _coords(N.coords),
            "simple": Q.to_json(), "key": _key(Q)}


def _perm_subgroup(n: int, text: str):
    if text.lstrip().startswith("["):
        perms = _json_arg(text)
        try:
            return [tuple(int(x) - 1 for x in p) for p in perms]
        except (TypeError, ValueError):
            raise ValidationError("--subgroup permutations must be lists of integers") from None
    return cmp.named_subgroup(n, text)


def cmd_phi_h(args) -> dict:
    G = _group(args.group)
    H = _perm_subgroup(args.n, args.subgroup)
    V = cmp.phi_h_rep(args.n, G, H)
    return V.to_json()


def _order(M, path: Optional[str]):
    if path:
        return ordered.order_from_json(M, _load_json(path))
    if M.realization is not None:
        return ordered.natural_order(M)
    return ordered.flat_order(M)


def cmd_ordered_check(args) -> dict:
    M = _load_monoid(args.monoid)
    OM = _order(M, args.order)
    v = ordered.validate_ordered(OM)
    systems = [[M.element_json(x) for x in s] for s in ordered.complete_orthogonal_systems(OM)] if v.ok else []
    return {"valid": v.ok, "complete": v.complete, "witness": v.witness,
            "orthogonal_systems": systems}


def cmd_respects_joins(args) -> dict:
    M = _load_monoid(args.monoid)
    V = _load_rep(M, args.rep)
    v = ordered.respects_joins(V, _order(M, args.order))
    return {"respects_joins": v.ok, "complete": v.complete, "witness": v.witness}


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fone-rep",
        description="Structure and representations of finite G-hat-linear monoids.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--max-dim", type=int, default=64,
                   help="largest dimension for isomorphism searches between simples (default 64)")
    p.add_argument("--max-subgroup-order", type=int, default=cmp.MAX_SUBGROUP_ORDER,
                   help="cap on |G_J| for subgroup enumeration (default 5040)")
    p.add_argument("--search-dim", type=int, default=3,
                   help="largest dimension searched for a non-semisimplicity witness (default 3)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="J-classes, flags, semisimplicity and simples")
    s.add_argument("monoid")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("make", help="emit a monoid JSON")
    s.add_argument("kind", choices=["in", "null", "path"])
    s.add_argument("--n", type=int)
    s.add_argument("--group", default="[]")
    s.add_argument("--quiver")
    s.set_defaults(func=cmd_make)

    s = sub.add_parser("check-rep", help="validate a representation")
    s.add_argument("monoid")
    s.add_argument("rep")
    s.set_defaults(func=cmd_check_rep)

    s = sub.add_parser("decompose", help="Krull-Schmidt and Jordan-Holder factors")
    s.add_argument("monoid")
    s.add_argument("rep")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("simples", help="all simple representations (left inductive monoids)")
    s.add_argument("monoid")
    s.set_defaults(func=cmd_simples)

    s = sub.add_parser("semisimple", help="semisimplicity verdict with witness")
    s.add_argument("monoid")
    s.set_defaults(func=cmd_semisimple)

    s = sub.add_parser("induce", help="induce a coset representation of a maximal subgroup")
    s.add_argument("monoid")
    s.add_argument("--idempotent", required=True, help="basis name or element JSON")
    s.add_argument("--subgroup", help="JSON file listing generators of H (default: trivial)")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("phi-h", help="the representation phi_H of I_n(G-hat)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--group", default="[]")
    s.add_argument("--subgroup", required=True, help="1, A<n>, S<n>, V4, or JSON list of permutations")
    s.set_defaults(func=cmd_phi_h)

    s = sub.add_parser("ordered-check", help="validate an ordered monoid")
    s.add_argument("monoid")
    s.add_argument("order", nargs="?")
    s.set_defaults(func=cmd_ordered_check)

    s = sub.add_parser("respects-joins", help="does a representation respect joins")
    s.add_argument("monoid")
    s.add_argument("rep")
    s.add_argument("--order")
    s.set_defaults(func=cmd_respects_joins)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except FoneRepError as exc:
        print(dump(exc.to_json()), file=sys.stderr)
        return exc.code
    print(dump(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
