"""Command line: ``groupalg report|verify|table``.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Sequence

from . import expected, grp
from .algebra import GroupAlgebra, center, ideal_power, omega_N
from .gf import is_prime, make_field, prime_power
from .grp import Group
from .unitgrp import ENUMERATION_CAP, modular_report
from .wedderburn import (
    abelianization_consistency,
    central_idempotents,
    class_fixing_residues,
    f_conjugacy,
    idempotent_identities,
    l_value,
    shape_from_decomposition,
    unit_group_order,
    unit_group_structure,
)

NO_CLAIM = "not computed (no claim made for this group)"
OVER_CAP = f"not computed (|V| exceeds the enumeration cap {ENUMERATION_CAP})"


class UsageError(Exception):
    pass


def _check(name: str, expected_value: Any, computed: Any) -> dict:
    return {"name": name, "expected": expected_value, "computed": computed, "pass": expected_value == computed}


def _group(k: int | None, group_file: str | None) -> tuple[Group, str, int | None]:
    if group_file:
        try:
            G = grp.load_table_file(group_file)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read group file: {exc}") from exc
        return G, group_file, None
    if k not in expected.SEMISIMPLE:
        raise UsageError("--k must be 4 or 5 (or pass --any-group FILE)")
    return grp.qd_group(k), f"QD_{2**k}", k


def _field(p: int, n: int):
    if not is_prime(p):
        raise UsageError(f"p = {p} is not prime")
    if n < 1:
        raise UsageError("n must be >= 1")
    try:
        return make_field(p, n)
    except (ValueError, OverflowError) as exc:
        raise UsageError(str(exc)) from exc


# -- modular ------------------------------------------------------------------------


def _modular(A: GroupAlgebra, k: int | None, seed: int) -> tuple[dict, list[dict]]:
    q = A.field.q
    rep = modular_report(A, seed)
    cert = rep.exponent_certificate
    unenumerated = NO_CLAIM if k == 5 else OVER_CAP
    result = {
        "dim_J": rep.dim_J,
        "order_V": str(rep.order_V),
        "exponent": rep.exponent,
        "exponent_certificate": cert.describe(),
        "exponent_witness": repr(cert.witness) if cert.witness is not None else None,
        "radical_nilpotency_index": cert.radical_nilpotency_index,
        "unit_quotient": rep.quotient_structure,
        "enumerated_exponent": rep.enumerated_exponent if rep.enumerated else unenumerated,
        "nilpotency_class": rep.nilpotency_class if rep.enumerated else unenumerated,
        "derived_in_center": rep.derived_in_center if rep.enumerated else unenumerated,
        "centrally_metabelian": rep.second_derived_central if rep.enumerated else unenumerated,
    }
    checks = [
        _check("|V| = q^dim J", str(q**rep.dim_J), result["order_V"]),
        _check("U/V cyclic of order q-1", f"C_{q - 1}", rep.quotient_structure),
        _check("exponent bound certified by a witness", True, cert.lower_bound_confirmed),
    ]
    if rep.enumerated:
        checks.append(_check("exponent: certificate = enumeration", rep.exponent, rep.enumerated_exponent))
    if k is None:
        checks.insert(0, _check("dim J = |G| - 1", A.dim - 1, rep.dim_J))
        if rep.enumerated:
            checks.append(_check("V'' central in V", True, rep.second_derived_central))
        return result, checks

    exp = expected.MODULAR[k]
    G = A.group
    N = grp.subgroup(G, [G.index(s) for s in exp.normal_subgroup])
    W = omega_N(A, N)
    result["dim_omega_normal"] = W.rank
    result["center_dim"] = center(A).rank
    checks = [
        _check("dim J", exp.dim_J, rep.dim_J),
        *checks,
        _check("exponent of V", exp.exponent, rep.exponent),
        _check(f"dim omega(<{','.join(exp.normal_subgroup)}>)", exp.dim_omega_normal, W.rank),
        _check("dim center = number of classes", exp.center_dim, result["center_dim"]),
    ]
    if exp.omega_normal_vanishing_power is not None:
        t = exp.omega_normal_vanishing_power
        vanishes = ideal_power(W, t).rank == 0
        result["omega_normal_power_vanishes"] = {str(t): vanishes}
        checks.append(_check(f"omega(N)^{t} = 0", True, vanishes))
    if rep.enumerated:
        checks += [
            _check("nilpotency class of V", exp.nilpotency_class, rep.nilpotency_class),
            _check("V' contained in the center of A", exp.derived_in_center, rep.derived_in_center),
            _check("V centrally metabelian (V'' central in V)", exp.centrally_metabelian, rep.second_derived_central),
        ]
    return result, checks


# -- semisimple ----------------------------------------------------------------------


def _semisimple(A: GroupAlgebra, k: int | None, seed: int) -> tuple[dict, list[dict]]:
    G, q = A.group, A.field.q
    part = f_conjugacy(G, A.field.p, q)
    dec = central_idempotents(A, seed)
    shape = shape_from_decomposition(dec)
    l = l_value(q, part.m, class_fixing_residues(G, part.m))
    lcm = math.lcm(*(d for _, d in shape.components))
    n_classes = len(grp.conjugacy_classes(G))
    result = {
        "m": part.m,
        "q_mod_m": q % part.m,
        "T": list(part.T),
        "c": part.c,
        "idempotent_count": len(dec),
        "components": [{"n": n, "d": d, "count": c} for n, d, c in shape.counts()],
        "S": list(shape.S),
        "shape": str(shape),
        "structure": unit_group_structure(shape, q),
        "unit_group_order": str(unit_group_order(shape, q)),
        "l": l,
    }
    ident = idempotent_identities(A, dec)
    checks = [
        _check("Witt-Berman count = idempotent count", part.c, len(dec)),
        _check("sum n^2 d = |G|", G.size, shape.dimension),
        _check("sum d = number of conjugacy classes", n_classes, shape.center_dimension),
        _check("l = lcm of the degrees d_i", lcm, l),
        _check("commutative components match F_q[G/G']", True, abelianization_consistency(A, seed)),
        _check("idempotents orthogonal, complete and central", True, all(ident.values())),
    ]
    if k is not None:
        exp = expected.semisimple_case(k, q)
        checks = [
            _check("T", list(exp.T), result["T"]),
            _check("c", exp.c, part.c),
            _check("S", list(exp.S), result["S"]),
            _check("components", [list(c) for c in exp.components], [list(c) for c in shape.components]),
            _check("l", exp.l, l),
            *checks,
        ]
    return result, checks


def build_report(p: int, n: int, k: int | None = None, group_file: str | None = None, seed: int = 0) -> dict:
    F = _field(p, n)
    G, label, k = _group(k, group_file)
    A = GroupAlgebra(F, G)
    if G.size % p == 0:
        if not grp.is_p_group(G, p):
            raise UsageError("p divides |G| but G is not a p-group: mixed case is not supported")
        regime = "modular"
        result, checks = _modular(A, k, seed)
    else:
        regime = "semisimple"
        result, checks = _semisimple(A, k, seed)
    return {
        "input": {"p": p, "n": n, "q": F.q, "k": k, "group": label, "order": G.size, "seed": seed},
        "regime": regime,
        "result": result,
        "checks": checks,
    }


def table_rows(k: int, qs: Sequence[int], seed: int = 0) -> list[dict]:
    if k not in expected.SEMISIMPLE:
        raise UsageError("--k must be 4 or 5")
    for q in qs:
        if q % 2 == 0:
            raise UsageError(f"q = {q} is even: F_q[QD] is not semisimple")
        try:
            prime_power(q)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    G = grp.qd_group(k)
    m = 2 ** (k - 1)
    rows = []
    for q in qs:
        p, _ = prime_power(q)
        A = GroupAlgebra(make_field(*prime_power(q)), G)
        part = f_conjugacy(G, p, q)
        shape = shape_from_decomposition(central_idempotents(A, seed))
        exp = expected.semisimple_case(k, q)
        row = {
            "q": q,
            "q_mod_m": q % m,
            "T": list(part.T),
            "l": l_value(q, m),
            "c": part.c,
            "S": list(shape.S),
            "structure": unit_group_structure(shape, q),
        }
        row["matches"] = (tuple(row["T"]), row["c"], tuple(row["S"]), row["l"]) == (exp.T, exp.c, exp.S, exp.l)
        rows.append(row)
    return rows


# -- output -------------------------------------------------------------------------


def to_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _fmt(v: Any) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    if isinstance(v, dict):
        return " ".join(f"{k}={_fmt(x)}" for k, x in v.items())
    return str(v)


def _csv(header: Sequence[str], rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(r[h]) for h in header])
    return buf.getvalue()


def _checks_text(checks: Sequence[dict]) -> str:
    width = max((len(c["name"]) for c in checks), default=0)
    return "\n".join(
        f"  [{'PASS' if c['pass'] else 'FAIL'}] {c['name']:<{width}}  expected {_fmt(c['expected'])}, computed {_fmt(c['computed'])}"
        for c in checks
    )


def format_report(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(rep)
    if fmt == "csv":
        return _csv(["name", "expected", "computed", "pass"], rep["checks"])
    inp = rep["input"]
    lines = [f"F_{inp['q']}[{inp['group']}]  ({rep['regime']})"]
    for key, val in rep["result"].items():
        if key == "components":
            val = [(c["n"], c["d"], c["count"]) for c in val]
        lines.append(f"  {key}: {_fmt(val)}")
    lines.append("checks:")
    lines.append(_checks_text(rep["checks"]))
    return "\n".join(lines) + "\n"


TABLE_HEADER = ["q", "q_mod_m", "T", "l", "c", "S", "structure", "matches"]


def format_table(rows: Sequence[dict], fmt: str) -> str:
    if fmt == "json":
        return to_json(list(rows))
    if fmt == "csv":
        return _csv(TABLE_HEADER, rows)
    cells = [TABLE_HEADER] + [[_fmt(r[h]) for h in TABLE_HEADER] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(TABLE_HEADER))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells) + "\n"


# -- entry point -----------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="groupalg", description="Unit groups of F_q[QD_16], F_q[QD_32] and other small group algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("report", "verify"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--n", type=int, default=1)
        sp.add_argument("--k", type=int)
        sp.add_argument("--any-group", metavar="FILE")
    tp = sub.add_parser("table", parents=[common])
    tp.add_argument("--k", type=int, required=True)
    tp.add_argument("--q", type=int, nargs="*", default=[])
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if args.seed < 0 or args.seed >= 2**64:
        print("error: --seed must be a u64", file=sys.stderr)
        return 2
    try:
        if args.command == "table":
            rows = table_rows(args.k, args.q, args.seed)
            sys.stdout.write(format_table(rows, args.format))
            return 0 if all(r["matches"] for r in rows) else 1
        rep = build_report(args.p, args.n, args.k, args.any_group, args.seed)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(format_report(rep, args.format))
    if args.command == "verify":
        failed = [c for c in rep["checks"] if not c["pass"]]
        for c in failed:
            print(f"FAILED: {c['name']}: expected {_fmt(c['expected'])}, computed {_fmt(c['computed'])}", file=sys.stderr)
        return 1 if failed else 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
