"""Command-line front end.

    superweyl roots     --group gl:2,1 [--gamma=-1,-3,-2]
    superweyl dominant  --group p:3 --lambda 2,1,0 [--char 5]
    superweyl character --group gl:2,1 --lambda 1,0,0 [--force]
    superweyl dimension --group gl:2,1 --lambda 1,0,0
    superweyl clifford  --group q:2 --lambda 1,3 --field Q
    superweyl clifford  --gram "1,0;0,1" --field Fp:3
    superweyl parabolic --group gl:2,1

``--format machine`` prints one JSON document on stdout.  Exit status is 0 on
success, 1 on a domain error (the error class name is printed on stderr) and
2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .characters import (
    induced_dim_bound,
    periplectic_variants,
    super_character,
    weyl_dimension,
)
from .clifford import QuadraticSpace, classify, gram_from_weight
from .errors import SuperWeylError
from .fields import Rationals, parse_field
from .laurent import HalfWeight
from .rootdata import (
    GammaFunctional,
    admits_distinguished_parabolic,
    build_group,
    in_lambda_plus_p,
    is_dominant,
    polarize,
    weyl_elements,
)

COMMANDS = ("roots", "dominant", "character", "dimension", "clifford", "parabolic")


class UsageError(Exception):
    pass


def _parse_int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _parse_gram(text: str, mode) -> QuadraticSpace:
    rows = [r for r in text.split(";") if r.strip()]
    try:
        gram = tuple(tuple(Fraction(x) for x in row.split(",")) for row in rows)
        return QuadraticSpace(gram, mode)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad gram matrix {text!r}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superweyl", description=__doc__.split("\n")[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--group", help="gl:m,n | q:n | p:n")
    p.add_argument("--gamma", help="comma-separated rationals; default gamma(lambda_i) = -i")
    p.add_argument("--lambda", dest="lam", help="integer weight d_1,...,d_l")
    p.add_argument("--lambda-file", help="file with one integer weight per line")
    p.add_argument("--field", help="Q | Fp:<p> | closed:<char> (clifford only; default Q)")
    p.add_argument("--gram", help='explicit gram matrix, rows separated by ";" (clifford only)')
    p.add_argument("--char", type=int, default=0, help="characteristic for dominant (default 0)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--force", action="store_true", help="compute characters without a parabolic")
    return p


def _weights(args, rank):
    if args.lam is not None and args.lambda_file is not None:
        raise UsageError("give --lambda or --lambda-file, not both")
    if args.lam is not None:
        vecs = [_parse_int_vector(args.lam)]
    elif args.lambda_file is not None:
        try:
            lines = Path(args.lambda_file).read_text().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read {args.lambda_file}: {exc.strerror}")
        vecs = [_parse_int_vector(ln) for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    else:
        raise UsageError(f"{args.command} needs --lambda or --lambda-file")
    for v in vecs:
        if len(v) != rank:
            raise UsageError(f"weight {v} has {len(v)} entries, group rank is {rank}")
    return [HalfWeight.of(v) for v in vecs]


def _polarized(args):
    if not args.group:
        raise UsageError(f"{args.command} needs --group")
    datum = build_group(args.group)
    if args.gamma:
        try:
            gamma = GammaFunctional.parse(args.gamma)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse gamma {args.gamma!r}")
        if len(gamma.values) != datum.rank:
            raise UsageError(f"gamma needs {datum.rank} values")
    else:
        gamma = GammaFunctional.default(datum.rank)
    return polarize(datum, gamma)


def _coords(w: HalfWeight):
    return [int(c) if c.denominator == 1 else str(c) for c in w.coords]


def _root_text(w: HalfWeight) -> str:
    parts = []
    for i, c in enumerate(w.coords, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        parts.append(f"{sign}{coef}l{i}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def _gamma_str(pd):
    return ",".join(str(v) for v in pd.gamma.values)


# ---------------------------------------------------------------- commands


def cmd_roots(args):
    pd = _polarized(args)
    datum = pd.datum
    order = lambda rs: sorted(rs, key=lambda r: (-pd.gamma(r), r))  # noqa: E731
    doc = {
        "group": datum.name,
        "rank": datum.rank,
        "gamma": [str(v) for v in pd.gamma.values],
        "even_positive": [_coords(r) for r in order(pd.pos_even)],
        "even_negative": [_coords(r) for r in order(pd.neg_even)],
        "odd_positive": [{"root": _coords(r), "mult": pd.pos_odd[r]} for r in order(pd.pos_odd)],
        "odd_negative": [{"root": _coords(r), "mult": pd.neg_odd[r]} for r in order(pd.neg_odd)],
        "odd_cartan_dim": datum.odd_cartan_dim,
        "rho_even": _coords(pd.rho_even),
        "rho_odd": _coords(pd.rho_odd),
        "rho": _coords(pd.rho),
        "weyl_order": len(weyl_elements(pd)),
    }
    if args.format == "machine":
        return doc

    def line(label, rs, mults=None):
        items = [
            _root_text(r) + (f" (x{mults[r]})" if mults and mults[r] > 1 else "") for r in order(rs)
        ]
        return f"{label}: " + (", ".join(items) if items else "(none)")

    return "\n".join(
        [
            f"group: {datum.name}",
            f"gamma: ({_gamma_str(pd)})",
            line("even+", pd.pos_even),
            line("even-", pd.neg_even),
            line("odd+", pd.pos_odd, pd.pos_odd),
            line("odd-", pd.neg_odd, pd.neg_odd),
            f"dim h1: {datum.odd_cartan_dim}",
            f"rho_0: {pd.rho_even}",
            f"rho_1: {pd.rho_odd}",
            f"rho: {pd.rho}",
            f"|W|: {doc['weyl_order']}",
        ]
    )


def cmd_dominant(args):
    pd = _polarized(args)
    out = []
    for lam in _weights(args, pd.rank):
        rec = {"lambda": _coords(lam), "dominant": is_dominant(pd, lam)}
        if args.char:
            rec["char"] = args.char
            rec["restricted"] = in_lambda_plus_p(pd, lam, args.char)
        out.append(rec)
    return _batch(args, out, _dominant_text)


def _dominant_text(rec):
    s = f"lambda {tuple(rec['lambda'])}: dominant={'yes' if rec['dominant'] else 'no'}"
    if "restricted" in rec:
        s += f", in Lambda+_{rec['char']}={'yes' if rec['restricted'] else 'no'}"
    return s


def cmd_character(args):
    pd = _polarized(args)
    periplectic = pd.datum.name.startswith("P(")
    out = []
    for lam in _weights(args, pd.rank):
        report = super_character(pd, lam, force=args.force)
        rec = report.to_record()
        variants = periplectic_variants(pd, lam) if periplectic else []
        if variants:
            rec["odd_factor_variants"] = [v.to_record() for v in variants]
        out.append((rec, report, variants))
    if args.format == "machine":
        recs = [r for r, _, _ in out]
        return recs[0] if args.lam is not None else {"results": recs}
    blocks = []
    for _, rep, variants in out:
        lines = [
            f"lambda: {tuple(rep.lam.integer_coords())}",
            f"even character: {rep.even_char}",
            f"odd factor: {rep.odd_factor}",
            f"super character: {rep.super_char}",
            f"even dim: {rep.even_dim}",
            f"super dim: {rep.super_dim}",
            f"top weight ok: {'yes' if rep.top_weight_ok else 'no'}",
        ]
        if rep.euler_only:
            lines.append("note: Euler characteristic only")
        if variants:
            lines.append("odd factor variants (P(n)):")
            for v in variants:
                lines.append(
                    f"  {v.label}: {v.odd_factor} -> dim {v.super_dim}, "
                    f"maximal weight {'ok' if v.maximal_weight_ok else 'FAILS'}"
                )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def cmd_dimension(args):
    pd = _polarized(args)
    out = []
    for lam in _weights(args, pd.rank):
        report = super_character(pd, lam, force=args.force)
        wd = weyl_dimension(pd, lam)
        rec = {
            "lambda": _coords(lam),
            "even_dim": report.even_dim,
            "weyl_dimension_formula": int(wd) if wd.denominator == 1 else str(wd),
            "super_dim": report.super_dim,
            "odd_roots_positive": sum(pd.pos_odd.values()),
            "n_lambda": report.n_lambda,
            "induced_bound_ok": induced_dim_bound(pd, lam, report.n_lambda)
            if not report.euler_only
            else None,
        }
        out.append(rec)
    return _batch(args, out, _dimension_text)


def _dimension_text(rec):
    return (
        f"lambda {tuple(rec['lambda'])}: even dim {rec['even_dim']} "
        f"(Weyl formula {rec['weyl_dimension_formula']}), super dim {rec['super_dim']} "
        f"= {rec['even_dim']} * 2^{rec['odd_roots_positive']}"
    )


def cmd_clifford(args):
    mode = parse_field(args.field) if args.field else Rationals()
    if args.gram is not None:
        spaces = [(None, _parse_gram(args.gram, mode))]
    else:
        if not args.group:
            raise UsageError("clifford needs --group with --lambda, or --gram")
        datum = build_group(args.group)
        spaces = [(lam, gram_from_weight(datum, lam, mode)) for lam in _weights(args, datum.rank)]
    out = []
    for lam, qs in spaces:
        rec = classify(qs).to_record()
        rec = {"field": mode.name, **rec}
        if lam is not None:
            rec = {"lambda": _coords(lam), **rec}
        out.append(rec)
    if args.format == "machine":
        return out[0] if len(out) == 1 and args.lambda_file is None else {"results": out}
    return "\n\n".join(_clifford_text(r) for r in out)


def _clifford_text(rec):
    return "\n".join(f"{k}: {'-' if v is None else v}" for k, v in rec.items())


def cmd_parabolic(args):
    pd = _polarized(args)
    verdict = admits_distinguished_parabolic(pd)
    doc = {
        "group": pd.datum.name,
        "gamma": [str(v) for v in pd.gamma.values],
        "odd_cartan_dim": pd.datum.odd_cartan_dim,
        "distinguished_parabolic": verdict,
    }
    if args.format == "machine":
        return doc
    return f"{pd.datum.name} with gamma ({_gamma_str(pd)}): distinguished parabolic {'yes' if verdict else 'no'}"


def _batch(args, recs, text_fn):
    if args.format == "machine":
        return recs[0] if args.lam is not None else {"results": recs}
    return "\n".join(text_fn(r) for r in recs)


HANDLERS = {
    "roots": cmd_roots,
    "dominant": cmd_dominant,
    "character": cmd_character,
    "dimension": cmd_dimension,
    "clifford": cmd_clifford,
    "parabolic": cmd_parabolic,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=stderr)
        return 2
    except SuperWeylError as exc:
        print(f"error: {exc.tag}: {exc}", file=stderr)
        return 1
    if isinstance(result, str):
        stdout.write(result + "\n")
    else:
        stdout.write(json.dumps(result, separators=(",", ":")) + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
