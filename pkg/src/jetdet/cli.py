"""Command-line front end.

Exit status: 0 success or agreement, 1 mathematical disagreement, 2 usage
error, 3 resource cap.  Failures print one line on stderr starting with
``disagreement:``, ``usage-error:`` or ``cap-exceeded:``.
"""

from __future__ import annotations

import argparse
import sys

from .errors import CapExceeded, UsageError

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class Disagreement(Exception):
    pass


class Report:
    """Ordered records rendered either as aligned text or as tab-delimited key=value lines."""

    def __init__(self):
        self.records = []

    def add(self, kind, **fields):
        self.records.append((kind, fields))

    @staticmethod
    def _value(v):
        if v is None:
            return "-"
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, (list, tuple)):
            return ",".join(Report._value(x) for x in v)
        return str(v)

    def render(self, fmt):
        if fmt == "structured":
            lines = []
            for kind, fields in self.records:
                parts = [kind] + [f"{k}={self._value(v)}" for k, v in fields.items()]
                lines.append("\t".join(parts))
            return "\n".join(lines) + "\n"
        width = max((len(kind) for kind, _ in self.records), default=0)
        lines = []
        for kind, fields in self.records:
            body = "  ".join(f"{k}: {self._value(v)}" for k, v in fields.items())
            lines.append(f"{kind.ljust(width)}  {body}".rstrip())
        return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _caps(args):
    from .groebner import Caps

    return Caps(max_basis=args.max_basis, max_degree=args.max_degree, max_pairs=args.max_pairs)


def _require_slow(args, condition, what):
    if condition and not args.allow_slow:
        raise UsageError(f"{what} is a long-running case; pass --allow-slow")


def _spec(args):
    from .jets import JetIdealSpec

    for name in ("m", "n", "r", "k"):
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")
    return JetIdealSpec(args.m, args.n, args.r, args.k)


def _slow_ideal(spec):
    nvars = spec.m * spec.n * (spec.k + 1)
    big_gamma = (spec.m, spec.r, spec.k) == (2, 2, 2) and spec.n >= 6
    return big_gamma or (spec.r >= 3 and spec.k >= 1) or nvars > 30


# subcommands -----------------------------------------------------------------


def cmd_gen(args, report):
    from .jets import corrected_f_identity, gamma_basis, indices, labeled_jet_generators, verify_prop31

    if args.gamma:
        if args.n is None:
            raise UsageError("--n is required")
        for name, want in (("m", 2), ("r", 2), ("k", 2)):
            value = getattr(args, name)
            if value is not None and value != want:
                raise UsageError(f"--gamma is defined for m = r = k = 2 only (got --{name} {value})")
        G = gamma_basis(args.n)
        for lab in G.labeled():
            report.add("generator", family=lab.family, index=lab.index, lm=str(lab.poly.lm), poly=str(lab.poly))
        report.add("summary", n=args.n, count=len(G))
        if args.identities:
            results = verify_prop31(args.n, G)
            failed = []
            for family in ("d", "e", "f", "g"):
                mine = [r for r in results if r.family == family]
                ok = sum(r.ok for r in mine)
                report.add("identity", family=family, form="printed", holds=ok, total=len(mine))
                if ok != len(mine):
                    failed.append(family)
            fixed = [G.families["f"][i] == corrected_f_identity(G, i) for i in indices("f", args.n)]
            report.add("identity", family="f", form="corrected", holds=sum(fixed), total=len(fixed))
            if failed:
                raise Disagreement(f"printed identities fail for families {','.join(failed)}")
        return
    spec = _spec(args)
    gens = labeled_jet_generators(spec)
    for g in gens:
        rows, cols = g.index
        report.add("generator", family=g.family, rows=rows, cols=cols, poly=str(g.poly))
    report.add("summary", m=spec.m, n=spec.n, r=spec.r, k=spec.k, count=len(gens))


def cmd_groebner(args, report):
    from .groebner import CompletionStats, buchberger_completion, is_groebner_basis, leading_ideal
    from .jets import expected_lm, gamma_basis, jet_generators

    spec = _spec(args)
    _require_slow(args, _slow_ideal(spec), "this Groebner completion")
    stats = CompletionStats()
    basis = buchberger_completion(jet_generators(spec), _caps(args), stats=stats)
    L = leading_ideal(basis)
    report.add(
        "completion", m=spec.m, n=spec.n, r=spec.r, k=spec.k, basis=len(basis),
        reduced=stats.reduced, zero=stats.zero, leading_gens=len(L),
    )
    if not args.check_gamma:
        for mono in L.monomials():
            report.add("leading", monomial=str(mono))
        return
    if (spec.m, spec.r, spec.k) != (2, 2, 2):
        raise UsageError("--check-gamma needs m = r = k = 2")
    G = gamma_basis(spec.n)
    polys = G.polynomials()
    check = is_groebner_basis(polys, skip_coprime=True, jobs=args.jobs)
    lm_ok = all(lab.poly.lm == expected_lm(G.table, lab.family, lab.index) for lab in G.labeled())
    match = leading_ideal(polys) == L
    witness = None
    if check.witness:
        i, j, rem = check.witness
        witness = f"{G.labeled()[i].family}{G.labeled()[i].index}|{G.labeled()[j].family}{G.labeled()[j].index}"
    report.add(
        "gamma", n=spec.n, size=len(polys), is_groebner=check.ok, pairs_checked=check.checked,
        pairs_skipped=check.skipped, lm_table=lm_ok, leading_ideal_match=match, witness=witness,
    )
    if not (check.ok and lm_ok and match):
        raise Disagreement(f"explicit basis check failed for n={spec.n}")


def cmd_facets(args, report):
    from .srcomplex import delta0, enumerate_facets_bruteforce, enumerate_facets_families

    n = args.n
    if n < 2:
        raise UsageError("--n must be >= 2")
    _require_slow(args, n >= 6 and args.mode != "families", "brute-force facets for n >= 6")
    C = delta0(n)
    fam = enumerate_facets_families(n)
    if args.mode == "families":
        for p, names in fam:
            report.add("facet", family=p.family, params=p.params, vertices=names)
        report.add("summary", n=n, facets=len(fam))
        return
    brute = enumerate_facets_bruteforce(C, max_universe=args.max_universe)
    if args.mode == "brute":
        for mask in sorted(brute, reverse=True):
            report.add("facet", family=None, params=None, vertices=C.names(mask))
        report.add("summary", n=n, facets=len(brute))
        return
    masks = [C.mask(names) for _, names in fam]
    sizes = sorted({len(names) for _, names in fam} | {bin(b).count("1") for b in brute})
    equal = set(masks) == set(brute)
    disjoint = len(set(masks)) == len(masks)
    pure = sizes == [3 * n + 3]
    report.add(
        "cross_check", n=n, brute=len(brute), families=len(fam), equal=equal, disjoint=disjoint,
        facet_sizes=sizes, expected_size=3 * n + 3, expected_count=n ** 3,
    )
    if not (equal and disjoint and pure and len(brute) == n ** 3):
        raise Disagreement(f"facet families differ from brute force at n={n}")


def cmd_shelling(args, report):
    from .shelling import expected_h, expected_h_by_family, h_vector, star_ordered_delta0, verify_shelling

    n = args.n
    if n < 2:
        raise UsageError("--n must be >= 2")
    order = star_ordered_delta0(n)
    verdict = verify_shelling(order)
    report.add("shelling", n=n, facets=len(order.facets), verdict="valid" if verdict else "invalid",
               witness=verdict.witness)
    if not verdict:
        raise Disagreement(f"*-ordering is not a shelling at n={n}: {verdict.reason}")
    H = h_vector(order, check=False)
    expected = expected_h(n)
    report.add("hvector", h=H.h, expected=expected, match=H.h == expected)
    closed = expected_h_by_family(n)
    for tag in ("A", "C", "D", "E", "F"):
        got = H.by_family[tag]
        want = [closed[tag][j] for j in (1, 2, 3)]
        report.add("family", tag=tag, h=got, closed_form_h1_h3=want, match=got[1:4] == want)
    if args.figure:
        from .plotting import plot_h_by_family

        plot_h_by_family(H.by_family, n, args.figure)
    if H.h != expected:
        raise Disagreement(f"h-vector {H.h} differs from {expected}")


def _series_record(report, series):
    report.add("series", numerator=list(series.numerator), denom_pow=series.denom_pow, shift=series.shift)


def cmd_hilbert(args, report):
    from .groebner import buchberger_completion, leading_ideal
    from .hilbert import closed_form_conca_herzog, closed_form_jets, hilbert_function_oracle, series_from_shelling
    from .jets import jet_generators

    src = args.source
    series = None
    values = None
    if src == "shelling":
        from .shelling import h_vector, star_ordered_delta0

        H = h_vector(star_ordered_delta0(args.n))
        series = series_from_shelling(H.h, 3 * args.n + 3)
    elif src == "eq1":
        if None in (args.m, args.n, args.r):
            raise UsageError("eq1 needs --m --n --r (r = minor size)")
        series = closed_form_conca_herzog(args.m, args.n, args.r - 1)
    elif src == "eq2":
        if None in (args.m, args.n):
            raise UsageError("eq2 needs --m --n")
        series = closed_form_jets("eq2", args.n, m=args.m)
    elif src in ("eq3", "thm61"):
        if args.n is None:
            raise UsageError(f"{src} needs --n")
        series = closed_form_jets(src, args.n)
    elif src == "oracle":
        spec = _spec(args)
        _require_slow(args, _slow_ideal(spec), "this Groebner completion")
        L = leading_ideal(buchberger_completion(jet_generators(spec), _caps(args)))
        D = 10 if args.maxdeg is None else args.maxdeg
        values = hilbert_function_oracle(L, D).values
    if series is not None:
        _series_record(report, series)
        if args.maxdeg is not None:
            values = series.expand(args.maxdeg)
    if values is not None:
        for d, v in enumerate(values):
            report.add("hf", deg=d, value=v)
        if args.figure:
            from .plotting import plot_hilbert_function

            plot_hilbert_function(values, None, f"Hilbert function ({src})", args.figure)


def _evidence_label(m, n, r, k):
    if k == 0:
        return "classical"
    if r == 2 and k == 1:
        return "eq2"
    if (m, r, k) == (3, 3, 1):
        return "eq3"
    if (m, r, k) == (2, 2, 2):
        return "thm61"
    return "exploratory"


def cmd_conjecture(args, report):
    from .hilbert import check_conjecture

    spec = _spec(args)
    if spec.r < 1:
        raise UsageError("--r must be >= 1")
    _require_slow(args, _slow_ideal(spec), "this conjecture instance")
    label = _evidence_label(spec.m, spec.n, spec.r, spec.k)
    rep = check_conjecture(spec.m, spec.n, spec.r, spec.k, args.maxdeg, _caps(args))
    report.add(
        "conjecture", m=rep.m, n=rep.n, r=rep.r, k=rep.k, maxdeg=rep.D, evidence=label,
        status=rep.status, basis=rep.basis_size, leading_gens=rep.leading_gens, divergence=rep.divergence,
        note=rep.note or None,
    )
    for d, want in enumerate(rep.predicted):
        got = rep.hf[d] if d < len(rep.hf) else None
        report.add("hf", deg=d, computed=got, predicted=want, agree=got == want)
    if args.figure and rep.hf:
        from .plotting import plot_hilbert_function

        plot_hilbert_function(rep.hf, rep.predicted, f"({rep.m},{rep.n},{rep.r},{rep.k}) vs power of classical series",
                              args.figure)
    if rep.status == "capped":
        raise CapExceeded(rep.note)
    if rep.status == "disagree":
        raise Disagreement(f"Hilbert functions diverge at degree {rep.divergence} ({label})")


# parser ----------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--figure", help="render a figure to this path (shelling, hilbert, conjecture)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--allow-slow", action="store_true")
    common.add_argument("--max-basis", type=int, default=2000)
    common.add_argument("--max-degree", type=int, default=40)
    common.add_argument("--max-pairs", type=int, default=200_000)
    common.add_argument("--max-universe", type=int, default=64)

    def jet_params(p, required=False):
        for name in ("m", "n", "r", "k"):
            p.add_argument(f"--{name}", type=int, required=required)

    parser = _Parser(prog="jetdet", description="Jet ideals of determinantal varieties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="emit jet-ideal generators or the explicit 2 x n basis")
    jet_params(p)
    p.add_argument("--gamma", action="store_true")
    p.add_argument("--identities", action="store_true", help="with --gamma: check the membership identities")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("groebner", parents=[common], help="Buchberger completion and explicit-basis checks")
    jet_params(p)
    p.add_argument("--check-gamma", action="store_true")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("facets", parents=[common], help="facets of Delta_0")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("families", "brute", "cross-check"), default="families")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("shelling", parents=[common], help="verify the *-ordering and report h-vectors")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_shelling)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series from a chosen source")
    p.add_argument("--source", choices=("shelling", "eq1", "eq2", "eq3", "thm61", "oracle"), required=True)
    jet_params(p)
    p.add_argument("--maxdeg", type=int)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("conjecture", parents=[common], help="compare a jet ideal with the power conjecture")
    jet_params(p, required=True)
    p.add_argument("--maxdeg", type=int, required=True)
    p.set_defaults(func=cmd_conjecture)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    report = Report()
    args = None
    try:
        args = build_parser().parse_args(argv)
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        args.func(args, report)
        status = EXIT_OK
    except UsageError as exc:
        stderr.write(f"usage-error: {_one_line(exc)}\n")
        return EXIT_USAGE
    except CapExceeded as exc:
        status = EXIT_CAP
        stderr.write(f"cap-exceeded: {_one_line(exc)}\n")
    except Disagreement as exc:
        status = EXIT_DISAGREE
        stderr.write(f"disagreement: {_one_line(exc)}\n")
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def _one_line(exc):
    return " ".join(str(exc).split())


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
