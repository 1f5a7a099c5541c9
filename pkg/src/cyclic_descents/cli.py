"""Command line front end.

Subcommands: map, invert, stats, verify, tabulate, sample, clt.  All
configuration is taken from flags so identical invocations (including the
seed) produce byte-identical output.  Exit codes: 0 success, 1 invariant
violation, 2 usage or input error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict

from .classic import phi_classic
from .colored import ColoredPermutation, colored_phi, colored_psi, colored_stats
from .cycles import CycleNotation, from_cycles, to_canonical_cycles
from .domains import BudgetError, DomainSpec, make_rng, sample
from .lab import exact_distribution, normality_diagnostics, refined_descent_table
from .permutations import SignedPermutation
from .statistics import descent_set, stats
from .transfer import (TransferTrace, capital_phi, capital_psi_D,
                       capital_psi_Dbar, phi_plus, psi_plus)
from .verify import CLAIMS

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"syntax error at position {pos}: {message}")
        self.pos = pos


def _skip_ws(s, i):
    while i < len(s) and s[i].isspace():
        i += 1
    return i


def _scan_int(s, i):
    j = i
    if j < len(s) and s[j] in "+-":
        j += 1
    k = j
    while k < len(s) and s[k].isdigit():
        k += 1
    if k == j:
        raise ParseError("expected integer", i)
    return int(s[i:k]), k


def _scan_entry(s, i):
    """One entry: a signed integer, optionally followed by ^color."""
    v, i = _scan_int(s, i)
    c = None
    if i < len(s) and s[i] == "^":
        c, i = _scan_int(s, i + 1)
        if c < 0:
            raise ParseError("negative color", i)
    return v, c, i


def _scan_group(s, i, close):
    out = []
    i = _skip_ws(s, i)
    while True:
        v, c, i = _scan_entry(s, i)
        out.append((v, c))
        i = _skip_ws(s, i)
        if i < len(s) and s[i] == ",":
            i = _skip_ws(s, i + 1)
            continue
        if i < len(s) and s[i] == close:
            return out, i + 1
        raise ParseError(f"expected ',' or '{close}'", i)


def parse_permutation_text(s, r=None):
    """Parse `[v1,...,vn]` or `(..)(..)` text.  Returns a SignedPermutation,
    a CycleNotation, or, when any entry carries a ^color or r is given, a
    ColoredPermutation.  Raises ParseError on bad syntax and ValueError on a
    semantic problem such as a repeated magnitude."""
    i = _skip_ws(s, 0)
    if i == len(s):
        raise ParseError("empty input", i)
    if s[i] == "[":
        entries, i = _scan_group(s, i + 1, "]")
        if _skip_ws(s, i) != len(s):
            raise ParseError("trailing input", i)
        colored = r is not None or any(c is not None for c in (c for _, c in entries))
        if colored:
            mod = r if r is not None else max((c or 0) for _, c in entries) + 1
            omega = tuple(v for v, _ in entries)
            if any(v <= 0 for v in omega):
                raise ValueError("colored entries must be positive")
            tau = tuple((c or 0) for _, c in entries)
            return ColoredPermutation(len(entries), mod, omega, tau)
        return SignedPermutation([v for v, _ in entries])
    if s[i] == "(":
        groups = []
        while i < len(s) and s[i] == "(":
            g, i = _scan_group(s, i + 1, ")")
            if any(c is not None for _, c in g):
                raise ParseError("colors are only allowed in one-line notation", i)
            groups.append([v for v, _ in g])
            i = _skip_ws(s, i)
        if i != len(s):
            raise ParseError("trailing input", i)
        n = sum(len(g) for g in groups)
        return CycleNotation(n, groups)
    raise ParseError("expected '[' or '('", i)


def _as_permutation(x):
    return from_cycles(x) if isinstance(x, CycleNotation) else x


def render_cycles(sigma, pretty=False):
    c = to_canonical_cycles(sigma)
    if not pretty:
        return str(c)
    kept = [cy for cy in c if len(cy) > 1]
    return "".join(str(cy) for cy in kept) if kept else "()"


_MAP_FNS = {
    "phi": lambda p, trace: phi_plus(p, trace=trace),
    "Phi": lambda p, trace: capital_phi(p),
    "psi": lambda p, trace: psi_plus(p, trace=trace),
    "PsiD": lambda p, trace: capital_psi_D(p),
    "PsiDbar": lambda p, trace: capital_psi_Dbar(p),
    "phiS": lambda p, trace: phi_classic(p, check=trace is not None),
}


def _emit(cfg, payload, text_lines, csv_rows):
    """Write one report in the configured format.  payload is the JSON
    object, text_lines the text rendering, csv_rows (header, rows)."""
    out = sys.stdout
    if cfg.format == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif cfg.format == "csv":
        head, rows = csv_rows
        w = csv.writer(out, lineterminator="\n")
        w.writerow(head)
        w.writerows(rows)
    else:
        for line in text_lines:
            out.write(line + "\n")


def _cmd_map(cfg):
    fn = cfg.fn
    if fn in ("PhiColored", "PsiColored"):
        if cfg.r is None:
            print("colored maps need --r", file=sys.stderr)
            return EXIT_USAGE
        p = parse_permutation_text(cfg.text, r=cfg.r)
        if not isinstance(p, ColoredPermutation):
            raise ValueError("colored map needs a colored one-line input")
        out = colored_phi(p) if fn == "PhiColored" else colored_psi(p, cfg.color or 0)
        payload = {"fn": fn, "input": str(p), "output": str(out)}
        return _finish_map(cfg, payload, str(out))
    if fn not in _MAP_FNS:
        print(f"unknown --fn {fn}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.instrument and fn not in ("phi", "psi", "phiS"):
        print("--instrument applies to phi, psi and phiS only", file=sys.stderr)
        return EXIT_USAGE
    p = _as_permutation(parse_permutation_text(cfg.text))
    trace = TransferTrace() if cfg.instrument else None
    out = _MAP_FNS[fn](p, trace)
    rendered = render_cycles(out, cfg.pretty) if cfg.cycles else str(out)
    payload = {"fn": fn, "input": str(p), "output": rendered}
    if trace is not None and fn != "phiS":
        payload["iterations"] = len(trace.iterations)
        payload["swaps"] = trace.swap_count()
    return _finish_map(cfg, payload, rendered)


def _finish_map(cfg, payload, rendered):
    lines = [rendered]
    if "swaps" in payload:
        lines.append(f"iterations={payload['iterations']} swaps={payload['swaps']}")
    _emit(cfg, payload,
          lines,
          (list(payload), [list(payload.values())]))
    return EXIT_PASS


def _cmd_stats(cfg):
    p = parse_permutation_text(cfg.text, r=cfg.r)
    if isinstance(p, ColoredPermutation):
        des, maj, col, fmaj = colored_stats(p)
        payload = {"des": des, "maj": maj, "col": col, "fmaj": fmaj}
    else:
        p = _as_permutation(p)
        rec = stats(p)
        payload = {"des": rec.des, "maj": rec.maj, "neg": rec.neg,
                   "fmaj": rec.fmaj,
                   "descents": sorted(descent_set(p).members)}
    line = " ".join(f"{k}={v}" for k, v in payload.items() if k != "descents")
    _emit(cfg, payload, [line],
          (list(payload), [[json.dumps(v) if isinstance(v, list) else v
                            for v in payload.values()]]))
    return EXIT_PASS


def _cmd_verify(cfg):
    kw = {}
    claim = cfg.claim
    if claim == "phi-descents":
        kw = {"n": cfg.n, "shard": cfg.shard, "threads": cfg.threads}
    elif claim in ("bijection-D", "bijection-Dbar", "inverses",
                   "corollary-counts", "elizalde-equivalence"):
        kw = {"n": cfg.n}
    elif claim == "colored":
        kw = {"n": cfg.n, "r": cfg.r if cfg.r is not None else 2}
    elif claim == "moments":
        kw = {"n_lo": cfg.n, "n_hi": cfg.n} if cfg.n is not None else {}
    elif claim == "stat-gaps":
        kw = {"n_hi": cfg.n} if cfg.n is not None else {}
    elif claim == "order-swap-properties":
        kw = {"count": cfg.samples, "seed": cfg.seed}
    if "n" in kw and kw["n"] is None:
        print(f"--claim {claim} needs --n", file=sys.stderr)
        return EXIT_USAGE
    res = CLAIMS[claim](**kw)
    payload = {"claim": res.claim, "params": {k: str(v) for k, v in res.params.items()},
               "passed": res.passed, "checked": res.checked,
               "details": res.details,
               "counterexamples": [str(f) for f in res.failures]}
    lines = [res.line()]
    lines += [f"  counterexample: {f}" for f in res.failures]
    _emit(cfg, payload, lines,
          (["claim", "passed", "checked", "details"],
           [[res.claim, res.passed, res.checked, res.details]]))
    return EXIT_PASS if res.passed else EXIT_VIOLATION


def _domain_from(cfg):
    if cfg.domain is None or cfg.n is None:
        raise ValueError("need --domain and --n")
    if cfg.domain == "CSnr":
        return DomainSpec("CSnr", cfg.n, r=cfg.r if cfg.r is not None else 2,
                          color_filter=cfg.color)
    return DomainSpec(cfg.domain, cfg.n)


def _cmd_tabulate(cfg):
    d = _domain_from(cfg)
    if cfg.refined:
        t = refined_descent_table(d, allow_big=cfg.allow_big)
        items = sorted(((tuple(sorted(k.members)), v) for k, v in t.counts.items()))
        payload = {"domain": d.kind, "n": d.n, "stat": "descent-set",
                   "counts": {" ".join(map(str, k)): str(v) for k, v in items}}
        rows = [[" ".join(map(str, k)), str(v)] for k, v in items]
        lines = [f"{' '.join(map(str, k)) or '-':>16}  {v}" for k, v in items]
        _emit(cfg, payload, lines, (["descents", "count"], rows))
        return EXIT_PASS
    t = exact_distribution(d, cfg.stat, allow_big=cfg.allow_big)
    items = sorted(t.counts.items())
    payload = {"domain": d.kind, "n": d.n, "stat": cfg.stat,
               "counts": {str(k): str(v) for k, v in items}}
    _emit(cfg, payload,
          [f"{k:>6}  {v}" for k, v in items],
          (["value", "count"], [[k, str(v)] for k, v in items]))
    return EXIT_PASS


def _cmd_sample(cfg):
    d = _domain_from(cfg)
    rng = make_rng(cfg.seed)
    xs = [str(sample(d, rng)) for _ in range(cfg.samples)]
    payload = {"domain": d.kind, "n": d.n, "seed": cfg.seed, "samples": xs}
    _emit(cfg, payload, xs,
          (["index", "permutation"], list(enumerate(xs))))
    return EXIT_PASS


def _cmd_clt(cfg):
    if cfg.domain is None or cfg.n is None:
        raise ValueError("need --domain and --n")
    rep = normality_diagnostics(cfg.domain, cfg.stat, cfg.n, cfg.samples, cfg.seed)
    payload = asdict(rep)
    _emit(cfg, payload,
          [f"{k}={v}" for k, v in payload.items()],
          (list(payload), [list(payload.values())]))
    return EXIT_PASS


def _shard_pair(s):
    i, t = s.split("/")
    i, t = int(i), int(t)
    if not 0 <= i < t:
        raise argparse.ArgumentTypeError(f"bad shard {s}")
    return i, t


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cycdes",
        description="Descent-preserving transfer between cyclic and linear "
                    "signed permutations, with exact tables and sampling.")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def common(p, text=False):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        if text:
            p.add_argument("text", help="permutation in one-line or cycle notation")

    p = sub.add_parser("map", help="apply a transfer map to one permutation")
    common(p, text=True)
    p.add_argument("--fn", required=True,
                   choices=("phi", "Phi", "psi", "PsiD", "PsiDbar", "phiS",
                            "PhiColored", "PsiColored"))
    p.add_argument("--r", type=int)
    p.add_argument("--color", type=int)
    p.add_argument("--instrument", action="store_true")
    p.add_argument("--cycles", action="store_true", help="render output as cycles")
    p.add_argument("--pretty", action="store_true", help="omit length-1 cycles in text")
    p.set_defaults(run=_cmd_map)

    p = sub.add_parser("invert", help="apply an inverse-direction map")
    common(p, text=True)
    p.add_argument("--fn", required=True,
                   choices=("psi", "PsiD", "PsiDbar", "PsiColored", "phi",
                            "Phi", "phiS", "PhiColored"))
    p.add_argument("--r", type=int)
    p.add_argument("--color", type=int)
    p.add_argument("--instrument", action="store_true")
    p.add_argument("--cycles", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(run=_cmd_map)

    p = sub.add_parser("stats", help="descent statistics of one permutation")
    common(p, text=True)
    p.add_argument("--r", type=int)
    p.set_defaults(run=_cmd_stats)

    p = sub.add_parser("verify", help="run one claim suite")
    common(p)
    p.add_argument("--claim", required=True, choices=sorted(CLAIMS))
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shard", type=_shard_pair, metavar="i/t")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("tabulate", help="exact statistic distribution")
    common(p)
    p.add_argument("--domain", required=True,
                   choices=("B", "D", "CB", "CD", "CDbar", "S", "CS", "CSnr"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=("des", "maj", "neg", "fmaj", "col"), default="des")
    p.add_argument("--r", type=int)
    p.add_argument("--color", type=int)
    p.add_argument("--refined", action="store_true",
                   help="full descent-set table instead of one statistic")
    p.add_argument("--allow-big", action="store_true")
    p.set_defaults(run=_cmd_tabulate)

    p = sub.add_parser("sample", help="draw uniform elements")
    common(p)
    p.add_argument("--domain", required=True,
                   choices=("B", "D", "CB", "CD", "CDbar", "S", "CS", "CSnr"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--color", type=int)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=_cmd_sample)

    p = sub.add_parser("clt", help="sampled normality diagnostics")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--domain", required=True, choices=("CB", "CD", "CDbar"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=("des", "fmaj"), default="des")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=_cmd_clt)

    return ap


def main(argv=None):
    ap = build_parser()
    cfg = ap.parse_args(argv)
    for name in ("r", "color", "n", "shard", "text", "domain"):
        if not hasattr(cfg, name):
            setattr(cfg, name, None)
    for name, default in (("samples", 10000), ("seed", 0), ("threads", 1),
                          ("instrument", False), ("cycles", False),
                          ("pretty", False), ("refined", False),
                          ("allow_big", False), ("stat", "des"), ("claim", None),
                          ("fn", None)):
        if not hasattr(cfg, name):
            setattr(cfg, name, default)
    try:
        return cfg.run(cfg)
    except BudgetError as e:
        print(f"budget: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
