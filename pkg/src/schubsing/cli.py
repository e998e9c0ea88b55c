"""Command-line front end.

Words are comma-separated 1-based simple indices (``--word 1,2,1``; the
empty string is the identity).  Simple roots follow the numbering of
:mod:`schubsing.rootsys`; in particular for B2, 1 is the short simple root
and 2 the long one.

Exit status: 0 on success, 2 on usage errors, 3 on domain errors (the error
class name is printed on standard error).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExceeded, SchubertError, TangentSpaceUndetermined
from .peterson import TranslateRequest, peterson_translate
from .rootsys import build_root_system, is_long
from .schubert import curve_weights, rationally_smooth_variety, variety
from .singloc import gp_smooth_at, smooth_at, smoothness_report, zariski_tangent_bounds
from .weyl import all_elements, from_word, lower_interval, parse_word

JOBS_ENV = "SCHUBSING_JOBS"

NUMBERING_HELP = (
    "Simple roots: A/D/E/F4/G2 use Bourbaki numbering; in B_n node 1 is the short "
    "simple root, in C_n node 1 is the long one (so for B2, 1 = short, 2 = long)."
)


def _dump(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2) + "\n"
    return _table(obj)


def _table(obj) -> str:
    if isinstance(obj, list):
        return "".join(_row(o) + "\n" for o in obj)
    lines = []
    for k, v in obj.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{k}:")
            lines.extend("  " + _row(o) for o in v)
        else:
            lines.append(f"{k}: {_cell(v)}")
    return "\n".join(lines) + "\n"


def _row(o) -> str:
    if isinstance(o, dict):
        return "  ".join(f"{k}={_cell(v)}" for k, v in o.items())
    return _cell(o)


def _cell(v) -> str:
    if isinstance(v, list):
        return "[" + " ".join(_cell(x) for x in v) + "]"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _rs(args):
    return build_root_system(args.type, allow_g2=args.allow_g2)


def _elt(rs, text: str):
    return from_word(rs, parse_word(text))


def _word(x) -> list[int]:
    return list(x.word)


def cmd_roots(args):
    rs = _rs(args)
    return {
        "type": rs.name,
        "rank": rs.rank,
        "cartan_matrix": [list(r) for r in rs.cartan],
        "roots": [
            {"coords": list(r.coords), "positive": r.is_positive, "long": is_long(rs, r)}
            for r in rs.roots
        ],
    }


def cmd_element(args):
    rs = _rs(args)
    w = _elt(rs, args.word)
    return {
        "type": rs.name,
        "word": _word(w),
        "length": w.length,
        "inverse": _word(w.inverse()),
        "simple_images": [list(w(a).coords) for a in rs.simple_roots],
    }


def cmd_interval(args):
    w = _elt(_rs(args), args.word)
    iv = lower_interval(w)
    return {
        "word": _word(w),
        "size": len(iv),
        "rank_table": list(iv.rank_table),
        "elements": [_word(x) for x in iv],
        "covers": [[_word(x), _word(y)] for x in iv for y in iv.covers[x]],
    }


def cmd_tangent_weights(args):
    rs = _rs(args)
    w, x = _elt(rs, args.word), _elt(rs, args.at)
    if args.kind == "curves":
        return curve_weights(w, x).to_json()
    variety(w).check(x)
    b = zariski_tangent_bounds(w, experimental_g2=args.allow_g2)[x]
    if not b.exact:
        raise TangentSpaceUndetermined(
            f"only bounds known at {list(x.word)}: {len(b.lower)} <= dim <= {len(b.upper)}; "
            "use --kind curves for the T-curve weights"
        )
    return b.lower.to_json()


def cmd_translate(args):
    rs = _rs(args)
    w = _elt(rs, args.word)
    y = _elt(rs, args.at)
    alpha = rs.root(int(c) for c in args.root.split(","))
    req = TranslateRequest(w, y, alpha)
    tau = peterson_translate(req)
    return {
        "x": _word(req.x),
        "y": _word(y),
        "curve_root": list(alpha.coords),
        "tau": tau.to_json(),
        "equals_TE": tau == curve_weights(w, req.x),
    }


def cmd_smooth_at(args):
    rs = _rs(args)
    w, x = _elt(rs, args.word), _elt(rs, args.at)
    return {"word": _word(w), "at": _word(x), "smooth": smooth_at(w, x, experimental_g2=args.allow_g2)}


def cmd_singular_locus(args):
    w = _elt(_rs(args), args.word)
    return smoothness_report(w, experimental_g2=args.allow_g2).to_json()


def cmd_rationally_smooth(args):
    w = _elt(_rs(args), args.word)
    ok, ev = rationally_smooth_variety(w)
    return {
        "word": _word(w),
        "rationally_smooth": ok,
        "poincare": ev.poincare,
        "poincare_symmetric": ev.poincare_symmetric,
        "curve_counts_ok": ev.curve_counts_ok,
        "bad_points": [_word(x) for x in ev.bad_points],
        "average_length": str(ev.average_length),
    }


def cmd_gp_smooth_at(args):
    rs = _rs(args)
    J = parse_word(args.J)
    w, x = _elt(rs, args.word), _elt(rs, args.at)
    return {
        "J": J,
        "word": _word(w),
        "at": _word(x),
        "smooth": gp_smooth_at(J, w, x, experimental_g2=args.allow_g2),
    }


def _sweep_one(task):
    descriptor, allow_g2, word = task
    rs = build_root_system(descriptor, allow_g2=allow_g2)
    w = from_word(rs, word)
    rep = smoothness_report(w, experimental_g2=allow_g2)
    poly = list(variety(w).interval.rank_table)
    return {
        "word": list(word),
        "length": w.length,
        "smooth": not rep.max_singular,
        "max_singular": len(rep.max_singular),
        "poincare_symmetric": poly == poly[::-1],
    }


@dataclass(frozen=True)
class SweepConfig:
    descriptor: str
    length: int | None = None  # keep only elements of this length
    jobs: int = 1  # 0 = one worker per CPU
    budget: int = 2000  # largest group order accepted
    allow_g2: bool = False


def sweep(descriptor, **options) -> dict:
    """Smoothness summary of every X(w); ``options`` are :class:`SweepConfig` fields."""
    return run_sweep(SweepConfig(descriptor, **options))


def run_sweep(cfg: SweepConfig) -> dict:
    rs = build_root_system(cfg.descriptor, allow_g2=cfg.allow_g2)
    order = 1
    for s, n in rs.descriptor:
        order *= _group_order(s, n)
    if order > cfg.budget:
        raise BudgetExceeded(f"|W({rs.name})| = {order} exceeds budget {cfg.budget}")
    elems = [w for w in all_elements(rs) if cfg.length is None or w.length == cfg.length]
    tasks = [(rs.descriptor, cfg.allow_g2, w.word) for w in elems]
    jobs = cfg.jobs
    if jobs == 0:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_sweep_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        rows = [_sweep_one(t) for t in tasks]
    return {
        "type": rs.name,
        "rows": rows,
        "total": len(rows),
        "smooth": sum(r["smooth"] for r in rows),
        "singular": sum(not r["smooth"] for r in rows),
    }


def _group_order(series: str, n: int) -> int:
    from math import factorial

    if series == "A":
        return factorial(n + 1)
    if series in "BC":
        return 2 ** n * factorial(n)
    if series == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[(series, n)]


def cmd_sweep(args):
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV, "1"))
    return run_sweep(SweepConfig(args.type, args.length, jobs, args.budget, args.allow_g2))


COMMANDS = {
    "roots": (cmd_roots, "list the roots of a type"),
    "element": (cmd_element, "describe a Weyl group element"),
    "interval": (cmd_interval, "enumerate the Bruhat interval [e, w]"),
    "tangent-weights": (cmd_tangent_weights, "T-curve weights of X(w) at a fixed point"),
    "translate": (cmd_translate, "Peterson translate along the curve from --at with root --root"),
    "smooth-at": (cmd_smooth_at, "smoothness of X(w) at a fixed point"),
    "singular-locus": (cmd_singular_locus, "full smoothness report of X(w)"),
    "rationally-smooth": (cmd_rationally_smooth, "rational smoothness criteria for X(w)"),
    "gp-smooth-at": (cmd_gp_smooth_at, "smoothness of a Schubert variety in G/P"),
    "sweep": (cmd_sweep, "summaries for every w in W"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubsing", description=__doc__.split("\n\n")[0], epilog=NUMBERING_HELP)
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_, epilog=NUMBERING_HELP)
        sp.add_argument("--type", required=True, help='type descriptor, e.g. "B2" or "A3xA1"')
        sp.add_argument("--format", choices=("json", "table"), default="json")
        sp.add_argument("--allow-g2", action="store_true", help="permit G2 factors (verdicts unverified)")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        if name not in ("roots", "sweep"):
            sp.add_argument("--word", required=True, help="w as comma-separated simple indices")
        if name in ("tangent-weights", "translate", "smooth-at", "gp-smooth-at"):
            sp.add_argument("--at", required=True, help="fixed point as a word ('' for e)")
        if name == "tangent-weights":
            sp.add_argument("--kind", choices=("zariski", "curves"), default="zariski",
                            help="Zariski tangent weights (when determined) or T-curve weights")
        if name == "translate":
            sp.add_argument("--root", required=True, help="positive curve root as coordinates, e.g. 1,1")
        if name == "gp-smooth-at":
            sp.add_argument("--J", required=True, help="parabolic subset as simple indices")
        if name == "sweep":
            sp.add_argument("--length", type=int, help="only elements of this length")
            sp.add_argument("--jobs", type=int, help=f"worker processes, 0 = auto (default ${JOBS_ENV} or 1)")
            sp.add_argument("--budget", type=int, default=2000, help="maximum group order")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fn = COMMANDS[args.command][0]
    try:
        result = fn(args)
    except SchubertError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    text = _dump(result, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
