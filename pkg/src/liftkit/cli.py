"""Command-line front end.

Session config is an INI file read with configparser::

    [session]
    order = 12              ; z is a primitive order-th root of unity
    theta = 2
    parameters = lambda112 mu1 mu2 mu12

    [braiding]
    q11 = z^4
    q12 = z
    q21 = z^-1 z^8
    q22 = -1

    [realization]           ; optional
    torsion = 12 12
    g1 = 1 0
    g2 = 0 1
    chi1 = z^4 (z^-1 z^8)   ; chi_1 on the coordinate generators
    chi2 = z z^6

Character rows split on blanks outside parentheses, so compound values
go in parentheses.  Braiding entries may name parameters (``q12 = q12``
keeps it symbolic).
Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import catalog
from .braiding import BraidingMatrix, cartan_matrix, dynkin, reflect, weyl_orbit
from .errors import LiftkitError, UnknownCase, VerificationFailed
from .grammar import parse, parse_scalar
from .grammar import parse_element as _parse_element
from .hopf import coproduct, is_skew_primitive, skew_defect
from .lyndon import format_word, lyndon_words, parse_word, super_letter_expand
from .pbw import RewriteSystem, enumerate_pbw_basis, reduce, span_dimension_oracle
from .scalars import ParamScalar
from .smash import (
    GroupRealization,
    SmashAlgebra,
    commutator_identities,
    q_leibniz,
    random_homogeneous,
)

__all__ = ["SessionConfig", "load_config", "parse_element", "run_command", "main"]


class UsageError(LiftkitError):
    pass


def _ints(text):
    return [int(t) for t in text.split()]


def _values(text):
    """Blank-separated values; blanks inside parentheses do not split."""
    out, depth, cur = [], 0, ""
    for ch in text:
        depth += (ch == "(") - (ch == ")")
        if ch.isspace() and depth == 0:
            if cur:
                out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur:
        out.append(cur)
    return out


@dataclass
class SessionConfig:
    order: int = 12
    theta: int = 2
    braiding: BraidingMatrix | None = None
    realization: GroupRealization | None = None
    parameters: tuple = ()
    extra: dict = field(default_factory=dict)

    @classmethod
    def generic(cls, theta=2, order=12):
        """All q_ij symbolic."""
        q = BraidingMatrix(
            [[ParamScalar.param(f"q{i}{j}") for j in range(1, theta + 1)] for i in range(1, theta + 1)]
        )
        return cls(order, theta, q)

    @classmethod
    def from_string(cls, text):
        cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
        cp.read_string(text)
        return cls._from_parser(cp)

    @classmethod
    def from_file(cls, path):
        try:
            with open(path, encoding="utf-8") as fh:
                return cls.from_string(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read config {path}: {exc.strerror}") from None

    @classmethod
    def _from_parser(cls, cp):
        sess = cp["session"] if cp.has_section("session") else {}
        order = int(sess.get("order", 12))
        theta = int(sess.get("theta", 2))
        params = tuple(sess.get("parameters", "").split())
        q = None
        if cp.has_section("braiding"):
            b = cp["braiding"]
            rows = []
            for i in range(1, theta + 1):
                row = []
                for j in range(1, theta + 1):
                    key = f"q{i}{j}"
                    src = b.get(key, key)
                    val = parse_scalar(src, order)
                    if not val.is_unit():
                        raise UsageError(f"braiding entry {key} = {src} is not a unit")
                    row.append(val)
                rows.append(row)
            q = BraidingMatrix(rows)
        real = _realization(cp, theta, order, q) if cp.has_section("realization") else None
        if q is None and real is not None:
            q = _braiding_of(real)
        return cls(order, theta, q, real, params)

    def algebra(self):
        q = self.braiding or SessionConfig.generic(self.theta, self.order).braiding
        return SmashAlgebra(q, realization=self.realization, order=self.order)

    def symbols(self):
        q = self.braiding
        if q is None:
            return {}
        return {f"q{i}{j}": q[i, j] for i in range(1, q.theta + 1) for j in range(1, q.theta + 1)}

    def numeric_braiding(self):
        if self.braiding is None or not self.braiding.is_numeric():
            raise UsageError("this command needs a numeric braiding; pass --config with a [braiding] section")
        return self.braiding


def _realization(cp, theta, order, q):
    r = cp["realization"]
    torsion = _ints(r.get("torsion", ""))
    images = [_ints(r.get(f"g{i}", "")) for i in range(1, theta + 1)]
    chars = [[parse_scalar(t, order) for t in _values(r.get(f"chi{j}", ""))] for j in range(1, theta + 1)]
    return GroupRealization(torsion, images, chars, q=q)


def _braiding_of(real):
    return BraidingMatrix(
        [[real.character(j, real.images[i - 1]) for j in range(1, real.theta + 1)] for i in range(1, real.theta + 1)]
    )


def load_config(path=None):
    return SessionConfig.from_file(path) if path else SessionConfig.generic()


def parse_element(src, ctx):
    """Parse element text against a session config (checks declared parameters)."""
    if ctx.parameters:
        allowed = set(ctx.parameters) | set(ctx.symbols())
        for name in _names(parse(src)):
            if name not in allowed:
                raise UsageError(f"parameter {name} is not declared in the session config")
    return _parse_element(src, ctx.algebra(), ctx.symbols())


def _names(node):
    if node.kind == "param":
        yield node.args[0]
        return
    for a in node.args:
        if hasattr(a, "kind"):
            yield from _names(a)
        elif isinstance(a, tuple):
            for b in a:
                if hasattr(b, "kind"):
                    yield from _names(b)


# ---------------------------------------------------------------------------
# commands; each returns (exit code, payload dict, text)


def _matrix_text(q, order):
    return "\n".join("  ".join(x.to_str(order) for x in row) for row in q.entries)


def cmd_cartan(args, cfg):
    a = cartan_matrix(cfg.numeric_braiding())
    rows = [list(r) for r in a]
    return 0, {"cartan": rows}, str(rows).replace(" ", "")


def cmd_reflect(args, cfg):
    q = cfg.numeric_braiding()
    if not 1 <= args.vertex <= q.theta:
        raise UsageError(f"vertex {args.vertex} outside 1..{q.theta}")
    r = reflect(q, args.vertex)
    d = dynkin(r)
    payload = {
        "braiding": [[x.to_str(cfg.order) for x in row] for row in r.entries],
        "dynkin": d.to_str(cfg.order),
    }
    return 0, payload, _matrix_text(r, cfg.order) + "\n" + d.to_str(cfg.order)


def cmd_dynkin(args, cfg):
    d = dynkin(cfg.numeric_braiding())
    return 0, {"dynkin": d.to_str(cfg.order)}, d.to_str(cfg.order)


def cmd_weyl_orbit(args, cfg):
    q = cfg.numeric_braiding()
    orbit = sorted(d.to_str(cfg.order) for d in weyl_orbit(q, cap=args.cap))
    return 0, {"size": len(orbit), "diagrams": orbit}, "\n".join(orbit + [f"{len(orbit)} diagrams"])


def cmd_lyndon(args, cfg):
    words = [format_word(w) for w in lyndon_words(cfg.theta, args.max_len)]
    return 0, {"words": words}, "\n".join(words)


def cmd_expand(args, cfg):
    el = super_letter_expand(parse_word(args.word), cfg.algebra())
    return 0, {"expansion": el.to_str(cfg.order)}, el.to_str(cfg.order)


def cmd_coproduct(args, cfg):
    d = coproduct(parse_element(args.expr, cfg))
    return 0, {"coproduct": d.to_str(cfg.order)}, d.to_str(cfg.order)


def _group_of(text, cfg):
    el = parse_element(text, cfg)
    if len(el.terms) != 1:
        raise UsageError(f"{text!r} is not a single group element")
    ((w, g), c), = el.terms.items()
    if w or c != 1:
        raise UsageError(f"{text!r} is not a group element")
    return g


def cmd_skew_defect(args, cfg):
    a = parse_element(args.expr, cfg)
    g = _group_of(args.group, cfg)
    d = skew_defect(a, g)
    ok = is_skew_primitive(a, g)
    text = d.to_str(cfg.order) + ("\nskew-primitive" if ok else "\nnot skew-primitive")
    return 0, {"defect": d.to_str(cfg.order), "skew_primitive": ok}, text


def _case_system(cid):
    if cid in catalog.LIFTING_IDS:
        ideal = catalog.lifting_ideal(cid)
        return ideal.system(), ideal.alg
    if cid in catalog.NICHOLS_IDS:
        case = catalog.nichols_presentation(cid)
        sys_ = catalog.nichols_system(case)
        return sys_, sys_.alg
    raise UnknownCase(f"unknown case {cid!r}")


def cmd_reduce(args, cfg):
    if args.case:
        sys_, alg = _case_system(args.case)
        syms = {f"q{i}{j}": alg.q[i, j] for i in (1, 2) for j in (1, 2)}
        a = _parse_element(args.expr, alg, syms)
    else:
        try:
            with open(args.relations, encoding="utf-8") as fh:
                lines = [ln.split("#")[0].strip() for ln in fh]
        except OSError as exc:
            raise UsageError(f"cannot read {args.relations}: {exc.strerror}") from None
        rels = [parse_element(ln, cfg) for ln in lines if ln]
        sys_ = RewriteSystem(cfg.algebra(), rels)
        a = parse_element(args.expr, cfg)
    nf = reduce(a, sys_)
    return 0, {"normal_form": nf.to_str(12)}, nf.to_str(12)


def cmd_nichols(args, cfg):
    case = catalog.nichols_presentation(args.id, args.n, args.variant)
    d = case.to_dict()
    lines = [f"{case.id}: {case.diagram}", f"  {case.constraints}"]
    lines += ["  " + " ".join(g.text.split()) for g in case.relations]
    lines.append(f"  PBW letters {', '.join(d['pbw_letters'])}; dim {case.dim}")
    return 0, d, "\n".join(lines)


def cmd_lifting(args, cfg):
    case = catalog.lifting_case(args.id, args.n, args.variant)
    adm = catalog.case_admissibility(case.family or case)
    d = case.to_dict()
    d["admissibility"] = {k: {"status": a.status, "reason": a.reason} for k, a in sorted(adm.items())}
    lines = [f"{case.id}: {case.nichols.diagram}, {case.predicate[0]}"]
    for g in case.generators:
        tail = ("  - " + " - ".join(g.unknown) + " (UNKNOWN)") if g.unknown else ""
        lines.append("  " + " ".join(g.text.split()) + tail)
    lines.append("  parameters: " + (" ".join(case.params) or "none"))
    for k, a in sorted(adm.items()):
        lines.append(f"    {k}: {a.status} ({a.reason})")
    for note in case.notes:
        lines.append(f"  warning: {note}")
    return 0, d, "\n".join(lines)


def _verify_one(cid, mode, realization, q12, all_instances):
    report = catalog.verify_case(
        cid, mode=mode, realization=realization, q12=q12, all_instances=all_instances, raise_on_failure=False
    )
    return report


def _mode_for(cid, nichols):
    if nichols or cid not in catalog.LIFTING_IDS:
        return "nichols"
    return "lifting"


def cmd_verify(args, cfg):
    if args.all:
        ids = [("nichols", c) for c in catalog.NICHOLS_IDS] + [("lifting", c) for c in catalog.LIFTING_IDS]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futs = [pool.submit(_verify_one, c, m, None, None, args.all_instances) for m, c in ids]
            reports = [f.result() for f in futs]
    else:
        if not args.id:
            raise UsageError("verify needs a case id or --all")
        real, q12 = None, None
        if args.realization:
            rc = SessionConfig.from_file(args.realization)
            if rc.realization is None:
                raise UsageError(f"{args.realization} has no [realization] section")
            real = rc.realization
            q12 = _braiding_of(real)[1, 2].constant()
        mode = _mode_for(args.id, args.nichols)
        reports = [_verify_one(args.id, mode, real, q12, args.all_instances)]
    ok = all(r.passed for r in reports)
    payload = {"schema": 1, "passed": ok, "reports": [r.to_dict() for r in reports]}
    if len(reports) == 1:
        text = reports[0].to_text()
    else:
        text = "\n".join(f"{'PASS' if r.passed else 'FAIL'} {r.case} ({r.mode}): {r.summary()}" for r in reports)
    return (0 if ok else 1), payload, text


def cmd_oracle_dim(args, cfg):
    case = catalog.nichols_presentation(args.case)
    q = catalog._numeric(case)
    sys_ = catalog.nichols_system(case, q)
    rels = [r.element() for r in sys_.relations]
    dims = span_dimension_oracle(rels, q, args.bound)
    pbw = enumerate_pbw_basis(sys_).free_dimension
    total = sum(dims)
    ok = total == pbw == case.dim
    payload = {"case": case.id, "graded": dims, "oracle": total, "pbw": pbw, "expected": case.dim, "agree": ok}
    text = f"{case.id}: graded {dims}; oracle {total}, PBW {pbw}, expected {case.dim}"
    return (0 if ok else 1), payload, text


def cmd_identities(args, cfg):
    rng = random.Random(args.seed)
    alg = cfg.algebra()
    theta = alg.theta

    def rdeg():
        while True:
            d = tuple(rng.randint(0, args.max_degree) for _ in range(theta))
            if 1 <= sum(d) <= args.max_degree:
                return d

    failures = {}
    for _ in range(args.trials):
        a, b, c = (random_homogeneous(alg, rdeg(), rng) for _ in range(3))
        res = commutator_identities(a, b, c)
        left, right = q_leibniz(a, b, rng.randint(1, 3))
        res["q-leibniz-left"], res["q-leibniz-right"] = left, right
        for k, v in res.items():
            failures.setdefault(k, 0)
            failures[k] += not v
    ok = not any(failures.values())
    lines = [f"{k}: {args.trials - v}/{args.trials}" for k, v in sorted(failures.items())]
    return (0 if ok else 1), {"seed": args.seed, "trials": args.trials, "failures": failures}, "\n".join(lines)


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="liftkit", description="Rank-two Nichols algebras and their liftings.")
    p.add_argument("--config", help="session config file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized property commands")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("cartan", help="generalized Cartan matrix of the session braiding").set_defaults(fn=cmd_cartan)
    s = sub.add_parser("reflect", help="reflected braiding at a vertex")
    s.add_argument("--vertex", type=int, required=True)
    s.set_defaults(fn=cmd_reflect)
    sub.add_parser("dynkin", help="generalized Dynkin diagram").set_defaults(fn=cmd_dynkin)
    s = sub.add_parser("weyl-orbit", help="diagrams reachable by reflections")
    s.add_argument("--cap", type=int, default=1000)
    s.set_defaults(fn=cmd_weyl_orbit)
    s = sub.add_parser("lyndon", help="Lyndon words over theta letters")
    s.add_argument("--max-len", type=int, required=True)
    s.set_defaults(fn=cmd_lyndon)
    s = sub.add_parser("expand-superletter", help="expand [w] into words")
    s.add_argument("word")
    s.set_defaults(fn=cmd_expand)
    s = sub.add_parser("coproduct", help="coproduct of an element")
    s.add_argument("expr")
    s.set_defaults(fn=cmd_coproduct)
    s = sub.add_parser("skew-defect", help="Delta(a) - a (x) 1 - g (x) a")
    s.add_argument("expr")
    s.add_argument("--group", required=True)
    s.set_defaults(fn=cmd_skew_defect)
    s = sub.add_parser("reduce", help="normal form modulo a case or a relation file")
    s.add_argument("expr")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--case")
    g.add_argument("--relations")
    s.set_defaults(fn=cmd_reduce)
    for name, fn in (("nichols", cmd_nichols), ("lifting", cmd_lifting)):
        s = sub.add_parser(name, help=f"show a {name} catalog case")
        s.add_argument("id")
        s.add_argument("--n", type=int)
        s.add_argument("--variant", type=int)
        s.set_defaults(fn=fn)
    s = sub.add_parser("verify", help="run the checks of a catalog case")
    s.add_argument("id", nargs="?")
    s.add_argument("--realization", help="config file with a [realization] section")
    s.add_argument("--all", action="store_true", help="every catalog case, in parallel")
    s.add_argument("--all-instances", action="store_true", help="every admissible q12, not one per pattern")
    s.add_argument("--nichols", action="store_true", help="check the Nichols presentation instead")
    s.add_argument("--jobs", type=int, default=None)
    s.set_defaults(fn=cmd_verify)
    s = sub.add_parser("oracle-dim", help="dimension by linear algebra in each degree")
    s.add_argument("--case", required=True)
    s.add_argument("--bound", type=int, required=True)
    s.set_defaults(fn=cmd_oracle_dim)
    s = sub.add_parser("identities", help="random checks of the q-commutator identities")
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--max-degree", type=int, default=4)
    s.set_defaults(fn=cmd_identities)
    return p


def run_command(argv, out=None, err=None):
    """Run one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args.config)
        code, payload, text = args.fn(args, cfg)
    except VerificationFailed as exc:
        print(f"error: {exc}", file=err)
        return 1
    except (LiftkitError, ValueError, KeyError, configparser.Error) as exc:
        print(f"error: {exc}", file=err)
        return 2
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2), file=out)
    else:
        print(text, file=out)
    return code


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
