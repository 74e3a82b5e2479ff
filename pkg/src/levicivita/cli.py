"""Command-line front end.

    python -m levicivita verify --theorem thmB --carrier quad:2 --format json

Exit codes: 0 holds (or holds within budget, or consistent), 1 a
counterexample was found, 2 inconclusive at the interval precision used,
3 usage or configuration error.  The default seed can be overridden with
the ``LEVICIVITA_SEED`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from . import __version__
from .algebra import GaussianRational, PolyQ, QuadElem, parse_quad, parse_rational
from .constructions import (
    AdditiveMap,
    analytic_pair,
    classify_additive,
    counterexample_functions,
    derivation_witness,
    discontinuity_witness,
    gaussian_re_im,
    thmB_pair,
)
from .core import CarrierFunction, LeviCivitaRep, check_decomposition
from .errors import LeviCivitaError
from .inequalities import (
    check_additivity,
    check_chain_paired_difference,
    check_chain_paired_sum,
    check_cs_forward,
    check_cs_reverse,
    check_discriminant_A9,
    check_hyperbolic_gap,
    check_identity,
    check_unit_bound,
)
from .reports import Verdict, combine_verdicts, serialize_scalar
from .search import (
    SampleSpec,
    carrier_from_id,
    equivalence_check_thm1,
    equivalence_check_thm2,
    sample_elements,
    sample_pairs,
    search_counterexample,
)

COMMANDS = ("verify", "search", "demo", "classify", "equivalence")
THEOREMS = {
    "thm1plus": ("quad", "gauss", "poly", "reals-interval"),
    "thm1": ("quad",),
    "thm2": ("quad", "rat"),
    "thm3": ("gauss", "reals-interval"),
    "thm4": ("quad", "gauss", "poly", "reals-interval"),
    "thm5": ("gauss", "reals-interval"),
    "thm6": ("quad", "reals-interval"),
    "cor4": ("poly",),
    "cor5": ("reals-interval",),
    "cor6": ("reals-interval",),
    "corA1": ("gauss",),
    "corA2": ("gauss",),
    "thmB": ("quad",),
    "a9": ("quad",),
}
SEED_ENV = "LEVICIVITA_SEED"

EXIT_OK, EXIT_FAILS, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    theorem: str
    carrier: str
    alpha: str = "1"
    beta: str = "0"
    q: str = "1/2"
    p: Optional[int] = None
    c: str = "2"
    conjugate: bool = False
    example: Optional[str] = None
    samples: int = 1000
    seed: int = 0
    height_bound: int = 100
    precision_digits: int = 12
    max_digits: Optional[int] = None
    budget: int = 10000
    depth: int = 4
    format: str = "text"
    out: Optional[str] = None
    timing: bool = True

    @property
    def carrier_kind(self) -> str:
        c = self.carrier.lower()
        if c.startswith("quad"):
            return "quad"
        return {"gaussian": "gauss", "polyq": "poly", "rational": "rat", "reals": "reals-interval"}.get(c, c)

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.theorem not in THEOREMS:
            raise UsageError(f"unknown theorem {self.theorem!r}; choose from {', '.join(THEOREMS)}")
        if self.p is not None and self.carrier_kind == "quad":
            if self.carrier.lower() == "quad":
                self.carrier = f"quad:{self.p}"
            elif carrier_from_id(self.carrier).p != self.p:
                raise UsageError(f"--p {self.p} contradicts carrier {self.carrier}")
        if self.carrier_kind not in THEOREMS[self.theorem]:
            raise UsageError(
                f"theorem {self.theorem} is not available on carrier {self.carrier}; "
                f"use one of {', '.join(THEOREMS[self.theorem])}"
            )
        if self.theorem == "thm2" and self.carrier_kind == "rat" and self.example not in ("a", "co"):
            raise UsageError("thm2 on carrier rat needs --example a or --example co")
        if self.command == "classify" and self.theorem != "thm1":
            raise UsageError("classify is defined for theorem thm1")
        if self.command == "equivalence" and (self.theorem not in ("thm1", "thm2") or self.carrier_kind != "quad"):
            raise UsageError("equivalence runs thm1 or thm2 on a quad:p carrier")
        for name in ("samples", "height_bound", "budget", "depth"):
            if getattr(self, name) < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be >= 1")
        # resolves and validates the radicand
        carrier_from_id(self.carrier, self.precision_digits)

    def spec(self, count: Optional[int] = None) -> SampleSpec:
        ident = "rat" if self.carrier_kind == "rat" else self.carrier
        return SampleSpec(ident, seed=self.seed, count=count or self.samples, height_bound=self.height_bound)


def _build_parser() -> argparse.ArgumentParser:
    default_seed = int(os.environ.get(SEED_ENV, "0"))
    p = _Parser(prog="levicivita", description="Exact checks of Cauchy-Schwarz-type inequalities.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--theorem", required=True)
    p.add_argument("--carrier", required=True, help="quad:p | gauss | poly | rat | reals-interval")
    p.add_argument("--alpha", default="1", help="A(1) of an additive map on Q(sqrt p), e.g. '1' or '1 + 2*sqrt(2)'")
    p.add_argument("--beta", default="0", help="A(sqrt p) of an additive map on Q(sqrt p)")
    p.add_argument("--q", default="1/2", help="parameter of example a, in (0, 1)")
    p.add_argument("--p", type=int, default=None, help="radicand; completes a bare 'quad' carrier")
    p.add_argument("--c", default="2", help="evaluation point of the derivation witness")
    p.add_argument("--conjugate", action="store_true", help="use complex conjugation for corA1/corA2")
    p.add_argument("--example", choices=("a", "co"), help="non-additive example on carrier rat")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--height-bound", type=int, default=100)
    p.add_argument("--precision-digits", type=int, default=12)
    p.add_argument("--max-digits", type=int, default=None, help="escalate interval precision up to this many digits")
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--depth", type=int, default=4, help="convergent count of the discontinuity demo")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the report to this file instead of stdout")
    p.add_argument("--no-timing", dest="timing", action="store_false", help="report elapsed_ms as null")
    return p


def parse_config(argv) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    cfg = RunConfig(**vars(ns))
    cfg.validate()
    return cfg


# -- construction helpers ----------------------------------------------------------


def _additive(cfg: RunConfig, carrier) -> AdditiveMap:
    return AdditiveMap(carrier.p, parse_quad(cfg.alpha, carrier.p), parse_quad(cfg.beta, carrier.p))


def _interval_kw(cfg: RunConfig) -> dict:
    return {"seed": cfg.seed, "digits": cfg.precision_digits, "max_digits": cfg.max_digits}


def _norm_function(carrier) -> CarrierFunction:
    return CarrierFunction(carrier, lambda z: z.norm(), "norm")


def _eval_function(carrier, c) -> CarrierFunction:
    return CarrierFunction(carrier, lambda h: h(c), f"eval at {c}")


def _verify_reports(cfg: RunConfig, pairs):
    """Checks run by ``verify`` (and by ``demo`` on the special pairs)."""
    carrier = carrier_from_id(cfg.carrier, cfg.precision_digits)
    kind = cfg.carrier_kind
    th = cfg.theorem
    kw = {"seed": cfg.seed}
    ikw = _interval_kw(cfg)
    extra = {}
    reports = []

    if th == "thm1plus":
        if kind == "quad":
            A, B, _ = thmB_pair(carrier.p)
            rep, target = LeviCivitaRep.rank_n(A, B), A
        elif kind == "gauss":
            target = _norm_function(carrier)
            rep = LeviCivitaRep.rank_n(target)
        elif kind == "poly":
            target = _eval_function(carrier, parse_rational(cfg.c))
            rep = LeviCivitaRep.rank_n(target)
        else:
            A, B, _ = analytic_pair("hyperbolic", cfg.precision_digits)
            rep, target = LeviCivitaRep.rank_n(A, B), A
        k = ikw if kind == "reals-interval" else kw
        reports.append(check_decomposition(rep, target, pairs, seed=cfg.seed, name="decomposition:1*="))
        reports.append(check_cs_forward(target, pairs, **k))
    elif th == "thm1":
        A = _additive(cfg, carrier)
        cls = classify_additive(A)
        extra["classification"] = _classification_dict(cls)
        reports.append(check_cs_forward(A, pairs, **kw))
    elif th == "thm2":
        if kind == "rat":
            f = counterexample_functions("example-" + cfg.example, parse_rational(cfg.q))
            elements = sample_elements(cfg.spec())
            reports.append(check_unit_bound(f, elements, **kw))
            reports.append(check_cs_reverse(f, pairs, **kw))
        else:
            A = _additive(cfg, carrier)
            e = carrier.unit
            region = [x for x in sample_elements(cfg.spec()) if _in_region(A, x)]
            reports.append(check_unit_bound(A, region, **kw))
            reports.append(check_cs_reverse(A, [(x, e) for x in region] + list(pairs), restrict_to_R_A=True, **kw))
    elif th in ("thm3", "thm4"):
        if kind == "gauss":
            A, B, _ = gaussian_re_im(cfg.conjugate)
            rep = LeviCivitaRep.difference(A, B) if th == "thm3" else LeviCivitaRep.symmetrized(A, B)
            target = A if th == "thm3" else B
        elif kind == "reals-interval":
            A, B, _ = analytic_pair("trig", cfg.precision_digits)
            rep = LeviCivitaRep.difference(A, B) if th == "thm3" else LeviCivitaRep.symmetrized(B, A)
            target = A if th == "thm3" else B
        elif kind == "quad":
            A, B, _ = thmB_pair(carrier.p)
            rep, target = LeviCivitaRep.symmetrized(A, B), B
        else:
            target, rep = derivation_witness(parse_rational(cfg.c))
        k = ikw if kind == "reals-interval" else kw
        reports.append(check_decomposition(rep, target, pairs, seed=cfg.seed))
        reports.append(check_cs_reverse(target, pairs, **k))
    elif th == "cor4":
        A, rep = derivation_witness(parse_rational(cfg.c))
        reports.append(check_decomposition(rep, A, pairs, seed=cfg.seed, name="decomposition:leibniz"))
        reports.append(check_cs_reverse(A, pairs, **kw))
        reports.append(check_additivity(A, pairs, **kw))
    elif th in ("thm5", "corA1", "corA2", "cor5"):
        if kind == "gauss":
            A, B, rep = gaussian_re_im(cfg.conjugate)
            reports.append(check_decomposition(rep, (A, B), pairs, seed=cfg.seed))
            reports.append(check_chain_paired_difference(A, B, pairs, **kw))
            reports.append(check_identity(A, B, pairs, "difference-system", **kw))
            if th == "corA2":
                reports.append(check_additivity(A, pairs, **kw))
                reports.append(check_additivity(B, pairs, **kw))
        else:
            A, B, _ = analytic_pair("trig", cfg.precision_digits)
            reports.append(check_chain_paired_difference(A, B, pairs, **ikw))
    elif th in ("thm6", "thmB", "cor6"):
        if kind == "quad":
            A, B, rep = thmB_pair(carrier.p)
            reports.append(check_decomposition(rep, (A, B), pairs, seed=cfg.seed))
            reports.append(check_chain_paired_sum(A, B, pairs, **kw))
            reports.append(check_identity(A, B, pairs, "sum-system", **kw))
            if th == "thmB":
                reports.append(check_additivity(A, pairs, **kw))
                reports.append(check_additivity(B, pairs, **kw))
        else:
            A, B, _ = analytic_pair("hyperbolic", cfg.precision_digits)
            reports.append(check_chain_paired_sum(A, B, pairs, **ikw))
            if th == "cor6":
                reports.append(check_hyperbolic_gap(A, B, pairs, **ikw))
    elif th == "a9":
        reports.append(check_discriminant_A9(_additive(cfg, carrier), pairs, **kw))
    return reports, extra


def _in_region(A, x) -> bool:
    from .constructions import in_R_A

    return in_R_A(A, x)


def _classification_dict(cls) -> dict:
    return {
        "tag": cls.tag.value,
        "witness": None if cls.witness is None else [serialize_scalar(w) for w in cls.witness],
    }


def _search_target(cfg: RunConfig):
    carrier = carrier_from_id(cfg.carrier, cfg.precision_digits)
    kind, th = cfg.carrier_kind, cfg.theorem
    if th == "thm2" and kind == "rat":
        return "cs-reverse", counterexample_functions("example-" + cfg.example, parse_rational(cfg.q))
    if th in ("thm1", "thm2", "a9"):
        A = _additive(cfg, carrier)
        return {"thm1": "cs-forward", "thm2": "cs-reverse@R_A", "a9": "discriminant"}[th], A
    if kind == "reals-interval":
        if th in ("thm3", "thm5", "cor5"):
            A, B, _ = analytic_pair("trig", cfg.precision_digits)
            return ("cs-reverse", A) if th == "thm3" else ("chain-paired-difference", (A, B))
        A, B, _ = analytic_pair("hyperbolic", cfg.precision_digits)
        if th == "thm1plus":
            return "cs-forward", A
        if th == "thm4":
            A, B, _ = analytic_pair("trig", cfg.precision_digits)
            return "cs-reverse", B
        return "chain-paired-sum", (A, B)
    if kind == "quad":
        A, B, _ = thmB_pair(carrier.p)
        return {"thm1plus": ("cs-forward", A), "thm4": ("cs-reverse", B)}.get(th, ("chain-paired-sum", (A, B)))
    if kind == "gauss":
        A, B, _ = gaussian_re_im(cfg.conjugate)
        if th == "thm1plus":
            return "cs-forward", _norm_function(carrier)
        return {"thm3": ("cs-reverse", A), "thm4": ("cs-reverse", B)}.get(th, ("chain-paired-difference", (A, B)))
    if th == "thm1plus":
        return "cs-forward", _eval_function(carrier, parse_rational(cfg.c))
    return "cs-reverse", derivation_witness(parse_rational(cfg.c))[0]


# -- commands ------------------------------------------------------------------------


def _run(cfg: RunConfig) -> dict:
    body = {"checks": [], "details": {}}
    if cfg.command == "verify":
        pairs = sample_pairs(cfg.spec())
        reports, extra = _verify_reports(cfg, pairs)
        body["checks"] = reports
        body["details"] = extra
        body["verdict"] = combine_verdicts(r.verdict for r in reports)
        body["samples"] = len(pairs)
    elif cfg.command == "search":
        predicate, target = _search_target(cfg)
        spec = cfg.spec()
        if cfg.carrier_kind == "reals-interval":
            spec = SampleSpec("reals-interval", seed=cfg.seed, height_bound=cfg.height_bound)
        report = search_counterexample(predicate, target, cfg.budget, spec)
        body["checks"] = [report]
        body["verdict"] = report.verdict
        body["samples"] = cfg.budget
        body["details"] = {"predicate": predicate}
    elif cfg.command == "classify":
        carrier = carrier_from_id(cfg.carrier)
        cls = classify_additive(_additive(cfg, carrier))
        # the verdict is that of the sign condition on A(x^2)
        body["verdict"] = Verdict.HOLDS if cls.satisfies_condition else Verdict.FAILS
        body["samples"] = 0
        body["details"] = {"classification": _classification_dict(cls)}
    elif cfg.command == "equivalence":
        carrier = carrier_from_id(cfg.carrier)
        A = _additive(cfg, carrier)
        fn = equivalence_check_thm1 if cfg.theorem == "thm1" else equivalence_check_thm2
        eq = fn(A, cfg.spec())
        body["checks"] = eq.details
        body["verdict"] = Verdict.HOLDS if eq.consistent else Verdict.FAILS
        body["samples"] = cfg.samples
        body["details"] = {
            "theorem": eq.theorem,
            "left": eq.left.value,
            "left_label": eq.left_label,
            "right": eq.right.value,
            "consistent": eq.consistent,
        }
    else:
        body.update(_demo(cfg))
    return body


def _demo(cfg: RunConfig) -> dict:
    carrier = carrier_from_id(cfg.carrier, cfg.precision_digits)
    th = cfg.theorem
    if th == "thmB":
        p = carrier.p
        A, B, _ = thmB_pair(p)
        wa = discontinuity_witness(A, p, cfg.depth)
        wb = discontinuity_witness(B, p, cfg.depth)
        details = {"point": serialize_scalar(wa.point)}
        for label, w in (("A", wa), ("B", wb)):
            details[label] = [
                {
                    "y": serialize_scalar(y),
                    "distance_below": serialize_scalar(bound),
                    "certified": cert,
                    "value_gap": serialize_scalar(gap),
                }
                for y, bound, gap, cert in zip(w.approximants, w.distance_bounds, w.value_gaps, w.certified)
            ]
        ok = wa.all_certified and wb.all_certified
        return {"verdict": Verdict.HOLDS if ok else Verdict.FAILS, "samples": cfg.depth, "details": details}
    pairs = _demo_pairs(cfg)
    reports, extra = _verify_reports(cfg, pairs)
    return {
        "checks": reports,
        "details": extra,
        "verdict": combine_verdicts(r.verdict for r in reports),
        "samples": len(pairs),
    }


def _demo_pairs(cfg: RunConfig):
    kind = cfg.carrier_kind
    if kind == "gauss":
        return [(GaussianRational(1, 2), GaussianRational(2, -1))]
    if kind == "rat":
        return [(Fraction(2), Fraction(1, 2))]
    if kind == "poly":
        return [(PolyQ.t(), PolyQ((0, 0, 1)))]
    if kind == "quad":
        p = carrier_from_id(cfg.carrier).p
        return [(QuadElem(1, 1, p), QuadElem(3, -1, p))]
    return [(Fraction(1, 2), Fraction(1, 3)), (Fraction(0), Fraction(0))]


def _exit_code(verdict: Verdict) -> int:
    if verdict is Verdict.FAILS:
        return EXIT_FAILS
    if verdict is Verdict.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _document(cfg: RunConfig, body: dict, elapsed_ms) -> dict:
    checks = body.get("checks", [])
    counterexamples = []
    for r in checks:
        for c in r.counterexamples:
            counterexamples.append({"check": r.check_name, **c.to_dict()})
    return {
        "command": cfg.command,
        "theorem": cfg.theorem,
        "carrier": cfg.carrier,
        "seed": cfg.seed,
        "samples": body.get("samples", 0),
        "verdict": body["verdict"].value,
        "equality_points": sum(r.equality_points for r in checks),
        "counterexamples": counterexamples,
        "elapsed_ms": elapsed_ms,
        "version": __version__,
        "checks": [r.to_dict() for r in checks],
        "details": body.get("details", {}),
    }


def _render_text(doc: dict) -> str:
    lines = [
        f"levicivita {doc['version']}: {doc['command']} {doc['theorem']} on {doc['carrier']}"
        f" (seed={doc['seed']}, samples={doc['samples']})"
    ]
    for check in doc["checks"]:
        line = (
            f"  {check['check']:<34} {check['verdict']:<20}"
            f" samples={check['samples']} equalities={check['equality_points']}"
        )
        if check["precision_digits"] is not None:
            line += f" digits={check['precision_digits']}"
        lines.append(line)
        for note in check["notes"]:
            lines.append(f"    note: {note}")
    for c in doc["counterexamples"][:5]:
        lines.append(f"  counterexample [{c['check']} {c['relation']}] x={c['x']} y={c['y']}: lhs={c['lhs']} rhs={c['rhs']}")
    if len(doc["counterexamples"]) > 5:
        lines.append(f"  ... {len(doc['counterexamples']) - 5} more counterexamples")
    for key, value in doc["details"].items():
        if isinstance(value, dict):
            lines.append(f"  {key}: " + ", ".join(f"{k}={v}" for k, v in value.items()))
        elif isinstance(value, list):
            lines.append(f"  {key}:")
            for item in value:
                lines.append("    " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"  {key}: {value}")
    lines.append(f"verdict: {doc['verdict']}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".levicivita-")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, out)


def execute(cfg: RunConfig) -> int:
    start = time.perf_counter()
    body = _run(cfg)
    elapsed = round((time.perf_counter() - start) * 1000) if cfg.timing else None
    doc = _document(cfg, body, elapsed)
    text = json.dumps(doc, indent=2) + "\n" if cfg.format == "json" else _render_text(doc)
    _emit(text, cfg.out)
    return _exit_code(body["verdict"])


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except (UsageError, LeviCivitaError, ValueError) as exc:
        print(f"levicivita: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return execute(cfg)
    except LeviCivitaError as exc:
        print(f"levicivita: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
