# -*- coding: utf-8 -*-
"""
Property harness for the lct pipeline.

Re-derives the (b, B) table with the unrolled oracle, checks the chain of
inequalities the closed form rests on (with their hypotheses), inversion
invariance, log-canonicity consistency and the structural invariants, over
single instances or seeded random corpora.

A check whose hypothesis does not hold is recorded as vacuous, never as failed.
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from arith import ExponentVector, format_rational
from errors import GenerationExhausted, PreconditionFailed, QoLctError
from exponents import CharExponents, DerivedInvariants, invert, lattice_chain, lex_normalize, validate
from lattice import contains
from lct import (
    ONE,
    PoleTable,
    a_values,
    bB_table,
    is_log_canonical,
    lct_closed_form,
    lct_min,
    pole_candidates,
)
from oracle import oracle_bB

logger = logging.getLogger(__name__)

DEFAULT_MAX_REDRAWS = 1000

INEQUALITY_CHECKS = (
    "band-minimum",
    "lower-bound",
    "upper-bound",
    "special-bracket",
    "next-band-minimum",
    "vertical-order-equivalence",
    "vertical-order",
    "vertical-order-special",
)


# ---------------------------------------------------------------------
# REPORT TYPES
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class CheckResult:
    name: str
    hypothesis_met: bool
    passed: bool
    witness: Optional[str] = None

    @property
    def base(self) -> str:
        return self.name.split("[", 1)[0]

    @property
    def vacuous(self) -> bool:
        return not self.hypothesis_met

    @property
    def failed(self) -> bool:
        return self.hypothesis_met and not self.passed


def _check(name: str, ok: bool, witness: Optional[str] = None) -> CheckResult:
    return CheckResult(name, True, bool(ok), None if ok else witness)


def _vacuous(name: str) -> CheckResult:
    return CheckResult(name, False, True)


@dataclass
class VerificationReport:
    instance_id: str
    exponents: List[List[str]] = field(default_factory=list)
    checks: List[CheckResult] = field(default_factory=list)

    def extend(self, results) -> None:
        self.checks.extend(results)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.failed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        checks = sorted(self.checks, key=lambda c: c.name)
        return {
            "instance_id": self.instance_id,
            "exponents": self.exponents,
            "summary": {
                "checks": len(checks),
                "failed": sum(1 for c in checks if c.failed),
                "vacuous": sum(1 for c in checks if c.vacuous),
            },
            "checks": [asdict(c) for c in checks],
        }


# ---------------------------------------------------------------------
# INEQUALITIES
# ---------------------------------------------------------------------
def _fmt(x: Optional[Fraction]) -> str:
    return "undefined" if x is None else format_rational(x)


def check_lemma_inequalities(inv: DerivedInvariants, table: Optional[PoleTable]) -> VerificationReport:
    """The inequalities among the quotients b/B, one entry per index tuple in range."""
    report = VerificationReport(instance_id="")
    if inv.g == 0 or table is None:
        report.extend(_vacuous(name) for name in INEQUALITY_CHECKS)
        return report

    g, ell, e, n = inv.g, inv.ell, inv.e, inv.n
    Q = table.quotient
    seen = set()

    def add(result: CheckResult) -> None:
        seen.add(result.base)
        report.checks.append(result)

    for k in range(1, g + 1):
        first = ell[k - 1] + 1
        nk_inv = Fraction(1, n[k - 1])
        for i in range(first, ell[k] + 1):
            tag = f"[k={k},i={i}]"
            r = inv.alpha_value(k, i)
            q_ki, q_first = Q(k, i), Q(k, first)

            add(_check(
                "band-minimum" + tag,
                q_first is not None and q_ki is not None and q_first <= q_ki,
                f"b/B at i={first} is {_fmt(q_first)} > {_fmt(q_ki)}",
            ))
            add(_check(
                "lower-bound" + tag,
                q_ki is not None and Fraction(1, e[k - 1]) < q_ki,
                f"1/e_{k - 1} = 1/{e[k - 1]} >= {_fmt(q_ki)}",
            ))

            if r > nk_inv:
                add(_check(
                    "upper-bound" + tag,
                    q_ki is not None and q_ki <= Fraction(1, e[k]),
                    f"{_fmt(q_ki)} > 1/e_{k} = 1/{e[k]}",
                ))
                for j in range(k, g + 1):
                    q_ji = Q(j, i)
                    add(_check(
                        f"vertical-order[k={k},i={i},j={j}]",
                        q_ki is not None and q_ji is not None and q_ki <= q_ji,
                        f"{_fmt(q_ki)} > b/B at level {j} = {_fmt(q_ji)}",
                    ))
            else:
                add(_vacuous("upper-bound" + tag))
                add(_vacuous("vertical-order" + tag))

            if k < g and r == nk_inv:
                q_next = Q(k + 1, i)
                add(_check(
                    "special-bracket" + tag,
                    q_next is not None and Fraction(1, e[k]) < q_next < Fraction(1, e[k + 1]),
                    f"b/B at level {k + 1} = {_fmt(q_next)} outside (1/{e[k]}, 1/{e[k + 1]})",
                ))
                for j in range(k, g + 1):
                    q_ji = Q(j, i)
                    add(_check(
                        f"vertical-order-special[k={k},i={i},j={j}]",
                        q_next is not None and q_ji is not None and q_next <= q_ji,
                        f"b/B at level {k + 1} = {_fmt(q_next)} > level {j} = {_fmt(q_ji)}",
                    ))
            else:
                add(_vacuous("special-bracket" + tag))
                add(_vacuous("vertical-order-special" + tag))

            if k < g and inv.alpha_value(k, first) == nk_inv:
                q_nf, q_ni = Q(k + 1, first), Q(k + 1, i)
                add(_check(
                    "next-band-minimum" + tag,
                    q_nf is not None and q_ni is not None and q_nf <= q_ni,
                    f"level {k + 1}: b/B at i={first} is {_fmt(q_nf)} > {_fmt(q_ni)}",
                ))
            else:
                add(_vacuous("next-band-minimum" + tag))

    # b^(k)/B^(k) <= b^(k+1)/B^(k+1)  <=>  q^(k+1) e_k b^(k) <= q^(k+1) B^(k)
    for k in range(1, g):
        for i in range(ell[k - 1] + 1, ell[g] + 1):
            tag = f"[k={k},i={i}]"
            b, B = table.bB(k, i)
            if B == 0:
                add(_vacuous("vertical-order-equivalence" + tag))
                continue
            q_next = inv.pq(k + 1, i)[1]
            lhs = Q(k, i) <= Q(k + 1, i)
            rhs = q_next * e[k] * b <= q_next * B
            add(_check(
                "vertical-order-equivalence" + tag,
                lhs == rhs,
                f"ratio order {lhs} but integer criterion {rhs}",
            ))

    report.extend(_vacuous(name) for name in INEQUALITY_CHECKS if name not in seen)
    return report


# ---------------------------------------------------------------------
# INVERSION
# ---------------------------------------------------------------------
def check_inversion_invariance(ce: CharExponents) -> CheckResult:
    """lct is unchanged by the inversion when lambda_1 = (1/n_1, 0, ..., 0)."""
    name = "inversion-invariance"
    normalized, _ = lex_normalize(ce)
    if normalized.is_smooth:
        return _vacuous(name)
    inv = validate(normalized)
    first = normalized.lambdas[0]
    if first[0] != Fraction(1, inv.n[0]) or any(c != 0 for c in first.coords[1:]):
        return _vacuous(name)
    before = lct_closed_form(inv).lct
    inverted = invert(normalized)
    after = lct_closed_form(validate(inverted)).lct
    return _check(name, before == after, f"lct {_fmt(before)} before, {_fmt(after)} after inversion")


# ---------------------------------------------------------------------
# FULL SUITE
# ---------------------------------------------------------------------
def _structural_checks(original: CharExponents, inv: DerivedInvariants, lct_value: Fraction) -> List[CheckResult]:
    ce, g, d = inv.exponents, inv.g, inv.d
    out = [
        _check("n-at-least-two", all(x >= 2 for x in inv.n), f"n = {list(inv.n)}"),
        _check(
            "e-chain",
            inv.e[-1] == 1 and all(inv.e[j - 1] == inv.n[j - 1] * inv.e[j] for j in range(1, g + 1)),
            f"e = {list(inv.e)}, n = {list(inv.n)}",
        ),
        _check(
            "p-divides-n",
            all(inv.n[j] % p == 0 for j in range(g) for p, _ in inv.alpha[j]),
            f"alpha = {[list(r) for r in inv.alpha]}, n = {list(inv.n)}",
        ),
    ]
    ell = inv.ell
    if g:
        out.append(_check(
            "ell-chain",
            ell[0] == 0 < ell[1] and all(ell[j] <= ell[j + 1] for j in range(1, g)) and ell[g] <= d,
            f"ell = {list(ell)}",
        ))
        bands_ok = all(
            ce.lambdas[j - 1][i - 1] >= ce.lambdas[j - 1][i]
            for j in range(1, g + 1)
            for i in range(ell[j - 1] + 1, ell[j])
        )
        out.append(_check("band-monotone", bands_ok, f"exponents {ce.to_rows()}"))
        out.append(_check(
            "lct-bounds",
            Fraction(1, inv.e[0]) < lct_value <= ONE,
            f"lct = {_fmt(lct_value)}, e_0 = {inv.e[0]}",
        ))
    else:
        out.append(_vacuous("ell-chain"))
        out.append(_vacuous("band-monotone"))
        out.append(_check("lct-bounds", lct_value == ONE, f"smooth lct = {_fmt(lct_value)}"))

    renormalized = validate(lex_normalize(original)[0])
    out.append(_check(
        "normalization-roundtrip",
        sorted(renormalized.n) == sorted(inv.n),
        f"n = {list(inv.n)} vs {list(renormalized.n)}",
    ))
    return out


def verify_instance(ce: CharExponents, instance_id: str = "instance") -> VerificationReport:
    normalized, permutation = lex_normalize(ce)
    inv = validate(normalized)
    report = VerificationReport(instance_id=instance_id, exponents=ce.to_rows())

    if inv.g == 0:
        closed = lct_closed_form(inv, permutation)
        report.extend(_structural_checks(ce, inv, closed.lct))
        report.extend(check_lemma_inequalities(inv, None).checks)
        for name in ("oracle-table", "closed-form-vs-minimum", "largest-pole", "a-value-identities"):
            report.checks.append(_vacuous(name))
        report.checks.append(_check("log-canonical-consistency", closed.log_canonical, "smooth germ not lc"))
        report.checks.append(check_inversion_invariance(normalized))
        return report

    table = bB_table(inv)
    closed = lct_closed_form(inv, permutation, table)
    report.extend(_structural_checks(ce, inv, closed.lct))

    oracle = oracle_bB(inv)
    report.checks.append(_check(
        "oracle-table",
        oracle == table,
        f"recurrence {[list(r) for r in table.pairs]} vs unrolled {[list(r) for r in oracle.pairs]}",
    ))
    minimum = lct_min(table)
    report.checks.append(_check(
        "closed-form-vs-minimum",
        closed.lct == minimum,
        f"{closed.case_tag.value} gives {_fmt(closed.lct)}, min of candidates is {_fmt(minimum)}",
    ))
    poles = pole_candidates(table)
    report.checks.append(_check(
        "largest-pole",
        bool(poles) and max(poles) == -closed.lct,
        f"largest candidate {_fmt(max(poles) if poles else None)} vs -lct = {_fmt(-closed.lct)}",
    ))
    try:
        a_values(inv, table)
        report.checks.append(_check("a-value-identities", True))
    except QoLctError as exc:
        report.checks.append(_check("a-value-identities", False, exc.message))
    try:
        is_log_canonical(normalized, inv)
        report.checks.append(_check("log-canonical-consistency", True))
    except QoLctError as exc:
        report.checks.append(_check("log-canonical-consistency", False, exc.message))

    report.extend(check_lemma_inequalities(inv, table).checks)
    try:
        report.checks.append(check_inversion_invariance(normalized))
    except QoLctError as exc:
        report.checks.append(_check("inversion-invariance", False, f"{exc.code}: {exc.message}"))
    return report


# ---------------------------------------------------------------------
# RANDOM INSTANCES
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class GeneratorConfig:
    d: int
    g: int
    max_denominator: int = 12
    max_integer_part: int = 2
    seed: int = 0
    forced_fraction: float = 0.0  # share of draws with lambda_1 = (1/k, 0, ..., 0)
    zero_rate: float = 0.25  # chance an increment coordinate is exactly 0
    max_redraws: int = DEFAULT_MAX_REDRAWS

    def __post_init__(self):
        for name in ("d", "g", "max_denominator", "max_integer_part", "max_redraws"):
            if getattr(self, name) < 1:
                raise PreconditionFailed(f"generator bound {name} must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise PreconditionFailed("seed must be a 64-bit unsigned integer")


def _draw_increment(rng: random.Random, cfg: GeneratorConfig) -> Fraction:
    if rng.random() < cfg.zero_rate:
        return Fraction(0)
    den = rng.randint(1, cfg.max_denominator)
    num = rng.randint(0, cfg.max_integer_part * den)
    return Fraction(num, den)


def generate_random(cfg: GeneratorConfig) -> CharExponents:
    """A lex-normalized valid instance, deterministic in ``cfg``."""
    rng = random.Random(cfg.seed)
    forced = rng.random() < cfg.forced_fraction and cfg.max_denominator >= 2
    lambdas: List[ExponentVector] = []
    previous = ExponentVector.zero(cfg.d)
    for level in range(1, cfg.g + 1):
        current = lattice_chain(CharExponents(cfg.d, tuple(lambdas)))[-1]
        for attempt in range(cfg.max_redraws):
            if level == 1 and forced:
                k = rng.randint(2, cfg.max_denominator)
                candidate = ExponentVector((Fraction(1, k),) + (Fraction(0),) * (cfg.d - 1))
            else:
                candidate = ExponentVector(tuple(c + _draw_increment(rng, cfg) for c in previous))
            if not contains(current, candidate):
                break
            logger.debug("level %d: draw %d rejected (in M_%d)", level, attempt + 1, level - 1)
        else:
            raise GenerationExhausted(
                f"no exponent outside M_{level - 1} after {cfg.max_redraws} draws "
                f"(d={cfg.d}, g={cfg.g}, max_denominator={cfg.max_denominator})"
            )
        lambdas.append(candidate)
        previous = candidate

    normalized, _ = lex_normalize(CharExponents(cfg.d, tuple(lambdas)))
    validate(normalized)
    return normalized


# ---------------------------------------------------------------------
# CORPUS
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class CorpusConfig:
    count: int
    seed: int
    d: Optional[int] = None  # drawn per instance from 1..max_dimension when None
    g: Optional[int] = None
    max_denominator: int = 12
    max_integer_part: int = 2
    forced_fraction: float = 0.2
    max_dimension: int = 4
    max_depth: int = 4
    max_redraws: int = DEFAULT_MAX_REDRAWS
    workers: int = 1

    def __post_init__(self):
        if self.count < 0:
            raise PreconditionFailed(f"count must be >= 0, got {self.count}")
        for name in ("d", "g"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise PreconditionFailed(f"{name} must be >= 1, got {value}", locus=f"--{name}")
        for name in ("max_dimension", "max_depth", "workers"):
            if getattr(self, name) < 1:
                raise PreconditionFailed(f"{name} must be >= 1")


def corpus_items(cfg: CorpusConfig) -> List[Tuple[str, GeneratorConfig]]:
    """Per-instance generator configs; each instance owns its seed."""
    master = random.Random(cfg.seed)
    items = []
    for index in range(cfg.count):
        d = master.randint(1, cfg.max_dimension) if cfg.d is None else cfg.d
        g = master.randint(1, cfg.max_depth) if cfg.g is None else cfg.g
        seed = master.getrandbits(64)
        gen = GeneratorConfig(
            d=d,
            g=g,
            max_denominator=cfg.max_denominator,
            max_integer_part=cfg.max_integer_part,
            seed=seed,
            forced_fraction=cfg.forced_fraction,
            max_redraws=cfg.max_redraws,
        )
        items.append((f"{cfg.seed}-{index:06d}", gen))
    return items


def _verify_item(item: Tuple[str, GeneratorConfig]) -> VerificationReport:
    instance_id, gen = item
    return verify_instance(generate_random(gen), instance_id)


@dataclass
class CorpusReport:
    config: CorpusConfig
    reports: List[VerificationReport]

    @property
    def failures(self) -> List[Tuple[VerificationReport, CheckResult]]:
        return [(r, c) for r in self.reports for c in r.failures]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        by_name: Dict[str, Dict[str, int]] = {}
        for r in self.reports:
            for c in r.checks:
                slot = by_name.setdefault(c.base, {"checked": 0, "vacuous": 0, "failed": 0})
                if c.vacuous:
                    slot["vacuous"] += 1
                else:
                    slot["checked"] += 1
                    slot["failed"] += int(c.failed)
        failures = sorted(
            (
                {"instance_id": r.instance_id, "exponents": r.exponents, "check": c.name, "witness": c.witness}
                for r, c in self.failures
            ),
            key=lambda f: (f["instance_id"], f["check"]),
        )
        cfg = asdict(self.config)
        cfg.pop("workers")
        return {
            "config": cfg,
            "summary": {
                "instances": len(self.reports),
                "checks": sum(len(r.checks) for r in self.reports),
                "vacuous": sum(1 for r in self.reports for c in r.checks if c.vacuous),
                "failed": len(failures),
            },
            "checks_by_name": dict(sorted(by_name.items())),
            "failures": failures,
        }


def run_corpus(cfg: CorpusConfig) -> CorpusReport:
    items = corpus_items(cfg)
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            reports = list(pool.map(_verify_item, items, chunksize=max(1, len(items) // (4 * cfg.workers))))
    else:
        reports = [_verify_item(item) for item in items]
    reports.sort(key=lambda r: r.instance_id)
    logger.info("verified %d instances, %d failing checks", len(reports), sum(len(r.failures) for r in reports))
    return CorpusReport(cfg, reports)
