from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import GenerationExhausted, PreconditionFailed
from exponents import CharExponents, is_lex_ordered, validate
from lct import bB_table
from oracle import oracle_bB
from verify import (
    INEQUALITY_CHECKS,
    CorpusConfig,
    GeneratorConfig,
    check_inversion_invariance,
    check_lemma_inequalities,
    corpus_items,
    generate_random,
    run_corpus,
    verify_instance,
)


# ------------------------- oracle ------------------------
def test_oracle_matches_recurrence(example_one, example_two):
    for ce in (example_one, example_two):
        inv = validate(ce)
        assert oracle_bB(inv) == bB_table(inv)
    assert oracle_bB(validate(example_one)).bB(2, 1) == (13, 22)
    assert oracle_bB(validate(example_two)).bB(2, 3) == (14, 33)


def test_oracle_single_level():
    inv = validate(CharExponents.of(2, ("2/3", "1/2")))
    table = oracle_bB(inv)
    for i in (1, 2):
        p, q = inv.pq(1, i)
        assert table.bB(1, i) == (p + q, inv.e[0] * q)


# ------------------------- inequalities ------------------------
def test_inequality_checks_example_one(example_one):
    inv = validate(example_one)
    report = check_lemma_inequalities(inv, bB_table(inv))
    assert report.ok
    names = {c.name: c for c in report.checks}
    assert names["special-bracket[k=1,i=1]"].hypothesis_met
    assert names["upper-bound[k=1,i=1]"].vacuous
    assert not any(name.startswith("lower-bound[k=2") for name in names)


def test_inequality_checks_example_two(example_two):
    inv = validate(example_two)
    report = check_lemma_inequalities(inv, bB_table(inv))
    assert report.ok
    names = {c.name: c for c in report.checks}
    assert names["special-bracket[k=1,i=1]"].hypothesis_met
    assert names["upper-bound[k=2,i=3]"].hypothesis_met
    assert names["vertical-order-equivalence[k=1,i=3]"].vacuous
    assert {c.base for c in report.checks} == set(INEQUALITY_CHECKS)


def test_inequality_checks_smooth():
    report = check_lemma_inequalities(validate(CharExponents(2)), None)
    assert len(report.checks) == len(INEQUALITY_CHECKS)
    assert all(c.vacuous for c in report.checks)


# ------------------------- inversion ------------------------
def test_inversion_invariance(invertible, example_one):
    result = check_inversion_invariance(invertible)
    assert result.hypothesis_met and result.passed
    assert check_inversion_invariance(CharExponents.of(1, ("1/2",))).passed
    assert check_inversion_invariance(example_one).vacuous


# ------------------------- full suite ------------------------
def test_verify_golden_instances(example_one, example_two, invertible):
    for ce in (example_one, example_two, invertible, CharExponents(2)):
        report = verify_instance(ce, "golden")
        assert report.ok, [c for c in report.failures]


def test_verify_report_document(example_one):
    doc = verify_instance(example_one, "ex1").to_dict()
    assert doc["instance_id"] == "ex1"
    assert doc["summary"]["failed"] == 0
    assert doc["exponents"] == [["1/3", "1/3"], ["7/6", "2/3"]]
    names = [c["name"] for c in doc["checks"]]
    assert names == sorted(names)
    assert "oracle-table" in names and "closed-form-vs-minimum" in names


# ------------------------- generator ------------------------
def test_generator_is_deterministic():
    cfg = GeneratorConfig(d=3, g=3, seed=42)
    assert generate_random(cfg) == generate_random(cfg)


def test_generator_output_is_valid():
    for seed in range(20):
        ce = generate_random(GeneratorConfig(d=2, g=2, seed=seed))
        assert ce.g == 2
        assert is_lex_ordered(ce)
        validate(ce)


def test_generator_forced_first_exponent():
    ce = generate_random(GeneratorConfig(d=3, g=2, seed=7, forced_fraction=1.0))
    first = ce.lambdas[0]
    assert first[0].numerator == 1 and first[0] < 1
    assert first[1] == first[2] == 0


def test_generator_exhausted():
    with pytest.raises(GenerationExhausted):
        generate_random(GeneratorConfig(d=2, g=1, max_denominator=1, max_redraws=5))


@pytest.mark.parametrize("kwargs", [{"d": 0, "g": 1}, {"d": 1, "g": 0}, {"d": 1, "g": 1, "seed": -1}])
def test_generator_config_errors(kwargs):
    with pytest.raises(PreconditionFailed):
        GeneratorConfig(**kwargs)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 3), st.integers(1, 3), st.sampled_from([0.0, 1.0]))
def test_random_instances_pass_every_check(seed, d, g, forced):
    cfg = GeneratorConfig(d=d, g=g, seed=seed, max_denominator=6, forced_fraction=forced)
    report = verify_instance(generate_random(cfg), str(seed))
    assert report.ok, [(c.name, c.witness) for c in report.failures]


# ------------------------- corpus ------------------------
def test_corpus_items_are_seeded():
    cfg = CorpusConfig(count=5, seed=3)
    first, second = corpus_items(cfg), corpus_items(cfg)
    assert first == second
    assert [instance_id for instance_id, _ in first] == [f"3-{k:06d}" for k in range(5)]
    assert all(1 <= gen.d <= 4 and 1 <= gen.g <= 4 for _, gen in first)


def test_corpus_run():
    corpus = run_corpus(CorpusConfig(count=25, seed=11, max_denominator=8))
    assert corpus.ok
    doc = corpus.to_dict()
    assert doc["summary"]["instances"] == 25
    assert doc["summary"]["failed"] == 0
    assert "workers" not in doc["config"]
    assert doc["checks_by_name"]["oracle-table"]["failed"] == 0


def test_corpus_workers_do_not_change_the_report():
    single = run_corpus(CorpusConfig(count=8, seed=5, workers=1)).to_dict()
    pooled = run_corpus(CorpusConfig(count=8, seed=5, workers=2)).to_dict()
    assert single == pooled


@pytest.mark.parametrize(
    "kwargs, locus",
    [({"d": 0}, "--d"), ({"g": 0}, "--g"), ({"count": -1}, None), ({"workers": 0}, None)],
)
def test_corpus_config_errors(kwargs, locus):
    with pytest.raises(PreconditionFailed) as info:
        CorpusConfig(**{"count": 1, "seed": 0, **kwargs})
    assert info.value.locus == locus


def test_corpus_fixed_dimension_is_kept():
    items = corpus_items(CorpusConfig(count=6, seed=4, d=1, g=3))
    assert all(gen.d == 1 and gen.g == 3 for _, gen in items)
