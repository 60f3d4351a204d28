import sys
from pathlib import Path

import pytest

from parcensus import (
    BitString,
    CnfFormula,
    ExternalCounter,
    OracleLog,
    ParcensusError,
    ResourceLimitError,
    UsatQOracle,
    anti_sat,
    const_no,
    const_yes,
    count_models,
    generate_queries,
    make_machine,
    member_list,
    q_family,
    seeded_random,
    to_dimacs,
    tseitin_parsimonious,
    usatq_answer,
)
from parcensus.circuit import Circuit, Gate

EXTERNAL = [sys.executable, str(Path(__file__).parent / "external_count.py")]

FALSE_F = CnfFormula.constant_false(2)
ONE_MODEL_F = CnfFormula(2, 2, ((1,), (2,)))          # only 11
TWO_MODEL_F = tseitin_parsimonious(
    Circuit(2, (Gate.input(1), Gate.input(2), Gate.xor(0, 1)), 2)
)
FOUR_MODEL_F = CnfFormula(2, 2, ())


class TestUsatqAnswer:
    def test_zero_models_forced_no(self):
        for predicate in q_family(0):
            assert usatq_answer(FALSE_F, predicate) == 0

    def test_one_model_forced_yes(self):
        for predicate in q_family(0):
            assert usatq_answer(ONE_MODEL_F, predicate) == 1

    def test_muddle_passthrough(self):
        assert usatq_answer(TWO_MODEL_F, const_yes()) == 1
        assert usatq_answer(TWO_MODEL_F, const_no()) == 0

    def test_cap_propagates(self):
        wide = CnfFormula(30, 0, ())
        with pytest.raises(ResourceLimitError):
            usatq_answer(wide, const_no())


class TestQPredicates:
    def test_anti_sat_contradicts_satisfiability(self):
        assert anti_sat().verdict(to_dimacs(FALSE_F)) == 1
        assert anti_sat().verdict(to_dimacs(TWO_MODEL_F)) == 0
        # through the oracle it answers no on the whole muddle region
        assert usatq_answer(TWO_MODEL_F, anti_sat()) == 0
        assert usatq_answer(FOUR_MODEL_F, anti_sat()) == 0

    def test_seeded_random_reproducible(self):
        data = to_dimacs(TWO_MODEL_F)
        a = seeded_random(42).verdict(data)
        b = seeded_random(42).verdict(data)
        assert a == b
        verdicts = {seeded_random(s).verdict(data) for s in range(64)}
        assert verdicts == {0, 1}  # the coin is not constant across seeds

    def test_member_list(self):
        data = to_dimacs(TWO_MODEL_F)
        predicate = member_list([data])
        assert predicate.verdict(data) == 1
        assert predicate.verdict(to_dimacs(FOUR_MODEL_F)) == 0

    def test_q_kinds_agree_on_promise_region(self):
        for formula in (FALSE_F, ONE_MODEL_F):
            verdicts = {
                usatq_answer(formula, predicate)
                for predicate in q_family(9)
            }
            assert len(verdicts) == 1

    def test_q_kinds_differ_only_on_muddle(self):
        # subsetsum on 01 has paths {01, 11}: probing bit 2 at guess 1
        # hits both paths at once, a genuine count-2 muddle query
        lang = make_machine("subsetsum", (1,))
        x = BitString("01")
        queries = generate_queries(lang, x)
        maps = {}
        for predicate in (const_no(), const_yes()):
            oracle = UsatQOracle(predicate)
            maps[predicate.name] = oracle.answer_batch(queries)
        differing = {
            q.key
            for q in queries
            if maps["const-no"][q.key] != maps["const-yes"][q.key]
        }
        muddle = {
            q.key for q in queries if count_models(q.formula) >= 2
        }
        assert muddle  # non-vacuous: the instance really has a muddle region
        assert differing == muddle  # constants flip exactly the muddle


class TestBatches:
    def test_empty_battery(self):
        oracle = UsatQOracle(const_no())
        answers = oracle.answer_batch([])
        assert answers == {}
        assert len(oracle.log) == 1
        assert oracle.log.batches[0].canonical_ids == ()

    def test_xor2_battery_yes_pattern(self):
        # at the true census the four bit probes matching the sorted paths
        # (01, 10) answer yes; at guess 1 every bit pin selects exactly one
        # of the two paths, so those eight probes are forced yes as well
        lang = make_machine("xor2")
        x = BitString("0")
        oracle = UsatQOracle(const_no())
        answers = oracle.answer_batch(generate_queries(lang, x))
        yes_keys = {key for key, verdict in answers.items() if verdict}
        assert yes_keys == {
            (1, 1, 1, 0), (1, 1, 1, 1), (1, 1, 2, 0), (1, 1, 2, 1),
            (2, 1, 1, 0), (2, 1, 2, 1), (2, 2, 1, 1), (2, 2, 2, 0),
        }

    def test_two_seeds_differ_only_on_muddle(self):
        lang = make_machine("xor2")
        x = BitString("0")
        queries = generate_queries(lang, x)
        first = UsatQOracle(seeded_random(1)).answer_batch(queries)
        second = UsatQOracle(seeded_random(2)).answer_batch(queries)
        for query in queries:
            if first[query.key] != second[query.key]:
                assert count_models(query.formula) >= 2

    def test_batches_do_not_interleave(self):
        log = OracleLog()
        oracle = UsatQOracle(const_no(), log=log)
        lang = make_machine("xor2")
        oracle.answer_batch(generate_queries(lang, BitString("0")))
        oracle.answer_batch(generate_queries(lang, BitString("1")))
        assert len(log) == 2
        assert all(len(b.canonical_ids) == 12 for b in log.batches)


class TestExternalCounter:
    def test_agreeing_backend_is_quiet(self):
        oracle = UsatQOracle(
            const_no(), cross_check=ExternalCounter(EXTERNAL)
        )
        lang = make_machine("xor2")
        oracle.answer_batch(generate_queries(lang, BitString("0")))
        assert oracle.cross_check_failures == []

    def test_disagreeing_backend_recorded_not_authoritative(self):
        broken = ExternalCounter(EXTERNAL + ["--off-by-one"])
        oracle = UsatQOracle(const_no(), cross_check=broken)
        lang = make_machine("xor2")
        x = BitString("0")
        queries = generate_queries(lang, x)
        answers = oracle.answer_batch(queries)
        assert len(oracle.cross_check_failures) == len(queries)
        # verdicts still follow the internal enumerator
        clean = UsatQOracle(const_no()).answer_batch(queries)
        assert answers == clean

    def test_standalone_count(self):
        counter = ExternalCounter(EXTERNAL)
        assert counter.count(to_dimacs(TWO_MODEL_F)) == 2
        assert counter.count(to_dimacs(FALSE_F)) == 0

    def test_bad_output_raises(self):
        counter = ExternalCounter(
            [sys.executable, "-c", "print('not a number')"]
        )
        with pytest.raises(ParcensusError):
            counter.count(to_dimacs(FALSE_F))
