"""Graded ranking over normalized tables."""

from fractions import Fraction as F

import pytest

from lukaq.dataset import bundled_normalized
from lukaq.engine import answer_set, evaluate_query
from lukaq.errors import UnboundVariable
from lukaq.formula import Falsum, IterSum, Verum, evaluate
from lukaq.parser import parse

from conftest import random_formula


@pytest.fixture(scope="module")
def cars():
    return bundled_normalized()


def degrees(result):
    return {e.row_id: e.degree for e in result.entries}


class TestRanking:
    def test_verum_everywhere_one(self, cars):
        result = evaluate_query(Verum(), cars)
        assert len(result.entries) == 30
        assert all(e.degree == 1 for e in result.entries)

    def test_falsum_empty_answer_set(self, cars):
        result = evaluate_query(Falsum(), cars)
        assert answer_set(result) == []
        assert len(result.entries) == 30

    def test_sorted_by_degree_then_id(self, cars):
        result = evaluate_query(parse("X11^2 and (!X12)"), cars)
        ranks = [(e.degree, e.row_id) for e in result.entries]
        assert ranks == sorted(ranks, key=lambda r: (-r[0], r[1]))

    def test_brute_force_oracle(self, cars):
        # independent oracle: min(max(0, 8a - 7), max(0, 4(1-u) - 3)) per row
        result = evaluate_query(parse("X11^8 and (!X12)^4"), cars)
        expected = {}
        for row_id, world in cars.worlds.items():
            a, u = world["X11"], world["X12"]
            expected[row_id] = min(
                max(F(0), 8 * a - 7), max(F(0), 4 * (1 - u) - 3)
            )
        assert degrees(result) == expected
        order = [e.row_id for e in result.entries]
        brute = sorted(expected, key=lambda i: (-expected[i], i))
        assert order == brute

    def test_limit(self, cars):
        result = evaluate_query(parse("X11"), cars, limit=10)
        assert len(result.entries) == 10

    def test_limit_validation(self, cars):
        with pytest.raises(ValueError):
            evaluate_query(Verum(), cars, limit=0)

    def test_only_positive(self, cars):
        result = evaluate_query(parse("X11^8"), cars, only_positive=True)
        assert all(e.degree > 0 for e in result.entries)
        full = evaluate_query(parse("X11^8"), cars)
        assert len(result.entries) < len(full.entries)

    def test_unbound_variable_names_first(self, cars):
        with pytest.raises(UnboundVariable) as err:
            evaluate_query(parse("X11 and X99 and X98"), cars)
        assert err.value.name == "X99"

    def test_display_fields_present(self, cars):
        result = evaluate_query(parse("X11"), cars, limit=1)
        assert "manufacturer" in result.entries[0].display

    def test_deterministic(self, cars):
        phi = parse("X11^2 and (!X12)")
        first = evaluate_query(phi, cars)
        second = evaluate_query(phi, cars)
        assert first == second


class TestAnswerSet:
    def test_degree_one_prefix(self, cars):
        result = evaluate_query(parse("2*(X11^2 and (!X12) and (!X0)^3 and (!X6)^2)"), cars)
        ids = answer_set(result)
        assert ids == [21]
        assert all(e.degree < 1 for e in result.entries if e.row_id not in ids)

    def test_all_below_one(self, cars):
        result = evaluate_query(parse("X11^2 and (!X12) and (!X0)^3 and (!X6)^2"), cars)
        assert answer_set(result) == []


class TestStructuralProperties:
    def test_relaxation_coarsens_ranking(self, cars, rng):
        # n*phi never inverts a strict order, it can only merge rows at 1
        for _ in range(400):
            phi = random_formula(rng, variables=("X0", "X6", "X11", "X12"), depth=3)
            n = rng.randint(1, 6)
            relaxed = IterSum(n, phi)
            a, b = rng.sample(list(cars.row_ids), 2)
            da, db = evaluate(phi, cars.worlds[a]), evaluate(phi, cars.worlds[b])
            ra, rb = evaluate(relaxed, cars.worlds[a]), evaluate(relaxed, cars.worlds[b])
            if da < db:
                assert ra <= rb

    def test_conjunction_never_increases(self, cars, rng):
        for _ in range(200):
            phi = random_formula(rng, variables=("X0", "X11"), depth=2)
            psi = random_formula(rng, variables=("X6", "X12"), depth=2)
            row = rng.choice(list(cars.row_ids))
            w = cars.worlds[row]
            assert evaluate(parse(f"({_t(phi)}) and ({_t(psi)})"), w) <= evaluate(phi, w)

    def test_truncated_difference_zero_diagonal(self, cars):
        # a row with equal pros and cons scores 0 under the difference query
        w = cars.worlds[27]
        assert evaluate(parse("X11^2 and (!X12)"), w) == w["X0"]
        assert evaluate(parse("(X11^2 and (!X12)) - (X0)"), w) == 0

    def test_difference_vs_conjunction_argmax_differ(self, cars):
        diff = degrees(evaluate_query(parse("(X11^2 and (!X12)) - (X0)"), cars))
        conj = degrees(evaluate_query(parse("X11^2 and (!X12) and (!X0)"), cars))
        argmax_diff = max(diff, key=lambda i: (diff[i], -i))
        argmax_conj = max(conj, key=lambda i: (conj[i], -i))
        assert argmax_diff != argmax_conj


def _t(phi):
    from lukaq.parser import format_formula

    return format_formula(phi)
