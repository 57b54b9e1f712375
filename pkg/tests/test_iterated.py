from fractions import Fraction

import numpy as np
import pytest

from trispectra.errors import InvalidQError
from trispectra.graph import complete_graph
from trispectra.iterated import (
    TRIANGLE_BASE,
    iterated_additive,
    iterated_kemeny,
    iterated_kirchhoff,
    iterated_multiplicative,
    pseudofractal_metrics,
)
from trispectra.metrics import hitting_oracle, kirchhoff_indices, resistance_oracle
from trispectra.transfer import GraphSummary, transferred_summary
from trispectra.triangulation import iterate_triangulation


def test_k0_returns_base():
    assert iterated_kemeny(TRIANGLE_BASE, 2, 0) == Fraction(4, 3)
    assert iterated_multiplicative(TRIANGLE_BASE, 3, 0) == 8
    assert iterated_additive(TRIANGLE_BASE, 1, 0) == 8
    assert iterated_kirchhoff(TRIANGLE_BASE, 1, 0) == 2


def test_single_step_matches_transfer():
    assert iterated_kemeny(TRIANGLE_BASE, 1, 1) == Fraction(14, 3)
    assert iterated_multiplicative(TRIANGLE_BASE, 1, 1) == 84
    assert iterated_additive(TRIANGLE_BASE, 1, 1) == 61
    assert iterated_kirchhoff(TRIANGLE_BASE, 1, 1) == Fraction(65, 6)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_telescoping_exact(q):
    chain = TRIANGLE_BASE
    for k in range(7):
        assert iterated_kemeny(TRIANGLE_BASE, q, k) == chain.kemeny
        assert iterated_multiplicative(TRIANGLE_BASE, q, k) == chain.multiplicative
        assert iterated_additive(TRIANGLE_BASE, q, k) == chain.additive
        assert iterated_kirchhoff(TRIANGLE_BASE, q, k) == chain.kirchhoff
        chain = transferred_summary(q, chain)


def test_telescoping_float():
    base = GraphSummary(
        n=3, m=3, kemeny=4 / 3, kirchhoff=2.0, additive=8.0, multiplicative=8.0
    )
    for q in (2, 3):
        chain = base
        for k in range(7):
            assert float(iterated_additive(base, q, k)) == pytest.approx(
                float(chain.additive), rel=1e-10
            )
            assert float(iterated_kirchhoff(base, q, k)) == pytest.approx(
                float(chain.kirchhoff), rel=1e-10
            )
            chain = transferred_summary(q, chain)


def test_pseudofractal_base_and_step():
    assert pseudofractal_metrics(1, 0) == (Fraction(4, 3), 8, 8, 2)
    assert pseudofractal_metrics(1, 1) == (Fraction(14, 3), 84, 61, Fraction(65, 6))


@pytest.mark.parametrize("q,k", [(1, 3), (2, 2), (3, 2), (2, 5)])
def test_pseudofractal_equals_iterated_triangle(q, k):
    kem, mul, add, kir = pseudofractal_metrics(q, k)
    assert kem == iterated_kemeny(TRIANGLE_BASE, q, k)
    assert mul == iterated_multiplicative(TRIANGLE_BASE, q, k)
    assert add == iterated_additive(TRIANGLE_BASE, q, k)
    assert kir == iterated_kirchhoff(TRIANGLE_BASE, q, k)


def test_oracle_agreement_on_constructed_iterates():
    # closed forms vs full numerical pipeline on R_{q,k}(K3)
    g = complete_graph(3)
    for q, k in ((1, 1), (1, 2), (2, 1), (2, 2)):
        r = iterate_triangulation(g, q, k)[-1].result
        res = resistance_oracle(r)
        kir, add, mul = kirchhoff_indices(r, res)
        pi = r.stationary_distribution()
        kem = float(hitting_oracle(r)[0, :] @ pi)
        got = pseudofractal_metrics(q, k)
        assert kem == pytest.approx(float(got[0]), rel=1e-7)
        assert mul == pytest.approx(float(got[1]), rel=1e-7)
        assert add == pytest.approx(float(got[2]), rel=1e-7)
        assert kir == pytest.approx(float(got[3]), rel=1e-7)


def test_leading_order_growth():
    # Kirchhoff index grows like (2q+1)^{2k} with the predicted constant
    for q in (1, 2, 3):
        k = 30
        ratio = pseudofractal_metrics(q, k)[3] / (2 * q + 1) ** (2 * k)
        limit = Fraction(9 * (2 * q + 3) ** 2, 8 * (2 * q + 1) * (2 * q + 5))
        assert abs(float(ratio / limit) - 1.0) < 1e-5


def test_bad_arguments():
    with pytest.raises(InvalidQError):
        iterated_kemeny(TRIANGLE_BASE, 0, 1)
    with pytest.raises(InvalidQError):
        pseudofractal_metrics(1, -1)


def test_large_k_exact_rationals_survive():
    # (2q+1)^{2k} exceeds double integer precision near k = 17 for q = 3;
    # the rational path must stay exact there
    val = iterated_multiplicative(TRIANGLE_BASE, 3, 20)
    chain = TRIANGLE_BASE
    for _ in range(20):
        chain = transferred_summary(3, chain)
    assert val == chain.multiplicative
