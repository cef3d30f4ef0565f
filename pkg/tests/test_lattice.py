from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from hilbstab.lattice import (
    K3Surface,
    MukaiVector,
    dual_vector,
    euler_char,
    euler_pair,
    ideal_sheaf_vector,
    mukai_pairing,
    mukai_square,
    slope_on_X,
    twisted_chi,
)

surfaces = st.integers(1, 120).map(lambda n: K3Surface(2 * n))
vectors = st.builds(
    MukaiVector, st.integers(-40, 40), st.integers(-6, 6), st.integers(-40, 40)
)
ks = st.integers(1, 8)


# ---------------------------------------------------------------- pairing


def test_pairing_worked_example():
    S = K3Surface(50)
    v = MukaiVector(3, 1, 8)
    assert mukai_pairing(S, v, v) == 2


def test_pairing_structure_sheaf():
    v = MukaiVector(1, 0, 1)
    assert mukai_pairing(K3Surface(2), v, v) == -2
    assert mukai_pairing(K3Surface(100), v, v) == -2


def test_pairing_ideal_sheaf_square():
    # <v(I_Z), v(I_Z)> = 2k - 2
    v = ideal_sheaf_vector(2)
    assert mukai_pairing(K3Surface(6), v, v) == 2
    for k in range(1, 10):
        w = ideal_sheaf_vector(k)
        assert mukai_square(K3Surface(8), w) == 2 * k - 2


def test_square_examples():
    assert mukai_square(K3Surface(50), MukaiVector(3, 1, 8)) == 2
    assert mukai_square(K3Surface(186), MukaiVector(5, 1, 18)) == 6
    assert mukai_square(K3Surface(50), MukaiVector(1, 1, 26)) == -2


@given(surfaces, vectors, vectors)
def test_pairing_symmetric(S, v, w):
    assert mukai_pairing(S, v, w) == mukai_pairing(S, w, v)


@given(surfaces, vectors, vectors, vectors)
def test_pairing_bilinear(S, v, v2, w):
    assert mukai_pairing(S, v + v2, w) == mukai_pairing(S, v, w) + mukai_pairing(
        S, v2, w
    )
    assert mukai_pairing(S, w, v + v2) == mukai_pairing(S, w, v) + mukai_pairing(
        S, w, v2
    )


@given(surfaces, vectors)
def test_square_even(S, v):
    assert mukai_square(S, v) % 2 == 0


# ------------------------------------------------------------- Euler side


def test_euler_pair_examples():
    S = K3Surface(50)
    v = MukaiVector(3, 1, 8)
    assert euler_pair(S, v, v) == -2
    o = MukaiVector(1, 0, 1)
    assert euler_pair(K3Surface(4), o, o) == 2
    i3 = ideal_sheaf_vector(3)
    assert euler_pair(K3Surface(12), i3, i3) == -4


def test_euler_char_examples():
    assert euler_char(MukaiVector(3, 1, 8)) == 11
    assert euler_char(MukaiVector(1, 0, 1)) == 2
    assert euler_char(MukaiVector(5, 1, 18)) == 23


@given(surfaces, vectors)
def test_riemann_roch_against_structure_sheaf(S, v):
    # pairing against v(O_X) = (1, 0, 1) recovers chi
    assert euler_pair(S, MukaiVector(1, 0, 1), v) == euler_char(v)


def test_twisted_chi_examples():
    assert twisted_chi(MukaiVector(3, 1, 8), 2) == 5
    assert twisted_chi(MukaiVector(1, 0, 1), 1) == 1
    assert twisted_chi(MukaiVector(5, 1, 18), 3) == 8


def test_twisted_chi_rejects_nonpositive_k():
    with pytest.raises(ValueError):
        twisted_chi(MukaiVector(3, 1, 8), 0)
    with pytest.raises(ValueError):
        twisted_chi(MukaiVector(3, 1, 8), -2)


# ------------------------------------------------------- dual / ideal sheaf


def test_dual_examples():
    assert dual_vector(MukaiVector(3, 1, 8)) == MukaiVector(3, -1, 8)
    assert dual_vector(MukaiVector(1, 0, 1)) == MukaiVector(1, 0, 1)
    v = MukaiVector(7, -2, 5)
    assert dual_vector(dual_vector(v)) == v


@given(surfaces, vectors)
def test_dual_preserves_square(S, v):
    assert mukai_square(S, dual_vector(v)) == mukai_square(S, v)


def test_ideal_sheaf_vector_examples():
    assert ideal_sheaf_vector(2) == MukaiVector(1, 0, -1)
    assert ideal_sheaf_vector(1) == MukaiVector(1, 0, 0)
    with pytest.raises(ValueError):
        ideal_sheaf_vector(0)


@given(surfaces, vectors, ks)
def test_ideal_sheaf_consistency(S, v, k):
    # chi(dual(E), I_Z) = chi(E) - r*k for every surface and vector
    lhs = euler_pair(S, dual_vector(v), ideal_sheaf_vector(k))
    assert lhs == euler_char(v) - v.r * k


def test_ideal_sheaf_consistency_worked_example():
    S = K3Surface(50)
    v = MukaiVector(3, 1, 8)
    assert euler_pair(S, dual_vector(v), ideal_sheaf_vector(2)) == 11 - 6 == 5


@given(ks)
def test_ideal_sheaf_identities(k):
    S = K3Surface(10)
    assert mukai_square(S, ideal_sheaf_vector(k)) == 2 * k - 2
    assert euler_char(ideal_sheaf_vector(k)) == 2 - k


# ------------------------------------------------------------------ slope


def test_slope_examples():
    S = K3Surface(50)
    assert slope_on_X(S, MukaiVector(3, 1, 8)) == Fraction(50, 3)
    assert slope_on_X(K3Surface(8), MukaiVector(1, 0, 1)) == 0
    assert slope_on_X(S, MukaiVector(3, -1, 8)) == Fraction(-50, 3)


def test_slope_rejects_nonpositive_rank():
    with pytest.raises(ValueError):
        slope_on_X(K3Surface(2), MukaiVector(0, 1, 1))
    with pytest.raises(ValueError):
        slope_on_X(K3Surface(2), MukaiVector(-3, 1, 1))


@given(surfaces, st.integers(1, 40), st.integers(-6, 6), st.integers(-40, 40))
def test_slope_negates_under_dual(S, r, m, s):
    v = MukaiVector(r, m, s)
    assert slope_on_X(S, dual_vector(v)) == -slope_on_X(S, v)


# ------------------------------------------------------------- type guards


def test_surface_rejects_bad_h_squared():
    for bad in (0, -2, 3, 49):
        with pytest.raises(ValueError):
            K3Surface(bad)
    with pytest.raises(ValueError):
        K3Surface(2.0)


def test_vector_rejects_non_integers():
    with pytest.raises(ValueError):
        MukaiVector(1.5, 1, 1)
    with pytest.raises(ValueError):
        MukaiVector(1, 1, "8")


def test_vector_arithmetic():
    a = MukaiVector(1, 2, 3)
    b = MukaiVector(4, -1, 7)
    assert a + b == MukaiVector(5, 1, 10)
    assert a - b == MukaiVector(-3, 3, -4)
    assert -a == MukaiVector(-1, -2, -3)
