import pytest
from hypothesis import given
from hypothesis import strategies as st

from tricover.analyzer import (
    CoverParams,
    LiftError,
    N0Status,
    ParityError,
    beta_image,
    block_dims,
    generator_profile,
    h0_theta,
    lift_codim,
    n0_status,
    splitting,
)

GRID = [(m, r) for m in range(2, 9) for r in range(1, 9) if m % 2 == 0 or r % 2 == 0]
ODD_GRID = [(m, r) for m, r in GRID if m % 2]
EVEN_GRID = [(m, r) for m, r in GRID if m % 2 == 0]
grid_params = st.sampled_from(GRID).map(lambda mr: CoverParams(*mr))


def test_grid_is_nonempty():
    assert len(GRID) == 4 * 8 + 3 * 4


class TestParams:
    def test_odd_m_odd_r_rejected(self):
        with pytest.raises(ParityError, match="r must be even"):
            CoverParams(3, 3)

    @pytest.mark.parametrize("m, r", [(1, 2), (2, 0)])
    def test_out_of_range(self, m, r):
        with pytest.raises(ValueError):
            CoverParams(m, r)

    def test_cover_degree_fixed(self):
        with pytest.raises(ValueError, match="triple"):
            CoverParams(2, 1, cover_degree=4)


class TestSplitting:
    def test_odd_example(self):
        s = splitting(CoverParams(3, 2))
        assert (s.a1, s.a2) == (4, 8)

    def test_even_example(self):
        s = splitting(CoverParams(2, 1))
        assert (s.a1, s.a2) == (2, 4)

    @pytest.mark.parametrize("m, r", GRID)
    def test_integral(self, m, r):
        s = splitting(CoverParams(m, r))
        assert 2 * s.a1 == m * r + 2
        assert s.a2 == 2 * s.a1 > s.a1 > 0

    @pytest.mark.parametrize("m, r", GRID)
    def test_relative_duality(self, m, r):
        # pi_* K_C computed by projection and by duality must agree
        s = splitting(CoverParams(m, r))
        by_projection = sorted([m * r, m * r - s.a1, m * r - s.a2])
        by_duality = sorted([s.a2 - 2, s.a1 - 2, -2])
        assert by_projection == by_duality


class TestBlocks:
    def test_odd_example(self):
        b = block_dims(CoverParams(3, 2), 2)
        assert b.dims() == (5, 1, 0)

    def test_even_example(self):
        b = block_dims(CoverParams(2, 2), 3)
        assert b.dims() == (7, 4, 1)

    def test_constants(self):
        assert block_dims(CoverParams(3, 2), 0).dims() == (1, 0, 0)

    @pytest.mark.parametrize("m, r", GRID)
    def test_thresholds(self, m, r):
        p = CoverParams(m, r)
        b_start = (m + 1) // 2 if m % 2 else (m + 2) // 2
        c_start = m + 1 if r >= 2 else m + 2
        for n in range(0, 2 * m + 5):
            b = block_dims(p, n)
            assert (b.dimB > 0) == (n >= b_start)
            assert (b.dimC > 0) == (n >= c_start)
            assert b.dimC == 0 or b.dimB > 0

    @given(grid_params)
    def test_landmark_dimensions(self, p):
        m, r = p.m, p.r
        if m % 2:
            assert block_dims(p, (m + 1) // 2).dimB == r // 2
        else:
            assert block_dims(p, (m + 2) // 2).dimB == r
        assert block_dims(p, m + 1).dimC == r - 1

    @given(grid_params)
    def test_canonical_degree(self, p):
        # theta^m = K_C, so h0(theta^m) is the genus 3mr/2 + 1
        assert h0_theta(p, p.m) == 3 * p.m * p.r // 2 + 1


class TestBetaImage:
    def test_odd_11(self):
        img = beta_image(CoverParams(3, 2), 1, 1)
        assert (img.coversA, img.coversB, img.coversC) == (True, False, False)
        assert (img.image_dim, img.codim) == (5, 1)

    def test_odd_22(self):
        img = beta_image(CoverParams(3, 2), 2, 2)
        assert img.coversB and img.coversC and img.codim == 0

    def test_odd_31(self):
        img = beta_image(CoverParams(3, 2), 3, 1)
        assert img.coversB and not img.coversC
        assert (img.image_dim, img.codim) == (14, 1)

    @given(grid_params, st.integers(0, 12))
    def test_multiplication_by_constants(self, p, n):
        img = beta_image(p, 0, n)
        b = block_dims(p, n)
        assert img.codim == 0
        assert img.image_dim == b.total

    @given(grid_params, st.integers(0, 12), st.integers(0, 12))
    def test_invariants(self, p, s1, s2):
        img = beta_image(p, s1, s2)
        tgt = block_dims(p, s1 + s2)
        assert img.coversA
        assert img.image_dim == tgt.dimA + img.coversB * tgt.dimB + img.coversC * tgt.dimC
        assert img.codim == tgt.total - img.image_dim >= 0
        swapped = beta_image(p, s2, s1)
        assert (img.coversB, img.coversC, img.image_dim) == (
            swapped.coversB, swapped.coversC, swapped.image_dim
        )

    @pytest.mark.parametrize("m, r", ODD_GRID)
    def test_odd_statements(self, m, r):
        p = CoverParams(m, r)
        h = (m + 1) // 2
        for n in range(0, 2 * m + 5):
            assert beta_image(p, n, 1).surjective == (n not in ((m - 1) // 2, m))
        for l in range(0, h + 1):
            assert beta_image(p, h, l).surjective
        for s1 in range(1, h):
            assert beta_image(p, s1, h - s1).codim == r // 2
        for s1 in range(0, h):
            for s2 in range(0, h - s1):
                assert beta_image(p, s1, s2).surjective
        for s1 in range(h, m + 1):
            s2 = m + 1 - s1
            if s2 <= (m - 1) // 2:
                assert beta_image(p, s1, s2).codim == r - 1

    @pytest.mark.parametrize("m, r", EVEN_GRID)
    def test_even_statements(self, m, r):
        p = CoverParams(m, r)
        h = (m + 2) // 2
        for n in range(0, 2 * m + 5):
            expected = n != m // 2 and not (n == m and r >= 2) and not (n == m + 1 and r == 1)
            assert beta_image(p, n, 1).surjective == expected, n
        for s1 in range(1, h):
            assert beta_image(p, s1, h - s1).codim == r
        for s1 in range(1, m + 1):
            assert beta_image(p, s1, m + 1 - s1).codim == r - 1
        assert beta_image(p, h, h).surjective
        for s1 in range(0, m // 2 + 1):
            for s2 in range(0, m // 2 + 1 - s1):
                assert beta_image(p, s1, s2).surjective
        for s1 in range(h, m + 1):
            for s2 in range(0, m - s1 + 1):
                assert beta_image(p, s1, s2).surjective

    @pytest.mark.parametrize("m, r", GRID)
    def test_surjectivity_tail(self, m, r):
        p = CoverParams(m, r)
        for n in range(m + 2, 2 * m + 5):
            assert beta_image(p, n, 1).codim == 0


class TestGenerators:
    @pytest.mark.parametrize(
        "m, r, expected",
        [
            (3, 2, {1: 5, 2: 1}),
            (4, 3, {1: 7, 3: 3, 5: 2}),
            (2, 1, {1: 3, 2: 1}),
        ],
    )
    def test_examples(self, m, r, expected):
        assert generator_profile(CoverParams(m, r)) == expected

    @pytest.mark.parametrize("m, r", GRID)
    def test_closed_form(self, m, r):
        prof = generator_profile(CoverParams(m, r))
        if m % 2:
            expected = {1: r + m, (m + 1) // 2: r // 2}
        else:
            expected = {1: r + m, (m + 2) // 2: r, m + 1: r - 1}
        assert prof == {k: v for k, v in expected.items() if v}

    @pytest.mark.parametrize("m, r", GRID)
    def test_nothing_new_past_cap(self, m, r):
        from tricover.analyzer import _new_generators

        p = CoverParams(m, r)
        assert all(_new_generators(p, n) == 0 for n in range(m + 2, 2 * m + 6))


class TestLift:
    def test_identity(self):
        assert lift_codim(0) == 0

    def test_odd_landmark(self):
        p = CoverParams(5, 2)
        img = beta_image(p, 1, 2)
        assert lift_codim(img.codim, p, 1, 2) == 1 == p.r // 2

    def test_even_landmark(self):
        p = CoverParams(4, 3)
        img = beta_image(p, 1, 4)
        assert lift_codim(img.codim, p, 1, 4) == p.r - 1

    def test_hypothesis_violated(self):
        # beta(m/2, (m+2)/2) is not surjective, which blocks lifting
        # beta((m+2)/2, (m+2)/2) -- the open N0 band
        p = CoverParams(4, 2)
        with pytest.raises(LiftError, match="Lemma 2.3 hypothesis not met"):
            lift_codim(0, p, 3, 3)


class TestN0:
    def test_odd(self):
        p = CoverParams(3, 2)
        assert n0_status(p, 1).status is N0Status.FAILS
        assert n0_status(p, 2).status is N0Status.HOLDS

    def test_even_linear(self):
        p = CoverParams(4, 1)
        assert n0_status(p, 3).status is N0Status.HOLDS
        assert n0_status(p, 2).status is N0Status.FAILS

    def test_even_unknown(self):
        v = n0_status(CoverParams(4, 2), 3)
        assert v.status is N0Status.UNKNOWN and "Question 2.14" in v.source

    @pytest.mark.parametrize("m, r", GRID)
    def test_unknown_band_only(self, m, r):
        p = CoverParams(m, r)
        for n in range(1, 3 * m):
            unknown = n0_status(p, n).status is N0Status.UNKNOWN
            assert unknown == (m % 2 == 0 and r > 1 and (m + 2) // 2 <= n <= m)

    def test_bad_power(self):
        with pytest.raises(ValueError):
            n0_status(CoverParams(2, 1), 0)
