"""Signed permutation arithmetic, orders, and their brute-force oracles."""

import itertools

import pytest

from clancc.weyl import (
    SignedPermutation,
    a_vector,
    act,
    b_matrix,
    b_matrix_full,
    bruhat_leq_avector,
    bruhat_leq_bmatrix,
    bruhat_leq_longform,
    eps,
    in_script_w,
    is_positive_root,
    length,
    long_form,
    long_form_text,
    multiply_simple,
    positive_roots,
    script_w_elements,
    short_form,
    simple_root,
    tau,
)

W21 = SignedPermutation((2, -1))
APPENDIX_W = SignedPermutation((-1, 4, 3, -2))


def sp(*entries):
    return SignedPermutation(tuple(entries))


class TestSignedPermutation:
    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            SignedPermutation((1, 1))
        with pytest.raises(ValueError):
            SignedPermutation((0, 1))
        with pytest.raises(ValueError):
            SignedPermutation((3, 1))

    def test_text_round_trip(self):
        w = sp(5, -1, -2, 4, 3)
        assert SignedPermutation.from_text(w.to_text()) == w
        with pytest.raises(ValueError):
            SignedPermutation.from_text("5,x,1")


class TestAct:
    def test_long_root_flip(self):
        assert act(W21, eps(2, 2, 2)) == (-2, 0)

    def test_global_sign_flip(self):
        for n in (2, 4, 6):
            w = sp(*(-j for j in range(1, n + 1)))
            assert act(w, eps(n, 1, 1, 2, 1)) == eps(n, 1, -1, 2, -1)

    def test_hand_example(self):
        w = sp(5, -1, -2, 4, 3)
        assert act(w, eps(5, 2, 1, 3, -1)) == eps(5, 1, -1, 2, 1)

    def test_roots_stay_roots(self):
        roots = positive_roots(3)
        all_roots = roots + [tuple(-x for x in r) for r in roots]
        for w in script_w_elements(3):
            for beta in all_roots:
                assert act(w, beta) in all_roots


class TestLength:
    @pytest.mark.parametrize(
        "w,expected",
        [(sp(2, 1), 1), (sp(3, 2, 1), 3), (sp(-1, 4, -2, 3), 12)],
    )
    def test_table_values(self, w, expected):
        assert length(w) == expected

    def test_extremes(self):
        assert length(SignedPermutation.identity(4)) == 0
        assert length(sp(-1, -2, -3, -4)) == 16  # the full n^2

    def test_simple_step_changes_length_by_one(self):
        n = 4
        for entries in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                w = sp(*(s * e for s, e in zip(signs, entries)))
                for j in range(1, n + 1):
                    assert abs(length(multiply_simple(w, j)) - length(w)) == 1


class TestScriptW:
    def test_examples(self):
        assert in_script_w(sp(3, -1, -2))
        assert not in_script_w(sp(-2, -1, 3))

    def test_n3_membership_list(self):
        members = {
            (3, 2, 1), (-1, 3, 2), (3, -1, 2), (3, 2, -1),
            (-1, -2, 3), (-1, 3, -2), (3, -1, -2), (-1, -2, -3),
        }
        assert {w.entries for w in script_w_elements(3)} == members

    @pytest.mark.parametrize("n", range(1, 13))
    def test_generator_count_and_soundness(self, n):
        seen = set()
        for w in script_w_elements(n):
            assert in_script_w(w)
            seen.add(w.entries)
        assert len(seen) == 2 ** n

    @pytest.mark.parametrize("n", range(1, 6))
    def test_exhaustive_filter_matches_generator(self, n):
        generated = {w.entries for w in script_w_elements(n)}
        found = set()
        for entries in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                w = sp(*(s * e for s, e in zip(signs, entries)))
                if in_script_w(w):
                    found.add(w.entries)
        assert found == generated


class TestTau:
    @pytest.mark.parametrize(
        "w,expected",
        [
            (W21, {2}),
            (sp(-1, 2), {1}),
            (SignedPermutation.identity(3), set()),
        ],
    )
    def test_examples(self, w, expected):
        assert tau(w) == expected

    def test_definition_matches_simple_roots(self):
        for w in script_w_elements(4):
            expected = {
                j
                for j in range(1, 5)
                if not is_positive_root(act(w, simple_root(4, j)))
            }
            assert tau(w) == expected


class TestLongForm:
    def test_appendix_example(self):
        assert long_form(APPENDIX_W) == (8, 4, 3, 7, 2, 6, 5, 1)
        assert long_form_text(APPENDIX_W) == "8 4 3 7|2 6 5 1"

    def test_identity_and_all_negative(self):
        assert long_form(SignedPermutation.identity(3)) == (1, 2, 3, 4, 5, 6)
        assert long_form(sp(-1, -2)) == (4, 3, 2, 1)

    def test_round_trip_and_injectivity(self):
        n = 4
        seen = set()
        for entries in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                w = sp(*(s * e for s, e in zip(signs, entries)))
                u = long_form(w)
                assert short_form(u) == w
                seen.add(u)
        assert len(seen) == 2 ** n * 24

    def test_short_form_validation(self):
        with pytest.raises(ValueError):
            short_form((1, 2, 3))
        with pytest.raises(ValueError):
            short_form((1, 1, 4, 4))
        with pytest.raises(ValueError):
            short_form((1, 3, 4, 2))  # permutation but wrong mirror pairing


class TestBMatrix:
    # the printed 8x8 table for (-1, 4, 3, -2)
    FULL = (
        (0, 0, 0, 0, 0, 0, 0, 1),
        (0, 0, 0, 1, 1, 1, 1, 2),
        (0, 0, 1, 2, 2, 2, 2, 3),
        (0, 0, 1, 2, 2, 2, 3, 4),
        (0, 1, 2, 3, 3, 3, 4, 5),
        (0, 1, 2, 3, 3, 4, 5, 6),
        (0, 1, 2, 3, 4, 5, 6, 7),
        (1, 2, 3, 4, 5, 6, 7, 8),
    )

    def test_appendix_table(self):
        assert b_matrix_full(APPENDIX_W) == self.FULL
        assert b_matrix(APPENDIX_W) == tuple(row[:4] for row in self.FULL[:4])
        assert b_matrix(APPENDIX_W)[2][3] == 2

    def test_identity_pattern(self):
        b = b_matrix(SignedPermutation.identity(3))
        assert b == tuple(
            tuple(min(i, j) for j in range(1, 4)) for i in range(1, 4)
        )

    def test_last_column_is_row_index(self):
        for w in script_w_elements(4):
            full = b_matrix_full(w)
            assert all(full[i][-1] == i + 1 for i in range(8))

    def test_column_increments(self):
        for w in script_w_elements(5):
            full = b_matrix_full(w)
            for row in full:
                assert row[0] in (0, 1)
                assert all(row[j + 1] - row[j] in (0, 1) for j in range(9))

    def test_b_column_n_is_a_vector(self):
        for w in script_w_elements(5):
            assert tuple(row[4] for row in b_matrix(w)) == a_vector(w)


class TestAVector:
    def test_examples(self):
        assert a_vector(APPENDIX_W) == (0, 1, 2, 2)
        assert a_vector(sp(4, 3, 2, 1)) == (1, 2, 3, 4)
        assert a_vector(sp(-1, -2, -3)) == (0, 0, 0)

    def test_rejects_outsiders(self):
        with pytest.raises(ValueError):
            a_vector(sp(1, 2))


def _symmetric_group_bruhat(m):
    """Independent oracle: reachability through length-decreasing transpositions."""
    perms = list(itertools.permutations(range(1, m + 1)))
    index = {p: i for i, p in enumerate(perms)}

    def inv(p):
        return sum(1 for i in range(m) for j in range(i + 1, m) if p[i] > p[j])

    lengths = [inv(p) for p in perms]
    down = [[] for _ in perms]
    for p in perms:
        for i in range(m):
            for j in range(i + 1, m):
                q = list(p)
                q[i], q[j] = q[j], q[i]
                q = tuple(q)
                if lengths[index[q]] == lengths[index[p]] - 1:
                    down[index[p]].append(index[q])
    reach = [None] * len(perms)
    for i in sorted(range(len(perms)), key=lambda i: lengths[i]):
        mask = 1 << i
        for j in down[i]:
            mask |= reach[j]
        reach[i] = mask

    def leq(y, w):
        return bool(reach[index[w]] >> index[y] & 1)

    return leq


class TestBruhatOrders:
    def test_longform_examples(self):
        assert bruhat_leq_longform(sp(2, 1), sp(2, -1))
        assert not bruhat_leq_longform(sp(2, -1), sp(2, 1))
        for w in script_w_elements(3):
            assert bruhat_leq_longform(sp(3, 2, 1), w)

    def test_against_symmetric_group_oracle(self):
        leq = _symmetric_group_bruhat(4)
        members = list(script_w_elements(2))
        for y in members:
            for w in members:
                assert bruhat_leq_longform(y, w) == leq(long_form(y), long_form(w))

    def test_avector_examples(self):
        assert bruhat_leq_avector(sp(4, 3, 2, 1), sp(-1, 4, -2, 3))
        assert bruhat_leq_avector(APPENDIX_W, APPENDIX_W)
        assert not bruhat_leq_avector(sp(-1, -2), sp(2, 1))

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            bruhat_leq_longform(sp(2, 1), sp(3, 2, 1))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_three_orders_agree(self, n):
        members = list(script_w_elements(n))
        for y in members:
            for w in members:
                expected = bruhat_leq_longform(y, w)
                assert bruhat_leq_bmatrix(y, w) == expected
                assert bruhat_leq_avector(y, w) == expected

    @pytest.mark.parametrize("n", range(2, 7))
    def test_chain_property(self, n):
        """Order relations are generated by length-raising simple steps in the family."""
        members = list(script_w_elements(n))
        index = {w.entries: i for i, w in enumerate(members)}
        lengths = [length(w) for w in members]
        reach = [0] * len(members)
        for i in sorted(range(len(members)), key=lambda i: -lengths[i]):
            w = members[i]
            mask = 1 << i
            for j in range(1, n + 1):
                up = multiply_simple(w, j)
                if in_script_w(up) and lengths[index[up.entries]] == lengths[i] + 1:
                    mask |= reach[index[up.entries]]
            reach[i] = mask
        for yi, y in enumerate(members):
            for wi, w in enumerate(members):
                assert bool(reach[yi] >> wi & 1) == bruhat_leq_avector(y, w)
