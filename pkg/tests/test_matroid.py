import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankvc import exact_linalg as la
from rankvc.errors import ContractLoopError, InputError
from rankvc.exact_linalg import ExactMatrix, PrimeField
from rankvc.matroid import LinearMatroid

from conftest import independent_by_minors, oracle_rank, random_matroid

GF7 = PrimeField(7)


def subsets(labels):
    for s in range(len(labels) + 1):
        yield from combinations(labels, s)


def bases(x: LinearMatroid):
    r = x.rank
    return [set(b) for b in combinations(x.labels, r) if x.is_independent(b)]


def test_labels_must_match_columns():
    with pytest.raises(InputError):
        LinearMatroid(ExactMatrix.identity(2), ["a"])
    with pytest.raises(InputError):
        LinearMatroid(ExactMatrix.identity(2), ["a", "a"])


def test_unknown_element():
    with pytest.raises(InputError):
        LinearMatroid.identity("ab").rank_of(["c"])


def test_rank_of_pairs_in_identity():
    x = LinearMatroid.identity(range(4))
    assert all(x.rank_of(p) == 2 for p in combinations(range(4), 2))


def test_zero_column_has_rank_zero():
    x = LinearMatroid(ExactMatrix([[1, 0], [0, 0]]), ["a", "z"])
    assert x.rank_of(["z"]) == 0
    assert x.is_loop("z")
    assert not x.is_loop("a")


def test_rank_of_against_independence_oracle_gf7():
    rng = random.Random(21)
    for _ in range(15):
        x = random_matroid(rng, 6, 3, GF7, lo=0, hi=6)
        for t in subsets(x.labels):
            idx = [x.index(e) for e in t]
            oracle = max(len(c) for s in range(len(t) + 1) for c in combinations(idx, s)
                         if independent_by_minors(x.rep, c))
            assert x.rank_of(t) == oracle


def test_reduction_mod_q_can_create_loops():
    # every entry of the column is a multiple of 5; this is exactly what the
    # modular step has to avoid
    x = LinearMatroid(la.mod_reduce(ExactMatrix([[1, 5], [0, 10]]), 5), ["a", "b"])
    assert x.is_loop("b")


def test_identity_elements_are_coloops():
    x = LinearMatroid.identity(range(5))
    assert all(x.is_coloop(e) for e in x.labels)


def test_sum_column_is_not_a_coloop():
    x = LinearMatroid(ExactMatrix.from_columns([(1, 1), (1, 0), (0, 1)], nrows=2), "cab")
    assert not x.is_coloop("c")


def test_coloop_matches_all_bases_oracle():
    rng = random.Random(22)
    for _ in range(40):
        x = random_matroid(rng, rng.randint(2, 6))
        bs = bases(x)
        for e in x.labels:
            assert x.is_coloop(e) == all(e in b for b in bs)


def test_delete_from_identity():
    x = LinearMatroid.identity([1, 2, 3]).delete(2)
    assert x.labels == (1, 3)
    assert x.rank == 2


def test_delete_loop_keeps_rank():
    x = LinearMatroid(ExactMatrix([[1, 0, 2]]), "abz")
    assert x.delete("a").rank == 1
    z = LinearMatroid(ExactMatrix([[1, 0]]), "az")
    assert z.delete("z").rank == 1


def test_delete_preserves_subset_ranks():
    rng = random.Random(23)
    for _ in range(20):
        x = random_matroid(rng, 6)
        e = rng.choice(x.labels)
        y = x.delete(e)
        for t in subsets(y.labels):
            assert y.rank_of(t) == x.rank_of(t)


def test_contract_identity_column():
    y = LinearMatroid.identity(["a", "b"]).contract("a")
    assert y.labels == ("b",)
    assert y.rank == 1
    assert y.is_coloop("b")


def test_contract_makes_remaining_parallel():
    x = LinearMatroid(ExactMatrix.from_columns([(1, 0), (0, 1), (1, 1)], nrows=2), "abc")
    y = x.contract("a")
    assert y.rank == 1
    assert y.in_span("b", ["c"]) and y.in_span("c", ["b"])


def test_contract_loop_raises():
    x = LinearMatroid(ExactMatrix([[1, 0]]), "az")
    with pytest.raises(ContractLoopError):
        x.contract("z")


@pytest.mark.parametrize("domain", [la.RATIONAL, GF7], ids=str)
def test_contraction_rank_identity(domain):
    rng = random.Random(24)
    checked = 0
    for _ in range(50):
        kw = {"lo": 0, "hi": 6} if domain == GF7 else {}
        x = random_matroid(rng, rng.randint(2, 8), domain=domain, **kw)
        cands = [e for e in x.labels if not x.is_loop(e)]
        if not cands:
            continue
        v = rng.choice(cands)
        y = x.contract(v)
        assert y.rep.nrows == y.rank == x.rank - 1
        for t in subsets(y.labels):
            assert x.rank_of(t + (v,)) == y.rank_of(t) + 1
            assert y.rank_of(t) == oracle_rank(x.rep, [x.index(e) for e in t + (v,)]) - 1
        checked += 1
    assert checked > 40


def test_move_to_itself_is_identity():
    x = LinearMatroid.identity("abc")
    assert x.move_column("a", x.column("a")) == x


def test_move_coloop_into_span_drops_rank():
    x = LinearMatroid.identity("abc").move_column("c", (1, 1, 0))
    assert x.rank == 2


def test_move_keeps_other_coloops():
    rng = random.Random(25)
    for _ in range(60):
        x = random_matroid(rng, 7, rng.randint(3, 7))
        coloops = [e for e in x.labels if x.is_coloop(e)]
        if len(coloops) < 2:
            continue
        u, v = rng.sample(coloops, 2)
        w = [e for e in x.labels if e not in (u, v) and rng.random() < 0.5]
        vec = [Fraction(0)] * x.rep.nrows
        for e in w:
            c = rng.randint(-3, 3)
            vec = [a + c * b for a, b in zip(vec, x.column(e))]
        y = x.move_column(u, vec)
        assert y.is_coloop(v)


def test_restrict_keeps_label_order():
    x = LinearMatroid.identity("abcd").restrict(["d", "b"])
    assert x.labels == ("b", "d")


def test_compact_trims_rows():
    x = LinearMatroid(ExactMatrix([[1, 1], [2, 2], [0, 0]]), "ab")
    y = x.compact()
    assert y.rep.nrows == 1
    assert y.rank_of("ab") == 1


def test_in_span_with_raw_vector():
    x = LinearMatroid.identity("ab")
    assert x.in_span((3, 4), "ab")
    assert not x.in_span((3, 4), "a")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(2, 6))
def test_rank_axioms(seed, n):
    # submodularity and monotonicity on random matroids
    x = random_matroid(random.Random(seed), n)
    subs = [frozenset(s) for s in subsets(x.labels)]
    rk = {s: x.rank_of(sorted(s)) for s in subs}
    for a in subs:
        assert 0 <= rk[a] <= len(a)
        for b in subs:
            assert rk[a | b] + rk[a & b] <= rk[a] + rk[b]
            if a <= b:
                assert rk[a] <= rk[b]
