import random
from itertools import permutations, product

import pytest

from combdata.permutations import longest
from combdata.quiver import (
    CLASS_LABELS, NodeBudgetExceeded, canonical_form, class_matrices,
    is_skew_symmetrizable, mutate, mutation_class, replay, seed_from_ends,
    seed_quiver,
)
from combdata.weaving import (
    generate_weaving_patterns, is_weaving_pattern, local_sequences, perturb,
    sample_negatives,
)
from combdata.words import commutation_canonical, commutation_classes, reduced_words


def _flat(B):
    return tuple(x for row in B for x in row)


def _relabel_min(B):
    n = len(B)
    return min(tuple(B[p[i]][p[j]] for i in range(n) for j in range(n))
               for p in permutations(range(n)))


# --- quivers ------------------------------------------------------------------

def test_mutation_is_an_involution():
    rng = random.Random(0)
    for label in CLASS_LABELS:
        B = seed_quiver(label)
        for _ in range(20):
            B = mutate(B, rng.randrange(11))
            k = rng.randrange(11)
            assert mutate(mutate(B, k), k) == B


def test_mutation_example():
    B = ((0, 1, 0), (-1, 0, 1), (0, -1, 0))
    assert mutate(B, 1) == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))
    with pytest.raises(IndexError):
        mutate(B, 3)


def test_random_sequences_stay_skew_symmetrizable():
    rng = random.Random(1)
    for label in CLASS_LABELS:
        B = seed_quiver(label)
        assert is_skew_symmetrizable(B)
        for _ in range(200):
            B = mutate(B, rng.randrange(11))
            assert is_skew_symmetrizable(B)
        if label.startswith("B"):
            continue
        assert all(B[i][j] == -B[j][i] for i in range(11) for j in range(11))


def test_seed_shapes():
    bb = seed_quiver("BB11")
    assert sorted(abs(x) for x in _flat(bb) if abs(x) > 1) == [2, 2]
    assert sum(1 for x in _flat(seed_quiver("A11")) if x) == 20
    for label in CLASS_LABELS:
        assert len(seed_quiver(label)) == 11
    with pytest.raises(ValueError):
        seed_quiver("F4")
    with pytest.raises(ValueError):
        seed_from_ends("E", "A", 4)


@pytest.mark.parametrize("ends,sizes", [
    (("A", "A"), {3: 4, 4: 6, 5: 19, 6: 49, 7: 150, 8: 442}),
    (("D", "A"), {4: 6, 5: 26, 6: 80, 7: 246}),
    (("E", "A"), {6: 67, 7: 416, 8: 1574}),
])
def test_finite_type_class_sizes(ends, sizes):
    for n, size in sizes.items():
        assert len(mutation_class(seed_from_ends(*ends, n))) == size


def test_canonical_form_against_exhaustive_relabelling():
    for ends, n in ((("A", "A"), 5), (("D", "A"), 5), (("B", "A"), 4)):
        labelled = mutation_class(seed_from_ends(*ends, n), up_to_isomorphism=False)
        by_canon = {canonical_form(_flat(m.matrix), n) for m in labelled}
        by_brute = {_relabel_min(m.matrix) for m in labelled}
        assert len(by_canon) == len(by_brute)
        assert len(mutation_class(seed_from_ends(*ends, n))) == len(by_brute)


def test_canonical_form_is_relabelling_invariant():
    rng = random.Random(2)
    B = replay(seed_quiver("DE11"), [rng.randrange(11) for _ in range(15)])
    c = canonical_form(_flat(B), 11)
    for _ in range(10):
        p = list(range(11))
        rng.shuffle(p)
        P = tuple(tuple(B[p[i]][p[j]] for j in range(11)) for i in range(11))
        assert canonical_form(_flat(P), 11) == c


def test_members_replay_from_seed():
    seed = seed_from_ends("D", "A", 6)
    members = mutation_class(seed)
    assert members[0].depth == 0 and members[0].matrix == seed
    for m in members:
        assert replay(seed, m.path) == m.matrix
        assert len(m.path) == m.depth


def test_depth_limits_and_budget():
    assert len(class_matrices("E11", depth=0)) == 1
    one = class_matrices("E11", depth=1)
    assert 1 < len(one) <= 12 and max(m.depth for m in one) == 1
    with pytest.raises(NodeBudgetExceeded):
        class_matrices("A11", node_budget=100)


# --- weaving ------------------------------------------------------------------

def test_local_sequences_small():
    assert local_sequences((1,), 2) == ((2,), (1,))
    assert sorted(generate_weaving_patterns(3)) == [
        ((2, 3), (1, 3), (1, 2)), ((3, 2), (3, 1), (2, 1))]


@pytest.mark.parametrize("n,count", [(3, 2), (4, 8), (5, 62), (6, 908)])
def test_pattern_counts(n, count):
    pats = generate_weaving_patterns(n)
    assert len(pats) == count == len(commutation_classes(longest(n)))
    assert all(is_weaving_pattern(M) for M in pats)


def test_patterns_constant_on_commutation_classes():
    n = 5
    seen = {}
    for word in reduced_words(longest(n)):
        M = local_sequences(word, n)
        assert seen.setdefault(commutation_canonical(word), M) == M


def _all_row_orders(n):
    rows = [list(permutations([x for x in range(1, n + 1) if x != i])) for i in range(1, n + 1)]
    return product(*rows)


@pytest.mark.parametrize("n", [3, 4])
def test_validator_is_exact_on_all_row_orders(n):
    pats = generate_weaving_patterns(n)
    hits = {M for M in _all_row_orders(n) if is_weaving_pattern(M)}
    assert hits == pats


def test_validator_rejects_near_misses_n4():
    # every matrix one in-row swap (Hamming distance 2) away from a pattern
    pats = generate_weaving_patterns(4)
    for M in pats:
        for i in range(4):
            for a in range(3):
                for b in range(a + 1, 3):
                    rows = [list(r) for r in M]
                    rows[i][a], rows[i][b] = rows[i][b], rows[i][a]
                    cand = tuple(map(tuple, rows))
                    assert is_weaving_pattern(cand) == (cand in pats)


def test_validator_shape_errors():
    assert not is_weaving_pattern(((2, 2), (1, 3), (1, 2)))
    with pytest.raises(ValueError):
        is_weaving_pattern(((2, 3), (1, 3)))
    with pytest.raises(ValueError):
        is_weaving_pattern(((2, 4), (1, 3), (1, 2)))


def test_negatives_are_invalid_distinct_and_deterministic():
    pats = sorted(generate_weaving_patterns(5))
    neg = sample_negatives(pats, 100, seed=4)
    assert neg == sample_negatives(pats, 100, seed=4)
    assert len(neg) == len(set(neg)) == 100
    assert not any(is_weaving_pattern(M) for M in neg)
    rng = random.Random(0)
    M = perturb(pats[0], rng, 1)
    assert sum(a != b for r, s in zip(M, pats[0]) for a, b in zip(r, s)) == 2
