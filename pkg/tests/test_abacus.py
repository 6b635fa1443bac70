import random

import pytest
from hypothesis import given, settings, strategies as st

from wallforge.abacus import (KIND_I, KIND_II, KIND_III, AbacusError, BeadConfig, Move, RunnerLayout, TupleImage,
                              apply_move, check_image, from_beads, image_size, legal_moves, pi_forward, pi_inverse,
                              reduce, target_set, to_beads, weight_condition, weight_space_content)
from wallforge.affine import affine_data, is_delta_multiple, sub
from wallforge.examples import EXAMPLES, beads, replay
from wallforge.partition import multipartitions
from wallforge.wall import content, enumerate_walls, is_reduced, is_valid, make_wall

FAMILY_CASES = [("A1", 2, 0), ("A1", 3, 1), ("A2even", 1, 0), ("A2even", 2, 0), ("D2", 2, 0), ("D2", 2, 2),
                ("A2odd", 3, 0), ("A2odd", 3, 1), ("D1", 3, 0), ("D1", 3, 3), ("B1", 3, 0), ("B1", 3, 1),
                ("B1", 3, 3)]


def _walls(family, n, lam, max_m, cross=False):
    d = affine_data(family, n)
    out = []
    for m in range(max_m + 1):
        out.extend((m, Y) for Y in enumerate_walls(d, lam, weight_space_content(d, m, cross, lam)))
    return out


def test_runner_kinds():
    lay = RunnerLayout("A2even", 2, 0)
    assert [lay.kind(p) for p in range(1, 6)] == [KIND_I, KIND_I, KIND_I, KIND_I, KIND_II]
    lay = RunnerLayout("A2odd", 3, 0)
    assert lay.kind(5) == KIND_III and lay.kind(10) == KIND_III and lay.kind(4) == KIND_I
    lay = RunnerLayout("B1", 3, 0)
    assert lay.kind(3) == KIND_II and lay.kind(6) == KIND_III and lay.kind(9) == KIND_II
    assert RunnerLayout("B1", 3, 3).kind(3) == KIND_III
    assert "kind II residues [3]" in lay.describe()


def test_bead_validation():
    with pytest.raises(AbacusError):
        beads("A2even", 2, 0, {1: 2})  # two beads on a kind I position
    with pytest.raises(AbacusError):
        beads("A2odd", 3, 0, {5: 1})  # kind III bead without a color
    with pytest.raises(AbacusError):
        beads("A2odd", 3, 0, {5: 2}, {5: "x"})


@pytest.mark.parametrize("family,n,lam", FAMILY_CASES)
def test_beads_round_trip(family, n, lam, small_walls):
    key = (family, n, lam) if (family, n, lam) in small_walls else None
    walls = small_walls[key] if key else [Y for _, Y in _walls(family, n, lam, 2)]
    for Y in walls:
        cfg = to_beads(Y)
        assert from_beads(cfg) == Y
        assert BeadConfig.from_json(cfg.to_json()) == cfg


def test_bead_json_shape():
    cfg = beads("A2odd", 3, 0, {1: 1, 4: 1, 5: 2, 8: 1}, {5: "g"})
    obj = cfg.to_json()
    assert {"pos": 5, "count": 2, "color": "g"} in obj["beads"]
    assert "runner_layout" in obj


@pytest.mark.parametrize("family,n,lam", [c for c in FAMILY_CASES if c[0] != "A1"])
def test_moves_raise_weight_by_their_delta(family, n, lam, small_walls):
    d = affine_data(family, n)
    for Y in small_walls.get((family, n, lam), [])[:400]:
        cfg = to_beads(Y)
        for mv in legal_moves(cfg):
            nxt, dlt = apply_move(cfg, mv)
            Z = from_beads(nxt)
            assert is_valid(Z)
            assert sub(content(Y), content(Z)) == d.delta_multiple(dlt)


@pytest.mark.parametrize("family,n,lam", [c for c in FAMILY_CASES if c[0] != "A1"])
def test_reduction_is_confluent(family, n, lam):
    rng = random.Random(7)
    for m, Y in _walls(family, n, lam, 3)[::3]:
        canonical = reduce(Y)
        assert not legal_moves(canonical.config)
        for _ in range(10):
            other = reduce(Y, rng)
            assert other.wall == canonical.wall
            assert other.deltas == canonical.deltas


def test_terminal_configs_pack_kind_one_runners(small_walls):
    # column-reduced and move-terminal are different notions; only the
    # latter packs each kind I runner from the top
    both = {True: 0, False: 0}
    for (family, n, lam), walls in small_walls.items():
        if family == "A1":
            continue
        for Y in walls:
            cfg = to_beads(Y)
            if not legal_moves(cfg):
                lay = cfg.layout
                occupied = cfg.count_map()
                for p in occupied:
                    if lay.kind(p) == KIND_I:
                        assert p <= lay.step or occupied.get(p - lay.step)
            both[is_reduced(Y)] += not legal_moves(cfg)
    assert both[True] and both[False]


@pytest.mark.parametrize("family,n,lam", [c for c in FAMILY_CASES if c[0] != "A1"])
def test_weight_condition_matches_content(family, n, lam, small_walls):
    d = affine_data(family, n)
    for Y in small_walls[(family, n, lam)]:
        assert weight_condition(to_beads(Y)) == (is_delta_multiple(d, content(Y)) is not None)


def test_weight_condition_cross():
    for m, Y in _walls("B1", 3, 0, 2, cross=True):
        assert weight_condition(to_beads(Y), cross=True)
        assert not weight_condition(to_beads(Y))


@pytest.mark.parametrize("family,n,lam", FAMILY_CASES)
def test_pi_round_trip(family, n, lam):
    d = affine_data(family, n)
    seen = set()
    for m, Y in _walls(family, n, lam, 3):
        got_m, image = pi_forward(Y)
        assert got_m == m
        assert image_size(d, image) == m
        assert pi_inverse(d, lam, image) == Y
        assert TupleImage.from_json(image.to_json()) == image
        seen.add(image)
    for m in range(4):
        for image in target_set(d, lam, m):
            assert image in seen


@pytest.mark.parametrize("lam", [0, 1])
def test_cross_round_trip(lam):
    d = affine_data("B1", 3)
    images = set()
    for m, Y in _walls("B1", 3, lam, 3, cross=True):
        got_m, image = pi_forward(Y, cross=True)
        assert got_m == m and image.case == "B-cross"
        assert pi_inverse(d, lam, image) == Y
        images.add(image)
    assert images == {t for m in range(4) for t in target_set(d, lam, m, cross=True)}


def test_pi_rejects_other_weight_spaces():
    Y = make_wall("D1", 3, 0, [7, (6, "UL"), (6, "UL"), (3, "LR"), 2])
    with pytest.raises(AbacusError, match="weight space"):
        pi_forward(Y)


def test_check_image_rejects_bad_tuples():
    d = affine_data("A2odd", 3)
    with pytest.raises(AbacusError, match="components"):
        check_image(d, 0, TupleImage("A2odd", ((1,),)))
    with pytest.raises(AbacusError, match="2-reduced"):
        check_image(d, 0, TupleImage("A2odd", ((), (), (), (2, 2))))
    d = affine_data("B1", 3)
    with pytest.raises(AbacusError, match="odd parts"):
        check_image(d, 0, TupleImage("B-L0", ((2, 2), (), (), (), ())))
    with pytest.raises(AbacusError, match="even length"):
        check_image(d, 0, TupleImage("B-L0", ((1,), (), (), (), ())))


def test_move_guards_name_the_failure():
    cfg = beads("A2even", 2, 0, {1: 1, 4: 1, 5: 3, 7: 1, 10: 1})
    with pytest.raises(AbacusError, match="occupied"):
        apply_move(beads("A2even", 2, 0, {1: 1, 6: 1}), Move("B1", 6))
    with pytest.raises(AbacusError, match="kind I"):
        apply_move(cfg, Move("B1", 5))
    with pytest.raises(AbacusError, match="no bead"):
        apply_move(cfg, Move("B3", 2))
    with pytest.raises(AbacusError, match="unknown move"):
        apply_move(cfg, Move("B9", 1))


def test_legal_moves_are_sorted_and_applicable():
    cfg = beads("A2even", 2, 0, {1: 1, 4: 1, 5: 3, 7: 1, 10: 1})
    moves = legal_moves(cfg)
    assert moves == sorted(moves, key=lambda mv: (mv.pos, mv.kind))
    assert Move("B3", 1) in moves and Move("B1", 7) in moves
    for mv in moves:
        apply_move(cfg, mv)


def test_move_counts_add_up():
    for m, Y in _walls("D2", 2, 0, 3):
        red = reduce(Y)
        assert red.deltas == m - (is_delta_multiple(Y.data, content(red.wall)) or 0)


@pytest.mark.parametrize("ex", EXAMPLES, ids=[ex.name for ex in EXAMPLES])
def test_worked_example(ex):
    assert ex.compute() == ex.expected


def test_replay_reports_every_example():
    rows = replay()
    assert len(rows) == len(EXAMPLES) and all(ok for _, _, ok in rows)


@settings(max_examples=40)
@given(st.sampled_from(["A2even", "D2", "A2odd", "D1"]), st.integers(0, 4), st.data())
def test_inverse_then_forward(family, m, data):
    n = 3 if family in ("A2odd", "D1") else 2
    d = affine_data(family, n)
    images = list(target_set(d, 0, m))
    image = data.draw(st.sampled_from(images))
    Y = pi_inverse(d, 0, image)
    assert is_valid(Y)
    assert pi_forward(Y) == (m, image)


def test_multipartition_count_drives_a1():
    d = affine_data("A1", 3)
    for m in range(4):
        assert sum(1 for _ in target_set(d, 0, m)) == sum(1 for _ in multipartitions(3, m))
