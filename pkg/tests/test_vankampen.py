from __future__ import annotations

import pytest

from linarr import corpus
from linarr.braid import act, conjugators, invert_word, reduce_word
from linarr.presentation import AFFINE, PROJECTIVE, Presentation, abelianization, builtin_probe, hom_count
from linarr.vankampen import (
    COMMUTATOR,
    CYCLIC,
    ECONOMICAL,
    FULL,
    compute_presentation,
    local_generators,
    local_relations,
    presentations_equivalent,
)

S3, S4 = builtin_probe("s3"), builtin_probe("s4")


def test_node_gives_one_relation():
    rels = local_relations([(1,), (2,)])
    assert len(rels) == 1
    assert (rels[0].lhs, rels[0].rhs) == ((1, 2), (2, 1))


def test_triple_point_relations():
    rels = local_relations([(1,), (2,), (3,)])
    assert [(r.lhs, r.rhs) for r in rels] == [
        ((3, 2, 1, 1), (1, 3, 2, 1)),
        ((3, 2, 1, 2), (2, 3, 2, 1)),
        ((3, 2, 1, 3), (3, 3, 2, 1)),
    ]
    cyc = local_relations([(1,), (2,), (3,)], style=CYCLIC)
    assert [(r.lhs, r.rhs) for r in cyc] == [((3, 2, 1), (2, 1, 3)), ((3, 2, 1), (1, 3, 2))]


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("mode", [AFFINE, PROJECTIVE])
def test_cyclic_equals_commutator(m, mode):
    arr = corpus.load(f"pencil_{m}")
    a = compute_presentation(arr, mode, ECONOMICAL, style=COMMUTATOR).presentation
    b = compute_presentation(arr, mode, ECONOMICAL, style=CYCLIC).presentation
    probes = [S3, S4] if m <= 4 else [S3]
    assert presentations_equivalent(a, b, probes)


@pytest.mark.parametrize("name", corpus.names())
@pytest.mark.parametrize("mode", [AFFINE, PROJECTIVE])
def test_full_equals_economical(name, mode):
    arr = corpus.load(name)
    full = compute_presentation(arr, mode, FULL).presentation
    econ = compute_presentation(arr, mode, ECONOMICAL).presentation
    assert presentations_equivalent(full, econ, [S3])


def test_mode_mismatch_rejected():
    arr = corpus.load("pencil_3")
    a = compute_presentation(arr, AFFINE).presentation
    b = compute_presentation(arr, PROJECTIVE).presentation
    with pytest.raises(ValueError):
        presentations_equivalent(a, b, [S3])


def test_full_relations_are_balanced_except_projective():
    p = compute_presentation(corpus.load("collinear_2_2_1"), PROJECTIVE, FULL).presentation
    assert all(r.is_balanced() for r in p.relations[:-1])
    assert p.relations[-1].origin == "projective" and not p.relations[-1].is_balanced()


def test_restricted_relations_match_hand_derivation():
    """Node j = l*k2 + i of the restricted configuration commutes G_{k1-l} with
    G_{k1+1}^-1 ... G_{k1+i-1}^-1 G_{k1+i} G_{k1+i-1} ... G_{k1+1}, up to
    conjugating both entries by X = G_{k1+i-1} ... G_{k1+1}."""
    k1, k2 = 2, 3
    res = compute_presentation(corpus.load("collinear_restricted_2_3"))
    pts = res.analyzed.points
    cs = conjugators(pts, res.analyzed.n)
    for l in range(k1):
        for i in range(1, k2 + 1):
            j = l * k2 + i
            a, b = local_generators(pts[j - 1], cs[j - 1])
            x = tuple(range(k1 + i - 1, k1, -1))
            inner = invert_word(x) + (k1 + i,) + x
            assert a == reduce_word(x + (k1 - l,) + invert_word(x))
            assert b == reduce_word(x + inner + invert_word(x))
    # the first row is the plain commutation of G_{k1-l} with G_{k1+1}
    rel = res.presentation.relations[3]  # j = k2 + 1, l = 1
    assert (rel.lhs, rel.rhs) == ((1, 3), (3, 1))


def _inverse_conjugator_presentation(arr, mode):
    res = compute_presentation(arr, mode, FULL)
    pts = res.analyzed.points
    rels = []
    for p, c in zip(pts, conjugators(pts, res.analyzed.n)):
        gens = [act(c.inverse(), (i,)) for i in range(p.pair.k, p.pair.l + 1)]
        rels.extend(local_relations(gens, p.j))
    return res.presentation, Presentation(res.analyzed.n, tuple(rels), AFFINE)


def test_inverse_conjugator_disagrees():
    """Transporting local generators by C_j^-1 instead of C_j breaks agreement
    with the full presentation on a collinear configuration."""
    full, wrong = _inverse_conjugator_presentation(corpus.load("collinear_2_3_1"), AFFINE)
    assert hom_count(full, S3) != hom_count(wrong, S3)


@pytest.mark.parametrize("name", ["generic_4", "pencil_4", "two_pencils_2_2", "triangle_multiple_points"])
def test_abelianization_ranks(name):
    arr = corpus.load(name)
    for method in (FULL, ECONOMICAL):
        assert abelianization(compute_presentation(arr, AFFINE, method).presentation) == (arr.n, [])
        assert abelianization(compute_presentation(arr, PROJECTIVE, method).presentation) == (arr.n - 1, [])


def test_unknown_method():
    with pytest.raises(ValueError):
        compute_presentation(corpus.load("pencil_3"), AFFINE, "bogus")
