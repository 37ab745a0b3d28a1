"""Van-Kampen presentations from monodromy braids.

Two relation sets are produced for the same arrangement. ``full_relations``
writes ``phi(delta_j)(G_i) = G_i`` for every point and every generator.
``economical_relations`` writes only the local relations of each point, in the
conjugated generators the point sees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord, Word, act, conjugators, monodromy_braids, reduce_word
from .geometry import AnalyzedArrangement, Arrangement, SingularPoint, analyze
from .presentation import (
    AFFINE,
    PROJECTIVE,
    FiniteGroup,
    Presentation,
    Relation,
    abelianization,
    commutator_relation,
    hom_count,
)

COMMUTATOR = "commutator"
CYCLIC = "cyclic"


def boundary_word(n: int) -> Word:
    """G_n G_{n-1} ... G_1, the loop around all punctures of the fiber."""
    return tuple(range(n, 0, -1))


def projective_relation(n: int) -> Relation:
    return Relation(boundary_word(n), (), "projective")


def _finish(n: int, relations: list[Relation], mode: str) -> Presentation:
    if mode == PROJECTIVE:
        relations.append(projective_relation(n))
    elif mode != AFFINE:
        raise ValueError(f"unknown mode {mode!r}")
    return Presentation(n, tuple(relations), mode)


def full_relations(braids: Sequence[BraidWord], n: int, mode: str = AFFINE) -> Presentation:
    relations = []
    for j, b in enumerate(braids, 1):
        for i in range(1, n + 1):
            image = act(b, (i,))
            if image != (i,):
                relations.append(Relation(image, (i,), j))
    return _finish(n, relations, mode)


def local_relations(gens: Sequence[Word], origin=None, style: str = COMMUTATOR) -> list[Relation]:
    """Relations of a point whose local generators, bottom to top, are ``gens``.

    The commutator style gives ``[A_m ... A_1, A_i] = 1`` for each i (a single
    ``[A_1, A_2] = 1`` at a node). The cyclic style gives the chain
    ``A_m ... A_1 = A_1 A_m ... A_2 = ... = A_{m-1} ... A_1 A_m``.
    """
    m = len(gens)
    if m == 2 and style == COMMUTATOR:
        return [commutator_relation(gens[0], gens[1], origin)]
    top_down = list(reversed(gens))

    def product(ws):
        return reduce_word([x for w in ws for x in w])

    whole = product(top_down)
    if style == COMMUTATOR:
        return [commutator_relation(whole, a, origin) for a in gens]
    if style == CYCLIC:
        rotations = [product(top_down[s:] + top_down[:s]) for s in range(m)]
        return [Relation(rotations[0], r, origin) for r in rotations[1:]]
    raise ValueError(f"unknown relation style {style!r}")


def local_generators(point: SingularPoint, conjugator: BraidWord) -> list[Word]:
    """Images under the conjugator of G_k .. G_l, the loops around the point's lines."""
    k, l = point.pair.k, point.pair.l
    return [act(conjugator, (i,)) for i in range(k, l + 1)]


def economical_relations(
    points: Sequence[SingularPoint],
    braids: Sequence[BraidWord] | None,
    n: int,
    mode: str = AFFINE,
    style: str = COMMUTATOR,
) -> Presentation:
    """Local relations per point; ``braids`` is accepted for symmetry and unused."""
    relations: list[Relation] = []
    for p, c in zip(points, conjugators(points, n)):
        relations.extend(local_relations(local_generators(p, c), p.j, style))
    return _finish(n, relations, mode)


def presentations_equivalent(p1: Presentation, p2: Presentation, probes: Sequence[FiniteGroup], budget=None) -> bool:
    """Agreement of abelianization and of hom counts into every probe group."""
    if p1.n_generators != p2.n_generators or p1.mode != p2.mode:
        raise ValueError("presentations must share generator count and mode")
    if abelianization(p1) != abelianization(p2):
        return False
    kw = {} if budget is None else {"budget": budget}
    return all(hom_count(p1, g, **kw) == hom_count(p2, g, **kw) for g in probes)


FULL = "full"
ECONOMICAL = "economical"


@dataclass(frozen=True)
class PipelineResult:
    analyzed: AnalyzedArrangement
    braids: tuple[BraidWord, ...]
    presentation: Presentation


def compute_presentation(
    arr: Arrangement,
    mode: str = AFFINE,
    method: str = ECONOMICAL,
    auto_normalize: bool = True,
    style: str = COMMUTATOR,
) -> PipelineResult:
    """Normalize, read the pairs, build the monodromy and write the relations."""
    analyzed = analyze(arr, auto_normalize)
    braids = tuple(monodromy_braids(analyzed.points, analyzed.n))
    if method == FULL:
        pres = full_relations(braids, analyzed.n, mode)
    elif method == ECONOMICAL:
        pres = economical_relations(analyzed.points, braids, analyzed.n, mode, style)
    else:
        raise ValueError(f"unknown method {method!r}")
    return PipelineResult(analyzed, braids, pres)
