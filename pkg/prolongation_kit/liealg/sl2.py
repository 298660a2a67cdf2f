from __future__ import annotations

from itertools import combinations

from prolongation_kit.liealg.closure import apply_closing_map
from prolongation_kit.liealg.lie_element import LieElement, X
from prolongation_kit.liealg.open_algebra import DECLARED, NAMED_BY_BRACKET, Generator, OpenAlgebra
from prolongation_kit.registry.reduction_registry import get_reduction_config
from prolongation_kit.scalar.exact_scalar import I_UNIT, LAMBDA, ExactScalar
from prolongation_kit.settings.constants import Reduction

TWO_I_LAMBDA = I_UNIT * LAMBDA * 2

FRAME = (1, 2, 3, 4, 5)
COMMUTING = ((1, 2), (1, 3), (2, 3))


def frame_pair_names() -> dict[tuple[int, int], int]:
    """X6..X12 for the frame pairs in lexicographic order, skipping the commuting triple."""
    pairs = [p for p in combinations(FRAME, 2) if p not in COMMUTING]
    return {pair: 6 + n for n, pair in enumerate(pairs)}


def structure_e() -> OpenAlgebra:
    generators = [Generator(i) for i in FRAME]
    table: dict[tuple[int, int], LieElement] = {pair: LieElement() for pair in COMMUTING}
    for pair, index in frame_pair_names().items():
        generators.append(Generator(index, NAMED_BY_BRACKET, pair, 2))
        table[pair] = X(index)
    return OpenAlgebra(generators, table)


def reduction_algebra(which: str | Reduction) -> OpenAlgebra:
    config = get_reduction_config(which)
    frame = config["frame"]
    generators = [Generator(i, DECLARED) for i in sorted({frame, 4, 5})]
    table = {}
    for pair, index in config["named"].items():
        generators.append(Generator(index, NAMED_BY_BRACKET, pair, 2))
        table[pair] = X(index)
    return OpenAlgebra(generators, table)


def closing_pairs(which: str | Reduction) -> dict[int, tuple[int, int]]:
    """Eliminated generator -> (surviving generator, sign).

    Entries with ``identify`` and ``base`` take every frame pair [Xa,Xb], map a and b through the
    identification and reuse the base reduction's closing for the resulting pair.
    """
    config = get_reduction_config(which)
    if "closing" in config:
        return dict(config["closing"])
    base = get_reduction_config(config["base"])
    identify = config["identify"]
    closing = {}
    for (a, b), index in frame_pair_names().items():
        image = tuple(sorted((identify.get(a, a), identify.get(b, b))))
        source = base["named"].get(image)
        if source is None:
            raise KeyError(f"[X{a},X{b}] maps to {image}, which {config['base']!r} does not close")
        closing[index] = base["closing"][source]
    return closing


def closing_map(which: str | Reduction) -> dict[int, LieElement]:
    config = get_reduction_config(which)
    images = {target: X(source, TWO_I_LAMBDA * sign) for target, (source, sign) in closing_pairs(which).items()}
    for target, source in config.get("identify", {}).items():
        images[target] = X(source)
    return dict(sorted(images.items()))


def epsilon_table(indices: tuple[int, int, int], scale: ExactScalar = TWO_I_LAMBDA) -> dict[tuple[int, int], LieElement]:
    """[Xi,Xj] = scale * eps^{ijk} Xk for three increasing indices."""
    a, b, c = indices
    table = {(a, b): X(c, scale), (b, c): X(a, scale), (a, c): X(b, -scale)}
    return table


def sl2_quotient(which: str | Reduction) -> OpenAlgebra:
    config = get_reduction_config(which)
    source = structure_e() if "identify" in config else reduction_algebra(which)
    return apply_closing_map(source, closing_map(which))
