from typing import TypedDict

from prolongation_kit.settings.constants import Reduction


class ReductionConfig(TypedDict, total=False):
    frame: int
    spin: int
    cross_pair: tuple[int, int]
    named: dict[tuple[int, int], int]
    closing: dict[int, tuple[int, int]]
    identify: dict[int, int]
    k_generator: int
    base: str


REDUCTION_CONFIG: dict[str, ReductionConfig] = {}


def register_reduction(key: str, config: ReductionConfig) -> None:
    REDUCTION_CONFIG[key] = config


def get_reduction_config(key: str | Reduction) -> ReductionConfig:
    key = key.value if isinstance(key, Reduction) else key
    if key not in REDUCTION_CONFIG:
        raise KeyError(f"Unknown reduction {key!r}; registered: {sorted(REDUCTION_CONFIG)}")
    return REDUCTION_CONFIG[key]


# cross_pair (a, b): G carries Γ_ff (S_a S_b_y − S_b S_a_y) X_f, oriented as the general solution restricted to X_f
# closing: eliminated generator -> (surviving generator, sign); image is sign * 2*i*lambda * X_surviving
register_reduction(
    Reduction.I.value,
    {
        "frame": 3,
        "spin": 3,
        "cross_pair": (1, 2),
        "named": {(3, 4): 10, (3, 5): 11, (4, 5): 12},
        "closing": {10: (5, 1), 11: (4, -1), 12: (3, 1)},
        "k_generator": 12,
    },
)
register_reduction(
    Reduction.II.value,
    {
        "frame": 2,
        "spin": 2,
        "cross_pair": (3, 1),
        "named": {(2, 4): 8, (2, 5): 9, (4, 5): 12},
        "closing": {8: (5, 1), 9: (4, -1), 12: (2, 1)},
        "k_generator": 12,
    },
)
register_reduction(
    Reduction.III.value,
    {
        "frame": 1,
        "spin": 1,
        "cross_pair": (2, 3),
        "named": {(1, 4): 6, (1, 5): 7, (4, 5): 12},
        "closing": {6: (5, 1), 7: (4, -1), 12: (1, 1)},
        "k_generator": 12,
    },
)
# X1 = X2 = X3 on the full structure; X6..X12 close as their identified pairs do in reduction (i)
register_reduction(
    "alternative",
    {
        "frame": 3,
        "identify": {1: 3, 2: 3},
        "base": Reduction.I.value,
    },
)
