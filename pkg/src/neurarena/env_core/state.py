"""Value-semantic game state.

Positions are integers in 1/16-tile units ("units" below); the transition
function touches no floating point, so replays are bit-exact on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gamemap import GameMap

UNITS_PER_TILE = 16

# Facing indices run clockwise from north.
FACING_VECTORS: tuple[tuple[int, int], ...] = (
    (0, -1),   # 0 N
    (1, -1),   # 1 NE
    (1, 0),    # 2 E
    (1, 1),    # 3 SE
    (0, 1),    # 4 S
    (-1, 1),   # 5 SW
    (-1, 0),   # 6 W
    (-1, -1),  # 7 NW
)

MAX_HEALTH = 100
MAX_AMMO = 50
ENEMY_MAX_HP = 40


@dataclass(frozen=True)
class EnemyState:
    x: int
    y: int
    facing: int
    hp: int = ENEMY_MAX_HP
    alive: bool = True
    flash: bool = False  # took a hit this tick (render hint)

    def tile(self) -> tuple[int, int]:
        return (self.x // UNITS_PER_TILE, self.y // UNITS_PER_TILE)


@dataclass(frozen=True)
class GameState:
    game_map: GameMap
    x: int
    y: int
    facing: int
    health: int
    ammo: int
    enemies: tuple[EnemyState, ...]
    doors_open: frozenset[tuple[int, int]]
    pickups_taken: frozenset[int]  # indices into game_map.pickups
    visited: frozenset[tuple[int, int]]
    tick: int
    rng: tuple[int, int] = (0, 0)  # counter RNG (key, counter)
    muzzle: bool = False           # fired this tick (render hint)
    done: bool = False

    def tile(self) -> tuple[int, int]:
        return (self.x // UNITS_PER_TILE, self.y // UNITS_PER_TILE)

    def alive_enemies(self) -> tuple[EnemyState, ...]:
        return tuple(e for e in self.enemies if e.alive)


def facing_from_delta(dx: int, dy: int) -> int:
    """Quantize a (dx, dy) vector to the nearest of the 8 facings, in pure
    integer arithmetic (ties resolved toward the lower index)."""
    if dx == 0 and dy == 0:
        return 0
    best, best_score = 0, None
    for i, (fx, fy) in enumerate(FACING_VECTORS):
        # Compare cos-angle = dot/|f| via dot^2 * sign preserved cross-multiplied
        dot = dx * fx + dy * fy
        f2 = fx * fx + fy * fy
        # score ~ dot/sqrt(f2): compare dot^2/f2 keeping sign of dot
        score = (1 if dot > 0 else -1) * dot * dot * (2 if f2 == 1 else 1)
        if best_score is None or score > best_score:
            best, best_score = i, score
    return best
