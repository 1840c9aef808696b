"""Game rules: reset/step as pure functions over GameState.

Reward terms are accumulated per name so an episode's total can be audited
against independently tracked ledgers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..rng import CounterRng, derive_key
from . import actions as act
from .gamemap import GameMap, TILE_DOOR, TILE_FLOOR, TILE_WALL, builtin_map
from .state import (
    ENEMY_MAX_HP,
    FACING_VECTORS,
    MAX_AMMO,
    MAX_HEALTH,
    UNITS_PER_TILE,
    EnemyState,
    GameState,
    facing_from_delta,
)

EPISODE_CAP = 1000

PLAYER_SPEED = 4          # units/tick along an axis
PLAYER_SPEED_DIAG = 3     # ~4/sqrt(2), kept integer
ENEMY_SPEED = 2
PLAYER_RADIUS = 5         # units
TURN_EVERY = 4            # turning advances one facing step on ticks % 4 == 0
FIRE_RANGE_TILES = 8
FIRE_LATERAL_UNITS = 8    # half a tile
FIRE_DAMAGE = 20
CONTACT_RANGE_UNITS = 12  # 0.75 tile
CONTACT_DAMAGE = 10
ENEMY_CHASE_TILES = 12
START_AMMO = 30
AMMO_PICKUP = 5
HEALTH_PICKUP = 20

REWARD_TERMS = (
    "player_hit", "player_death", "enemy_hit", "enemy_kill",
    "pickup", "new_tile", "health_delta", "ammo_delta",
)


@dataclass(frozen=True)
class StepResult:
    state: GameState
    reward: float
    done: bool
    terms: dict[str, float]


class Environment:
    """Binds a map and episode settings; all game logic is stateless."""

    def __init__(self, game_map: GameMap | str = "depot", episode_cap: int = EPISODE_CAP,
                 randomize_spawn: bool = False):
        self.game_map = builtin_map(game_map) if isinstance(game_map, str) else game_map
        self.episode_cap = episode_cap
        self.randomize_spawn = randomize_spawn

    def reset(self, seed: int) -> GameState:
        m = self.game_map
        rng = CounterRng(derive_key(seed & ((1 << 64) - 1), 0xA11CE))
        sx, sy = m.spawn
        if self.randomize_spawn:
            sx, sy = self._draw_spawn(rng)
        enemies = tuple(
            EnemyState(
                x=ex * UNITS_PER_TILE + UNITS_PER_TILE // 2,
                y=ey * UNITS_PER_TILE + UNITS_PER_TILE // 2,
                facing=facing_from_delta(sx - ex, sy - ey),
                hp=ENEMY_MAX_HP,
            )
            for ex, ey in m.enemy_spawns
        )
        return GameState(
            game_map=m,
            x=sx * UNITS_PER_TILE + UNITS_PER_TILE // 2,
            y=sy * UNITS_PER_TILE + UNITS_PER_TILE // 2,
            facing=0,
            health=MAX_HEALTH,
            ammo=START_AMMO,
            enemies=enemies,
            doors_open=frozenset(),
            pickups_taken=frozenset(),
            visited=frozenset([(sx, sy)]),
            tick=0,
            rng=rng.state(),
        )

    def _draw_spawn(self, rng: CounterRng) -> tuple[int, int]:
        m = self.game_map
        bad = {p for p, _ in m.pickups}
        for _ in range(256):
            x = rng.randrange(m.width)
            y = rng.randrange(m.height)
            if not m.is_floor(x, y) or (x, y) in bad:
                continue
            if any(abs(ex - x) + abs(ey - y) < 3 for ex, ey in m.enemy_spawns):
                continue
            return (x, y)
        return m.spawn

    def step(self, state: GameState, action: int) -> tuple[GameState, float, bool]:
        r = self.step_full(state, action)
        return r.state, r.reward, r.done

    def step_full(self, state: GameState, action: int) -> StepResult:
        act.check_action(action)
        m = state.game_map
        terms = {k: 0.0 for k in REWARD_TERMS}
        health0, ammo0 = state.health, state.ammo

        x, y, facing = state.x, state.y, state.facing
        doors_open = state.doors_open
        enemies = [replace(e, flash=False) if e.flash else e for e in state.enemies]
        muzzle = False

        # --- player movement / turning ---
        move_dir = None
        if action == act.FORWARD:
            move_dir = FACING_VECTORS[facing]
        elif action == act.BACKWARD:
            move_dir = FACING_VECTORS[(facing + 4) % 8]
        elif action == act.STRAFE_LEFT:
            move_dir = FACING_VECTORS[(facing + 6) % 8]
        elif action == act.STRAFE_RIGHT:
            move_dir = FACING_VECTORS[(facing + 2) % 8]
        elif action == act.TURN_LEFT and state.tick % TURN_EVERY == 0:
            facing = (facing + 7) % 8
        elif action == act.TURN_RIGHT and state.tick % TURN_EVERY == 0:
            facing = (facing + 1) % 8
        if move_dir is not None:
            dx, dy = move_dir
            speed = PLAYER_SPEED if dx == 0 or dy == 0 else PLAYER_SPEED_DIAG
            x, y, doors_open = self._slide(m, doors_open, x, y, dx * speed, dy * speed,
                                           PLAYER_RADIUS, open_doors=True)

        # --- fire ---
        ammo = state.ammo
        if action == act.FIRE and ammo > 0:
            ammo -= 1
            muzzle = True
            hit = self._hitscan(m, doors_open, x, y, facing, enemies)
            if hit is not None:
                e = enemies[hit]
                hp = e.hp - FIRE_DAMAGE
                killed = hp <= 0
                enemies[hit] = replace(e, hp=max(0, hp), alive=not killed, flash=True)
                terms["enemy_hit"] += 300.0
                if killed:
                    terms["enemy_kill"] += 1000.0

        # --- enemies ---
        health = state.health
        new_enemies = []
        for e in enemies:
            if not e.alive:
                new_enemies.append(e)
                continue
            ex, ey, ef = e.x, e.y, e.facing
            ddx, ddy = x - ex, y - ey
            if ddx * ddx + ddy * ddy <= CONTACT_RANGE_UNITS * CONTACT_RANGE_UNITS:
                health -= CONTACT_DAMAGE
                terms["player_hit"] -= 100.0
                ef = facing_from_delta(ddx, ddy)
            elif self._chase_allowed(m, doors_open, e, x, y):
                sx = 0 if ddx == 0 else (1 if ddx > 0 else -1)
                sy = 0 if ddy == 0 else (1 if ddy > 0 else -1)
                if abs(ddx) >= abs(ddy) and sx != 0:
                    mx, my = sx * ENEMY_SPEED, 0
                else:
                    mx, my = 0, sy * ENEMY_SPEED
                ex, ey, _ = self._slide(m, doors_open, ex, ey, mx, my, PLAYER_RADIUS,
                                        open_doors=False)
                if (mx, my) != (0, 0):
                    ef = facing_from_delta(mx, my)
            new_enemies.append(replace(e, x=ex, y=ey, facing=ef))
        enemies = new_enemies

        died = health <= 0
        if died:
            health = 0
            terms["player_death"] -= 5000.0

        # --- pickups ---
        ptile = (x // UNITS_PER_TILE, y // UNITS_PER_TILE)
        pickups_taken = state.pickups_taken
        if not died:
            for i, (tile, kind) in enumerate(m.pickups):
                if i in pickups_taken or tile != ptile:
                    continue
                if kind == "ammo":
                    gained = min(MAX_AMMO, ammo + AMMO_PICKUP) - ammo
                    if gained == 0:
                        continue  # full: leave the item on the floor
                    ammo += gained
                else:
                    gained = min(MAX_HEALTH, health + HEALTH_PICKUP) - health
                    if gained == 0:
                        continue
                    health += gained
                pickups_taken = pickups_taken | {i}
                terms["pickup"] += 100.0

        # --- exploration ---
        visited = state.visited
        if ptile not in visited:
            visited = visited | {ptile}
            l1 = abs(ptile[0] - m.spawn[0]) + abs(ptile[1] - m.spawn[1])
            terms["new_tile"] += 20.0 * (1.0 + 0.5 * l1)

        terms["health_delta"] += 10.0 * (health - health0)
        dammo = ammo - ammo0
        terms["ammo_delta"] += 10.0 * max(0, dammo) + min(0, dammo)

        tick = state.tick + 1
        done = died or all(not e.alive for e in enemies) or tick >= self.episode_cap
        new_state = replace(
            state, x=x, y=y, facing=facing, health=health, ammo=ammo,
            enemies=tuple(enemies), doors_open=doors_open,
            pickups_taken=pickups_taken, visited=visited, tick=tick,
            muzzle=muzzle, done=done,
        )
        return StepResult(new_state, sum(terms.values()), done, terms)

    # --- helpers -----------------------------------------------------------

    @staticmethod
    def _blocked(m: GameMap, doors_open: frozenset, tx: int, ty: int) -> bool:
        if not m.in_bounds(tx, ty):
            return True
        t = m.tiles[ty, tx]
        if t == TILE_WALL:
            return True
        if t == TILE_DOOR and (tx, ty) not in doors_open:
            return True
        return False

    @classmethod
    def _box_free(cls, m: GameMap, doors_open: frozenset, x: int, y: int, r: int) -> bool:
        for cx in (x - r, x + r):
            for cy in (y - r, y + r):
                if cls._blocked(m, doors_open, cx // UNITS_PER_TILE, cy // UNITS_PER_TILE):
                    return False
        return True

    @classmethod
    def _touched_doors(cls, m: GameMap, x: int, y: int, r: int) -> list[tuple[int, int]]:
        out = []
        for cx in (x - r, x + r):
            for cy in (y - r, y + r):
                tx, ty = cx // UNITS_PER_TILE, cy // UNITS_PER_TILE
                if m.in_bounds(tx, ty) and m.tiles[ty, tx] == TILE_DOOR and (tx, ty) not in out:
                    out.append((tx, ty))
        return out

    @classmethod
    def _slide(cls, m: GameMap, doors_open: frozenset, x: int, y: int, dx: int, dy: int,
               r: int, open_doors: bool) -> tuple[int, int, frozenset]:
        # Axis-separated movement; walking into a closed door opens it (and
        # blocks this tick's motion into it).
        if open_doors:
            for d in cls._touched_doors(m, x + dx, y + dy, r):
                if d not in doors_open:
                    doors_open = doors_open | {d}
                    return x, y, doors_open
        if dx != 0 and cls._box_free(m, doors_open, x + dx, y, r):
            x += dx
        if dy != 0 and cls._box_free(m, doors_open, x, y + dy, r):
            y += dy
        return x, y, doors_open

    @staticmethod
    def _hitscan(m: GameMap, doors_open: frozenset, x: int, y: int, facing: int,
                 enemies: list[EnemyState]) -> int | None:
        dx, dy = FACING_VECTORS[facing]
        d2 = dx * dx + dy * dy
        range_units = FIRE_RANGE_TILES * UNITS_PER_TILE
        best, best_proj = None, None
        for i, e in enumerate(enemies):
            if not e.alive:
                continue
            ex, ey = e.x - x, e.y - y
            proj = ex * dx + ey * dy
            if proj <= 0 or proj * proj > range_units * range_units * d2:
                continue
            cross = ex * dy - ey * dx
            if cross * cross > FIRE_LATERAL_UNITS * FIRE_LATERAL_UNITS * d2:
                continue
            if best_proj is None or proj < best_proj:
                best, best_proj = i, proj
        if best is None:
            return None
        e = enemies[best]
        if not Environment._los(m, doors_open, x // UNITS_PER_TILE, y // UNITS_PER_TILE,
                                e.x // UNITS_PER_TILE, e.y // UNITS_PER_TILE):
            return None
        return best

    @classmethod
    def _chase_allowed(cls, m: GameMap, doors_open: frozenset, e: EnemyState,
                       px: int, py: int) -> bool:
        etx, ety = e.x // UNITS_PER_TILE, e.y // UNITS_PER_TILE
        ptx, pty = px // UNITS_PER_TILE, py // UNITS_PER_TILE
        ddx, ddy = ptx - etx, pty - ety
        if ddx * ddx + ddy * ddy > ENEMY_CHASE_TILES * ENEMY_CHASE_TILES:
            return False
        return cls._los(m, doors_open, etx, ety, ptx, pty)

    @staticmethod
    def _los(m: GameMap, doors_open: frozenset, x0: int, y0: int, x1: int, y1: int) -> bool:
        """Bresenham tile walk; walls and closed doors block sight."""
        dx, dy = abs(x1 - x0), -abs(y1 - y0)
        sx = 1 if x0 < x1 else -1
        sy = 1 if y0 < y1 else -1
        err = dx + dy
        x, y = x0, y0
        while True:
            if (x, y) != (x0, y0) and (x, y) != (x1, y1):
                if Environment._blocked(m, doors_open, x, y):
                    return False
            if x == x1 and y == y1:
                return True
            e2 = 2 * err
            if e2 >= dy:
                err += dy
                x += sx
            if e2 <= dx:
                err += dx
                y += sy


def validate_state(state: GameState) -> None:
    """Raise AssertionError if a state violates its documented invariants."""
    m = state.game_map
    assert 0 <= state.health <= MAX_HEALTH
    assert 0 <= state.ammo <= MAX_AMMO
    assert 0 <= state.facing < 8
    assert state.tick >= 0
    blocked = lambda px, py: Environment._blocked(
        m, state.doors_open, px // UNITS_PER_TILE, py // UNITS_PER_TILE)
    assert not blocked(state.x, state.y), "player inside a wall"
    for e in state.enemies:
        assert 0 <= e.hp <= ENEMY_MAX_HP
        if e.alive:
            assert not blocked(e.x, e.y), "enemy inside a wall"
