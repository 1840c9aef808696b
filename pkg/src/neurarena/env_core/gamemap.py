"""Tile maps and the `toymap v1` text format.

One char per tile: `#` wall, `.` floor, `D` door (starts closed), `P` player
spawn, `A` ammo pickup, `H` health pickup, `E` enemy spawn. Marker chars sit
on floor tiles. Coordinates are (x, y) with y growing downward.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field

import numpy as np

MAP_HEADER = "toymap v1"

TILE_FLOOR = 0
TILE_WALL = 1
TILE_DOOR = 2


class MapError(ValueError):
    """Malformed or invariant-violating map file."""


@dataclass(frozen=True)
class GameMap:
    name: str
    width: int
    height: int
    tiles: np.ndarray = field(repr=False)  # uint8 [height, width]
    spawn: tuple[int, int]
    pickups: tuple[tuple[tuple[int, int], str], ...]
    enemy_spawns: tuple[tuple[int, int], ...]

    def tile(self, x: int, y: int) -> int:
        return int(self.tiles[y, x])

    def in_bounds(self, x: int, y: int) -> bool:
        return 0 <= x < self.width and 0 <= y < self.height

    def is_floor(self, x: int, y: int) -> bool:
        return self.in_bounds(x, y) and self.tiles[y, x] == TILE_FLOOR


_CHAR_TO_TILE = {"#": TILE_WALL, ".": TILE_FLOOR, "D": TILE_DOOR,
                 "P": TILE_FLOOR, "A": TILE_FLOOR, "H": TILE_FLOOR, "E": TILE_FLOOR}


def loads_map(text: str, name: str = "unnamed") -> GameMap:
    lines = [ln.rstrip("\n") for ln in text.strip("\n").split("\n")]
    if not lines or lines[0].strip() != MAP_HEADER:
        raise MapError(f"missing '{MAP_HEADER}' header line")
    rows = lines[1:]
    if not rows:
        raise MapError("empty map grid")
    width = len(rows[0])
    height = len(rows)
    tiles = np.zeros((height, width), dtype=np.uint8)
    spawn = None
    pickups: list[tuple[tuple[int, int], str]] = []
    enemies: list[tuple[int, int]] = []
    for y, row in enumerate(rows):
        if len(row) != width:
            raise MapError(f"row {y} has length {len(row)}, expected {width}")
        for x, ch in enumerate(row):
            if ch not in _CHAR_TO_TILE:
                raise MapError(f"unknown tile char {ch!r} at ({x},{y})")
            tiles[y, x] = _CHAR_TO_TILE[ch]
            if ch == "P":
                if spawn is not None:
                    raise MapError("multiple spawn tiles")
                spawn = (x, y)
            elif ch == "A":
                pickups.append(((x, y), "ammo"))
            elif ch == "H":
                pickups.append(((x, y), "health"))
            elif ch == "E":
                enemies.append((x, y))
    if spawn is None:
        raise MapError("no spawn tile")
    boundary = np.concatenate([tiles[0, :], tiles[-1, :], tiles[:, 0], tiles[:, -1]])
    if not (boundary == TILE_WALL).all():
        raise MapError("outer boundary must be entirely wall")
    m = GameMap(name=name, width=width, height=height, tiles=tiles, spawn=spawn,
                pickups=tuple(pickups), enemy_spawns=tuple(enemies))
    for (x, y) in [m.spawn] + [p for p, _ in m.pickups] + list(m.enemy_spawns):
        if not m.is_floor(x, y):
            raise MapError(f"entity tile ({x},{y}) is not floor")
    return m


def dumps_map(m: GameMap) -> str:
    grid = [["#" if m.tiles[y, x] == TILE_WALL else
             "D" if m.tiles[y, x] == TILE_DOOR else "."
             for x in range(m.width)] for y in range(m.height)]
    sx, sy = m.spawn
    grid[sy][sx] = "P"
    for (x, y), kind in m.pickups:
        grid[y][x] = "A" if kind == "ammo" else "H"
    for x, y in m.enemy_spawns:
        grid[y][x] = "E"
    return MAP_HEADER + "\n" + "\n".join("".join(row) for row in grid) + "\n"


def load_map(path: str) -> GameMap:
    with open(path, "r", encoding="ascii") as f:
        text = f.read()
    name = path.rsplit("/", 1)[-1].removesuffix(".txt")
    return loads_map(text, name=name)


def builtin_map_names() -> list[str]:
    res = importlib.resources.files("neurarena.env_core") / "maps"
    return sorted(p.name.removesuffix(".txt") for p in res.iterdir() if p.name.endswith(".txt"))


def builtin_map(name: str) -> GameMap:
    res = importlib.resources.files("neurarena.env_core") / "maps" / f"{name}.txt"
    try:
        text = res.read_text(encoding="ascii")
    except FileNotFoundError:
        raise MapError(f"no builtin map named {name!r}; have {builtin_map_names()}")
    return loads_map(text, name=name)
