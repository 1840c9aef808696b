"""Deterministic rasterizer: GameState -> 64x64 RGB frame.

Layout: rows 0..39 are the viewport (camera locked on the player, 90-degree
view cone), rows 40..47 the HUD strip (health digits, tick pip, ammo digits),
rows 48..63 a constant pad color. Equal states produce byte-identical frames.
"""

from __future__ import annotations

import numpy as np

from .gamemap import GameMap, TILE_DOOR, TILE_FLOOR, TILE_WALL
from .state import FACING_VECTORS, GameState, UNITS_PER_TILE

FRAME_W = 64
FRAME_H = 64
VIEW_ROWS = 40
HUD_ROWS = range(40, 48)
PAD_ROWS = range(48, 64)
FRAME_SHAPE = (FRAME_H, FRAME_W, 3)

TILE_PX = 4
_PAD = 32  # padded border around the map image, in pixels
_CAM_X, _CAM_Y = 32, 20  # player pixel within the viewport
_FOG_RADIUS = 34
_NEAR_RADIUS = 6

COLOR_FLOOR = (96, 80, 56)
COLOR_FLOOR_DOT = (78, 64, 44)
COLOR_WALL = (116, 116, 130)
COLOR_WALL_EDGE = (74, 74, 86)
COLOR_DOOR = (182, 124, 52)
COLOR_FOG = (10, 10, 14)
COLOR_ENEMY = (208, 52, 52)
COLOR_ENEMY_FLASH = (255, 170, 170)
COLOR_ENEMY_EYE = (255, 255, 255)
COLOR_CORPSE = (96, 28, 28)
COLOR_AMMO = (232, 200, 48)
COLOR_HEALTH = (64, 204, 96)
COLOR_PLAYER = (224, 230, 255)
COLOR_PLAYER_TAIL = (130, 140, 180)
COLOR_TRACER = (255, 244, 170)
COLOR_HUD_BG = (26, 26, 32)
COLOR_HP_DIGITS = (240, 110, 110)
COLOR_AMMO_DIGITS = (235, 215, 130)
COLOR_PIP = (96, 200, 224)
PAD_COLOR = (18, 18, 22)

_HP_ANCHORS = (4, 8, 12)     # x of the three health digit glyphs, y=41
_AMMO_ANCHORS = (50, 54, 58)
_PIP_X0, _PIP_SLOTS, _PIP_W = 24, 8, 2
_DIGIT_Y = 41

_FONT = {
    "0": ("###", "#.#", "#.#", "#.#", "###"),
    "1": (".#.", "##.", ".#.", ".#.", "###"),
    "2": ("###", "..#", "###", "#..", "###"),
    "3": ("###", "..#", "###", "..#", "###"),
    "4": ("#.#", "#.#", "###", "..#", "..#"),
    "5": ("###", "#..", "###", "..#", "###"),
    "6": ("###", "#..", "###", "#.#", "###"),
    "7": ("###", "..#", "..#", ".#.", ".#."),
    "8": ("###", "#.#", "###", "#.#", "###"),
    "9": ("###", "#.#", "###", "..#", "###"),
}
_FONT_MASKS = {ch: np.array([[c == "#" for c in row] for row in rows], dtype=bool)
               for ch, rows in _FONT.items()}


def _sprite(rows: tuple[str, ...]) -> np.ndarray:
    return np.array([[c == "#" for c in row] for row in rows], dtype=bool)


_ENEMY_BODY = _sprite((".###.", "#####", "#####", "#####", ".###."))
_CORPSE = _sprite(("#...#", ".#.#.", "..#..", ".#.#.", "#...#"))
_AMMO_SPRITE = _sprite(("..#..", ".###.", "#####", ".###.", "..#.."))
_HEALTH_SPRITE = _sprite(("..#..", "..#..", "#####", "..#..", "..#.."))


def _fog_masks() -> np.ndarray:
    """(8, VIEW_ROWS, FRAME_W) visibility masks, one per facing; exact
    integer cone test so the mask is platform-independent."""
    ys = np.arange(VIEW_ROWS)[:, None] - _CAM_Y
    xs = np.arange(FRAME_W)[None, :] - _CAM_X
    v2 = xs * xs + ys * ys
    near = v2 <= _NEAR_RADIUS * _NEAR_RADIUS
    masks = np.zeros((8, VIEW_ROWS, FRAME_W), dtype=bool)
    for f, (dx, dy) in enumerate(FACING_VECTORS):
        dot = xs * dx + ys * dy
        d2 = dx * dx + dy * dy
        cone = (dot > 0) & (2 * dot * dot >= v2 * d2)
        masks[f] = near | (cone & (v2 <= _FOG_RADIUS * _FOG_RADIUS))
    return masks


_FOG_MASKS = _fog_masks()


def _player_sprites() -> list[list[tuple[int, int, tuple[int, int, int]]]]:
    """Per facing: list of (dy, dx, color) pixels relative to the player."""
    out = []
    for dx, dy in FACING_VECTORS:
        px = [(-1, -1, COLOR_PLAYER), (-1, 0, COLOR_PLAYER), (-1, 1, COLOR_PLAYER),
              (0, -1, COLOR_PLAYER), (0, 0, COLOR_PLAYER), (0, 1, COLOR_PLAYER),
              (1, -1, COLOR_PLAYER), (1, 0, COLOR_PLAYER), (1, 1, COLOR_PLAYER),
              (2 * dy, 2 * dx, COLOR_ENEMY_EYE), (-2 * dy, -2 * dx, COLOR_PLAYER_TAIL)]
        out.append(px)
    return out


_PLAYER_SPRITES = _player_sprites()


class _MapArt:
    """Pre-rendered padded map image plus door tile art."""

    def __init__(self, m: GameMap):
        h = m.height * TILE_PX + 2 * _PAD
        w = m.width * TILE_PX + 2 * _PAD
        img = np.empty((h, w, 3), dtype=np.uint8)
        img[:] = COLOR_WALL
        img[:, :, :] = COLOR_WALL

        floor_tile = np.empty((TILE_PX, TILE_PX, 3), dtype=np.uint8)
        floor_tile[:] = COLOR_FLOOR
        floor_tile[0, 0] = COLOR_FLOOR_DOT
        wall_tile = np.empty((TILE_PX, TILE_PX, 3), dtype=np.uint8)
        wall_tile[:] = COLOR_WALL_EDGE
        wall_tile[1:-1, 1:-1] = COLOR_WALL
        door_tile = np.empty((TILE_PX, TILE_PX, 3), dtype=np.uint8)
        door_tile[:] = COLOR_DOOR
        door_tile[0, :] = COLOR_WALL_EDGE
        door_tile[-1, :] = COLOR_WALL_EDGE
        open_tile = floor_tile.copy()
        open_tile[0, 0] = COLOR_DOOR
        open_tile[0, -1] = COLOR_DOOR
        open_tile[-1, 0] = COLOR_DOOR
        open_tile[-1, -1] = COLOR_DOOR

        for y in range(m.height):
            for x in range(m.width):
                t = m.tiles[y, x]
                art = wall_tile if t == TILE_WALL else door_tile if t == TILE_DOOR else floor_tile
                img[_PAD + y * TILE_PX:_PAD + (y + 1) * TILE_PX,
                    _PAD + x * TILE_PX:_PAD + (x + 1) * TILE_PX] = art
        self.img = img
        self.open_tile = open_tile


_ART_CACHE: dict[int, tuple[GameMap, _MapArt]] = {}


def _map_art(m: GameMap) -> _MapArt:
    entry = _ART_CACHE.get(id(m))
    if entry is None or entry[0] is not m:
        entry = (m, _MapArt(m))
        _ART_CACHE[id(m)] = entry
    return entry[1]


def _blit_mask(view: np.ndarray, mask: np.ndarray, cy: int, cx: int,
               color: tuple[int, int, int]) -> None:
    """Stamp a boolean sprite mask centered at (cy, cx) with viewport clipping."""
    sh, sw = mask.shape
    y0, x0 = cy - sh // 2, cx - sw // 2
    vy0, vx0 = max(0, y0), max(0, x0)
    vy1, vx1 = min(VIEW_ROWS, y0 + sh), min(FRAME_W, x0 + sw)
    if vy0 >= vy1 or vx0 >= vx1:
        return
    sub = mask[vy0 - y0:vy1 - y0, vx0 - x0:vx1 - x0]
    region = view[vy0:vy1, vx0:vx1]
    region[sub] = color


def _put_pixel(view: np.ndarray, y: int, x: int, color: tuple[int, int, int]) -> None:
    if 0 <= y < VIEW_ROWS and 0 <= x < FRAME_W:
        view[y, x] = color


def render(state: GameState) -> np.ndarray:
    m = state.game_map
    art = _map_art(m)
    px = state.x * TILE_PX // UNITS_PER_TILE
    py = state.y * TILE_PX // UNITS_PER_TILE
    top = _PAD + py - _CAM_Y
    left = _PAD + px - _CAM_X
    view = art.img[top:top + VIEW_ROWS, left:left + FRAME_W].copy()

    # Open doors over the baked closed-door art.
    for (dx_t, dy_t) in state.doors_open:
        ty = _PAD + dy_t * TILE_PX - top
        tx = _PAD + dx_t * TILE_PX - left
        if -TILE_PX < ty < VIEW_ROWS and -TILE_PX < tx < FRAME_W:
            y0, x0 = max(0, ty), max(0, tx)
            y1, x1 = min(VIEW_ROWS, ty + TILE_PX), min(FRAME_W, tx + TILE_PX)
            view[y0:y1, x0:x1] = art.open_tile[y0 - ty:y1 - ty, x0 - tx:x1 - tx]

    # Pickups still on the floor.
    for i, ((tx_t, ty_t), kind) in enumerate(m.pickups):
        if i in state.pickups_taken:
            continue
        cy = ty_t * TILE_PX + TILE_PX // 2 - py + _CAM_Y
        cx = tx_t * TILE_PX + TILE_PX // 2 - px + _CAM_X
        _blit_mask(view, _AMMO_SPRITE if kind == "ammo" else _HEALTH_SPRITE,
                   cy, cx, COLOR_AMMO if kind == "ammo" else COLOR_HEALTH)

    # Enemies (corpses first so live ones draw on top if overlapping).
    for e in state.enemies:
        cy = e.y * TILE_PX // UNITS_PER_TILE - py + _CAM_Y
        cx = e.x * TILE_PX // UNITS_PER_TILE - px + _CAM_X
        if not e.alive:
            _blit_mask(view, _CORPSE, cy, cx, COLOR_CORPSE)
    for e in state.enemies:
        if not e.alive:
            continue
        cy = e.y * TILE_PX // UNITS_PER_TILE - py + _CAM_Y
        cx = e.x * TILE_PX // UNITS_PER_TILE - px + _CAM_X
        _blit_mask(view, _ENEMY_BODY, cy, cx,
                   COLOR_ENEMY_FLASH if e.flash else COLOR_ENEMY)
        fdx, fdy = FACING_VECTORS[e.facing]
        _put_pixel(view, cy + fdy, cx + fdx, COLOR_ENEMY_EYE)

    # Muzzle tracer along the facing ray.
    if state.muzzle:
        fdx, fdy = FACING_VECTORS[state.facing]
        for k in range(3, 9):
            _put_pixel(view, _CAM_Y + k * fdy, _CAM_X + k * fdx, COLOR_TRACER)

    # View-cone fog, then the always-visible player marker.
    fog = ~_FOG_MASKS[state.facing]
    view[fog] = COLOR_FOG
    for dy, dx, color in _PLAYER_SPRITES[state.facing]:
        _put_pixel(view, _CAM_Y + dy, _CAM_X + dx, color)

    frame = np.empty(FRAME_SHAPE, dtype=np.uint8)
    frame[:VIEW_ROWS] = view
    frame[VIEW_ROWS:48] = COLOR_HUD_BG
    frame[48:] = PAD_COLOR

    _draw_number(frame, state.health, _HP_ANCHORS, COLOR_HP_DIGITS)
    _draw_number(frame, state.ammo, _AMMO_ANCHORS, COLOR_AMMO_DIGITS)
    pip_x = _PIP_X0 + _PIP_W * (state.tick % _PIP_SLOTS)
    frame[_DIGIT_Y:_DIGIT_Y + 5, pip_x:pip_x + _PIP_W] = COLOR_PIP
    return frame


def _draw_number(frame: np.ndarray, value: int, anchors: tuple[int, ...],
                 color: tuple[int, int, int]) -> None:
    text = f"{value:0{len(anchors)}d}"
    for ch, x in zip(text, anchors):
        mask = _FONT_MASKS[ch]
        region = frame[_DIGIT_Y:_DIGIT_Y + 5, x:x + 3]
        region[mask] = color
