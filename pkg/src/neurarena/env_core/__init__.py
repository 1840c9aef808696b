from .actions import (
    ACTION_NAMES,
    NUM_ACTIONS,
    NOOP,
    FORWARD,
    BACKWARD,
    TURN_LEFT,
    TURN_RIGHT,
    STRAFE_LEFT,
    STRAFE_RIGHT,
    FIRE,
    ActionError,
    check_action,
)
from .gamemap import GameMap, MapError, load_map, loads_map, dumps_map, builtin_map, builtin_map_names
from .state import GameState, EnemyState, FACING_VECTORS
from .engine import Environment, StepResult, EPISODE_CAP
from .render import render, FRAME_SHAPE, VIEW_ROWS, HUD_ROWS, PAD_COLOR, TILE_PX

__all__ = [
    "ACTION_NAMES", "NUM_ACTIONS", "NOOP", "FORWARD", "BACKWARD", "TURN_LEFT",
    "TURN_RIGHT", "STRAFE_LEFT", "STRAFE_RIGHT", "FIRE", "ActionError",
    "check_action", "GameMap", "MapError", "load_map", "loads_map", "dumps_map",
    "builtin_map", "builtin_map_names", "GameState", "EnemyState",
    "FACING_VECTORS", "Environment", "StepResult", "EPISODE_CAP", "render",
    "FRAME_SHAPE", "VIEW_ROWS", "HUD_ROWS", "PAD_COLOR", "TILE_PX",
]
