"""The 8-way action set. The id mapping is versioned: changing it invalidates
every recorded dataset and trained model, so treat it as frozen."""

NOOP = 0
FORWARD = 1
BACKWARD = 2
TURN_LEFT = 3
TURN_RIGHT = 4
STRAFE_LEFT = 5
STRAFE_RIGHT = 6
FIRE = 7

NUM_ACTIONS = 8

ACTION_NAMES = (
    "noop",
    "forward",
    "backward",
    "turn-left",
    "turn-right",
    "strafe-left",
    "strafe-right",
    "fire",
)

ACTION_SET_VERSION = 1


class ActionError(ValueError):
    """Raised for action ids outside 0..7."""


def check_action(action: int) -> int:
    if not isinstance(action, (int,)) or isinstance(action, bool):
        raise ActionError(f"action must be an int, got {type(action).__name__}")
    if not 0 <= action < NUM_ACTIONS:
        raise ActionError(f"action id {action} out of range 0..{NUM_ACTIONS - 1}")
    return action
