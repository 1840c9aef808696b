"""Counter-based RNG used wherever bit-exact replay matters.

splitmix64 over a (key, counter) pair: stateless, splittable, and trivially
serializable, so game states and rollout sessions can be checkpointed and
re-derived mid-stream.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    x &= MASK64
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & MASK64
    return (x ^ (x >> 31)) & MASK64


def counter_rand(key: int, counter: int) -> int:
    """The counter-th 64-bit draw of the stream identified by key."""
    return splitmix64((key + (counter + 1) * _GOLDEN) & MASK64)


def derive_key(key: int, *words: int) -> int:
    """Fold extra words into key to split off an independent stream."""
    out = key & MASK64
    for w in words:
        out = splitmix64((out ^ (w & MASK64)) + _GOLDEN & MASK64)
    return out


class CounterRng:
    """Tiny stateful wrapper; state is just (key, counter)."""

    __slots__ = ("key", "counter")

    def __init__(self, key: int, counter: int = 0):
        self.key = key & MASK64
        self.counter = counter

    def next_u64(self) -> int:
        v = counter_rand(self.key, self.counter)
        self.counter += 1
        return v

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs n > 0")
        return self.next_u64() % n

    def state(self) -> tuple[int, int]:
        return (self.key, self.counter)

    @classmethod
    def from_state(cls, state: tuple[int, int]) -> "CounterRng":
        return cls(state[0], state[1])
