"""Operation counters and the ambient sink that field arithmetic reports to."""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import asdict, dataclass
from typing import Iterator, Optional


@dataclass
class Counters:
    nonresidue_trials: int = 0
    loop_iterations: int = 0
    dlog_multiplications: int = 0
    field_multiplications: int = 0

    def as_dict(self) -> dict:
        return asdict(self)

    def format(self) -> str:
        return (
            f"trials={self.nonresidue_trials} loop={self.loop_iterations} "
            f"dlogmul={self.dlog_multiplications} "
            f"fieldmul={self.field_multiplications}"
        )


_sink: contextvars.ContextVar[Optional[Counters]] = contextvars.ContextVar(
    "ammroot_counter_sink", default=None
)


def current() -> Optional[Counters]:
    return _sink.get()


@contextlib.contextmanager
def counting(counters: Optional[Counters]) -> Iterator[Optional[Counters]]:
    """Route field multiplications inside the block to ``counters``.

    Passing ``None`` suspends counting, which is how result verification
    stays out of the measured work.
    """
    token = _sink.set(counters)
    try:
        yield counters
    finally:
        _sink.reset(token)


def uncounted():
    return counting(None)
