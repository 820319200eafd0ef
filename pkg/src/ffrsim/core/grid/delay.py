"""Fixed-length transport delay on a sampled signal.

A :class:`DelayLine` holds ``round(delay / step) + 1`` samples.  Each
:meth:`DelayLine.push` appends the newest sample and drops the oldest;
:meth:`DelayLine.read` returns the oldest retained sample, i.e. the value
pushed ``round(delay / step)`` pushes ago.  Before that many pushes have
happened the configured fill value is returned.

Inside an integrator step :meth:`DelayLine.read_at` interpolates linearly
between the two oldest samples, so a stage at ``t + frac·step`` sees
``x(t + frac·step - delay)``.

Usage::

    line = DelayLine(delay=0.08, step=0.001)
    line.push(freq_dev)
    delayed = line.read()
"""

from __future__ import annotations

from collections import deque

from ffrsim.core.errors import ModelConfigurationError


class DelayLine:
    """Ring buffer realising ``x(t - delay)`` at integer multiples of *step*."""

    __slots__ = ("_buffer", "_lag", "delay", "fill", "step")

    def __init__(self, delay: float, step: float, fill: float = 0.0) -> None:
        if delay < 0:
            raise ModelConfigurationError("delay", f"must be >= 0, got {delay}")
        if step <= 0:
            raise ModelConfigurationError("step", f"must be > 0, got {step}")
        self.delay = delay
        self.step = step
        self.fill = fill
        self._lag = round(delay / step)
        self._buffer: deque[float] = deque([fill] * self.length, maxlen=self.length)

    @property
    def lag(self) -> int:
        """Delay expressed in whole steps (nearest-step rounding)."""
        return self._lag

    @property
    def length(self) -> int:
        return self._lag + 1

    def push(self, value: float) -> None:
        """Append the newest sample."""
        self._buffer.append(value)

    def read(self) -> float:
        """Return the sample pushed :attr:`lag` pushes ago."""
        return self._buffer[0]

    def read_at(self, frac: float, current: float) -> float:
        """Delayed value *frac* of a step after the newest push.

        A zero-lag line has nothing to interpolate and returns *current*,
        the caller's value of the signal at that instant.
        """
        if self._lag == 0:
            return current
        oldest = self._buffer[0]
        return oldest + frac * (self._buffer[1] - oldest)

    def __repr__(self) -> str:
        return f"DelayLine(delay={self.delay}, step={self.step}, lag={self.lag})"
