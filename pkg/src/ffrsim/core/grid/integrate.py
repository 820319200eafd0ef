"""Fixed-step explicit Runge-Kutta integration on small float tuples."""

from __future__ import annotations

from collections.abc import Callable

State = tuple[float, ...]
Rhs = Callable[[float, State], State]


def rk4_step(rhs: Rhs, t: float, y: State, dt: float) -> State:
    """Advance *y* by one classic RK4 step of length *dt*."""
    half = 0.5 * dt
    k1 = rhs(t, y)
    k2 = rhs(t + half, tuple(yi + half * ki for yi, ki in zip(y, k1, strict=True)))
    k3 = rhs(t + half, tuple(yi + half * ki for yi, ki in zip(y, k2, strict=True)))
    k4 = rhs(t + dt, tuple(yi + dt * ki for yi, ki in zip(y, k3, strict=True)))
    sixth = dt / 6.0
    return tuple(
        yi + sixth * (a + 2.0 * b + 2.0 * c + d)
        for yi, a, b, c, d in zip(y, k1, k2, k3, k4, strict=True)
    )
