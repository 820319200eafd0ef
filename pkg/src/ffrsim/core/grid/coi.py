"""Center-of-inertia frequency."""

from __future__ import annotations

from typing import TYPE_CHECKING

from ffrsim.core.errors import NoInertiaError

if TYPE_CHECKING:
    from collections.abc import Sequence

    from ffrsim.core.grid.models import GridState


def coi_frequency(generators: Sequence[tuple[float, float]], nominal_freq: float) -> float:
    """Inertia-weighted mean frequency.

    Args:
        generators: ``(H_i·S_i, speed deviation in Hz)`` for each online machine.
        nominal_freq: f0 in Hz.

    Returns:
        ``f0 + Σ(2·H_i·S_i·Δω_i) / Σ(2·H_i·S_i)``.  On a common MVA base this is
        the usual ``Σ 2H_iΔω_i / Σ 2H_i`` form.

    Raises:
        NoInertiaError: If *generators* is empty or any weight is not positive.
    """
    if not generators:
        raise NoInertiaError
    total = 0.0
    weighted = 0.0
    for weight, deviation in generators:
        if weight <= 0:
            raise NoInertiaError
        total += 2.0 * weight
        weighted += 2.0 * weight * deviation
    return nominal_freq + weighted / total


def state_coi_frequency(state: GridState) -> float:
    """COI frequency of a uniform-frequency state (every machine at ``freq_dev``)."""
    pairs = [
        (state.effective_inertia(g) * g.rated_power, state.freq_dev) for g in state.online
    ]
    return coi_frequency(pairs, state.nominal_freq)
