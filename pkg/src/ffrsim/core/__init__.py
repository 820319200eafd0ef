"""Simulation core: grid, resources, coordination and scenarios."""
