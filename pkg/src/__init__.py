"""Composite Raman pulse sequences for robust qubit gates in three-level Λ systems."""
