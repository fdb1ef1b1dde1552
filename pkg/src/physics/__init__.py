"""Propagators: matrix helpers, closed-form lifts and the time-domain oracle."""
