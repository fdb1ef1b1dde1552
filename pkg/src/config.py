"""Runtime defaults and numeric tolerances.

Every value can be left alone; the environment overrides exist for long sweeps and debugging
(set RAMAN_CP_LOG_LEVEL=DEBUG for per-pair propagation logging).
"""

import os

LOG_LEVEL = os.getenv("RAMAN_CP_LOG_LEVEL", "WARNING").upper()
DEFAULT_STEPS = int(os.getenv("RAMAN_CP_STEPS", "4000"))
SWEEP_WORKERS = int(os.getenv("RAMAN_CP_WORKERS", str(min(8, os.cpu_count() or 1))))
MAX_STEP_PHASE = float(os.getenv("RAMAN_CP_MAX_STEP_PHASE", "2e-3"))

# Tolerances
HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-12
ANALYTIC_UNITARY_TOL = 1e-10
ORACLE_UNITARY_TOL = 1e-7
CONVERGENCE_TOL = 1e-6
ORACLE_MATCH_TOL = 1e-8
NOISE_FLOOR = 1e-13

# Integrator
MIN_STEPS = 100
RENORMALIZE_EVERY = 100

# Physics choices
GAUSSIAN_WIDTH = 0.2
ADIABATIC_RABI_AREA = 40.0  # Ω₀T = Ω₁T = 40π
ADIABATIC_DETUNING_RATIO = 20.0  # Δ = 20·Ω

# Sweeps
DEFAULT_EPSILON_RANGE = (-0.5, 0.5, 0.002)
FIT_WINDOW = (1e-3, 1e-2)
FIT_POINTS = 20
CSV_COLUMNS = ("epsilon", "delta_t", "infidelity")
