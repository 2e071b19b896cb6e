"""Critical determinants and optimal lattice packings of planar L^p balls."""

from .critical import (
    Branch,
    CriticalReport,
    critical_determinant,
    critical_lattice,
    davis_constant,
    delta0,
    delta1,
    delta_moduli,
    kappa_constants,
    moduli_sweep,
    scaled_critical_determinant,
    sigma_p,
    tau_of_sigma,
    tau_p,
)
from .errors import (
    BudgetExceeded,
    Degenerate,
    DomainError,
    InconsistentInput,
    IntegerOverflow,
    MinkpackError,
    NoBracket,
    NoConvergence,
    NotSmooth,
    TangentDegenerate,
)
from .lattice import (
    Ball,
    BallClass,
    Lattice2,
    Point2,
    classify,
    enumerate_nonzero_points,
    is_admissible,
    lattice_det,
    pnorm_power,
)
from .numerics import Tolerance, find_root, integrate, log_gamma
from .packing import (
    PackingReport,
    ball_volume,
    central_density,
    circumscribed_hexagon_area,
    domain_critical_lattice,
    inscribed_hexagon_area,
    packing_density,
    packing_lattice,
    packing_report,
    verify_packing,
)
from .shells import (
    Shell,
    arc_length,
    count_integer_points,
    genus_c2d,
    jarnik_bound,
    paper_length_integral,
    solve_shell,
    theta_coefficients,
)

__version__ = "0.1.0"
