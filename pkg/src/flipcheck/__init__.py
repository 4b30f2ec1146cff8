"""flipcheck: exact symbolic replay of the Grassmannian-flip SOD computations.

Mechanically reproduces the cohomology vanishing lemmas, Euler-sequence
mutations, and semiorthogonal-decomposition rearrangements on the blowup
roof X of the flip Tot_{Gr(2,N)}(U(-H)) -> Tot_{P^{N-1}}(Q(-2h)), for any
rank parameter N, reporting pass/fail/indeterminate per claim.
"""

from .weights import GrSum, Weight, cg_tensor, det_twist, dual, hom_object
from .bwb import GradedDims, cohomology, gr_euler, gr_ext, weyl_dim
from .flagx import (
    EObject,
    ExtResult,
    e_ext,
    e_euler,
    euler_basis,
    k_class,
    push_p2,
    x_ext,
    x_vanishes,
)
from .verify import (
    Claim,
    Report,
    verify_all,
    verify_chessboard,
    verify_even,
    verify_inductive_steps,
    verify_mut,
    verify_sod_odd,
    verify_suite,
    verify_van,
)

__version__ = "0.1.0"
