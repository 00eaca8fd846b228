"""Exact surgery calculus for Legendrian knots in surgered contact 3-manifolds."""
from .homology import (AbelianGroup, NullhomologyCertificate, build_q, exterior_homology, first_homology,
                       nullhomology)
from .legendrian import (InfiniteOrder, NoBoundAvailable, NotApplicable, NotNullhomologous, ObstructionVerdict,
                         TbResult, bennequin_check, contact_to_topological, max_tb_bound, surgery_theorem_scan,
                         tb_after_surgery, tbq_after_surgery, topological_to_contact)
from .lens import (GluingMap, LensSpace, cosmetic_pair_check, glue_standard_neighborhoods, intersection_pairing,
                   lens_from_unknot_surgery, lens_homeomorphic, lens_space, spine_swap_symmetry)
from .linalg import IntMatrix, SNFDecomposition, cokernel_order, kernel_basis, smith_normal_form, solve_diophantine
from .model import (MERIDIAN, AuxKnot, DiagramError, LegendrianData, LinkComponent, Slope, SurgeryDiagram,
                    make_diagram, normalize_slope, validate_diagram)
from .moves import MoveError, TwistSpec, contact_rolfsen, delete_trivial, rolfsen_twist

__version__ = "0.1.0"
