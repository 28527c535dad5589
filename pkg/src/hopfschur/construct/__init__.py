from .hopf import (Block, BicrossedProduct, bicrossed, bicrossed_block_decomposition,
                   function_algebra, group_algebra)
from .cocycles import (Cocycle, CocycleError, CrossedProduct, FinitizationWitness, WitnessError,
                       coboundary, cocycle_identity_failure, cocycle_verify, crossed_product,
                       crossed_product_algebra, finitize, verify_witness)
from .pipeline import (PipelineError, PipelineReport, b_algebra, endomorphism_ring_check,
                       group_algebra_form_check, h1_h2_split, phi_map, pipeline, psi_map,
                       star_action)
