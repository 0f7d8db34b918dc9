"""Exact linear algebra for ninth-variation Schur functions.

The free coefficient ring Z[h_{r,s}], skew shapes and border-strip
combinatorics, Jacobi-Trudi determinants, and mechanical checkers for
the determinant identities exposed through the ``schurdet`` CLI.
"""

from .shapes import (SkewShape, partition, part, content, cells, cont_set,
                     c_n_set, modify, conjugate, frobenius_to_partition,
                     partition_to_frobenius, skew_from_cells,
                     connected_components, disjoint_union_shape)
from .hring import (HPoly, collapse, det_free, det_fraction, det_int,
                    eval_hom, fingerprint, IndexedMatrix, minor)
from .strips import (BorderStrip, StripSlice, outer_strip, inner_strip,
                     extended_outer_strip, strip_slice, skew_slice,
                     Decomposition, decompose, lascoux_pragacz, kreiman,
                     GluedShape, glue, is_compatible_strip,
                     is_compatible_partition, structural_modify,
                     attach_right, attach_above, lemma62_construct,
                     converse_construct, ConverseResult)
from .schur import (schur9, schur9_slice, jt_matrix, classical_hom,
                    classical_value, ssyt_expand, ssyt_value,
                    factorial_schur)
from .identities import (THEOREM_IDS, IdentityReport, SuiteConfig,
                         bazin_check, verify_main, verify_LP, verify_K,
                         lp_formula, hg_formula, verify_cor44, verify_cor45,
                         verify_cor46, verify_cor57, verify_mpp,
                         verify_gen_HG, verify_giambelli, verify_lemma510,
                         verify_converse, converse_collapse, check_lemma511,
                         random_instance, run_instance, run_suite)

__version__ = "0.1.0"
