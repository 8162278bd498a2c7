"""Tableaux of a given type.

A type attaches to every box of a diagram a number between 0 and its hook
length minus one. Standard Young tableaux and balanced tableaux are the two
extreme examples; reduced words of permutations are a third, through the
type of a permutation on the staircase.
"""

from tabtype._core import BACKEND
from tabtype.diagrams import (
    Box, Diagram, Partition, arm, conjugate, hook_cells, hook_length,
    hook_length_formula, leg, partition, partitions, stack_xy, stack_yx,
)
from tabtype.errors import TabtypeError
from tabtype.tableaux import (
    Tableau, TypeFilling, balanced_type, count_tableaux, enumerate_tableaux,
    erasable_boxes, erase, standard_type, type_of,
)
from tabtype.permutations import (
    count_reduced_words, inversion_set, is_vexillary, type_of_permutation,
    vexillary_data,
)
from tabtype.exchange import full_exchange, line_exchange, column_exchange
from tabtype.bridge import build_s_lambda, sigma_lambda
from tabtype.schur import Polynomial, classical_schur, sst_polynomial

__version__ = "0.1.0"
