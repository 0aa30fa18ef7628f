"""Exact bases of S_n- and A_n-equivariant linear maps between tensor powers of R^n."""

from ._backend import BACKEND
from .basis import (
    BasisElement,
    LayerBasis,
    LocalBasis,
    an_dim,
    bias_basis,
    layer_basis,
    layer_dim,
    local_basis,
    matrix_from_orbit,
    weight_matrix,
    with_features,
)
from .combinatorics import SetPartition, bell_restricted, block_labelling, enumerate_partitions, stirling2
from .group import Permutation, act, enumerate_group, rho, sign
from .limits import ResourceBoundError
from .orbits import Orbit, jellyfish_sign, sn_orbit, split_orbit, splits
from .sparse import SparseMatrix, linearize

__version__ = "0.1.0"
