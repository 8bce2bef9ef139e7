"""Quasi-elliptic cohomology of finite G-sets, computed exactly."""

from .characters import CharacterTable, ClassFunction, character_table
from .cyclotomic import Cyclotomic
from .dsl import ParseError, parse_group, parse_gset
from .faithful import GRep, LambdaRepDescriptor, is_faithful, lambda_kernel, v_sigma, v_sigma_variants
from .groups import FiniteGroup, GroupHom, LambdaGroupDescriptor
from .gsets import FiniteGSet, GMap
from .lambda_ring import LambdaBasis, LambdaRingElement, lambda_basis
from .laurent import LaurentPoly
from .qell import (
    QEllDecomposition,
    QEllMap,
    change_of_group,
    pullback_gmap,
    qell_of_gset,
    restriction_hom,
    verify_change_of_group_iso,
)

__version__ = "0.1.0"
