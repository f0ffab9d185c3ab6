"""Exact LMOV invariants of the framed unknot and checks of their integrality."""

from .arith import binom_z, divisors, fp, mobius, vp
from .invariants import (
    TheoremViolation,
    bps_table,
    c_ml,
    g_m,
    g_mu,
    gks_extremal,
    n_ml,
    n_pair,
    z2_g,
    z2_g_mu,
    z_m,
    z_m_closed,
)
from .laurent import BpsTable, LFrac, LPoly, bracket, cyclotomic, qbinomial, to_z2_basis
from .partitions import Partition, character, enumerate_partitions

__version__ = "0.1.0"
