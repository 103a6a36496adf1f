"""
Homology Oracle Component

Exact ranks over F_p and Q, graded Betti numbers via Tor on the Taylor
complex, and strand-exactness certification of candidate resolutions.
"""

from .linalg import FieldSpec, rank
from .tor import GradedBettiTable, StrandReport, tor_betti, strand_exactness

__all__ = [
    'FieldSpec',
    'rank',
    'GradedBettiTable',
    'StrandReport',
    'tor_betti',
    'strand_exactness',
]
