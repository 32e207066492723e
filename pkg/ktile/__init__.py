"""
Title: ktile Package
Description: Generalized Fibonacci and Lucas numbers, their tiling model, proof decompositions and identity checks.
"""

# ktile Package
__version__ = '1.0.1'

from .ktile_errors import KtileError
from .ktile_seqcore import SequenceCache, gen_fib, gen_lucas, gen_lucas_rec
from .ktile_tilings import Tiling, enumerate_type_a, enumerate_type_b
from .ktile_identities import evaluate_identity, registry, verify_grid
