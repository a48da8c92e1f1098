"""prymvar: Prym objects and their variations on SL(2)-type spectral covers.

Builds the double cover ``v**2 = Q`` over the rational line, computes Prym
differentials, the Prym matrix, and the normalized two-point kernel, and
certifies the variational formulas relating them against finite-difference
and homogeneity oracles.
"""

__version__ = "0.1.0"

from .cover import (CoverPoint, MobiusChart, QuadraticDifferentialSpec,
                    SpectralCover, build_cover)

__all__ = [
    "CoverPoint", "MobiusChart", "QuadraticDifferentialSpec",
    "SpectralCover", "build_cover", "__version__",
]
