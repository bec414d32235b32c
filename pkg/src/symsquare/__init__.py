"""symsquare: exact point censuses on the symmetric square of P^1.

Counts rational points of bounded stacky height by class (diagonal,
split, non-split), materializes the intermediate counting sets used to
bracket the non-split count, and numerically verifies the multiplicative
function sums, class-number-formula values, character-sum bounds and
Tauberian partial-sum inequalities that drive those counts.
"""

__version__ = "0.1.0"

from symsquare.arith import DomainError

__all__ = ["DomainError", "__version__"]
