"""Young walls, their crystals and abacus bijections for level-1 affine families."""

from .affine import FAMILIES, AffineData, Weight, affine_data
from .wall import Wall, enumerate_weight_space, make_wall

__all__ = ["FAMILIES", "AffineData", "Weight", "Wall", "affine_data", "enumerate_weight_space", "make_wall"]
__version__ = "0.1.0"
