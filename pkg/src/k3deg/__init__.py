"""Classification of degenerate fibres of degree-two K3 surfaces.

The package decides the Type (I, II or III) and the table row of a
fibre given by an explicit model: a branch sextic for the hyperelliptic
case, or a conic together with a sextic for the unigonal case.
"""
from .errors import InvalidModel, K3DegError, NotInClassification, ParseError
from .fibres import Classification, classify, classify_hyperelliptic, classify_unigonal
from .germs import classify_germ, milnor_number
from .models import FiberModel
from .parsing import format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "Classification", "FiberModel", "InvalidModel", "K3DegError", "NotInClassification", "ParseError",
    "classify", "classify_germ", "classify_hyperelliptic", "classify_unigonal", "format_poly",
    "milnor_number", "parse_poly",
]
