from .forms import Flavor, FormMatrix, classify_form
from .matrix import RepMatrix

__all__ = ["Flavor", "FormMatrix", "RepMatrix", "classify_form"]
