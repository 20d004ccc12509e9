from .coefficients import CoeffVector, laplacian_coefficients
from .spectrum import Spectrum, laplacian_spectrum, lel, wiener_index
