from .clarabel import *

__doc__ = clarabel.__doc__
if hasattr(clarabel, "__all__"):
    __all__ = clarabel.__all__

clarabel.force_load_blas_lapack()

