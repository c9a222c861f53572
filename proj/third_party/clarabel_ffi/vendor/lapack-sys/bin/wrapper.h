#include "../lapack/LAPACKE/include/lapack.h"
