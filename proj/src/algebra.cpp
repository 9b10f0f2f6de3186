// Explicit instantiations of the quotient-algebra engine for the two scalar
// fields the CLI exposes, so client translation units link against one copy.
#include "fcy/algebra.hpp"

namespace fcy {

template class FiniteDimAlgebra<Rat>;
template class FiniteDimAlgebra<Fp>;

}  // namespace fcy
