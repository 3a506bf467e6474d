#pragma once

#include "uqp/scalar.hpp"

#include <utility>

namespace uqp {

/// [X,Y] = XY - YX, over whichever product is passed in.
template <class T, class Mul>
T commutator(const T& x, const T& y, Mul&& mul) {
    return mul(x, y) - mul(y, x);
}

/// [X,Y]_c = c XY - c^{-1} YX.  The paper's q-commutator is c = q,
/// and [.,.]_{q^2} appears in the E_{n delta} relations.
template <class T, class Mul>
T q_commutator(const T& x, const T& y, const Scalar& c, Mul&& mul) {
    return c * mul(x, y) - c.inv() * mul(y, x);
}

}  // namespace uqp
