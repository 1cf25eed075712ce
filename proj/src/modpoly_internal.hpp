#pragma once

#include "monocheck/modpoly.hpp"

namespace monocheck::detail {

/// Monic gcd without the primality check on the modulus.
ModPoly gcd_unchecked(ModPoly a, ModPoly b);

}  // namespace monocheck::detail
