#pragma once

#include "pdisk/polynomial.hpp"

namespace pdisk::detail {

IntegerCoefficients signed_pseudo_remainder(const IntegerCoefficients& f, const IntegerCoefficients& g);
void primitive(IntegerCoefficients& c);

}  // namespace pdisk::detail
