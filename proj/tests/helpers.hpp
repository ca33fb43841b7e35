#pragma once

#include "lcsa/sampling.hpp"

namespace testutil {

using namespace lcsa;
using namespace lcsa::sampling;

inline constexpr unsigned kSeed = 20241016;

}  // namespace testutil
