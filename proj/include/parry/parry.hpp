#pragma once

// Umbrella header.

#include "parry/continued_fraction.hpp"
#include "parry/quadratic.hpp"
#include "parry/rational.hpp"
#include "parry/repetition.hpp"
#include "parry/theory.hpp"
#include "parry/verify.hpp"
#include "parry/words.hpp"

namespace parry {
inline constexpr const char* kVersion = "1.0.0";
}
