#pragma once

// Umbrella header.

#include "continued_fraction.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "generator.hpp"
#include "morphism.hpp"
#include "verify.hpp"
#include "word.hpp"
