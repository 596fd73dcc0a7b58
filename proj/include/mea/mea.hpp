#pragma once

// Umbrella header.

#include "mea/bigcount.hpp"
#include "mea/dimension.hpp"
#include "mea/dyadic.hpp"
#include "mea/ergodic.hpp"
#include "mea/pattern.hpp"
#include "mea/random.hpp"
#include "mea/riesz.hpp"
