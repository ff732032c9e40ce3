#pragma once

// Umbrella header for the core library (no CLI).

#include "gtcl/clbasis.hpp"
#include "gtcl/gtvector.hpp"
#include "gtcl/parallel.hpp"
#include "gtcl/patterns.hpp"
#include "gtcl/rational.hpp"
#include "gtcl/serialize.hpp"
#include "gtcl/transition.hpp"
#include "gtcl/verify.hpp"
