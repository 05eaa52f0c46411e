#pragma once

// Umbrella header.

#include "grandnet/error.hpp"
#include "grandnet/grid.hpp"
#include "grandnet/interp.hpp"
#include "grandnet/netavg.hpp"
#include "grandnet/norms.hpp"
#include "grandnet/numeric.hpp"
#include "grandnet/opkernel.hpp"
#include "grandnet/profile.hpp"
#include "grandnet/rearrange.hpp"
#include "grandnet/verify.hpp"
