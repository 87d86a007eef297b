#pragma once

#include "rees/arith.hpp"
#include "rees/base_ring.hpp"
#include "rees/error.hpp"
#include "rees/family.hpp"
#include "rees/fibers.hpp"
#include "rees/invariants.hpp"
#include "rees/semigroup.hpp"
#include "rees/semigroup_ring.hpp"
#include "rees/series.hpp"
