#pragma once

#include "gframe/approx.hpp"
#include "gframe/constructions.hpp"
#include "gframe/duals.hpp"
#include "gframe/erasure.hpp"
#include "gframe/errors.hpp"
#include "gframe/io.hpp"
#include "gframe/linalg.hpp"
#include "gframe/random.hpp"
#include "gframe/stability.hpp"
#include "gframe/system.hpp"
