#pragma once

// Umbrella header: the whole library, in dependency order.

#include "slodowy/rational.hpp"
#include "slodowy/dual.hpp"
#include "slodowy/matrix.hpp"
#include "slodowy/linalg.hpp"
#include "slodowy/partitions.hpp"
#include "slodowy/jordan.hpp"
#include "slodowy/pyramids.hpp"
#include "slodowy/triples.hpp"
#include "slodowy/stages.hpp"
#include "slodowy/polynomial.hpp"
#include "slodowy/poisson.hpp"
#include "slodowy/json_io.hpp"
#include "slodowy/fixtures.hpp"
