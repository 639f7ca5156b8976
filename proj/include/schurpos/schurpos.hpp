#pragma once

// Umbrella header.

#include "schurpos/determinant.hpp"
#include "schurpos/extent.hpp"
#include "schurpos/karlin.hpp"
#include "schurpos/lassalle.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/polynomial.hpp"
#include "schurpos/rational.hpp"
#include "schurpos/report.hpp"
#include "schurpos/rootedness.hpp"
#include "schurpos/specialization.hpp"
#include "schurpos/toeplitz.hpp"
