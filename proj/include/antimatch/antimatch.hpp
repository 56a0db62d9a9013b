#pragma once

// Umbrella header: maximum neighbourly sets (antimatchings), triangle
// enumeration and exact oracles for quadrilateral-free graphs.

#include "antimatch/bench.hpp"
#include "antimatch/generators.hpp"
#include "antimatch/graph.hpp"
#include "antimatch/neighbourly.hpp"
#include "antimatch/oracle.hpp"
#include "antimatch/triangles.hpp"
