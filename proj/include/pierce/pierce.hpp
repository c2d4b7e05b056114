#pragma once

// Exact-arithmetic planar convex geometry: rational kernel, half-plane
// regions, (p,q)-property checks, an unpierceable family generator, an exact
// piercing-number solver over arrangement candidates, and the
// clip-by-conv(A u B) pipeline.

#include "pierce/counterexample.hpp"
#include "pierce/errors.hpp"
#include "pierce/family.hpp"
#include "pierce/feasible.hpp"
#include "pierce/halfplane.hpp"
#include "pierce/io.hpp"
#include "pierce/piercing.hpp"
#include "pierce/point.hpp"
#include "pierce/pq.hpp"
#include "pierce/radon.hpp"
#include "pierce/rational.hpp"
#include "pierce/region.hpp"
#include "pierce/svg.hpp"
#include "pierce/theorem2.hpp"
