#pragma once

// Umbrella header: exact combinatorial skeletons of Proj for multigraded
// polynomial rings.

#include "abelian_group.hpp"
#include "cli.hpp"
#include "diophantine.hpp"
#include "exact_lp.hpp"
#include "graded_ring.hpp"
#include "group_algebra.hpp"
#include "localization.hpp"
#include "normal_form.hpp"
#include "oracle.hpp"
#include "proj.hpp"
#include "relevance.hpp"
#include "ring_spec.hpp"
#include "types.hpp"
