#pragma once

// Umbrella header for the full library.

#include "prismslice/errors.hpp"
#include "prismslice/bigint.hpp"
#include "prismslice/rational.hpp"
#include "prismslice/polynomial.hpp"
#include "prismslice/counting.hpp"
#include "prismslice/weighted_perms.hpp"
#include "prismslice/ehrhart.hpp"
#include "prismslice/hstar.hpp"
#include "prismslice/roots.hpp"
#include "prismslice/flag.hpp"
#include "prismslice/serialize.hpp"
