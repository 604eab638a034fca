#pragma once

// Umbrella header for the whole library.

#include "lidstone/basis.hpp"
#include "lidstone/contour.hpp"
#include "lidstone/examples.hpp"
#include "lidstone/expand.hpp"
#include "lidstone/expr.hpp"
#include "lidstone/fixture.hpp"
#include "lidstone/frame.hpp"
#include "lidstone/growth.hpp"
#include "lidstone/json_io.hpp"
#include "lidstone/linalg.hpp"
#include "lidstone/multiindex.hpp"
#include "lidstone/multipoly.hpp"
#include "lidstone/parser.hpp"
#include "lidstone/pipoly.hpp"
#include "lidstone/rational.hpp"
#include "lidstone/verify.hpp"
