#pragma once

#include "zdk/alliance.hpp"
#include "zdk/bitset.hpp"
#include "zdk/error.hpp"
#include "zdk/formulas.hpp"
#include "zdk/graph.hpp"
#include "zdk/report.hpp"
#include "zdk/ring.hpp"
#include "zdk/ring_expr.hpp"
#include "zdk/verification.hpp"
