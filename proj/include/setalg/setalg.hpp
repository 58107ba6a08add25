#pragma once

// Everything the library exports, for callers that do not care to pick.

#include "setalg/algebra.hpp"
#include "setalg/carrier.hpp"
#include "setalg/decomp.hpp"
#include "setalg/dsl.hpp"
#include "setalg/error.hpp"
#include "setalg/fuzzy.hpp"
#include "setalg/genspan.hpp"
#include "setalg/maps.hpp"
#include "setalg/member_set.hpp"
#include "setalg/parallel.hpp"
#include "setalg/rational.hpp"
#include "setalg/report.hpp"
