#pragma once

#include "isect/constructions.hpp"
#include "isect/errors.hpp"
#include "isect/exact.hpp"
#include "isect/family_io.hpp"
#include "isect/formulas.hpp"
#include "isect/grid.hpp"
#include "isect/index_set.hpp"
#include "isect/inequalities.hpp"
#include "isect/search/census.hpp"
#include "isect/search/cross.hpp"
#include "isect/search/report.hpp"
#include "isect/search/rwise.hpp"
#include "isect/setcore.hpp"
#include "isect/sweep.hpp"
#include "isect/trace.hpp"
#include "isect/verify.hpp"
