#pragma once

#include "symcycle/tope.hpp"
#include "symcycle/cycle.hpp"
#include "symcycle/exact_linalg.hpp"
#include "symcycle/decompose.hpp"
#include "symcycle/metrics.hpp"
#include "symcycle/census.hpp"
#include "symcycle/verify.hpp"
