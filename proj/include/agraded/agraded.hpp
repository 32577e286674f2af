#pragma once

#include "agraded/binomial.hpp"
#include "agraded/counterexample.hpp"
#include "agraded/decomposition.hpp"
#include "agraded/exponents.hpp"
#include "agraded/grading.hpp"
#include "agraded/intlin.hpp"
#include "agraded/io.hpp"
#include "agraded/saturated_binomial.hpp"
#include "agraded/standard_pairs.hpp"
#include "agraded/toric.hpp"
