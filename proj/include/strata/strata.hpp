#pragma once

#include "asymp.hpp"
#include "asymptotics.hpp"
#include "bernoulli.hpp"
#include "bigfloat.hpp"
#include "cache.hpp"
#include "even_series.hpp"
#include "gratfunc.hpp"
#include "invariants.hpp"
#include "pi_laurent.hpp"
#include "qpoly.hpp"
#include "rational.hpp"
#include "recursion.hpp"
#include "ring.hpp"
#include "table.hpp"
#include "verify.hpp"
