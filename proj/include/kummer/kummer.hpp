#pragma once

// Kummer confluent hypergeometric functions M(a,b,z) and U(a,b+1,z) for
// positive parameters, evaluated through a uniform asymptotic expansion whose
// coefficients are generated on the fly.

#include "kummer/errors.hpp"
#include "kummer/double_double.hpp"
#include "kummer/stable.hpp"
#include "kummer/series.hpp"
#include "kummer/scaling.hpp"
#include "kummer/coefficients.hpp"
#include "kummer/evaluation.hpp"
#include "kummer/oracle.hpp"
#include "kummer/verify.hpp"
