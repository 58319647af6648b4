#pragma once

#include "msn/errors.hpp"
#include "msn/identities.hpp"
#include "msn/matrix.hpp"
#include "msn/moments.hpp"
#include "msn/numbers.hpp"
#include "msn/phase_type.hpp"
#include "msn/polynomial.hpp"
#include "msn/power_series.hpp"
#include "msn/rational.hpp"
#include "msn/stirling.hpp"
