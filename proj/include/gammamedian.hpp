#pragma once

#include "gammamedian/asymptotics.hpp"
#include "gammamedian/errors.hpp"
#include "gammamedian/golden.hpp"
#include "gammamedian/json_io.hpp"
#include "gammamedian/median.hpp"
#include "gammamedian/qsqrt2.hpp"
#include "gammamedian/quadrature.hpp"
#include "gammamedian/ramanujan.hpp"
#include "gammamedian/rational.hpp"
#include "gammamedian/reversion.hpp"
#include "gammamedian/series.hpp"
#include "gammamedian/special.hpp"
#include "gammamedian/verify.hpp"
#include "gammamedian/xi.hpp"
