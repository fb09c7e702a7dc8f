#pragma once

#include "mathieu/format.hpp"
#include "mathieu/hurwitz.hpp"
#include "mathieu/mathieu.hpp"
#include "mathieu/polylog.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/rational.hpp"
#include "mathieu/special.hpp"
#include "mathieu/summation.hpp"
#include "mathieu/trig.hpp"
#include "mathieu/types.hpp"
