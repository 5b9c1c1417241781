#pragma once

#include "gcircle/arith.hpp"
#include "gcircle/correlate.hpp"
#include "gcircle/error.hpp"
#include "gcircle/fit.hpp"
#include "gcircle/io.hpp"
#include "gcircle/laplace.hpp"
#include "gcircle/lattice.hpp"
#include "gcircle/numeric.hpp"
#include "gcircle/rational.hpp"
#include "gcircle/special.hpp"
