// Umbrella header.
#pragma once

#include "succdist/combinatorics.hpp"
#include "succdist/dist.hpp"
#include "succdist/distribution.hpp"
#include "succdist/genfun.hpp"
#include "succdist/matrixform.hpp"
#include "succdist/methods.hpp"
#include "succdist/moments.hpp"
#include "succdist/oracle.hpp"
#include "succdist/series.hpp"
#include "succdist/specification.hpp"
#include "succdist/verify.hpp"
#include "succdist/wpoly.hpp"
