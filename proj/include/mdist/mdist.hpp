#pragma once

// Umbrella header: pulls in the whole library.

#include "counting.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "forms.hpp"
#include "linalg.hpp"
#include "moments.hpp"
#include "poly.hpp"
#include "polyroots.hpp"
#include "quadrature.hpp"
#include "ratfun.hpp"
#include "rational.hpp"
#include "rootspace.hpp"
