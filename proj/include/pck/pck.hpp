#pragma once

#include "pck/cring.hpp"
#include "pck/error.hpp"
#include "pck/groebner.hpp"
#include "pck/ideal.hpp"
#include "pck/monomial.hpp"
#include "pck/poisson.hpp"
#include "pck/polynomial.hpp"
#include "pck/scalar.hpp"
#include "pck/spectrum.hpp"
