#ifndef NEGCURVE_NEGCURVE_HPP
#define NEGCURVE_NEGCURVE_HPP

#include "negcurve/exact_arith.hpp"
#include "negcurve/weight_triple.hpp"
#include "negcurve/hilbert.hpp"
#include "negcurve/linear_algebra.hpp"
#include "negcurve/symbolic_power.hpp"
#include "negcurve/certificate_io.hpp"
#include "negcurve/criteria.hpp"
#include "negcurve/census.hpp"

#endif  // NEGCURVE_NEGCURVE_HPP
