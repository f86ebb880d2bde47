#pragma once

#include "spheregap/boltzmann.hpp"
#include "spheregap/certify.hpp"
#include "spheregap/legendre.hpp"
#include "spheregap/parallel.hpp"
#include "spheregap/polynomial.hpp"
#include "spheregap/proof_battery.hpp"
#include "spheregap/quad_eval.hpp"
#include "spheregap/quadrature.hpp"
#include "spheregap/rational.hpp"
#include "spheregap/report.hpp"
#include "spheregap/sturm.hpp"
