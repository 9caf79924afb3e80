#pragma once

#include "irrat/descent.hpp"
#include "irrat/errors.hpp"
#include "irrat/exact_arith.hpp"
#include "irrat/geometry.hpp"
#include "irrat/number_theory.hpp"
#include "irrat/report.hpp"
#include "irrat/svg.hpp"
