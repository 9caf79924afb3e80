#pragma once

#include "irrat/biform.hpp"
#include "irrat/rational.hpp"
#include "irrat/surd.hpp"
