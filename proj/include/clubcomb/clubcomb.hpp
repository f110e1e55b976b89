#pragma once

#include "clubcomb/error.hpp"
#include "clubcomb/finord.hpp"
#include "clubcomb/poly.hpp"
#include "clubcomb/comb.hpp"
#include "clubcomb/compiler.hpp"
#include "clubcomb/diagram.hpp"
