#pragma once

#include "slopepoly/cyclic_duality.hpp"
#include "slopepoly/errors.hpp"
#include "slopepoly/geometry.hpp"
#include "slopepoly/lines.hpp"
#include "slopepoly/sampling.hpp"
#include "slopepoly/slope_space.hpp"
#include "slopepoly/tangential_morse.hpp"
#include "slopepoly/tolerances.hpp"
