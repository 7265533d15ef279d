#pragma once

#include "latmax/scalar.hpp"
#include "latmax/vec.hpp"
#include "latmax/polytope.hpp"
#include "latmax/lattice.hpp"
#include "latmax/maximality.hpp"
#include "latmax/classification.hpp"
#include "latmax/search.hpp"
#include "latmax/io.hpp"
