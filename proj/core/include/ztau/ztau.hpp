#pragma once

#include "ztau/bohr.hpp"
#include "ztau/error.hpp"
#include "ztau/json_io.hpp"
#include "ztau/multiindex.hpp"
#include "ztau/poisson.hpp"
#include "ztau/primes.hpp"
#include "ztau/series.hpp"
#include "ztau/szego.hpp"
#include "ztau/torus_grid.hpp"
