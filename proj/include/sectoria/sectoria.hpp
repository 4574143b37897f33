#pragma once

// Umbrella header.

#include "sectoria/matrix.hpp"
#include "sectoria/sector.hpp"
#include "sectoria/quadrature.hpp"
#include "sectoria/means.hpp"
#include "sectoria/constants.hpp"
#include "sectoria/certificate.hpp"
#include "sectoria/positive_maps.hpp"
#include "sectoria/checker.hpp"
#include "sectoria/ensembles.hpp"
#include "sectoria/io.hpp"
#include "sectoria/sweep.hpp"
