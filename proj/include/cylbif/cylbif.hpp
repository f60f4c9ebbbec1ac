#pragma once

#include "cylbif/besselkit.hpp"
#include "cylbif/bifurcation.hpp"
#include "cylbif/cylinder.hpp"
#include "cylbif/dispersion.hpp"
#include "cylbif/errors.hpp"
#include "cylbif/inequalities.hpp"
#include "cylbif/quadrature.hpp"
#include "cylbif/radial_ode.hpp"
#include "cylbif/spectrum.hpp"
