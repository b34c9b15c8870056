#pragma once

#include "gxray/errors.hpp"
#include "gxray/scalars.hpp"
#include "gxray/polyalg.hpp"
#include "gxray/moments.hpp"
#include "gxray/weighted.hpp"
#include "gxray/specfun.hpp"
#include "gxray/xraynormal.hpp"
#include "gxray/quadrature.hpp"
#include "gxray/spectrum.hpp"
#include "gxray/properties.hpp"
#include "gxray/serialize.hpp"
