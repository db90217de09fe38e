#ifndef ALPHA_EXTREMAL_HPP
#define ALPHA_EXTREMAL_HPP

#include "alpha_extremal/canonical.hpp"
#include "alpha_extremal/enumeration.hpp"
#include "alpha_extremal/families.hpp"
#include "alpha_extremal/graph.hpp"
#include "alpha_extremal/parallel.hpp"
#include "alpha_extremal/report.hpp"
#include "alpha_extremal/spectral.hpp"
#include "alpha_extremal/transforms.hpp"
#include "alpha_extremal/verify.hpp"

#endif  // ALPHA_EXTREMAL_HPP
