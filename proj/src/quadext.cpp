#include "hermlat/quadext.hpp"

#include <cmath>

namespace hermlat {

double QuadExt::to_double(double sqrt_rad) const {
    return a.convert_to<double>() + b.convert_to<double>() * sqrt_rad;
}

}  // namespace hermlat
