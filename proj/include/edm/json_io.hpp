#pragma once

#include <json.hpp>

#include "edm/grf_kernel.hpp"
#include "edm/manhattan2d.hpp"
#include "edm/potential.hpp"
#include "edm/region.hpp"

namespace edm {

using Json = nlohmann::json;

Json region_to_json(const Region& region);
Region region_from_json(const Json& j);

Json potential_to_json(const Potential& potential);
Potential potential_from_json(const Json& j);

Json kernel_to_json(const GaussianKernel& kernel);

Json polynomial_to_json(const SparsePolynomial& poly);
SparsePolynomial polynomial_from_json(const Json& j);

}  // namespace edm
