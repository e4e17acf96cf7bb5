#pragma once

#include <string>
#include <vector>

#include "plh/skeleton.hpp"

namespace plh {

struct FamilyRequest {
  std::string name;        // identity, rotation, shear, squeeze, vortex, negative
  double alpha = 1;        // requested exponents; for "negative" alpha is also the map's exponent
  double alpha_tilde = 1;
  double diam = std::sqrt(2.0);  // domain diameter, used when lowering an exponent
};

// Built-in global homeomorphisms centred at (0.5, 0.5) with declared Holder data.
// A requested exponent below the native one is served with constant
// H diam^{native - requested}; above it throws InvalidExponents.
SampledHomeo make_family(const FamilyRequest& req);
std::vector<std::string> family_names();
bool family_is_affine(const std::string& name);

}  // namespace plh
