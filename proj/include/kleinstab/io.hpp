#pragma once

// JSON encodings. Rationals are always "num/den" strings.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kleinstab/rootdata.hpp"
#include "kleinstab/stability.hpp"
#include "kleinstab/trr.hpp"
#include "kleinstab/walls.hpp"

namespace kleinstab {

using json = nlohmann::ordered_json;

struct ProfileError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Accepts "p", "p/q" or a JSON integer.
Rational rational_from_json(const json& j);
json to_json(const Rational& q);
json to_json(const ExactComplex& z);
json to_json(const RVector& v);

/// {ns_rank, intersection, ample, c_H, chi_O, HK, K2}; c_H defaults to 0 at Picard
/// rank 1 and is required otherwise. Throws ProfileError.
SurfaceProfile profile_from_json(const json& j);
SurfaceProfile load_profile(const std::string& path);
json to_json(const SurfaceProfile& p);

json to_json(const KleinianGroup& g, const std::vector<std::string>& validation_failures);
json to_json(const TCoefficients& tc);
json to_json(const std::vector<ClosedFormRow>& rows);
json to_json(const RootSystem& rs);
json to_json(const ToeplitzReport& rep);
json to_json(const StackClass& v);
json to_json(const StabilityParams& p);
json to_json(const GateVerdict& v);
json to_json(const KernelCertificate& c);

}  // namespace kleinstab
