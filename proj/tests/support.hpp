#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kmss/gcm.hpp"
#include "kmss/system.hpp"

namespace kmss::testing {

using Rows = std::vector<std::vector<std::int64_t>>;

inline const std::map<std::string, Rows>& catalog() {
  static const std::map<std::string, Rows> m = {
      {"A1", {{2}}},
      {"A1xA1", {{2, 0}, {0, 2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"B2", {{2, -2}, {-1, 2}}},
      {"G2", {{2, -1}, {-3, 2}}},
      {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {"B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
      {"affine", {{2, -2}, {-2, 2}}},
      {"hyp24", {{2, -1}, {-4, 2}}},
      {"hyp33", {{2, -3}, {-3, 2}}},
      {"rank3", {{2, -1, -2}, {-1, 2, -2}, {-2, -2, 2}}},
      {"rank3pair", {{2, 0, -2}, {0, 2, -2}, {-2, -2, 2}}},
  };
  return m;
}

inline GCM gcm(const std::string& name) { return GCM::validate(catalog().at(name)); }

inline KacMoodySystem sys(const std::string& name) { return KacMoodySystem::build(gcm(name)); }

inline std::vector<std::string> finite_types() { return {"A1", "A1xA1", "A2", "B2", "G2", "A3", "B3"}; }

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

}  // namespace kmss::testing
