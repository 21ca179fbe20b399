#ifndef DEGBURGERS_FIXTURES_HPP
#define DEGBURGERS_FIXTURES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degburgers/lie_algebra.hpp"

namespace dgb {

/// Contents of data/algebra_fixtures.txt.
struct AlgebraFixtures {
  int version = 0;
  std::map<std::string, VectorField> fields;
  std::map<std::string, LieSubspace> subalgebras;       // branch-instance id -> span
  std::map<std::string, int> normalizer_dim;            // id -> expected dim
  std::map<std::string, std::optional<int>> dim_a;      // id -> dim or nullopt (= infinite)
  std::map<std::string, LieSubspace> normalizer_space;  // id -> expected space

  std::vector<std::string> subalgebra_ids_in_order;
};

AlgebraFixtures load_algebra_fixtures(const std::string& path);

/// Default data directory (compile-time, overridable per call site).
std::string default_data_dir();

}  // namespace dgb

#endif
