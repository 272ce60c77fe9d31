#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "partequiv/diagram.hpp"
#include "partequiv/equimap.hpp"
#include "partequiv/pattern.hpp"

namespace partequiv {

using Json = nlohmann::json;

// Set partitions travel as their blocks, 1-based: [[1,2],[3]].
Json to_json(const SetPartition& pi);
SetPartition set_partition_from_json(const Json& j, int m);

// {"n":2,"k":2,"l":1,"blocks":[[1,2,3]],"shape":[2,4],"entries":[[0,0],[1,3]]}
// blocks is null for matrices without a single source partition.
Json to_json(const BasisMatrix& m);
BasisMatrix basis_matrix_from_json(const Json& j);

// {"k":1,"basis":"orbit","terms":[{"blocks":[[1,2]],"coeff":"3"}]}; coefficients
// are decimal strings so that any size survives.
Json to_json(const AlgebraElement& a);
AlgebraElement algebra_element_from_json(const Json& j);

Json to_json(const PatternMatrix& p);
PatternMatrix pattern_from_json(const Json& j);

/// One transcribed pattern from a fixture file, with the layer that produces it:
/// either (n, k, l) or a product spec string.
struct FixturePattern {
  std::string name;
  PatternMatrix pattern;
  int n = 0;
  int k = 0;
  int l = 0;
  std::string spec;
};

struct Fixture {
  std::string appendix;
  std::string note;
  std::vector<FixturePattern> patterns;
};

/// Reads <dir>/appendix_<which>.json (or <dir>/<which>.json when that exists).
/// Throws std::runtime_error when missing or malformed.
Fixture load_fixture(const std::string& dir, const std::string& which);

}  // namespace partequiv
