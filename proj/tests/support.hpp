#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "permhom/permutation.hpp"
#include "permhom/rational.hpp"

namespace testing_support {

inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(std::string(PERMHOM_FIXTURES) + "/oracle.json");
    return nlohmann::json::parse(in);
  }();
  return data;
}

inline permhom::Permutation P(const char* word) { return permhom::parse_permutation(word); }

inline permhom::Rational Q(const std::string& text) { return permhom::parse_rational(text); }

}  // namespace testing_support
