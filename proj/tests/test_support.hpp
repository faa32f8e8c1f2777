#pragma once

#include <string>

#include "qturbo/seed.hpp"

namespace qturbo::testing {

inline std::string data_path(const std::string& relative) {
  return std::string(QTURBO_DATA_DIR) + "/" + relative;
}

inline SeedTransformation shipped_seed(const std::string& name) {
  return load_seed_file(data_path("seeds/" + name + ".json"));
}

// Seed of the small worked example: n=2, k=1, m=1, inputs (M : L : S).
inline SeedTransformation toy211_seed() {
  return SeedTransformation(
      2, 1, 1,
      SymplecticMatrix::from_images({PauliString::parse("XXX"), PauliString::parse("ZII"),
                                     PauliString::parse("IXX"), PauliString::parse("ZZI"),
                                     PauliString::parse("IIX"), PauliString::parse("IZZ")}));
}

}  // namespace qturbo::testing
