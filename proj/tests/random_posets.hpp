#pragma once

#include <random>
#include <string>

#include "mobius/finite_poset.hpp"
#include "oracles.hpp"

namespace mobius::oracle {

/// Random poset on labels e0..e{n-1}: e0 is the bottom, and each pair i < j
/// gets a relation with probability about 1/3. Relations only point upward
/// in index order, so the closure is always antisymmetric.
inline FinitePosetFile random_poset_file(std::mt19937_64& rng, int n) {
  FinitePosetFile file;
  for (int i = 0; i < n; ++i) file.elements.push_back("e" + std::to_string(i));
  for (int j = 1; j < n; ++j) {
    file.relations.emplace_back("e0", "e" + std::to_string(j));
    for (int i = 1; i < j; ++i)
      if (draw(rng, 0, 2) == 0) file.relations.emplace_back("e" + std::to_string(i), "e" + std::to_string(j));
  }
  file.bottom = "e0";
  return file;
}

}  // namespace mobius::oracle
