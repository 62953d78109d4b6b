#pragma once

#include <cstdint>
#include <vector>

#include "hlya/algebra.hpp"
#include "hlya/scalars.hpp"

namespace hlya {

struct CorpusResult {
  std::vector<Algebra<Fp>> algebras;
  std::size_t attempts = 0;  /* candidates drawn, kept or rejected */
};

/* Rejection sampling: sparse random tables plus a random invertible twist,
   keeping candidates that pass the full axiom check. Deterministic for a
   fixed seed. Stops early if the attempt cap is hit. */
CorpusResult sample_corpus(std::uint32_t p, std::size_t dim, std::size_t count,
                           std::uint64_t seed);

/* Every structure on a 2-dimensional space over F_p that passes the full
   axiom check, enumerated in a fixed order. */
std::vector<Algebra<Fp>> exhaustive_dim2(std::uint32_t p);

}  // namespace hlya
