#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polarity/projective.hpp"

namespace polarity {

/// Random point with integer coordinates in [-9, 9], resampled until it lies
/// on no face of delta.  `rejections` counts the discarded draws.
ProjPoint random_generic_point(const Simplex& delta, std::mt19937_64& rng,
                               int* rejections = nullptr);

/// Random hyperplane through no vertex of delta, same coordinate range.
ProjHyperplane random_generic_hyperplane(const Simplex& delta, std::mt19937_64& rng,
                                         int* rejections = nullptr);

struct VerifyReport {
  int samples = 0;
  int rejections = 0;
  std::vector<std::string> mismatches;  // empty iff every comparison agreed

  bool all_equal() const { return mismatches.empty(); }
};

/// Computes the frame, harmonic (both constructions), algebraic and convex
/// polars of `samples` seeded random generic points and checks that all agree
/// exactly, along with the involution round trip of each polarity.
VerifyReport verify_four_polarities(const Simplex& delta, int samples,
                                    std::uint64_t seed);

}  // namespace polarity
