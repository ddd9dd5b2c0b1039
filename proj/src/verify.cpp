#include "polarity/verify.hpp"

#include <sstream>

#include "polarity/convex.hpp"
#include "polarity/errors.hpp"
#include "polarity/forms.hpp"
#include "polarity/frame.hpp"
#include "polarity/harmonic.hpp"

namespace polarity {

namespace {

Vec random_tuple(std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-9, 9);
  Vec v(len);
  while (true) {
    bool nonzero = false;
    for (auto& c : v) {
      c = coord(rng);
      if (!is_zero(c)) nonzero = true;
    }
    if (nonzero) return v;
  }
}

}  // namespace

ProjPoint random_generic_point(const Simplex& delta, std::mt19937_64& rng,
                               int* rejections) {
  const std::size_t len = delta.vertices.size();
  while (true) {
    const ProjPoint p(random_tuple(len, rng));
    if (delta.generic_point(p)) return p.canonical();
    if (rejections) ++*rejections;
  }
}

ProjHyperplane random_generic_hyperplane(const Simplex& delta, std::mt19937_64& rng,
                                         int* rejections) {
  const std::size_t len = delta.vertices.size();
  while (true) {
    const ProjHyperplane h(random_tuple(len, rng));
    if (delta.generic_hyperplane(h)) return h.canonical();
    if (rejections) ++*rejections;
  }
}

VerifyReport verify_four_polarities(const Simplex& delta, int samples,
                                    std::uint64_t seed) {
  VerifyReport report;
  report.samples = samples;
  const SymmetricForm cubic = simplex_form(delta);
  std::vector<int> rejections(samples, 0);
  std::vector<std::string> errors(samples);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * std::uint64_t(i + 1));
    const ProjPoint p = random_generic_point(delta, rng, &rejections[i]);
    std::ostringstream bad;
    try {
      const ProjHyperplane frame = frame_polar_point(p, delta);
      const ProjHyperplane harmonic = harmonic_polar_point(p, delta);
      const ProjHyperplane pairwise = harmonic_polar_point_pairwise(p, delta);
      const ProjHyperplane algebraic = last_polar(p, cubic);
      const ProjHyperplane convex = simplex_convex_polar_point(p, delta);
      auto check = [&](const char* name, const ProjHyperplane& h) {
        if (h != frame)
          bad << "sample " << i << " point " << p.str() << ": " << name << " polar "
              << h.str() << " != frame polar " << frame.str() << "\n";
      };
      check("harmonic", harmonic);
      check("harmonic-pairwise", pairwise);
      check("algebraic", algebraic);
      check("convex", convex);
      // Involution round trips through each hyperplane polarity.
      auto check_inv = [&](const char* name, const ProjPoint& q) {
        if (q != p)
          bad << "sample " << i << " point " << p.str() << ": " << name
              << " round trip gave " << q.str() << "\n";
      };
      check_inv("frame", frame_polar_hyperplane(frame, delta));
      check_inv("harmonic", harmonic_polar_hyperplane(frame, delta));
      check_inv("algebraic", last_polar_inverse(frame, delta));
      check_inv("convex", simplex_convex_polar_hyperplane(frame, delta));
    } catch (const Error& e) {
      bad << "sample " << i << " point " << p.str() << ": exception " << e.what()
          << "\n";
    }
    errors[i] = bad.str();
  }

  for (int i = 0; i < samples; ++i) {
    report.rejections += rejections[i];
    if (!errors[i].empty()) report.mismatches.push_back(errors[i]);
  }
  return report;
}

}  // namespace polarity
