#pragma once

#include <cmath>
#include <string>

#include "oracles/oracles.hpp"
#include "spinent/model.hpp"
#include "spinent/presets.hpp"

namespace testing {

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

inline oracle::Resonator to_oracle(const spinent::ResonatorParams& r) {
  using oracle::mp;
  // Go through the decimal text so the oracle sees the same binary inputs.
  auto m = [](double x) { return mp(x); };
  return {m(r.refractive_index), m(r.radius), m(r.mass), m(r.wavelength), m(r.kappa_0),
          m(r.kappa_ex), m(r.omega_m), m(r.gamma_m), m(r.dn_dlambda)};
}

inline double to_double(const oracle::mp& x) { return x.convert_to<double>(); }

/// Paper parameters with the right resonator a copy of the left one.
inline spinent::Scenario matched_scenario() {
  spinent::Scenario sc = spinent::paper_scenario();
  sc.right = sc.left;
  return sc;
}

constexpr double mhz_rad = 1e6;

}  // namespace testing
