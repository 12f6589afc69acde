#pragma once

// Physical constants (CODATA 2018), unit conversions and the reduced-frequency
// convention. All internal computations work in reduced variables; SI
// conversion happens at result boundaries.

namespace hodisp {

struct Constants {
  double hbar;           // J s
  double c;              // m / s
  double gravitational;  // m^3 / (kg s^2)
  double atomic_mass;    // kg, unified atomic mass unit
  double hbar_c_mev_fm;  // MeV fm
};

// Values fixed in source for reproducibility.
constexpr Constants si_constants() {
  return Constants{
      1.054571817e-34,   // hbar
      2.99792458e8,      // c (exact)
      6.67430e-11,       // G
      1.66053907e-27,    // m_u
      197.3269804,       // hbar*c in MeV fm
  };
}

// J per MeV (elementary charge is exact in SI-2019).
constexpr double kJoulePerMeV = 1.602176634e-13;

// Selects which coefficient set the expansion and limit formulas use.
// Published: the coefficients as printed (x^3 term -9/2, Casimir moment
// 25/16). SelfConsistent: what the log expansion of the mode determinant
// actually yields (x^3 term -5, moment 11/8). The two disagree by ~12% in
// the Casimir limit; both are first-class and every result records which
// one produced it.
enum class CoefficientSource { Published, SelfConsistent };

constexpr const char* coefficient_source_name(CoefficientSource s) {
  return s == CoefficientSource::Published ? "paper" : "derived";
}

// x = omega * r / c, the recurring dimensionless combination.
double reduced_frequency(double omega, double r);

}  // namespace hodisp
