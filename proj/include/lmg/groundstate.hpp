#pragma once

#include <vector>

#include "lmg/spin.hpp"

namespace lmg {

// Legendre polynomial by the Bonnet recurrence.
double legendre_p(int n, double x);
// log P_n(x) for x >= 1, rescaling the recurrence so large n*acosh(x) does not
// overflow.
double log_legendre_p(int n, double x);

enum class Frame {
  Factorized,  // zero mode of build_factorized: exp(g Jx)|m=0> / sqrt(P_J(cosh 2g))
  Rotated,     // zero mode of build_susy_rotated (even parity sector)
};

struct GroundState {
  SpinJ j;
  double gamma = 0.0;
  Frame frame = Frame::Factorized;
  std::vector<double> amplitudes;  // over |m>, ascending m
  // Factorized frame: ||exp(g Jx)|0>|| / sqrt(P_J(cosh 2g)), i.e. 1 exactly
  // when <0|exp(2g Jx)|0> = P_J(cosh 2g). Rotated frame: 1 by construction.
  double norm_direct = 0.0;
  double norm_legendre = 0.0;      // P_J(cosh 2g); may be +inf
  double log_norm_legendre = 0.0;  // log P_J(cosh 2g)
  double energy_residual = 0.0;    // ||H psi||_2 in the matching frame
  double h_norm = 0.0;             // ||H||_1 of that Hamiltonian
};

// Throws NotIntegerSpin for half-integer J.
GroundState ground_state(SpinJ j, double gamma, Frame frame = Frame::Factorized);

}  // namespace lmg
