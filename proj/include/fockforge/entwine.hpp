#pragma once

// Entwining structures (A, C, tau) between a finite-dimensional algebra and
// coalgebra, entwined modules, algebra cross symmetries with their crossed
// products, and factorization of an entwining through the canonical dual.
//
// All structure maps are dense matrices over fixed bases: multiplication
// m: A (x) A -> A is dim x dim^2, comultiplication is dim^2 x dim, and
// tau: C (x) A -> A (x) C is square of size dimA * dimC.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fockforge/report.hpp"
#include "fockforge/tensor_core.hpp"

namespace fockforge {

struct AlgebraPresentation {
  int dim = 0;
  Matrix mult;  // column (i,j) at index i*dim + j holds coordinates of x_i x_j
  Vector unit;

  std::vector<CheckResult> validate(double tol = 1e-12) const;
};

struct CoalgebraPresentation {
  int dim = 0;
  Matrix comult;  // column i holds coordinates of Delta x_i in C (x) C
  Matrix counit;  // 1 x dim

  std::vector<CheckResult> validate(double tol = 1e-12) const;
};

struct EntwiningStructure {
  AlgebraPresentation algebra;
  CoalgebraPresentation coalgebra;
  Matrix tau;  // C (x) A -> A (x) C
};

struct EntwinedModuleData {
  int dim = 0;
  Matrix action;    // M (x) A -> M
  Matrix coaction;  // M -> M (x) C
};

// validations of both constituents followed by the four entwining axioms:
// (1) tau (id (x) m) = (m (x) id) tau_23 tau_12
// (2) tau (f (x) 1) = 1 (x) f
// (3) (id (x) Delta) tau = tau_12 tau_23 (Delta (x) id)
// (4) (id (x) eps) tau = eps (x) id
std::vector<CheckResult> check_entwining(const EntwiningStructure& e,
                                         double tol = kDefaultCheckTol);

// module laws plus the compatibility delta alpha = (alpha (x) id)(id (x) tau)(delta (x) id)
std::vector<CheckResult> check_entwined_module(const EntwiningStructure& e,
                                               const EntwinedModuleData& m,
                                               double tol = kDefaultCheckTol);

// iterated entwining moving C through n tensor factors of A
Matrix psi_1n(const EntwiningStructure& e, int n);

struct CrossSymmetry {
  AlgebraPresentation algebra_a;
  AlgebraPresentation algebra_b;
  Matrix psi;  // B (x) A -> A (x) B
};

struct CrossedProduct {
  AlgebraPresentation algebra;  // product structure on A (x) B
  std::vector<CheckResult> certification;
  std::optional<std::array<int, 3>> associativity_witness;  // basis triple
};

// m_psi = (m_A (x) m_B)(id (x) psi (x) id); certifies the two cross axioms,
// brute-force associativity over basis triples (dimension capped at 16) and
// the unit 1_A (x) 1_B
CrossedProduct crossed_product(const CrossSymmetry& s, double tol = kDefaultCheckTol);

// convolution algebra on the dual of a coalgebra: (f^j f^k) = sum_i
// Delta^{jk}_i f^i with unit given by the counit coordinates
AlgebraPresentation dual_algebra(const CoalgebraPresentation& c);

struct DualFactorization {
  bool factorizable = false;
  Matrix tau_dual;  // A (x) C* -> C* (x) A
  std::string diagnostics;
  std::vector<CheckResult> checks;
};

// solves (ev (x) id)(id (x) tau~) = (id (x) ev)(tau (x) id) in the canonical
// dual basis and certifies that tau~ is an algebra cross for (C*, A);
// requires the entwining axioms to hold first
DualFactorization factorize_dual(const EntwiningStructure& e, double tol = kDefaultCheckTol);

}  // namespace fockforge
