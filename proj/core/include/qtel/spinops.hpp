#pragma once

#include <span>
#include <vector>

#include "qtel/types.hpp"

namespace qtel {

// Spin quantum number s with 2s a positive integer; Hilbert dimension 2s+1.
class Spin {
 public:
  static Spin from_twice(int twice_s);
  // Accepts 0.5, 1.0, 1.5, ... and rejects anything that is not a positive
  // half-integer (within 1e-9 of one).
  static Spin parse(double s);

  int twice() const { return twice_s_; }
  double value() const { return 0.5 * twice_s_; }
  int dim() const { return twice_s_ + 1; }

  friend bool operator==(Spin a, Spin b) { return a.twice_s_ == b.twice_s_; }

 private:
  explicit Spin(int twice_s) : twice_s_(twice_s) {}
  int twice_s_;
};

struct SpinOperatorTriple {
  Matrix sx, sy, sz;
};

// Ladder-operator construction in the Sz eigenbasis ordered m = s, s-1, ..., -s
// (so index 0 is m = s). Sz comes out diagonal. Units hbar = 1.
SpinOperatorTriple spin_operators(Spin s);

// Pauli triple (eigenvalues +-1) for the mediator pseudo-spin: twice the
// s = 1/2 operators.
SpinOperatorTriple pauli_operators();

enum class CouplingKind { Heisenberg, XY };
enum class CenterPair { C12, C23 };

// ---------------------------------------------------------------------------
// Tensor-product bookkeeping. Joint bases are lexicographic with the first
// listed subsystem most significant, matching kron(A, B) index order.
// ---------------------------------------------------------------------------

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

// Embed an operator acting on subsystems (a, b) of a product space, identity
// elsewhere. `op` is indexed with subsystem a as the more significant factor.
Matrix embed_two_site(const Matrix& op, std::span<const int> dims, int a, int b);

// Reduced matrix over the subsystems listed in `keep` (ascending), tracing
// out the rest.
Matrix partial_trace(const Matrix& rho, std::span<const int> dims,
                     std::span<const int> keep);

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

class PureState {
 public:
  PureState(Vector amplitudes, std::vector<int> subsystem_dims);

  const Vector& amplitudes() const { return amps_; }
  const std::vector<int>& subsystem_dims() const { return dims_; }
  int dim() const { return static_cast<int>(amps_.size()); }

 private:
  Vector amps_;
  std::vector<int> dims_;
};

class DensityOperator {
 public:
  // Checks shape, Hermiticity and unit trace (1e-12); positivity is checked
  // separately via min_eigenvalue() where tests need it.
  DensityOperator(Matrix matrix, std::vector<int> subsystem_dims);

  static DensityOperator from_pure(const PureState& psi);

  const Matrix& matrix() const { return mat_; }
  const std::vector<int>& subsystem_dims() const { return dims_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  DensityOperator marginal(std::span<const int> keep) const;
  double min_eigenvalue() const;

 private:
  Matrix mat_;
  std::vector<int> dims_;
};

// ---------------------------------------------------------------------------
// Special states and interaction operators
// ---------------------------------------------------------------------------

// Two-site spin-s singlet (total spin zero): sum_m of alternating-sign
// amplitudes (2s+1)^{-1/2} on |m, -m>, with the m = s amplitude real positive.
PureState singlet_state(Spin s);

// Dimensionless spin-spin coupling between the mediator pseudo-spin and one
// center: Heisenberg sigma.S or XY sigma_x Sx + sigma_y Sy, on the
// 2(2s+1)-dimensional (mediator x center) space.
Matrix interaction_operator(CouplingKind kind, Spin s);

// O_j + O_l on (mediator x center1 x center2 x center3), identity on the
// third center: the spin part of the two-center potential once the two
// position factors add with equal sign. Annihilates mediator x singlet(j,l).
Matrix two_center_quench_operator(CouplingKind kind, Spin s, CenterPair pair);

}  // namespace qtel
