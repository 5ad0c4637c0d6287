#include "qtel/spinops.hpp"

#include <cmath>
#include <numeric>

namespace qtel {

namespace {

int checked_product(std::span<const int> dims) {
  int p = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("subsystem dimensions must be positive");
    p *= d;
  }
  return p;
}

// Mixed-radix decomposition of a joint basis index, first subsystem most
// significant.
void decompose(int index, std::span<const int> dims, std::span<int> out) {
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    out[i] = index % dims[i];
    index /= dims[i];
  }
}

}  // namespace

Spin Spin::from_twice(int twice_s) {
  if (twice_s < 1) throw std::invalid_argument("spin: 2s must be a positive integer");
  return Spin(twice_s);
}

Spin Spin::parse(double s) {
  const double doubled = 2.0 * s;
  const double rounded = std::round(doubled);
  if (!(doubled > 0.0) || std::abs(doubled - rounded) > 1e-9)
    throw std::invalid_argument("spin: s must be a positive half-integer (1/2, 1, 3/2, ...)");
  return from_twice(static_cast<int>(rounded));
}

SpinOperatorTriple spin_operators(Spin s) {
  const int d = s.dim();
  const double sv = s.value();
  Matrix sp = Matrix::Zero(d, d);  // raising operator S+
  for (int i = 1; i < d; ++i) {
    // |i-1> has m' = s-i+1 = m+1 with m = s-i; <m+1|S+|m> = sqrt(s(s+1)-m(m+1))
    const double m = sv - i;
    sp(i - 1, i) = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
  }
  const Matrix sm = sp.adjoint();
  SpinOperatorTriple t;
  t.sx = 0.5 * (sp + sm);
  t.sy = -0.5 * kImag * (sp - sm);
  t.sz = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) t.sz(i, i) = sv - i;
  return t;
}

SpinOperatorTriple pauli_operators() {
  SpinOperatorTriple half = spin_operators(Spin::from_twice(1));
  return {2.0 * half.sx, 2.0 * half.sy, 2.0 * half.sz};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix embed_two_site(const Matrix& op, std::span<const int> dims, int a, int b) {
  const int n = static_cast<int>(dims.size());
  if (a < 0 || b < 0 || a >= n || b >= n || a == b)
    throw std::invalid_argument("embed_two_site: invalid subsystem indices");
  const int total = checked_product(dims);
  if (op.rows() != dims[a] * dims[b] || op.cols() != op.rows())
    throw std::invalid_argument("embed_two_site: operator dimension mismatch");

  Matrix out = Matrix::Zero(total, total);
  std::vector<int> ri(n), ci(n);
  for (int r = 0; r < total; ++r) {
    decompose(r, dims, ri);
    for (int c = 0; c < total; ++c) {
      decompose(c, dims, ci);
      bool spectators_equal = true;
      for (int q = 0; q < n; ++q) {
        if (q != a && q != b && ri[q] != ci[q]) { spectators_equal = false; break; }
      }
      if (!spectators_equal) continue;
      out(r, c) = op(ri[a] * dims[b] + ri[b], ci[a] * dims[b] + ci[b]);
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& rho, std::span<const int> dims,
                     std::span<const int> keep) {
  const int n = static_cast<int>(dims.size());
  const int total = checked_product(dims);
  if (rho.rows() != total || rho.cols() != total)
    throw std::invalid_argument("partial_trace: matrix does not match dims");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n)
      throw std::invalid_argument("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep indices must be ascending");
  }

  int kept_dim = 1;
  for (int q : keep) kept_dim *= dims[q];
  Matrix out = Matrix::Zero(kept_dim, kept_dim);

  std::vector<int> ri(n), ci(n);
  std::vector<bool> is_kept(n, false);
  for (int q : keep) is_kept[q] = true;

  for (int r = 0; r < total; ++r) {
    decompose(r, dims, ri);
    for (int c = 0; c < total; ++c) {
      decompose(c, dims, ci);
      bool traced_equal = true;
      for (int q = 0; q < n; ++q) {
        if (!is_kept[q] && ri[q] != ci[q]) { traced_equal = false; break; }
      }
      if (!traced_equal) continue;
      int rk = 0, ck = 0;
      for (int q : keep) {
        rk = rk * dims[q] + ri[q];
        ck = ck * dims[q] + ci[q];
      }
      out(rk, ck) += rho(r, c);
    }
  }
  return out;
}

PureState::PureState(Vector amplitudes, std::vector<int> subsystem_dims)
    : amps_(std::move(amplitudes)), dims_(std::move(subsystem_dims)) {
  if (checked_product(dims_) != amps_.size())
    throw std::invalid_argument("PureState: amplitude length does not match subsystem dims");
  if (std::abs(amps_.norm() - 1.0) > kAlgebraTol)
    throw std::invalid_argument("PureState: state is not normalized");
}

DensityOperator::DensityOperator(Matrix matrix, std::vector<int> subsystem_dims)
    : mat_(std::move(matrix)), dims_(std::move(subsystem_dims)) {
  const int total = checked_product(dims_);
  if (mat_.rows() != total || mat_.cols() != total)
    throw std::invalid_argument("DensityOperator: matrix does not match subsystem dims");
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol)
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  if (std::abs(mat_.trace() - Complex(1.0)) > kAlgebraTol)
    throw std::invalid_argument("DensityOperator: trace is not 1");
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityOperator(std::move(m), psi.subsystem_dims());
}

DensityOperator DensityOperator::marginal(std::span<const int> keep) const {
  Matrix reduced = partial_trace(mat_, dims_, keep);
  std::vector<int> kept_dims;
  for (int q : keep) kept_dims.push_back(dims_[q]);
  return DensityOperator(std::move(reduced), std::move(kept_dims));
}

double DensityOperator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

PureState singlet_state(Spin s) {
  const int d = s.dim();
  Vector amps = Vector::Zero(d * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    // |m, -m> with m = s - i; alternating sign, + at m = s.
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    amps(i * d + (d - 1 - i)) = sign * scale;
  }
  return PureState(std::move(amps), {d, d});
}

Matrix interaction_operator(CouplingKind kind, Spin s) {
  const SpinOperatorTriple sigma = pauli_operators();
  const SpinOperatorTriple center = spin_operators(s);
  Matrix out = kron(sigma.sx, center.sx) + kron(sigma.sy, center.sy);
  if (kind == CouplingKind::Heisenberg) out += kron(sigma.sz, center.sz);
  return out;
}

Matrix two_center_quench_operator(CouplingKind kind, Spin s, CenterPair pair) {
  const int d = s.dim();
  const std::vector<int> dims{2, d, d, d};
  const Matrix o = interaction_operator(kind, s);
  const int j = (pair == CenterPair::C12) ? 1 : 2;
  return embed_two_site(o, dims, 0, j) + embed_two_site(o, dims, 0, j + 1);
}

}  // namespace qtel
