#pragma once

// Dense linear algebra on a bipartite Hilbert space H_A (x) H_B.
//
// Amplitudes are stored in a flat vector with index i * dim_b + j for the
// product basis vector |i>_A |j>_B. Every module in the library uses this
// layout; the amplitude matrix view M(i, j) is the row-major reshape.

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "supercon/errors.hpp"

namespace supercon {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kZeroVectorThreshold = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;

struct Dims {
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t total() const { return a * b; }
  std::size_t min() const { return a < b ? a : b; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Side { A, B };

/// Amplitudes of an arbitrary (possibly unnormalized, possibly zero) vector.
struct RawVector {
  Dims dims;
  Vector amplitudes;

  RawVector(Dims d, Vector amps);
};

/// A normalized bipartite pure state. Only constructible through make_state
/// or normalize, so a PureState in hand always satisfies the norm invariant.
class PureState {
 public:
  const Dims& dims() const { return dims_; }
  std::size_t dim_a() const { return dims_.a; }
  std::size_t dim_b() const { return dims_.b; }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t k) const { return amplitudes_[static_cast<Eigen::Index>(k)]; }

  /// dim_a x dim_b matrix M with M(i, j) = <ij|psi>.
  Matrix amplitude_matrix() const;

  RawVector raw() const { return RawVector(dims_, amplitudes_); }

 private:
  friend PureState make_state(Dims, Vector);
  friend PureState make_state(std::size_t, std::size_t, const std::vector<Complex>&);
  friend std::pair<PureState, double> normalize(const RawVector&);

  PureState(Dims d, Vector amps) : dims_(d), amplitudes_(std::move(amps)) {}

  Dims dims_;
  Vector amplitudes_;
};

/// Reduced state of one party. Entries are not validated on construction
/// beyond squareness; purity() enforces Hermiticity.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  bool is_hermitian(double tol = kHermitianTolerance) const;

 private:
  Matrix entries_;
};

/// Operator on H_A (x) H_B, indexed with the same product-basis layout as
/// PureState. Hermiticity is not required.
struct OperatorAB {
  Dims dims;
  Matrix entries;

  OperatorAB(Dims d, Matrix m);
};

/// The superposition alpha |phi> + beta |varphi>.
struct SuperpositionSpec {
  Complex alpha;
  Complex beta;
  PureState phi;
  PureState varphi;
};

/// Validates weights and component dimensions.
SuperpositionSpec make_spec(Complex alpha, Complex beta, PureState phi, PureState varphi);

PureState make_state(Dims dims, Vector amplitudes);
PureState make_state(std::size_t dim_a, std::size_t dim_b, const std::vector<Complex>& amplitudes);

struct Superposition {
  RawVector vector;
  double norm_squared;
};

Superposition superpose(const SuperpositionSpec& spec);

/// Returns the unit vector and the original norm. Throws ZeroVector when the
/// norm is at or below kZeroVectorThreshold.
std::pair<PureState, double> normalize(const RawVector& v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const PureState& a, const PureState& b);
Complex inner_product(const RawVector& a, const RawVector& b);

/// |x><y| as an operator on the bipartite space.
OperatorAB outer(const PureState& x, const PureState& y);
inline OperatorAB projector(const PureState& s) { return outer(s, s); }

/// Partial trace over the complement of `side`.
DensityMatrix reduced_density(const PureState& s, Side side);
Matrix partial_trace(const OperatorAB& op, Side side);

/// Descending singular values of the amplitude matrix; length min(dim_a, dim_b).
std::vector<double> schmidt_coefficients(const PureState& s);

/// Tr(rho^2). Throws NotHermitian.
double purity(const DensityMatrix& rho);

/// (u_a (x) u_b)|s>. Throws NotUnitary or DimensionMismatch.
PureState apply_local_unitary(const PureState& s, const Matrix& u_a, const Matrix& u_b);

bool is_unitary(const Matrix& u, double tol = kUnitaryTolerance);

}  // namespace supercon
