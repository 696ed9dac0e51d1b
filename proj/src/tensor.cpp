#include "supercon/tensor.hpp"

#include <cmath>
#include <sstream>

namespace supercon {

namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_same_dims(const Dims& x, const Dims& y, const char* what) {
  if (!(x == y)) {
    std::ostringstream msg;
    msg << what << ": dims " << x.a << "x" << x.b << " vs " << y.a << "x" << y.b;
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

Vector flatten(const Matrix& m) {
  RowMajorMatrix rm = m;
  return Eigen::Map<const Vector>(rm.data(), rm.size());
}

Matrix as_matrix(const Vector& amps, const Dims& d) {
  return Eigen::Map<const RowMajorMatrix>(amps.data(), static_cast<Eigen::Index>(d.a),
                                          static_cast<Eigen::Index>(d.b));
}

}  // namespace

RawVector::RawVector(Dims d, Vector amps) : dims(d), amplitudes(std::move(amps)) {
  if (d.a == 0 || d.b == 0 || static_cast<std::size_t>(amplitudes.size()) != d.total()) {
    std::ostringstream msg;
    msg << "expected " << d.total() << " amplitudes for " << d.a << "x" << d.b << ", got "
        << amplitudes.size();
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

Matrix PureState::amplitude_matrix() const { return as_matrix(amplitudes_, dims_); }

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and non-empty");
}

bool DensityMatrix::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

OperatorAB::OperatorAB(Dims d, Matrix m) : dims(d), entries(std::move(m)) {
  const auto n = static_cast<Eigen::Index>(d.total());
  if (n == 0 || entries.rows() != n || entries.cols() != n) {
    std::ostringstream msg;
    msg << "operator on " << d.a << "x" << d.b << " must be " << n << "x" << n << ", got "
        << entries.rows() << "x" << entries.cols();
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

PureState make_state(Dims dims, Vector amplitudes) {
  RawVector raw(dims, std::move(amplitudes));
  const double norm = raw.amplitudes.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state norm " << norm << " (norm^2 " << norm * norm << ") is not 1";
    throw Error(ErrorCode::NotNormalized, msg.str());
  }
  return PureState(raw.dims, std::move(raw.amplitudes));
}

PureState make_state(std::size_t dim_a, std::size_t dim_b, const std::vector<Complex>& amplitudes) {
  Vector v = Eigen::Map<const Vector>(amplitudes.data(), static_cast<Eigen::Index>(amplitudes.size()));
  return make_state(Dims{dim_a, dim_b}, std::move(v));
}

SuperpositionSpec make_spec(Complex alpha, Complex beta, PureState phi, PureState varphi) {
  require_same_dims(phi.dims(), varphi.dims(), "superposition components");
  const double weight = std::norm(alpha) + std::norm(beta);
  if (std::abs(weight - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "|alpha|^2 + |beta|^2 = " << weight;
    throw Error(ErrorCode::WeightsNotNormalized, msg.str());
  }
  return SuperpositionSpec{alpha, beta, std::move(phi), std::move(varphi)};
}

Superposition superpose(const SuperpositionSpec& spec) {
  require_same_dims(spec.phi.dims(), spec.varphi.dims(), "superpose");
  const double weight = std::norm(spec.alpha) + std::norm(spec.beta);
  if (std::abs(weight - 1.0) > kNormTolerance)
    throw Error(ErrorCode::WeightsNotNormalized, "|alpha|^2 + |beta|^2 != 1");
  Vector v = spec.alpha * spec.phi.amplitudes() + spec.beta * spec.varphi.amplitudes();
  const double n2 = v.squaredNorm();
  return Superposition{RawVector(spec.phi.dims(), std::move(v)), n2};
}

std::pair<PureState, double> normalize(const RawVector& v) {
  const double norm = v.amplitudes.norm();
  if (!(norm > kZeroVectorThreshold)) {
    std::ostringstream msg;
    msg << "norm " << norm << " at or below " << kZeroVectorThreshold
        << " (components cancel)";
    throw Error(ErrorCode::ZeroVector, msg.str());
  }
  return {PureState(v.dims, v.amplitudes / norm), norm};
}

Complex inner_product(const PureState& a, const PureState& b) {
  require_same_dims(a.dims(), b.dims(), "inner_product");
  return a.amplitudes().dot(b.amplitudes());
}

Complex inner_product(const RawVector& a, const RawVector& b) {
  require_same_dims(a.dims, b.dims, "inner_product");
  return a.amplitudes.dot(b.amplitudes);
}

OperatorAB outer(const PureState& x, const PureState& y) {
  require_same_dims(x.dims(), y.dims(), "outer");
  return OperatorAB(x.dims(), x.amplitudes() * y.amplitudes().adjoint());
}

DensityMatrix reduced_density(const PureState& s, Side side) {
  const Matrix m = s.amplitude_matrix();
  if (side == Side::A) return DensityMatrix(m * m.adjoint());
  return DensityMatrix(m.transpose() * m.conjugate());
}

Matrix partial_trace(const OperatorAB& op, Side side) {
  const auto da = static_cast<Eigen::Index>(op.dims.a);
  const auto db = static_cast<Eigen::Index>(op.dims.b);
  const Matrix& x = op.entries;
  if (side == Side::A) {
    Matrix r = Matrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index k = 0; k < da; ++k)
        for (Eigen::Index j = 0; j < db; ++j) r(i, k) += x(i * db + j, k * db + j);
    return r;
  }
  Matrix r = Matrix::Zero(db, db);
  for (Eigen::Index j = 0; j < db; ++j)
    for (Eigen::Index l = 0; l < db; ++l)
      for (Eigen::Index i = 0; i < da; ++i) r(j, l) += x(i * db + j, i * db + l);
  return r;
}

std::vector<double> schmidt_coefficients(const PureState& s) {
  Eigen::JacobiSVD<Matrix> svd(s.amplitude_matrix());
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

double purity(const DensityMatrix& rho) {
  if (!rho.is_hermitian()) throw Error(ErrorCode::NotHermitian, "purity requires a Hermitian matrix");
  // Tr(rho^2) = sum |rho_ik|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Matrix defect = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

PureState apply_local_unitary(const PureState& s, const Matrix& u_a, const Matrix& u_b) {
  if (u_a.rows() != static_cast<Eigen::Index>(s.dim_a()) || u_a.cols() != u_a.rows() ||
      u_b.rows() != static_cast<Eigen::Index>(s.dim_b()) || u_b.cols() != u_b.rows())
    throw Error(ErrorCode::DimensionMismatch, "local unitaries must match the state's local dims");
  if (!is_unitary(u_a)) throw Error(ErrorCode::NotUnitary, "u_a is not unitary");
  if (!is_unitary(u_b)) throw Error(ErrorCode::NotUnitary, "u_b is not unitary");
  const Matrix m = u_a * s.amplitude_matrix() * u_b.transpose();
  return make_state(s.dims(), flatten(m));
}

}  // namespace supercon
