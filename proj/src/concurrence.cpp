#include "supercon/concurrence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace supercon {

namespace {

void require_two_qubit(const PureState& s) {
  if (s.dim_a() != 2 || s.dim_b() != 2) {
    std::ostringstream msg;
    msg << "expected 2x2 dims, got " << s.dim_a() << "x" << s.dim_b();
    throw Error(ErrorCode::NotTwoQubit, msg.str());
  }
}

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " argument " << x << " outside [0, 1]";
    throw Error(ErrorCode::OutOfRange, msg.str());
  }
}

// sigma_y (x) sigma_y applied to conj(v), v in the |00>,|01>,|10>,|11> basis.
Vector flip(const Vector& v) {
  Vector out(4);
  out << -std::conj(v[3]), std::conj(v[2]), std::conj(v[1]), -std::conj(v[0]);
  return out;
}

}  // namespace

InverterScale::InverterScale(double nu) : nu_(nu) {
  if (!(nu > 0.0) || !std::isfinite(nu))
    throw Error(ErrorCode::OutOfRange, "inverter scale nu must be positive");
}

PureState spin_flip(const PureState& s) {
  require_two_qubit(s);
  return make_state(s.dims(), flip(s.amplitudes()));
}

double concurrence_qubit(const PureState& s) {
  require_two_qubit(s);
  return std::min(1.0, std::abs(s.amplitudes().dot(flip(s.amplitudes()))));
}

double spin_flip_cross_term(const PureState& x, const PureState& y) {
  require_two_qubit(x);
  require_two_qubit(y);
  return std::abs(x.amplitudes().dot(flip(y.amplitudes())));
}

double binary_entropy(double x) {
  require_unit_interval(x, "binary_entropy");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  require_unit_interval(c, "eof_from_concurrence");
  return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

double i_concurrence(const PureState& s) {
  Eigen::JacobiSVD<Matrix> svd(s.amplitude_matrix());
  const Eigen::VectorXd p = svd.singularValues().array().square();
  // Elementary symmetric sum e2 = sum_{i<j} p_i p_j, accumulated as
  // p_j * (p_0 + ... + p_{j-1}).
  double e2 = 0.0;
  double prefix = 0.0;
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    e2 += p[j] * prefix;
    prefix += p[j];
  }
  return std::sqrt(4.0 * e2) / prefix;
}

Matrix universal_inverter(const DensityMatrix& rho, InverterScale scale) {
  const Matrix& m = rho.matrix();
  return scale.nu() * (Matrix::Identity(m.rows(), m.cols()) - m);
}

OperatorAB lambda_map(const OperatorAB& sigma, InverterScale scale) {
  const auto da = static_cast<Eigen::Index>(sigma.dims.a);
  const auto db = static_cast<Eigen::Index>(sigma.dims.b);
  const Matrix sa = partial_trace(sigma, Side::A);
  const Matrix sb = partial_trace(sigma, Side::B);
  const Matrix id_a = Matrix::Identity(da, da);
  const Matrix id_b = Matrix::Identity(db, db);

  Matrix out = sigma.entries.trace() * Matrix::Identity(da * db, da * db);
  out -= Eigen::kroneckerProduct(sa, id_b);
  out -= Eigen::kroneckerProduct(id_a, sb);
  out += sigma.entries;
  const double nu2 = scale.nu() * scale.nu();
  return OperatorAB(sigma.dims, nu2 * out);
}

Complex lambda_sandwich(const PureState& x, const OperatorAB& sigma, const PureState& y) {
  if (!(x.dims() == sigma.dims) || !(y.dims() == sigma.dims))
    throw Error(ErrorCode::DimensionMismatch, "lambda_sandwich operands must share dims");
  const Matrix xm = x.amplitude_matrix();
  const Matrix ym = y.amplitude_matrix();
  const Matrix sa = partial_trace(sigma, Side::A);
  const Matrix sb = partial_trace(sigma, Side::B);
  // <x|sigma_A (x) I|y> = Tr(X^dag sigma_A Y), <x|I (x) sigma_B|y> = Tr(X^dag Y sigma_B^T).
  const Complex identity_term = sigma.entries.trace() * x.amplitudes().dot(y.amplitudes());
  const Complex a_term = (xm.adjoint() * sa * ym).trace();
  const Complex b_term = (xm.adjoint() * ym * sb.transpose()).trace();
  const Complex direct = x.amplitudes().dot(sigma.entries * y.amplitudes());
  return identity_term - a_term - b_term + direct;
}

double concurrence_sq_via_lambda(const PureState& s) {
  const OperatorAB image = lambda_map(projector(s));
  return s.amplitudes().dot(image.entries * s.amplitudes()).real();
}

double superposition_csq_full_expansion(const SuperpositionSpec& spec) {
  const std::array<const PureState*, 2> kets{&spec.phi, &spec.varphi};
  const std::array<Complex, 2> w{spec.alpha, spec.beta};
  Complex total = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const OperatorAB sigma = outer(*kets[b], *kets[c]);
        for (int d = 0; d < 2; ++d) {
          const Complex coeff = std::conj(w[a]) * w[b] * std::conj(w[c]) * w[d];
          total += coeff * lambda_sandwich(*kets[a], sigma, *kets[d]);
        }
      }
  return total.real();
}

double superposition_csq_expansion(const SuperpositionSpec& spec) {
  const PureState& phi = spec.phi;
  const PureState& vphi = spec.varphi;
  const Complex a = spec.alpha;
  const Complex b = spec.beta;
  const double a2 = std::norm(a);
  const double b2 = std::norm(b);
  const Complex ab = std::conj(a) * b;  // a* b

  const OperatorAB pp = projector(phi);
  const OperatorAB vv = projector(vphi);
  const OperatorAB vp = outer(vphi, phi);
  const OperatorAB pv = outer(phi, vphi);

  const double c2_phi = lambda_sandwich(phi, pp, phi).real();
  const double c2_vphi = lambda_sandwich(vphi, vv, vphi).real();
  const double cross = lambda_sandwich(vphi, pp, vphi).real();

  Complex sum = a2 * a2 * c2_phi + b2 * b2 * c2_vphi + 4.0 * a2 * b2 * cross;
  sum += 2.0 * a2 * (ab * lambda_sandwich(phi, pp, vphi) + std::conj(ab) * lambda_sandwich(vphi, pp, phi));
  sum += 2.0 * b2 * (ab * lambda_sandwich(phi, vv, vphi) + std::conj(ab) * lambda_sandwich(vphi, vv, phi));
  sum += ab * ab * lambda_sandwich(phi, vp, vphi) + std::conj(ab * ab) * lambda_sandwich(vphi, pv, phi);
  return sum.real();
}

double pure_sandwich_closed_form(const PureState& phi, const PureState& varphi) {
  if (!(phi.dims() == varphi.dims()))
    throw Error(ErrorCode::DimensionMismatch, "pure_sandwich_closed_form operands must share dims");
  const Matrix ra_phi = reduced_density(phi, Side::A).matrix();
  const Matrix ra_vphi = reduced_density(varphi, Side::A).matrix();
  const Matrix rb_phi = reduced_density(phi, Side::B).matrix();
  const Matrix rb_vphi = reduced_density(varphi, Side::B).matrix();
  const double overlap2 = std::norm(inner_product(phi, varphi));
  return 1.0 - (ra_phi * ra_vphi).trace().real() - (rb_phi * rb_vphi).trace().real() + overlap2;
}

}  // namespace supercon
