#pragma once

// Brute-force reference computations used only by the tests. They work from
// explicit index sums over the full operator and share no code paths with
// the library's matrix-reshape implementations.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "supercon/tensor.hpp"

namespace supercon::oracle {

// Tr_B or Tr_A of a full (da*db)x(da*db) operator by explicit index sums.
inline Matrix partial_trace(const Matrix& op, std::size_t da, std::size_t db, bool keep_a) {
  const std::size_t n = keep_a ? da : db;
  Matrix r = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          const auto row = static_cast<Eigen::Index>(i * db + j);
          const auto col = static_cast<Eigen::Index>(k * db + l);
          if (keep_a && j == l) r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) += op(row, col);
          if (!keep_a && i == k) r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) += op(row, col);
        }
  return r;
}

inline Matrix density(const Vector& v) { return v * v.adjoint(); }

// sqrt(2 (1 - Tr rho_A^2)) with rho_A from the brute-force partial trace.
inline double i_concurrence(const Vector& v, std::size_t da, std::size_t db) {
  const Matrix ra = partial_trace(density(v), da, db, true);
  const double p = (ra * ra).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

// 2 |a00 a11 - a01 a10|, valid for normalized two-qubit amplitudes.
inline double qubit_concurrence(const Vector& v) {
  return 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
}

// (S (x) S)(sigma) with S(X) = Tr(X) I - X, applied to each matrix unit
// |i><k| (x) |j><l| separately and summed.
inline Matrix lambda_map(const Matrix& sigma, std::size_t da, std::size_t db) {
  const auto n = static_cast<Eigen::Index>(da * db);
  Matrix out = Matrix::Zero(n, n);
  auto unit = [](std::size_t dim, std::size_t r, std::size_t c) {
    Matrix u = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1.0;
    return u;
  };
  auto inverter = [](const Matrix& x) {
    return Matrix(x.trace() * Matrix::Identity(x.rows(), x.cols()) - x);
  };
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          const Complex coeff = sigma(static_cast<Eigen::Index>(i * db + j), static_cast<Eigen::Index>(k * db + l));
          if (coeff == Complex(0.0)) continue;
          const Matrix sa = inverter(unit(da, i, k));
          const Matrix sb = inverter(unit(db, j, l));
          for (Eigen::Index r1 = 0; r1 < sa.rows(); ++r1)
            for (Eigen::Index c1 = 0; c1 < sa.cols(); ++c1)
              for (Eigen::Index r2 = 0; r2 < sb.rows(); ++r2)
                for (Eigen::Index c2 = 0; c2 < sb.cols(); ++c2)
                  out(r1 * sb.rows() + r2, c1 * sb.cols() + c2) += coeff * sa(r1, c1) * sb(r2, c2);
        }
  return out;
}

inline Matrix random_matrix(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline Matrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  const Matrix m = random_matrix(n, rng);
  return (m + m.adjoint()) / 2.0;
}

}  // namespace supercon::oracle
