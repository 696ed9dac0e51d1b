#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "supercon/concurrence.hpp"
#include "supercon/ensembles.hpp"
#include "supercon/state_io.hpp"
#include "supercon/tensor.hpp"

using namespace supercon;

namespace {

const double kR2 = 1.0 / std::sqrt(2.0);

PureState ket(std::size_t da, std::size_t db, std::size_t index) {
  std::vector<Complex> v(da * db, 0.0);
  v[index] = 1.0;
  return make_state(da, db, v);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected supercon::Error";
  return ErrorCode::InternalError;
}

}  // namespace

TEST(MakeState, BasisAndProductStates) {
  const PureState s = make_state(2, 2, {1, 0, 0, 0});
  EXPECT_EQ(s.dim_a(), 2u);
  EXPECT_EQ(s[0], Complex(1.0));

  const PureState p = make_state(2, 2, {0.5, 0.5, 0.5, 0.5});
  const auto sc = schmidt_coefficients(p);
  EXPECT_NEAR(sc[0], 1.0, 1e-12);
  EXPECT_NEAR(sc[1], 0.0, 1e-12);
}

TEST(MakeState, RejectsUnnormalizedAndMisSized) {
  try {
    make_state(2, 2, {1, 1, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
    EXPECT_NE(std::string(e.what()).find("norm^2 2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { make_state(2, 3, {1, 0, 0, 0}); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { make_state(0, 2, {}); }), ErrorCode::DimensionMismatch);
}

TEST(Superpose, DegenerateOrthogonalAndIdenticalComponents) {
  const PureState k00 = ket(2, 2, 0);
  const PureState k11 = ket(2, 2, 3);

  auto s1 = superpose(make_spec(1.0, 0.0, k00, k11));
  EXPECT_NEAR(s1.norm_squared, 1.0, 1e-15);
  EXPECT_NEAR((s1.vector.amplitudes - k00.amplitudes()).norm(), 0.0, 1e-15);

  auto s2 = superpose(make_spec(kR2, kR2, k00, k11));
  EXPECT_NEAR(s2.norm_squared, 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s2.vector.amplitudes[3] - kR2), 0.0, 1e-15);

  auto s3 = superpose(make_spec(kR2, kR2, k00, k00));
  EXPECT_NEAR(s3.norm_squared, 2.0, 1e-14);
  EXPECT_NEAR(std::abs(s3.vector.amplitudes[0] - std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(Superpose, Errors) {
  EXPECT_EQ(code_of([] { make_spec(1.0, 1.0, ket(2, 2, 0), ket(2, 2, 1)); }),
            ErrorCode::WeightsNotNormalized);
  EXPECT_EQ(code_of([] { make_spec(1.0, 0.0, ket(2, 2, 0), ket(2, 3, 1)); }),
            ErrorCode::DimensionMismatch);
}

TEST(Superpose, NormSquaredMatchesOverlapFormula) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    auto [phi, varphi] = general_pair({3, 2}, rng);
    auto [alpha, beta] = draw_weights(WeightSampling::ComplexRandom, rng);
    const auto sup = superpose(make_spec(alpha, beta, phi, varphi));
    const double expected = 1.0 + 2.0 * std::real(std::conj(alpha) * beta * inner_product(phi, varphi));
    EXPECT_NEAR(sup.norm_squared, expected, 1e-12);
    auto [unit, norm] = normalize(sup.vector);
    EXPECT_NEAR(unit.amplitudes().norm(), 1.0, 1e-14);
    EXPECT_NEAR(norm * norm, sup.norm_squared, 1e-12);
  }
}

TEST(Normalize, ScalesAndRejectsZero) {
  Vector v = Vector::Zero(4);
  v[0] = 2.0;
  auto [s, n] = normalize(RawVector({2, 2}, v));
  EXPECT_DOUBLE_EQ(n, 2.0);
  EXPECT_EQ(s[0], Complex(1.0));

  Vector bell(4);
  bell << 1.0, 0.0, 0.0, 1.0;  // sqrt(2) |Phi+>
  auto [b, bn] = normalize(RawVector({2, 2}, bell));
  EXPECT_NEAR(bn, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(b[3] - kR2), 0.0, 1e-15);

  EXPECT_EQ(code_of([] { normalize(RawVector({2, 2}, Vector::Zero(4))); }), ErrorCode::ZeroVector);
}

TEST(InnerProduct, BasisAndFixtures) {
  EXPECT_EQ(inner_product(ket(2, 2, 0), ket(2, 2, 0)), Complex(1.0));
  EXPECT_EQ(inner_product(ket(2, 2, 0), ket(2, 2, 3)), Complex(0.0));
  auto [phi, varphi] = fixture_pair("fig2_pair");
  EXPECT_NEAR(std::abs(inner_product(phi, varphi) - 1.0 / std::sqrt(10.0)), 0.0, 1e-15);
  EXPECT_EQ(code_of([] { inner_product(ket(2, 2, 0), ket(4, 1, 0)); }), ErrorCode::DimensionMismatch);
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
  const PureState a = make_state(1, 2, {Complex(0, 1), 0});
  const PureState b = make_state(1, 2, {1, 0});
  EXPECT_EQ(inner_product(a, b), Complex(0, -1));
}

TEST(ReducedDensity, BellProductAndFig2) {
  const PureState bell = fixture_state("bell_plus");
  EXPECT_NEAR((reduced_density(bell, Side::A).matrix() - Matrix::Identity(2, 2) / 2.0).norm(), 0.0, 1e-15);

  const Matrix r00 = reduced_density(ket(2, 2, 0), Side::A).matrix();
  EXPECT_EQ(r00(0, 0), Complex(1.0));
  EXPECT_NEAR(r00.norm(), 1.0, 1e-15);

  auto [phi, varphi] = fixture_pair("fig2_pair");
  const Matrix expect = Matrix::Identity(10, 10) / 10.0;
  EXPECT_NEAR((reduced_density(varphi, Side::A).matrix() - expect).norm(), 0.0, 1e-14);
  const Matrix brute = oracle::partial_trace(oracle::density(varphi.amplitudes()), 10, 10, true);
  EXPECT_NEAR((brute - expect).norm(), 0.0, 1e-14);
}

TEST(ReducedDensity, MatchesBruteForceOnRandomStatesAndOperators) {
  Rng rng(11);
  std::mt19937_64 mrng(3);
  for (auto [da, db] : {std::pair{2u, 3u}, {3u, 2u}, {4u, 4u}, {1u, 5u}}) {
    const PureState s = haar_state({da, db}, rng);
    const Matrix full = oracle::density(s.amplitudes());
    EXPECT_NEAR((reduced_density(s, Side::A).matrix() - oracle::partial_trace(full, da, db, true)).norm(), 0.0, 1e-13);
    EXPECT_NEAR((reduced_density(s, Side::B).matrix() - oracle::partial_trace(full, da, db, false)).norm(), 0.0, 1e-13);

    const OperatorAB op({da, db}, oracle::random_matrix(static_cast<Eigen::Index>(da * db), mrng));
    const Matrix ta = partial_trace(op, Side::A);
    const Matrix tb = partial_trace(op, Side::B);
    EXPECT_NEAR((ta - oracle::partial_trace(op.entries, da, db, true)).norm(), 0.0, 1e-12);
    EXPECT_NEAR((tb - oracle::partial_trace(op.entries, da, db, false)).norm(), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(ta.trace() - op.entries.trace()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(tb.trace() - op.entries.trace()), 0.0, 1e-12);
  }
}

TEST(Schmidt, KnownStates) {
  auto bell = schmidt_coefficients(fixture_state("bell_plus"));
  ASSERT_EQ(bell.size(), 2u);
  EXPECT_NEAR(bell[0], kR2, 1e-15);
  EXPECT_NEAR(bell[1], kR2, 1e-15);

  auto prod = schmidt_coefficients(ket(2, 2, 0));
  EXPECT_NEAR(prod[0], 1.0, 1e-15);
  EXPECT_NEAR(prod[1], 0.0, 1e-15);

  // 2 l1 l2 equals the qubit concurrence; checked against the 2x2 determinant.
  auto [phi, varphi] = fixture_pair("fig1_pair");
  auto sc = schmidt_coefficients(phi);
  EXPECT_NEAR(2.0 * sc[0] * sc[1], oracle::qubit_concurrence(phi.amplitudes()), 1e-14);
  EXPECT_NEAR(2.0 * sc[0] * sc[1], 0.17492578305631679, 1e-12);
}

TEST(Schmidt, Properties) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Dims d{2 + static_cast<std::size_t>(t % 4), 2 + static_cast<std::size_t>(t % 3)};
    const PureState s = haar_state(d, rng);
    const auto sc = schmidt_coefficients(s);
    ASSERT_EQ(sc.size(), d.min());
    double sum2 = 0, sum4 = 0;
    for (std::size_t i = 0; i < sc.size(); ++i) {
      if (i) EXPECT_GE(sc[i - 1], sc[i]);
      EXPECT_GE(sc[i], 0.0);
      sum2 += sc[i] * sc[i];
      sum4 += std::pow(sc[i], 4);
    }
    EXPECT_NEAR(sum2, 1.0, 1e-10);
    EXPECT_NEAR(sum4, purity(reduced_density(s, Side::A)), 1e-10);
    EXPECT_NEAR(purity(reduced_density(s, Side::A)), purity(reduced_density(s, Side::B)), 1e-10);
  }
}

TEST(Purity, ValuesAndHermiticity) {
  EXPECT_NEAR(purity(DensityMatrix(Matrix::Identity(2, 2) / 2.0)), 0.5, 1e-15);
  EXPECT_NEAR(purity(reduced_density(ket(2, 2, 1), Side::A)), 1.0, 1e-15);
  EXPECT_NEAR(purity(DensityMatrix(Matrix::Identity(10, 10) / 10.0)), 0.1, 1e-15);
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_EQ(code_of([&] { purity(DensityMatrix(m)); }), ErrorCode::NotHermitian);
}

TEST(LocalUnitary, IdentityFlipAndInvariance) {
  const PureState s = fixture_state("bell_minus");
  const PureState same = apply_local_unitary(s, Matrix::Identity(2, 2), Matrix::Identity(2, 2));
  EXPECT_NEAR((same.amplitudes() - s.amplitudes()).norm(), 0.0, 1e-15);

  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  const PureState flipped = apply_local_unitary(ket(2, 2, 0), x, x);
  EXPECT_NEAR((flipped.amplitudes() - ket(2, 2, 3).amplitudes()).norm(), 0.0, 1e-15);

  Rng rng(99);
  const PureState rotated =
      apply_local_unitary(fixture_state("bell_plus"), haar_unitary(2, rng), haar_unitary(2, rng));
  EXPECT_NEAR(i_concurrence(rotated), 1.0, 1e-12);
}

TEST(LocalUnitary, Errors) {
  const PureState s = ket(2, 3, 0);
  Matrix not_unitary = Matrix::Identity(2, 2);
  not_unitary(0, 0) = 2.0;
  EXPECT_EQ(code_of([&] { apply_local_unitary(s, not_unitary, Matrix::Identity(3, 3)); }), ErrorCode::NotUnitary);
  EXPECT_EQ(code_of([&] { apply_local_unitary(s, Matrix::Identity(3, 3), Matrix::Identity(3, 3)); }),
            ErrorCode::DimensionMismatch);
}

TEST(StateIo, RoundTripIsBitExact) {
  Rng rng(1);
  std::vector<PureState> states{haar_state({3, 4}, rng), fixture_state("bell_plus")};
  auto [f1a, f1b] = fixture_pair("fig1_pair");
  states.push_back(f1a);
  states.push_back(f1b);
  for (const auto& s : states) {
    const PureState back = state_from_json(state_to_json(s));
    ASSERT_EQ(back.dims(), s.dims());
    for (Eigen::Index k = 0; k < s.amplitudes().size(); ++k) {
      EXPECT_EQ(back.amplitudes()[k].real(), s.amplitudes()[k].real());
      EXPECT_EQ(back.amplitudes()[k].imag(), s.amplitudes()[k].imag());
    }
  }
}

TEST(StateIo, RejectsBadInput) {
  EXPECT_EQ(code_of([] { state_from_json("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { state_from_json(R"({"dim_a": 2, "amplitudes": []})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { state_from_json(R"({"dim_a": 2, "dim_b": 2, "amplitudes": [[1,0],[0,0],[0,0]]})"); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { state_from_json(R"({"dim_a": 2, "dim_b": 2, "amplitudes": [[1,0],[1,0],[0,0],[0,0]]})"); }),
            ErrorCode::NotNormalized);
  EXPECT_EQ(code_of([] { state_from_json(R"({"dim_a": 1, "dim_b": 2, "amplitudes": [[1,0],"x"]})"); }),
            ErrorCode::ParseError);
  const PureState ok = state_from_json(R"({"dim_a": 1, "dim_b": 2, "amplitudes": [0, [0, 1]]})");
  EXPECT_EQ(ok[1], Complex(0, 1));
}
