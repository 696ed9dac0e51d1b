#pragma once

// Entanglement measures for bipartite pure states.
//
// For two qubits the concurrence is the overlap between a state and its
// spin-flipped image, C = |<psi| sigma_y (x) sigma_y |psi*>|. In any
// dimension the I-concurrence is C = sqrt(2 (1 - Tr rho_A^2)), which equals
// sqrt(<psi| Lambda(|psi><psi|) |psi>) for the two-sided universal inverter
// Lambda = S (x) S with S(rho) = nu (Tr(rho) I - rho).

#include "supercon/tensor.hpp"

namespace supercon {

/// Scale factor nu of the universal inverter. nu = 1 is the choice that
/// makes the I-concurrence agree with the qubit concurrence.
class InverterScale {
 public:
  InverterScale() = default;
  explicit InverterScale(double nu);

  double nu() const { return nu_; }
  bool is_unit() const { return nu_ == 1.0; }

 private:
  double nu_ = 1.0;
};

/// sigma_y (x) sigma_y |s*>. Global phase is not part of the contract.
PureState spin_flip(const PureState& s);

/// |<s|spin_flip(s)>|. Throws NotTwoQubit.
double concurrence_qubit(const PureState& s);

/// |<x| sigma_y (x) sigma_y |y*>| for two-qubit x, y. Equal under x <-> y.
double spin_flip_cross_term(const PureState& x, const PureState& y);

/// Base-2 binary entropy with h(0) = h(1) = 0. Throws OutOfRange.
double binary_entropy(double x);

/// Entanglement of formation of a two-qubit pure state with concurrence c:
/// h((1 + sqrt(1 - c^2)) / 2). Throws OutOfRange unless 0 <= c <= 1.
double eof_from_concurrence(double c);

/// I-concurrence. Computed from the Schmidt weights p_i of s as
/// C^2 = 2 (1 - sum p_i^2) = 4 sum_{i<j} p_i p_j, which avoids cancellation
/// for nearly separable states.
double i_concurrence(const PureState& s);

/// nu (I - rho) for a density matrix of trace one.
Matrix universal_inverter(const DensityMatrix& rho, InverterScale scale = {});

/// nu^2 (Tr(sigma) I(x)I - sigma_A (x) I - I (x) sigma_B + sigma).
OperatorAB lambda_map(const OperatorAB& sigma, InverterScale scale = {});

/// <x| Lambda(sigma) |y> at nu = 1, contracted without materializing
/// Lambda(sigma).
Complex lambda_sandwich(const PureState& x, const OperatorAB& sigma, const PureState& y);

/// <s| Lambda(|s><s|) |s>, evaluated by forming Lambda(|s><s|) explicitly.
/// O(d^4); kept as an independent route to C^2.
double concurrence_sq_via_lambda(const PureState& s);

/// ||Psi||^4 C^2(Psi') from the full 16-term sandwich expansion of
/// <Psi| Lambda(|Psi><Psi|) |Psi>, Psi = alpha phi + beta varphi.
double superposition_csq_full_expansion(const SuperpositionSpec& spec);

/// Same quantity from the collapsed expansion, which keeps one
/// representative of each class of equal sandwich terms:
///   |a|^4 C^2(phi) + |b|^4 C^2(varphi) + 4|ab|^2 <varphi|L(phi phi)|varphi>
///   + 2|a|^2 (a* b <phi|L(phi phi)|varphi> + a b* <varphi|L(phi phi)|phi>)
///   + 2|b|^2 (a* b <phi|L(vphi vphi)|varphi> + a b* <varphi|L(vphi vphi)|phi>)
///   + (a* b)^2 <phi|L(vphi phi)|varphi> + (a b*)^2 <varphi|L(phi vphi)|phi>
double superposition_csq_expansion(const SuperpositionSpec& spec);

/// 1 - Tr(rho^A_phi rho^A_varphi) - Tr(rho^B_phi rho^B_varphi) + |<phi|varphi>|^2,
/// the closed form of <varphi| Lambda(|phi><phi|) |varphi>.
double pure_sandwich_closed_form(const PureState& phi, const PureState& varphi);

}  // namespace supercon
