#ifndef QOT_ATTACKS_HPP
#define QOT_ATTACKS_HPP

#include <array>
#include <optional>
#include <string>

#include "qot/teleport.hpp"

namespace qot {

/// Announcing `reported_outcome` after measuring `true_outcome`. Equal values
/// reduce to the honest protocol.
struct FakeBmConfig {
  BellOutcome true_outcome;
  BellOutcome reported_outcome;
};

/// Coefficients of the sender-side unitary U_A = k1 I + k2 X + k3 Z + k4 iY
/// applied to particle A before the Bell measurement. The coefficients are
/// unconstrained here; unitarity of the reconstruction is validated by
/// unitary_attack, which reports the measured deviation on rejection.
struct PauliAttackConfig {
  std::array<Amplitude, 4> k;

  GateMatrix to_gate() const { return pauli_reconstruct(k); }
  double unitarity_deviation() const { return to_gate().unitarity_deviation(); }
};

/// Joint distribution of (Alice's probe-qubit outcome, Bob's ancilla
/// outcome), p[e][m].
struct JointEMDistribution {
  std::array<std::array<double, 2>, 2> p{};

  /// Mutual information in nats; 0 means the probe outcome says nothing
  /// about whether Bob's extraction succeeded.
  double mutual_information() const;
};

struct AliceInformation {
  std::string description;
  std::optional<double> distinguishing_probability;
  /// Total extraction probability under the attack (unitary attack), against
  /// the honest 2|b|^2.
  std::optional<double> controlled_success_probability;
  /// Z-outcome probabilities of the probe on the heralded-success branch.
  std::optional<std::array<double, 2>> e_collapse_probabilities;
  std::optional<JointEMDistribution> joint_em_computational;
  std::optional<JointEMDistribution> joint_em_diagonal;
};

/// Effect of one cheating strategy on the receiver, for one analyzed Bell
/// branch.
struct AttackOutcome {
  std::optional<InputQubit> bob_success_state;         // pure heralded state
  std::optional<DensityMatrix> bob_reduced_state;      // mixed heralded state
  std::optional<StateVector> post_success_joint_state; // joint B,E state when entangled
  double fidelity_to_intended = 0.0;
  bool bob_believes_success = false;
  double success_probability = 0.0;  // P(m = 0) within the analyzed branch
  double bell_probability = 0.0;     // probability of the analyzed branch
  AliceInformation alice_information;
};

/// Fake announcement after an honest Bell measurement: Bob applies U_j to the
/// branch collapsed by outcome i, i.e. W_{ji} acts on his corrected state.
/// His ancilla statistics are unchanged, but the heralded state is rotated
/// away from the message.
AttackOutcome fake_bm_attack(const ChannelParams& p, const InputQubit& q,
                             const FakeBmConfig& cfg);

/// Sender-side unitary before the Bell measurement, reported per Bell
/// outcome. Throws std::invalid_argument (with the measured deviation) if the
/// reconstructed U_A is not unitary.
std::array<AttackOutcome, 4> unitary_attack(const ChannelParams& p, const InputQubit& q,
                                            const PauliAttackConfig& cfg);

/// Closed form of the unitary attack for Bell outcome psi1: the collapsed
/// receiver qubit is delta1 a|0> + delta2 b|1> with
///   delta1 = [(k1 + k3) alpha + (k2 + k4) beta] / sqrt(2)
///   delta2 = [(k2 - k4) alpha + (k1 - k3) beta] / sqrt(2)
/// and the heralded post-correction state is delta1|0> + delta2|1>,
/// normalized. Kept separate from the simulation path so the two can be
/// checked against each other.
struct DeltaForm {
  Amplitude delta1;
  Amplitude delta2;
  double bell_probability;     // |delta1 a|^2 + |delta2 b|^2
  double success_probability;  // P(m = 0) within the branch
  InputQubit success_state;
};

DeltaForm unitary_attack_delta_form(const ChannelParams& p, const InputQubit& q,
                                    const PauliAttackConfig& cfg);

/// Probe entanglement via CNOT from particle A onto an ancilla E before the
/// Bell measurement. Analyzed for Bell outcome psi1: heralded success leaves
/// B,E in alpha|00> + beta|11>, the receiver's reduced state is
/// diag(|alpha|^2, |beta|^2), and a later Z measurement of E collapses him to
/// |0> or |1>. The report carries the joint (E, m) distributions over the
/// full outcome tree for both probe bases: the diagonal-basis outcome is
/// exactly independent of m, while the Z-basis outcome is correlated with it.
AttackOutcome entangle_measure_attack(const ChannelParams& p, const InputQubit& q);

}  // namespace qot

#endif
