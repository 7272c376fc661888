#include "qot/attacks.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qot {
namespace {

InputQubit qubit_from(const StateVector& s) { return InputQubit(s.amp(0), s.amp(1)); }

// Tensors the |0> ancilla onto Bob's qubit(s), applies the correction for
// `announced` and measures the ancilla analytically.
std::vector<MeasurementBranch> corrected_ancilla_branches(const ChannelParams& p,
                                                          BellOutcome announced,
                                                          const StateVector& bob) {
  const auto with_ancilla = tensor(bob, StateVector::basis_state({kLabelM}, 0));
  const auto corrected =
      apply_gate(with_ancilla, correction_unitary(announced, p), {kLabelB, kLabelM});
  return measure_all(corrected, MeasurementBasis::computational(kLabelM));
}

}  // namespace

double JointEMDistribution::mutual_information() const {
  const std::array<double, 2> pe{p[0][0] + p[0][1], p[1][0] + p[1][1]};
  const std::array<double, 2> pm{p[0][0] + p[1][0], p[0][1] + p[1][1]};
  double mi = 0.0;
  for (int e = 0; e < 2; ++e) {
    for (int m = 0; m < 2; ++m) {
      const double joint = p[e][m];
      if (joint <= 0.0) continue;
      mi += joint * std::log(joint / (pe[e] * pm[m]));
    }
  }
  return mi;
}

// ---------------------------------------------------------------------------
// Fake BM announcement

AttackOutcome fake_bm_attack(const ChannelParams& p, const InputQubit& q,
                             const FakeBmConfig& cfg) {
  const auto branches = bell_decompose(p, q);
  const auto& truth = branches[static_cast<std::size_t>(index_of(cfg.true_outcome) - 1)];

  // Bob, told j, applies U_j to the branch collapsed by i; equivalently
  // W_{ji} acts on his honestly corrected two-qubit state.
  const auto with_ancilla =
      tensor(truth.collapsed.to_state(kLabelB), StateVector::basis_state({kLabelM}, 0));
  const auto honest_corrected =
      apply_gate(with_ancilla, correction_unitary(cfg.true_outcome, p), {kLabelB, kLabelM});
  const auto rotated = apply_gate(
      honest_corrected, w_entry(cfg.reported_outcome, cfg.true_outcome), {kLabelB, kLabelM});
  const auto mb = measure_all(rotated, MeasurementBasis::computational(kLabelM));

  AttackOutcome out;
  out.bell_probability = truth.probability;
  out.success_probability = mb[0].probability;
  out.bob_believes_success = true;
  out.bob_success_state = qubit_from(*mb[0].collapsed);
  out.fidelity_to_intended = fidelity(*out.bob_success_state, q);
  out.alice_information.description =
      cfg.reported_outcome == cfg.true_outcome
          ? "announcement matches the measurement; honest behavior"
          : "Alice already knows the announced result is false; the lie rotates Bob's "
            "heralded state without changing his ancilla statistics";
  return out;
}

// ---------------------------------------------------------------------------
// Pre-measurement unitary attack

DeltaForm unitary_attack_delta_form(const ChannelParams& p, const InputQubit& q,
                                    const PauliAttackConfig& cfg) {
  const Amplitude alpha = q.alpha(), beta = q.beta();
  const auto& k = cfg.k;
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  const Amplitude d1 = ((k[0] + k[2]) * alpha + (k[1] + k[3]) * beta) * inv_rt2;
  const Amplitude d2 = ((k[1] - k[3]) * alpha + (k[0] - k[2]) * beta) * inv_rt2;

  const double branch_p = std::norm(d1 * p.a()) + std::norm(d2 * p.b());
  const double weight = std::norm(d1) + std::norm(d2);
  const double inv = 1.0 / std::sqrt(weight);
  // After U_1 the m = 0 component is b (delta1|0> + delta2|1>).
  const double success_p = p.b2() * weight / branch_p;
  return DeltaForm{d1, d2, branch_p, success_p, InputQubit(d1 * inv, d2 * inv)};
}

std::array<AttackOutcome, 4> unitary_attack(const ChannelParams& p, const InputQubit& q,
                                            const PauliAttackConfig& cfg) {
  const double deviation = cfg.unitarity_deviation();
  if (deviation >= kStateTol) {
    std::ostringstream msg;
    msg << "unitary_attack: reconstructed U_A is not unitary; ||U_A U_A† - I|| = " << deviation;
    throw std::invalid_argument(msg.str());
  }
  const auto tampered =
      apply_gate(tensor(q.to_state(kLabelC), channel_state(p)), cfg.to_gate(), {kLabelA});
  const auto bm = measure_all(tampered, MeasurementBasis::bell(kLabelC, kLabelA));

  double total_success = 0.0;
  std::array<std::optional<AttackOutcome>, 4> slots;
  for (std::size_t o = 0; o < 4; ++o) {
    AttackOutcome out;
    out.bell_probability = bm[o].probability;
    if (bm[o].probability == 0.0) {
      out.alice_information.description = "branch has vanishing probability";
      slots[o] = std::move(out);
      continue;
    }
    const auto mb = corrected_ancilla_branches(p, kBellOutcomes[o], *bm[o].collapsed);
    out.success_probability = mb[0].probability;
    out.bob_believes_success = true;
    if (mb[0].collapsed) {
      out.bob_success_state = qubit_from(*mb[0].collapsed);
      out.fidelity_to_intended = fidelity(*out.bob_success_state, q);
    }
    total_success += out.bell_probability * out.success_probability;
    slots[o] = std::move(out);
  }
  std::array<AttackOutcome, 4> result{std::move(*slots[0]), std::move(*slots[1]),
                                      std::move(*slots[2]), std::move(*slots[3])};
  for (auto& out : result) {
    out.alice_information.controlled_success_probability = total_success;
    if (out.alice_information.description.empty())
      out.alice_information.description =
          "tampering with particle A reshapes the Bell statistics and the heralded "
          "states; Bob still cannot be steered to a confident wrong herald";
  }
  return result;
}

// ---------------------------------------------------------------------------
// Entangle-and-measure attack

AttackOutcome entangle_measure_attack(const ChannelParams& p, const InputQubit& q) {
  // Probe qubit E, CNOT'd from A before the Bell measurement.
  const auto with_probe = tensor(tensor(q.to_state(kLabelC), channel_state(p)),
                                 StateVector::basis_state({kLabelE}, 0));
  const auto entangled = apply_gate(with_probe, gates::cnot(), {kLabelA, kLabelE});
  const auto bm = measure_all(entangled, MeasurementBasis::bell(kLabelC, kLabelA));

  JointEMDistribution joint_z{};   // probe measured in the computational basis
  JointEMDistribution joint_x{};   // probe measured in the diagonal basis
  AttackOutcome out;

  for (std::size_t o = 0; o < 4; ++o) {
    if (bm[o].probability == 0.0) continue;
    const auto mb = corrected_ancilla_branches(p, kBellOutcomes[o], *bm[o].collapsed);
    for (int m = 0; m < 2; ++m) {
      if (!mb[m].collapsed) continue;
      const double branch_p = bm[o].probability * mb[m].probability;
      const auto rho_e = partial_trace(*mb[m].collapsed, {kLabelE});
      joint_z.p[0][m] += branch_p * rho_e.at(0, 0).real();
      joint_z.p[1][m] += branch_p * rho_e.at(1, 1).real();
      const double p_plus = 0.5 * (1.0 + 2.0 * rho_e.at(0, 1).real());
      joint_x.p[0][m] += branch_p * p_plus;
      joint_x.p[1][m] += branch_p * (1.0 - p_plus);
    }

    if (kBellOutcomes[o] == BellOutcome::psi1) {
      out.bell_probability = bm[o].probability;
      out.success_probability = mb[0].probability;
      out.bob_believes_success = true;
      out.post_success_joint_state = *mb[0].collapsed;
      out.bob_reduced_state = partial_trace(*mb[0].collapsed, {kLabelB});
      const auto rho_e = partial_trace(*mb[0].collapsed, {kLabelE});
      out.alice_information.e_collapse_probabilities = {rho_e.at(0, 0).real(),
                                                        rho_e.at(1, 1).real()};
    }
  }

  out.fidelity_to_intended = fidelity(*out.bob_reduced_state, q.to_state(kLabelB));
  out.alice_information.joint_em_computational = joint_z;
  out.alice_information.joint_em_diagonal = joint_x;
  out.alice_information.description =
      "heralded success leaves B,E entangled; a Z measurement of E collapses Bob to |0> or "
      "|1>. Measured in the diagonal basis the probe outcome is exactly independent of "
      "Bob's herald; measured in Z it is correlated with it (the probe never reads 1 on "
      "failed branches), so the probe does leak herald information in that basis";
  return out;
}

}  // namespace qot
