#include "qot/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qot {
namespace {

const QubitLabel kDecoyLabel{"d"};

StateVector decoy_state(const DecoyState& d) {
  const double s = 1.0 / std::sqrt(2.0);
  if (d.basis == DecoyState::Basis::computational)
    return StateVector::basis_state({kDecoyLabel}, static_cast<std::size_t>(d.value));
  return StateVector::single_qubit(kDecoyLabel, s, d.value ? -s : s);
}

MeasurementBasis decoy_check_basis(DecoyState::Basis basis) {
  return basis == DecoyState::Basis::computational
             ? MeasurementBasis::computational(kDecoyLabel)
             : MeasurementBasis::diagonal(kDecoyLabel);
}

// First `count` entries of a seeded partial Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> draw_positions(std::size_t n, std::size_t count, RandomStream& stream) {
  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i)
    std::swap(slots[i], slots[i + stream.next_below(n - i)]);
  slots.resize(count);
  std::sort(slots.begin(), slots.end());
  return slots;
}

}  // namespace

MeasurementBasis eta_basis(const ChannelParams& p) {
  const Amplitude a = p.a(), b = p.b();
  const Amplitude ac = std::conj(a), bc = std::conj(b);
  return MeasurementBasis({kLabelA, kLabelB}, {
                                                  {a, 0, 0, b},     // the channel state itself
                                                  {bc, 0, 0, -ac},
                                                  {0, a, b, 0},
                                                  {0, bc, -ac, 0},
                                              });
}

SharingReport share_channel(const ChannelParams& p, const SharingConfig& cfg) {
  return share_channel_detailed(p, cfg).report;
}

SharingRunDetail share_channel_detailed(const ChannelParams& p, const SharingConfig& cfg) {
  if (cfg.pairs_to_keep < 1 || cfg.pairs_to_test < 1 || cfg.decoy_count < 1)
    throw std::invalid_argument("SharingConfig: n, m and k must all be >= 1");

  RandomStream stream(cfg.seed);
  const std::size_t pair_count = cfg.pairs_to_keep + cfg.pairs_to_test;
  const std::size_t slot_count = pair_count + cfg.decoy_count;

  // Sequence layout: decoys at random slots, pair halves filling the rest.
  const auto decoy_slots = draw_positions(slot_count, cfg.decoy_count, stream);
  std::vector<bool> is_decoy(slot_count, false);
  for (auto s : decoy_slots) is_decoy[s] = true;

  SharingRunDetail detail;
  for (auto s : decoy_slots) {
    DecoyState d;
    d.position = s;
    d.basis = stream.next_unit() < 0.5 ? DecoyState::Basis::computational
                                       : DecoyState::Basis::diagonal;
    d.value = stream.next_unit() < 0.5 ? 0 : 1;
    detail.decoys.push_back(d);
  }

  std::vector<StateVector> pairs(pair_count, channel_state(p));
  std::vector<StateVector> decoy_qubits;
  decoy_qubits.reserve(cfg.decoy_count);
  for (const auto& d : detail.decoys) decoy_qubits.push_back(decoy_state(d));

  // Transmission of the receiver sequence, slot by slot. An intercept-resend
  // eavesdropper measures every transmitted qubit in the computational basis
  // and forwards the outcome state; on a pair half this collapses the pair.
  if (cfg.eavesdropper == SharingConfig::Eavesdropper::intercept_resend) {
    std::size_t pair_idx = 0, decoy_idx = 0;
    for (std::size_t slot = 0; slot < slot_count; ++slot) {
      if (is_decoy[slot]) {
        const auto tapped = measure_sampled(decoy_qubits[decoy_idx],
                                            MeasurementBasis::computational(kDecoyLabel), stream);
        decoy_qubits[decoy_idx] =
            StateVector::basis_state({kDecoyLabel}, static_cast<std::size_t>(tapped.outcome));
        ++decoy_idx;
      } else {
        const auto tapped =
            measure_sampled(pairs[pair_idx], MeasurementBasis::computational(kLabelB), stream);
        pairs[pair_idx] = tensor(
            *tapped.collapsed,
            StateVector::basis_state({kLabelB}, static_cast<std::size_t>(tapped.outcome)));
        ++pair_idx;
      }
    }
  }

  // Decoy verification against the announced preparations.
  SharingReport& report = detail.report;
  report.decoy_tests = cfg.decoy_count;
  for (std::size_t i = 0; i < cfg.decoy_count; ++i) {
    const auto checked =
        measure_sampled(decoy_qubits[i], decoy_check_basis(detail.decoys[i].basis), stream);
    if (checked.outcome != detail.decoys[i].value) ++report.decoy_error_count;
  }

  // Sacrifice m random pairs to the eta-basis test; the matching sender
  // halves arrive over the authenticated channel, modeled lossless.
  const auto sacrificed = draw_positions(pair_count, cfg.pairs_to_test, stream);
  const auto eta = eta_basis(p);
  for (auto idx : sacrificed) {
    const auto outcome = measure_sampled(pairs[idx], eta, stream);
    report.eta_outcomes.push_back(outcome.outcome + 1);
  }

  report.accepted = report.decoy_error_count == 0 &&
                    std::all_of(report.eta_outcomes.begin(), report.eta_outcomes.end(),
                                [](int o) { return o == 1; });

  const StateVector reference = channel_state(p);
  std::vector<bool> kept(pair_count, true);
  for (auto idx : sacrificed) kept[idx] = false;
  for (std::size_t i = 0; i < pair_count; ++i)
    if (kept[i]) detail.survivor_fidelities.push_back(fidelity(pairs[i], reference));

  return detail;
}

}  // namespace qot
