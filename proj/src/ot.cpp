#include "qot/ot.hpp"

#include <cmath>
#include <stdexcept>

namespace qot {
namespace {

bool is_basis_state(const InputQubit& q) {
  return std::abs(q.alpha()) > 1.0 - kAlgebraTol || std::abs(q.beta()) > 1.0 - kAlgebraTol;
}

}  // namespace

BitEncoding::BitEncoding(InputQubit zero_state, InputQubit one_state)
    : zero_(zero_state), one_(one_state) {
  const Amplitude overlap =
      std::conj(zero_.alpha()) * one_.alpha() + std::conj(zero_.beta()) * one_.beta();
  if (std::abs(overlap) >= kAlgebraTol)
    throw std::invalid_argument("BitEncoding: code states are not orthogonal");
}

BitEncoding BitEncoding::plus_minus() {
  return BitEncoding(InputQubit::ket_plus(), InputQubit::ket_minus());
}

BitEncoding BitEncoding::computational() {
  return BitEncoding(InputQubit::ket_zero(), InputQubit::ket_one());
}

bool BitEncoding::is_computational() const {
  return is_basis_state(zero_) && is_basis_state(one_);
}

AliceView alice_view(const OtResult& r) {
  const Transcript& t = r.transcript;
  return AliceView{t.channel, t.input, t.bm_outcome, t.bm_probability, t.correction_applied};
}

OtResult ot_qubit(const ChannelParams& p, const InputQubit& q, std::uint64_t seed) {
  const Transcript t = run_sampled(p, q, seed);
  return OtResult{t, t.success, std::nullopt, false};
}

namespace {

// Deterministic path for computational code states: the BM result alone
// fixes whether Bob holds the message or its flip, so he applies I (psi1,
// psi2) or X (psi3, psi4) and recovers with certainty. No ancilla is used;
// the transcript records a trivially successful run.
OtResult ot_bit_computational(const ChannelParams& p, int bit, const BitEncoding& enc,
                              std::uint64_t seed) {
  const InputQubit& message = enc.state_for(bit);
  RandomStream stream(seed);
  const auto joint = tensor(message.to_state(kLabelC), channel_state(p));
  const auto bm = measure_sampled(joint, MeasurementBasis::bell(kLabelC, kLabelA), stream);
  const BellOutcome outcome = kBellOutcomes[static_cast<std::size_t>(bm.outcome)];

  StateVector bob = *bm.collapsed;
  if (outcome == BellOutcome::psi3 || outcome == BellOutcome::psi4)
    bob = apply_gate(bob, gates::pauli_x(), {kLabelB});
  const InputQubit recovered(bob.amp(0), bob.amp(1));

  const Transcript t{seed,
                     p,
                     message,
                     outcome,
                     bm.probability,
                     index_of(outcome),
                     0,
                     true,
                     recovered,
                     fidelity(recovered, message)};
  const int decoded = fidelity(recovered, enc.one_state()) > 0.5 ? 1 : 0;
  return OtResult{t, true, decoded, true};
}

}  // namespace

OtResult ot_bit(const ChannelParams& p, int bit, const BitEncoding& enc, std::uint64_t seed) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("ot_bit: bit must be 0 or 1");
  if (enc.is_computational()) return ot_bit_computational(p, bit, enc, seed);

  RandomStream stream(seed);
  const Transcript t = run_sampled(p, enc.state_for(bit), seed, stream);
  if (!t.success) return OtResult{t, false, std::nullopt, false};

  // Decode measurement in the code basis.
  const auto& z = enc.zero_state();
  const auto& o = enc.one_state();
  const MeasurementBasis code_basis({kLabelB}, {{z.alpha(), z.beta()}, {o.alpha(), o.beta()}});
  const auto branch = measure_sampled(t.bob_state.to_state(kLabelB), code_basis, stream);
  return OtResult{t, true, branch.outcome, false};
}

DensityMatrix concealment_check(const ChannelParams& p, const InputQubit& q) {
  const auto branches = bell_decompose(p, q);
  std::vector<std::pair<double, StateVector>> parts;
  parts.reserve(4);
  for (const auto& br : branches) parts.emplace_back(br.probability, br.collapsed.to_state(kLabelB));
  const DensityMatrix rho = DensityMatrix::mixture(parts);

  const double a2 = std::norm(p.a());
  const double b2 = p.b2();
  const bool matches = std::abs(rho.at(0, 0) - Amplitude(a2)) < kAlgebraTol &&
                       std::abs(rho.at(1, 1) - Amplitude(b2)) < kAlgebraTol &&
                       std::abs(rho.at(0, 1)) < kAlgebraTol && std::abs(rho.at(1, 0)) < kAlgebraTol;
  if (!matches)
    throw std::logic_error("concealment_check: pre-opening state departs from diag(|a|^2, |b|^2)");
  return rho;
}

double repeated_ot_probability(const ChannelParams& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("repeated_ot_probability: n must be >= 1");
  return 1.0 - std::pow(1.0 - 2.0 * p.b2(), static_cast<double>(n));
}

}  // namespace qot
