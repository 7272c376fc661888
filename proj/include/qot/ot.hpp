#ifndef QOT_OT_HPP
#define QOT_OT_HPP

#include <cstdint>
#include <optional>

#include "qot/teleport.hpp"

namespace qot {

/// Pair of orthogonal qubit states encoding the classical bits 0 and 1.
class BitEncoding {
 public:
  BitEncoding(InputQubit zero_state, InputQubit one_state);

  /// {|+>, |->}: the oblivious default.
  static BitEncoding plus_minus();
  /// {|0>, |1>}: decodable with certainty from the BM result alone, so this
  /// encoding is not oblivious.
  static BitEncoding computational();

  const InputQubit& zero_state() const { return zero_; }
  const InputQubit& one_state() const { return one_; }
  const InputQubit& state_for(int bit) const { return bit ? one_ : zero_; }

  /// True when both code states are computational basis states (up to
  /// phase); triggers the deterministic Pauli-correction decode path.
  bool is_computational() const;

 private:
  InputQubit zero_, one_;
};

struct OtResult {
  Transcript transcript;
  bool bob_learned;                 // mirrors transcript.success
  std::optional<int> decoded_bit;   // bit-OT only; empty on failed transfers
  bool deterministic_decode = false;
};

/// The sender's share of a result: everything except the receiver-local
/// ancilla outcome, decoded state and success flag.
struct AliceView {
  ChannelParams channel;
  InputQubit input;
  BellOutcome bm_outcome;
  double bm_probability;
  int correction_applied;
};

AliceView alice_view(const OtResult& r);

/// All-or-nothing transfer of a qubit: one sampled protocol run, learned with
/// probability 2|b|^2, heralded only on the receiver's side.
OtResult ot_qubit(const ChannelParams& p, const InputQubit& q, std::uint64_t seed);

/// Transfer of a classical bit through `enc`. On success the receiver
/// measures in the code basis (third variate of the run's stream) and
/// decodes; a computational encoding instead takes the deterministic
/// I/X-correction path keyed on the BM result.
OtResult ot_bit(const ChannelParams& p, int bit, const BitEncoding& enc, std::uint64_t seed);

/// Receiver's pre-opening mixed state sum_i Pr_i |phi_i><phi_i|. Always equal
/// to diag(|a|^2, |b|^2) regardless of the message, which is verified
/// internally before returning.
DensityMatrix concealment_check(const ChannelParams& p, const InputQubit& q);

/// 1 - (1 - 2|b|^2)^n: probability that at least one of n repeated transfers
/// of the same qubit succeeds.
double repeated_ot_probability(const ChannelParams& p, std::size_t n);

}  // namespace qot

#endif
