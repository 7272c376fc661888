#ifndef QOT_CHANNEL_HPP
#define QOT_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "qot/teleport.hpp"

namespace qot {

/// One decoy qubit mixed into the transmitted sequence, drawn from the BB84
/// set {|0>, |1>, |+>, |->}.
struct DecoyState {
  std::size_t position;  // slot in the transmitted sequence
  enum class Basis { computational, diagonal } basis = Basis::computational;
  int value = 0;
};

struct SharingConfig {
  std::size_t pairs_to_keep = 1;  // n: pairs surviving verification
  std::size_t pairs_to_test = 1;  // m: pairs sacrificed to the basis check
  std::size_t decoy_count = 1;    // k
  enum class Eavesdropper { none, intercept_resend } eavesdropper = Eavesdropper::none;
  std::uint64_t seed = 0;
};

/// Result of one sharing round. A round is accepted only when every decoy
/// check passes and every sacrificed pair projects onto the channel state.
struct SharingReport {
  std::size_t decoy_error_count = 0;
  std::size_t decoy_tests = 0;
  std::vector<int> eta_outcomes;  // 1-based basis indices; all 1 on acceptance
  bool accepted = false;
};

/// Orthonormal two-qubit basis containing the channel state:
///   eta1 = a|00> + b|11>          eta2 = b*|00> - a*|11>
///   eta3 = a|01> + b|10>          eta4 = b*|01> - a*|10>
/// (conjugated coefficients keep the set orthonormal for complex channels;
/// for real ones they reduce to plain b and a). Measuring a shared pair in
/// this basis yields outcome 1 with certainty iff the pair is intact.
MeasurementBasis eta_basis(const ChannelParams& p);

/// Simulate one channel-establishment round: prepare n+m pairs, transmit the
/// receiver halves with k decoys inserted at random positions, optionally
/// under an intercept-resend eavesdropper (computational basis), check the
/// decoys, then sacrifice m random pairs to the eta-basis test.
///
/// Draw order per seed is fixed: decoy positions, decoy preparations,
/// per-slot eavesdropper measurements, decoy checks, sacrifice choice,
/// eta measurements. Identical seeds give identical reports.
SharingReport share_channel(const ChannelParams& p, const SharingConfig& cfg);

/// share_channel plus the prepared decoys and the surviving pairs' fidelity
/// to the channel state (1.0 each on an honest run).
struct SharingRunDetail {
  SharingReport report;
  std::vector<DecoyState> decoys;
  std::vector<double> survivor_fidelities;
};

SharingRunDetail share_channel_detailed(const ChannelParams& p, const SharingConfig& cfg);

}  // namespace qot

#endif
