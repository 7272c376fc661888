#ifndef QOT_TELEPORT_HPP
#define QOT_TELEPORT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qot/statevec.hpp"

namespace qot {

/// Bell measurement result, indexing (|00>+|11>, |00>-|11>, |01>+|10>,
/// |01>-|10>)/sqrt(2) in that order.
enum class BellOutcome : int { psi1 = 1, psi2 = 2, psi3 = 3, psi4 = 4 };

inline constexpr std::array<BellOutcome, 4> kBellOutcomes{
    BellOutcome::psi1, BellOutcome::psi2, BellOutcome::psi3, BellOutcome::psi4};

constexpr int index_of(BellOutcome o) { return static_cast<int>(o); }
BellOutcome bell_outcome_from_index(int i);

/// Coefficients (a, b) of the shared pair a|00> + b|11> with |a|^2+|b|^2 = 1
/// and |a| > |b| > 0. The weaker coefficient b caps the transfer probability
/// at 2|b|^2.
class ChannelParams {
 public:
  ChannelParams(Amplitude a, Amplitude b);
  /// Real channel from the success-controlling parameter |b|^2 in (0, 0.5).
  static ChannelParams from_b2(double b2);

  Amplitude a() const { return a_; }
  Amplitude b() const { return b_; }
  double b2() const { return std::norm(b_); }

 private:
  Amplitude a_, b_;
};

/// Normalized single-qubit message alpha|0> + beta|1>.
class InputQubit {
 public:
  InputQubit(Amplitude alpha, Amplitude beta);

  static InputQubit ket_zero() { return InputQubit(1.0, 0.0); }
  static InputQubit ket_one() { return InputQubit(0.0, 1.0); }
  static InputQubit ket_plus();
  static InputQubit ket_minus();

  Amplitude alpha() const { return alpha_; }
  Amplitude beta() const { return beta_; }
  StateVector to_state(QubitLabel label) const;

 private:
  Amplitude alpha_, beta_;
};

double fidelity(const InputQubit& x, const InputQubit& y);

/// The shared pair as a two-qubit state, amplitude a at |00> and b at |11>.
StateVector channel_state(const ChannelParams& p);
StateVector channel_state(const ChannelParams& p, QubitLabel first, QubitLabel second);

struct BellBranch {
  BellOutcome outcome;
  double probability;
  InputQubit collapsed;  // Bob's qubit conditioned on the outcome
};

/// Closed-form Bell decomposition of the sender's joint measurement:
/// Pr(psi1) = Pr(psi2) = (|alpha a|^2 + |beta b|^2)/2 and
/// Pr(psi3) = Pr(psi4) = (|beta a|^2 + |alpha b|^2)/2, with Bob's collapsed
/// states (alpha a|0> +/- beta b|1>) and (beta a|0> +/- alpha b|1>),
/// normalized. Signs follow the fixed outcome order; the psi4 projection
/// produces this state up to a global phase.
std::array<BellBranch, 4> bell_decompose(const ChannelParams& p, const InputQubit& q);

/// Receiver's two-qubit correction U_i on (B, ancilla), built from the block
/// A(a,b) = [[b/a, s], [s, -conj(b/a)]] with s = sqrt(1 - |b/a|^2) and the
/// phase flip:
///   U_1 = [[A, 0], [0,  Z]]    U_2 = [[A, 0], [0, -Z]]
///   U_3 = [[0, Z], [A,  0]]    U_4 = [[0, -Z], [A, 0]]
/// The lower-right corner of A carries a conjugate so the block stays unitary
/// for complex channel coefficients; for real ones it equals -b/a.
GateMatrix correction_unitary(BellOutcome i, const ChannelParams& p);

/// The constant block matrices (V1, V2, V3) with U_1 = V_1 U_2 = V_2 U_3 =
/// V_3 U_4 for every valid channel.
std::array<GateMatrix, 3> v_matrices();

/// W_{ji} with U_j = W_{ji} U_i; diagonal entries are the identity and the
/// off-diagonal entries are signed products of the V matrices.
GateMatrix w_entry(BellOutcome j, BellOutcome i);

/// Full analytic branch enumeration of one protocol run: 4 Bell outcomes x 2
/// ancilla outcomes, with joint probabilities and terminal receiver states.
struct OutcomeTree {
  struct Branch {
    BellOutcome bm_outcome;
    double bm_probability;
    int m_outcome;
    double probability;                  // joint probability of the branch
    std::optional<InputQubit> bob_state; // empty for degenerate branches
  };

  std::vector<Branch> branches;  // ordered by (Bell outcome, m outcome)

  /// Sum of the m = 0 branch probabilities; equals 2|b|^2.
  double success_probability() const;
};

OutcomeTree run_analytic(const ChannelParams& p, const InputQubit& q);

/// Record of one sampled run.
struct Transcript {
  std::uint64_t seed;
  ChannelParams channel;
  InputQubit input;
  BellOutcome bm_outcome;
  double bm_probability;
  int correction_applied;  // index of the applied correction, equals the BM result
  int m_outcome;
  bool success;  // success <=> m_outcome == 0
  InputQubit bob_state;
  double recovered_fidelity;
};

/// One seeded protocol run. The Bell draw consumes the first variate of the
/// stream and the ancilla draw the second; identical seeds give identical
/// transcripts.
Transcript run_sampled(const ChannelParams& p, const InputQubit& q, std::uint64_t seed);

/// As above but drawing from a caller-owned stream (callers that need further
/// draws after the run, e.g. a decode measurement, continue the same stream).
Transcript run_sampled(const ChannelParams& p, const InputQubit& q, std::uint64_t seed,
                       RandomStream& stream);

// Protocol register labels.
inline const QubitLabel kLabelC{"C"};
inline const QubitLabel kLabelA{"A"};
inline const QubitLabel kLabelB{"B"};
inline const QubitLabel kLabelE{"E"};
inline const QubitLabel kLabelM{"m"};

}  // namespace qot

#endif
