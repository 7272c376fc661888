#ifndef QOT_STATEVEC_HPP
#define QOT_STATEVEC_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qot/rng.hpp"

namespace qot {

using Amplitude = std::complex<double>;

// Tolerances used throughout the library: state-level invariants are checked
// to kStateTol, pure matrix algebra to kAlgebraTol. Measurement branches with
// probability below kBranchFloor are treated as impossible.
inline constexpr double kStateTol = 1e-10;
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kBranchFloor = 1e-14;

// Dense representation caps out at 5 qubits; nothing in this library needs a
// larger register.
inline constexpr std::size_t kMaxQubits = 5;

/// Name of one qubit in a register ("C", "A", "B", "E", "m", "B3", ...).
struct QubitLabel {
  std::string name;

  QubitLabel(std::string n) : name(std::move(n)) {}
  QubitLabel(const char* n) : name(n) {}
  bool operator==(const QubitLabel&) const = default;
};

/// Normalized amplitude vector over an ordered register of labeled qubits.
///
/// Indexing is big-endian: the first label is the most significant bit of the
/// amplitude index. Construction validates finiteness, the 2^n length and
/// unit norm; instances are immutable afterwards.
class StateVector {
 public:
  StateVector(std::vector<QubitLabel> labels, std::vector<Amplitude> amps);

  /// Computational basis state |index> over `labels`.
  static StateVector basis_state(std::vector<QubitLabel> labels, std::size_t index);

  static StateVector single_qubit(QubitLabel label, Amplitude alpha, Amplitude beta);

  const std::vector<QubitLabel>& labels() const { return labels_; }
  std::span<const Amplitude> amps() const { return amps_; }
  Amplitude amp(std::size_t i) const { return amps_[i]; }
  std::size_t num_qubits() const { return labels_.size(); }
  std::size_t dim() const { return amps_.size(); }

  bool has_label(const QubitLabel& l) const;
  /// Position of `l` in the register; throws if absent.
  std::size_t index_of(const QubitLabel& l) const;

 private:
  std::vector<QubitLabel> labels_;
  std::vector<Amplitude> amps_;
};

/// Hermitian, trace-1, positive-semidefinite matrix over a labeled register.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<QubitLabel> labels, std::vector<Amplitude> entries);

  static DensityMatrix from_pure(const StateVector& s);
  /// Convex mixture sum_i w_i |s_i><s_i|; weights must sum to 1.
  static DensityMatrix mixture(std::span<const std::pair<double, StateVector>> parts);

  const std::vector<QubitLabel>& labels() const { return labels_; }
  std::size_t dim() const { return dim_; }
  Amplitude at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  Amplitude trace() const;
  /// tr(rho^2); 1 for pure states.
  double purity() const;

 private:
  std::vector<QubitLabel> labels_;
  std::size_t dim_;
  std::vector<Amplitude> entries_;
};

/// Square 2x2 or 4x4 gate. Construction checks unitarity to kStateTol unless
/// Validate::no is passed (used for attack inputs, which are validated
/// explicitly with a reported deviation).
class GateMatrix {
 public:
  enum class Validate { yes, no };

  GateMatrix(std::size_t dim, std::vector<Amplitude> entries, Validate v = Validate::yes);

  std::size_t dim() const { return dim_; }
  Amplitude at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  bool validated() const { return validated_; }

  /// max |(G G† - I)_{rc}|.
  double unitarity_deviation() const;
  GateMatrix adjoint() const;
  GateMatrix operator-() const;
  friend GateMatrix operator*(const GateMatrix& lhs, const GateMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Amplitude> entries_;
  bool validated_;
};

namespace gates {
GateMatrix identity2();
GateMatrix identity4();
GateMatrix pauli_x();
GateMatrix pauli_z();
/// The real rotation [[0,-1],[1,0]]; together with I, X, Z it spans the 2x2
/// complex matrices and maps Bell states onto Bell states without extra
/// phases on the first two.
GateMatrix pauli_iy();
GateMatrix sigma_z();  // alias of pauli_z, the phase-flip operator
GateMatrix hadamard();
/// 4x4 CNOT; first target is the control, second the target.
GateMatrix cnot();
}  // namespace gates

/// Orthonormal basis of a 1- or 2-qubit subsystem, used for projective
/// measurements. Vectors are indexed in the order supplied; orthonormality is
/// validated on construction.
class MeasurementBasis {
 public:
  MeasurementBasis(std::vector<QubitLabel> subsystem, std::vector<std::vector<Amplitude>> vectors);

  /// Bell basis (|00>+|11>, |00>-|11>, |01>+|10>, |01>-|10>)/sqrt(2) over
  /// (first, second).
  static MeasurementBasis bell(QubitLabel first, QubitLabel second);
  static MeasurementBasis computational(QubitLabel q);
  static MeasurementBasis diagonal(QubitLabel q);

  const std::vector<QubitLabel>& subsystem() const { return subsystem_; }
  std::size_t size() const { return vectors_.size(); }
  std::span<const Amplitude> vector(std::size_t i) const { return vectors_[i]; }

 private:
  std::vector<QubitLabel> subsystem_;
  std::vector<std::vector<Amplitude>> vectors_;
};

/// One branch of a projective measurement. `collapsed` holds the
/// renormalized state of the unmeasured qubits; it is empty when the whole
/// register was measured or when the branch is degenerate (probability below
/// kBranchFloor, reported as 0).
struct MeasurementBranch {
  int outcome = 0;
  double probability = 0.0;
  std::optional<StateVector> collapsed;
};

/// Kronecker product; label sets must be disjoint.
StateVector tensor(const StateVector& x, const StateVector& y);

/// Apply `g` to `targets`; the first target supplies the most significant
/// index bit of the gate. Throws if the gate skipped construction-time
/// validation and fails the unitarity check here.
StateVector apply_gate(const StateVector& s, const GateMatrix& g,
                       const std::vector<QubitLabel>& targets);

/// All measurement branches with exact Born probabilities (sum to 1).
std::vector<MeasurementBranch> measure_all(const StateVector& s, const MeasurementBasis& basis);

/// One branch drawn from the analytic distribution, consuming a single
/// variate of `stream`. Degenerate branches are never drawn.
MeasurementBranch measure_sampled(const StateVector& s, const MeasurementBasis& basis,
                                  RandomStream& stream);

/// Reduced density matrix over `keep` (result labels in `keep` order).
DensityMatrix partial_trace(const StateVector& s, const std::vector<QubitLabel>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<QubitLabel>& keep);

/// |<x|y>|^2 for same-register states; invariant under global phase.
double fidelity(const StateVector& x, const StateVector& y);
/// <y|rho|y> for a pure reference state.
double fidelity(const DensityMatrix& rho, const StateVector& y);

/// Coefficients (k1,k2,k3,k4) with g = k1*I + k2*X + k3*Z + k4*iY, obtained
/// by Hilbert-Schmidt projection; exact for arbitrary 2x2 complex matrices.
std::array<Amplitude, 4> pauli_decompose(const GateMatrix& g);
GateMatrix pauli_reconstruct(const std::array<Amplitude, 4>& k);

}  // namespace qot

#endif
