#include "qot/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qot {
namespace {

bool finite(Amplitude a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::size_t checked_qubit_count(std::size_t dim, const char* what) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  require((std::size_t{1} << n) == dim, std::string(what) + ": dimension is not a power of two");
  return n;
}

double norm_sq(std::span<const Amplitude> v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

Amplitude inner(std::span<const Amplitude> x, std::span<const Amplitude> y) {
  Amplitude s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

// Bit positions (counted from the least significant bit) of `subset` within a
// register of `labels`; big-endian, so label 0 sits at bit n-1.
std::vector<std::size_t> bit_positions(const std::vector<QubitLabel>& labels,
                                       const std::vector<QubitLabel>& subset) {
  std::vector<std::size_t> pos;
  pos.reserve(subset.size());
  for (const auto& l : subset) {
    auto it = std::find(labels.begin(), labels.end(), l);
    require(it != labels.end(), "unknown qubit label '" + l.name + "'");
    pos.push_back(labels.size() - 1 - static_cast<std::size_t>(it - labels.begin()));
  }
  return pos;
}

void require_distinct(const std::vector<QubitLabel>& labels, const char* what) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      require(!(labels[i] == labels[j]),
              std::string(what) + ": duplicate qubit label '" + labels[i].name + "'");
}

// Scatter the bits of `sub` (big-endian over `pos`) into a full-register
// index: bit k of sub (counting from its own MSB) lands at pos[k].
std::size_t scatter(std::size_t sub, const std::vector<std::size_t>& pos) {
  std::size_t out = 0;
  const std::size_t k = pos.size();
  for (std::size_t j = 0; j < k; ++j)
    if ((sub >> (k - 1 - j)) & 1u) out |= std::size_t{1} << pos[j];
  return out;
}

// Enumerate full-register indices whose bits at `pos` are all zero.
std::vector<std::size_t> rest_indices(std::size_t num_qubits, const std::vector<std::size_t>& pos) {
  std::size_t mask = 0;
  for (auto p : pos) mask |= std::size_t{1} << p;
  std::vector<std::size_t> out;
  out.reserve((std::size_t{1} << num_qubits) >> pos.size());
  for (std::size_t x = 0; x < (std::size_t{1} << num_qubits); ++x)
    if ((x & mask) == 0) out.push_back(x);
  return out;
}

// Minimum eigenvalue of a Hermitian matrix, via cyclic Jacobi sweeps on the
// real symmetric embedding [[Re, -Im], [Im, Re]].
double min_eigenvalue_hermitian(const std::vector<Amplitude>& h, std::size_t d) {
  const std::size_t n = 2 * d;
  std::vector<double> s(n * n, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const Amplitude v = h[r * d + c];
      s[r * n + c] = v.real();
      s[(r + d) * n + (c + d)] = v.real();
      s[r * n + (c + d)] = -v.imag();
      s[(r + d) * n + c] = v.imag();
    }
  }
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::abs(s[p * n + q]);
    if (off < 1e-13) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = s[p * n + q];
        if (std::abs(apq) < 1e-15) continue;
        const double theta = 0.5 * std::atan2(2.0 * apq, s[q * n + q] - s[p * n + p]);
        const double c = std::cos(theta), t = std::sin(theta);
        for (std::size_t i = 0; i < n; ++i) {
          const double sip = s[i * n + p], siq = s[i * n + q];
          s[i * n + p] = c * sip - t * siq;
          s[i * n + q] = t * sip + c * siq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double spi = s[p * n + i], sqi = s[q * n + i];
          s[p * n + i] = c * spi - t * sqi;
          s[q * n + i] = t * spi + c * sqi;
        }
      }
    }
  }
  double mn = s[0];
  for (std::size_t i = 1; i < n; ++i) mn = std::min(mn, s[i * n + i]);
  return mn;
}

}  // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::vector<QubitLabel> labels, std::vector<Amplitude> amps)
    : labels_(std::move(labels)), amps_(std::move(amps)) {
  require(!labels_.empty(), "StateVector: empty register");
  require(labels_.size() <= kMaxQubits, "StateVector: register exceeds 5 qubits");
  require_distinct(labels_, "StateVector");
  require(amps_.size() == (std::size_t{1} << labels_.size()),
          "StateVector: amplitude count must be 2^(number of labels)");
  for (const auto& a : amps_) require(finite(a), "StateVector: non-finite amplitude");
  require(std::abs(norm_sq(amps_) - 1.0) < kStateTol, "StateVector: state is not normalized");
}

StateVector StateVector::basis_state(std::vector<QubitLabel> labels, std::size_t index) {
  std::vector<Amplitude> amps(std::size_t{1} << labels.size(), 0.0);
  require(index < amps.size(), "basis_state: index out of range");
  amps[index] = 1.0;
  return StateVector(std::move(labels), std::move(amps));
}

StateVector StateVector::single_qubit(QubitLabel label, Amplitude alpha, Amplitude beta) {
  return StateVector({std::move(label)}, {alpha, beta});
}

bool StateVector::has_label(const QubitLabel& l) const {
  return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
}

std::size_t StateVector::index_of(const QubitLabel& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  require(it != labels_.end(), "unknown qubit label '" + l.name + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(std::vector<QubitLabel> labels, std::vector<Amplitude> entries)
    : labels_(std::move(labels)),
      dim_(std::size_t{1} << labels_.size()),
      entries_(std::move(entries)) {
  require(!labels_.empty(), "DensityMatrix: empty register");
  require_distinct(labels_, "DensityMatrix");
  require(entries_.size() == dim_ * dim_, "DensityMatrix: entry count must be 2^n x 2^n");
  for (const auto& e : entries_) require(finite(e), "DensityMatrix: non-finite entry");
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      require(std::abs(at(r, c) - std::conj(at(c, r))) < kStateTol,
              "DensityMatrix: matrix is not Hermitian");
  require(std::abs(trace() - Amplitude(1.0)) < kStateTol, "DensityMatrix: trace is not 1");
  require(min_eigenvalue_hermitian(entries_, dim_) >= -kStateTol,
          "DensityMatrix: matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::from_pure(const StateVector& s) {
  const std::size_t d = s.dim();
  std::vector<Amplitude> e(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) e[r * d + c] = s.amp(r) * std::conj(s.amp(c));
  return DensityMatrix(s.labels(), std::move(e));
}

DensityMatrix DensityMatrix::mixture(std::span<const std::pair<double, StateVector>> parts) {
  require(!parts.empty(), "mixture: no components");
  const std::size_t d = parts.front().second.dim();
  std::vector<Amplitude> e(d * d, 0.0);
  for (const auto& [w, s] : parts) {
    require(s.dim() == d, "mixture: mismatched dimensions");
    require(w >= -kBranchFloor, "mixture: negative weight");
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) e[r * d + c] += w * s.amp(r) * std::conj(s.amp(c));
  }
  return DensityMatrix(parts.front().second.labels(), std::move(e));
}

Amplitude DensityMatrix::trace() const {
  Amplitude t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double DensityMatrix::purity() const {
  double p = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) p += std::norm(at(r, c));
  return p;
}

// ---------------------------------------------------------------------------
// GateMatrix

GateMatrix::GateMatrix(std::size_t dim, std::vector<Amplitude> entries, Validate v)
    : dim_(dim), entries_(std::move(entries)), validated_(v == Validate::yes) {
  require(dim_ == 2 || dim_ == 4, "GateMatrix: dimension must be 2 or 4");
  require(entries_.size() == dim_ * dim_, "GateMatrix: wrong entry count");
  for (const auto& e : entries_) require(finite(e), "GateMatrix: non-finite entry");
  if (validated_)
    require(unitarity_deviation() < kStateTol, "GateMatrix: matrix is not unitary");
}

double GateMatrix::unitarity_deviation() const {
  double dev = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      Amplitude s = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) s += at(r, k) * std::conj(at(c, k));
      dev = std::max(dev, std::abs(s - (r == c ? Amplitude(1.0) : Amplitude(0.0))));
    }
  }
  return dev;
}

GateMatrix GateMatrix::adjoint() const {
  std::vector<Amplitude> e(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) e[r * dim_ + c] = std::conj(at(c, r));
  return GateMatrix(dim_, std::move(e), validated_ ? Validate::yes : Validate::no);
}

GateMatrix GateMatrix::operator-() const {
  std::vector<Amplitude> e(entries_);
  for (auto& v : e) v = -v;
  return GateMatrix(dim_, std::move(e), validated_ ? Validate::yes : Validate::no);
}

GateMatrix operator*(const GateMatrix& lhs, const GateMatrix& rhs) {
  require(lhs.dim() == rhs.dim(), "GateMatrix: dimension mismatch in product");
  const std::size_t d = lhs.dim();
  std::vector<Amplitude> e(d * d, 0.0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t c = 0; c < d; ++c) e[r * d + c] += lhs.at(r, k) * rhs.at(k, c);
  const auto v = (lhs.validated() && rhs.validated()) ? GateMatrix::Validate::yes
                                                      : GateMatrix::Validate::no;
  return GateMatrix(d, std::move(e), v);
}

namespace gates {

GateMatrix identity2() { return GateMatrix(2, {1, 0, 0, 1}); }

GateMatrix identity4() {
  return GateMatrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
}

GateMatrix pauli_x() { return GateMatrix(2, {0, 1, 1, 0}); }

GateMatrix pauli_z() { return GateMatrix(2, {1, 0, 0, -1}); }

GateMatrix pauli_iy() { return GateMatrix(2, {0, -1, 1, 0}); }

GateMatrix sigma_z() { return pauli_z(); }

GateMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return GateMatrix(2, {s, s, s, -s});
}

GateMatrix cnot() {
  return GateMatrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

}  // namespace gates

// ---------------------------------------------------------------------------
// MeasurementBasis

MeasurementBasis::MeasurementBasis(std::vector<QubitLabel> subsystem,
                                   std::vector<std::vector<Amplitude>> vectors)
    : subsystem_(std::move(subsystem)), vectors_(std::move(vectors)) {
  require(subsystem_.size() == 1 || subsystem_.size() == 2,
          "MeasurementBasis: subsystem must have 1 or 2 qubits");
  require_distinct(subsystem_, "MeasurementBasis");
  const std::size_t d = std::size_t{1} << subsystem_.size();
  require(vectors_.size() == d, "MeasurementBasis: basis must span the subsystem space");
  for (const auto& v : vectors_) {
    require(v.size() == d, "MeasurementBasis: wrong vector dimension");
    for (const auto& a : v) require(finite(a), "MeasurementBasis: non-finite amplitude");
  }
  for (std::size_t i = 0; i < d; ++i) {
    require(std::abs(norm_sq(vectors_[i]) - 1.0) < kStateTol,
            "MeasurementBasis: vector is not normalized");
    for (std::size_t j = i + 1; j < d; ++j)
      require(std::abs(inner(vectors_[i], vectors_[j])) < kStateTol,
              "MeasurementBasis: vectors are not orthogonal");
  }
}

MeasurementBasis MeasurementBasis::bell(QubitLabel first, QubitLabel second) {
  const double s = 1.0 / std::sqrt(2.0);
  return MeasurementBasis({std::move(first), std::move(second)},
                          {{s, 0, 0, s}, {s, 0, 0, -s}, {0, s, s, 0}, {0, s, -s, 0}});
}

MeasurementBasis MeasurementBasis::computational(QubitLabel q) {
  return MeasurementBasis({std::move(q)}, {{1, 0}, {0, 1}});
}

MeasurementBasis MeasurementBasis::diagonal(QubitLabel q) {
  const double s = 1.0 / std::sqrt(2.0);
  return MeasurementBasis({std::move(q)}, {{s, s}, {s, -s}});
}

// ---------------------------------------------------------------------------
// Operations

StateVector tensor(const StateVector& x, const StateVector& y) {
  for (const auto& l : y.labels())
    require(!x.has_label(l), "tensor: overlapping qubit label '" + l.name + "'");
  std::vector<QubitLabel> labels(x.labels());
  labels.insert(labels.end(), y.labels().begin(), y.labels().end());
  std::vector<Amplitude> amps(x.dim() * y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) amps[i * y.dim() + j] = x.amp(i) * y.amp(j);
  return StateVector(std::move(labels), std::move(amps));
}

StateVector apply_gate(const StateVector& s, const GateMatrix& g,
                       const std::vector<QubitLabel>& targets) {
  require((std::size_t{1} << targets.size()) == g.dim(),
          "apply_gate: target count does not match gate dimension");
  if (!g.validated())
    require(g.unitarity_deviation() < kStateTol, "apply_gate: gate is not unitary");
  const auto pos = bit_positions(s.labels(), targets);
  require_distinct(targets, "apply_gate");
  const std::size_t gd = g.dim();
  std::vector<Amplitude> amps(s.amps().begin(), s.amps().end());
  std::vector<std::size_t> idx(gd);
  std::vector<Amplitude> in(gd), out(gd);
  for (std::size_t base : rest_indices(s.num_qubits(), pos)) {
    for (std::size_t sub = 0; sub < gd; ++sub) {
      idx[sub] = base | scatter(sub, pos);
      in[sub] = amps[idx[sub]];
    }
    for (std::size_t r = 0; r < gd; ++r) {
      Amplitude acc = 0.0;
      for (std::size_t c = 0; c < gd; ++c) acc += g.at(r, c) * in[c];
      out[r] = acc;
    }
    for (std::size_t sub = 0; sub < gd; ++sub) amps[idx[sub]] = out[sub];
  }
  return StateVector(s.labels(), std::move(amps));
}

std::vector<MeasurementBranch> measure_all(const StateVector& s, const MeasurementBasis& basis) {
  const auto pos = bit_positions(s.labels(), basis.subsystem());
  std::vector<QubitLabel> remaining;
  for (const auto& l : s.labels()) {
    if (std::find(basis.subsystem().begin(), basis.subsystem().end(), l) ==
        basis.subsystem().end())
      remaining.push_back(l);
  }
  const auto rests = rest_indices(s.num_qubits(), pos);
  const std::size_t sd = basis.size();

  std::vector<MeasurementBranch> branches;
  branches.reserve(sd);
  for (std::size_t o = 0; o < sd; ++o) {
    const auto v = basis.vector(o);
    // <v| applied to the measured qubits leaves an unnormalized state of the
    // remaining ones.
    std::vector<Amplitude> residual(rests.size(), 0.0);
    for (std::size_t r = 0; r < rests.size(); ++r)
      for (std::size_t sub = 0; sub < sd; ++sub)
        residual[r] += std::conj(v[sub]) * s.amp(rests[r] | scatter(sub, pos));
    const double p = norm_sq(residual);

    MeasurementBranch br;
    br.outcome = static_cast<int>(o);
    if (p < kBranchFloor) {
      br.probability = 0.0;
    } else {
      br.probability = p;
      if (!remaining.empty()) {
        const double inv = 1.0 / std::sqrt(p);
        for (auto& a : residual) a *= inv;
        br.collapsed = StateVector(remaining, std::move(residual));
      }
    }
    branches.push_back(std::move(br));
  }
  return branches;
}

MeasurementBranch measure_sampled(const StateVector& s, const MeasurementBasis& basis,
                                  RandomStream& stream) {
  auto branches = measure_all(s, basis);
  std::vector<double> probs(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) probs[i] = branches[i].probability;
  return std::move(branches[sample_index(probs, stream)]);
}

std::size_t sample_index(std::span<const double> probabilities, RandomStream& stream) {
  const double u = stream.next_unit();
  double cum = 0.0;
  std::size_t last_live = probabilities.size();
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] < kBranchFloor) continue;
    last_live = i;
    cum += probabilities[i];
    if (u < cum) return i;
  }
  if (last_live == probabilities.size())
    throw std::invalid_argument("sample_index: no branch has positive probability");
  return last_live;  // u landed in the rounding gap above the final cumulative
}

DensityMatrix partial_trace(const StateVector& s, const std::vector<QubitLabel>& keep) {
  require(!keep.empty(), "partial_trace: keep list must not be empty");
  require_distinct(keep, "partial_trace");
  const auto pos = bit_positions(s.labels(), keep);
  const auto rests = rest_indices(s.num_qubits(), pos);
  const std::size_t d = std::size_t{1} << keep.size();
  std::vector<Amplitude> e(d * d, 0.0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t rest : rests)
        e[r * d + c] += s.amp(rest | scatter(r, pos)) * std::conj(s.amp(rest | scatter(c, pos)));
  return DensityMatrix(keep, std::move(e));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<QubitLabel>& keep) {
  require(!keep.empty(), "partial_trace: keep list must not be empty");
  require_distinct(keep, "partial_trace");
  const std::size_t n = checked_qubit_count(rho.dim(), "partial_trace");
  const auto pos = bit_positions(rho.labels(), keep);
  const auto rests = rest_indices(n, pos);
  const std::size_t d = std::size_t{1} << keep.size();
  std::vector<Amplitude> e(d * d, 0.0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t rest : rests)
        e[r * d + c] += rho.at(rest | scatter(r, pos), rest | scatter(c, pos));
  return DensityMatrix(keep, std::move(e));
}

double fidelity(const StateVector& x, const StateVector& y) {
  require(x.labels() == y.labels(), "fidelity: register mismatch");
  return std::norm(inner(x.amps(), y.amps()));
}

double fidelity(const DensityMatrix& rho, const StateVector& y) {
  require(rho.labels() == y.labels(), "fidelity: register mismatch");
  Amplitude acc = 0.0;
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c)
      acc += std::conj(y.amp(r)) * rho.at(r, c) * y.amp(c);
  return acc.real();
}

std::array<Amplitude, 4> pauli_decompose(const GateMatrix& g) {
  require(g.dim() == 2, "pauli_decompose: gate must be 2x2");
  const auto basis = std::array{gates::identity2(), gates::pauli_x(), gates::pauli_z(),
                                gates::pauli_iy()};
  std::array<Amplitude, 4> k{};
  for (std::size_t i = 0; i < 4; ++i) {
    // k_i = tr(B_i† g) / tr(B_i† B_i), and every basis element has norm 2.
    Amplitude t = 0.0;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) t += std::conj(basis[i].at(c, r)) * g.at(c, r);
    k[i] = t / 2.0;
  }
  return k;
}

GateMatrix pauli_reconstruct(const std::array<Amplitude, 4>& k) {
  const auto basis = std::array{gates::identity2(), gates::pauli_x(), gates::pauli_z(),
                                gates::pauli_iy()};
  std::vector<Amplitude> e(4, 0.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) e[j] += k[i] * basis[i].at(j / 2, j % 2);
  return GateMatrix(2, std::move(e), GateMatrix::Validate::no);
}

}  // namespace qot
