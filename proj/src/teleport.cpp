#include "qot/teleport.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qot {
namespace {

bool finite(Amplitude a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

[[noreturn]] void reject(const std::string& type, const std::string& constraint) {
  throw std::invalid_argument(type + ": " + constraint + " violated");
}

}  // namespace

BellOutcome bell_outcome_from_index(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("BellOutcome: index must be in 1..4");
  return static_cast<BellOutcome>(i);
}

// ---------------------------------------------------------------------------
// ChannelParams / InputQubit

ChannelParams::ChannelParams(Amplitude a, Amplitude b) : a_(a), b_(b) {
  if (!finite(a) || !finite(b)) reject("ChannelParams", "finite coefficients");
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) >= kAlgebraTol)
    reject("ChannelParams", "|a|^2 + |b|^2 = 1");
  if (!(std::abs(b) > 0.0)) reject("ChannelParams", "|b| > 0");
  if (!(std::abs(a) > std::abs(b))) reject("ChannelParams", "|a| > |b|");
}

ChannelParams ChannelParams::from_b2(double b2) {
  if (!(b2 > 0.0 && b2 < 0.5))
    throw std::invalid_argument(
        "ChannelParams: b^2 must lie in (0, 0.5) so that |a| > |b| > 0");
  return ChannelParams(std::sqrt(1.0 - b2), std::sqrt(b2));
}

InputQubit::InputQubit(Amplitude alpha, Amplitude beta) : alpha_(alpha), beta_(beta) {
  if (!finite(alpha) || !finite(beta)) reject("InputQubit", "finite amplitudes");
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) >= kAlgebraTol)
    reject("InputQubit", "|alpha|^2 + |beta|^2 = 1");
}

InputQubit InputQubit::ket_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return InputQubit(s, s);
}

InputQubit InputQubit::ket_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return InputQubit(s, -s);
}

StateVector InputQubit::to_state(QubitLabel label) const {
  return StateVector::single_qubit(std::move(label), alpha_, beta_);
}

double fidelity(const InputQubit& x, const InputQubit& y) {
  return std::norm(std::conj(x.alpha()) * y.alpha() + std::conj(x.beta()) * y.beta());
}

// ---------------------------------------------------------------------------
// Channel state and Bell decomposition

StateVector channel_state(const ChannelParams& p) { return channel_state(p, kLabelA, kLabelB); }

StateVector channel_state(const ChannelParams& p, QubitLabel first, QubitLabel second) {
  return StateVector({std::move(first), std::move(second)}, {p.a(), 0.0, 0.0, p.b()});
}

std::array<BellBranch, 4> bell_decompose(const ChannelParams& p, const InputQubit& q) {
  const Amplitude aa = q.alpha() * p.a();
  const Amplitude ab = q.alpha() * p.b();
  const Amplitude ba = q.beta() * p.a();
  const Amplitude bb = q.beta() * p.b();
  const double pr12 = 0.5 * (std::norm(aa) + std::norm(bb));
  const double pr34 = 0.5 * (std::norm(ba) + std::norm(ab));
  const double n12 = 1.0 / std::sqrt(2.0 * pr12);
  const double n34 = 1.0 / std::sqrt(2.0 * pr34);
  return {
      BellBranch{BellOutcome::psi1, pr12, InputQubit(aa * n12, bb * n12)},
      BellBranch{BellOutcome::psi2, pr12, InputQubit(aa * n12, -bb * n12)},
      BellBranch{BellOutcome::psi3, pr34, InputQubit(ba * n34, ab * n34)},
      BellBranch{BellOutcome::psi4, pr34, InputQubit(ba * n34, -ab * n34)},
  };
}

// ---------------------------------------------------------------------------
// Correction operators and their algebra

namespace {

// Assemble a 4x4 gate from 2x2 blocks [[tl, tr], [bl, br]]; a null block is
// zero.
GateMatrix from_blocks(const GateMatrix* tl, const GateMatrix* tr, const GateMatrix* bl,
                       const GateMatrix* br) {
  std::vector<Amplitude> e(16, 0.0);
  const auto put = [&e](const GateMatrix* blk, std::size_t ro, std::size_t co) {
    if (!blk) return;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) e[(ro + r) * 4 + (co + c)] = blk->at(r, c);
  };
  put(tl, 0, 0);
  put(tr, 0, 2);
  put(bl, 2, 0);
  put(br, 2, 2);
  return GateMatrix(4, std::move(e));
}

GateMatrix extraction_block(const ChannelParams& p) {
  const Amplitude r = p.b() / p.a();
  const double s = std::sqrt(1.0 - std::norm(r));
  return GateMatrix(2, {r, s, s, -std::conj(r)});
}

}  // namespace

GateMatrix correction_unitary(BellOutcome i, const ChannelParams& p) {
  const GateMatrix a = extraction_block(p);
  const GateMatrix z = gates::sigma_z();
  const GateMatrix nz = -gates::sigma_z();
  switch (i) {
    case BellOutcome::psi1: return from_blocks(&a, nullptr, nullptr, &z);
    case BellOutcome::psi2: return from_blocks(&a, nullptr, nullptr, &nz);
    case BellOutcome::psi3: return from_blocks(nullptr, &z, &a, nullptr);
    case BellOutcome::psi4: return from_blocks(nullptr, &nz, &a, nullptr);
  }
  throw std::logic_error("correction_unitary: bad outcome");
}

std::array<GateMatrix, 3> v_matrices() {
  const GateMatrix id = gates::identity2();
  const GateMatrix nid = -gates::identity2();
  return {
      from_blocks(&id, nullptr, nullptr, &nid),  // V1
      from_blocks(nullptr, &id, &id, nullptr),   // V2
      from_blocks(nullptr, &id, &nid, nullptr),  // V3
  };
}

GateMatrix w_entry(BellOutcome j, BellOutcome i) {
  // U_k = R_k U_1 with R = (I, V1, V2, -V3); then W_{ji} = R_j R_i†.
  const auto v = v_matrices();
  const auto r_factor = [&v](BellOutcome o) -> GateMatrix {
    switch (o) {
      case BellOutcome::psi1: return gates::identity4();
      case BellOutcome::psi2: return v[0];
      case BellOutcome::psi3: return v[1];
      case BellOutcome::psi4: return -v[2];
    }
    throw std::logic_error("w_entry: bad outcome");
  };
  if (i == j) return gates::identity4();
  return r_factor(j) * r_factor(i).adjoint();
}

// ---------------------------------------------------------------------------
// Protocol runs

namespace {

// Post-measurement ancilla branches for one Bell outcome: tensors the |0>
// ancilla onto Bob's collapsed qubit, applies U_i and measures the ancilla.
std::vector<MeasurementBranch> ancilla_branches(const ChannelParams& p, BellOutcome i,
                                                const StateVector& bob) {
  const auto with_ancilla = tensor(bob, StateVector::basis_state({kLabelM}, 0));
  const auto corrected = apply_gate(with_ancilla, correction_unitary(i, p), {kLabelB, kLabelM});
  return measure_all(corrected, MeasurementBasis::computational(kLabelM));
}

std::optional<InputQubit> to_qubit(const std::optional<StateVector>& s) {
  if (!s) return std::nullopt;
  return InputQubit(s->amp(0), s->amp(1));
}

}  // namespace

double OutcomeTree::success_probability() const {
  double total = 0.0;
  for (const auto& br : branches)
    if (br.m_outcome == 0) total += br.probability;
  return total;
}

OutcomeTree run_analytic(const ChannelParams& p, const InputQubit& q) {
  const auto joint = tensor(q.to_state(kLabelC), channel_state(p));
  const auto bm = measure_all(joint, MeasurementBasis::bell(kLabelC, kLabelA));

  OutcomeTree tree;
  tree.branches.reserve(8);
  for (std::size_t o = 0; o < 4; ++o) {
    const BellOutcome outcome = kBellOutcomes[o];
    const double pr = bm[o].probability;
    for (const auto& mb : ancilla_branches(p, outcome, *bm[o].collapsed)) {
      tree.branches.push_back(OutcomeTree::Branch{outcome, pr, mb.outcome,
                                                  pr * mb.probability, to_qubit(mb.collapsed)});
    }
  }
  return tree;
}

Transcript run_sampled(const ChannelParams& p, const InputQubit& q, std::uint64_t seed) {
  RandomStream stream(seed);
  return run_sampled(p, q, seed, stream);
}

Transcript run_sampled(const ChannelParams& p, const InputQubit& q, std::uint64_t seed,
                       RandomStream& stream) {
  const auto joint = tensor(q.to_state(kLabelC), channel_state(p));
  const auto bm = measure_sampled(joint, MeasurementBasis::bell(kLabelC, kLabelA), stream);
  const BellOutcome outcome = kBellOutcomes[static_cast<std::size_t>(bm.outcome)];

  std::vector<MeasurementBranch> mb = ancilla_branches(p, outcome, *bm.collapsed);
  std::vector<double> probs{mb[0].probability, mb[1].probability};
  const std::size_t m = sample_index(probs, stream);

  const InputQubit bob = *to_qubit(mb[m].collapsed);
  return Transcript{
      seed,
      p,
      q,
      outcome,
      bm.probability,
      index_of(outcome),
      static_cast<int>(m),
      m == 0,
      bob,
      fidelity(bob, q),
  };
}

}  // namespace qot
