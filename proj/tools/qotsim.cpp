// qotsim: command-line front end for the p-Rabin qubit oblivious-transfer
// simulator. Subcommands cover analytic and Monte Carlo teleportation runs,
// qubit/bit OT experiments, the three cheating-sender attacks, channel
// establishment with decoy verification, and b^2 parameter sweeps.
//
// Exit codes: 0 success/accepted, 1 statistical disagreement or rejected
// sharing round, 2 usage or validation error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qot/attacks.hpp"
#include "qot/channel.hpp"
#include "qot/ot.hpp"
#include "qot/rng.hpp"
#include "qot/statevec.hpp"
#include "qot/teleport.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QOTSIM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable QOTSIM_SEED\n";
    }
  }
  return 1;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stod(item));
  }
  return values;
}

qot::InputQubit parse_state(const std::string& text) {
  using qot::InputQubit;
  if (text == "0" || text == "zero") return InputQubit::ket_zero();
  if (text == "1" || text == "one") return InputQubit::ket_one();
  if (text == "plus" || text == "+") return InputQubit::ket_plus();
  if (text == "minus" || text == "-") return InputQubit::ket_minus();

  const auto v = parse_double_list(text);
  qot::Amplitude alpha, beta;
  if (v.size() == 2) {
    alpha = v[0];
    beta = v[1];
  } else if (v.size() == 4) {
    alpha = {v[0], v[1]};
    beta = {v[2], v[3]};
  } else {
    throw std::invalid_argument(
        "state must be one of 0|1|plus|minus, two reals 'a,b', or four reals "
        "'re0,im0,re1,im1'");
  }
  const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (!(norm > 0.0)) throw std::invalid_argument("state amplitudes are all zero");
  if (std::abs(norm - 1.0) > 1e-9)
    std::cerr << "warning: input state renormalized (norm was " << norm << ")\n";
  return InputQubit(alpha / norm, beta / norm);
}

std::array<qot::Amplitude, 4> parse_pauli_coefficients(const std::string& text) {
  const auto v = parse_double_list(text);
  if (v.size() == 4) return {v[0], v[1], v[2], v[3]};
  if (v.size() == 8)
    return {qot::Amplitude{v[0], v[1]}, qot::Amplitude{v[2], v[3]}, qot::Amplitude{v[4], v[5]},
            qot::Amplitude{v[6], v[7]}};
  throw std::invalid_argument("--k expects 4 reals 'k1,k2,k3,k4' or 8 reals (re,im pairs)");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << text;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// --------------------------------------------------------------------------
// JSON serialization

json amp_json(qot::Amplitude a) { return json{{"re", a.real()}, {"im", a.imag()}}; }

json qubit_json(const qot::InputQubit& q) {
  return json{{"alpha", amp_json(q.alpha())}, {"beta", amp_json(q.beta())}};
}

json state_json(const qot::StateVector& s) {
  json labels = json::array();
  for (const auto& l : s.labels()) labels.push_back(l.name);
  json amps = json::array();
  for (const auto& a : s.amps()) amps.push_back(amp_json(a));
  return json{{"labels", labels}, {"amps", amps}};
}

json density_json(const qot::DensityMatrix& rho) {
  json labels = json::array();
  for (const auto& l : rho.labels()) labels.push_back(l.name);
  json rows = json::array();
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < rho.dim(); ++c) row.push_back(amp_json(rho.at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"labels", labels}, {"entries", rows}};
}

json transcript_json(const qot::Transcript& t) {
  return json{{"seed", t.seed},
              {"b2", t.channel.b2()},
              {"input", qubit_json(t.input)},
              {"bm_outcome", qot::index_of(t.bm_outcome)},
              {"bm_probability", t.bm_probability},
              {"correction_applied", t.correction_applied},
              {"m_outcome", t.m_outcome},
              {"success", t.success},
              {"bob_state", qubit_json(t.bob_state)},
              {"fidelity", t.recovered_fidelity}};
}

json joint_json(const qot::JointEMDistribution& j) {
  return json{{"p", {{j.p[0][0], j.p[0][1]}, {j.p[1][0], j.p[1][1]}}},
              {"mutual_information", j.mutual_information()}};
}

json outcome_json(const qot::AttackOutcome& o) {
  json info{{"description", o.alice_information.description}};
  info["distinguishing_probability"] = o.alice_information.distinguishing_probability
                                           ? json(*o.alice_information.distinguishing_probability)
                                           : json(nullptr);
  if (o.alice_information.controlled_success_probability)
    info["controlled_success_probability"] = *o.alice_information.controlled_success_probability;
  if (o.alice_information.e_collapse_probabilities)
    info["e_collapse_probabilities"] = *o.alice_information.e_collapse_probabilities;
  if (o.alice_information.joint_em_computational)
    info["joint_em_computational"] = joint_json(*o.alice_information.joint_em_computational);
  if (o.alice_information.joint_em_diagonal)
    info["joint_em_diagonal"] = joint_json(*o.alice_information.joint_em_diagonal);

  return json{{"bob_success_state",
               o.bob_success_state ? qubit_json(*o.bob_success_state) : json(nullptr)},
              {"bob_reduced_state",
               o.bob_reduced_state ? density_json(*o.bob_reduced_state) : json(nullptr)},
              {"post_success_joint_state",
               o.post_success_joint_state ? state_json(*o.post_success_joint_state)
                                          : json(nullptr)},
              {"fidelity_to_intended", o.fidelity_to_intended},
              {"bob_believes_success", o.bob_believes_success},
              {"success_probability", o.success_probability},
              {"bell_probability", o.bell_probability},
              {"alice_information", std::move(info)}};
}

// --------------------------------------------------------------------------
// teleport

struct BranchStats {
  double analytic = 0.0;
  std::size_t count = 0;
};

int cmd_teleport(double b2, const std::string& state, long long trials, std::uint64_t seed,
                 const std::string& format, const std::string& out) {
  const auto p = qot::ChannelParams::from_b2(b2);
  const auto q = parse_state(state);

  if (trials == 1) {
    const auto t = qot::run_sampled(p, q, seed);
    emit(transcript_json(t).dump(2) + "\n", out);
    return kExitOk;
  }

  const auto tree = qot::run_analytic(p, q);
  std::array<BranchStats, 8> stats{};
  for (std::size_t i = 0; i < 8; ++i) stats[i].analytic = tree.branches[i].probability;

  std::size_t successes = 0;
  for (long long t = 0; t < trials; ++t) {
    const auto run = qot::run_sampled(p, q, qot::derive_seed(seed, static_cast<std::uint64_t>(t)));
    const std::size_t slot =
        static_cast<std::size_t>(qot::index_of(run.bm_outcome) - 1) * 2 +
        static_cast<std::size_t>(run.m_outcome);
    ++stats[slot].count;
    if (run.success) ++successes;
  }

  const double n = static_cast<double>(trials);
  bool agrees = true;
  json branches = json::array();
  for (std::size_t i = 0; i < 8; ++i) {
    const double freq = static_cast<double>(stats[i].count) / n;
    const double pa = stats[i].analytic;
    const double sigma = std::sqrt(pa * (1.0 - pa) / n);
    const bool ok = pa == 0.0 ? stats[i].count == 0 : std::abs(freq - pa) <= 4.0 * sigma;
    agrees = agrees && ok;
    branches.push_back(json{{"bm_outcome", static_cast<int>(i / 2) + 1},
                            {"m_outcome", static_cast<int>(i % 2)},
                            {"analytic_p", pa},
                            {"empirical_p", freq},
                            {"stderr", std::sqrt(freq * (1.0 - freq) / n)}});
  }

  if (format == "csv") {
    std::ostringstream csv;
    csv << "bm_outcome,m_outcome,analytic_p,empirical_p,stderr\n";
    for (const auto& row : branches)
      csv << row["bm_outcome"].get<int>() << ',' << row["m_outcome"].get<int>() << ','
          << csv_number(row["analytic_p"].get<double>()) << ','
          << csv_number(row["empirical_p"].get<double>()) << ','
          << csv_number(row["stderr"].get<double>()) << '\n';
    emit(csv.str(), out);
  } else {
    json doc{{"command", "teleport"},
             {"b2", b2},
             {"input", qubit_json(q)},
             {"seed", seed},
             {"trials", trials},
             {"analytic",
              json{{"branches", branches}, {"success_probability", tree.success_probability()}}},
             {"empirical_success_rate", static_cast<double>(successes) / n},
             {"agrees_within_4_sigma", agrees}};
    emit(doc.dump(2) + "\n", out);
  }
  return agrees ? kExitOk : kExitDisagreement;
}

// --------------------------------------------------------------------------
// ot

int cmd_ot(double b2, const std::string& mode, const std::string& state, int bit,
           const std::string& encoding, long long repeat, long long trials, std::uint64_t seed,
           const std::string& format, const std::string& out) {
  const auto p = qot::ChannelParams::from_b2(b2);
  const bool bit_mode = mode == "bit";
  const auto enc = encoding == "computational" ? qot::BitEncoding::computational()
                                               : qot::BitEncoding::plus_minus();
  const auto q = parse_state(state);

  std::uint64_t draw = 0;
  std::size_t learned = 0, decoded_ok = 0;
  for (long long t = 0; t < trials; ++t) {
    const auto r = bit_mode ? qot::ot_bit(p, bit, enc, qot::derive_seed(seed, draw++))
                            : qot::ot_qubit(p, q, qot::derive_seed(seed, draw++));
    if (r.bob_learned) {
      ++learned;
      if (bit_mode && r.decoded_bit && *r.decoded_bit == bit) ++decoded_ok;
    }
  }
  const double n = static_cast<double>(trials);
  const double learn_rate = static_cast<double>(learned) / n;
  const bool non_oblivious = bit_mode && enc.is_computational();
  const double analytic_rate = non_oblivious ? 1.0 : 2.0 * p.b2();

  bool agrees;
  if (non_oblivious) {
    agrees = learned == static_cast<std::size_t>(trials);
  } else {
    const double sigma = std::sqrt(analytic_rate * (1.0 - analytic_rate) / n);
    agrees = std::abs(learn_rate - analytic_rate) <= 4.0 * sigma;
  }

  // Repeated-transfer curve: per n, the fraction of episodes in which at
  // least one of n runs of the same message succeeds, with the closed form
  // 1 - (1 - rate)^n alongside. The per-run rate is 2|b|^2 except on the
  // deterministic computational path, where it is 1.
  json curve = json::array();
  for (long long reps = 1; reps <= repeat; ++reps) {
    const double closed =
        non_oblivious ? 1.0 : qot::repeated_ot_probability(p, static_cast<std::size_t>(reps));
    std::size_t hits = 0;
    for (long long e = 0; e < trials; ++e) {
      bool any = false;
      for (long long r = 0; r < reps && !any; ++r) {
        const auto res = bit_mode ? qot::ot_bit(p, bit, enc, qot::derive_seed(seed, draw++))
                                  : qot::ot_qubit(p, q, qot::derive_seed(seed, draw++));
        any = res.bob_learned;
      }
      if (any) ++hits;
    }
    const double freq = static_cast<double>(hits) / n;
    const double sigma = std::sqrt(closed * (1.0 - closed) / n);
    if (!(closed == 1.0 ? hits == static_cast<std::size_t>(trials)
                        : std::abs(freq - closed) <= 4.0 * sigma))
      agrees = false;
    curve.push_back(json{{"n", reps},
                         {"closed_form", closed},
                         {"empirical", freq},
                         {"stderr", std::sqrt(freq * (1.0 - freq) / n)},
                         {"episodes", trials}});
  }

  if (format == "csv") {
    std::ostringstream csv;
    csv << "n,closed_form,empirical,stderr,episodes\n";
    for (const auto& row : curve)
      csv << row["n"].get<long long>() << ',' << csv_number(row["closed_form"].get<double>())
          << ',' << csv_number(row["empirical"].get<double>()) << ','
          << csv_number(row["stderr"].get<double>()) << ',' << row["episodes"].get<long long>()
          << '\n';
    emit(csv.str(), out);
  } else {
    json doc{{"command", "ot"},
             {"mode", mode},
             {"b2", b2},
             {"seed", seed},
             {"trials", trials},
             {"learn_rate", learn_rate},
             {"analytic_learn_rate", analytic_rate},
             {"curve", curve},
             {"agrees_within_4_sigma", agrees}};
    if (bit_mode) {
      doc["bit"] = bit;
      doc["encoding"] = encoding;
      doc["decode_accuracy"] =
          learned ? json(static_cast<double>(decoded_ok) / static_cast<double>(learned))
                  : json(nullptr);
      doc["non_oblivious_encoding"] = non_oblivious;
      if (non_oblivious)
        doc["note"] = "non-oblivious encoding: the BM result alone reveals the bit";
    } else {
      doc["input"] = qubit_json(q);
    }
    emit(doc.dump(2) + "\n", out);
  }
  return agrees ? kExitOk : kExitDisagreement;
}

// --------------------------------------------------------------------------
// attack

int cmd_attack_fake_bm(double b2, const std::string& state, int true_i, int reported_j,
                       const std::string& out) {
  const auto p = qot::ChannelParams::from_b2(b2);
  const auto q = parse_state(state);
  const qot::FakeBmConfig cfg{qot::bell_outcome_from_index(true_i),
                              qot::bell_outcome_from_index(reported_j)};
  const auto outcome = qot::fake_bm_attack(p, q, cfg);
  json doc{{"command", "attack"}, {"attack", "fake-bm"},      {"b2", b2},
           {"input", qubit_json(q)}, {"true_outcome", true_i}, {"reported_outcome", reported_j},
           {"outcome", outcome_json(outcome)}};
  emit(doc.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_attack_pauli(double b2, const std::string& state, const std::string& k_text,
                     const std::string& out) {
  const auto p = qot::ChannelParams::from_b2(b2);
  const auto q = parse_state(state);
  const qot::PauliAttackConfig cfg{parse_pauli_coefficients(k_text)};
  const auto outcomes = qot::unitary_attack(p, q, cfg);

  bool honest = true;
  for (const auto& o : outcomes)
    if (o.bell_probability > 0.0 && o.fidelity_to_intended < 1.0 - 1e-9) honest = false;

  json arr = json::array();
  for (const auto& o : outcomes) arr.push_back(outcome_json(o));
  json doc{{"command", "attack"},
           {"attack", "pauli"},
           {"b2", b2},
           {"input", qubit_json(q)},
           {"k", json::array()},
           {"honest_equivalent", honest},
           {"outcomes", arr}};
  for (const auto& k : cfg.k) doc["k"].push_back(amp_json(k));
  if (honest) doc["note"] = "equivalent to honest protocol";
  emit(doc.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_attack_entangle(double b2, const std::string& state, const std::string& out) {
  const auto p = qot::ChannelParams::from_b2(b2);
  const auto q = parse_state(state);
  const auto outcome = qot::entangle_measure_attack(p, q);
  json doc{{"command", "attack"},
           {"attack", "entangle"},
           {"b2", b2},
           {"input", qubit_json(q)},
           {"outcome", outcome_json(outcome)}};
  emit(doc.dump(2) + "\n", out);
  return kExitOk;
}

// --------------------------------------------------------------------------
// channel

int cmd_channel(double b2, long long n, long long m, long long k, const std::string& eve,
                std::uint64_t seed, const std::string& out) {
  const auto p = qot::ChannelParams::from_b2(b2);
  qot::SharingConfig cfg;
  cfg.pairs_to_keep = static_cast<std::size_t>(n);
  cfg.pairs_to_test = static_cast<std::size_t>(m);
  cfg.decoy_count = static_cast<std::size_t>(k);
  cfg.eavesdropper = eve == "intercept-resend" ? qot::SharingConfig::Eavesdropper::intercept_resend
                                               : qot::SharingConfig::Eavesdropper::none;
  cfg.seed = seed;
  const auto report = qot::share_channel(p, cfg);

  json doc{{"command", "channel"},
           {"b2", b2},
           {"n", n},
           {"m", m},
           {"k", k},
           {"eavesdropper", eve},
           {"seed", seed},
           {"report", json{{"decoy_error_count", report.decoy_error_count},
                           {"decoy_tests", report.decoy_tests},
                           {"eta_outcomes", report.eta_outcomes},
                           {"accepted", report.accepted}}}};
  emit(doc.dump(2) + "\n", out);
  return report.accepted ? kExitOk : kExitDisagreement;
}

// --------------------------------------------------------------------------
// sweep

int cmd_sweep(const std::string& grid_text, const std::string& state, long long trials,
              std::uint64_t seed, const std::string& out) {
  const auto grid = parse_double_list(grid_text);
  if (grid.empty()) throw std::invalid_argument("sweep: grid must not be empty");
  for (double b2 : grid)
    if (!(b2 > 0.0 && b2 < 0.5))
      throw std::invalid_argument("sweep: every grid value must lie in (0, 0.5)");
  const auto q = parse_state(state);

  std::ostringstream csv;
  csv << "b2,analytic_p,empirical_p,stderr,trials\n";
  bool agrees = true;
  const double n = static_cast<double>(trials);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto p = qot::ChannelParams::from_b2(grid[g]);
    std::size_t successes = 0;
    for (long long t = 0; t < trials; ++t) {
      const std::uint64_t run_seed =
          qot::derive_seed(seed, (static_cast<std::uint64_t>(g) << 32) + static_cast<std::uint64_t>(t));
      if (qot::run_sampled(p, q, run_seed).success) ++successes;
    }
    const double analytic = 2.0 * grid[g];
    const double freq = static_cast<double>(successes) / n;
    const double sigma = std::sqrt(analytic * (1.0 - analytic) / n);
    if (std::abs(freq - analytic) > 4.0 * sigma) agrees = false;
    csv << csv_number(grid[g]) << ',' << csv_number(analytic) << ',' << csv_number(freq) << ','
        << csv_number(std::sqrt(freq * (1.0 - freq) / n)) << ',' << trials << '\n';
  }
  emit(csv.str(), out);
  return agrees ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-Rabin qubit oblivious transfer over probabilistic teleportation"};
  app.require_subcommand(1);

  const std::uint64_t env_seed = default_seed();
  double b2 = 0.2;
  std::string state = "plus";
  std::string format = "json";
  std::string out;
  std::uint64_t seed = env_seed;

  // teleport
  auto* tele = app.add_subcommand("teleport", "analytic outcome tree and sampled runs");
  long long tele_trials = 1;
  tele->add_option("--b2", b2, "channel parameter |b|^2, in (0, 0.5)")->required();
  tele->add_option("--state", state, "message qubit: 0|1|plus|minus or amplitudes");
  tele->add_option("--trials", tele_trials, "number of sampled runs")->check(CLI::PositiveNumber);
  tele->add_option("--seed", seed, "master seed (default: QOTSIM_SEED or 1)");
  tele->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  tele->add_option("--out", out, "write primary output to this file");

  // ot
  auto* ot = app.add_subcommand("ot", "oblivious transfer of a qubit or an encoded bit");
  std::string ot_mode = "qubit", ot_encoding = "plus-minus";
  int ot_bit_value = 0;
  long long ot_repeat = 1, ot_trials = 10000;
  ot->add_option("--b2", b2)->required();
  ot->add_option("--mode", ot_mode)->check(CLI::IsMember({"qubit", "bit"}));
  ot->add_option("--state", state, "message qubit (qubit mode)");
  ot->add_option("--bit", ot_bit_value, "bit to transfer (bit mode)")
      ->check(CLI::IsMember({0, 1}));
  ot->add_option("--encoding", ot_encoding)
      ->check(CLI::IsMember({"plus-minus", "computational"}));
  ot->add_option("--repeat", ot_repeat, "largest n of the repeated-transfer curve")
      ->check(CLI::PositiveNumber);
  ot->add_option("--trials", ot_trials, "runs per rate estimate / episodes per curve point")
      ->check(CLI::PositiveNumber);
  ot->add_option("--seed", seed);
  ot->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  ot->add_option("--out", out);

  // attack
  auto* attack = app.add_subcommand("attack", "cheating-sender strategies");
  attack->require_subcommand(1);
  int true_i = 1, reported_j = 1;
  std::string k_text = "1,0,0,0";
  auto* fake = attack->add_subcommand("fake-bm", "announce a false measurement result");
  fake->add_option("--b2", b2)->required();
  fake->add_option("--true", true_i, "measured Bell outcome (1..4)")->required();
  fake->add_option("--reported", reported_j, "announced Bell outcome (1..4)")->required();
  fake->add_option("--state", state);
  fake->add_option("--out", out);
  auto* pauli = attack->add_subcommand("pauli", "apply a unitary to particle A before the BM");
  pauli->add_option("--b2", b2)->required();
  pauli->add_option("--k", k_text, "coefficients of k1 I + k2 X + k3 Z + k4 iY")->required();
  pauli->add_option("--state", state);
  pauli->add_option("--out", out);
  auto* entangle = attack->add_subcommand("entangle", "CNOT a probe qubit onto particle A");
  entangle->add_option("--b2", b2)->required();
  entangle->add_option("--state", state);
  entangle->add_option("--out", out);

  // channel
  auto* channel = app.add_subcommand("channel", "decoy-verified channel establishment");
  long long ch_n = 4, ch_m = 2, ch_k = 20;
  std::string eve = "none";
  channel->add_option("--b2", b2)->required();
  channel->add_option("--n", ch_n, "pairs to keep")->check(CLI::PositiveNumber);
  channel->add_option("--m", ch_m, "pairs sacrificed to the basis test")
      ->check(CLI::PositiveNumber);
  channel->add_option("--k", ch_k, "decoy count")->check(CLI::PositiveNumber);
  channel->add_option("--eavesdropper", eve)
      ->check(CLI::IsMember({"none", "intercept-resend"}));
  channel->add_option("--seed", seed);
  channel->add_option("--out", out);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "success probability across a b^2 grid (CSV)");
  std::string grid_text;
  long long sweep_trials = 10000;
  sweep->add_option("--grid", grid_text, "comma-separated b^2 values")->required();
  sweep->add_option("--state", state);
  sweep->add_option("--trials", sweep_trials)->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed);
  sweep->add_option("--out", out);

  try {
    app.parse(argc, argv);
    if (tele->parsed())
      return cmd_teleport(b2, state, tele_trials, seed, format, out);
    if (ot->parsed())
      return cmd_ot(b2, ot_mode, state, ot_bit_value, ot_encoding, ot_repeat, ot_trials, seed,
                    format, out);
    if (fake->parsed()) return cmd_attack_fake_bm(b2, state, true_i, reported_j, out);
    if (pauli->parsed()) return cmd_attack_pauli(b2, state, k_text, out);
    if (entangle->parsed()) return cmd_attack_entangle(b2, state, out);
    if (channel->parsed()) return cmd_channel(b2, ch_n, ch_m, ch_k, eve, seed, out);
    if (sweep->parsed()) return cmd_sweep(grid_text, state, sweep_trials, seed, out);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return kExitOk;
    }
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
