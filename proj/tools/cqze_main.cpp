// Command-line front end: single protocol runs, parameter sweeps, message
// sessions, and the switchable-mirror timing bound. All floating-point
// output goes through a fixed 12-significant-digit formatter so identical
// invocations are byte-identical.

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cqze/engine.hpp"
#include "cqze/metrics.hpp"
#include "cqze/noise.hpp"
#include "cqze/params.hpp"
#include "cqze/rng.hpp"
#include "cqze/session.hpp"
#include "cqze/timing.hpp"

#include "record_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct ProtocolFlags {
  int outer_cycles = 0;
  int inner_cycles = 0;
  double imperfection = 0.0;
  bool final_inner_chain = false;

  cqze::ProtocolParams params() const {
    auto p = cqze::ProtocolParams::nominal(outer_cycles, inner_cycles, imperfection);
    p.final_inner_chain = final_inner_chain;
    return p;
  }
};

void add_protocol_flags(CLI::App& cmd, ProtocolFlags& flags) {
  cmd.add_option("--M", flags.outer_cycles, "Number of big (outer) cycles")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--N", flags.inner_cycles, "Number of small (inner) cycles per big cycle")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--s", flags.imperfection,
                 "Rotator imperfection factor applied to both stages");
  cmd.add_flag("--final-inner-chain", flags.final_inner_chain,
               "Run an inner chain after the last outer splitter as well");
}

// Distributions (and standard errors when B > 0) for both of Bob's bits at
// one parameter point, plus the wrong-click mutual information at a given
// detector sensitivity.
struct PointResult {
  std::array<cqze::OutcomeDistribution, 2> dist;
  std::array<cqze::OutcomeDistribution, 2> std_error;
};

PointResult evaluate_point(const cqze::ProtocolParams& params, double noise_rate,
                           int trials, std::uint64_t seed) {
  PointResult out;
  if (noise_rate > 0.0) {
    const cqze::NoiseModel model{noise_rate, seed, trials};
    for (int bit : {0, 1}) {
      const auto mc = cqze::monte_carlo(params, bit, model);
      out.dist[bit] = mc.mean;
      out.std_error[bit] = mc.std_error;
    }
  } else {
    for (int bit : {0, 1}) out.dist[bit] = cqze::run_protocol(params, bit);
  }
  return out;
}

void emit(std::ostream& os, const std::vector<cqze::tools::RunRecord>& records,
          const std::string& format) {
  os << (format == "json" ? cqze::tools::to_json(records) : cqze::tools::to_csv(records));
}

std::string outcome_string(const std::vector<cqze::BitOutcome>& decoded) {
  std::string s;
  s.reserve(decoded.size());
  for (cqze::BitOutcome o : decoded) {
    s += o == cqze::BitOutcome::kErased ? 'e' : (o == cqze::BitOutcome::kOne ? '1' : '0');
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chained-quantum-Zeno counterfactual communication simulator"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read option defaults from an INI file");
  app.get_formatter()->column_width(34);

  const std::string format_help = "Output format";
  const auto format_check = CLI::IsMember({"csv", "json"});

  // ---- run ----------------------------------------------------------------
  auto* run_cmd = app.add_subcommand("run", "Compute the outcome distribution at one point");
  ProtocolFlags run_flags;
  int run_bob_bit = 0;
  double run_noise = 0.0;
  int run_trials = 10000;
  std::uint64_t run_seed = 0;
  std::string run_format = "csv";
  add_protocol_flags(*run_cmd, run_flags);
  run_cmd->add_option("--bob-bit", run_bob_bit, "Bob's bit: 0 passes, 1 blocks")
      ->required()
      ->check(CLI::Range(0, 1));
  run_cmd->add_option("--B", run_noise, "Channel noise rate per pass")
      ->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--trials", run_trials, "Monte Carlo trials when B > 0")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run_seed, "Random seed")->envname("RUN_SEED");
  run_cmd->add_option("--format", run_format, format_help)->check(format_check);

  // ---- sweep --------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a parameter grid into CSV/JSON");
  std::vector<int> sweep_outer, sweep_inner;
  std::vector<double> sweep_s{0.0}, sweep_noise{0.0}, sweep_eta{1.0};
  std::vector<int> sweep_bits{0, 1};
  int sweep_trials = 10000;
  std::uint64_t sweep_seed = 0;
  bool sweep_final_chain = false;
  bool sweep_force = false;
  std::string sweep_out, sweep_format = "csv";
  sweep_cmd->add_option("--M", sweep_outer, "Outer cycle counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--N", sweep_inner, "Inner cycle counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--s", sweep_s, "Imperfection factors")->delimiter(',');
  sweep_cmd->add_option("--B", sweep_noise, "Noise rates")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--eta", sweep_eta, "Detector sensitivities")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--bob-bit", sweep_bits, "Bob bits to emit rows for")
      ->delimiter(',')
      ->check(CLI::Range(0, 1));
  sweep_cmd->add_option("--trials", sweep_trials, "Monte Carlo trials when B > 0")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep_seed, "Random seed")->envname("RUN_SEED");
  sweep_cmd->add_flag("--final-inner-chain", sweep_final_chain,
                      "Run an inner chain after the last outer splitter as well");
  sweep_cmd->add_option("--out", sweep_out, "Output file path")->required();
  sweep_cmd->add_flag("--force", sweep_force, "Overwrite an existing output file");
  sweep_cmd->add_option("--format", sweep_format, format_help)->check(format_check);

  // ---- message ------------------------------------------------------------
  auto* msg_cmd = app.add_subcommand("message", "Transmit a bitstream end to end");
  ProtocolFlags msg_flags;
  std::string msg_bits;
  int msg_random_bits = 0;
  double msg_noise = 0.0;
  double msg_eta = 1.0;
  int msg_retries = 10;
  std::uint64_t msg_seed = 0;
  add_protocol_flags(*msg_cmd, msg_flags);
  auto* bits_opt =
      msg_cmd->add_option("--bits", msg_bits, "Bit string to send, e.g. 0101")
          ->check([](const std::string& s) -> std::string {
            if (s.empty()) return "bit string must be non-empty";
            for (char c : s) {
              if (c != '0' && c != '1') return std::string("invalid bit character '") + c + "'";
            }
            return {};
          });
  auto* random_opt = msg_cmd->add_option("--random-bits", msg_random_bits,
                                         "Send this many seed-derived random bits")
                         ->check(CLI::PositiveNumber);
  bits_opt->excludes(random_opt);
  random_opt->excludes(bits_opt);
  msg_cmd->add_option("--B", msg_noise, "Channel noise rate per pass")
      ->check(CLI::Range(0.0, 1.0));
  msg_cmd->add_option("--eta", msg_eta, "D1/D2 detector sensitivity")
      ->check(CLI::Range(0.0, 1.0));
  msg_cmd->add_option("--max-retries", msg_retries, "Retransmissions per bit before erasure")
      ->check(CLI::Range(0, 1000));
  msg_cmd->add_option("--seed", msg_seed, "Random seed")->envname("RUN_SEED");

  // ---- timing -------------------------------------------------------------
  auto* timing_cmd =
      app.add_subcommand("timing", "Switchable-mirror control-time bound 2L/c0");
  double timing_distance = 0.0;
  timing_cmd->add_option("--L", timing_distance, "Sender-receiver distance in meters")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(run_cmd)) {
      const auto params = run_flags.params();
      const PointResult point = evaluate_point(params, run_noise, run_trials, run_seed);
      const double info = cqze::mutual_information(
          cqze::build_statistics(point.dist[0], point.dist[1], 1.0));
      cqze::tools::RunRecord record{run_flags.outer_cycles,
                                    run_flags.inner_cycles,
                                    run_flags.imperfection,
                                    run_noise,
                                    1.0,
                                    run_bob_bit,
                                    point.dist[run_bob_bit],
                                    point.std_error[run_bob_bit],
                                    info,
                                    run_seed};
      emit(std::cout, {record}, run_format);
      return kExitOk;
    }

    if (app.got_subcommand(sweep_cmd)) {
      const std::filesystem::path out_path(sweep_out);
      if (std::filesystem::exists(out_path) && !sweep_force) {
        throw std::runtime_error("output file exists, pass --force to overwrite: " +
                                 sweep_out);
      }
      std::vector<cqze::tools::RunRecord> records;
      for (int outer : sweep_outer) {
        for (int inner : sweep_inner) {
          for (double s : sweep_s) {
            for (double noise : sweep_noise) {
              ProtocolFlags flags{outer, inner, s, sweep_final_chain};
              const PointResult point =
                  evaluate_point(flags.params(), noise, sweep_trials, sweep_seed);
              for (double eta : sweep_eta) {
                const double info = cqze::mutual_information(
                    cqze::build_statistics(point.dist[0], point.dist[1], eta));
                for (int bit : sweep_bits) {
                  records.push_back({outer, inner, s, noise, eta, bit, point.dist[bit],
                                     point.std_error[bit], info, sweep_seed});
                }
              }
            }
          }
        }
      }
      std::ostringstream body;
      emit(body, records, sweep_format);
      std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open output file: " + sweep_out);
      out << body.str();
      if (!out) throw std::runtime_error("write failed: " + sweep_out);
      std::cout << "wrote " << records.size() << " rows to " << sweep_out << "\n";
      return kExitOk;
    }

    if (app.got_subcommand(msg_cmd)) {
      cqze::SessionConfig config;
      config.params = msg_flags.params();
      config.noise = {msg_noise, msg_seed, 1};
      config.eta = msg_eta;
      config.max_retries = msg_retries;
      config.seed = msg_seed;
      if (!msg_bits.empty()) {
        for (char c : msg_bits) config.bits.push_back(c == '1' ? 1 : 0);
      } else if (msg_random_bits > 0) {
        cqze::UniformStream stream(
            cqze::substream_seed(msg_seed, cqze::StreamDomain::kBitstream, 0));
        for (int i = 0; i < msg_random_bits; ++i) {
          config.bits.push_back(stream.next_unit() < 0.5 ? 0 : 1);
        }
      } else {
        std::cerr << "message: one of --bits or --random-bits is required\n";
        return kExitUsage;
      }

      const cqze::SessionResult result = cqze::transmit(config);

      std::string sent;
      for (std::uint8_t b : config.bits) sent += b ? '1' : '0';
      const auto num = [](double v) { return std::stod(cqze::tools::format_value(v)); };
      nlohmann::ordered_json j;
      j["M"] = msg_flags.outer_cycles;
      j["N"] = msg_flags.inner_cycles;
      j["s"] = num(msg_flags.imperfection);
      j["B"] = num(msg_noise);
      j["eta"] = num(msg_eta);
      j["max_retries"] = msg_retries;
      j["seed"] = msg_seed;
      j["bits"] = sent;
      j["decoded"] = outcome_string(result.decoded);
      j["attempts"] = result.attempts;
      j["total_attempts"] = result.total_attempts;
      j["ber"] = num(result.ber);
      j["erasure_rate"] = num(result.erasure_rate);
      j["throughput"] = num(result.throughput);
      j["mutual_information"] = num(result.mutual_information);
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (app.got_subcommand(timing_cmd)) {
      std::cout << cqze::tools::format_value(cqze::switch_time_bound(timing_distance))
                << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }

  std::cerr << "no command executed\n";
  return kExitUsage;
}
