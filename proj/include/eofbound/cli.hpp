// Copyright 2026 The eofbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EOFBOUND_CLI_HPP
#define EOFBOUND_CLI_HPP

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eofbound/bound.hpp"
#include "eofbound/oracles.hpp"
#include "eofbound/statefile.hpp"

namespace eofb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputFailure = 2;
inline constexpr int kExitNumericFailure = 3;

inline constexpr std::string_view kBoundCsvHeader =
    "m,n,ppt_norm,realignment_norm,lambda,bound_bits,is_ppt,realignment_detects,branch";
inline constexpr std::string_view kSandwichCsvHeader =
    "m,n,lower_bits,upper_bits,gap_bits,ensemble_size,iterations,seed";

struct RunConfig {
  std::vector<std::string> files;
  std::vector<std::string> gens;
  std::string out;  ///< empty means the caller's output stream
  std::string format = "json";
  double tol = kDefaultVerdictTolerance;
  std::uint64_t seed = kDefaultSeed;
  bool pure = false;
  int ensemble_size = 0;
  int iterations = ConvexRoofOptions{}.iterations;
  int restarts = ConvexRoofOptions{}.restarts;
};

/// One input state: a file path or an expanded generator spec.
struct Job {
  std::string source;
  std::function<StateData()> load;
};

inline std::vector<Job> make_jobs(const RunConfig& cfg) {
  std::vector<Job> jobs;
  for (const auto& path : cfg.files) {
    jobs.push_back({path, [path, pure = cfg.pure] { return read_state_file(path, pure); }});
  }
  for (const auto& text : cfg.gens) {
    std::vector<StateSpec> specs;
    try {
      specs = expand_batch(parse_state_spec(text, cfg.seed, cfg.pure));
    } catch (const Error& e) {
      jobs.push_back({text, [e]() -> StateData { throw e; }});
      continue;
    }
    for (std::size_t i = 0; i < specs.size(); ++i) {
      std::string source = text;
      if (specs.size() > 1) source += "#" + std::to_string(i);
      jobs.push_back({source, [spec = specs[i]] { return generate_state(spec); }});
    }
  }
  return jobs;
}

struct Failure {
  ErrorKind kind;
  std::string message;
};

template <class Row>
struct Outcome {
  std::string source;
  BipartiteDims dims;
  std::optional<Row> row;
  std::optional<Failure> failure;
};

template <class Row, class Fn>
std::vector<Outcome<Row>> run_jobs(const std::vector<Job>& jobs, Fn&& compute) {
  std::vector<Outcome<Row>> out;
  out.reserve(jobs.size());
  for (const auto& job : jobs) {
    Outcome<Row> o;
    o.source = job.source;
    try {
      const StateData data = job.load();
      o.dims = data.dims();
      o.row = compute(data.density());
    } catch (const Error& e) {
      o.failure = Failure{e.kind(), e.what()};
    } catch (const std::exception& e) {
      o.failure = Failure{ErrorKind::ConvergenceFailure, e.what()};
    }
    out.push_back(std::move(o));
  }
  return out;
}

inline int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::ConvergenceFailure ? kExitNumericFailure : kExitInputFailure;
}

template <class Row>
int finish(const std::vector<Outcome<Row>>& outcomes, std::ostream& err) {
  int code = kExitOk;
  for (const auto& o : outcomes) {
    if (o.failure) {
      err << o.source << ": " << o.failure->message << '\n';
      code = std::max(code, exit_code_for(o.failure->kind));
    }
  }
  return code;
}

inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

inline const char* bool_text(bool b) { return b ? "true" : "false"; }

template <class Row>
void write_json_error(std::ostream& os, const Outcome<Row>& o) {
  os << "{\"source\":" << json_string(o.source) << ",\"error\":\""
     << to_string(o.failure->kind) << "\",\"message\":" << json_string(o.failure->message)
     << '}';
}

inline void write_bound(std::ostream& os, const std::vector<Outcome<BoundReport>>& rows,
                        const std::string& format) {
  if (format == "csv") {
    os << kBoundCsvHeader << '\n';
    for (const auto& o : rows) {
      if (!o.row) {
        os << ",,,,,,,,ERROR\n";
        continue;
      }
      const BoundReport& r = *o.row;
      os << r.dims.dim_a << ',' << r.dims.dim_b << ',' << format_double(r.ppt_norm) << ','
         << format_double(r.realignment_norm) << ',' << format_double(r.lambda_cap) << ','
         << format_double(r.bound_bits) << ',' << bool_text(r.verdict.is_ppt) << ','
         << bool_text(r.verdict.realignment_detects) << ',' << to_string(r.branch) << '\n';
    }
    return;
  }
  os << "{\"version\":1,\"command\":\"bound\",\"results\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& o = rows[i];
    os << (i ? ",\n" : "\n");
    if (!o.row) {
      write_json_error(os, o);
      continue;
    }
    const BoundReport& r = *o.row;
    os << "{\"source\":" << json_string(o.source) << ",\"m\":" << r.dims.dim_a
       << ",\"n\":" << r.dims.dim_b << ",\"ppt_norm\":" << format_double(r.ppt_norm)
       << ",\"realignment_norm\":" << format_double(r.realignment_norm)
       << ",\"lambda\":" << format_double(r.lambda_cap)
       << ",\"bound_bits\":" << format_double(r.bound_bits)
       << ",\"is_ppt\":" << bool_text(r.verdict.is_ppt)
       << ",\"realignment_detects\":" << bool_text(r.verdict.realignment_detects)
       << ",\"entangled_certified\":" << bool_text(r.verdict.entangled_certified)
       << ",\"branch\":\"" << to_string(r.branch) << "\"}";
  }
  os << "\n]}\n";
}

inline void write_sandwich(std::ostream& os, const std::vector<Outcome<SandwichResult>>& rows,
                           const std::string& format) {
  if (format == "csv") {
    os << kSandwichCsvHeader << '\n';
    for (const auto& o : rows) {
      if (!o.row) {
        os << ",,,,,,,ERROR\n";
        continue;
      }
      const SandwichResult& r = *o.row;
      os << o.dims.dim_a << ',' << o.dims.dim_b << ',' << format_double(r.lower_bits) << ','
         << format_double(r.upper_bits) << ',' << format_double(r.gap_bits) << ','
         << r.ensemble_size << ',' << r.iterations << ',' << r.seed << '\n';
    }
    return;
  }
  os << "{\"version\":1,\"command\":\"sandwich\",\"results\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& o = rows[i];
    os << (i ? ",\n" : "\n");
    if (!o.row) {
      write_json_error(os, o);
      continue;
    }
    const SandwichResult& r = *o.row;
    os << "{\"source\":" << json_string(o.source) << ",\"m\":" << o.dims.dim_a
       << ",\"n\":" << o.dims.dim_b << ",\"lower_bits\":" << format_double(r.lower_bits)
       << ",\"upper_bits\":" << format_double(r.upper_bits)
       << ",\"gap_bits\":" << format_double(r.gap_bits)
       << ",\"ensemble_size\":" << r.ensemble_size << ",\"iterations\":" << r.iterations
       << ",\"seed\":" << r.seed << '}';
  }
  os << "\n]}\n";
}

/// Sends `text` to cfg.out, or to `out` when no path is configured.
inline bool emit(const std::string& text, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot write " << path << '\n';
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

inline int cmd_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = run_jobs<BoundReport>(
      make_jobs(cfg), [&](const DensityMatrix& rho) { return eof_lower_bound(rho, cfg.tol); });
  std::ostringstream os;
  write_bound(os, rows, cfg.format);
  const int code = finish(rows, err);
  if (!emit(os.str(), cfg.out, out, err)) return kExitInputFailure;
  return code;
}

inline int cmd_sandwich(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ConvexRoofOptions opts;
  opts.ensemble_size = cfg.ensemble_size;
  opts.iterations = cfg.iterations;
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;
  const auto rows = run_jobs<SandwichResult>(
      make_jobs(cfg), [&](const DensityMatrix& rho) { return sandwich(rho, opts, cfg.tol); });
  std::ostringstream os;
  write_sandwich(os, rows, cfg.format);
  const int code = finish(rows, err);
  if (!emit(os.str(), cfg.out, out, err)) return kExitInputFailure;
  return code;
}

/// Writes one generated state as a StateFile.
inline int cmd_gen(const std::string& spec_text, const RunConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  try {
    const StateSpec spec = parse_state_spec(spec_text, cfg.seed, cfg.pure);
    if (spec.params.count("count")) {
      throw Error(ErrorKind::ParameterOutOfRange, "gen writes a single state; drop count=");
    }
    const std::string text = write_state_file(generate_state(spec));
    return emit(text, cfg.out, out, err) ? kExitOk : kExitInputFailure;
  } catch (const Error& e) {
    err << spec_text << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

/// Entry point shared by the executable and the tests.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement-of-formation lower bounds from PPT and realignment norms",
               "eofbound"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output path (default: stdout)");
    sub->add_option("--seed", cfg.seed, "Seed for generators and the estimator")
        ->capture_default_str();
    sub->add_flag("--pure", cfg.pure, "Inputs are pure amplitude vectors");
  };
  auto add_batch = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("files", cfg.files, "StateFile inputs");
    sub->add_option("--gen", cfg.gens, "Generator spec FAMILY:k=v,... (repeatable)")
        ->allow_extra_args(false);
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--tol", cfg.tol, "Separability tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* bound = app.add_subcommand("bound", "Lower bound report per state");
  add_batch(bound);
  auto* sandwich_cmd = app.add_subcommand("sandwich", "Lower bound next to a convex-roof estimate");
  add_batch(sandwich_cmd);
  sandwich_cmd->add_option("--ensemble-size", cfg.ensemble_size, "Ensemble size (0: rank + 2)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sandwich_cmd->add_option("--iters", cfg.iterations, "Refinement steps per restart")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sandwich_cmd->add_option("--restarts", cfg.restarts, "Random restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string gen_spec;
  auto* gen = app.add_subcommand("gen", "Write a generated state as a StateFile");
  add_common(gen);
  auto* gen_flag = gen->add_option("--gen", gen_spec, "Generator spec FAMILY:k=v,...");
  gen->add_option("spec", gen_spec, "Generator spec (positional form)")->excludes(gen_flag);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputFailure;
  }

  if (bound->parsed()) return cmd_bound(cfg, out, err);
  if (sandwich_cmd->parsed()) return cmd_sandwich(cfg, out, err);
  if (gen_spec.empty()) {
    err << "gen needs a generator spec\n";
    return kExitInputFailure;
  }
  return cmd_gen(gen_spec, cfg, out, err);
}

}  // namespace eofb::cli

#endif  // EOFBOUND_CLI_HPP
