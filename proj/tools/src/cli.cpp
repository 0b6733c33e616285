#include "expdist_cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "expdist/closed_forms.hpp"
#include "expdist/edm.hpp"
#include "expdist/error.hpp"
#include "expdist/oracle.hpp"
#include "expdist_cli/io.hpp"

namespace expdist::cli {

using nlohmann::json;

namespace {

/// Carries an exit code and the error name printed on stderr.
struct CliFailure {
  int code;
  std::string name;
  std::string detail;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularParameter:
    case ErrorKind::VanishingBlockDenominator:
      return kExitSingular;
    case ErrorKind::ZeroQ:
      return kExitUsage;
    default:
      return kExitSpecError;
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliFailure{kExitSpecError, "IOError", "cannot read '" + path + "'"};
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliFailure{kExitSpecError, "InvalidSpec", e.what()};
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!(file << text) || !file.flush()) throw CliFailure{kExitSpecError, "IOError", "cannot write '" + path + "'"};
}

Rational parse_q(const std::string& text) {
  Rational q;
  try {
    q = Rational::parse(text);
  } catch (const Error& e) {
    throw CliFailure{kExitUsage, std::string(e.name()), "bad value for --q: '" + text + "'"};
  }
  if (q.is_zero()) throw CliFailure{kExitUsage, "ZeroQ", "q must be nonzero"};
  return q;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

std::size_t thread_cap() {
  const char* env = std::getenv("EXPDIST_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  std::size_t value = 0;
  const std::string text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw CliFailure{kExitUsage, "InvalidThreads", "EXPDIST_THREADS must be a positive integer"};
  }
  return value;
}

LoadedGraph load_spec_file(const std::string& path) {
  const GraphSpec spec = [&] {
    try {
      return parse_graph_spec(read_json_file(path));
    } catch (const FormatError& e) {
      throw CliFailure{kExitSpecError, e.name(), e.detail()};
    }
  }();
  return load_graph(spec);
}

int cmd_build(const std::string& spec_path, const std::string& out_path, std::ostream& out) {
  write_output(out_path, dump(graph_json(load_spec_file(spec_path))), out);
  return kExitOk;
}

int cmd_compute(const std::string& spec_path, const std::string& q_text, const std::string& what,
                const std::string& out_path, std::ostream& out) {
  const Rational q = parse_q(q_text);
  const BiBlockGraph g = load_spec_file(spec_path).graph;
  json doc = {{"what", what}, {"q", q.to_string()}, {"vertex_count", g.vertex_count()}};

  auto scalar = [&](const Rational& closed, const Rational& oracle) {
    doc["closed_form"] = closed.to_string();
    doc["oracle"] = oracle.to_string();
    doc["agree"] = closed == oracle;
  };

  if (what == "det") {
    scalar(det_bi_block(g, q), oracle_det(exponential_matrix(g, q)));
  } else if (what == "cofsum") {
    scalar(cofsum_bi_block(g, q, CofactorForm::Cancelled), oracle_adjugate_sum(exponential_matrix(g, q)));
  } else if (what == "F") {
    doc["value"] = matrix_json(exponential_matrix(g, q));
  } else if (what == "inv") {
    if (!singularity_profile(g, q).clean()) {
      throw CliFailure{kExitSingular, "SingularParameter", "F is singular or the formula is undefined at q = " + q.to_string()};
    }
    const RationalMatrix inv = inverse_bi_block(build_bundle(g, q));
    doc["value"] = matrix_json(inv);
    doc["agree"] = inv == oracle_inverse(exponential_matrix(g, q));
  } else if (what == "qlap") {
    doc["value"] = matrix_json(q_laplacian(g, q));
  } else if (what == "A") {
    doc["value"] = matrix_json(aux_matrix_A(g, q));
  } else if (what == "B") {
    doc["value"] = matrix_json(aux_matrix_B(g, q));
  } else if (what == "mu") {
    doc["value"] = vector_json(mu_vector(g, q));
  } else if (what == "x") {
    doc["value"] = vector_json(x_vector(g, q));
  } else {
    throw CliFailure{kExitUsage, "UsageError", "unknown --what '" + what + "'"};
  }
  write_output(out_path, dump(doc), out);
  return kExitOk;
}

struct VerifyFlags {
  std::uint64_t seed = 0;
  std::size_t cases = 1;
  std::size_t r_max = 1;
  std::size_t size_max = 1;
  std::string q_csv;
  std::string checks_csv;
  std::string out_path;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  if (f.cases == 0 || f.r_max == 0 || f.size_max == 0) {
    throw CliFailure{kExitUsage, "UsageError", "--cases, --r-max and --size-max must be positive"};
  }
  SweepParams params;
  params.seed = f.seed;
  params.cases = f.cases;
  params.r_max = f.r_max;
  params.size_max = f.size_max;
  params.threads = thread_cap();
  if (f.q_csv.empty()) {
    params.q_list = default_q_list();
  } else {
    for (const auto& item : split_csv(f.q_csv)) params.q_list.push_back(parse_q(item));
  }
  if (!f.checks_csv.empty()) {
    params.checks.clear();
    for (const auto& item : split_csv(f.checks_csv)) {
      try {
        params.checks.push_back(parse_check_name(item));
      } catch (const Error&) {
        throw CliFailure{kExitUsage, "UsageError", "unknown check '" + item + "'"};
      }
    }
  }

  const SweepReport report = sweep(params);
  write_output(f.out_path, dump(report_to_json(report)), out);

  std::ostream& summary = f.out_path.empty() ? err : out;
  summary << report.reports.size() << " records, " << report.failures() << " failures\n";
  for (CheckKind k : params.checks) {
    const CheckTally t = report.tally(k);
    summary << "  " << check_name(k) << ": pass " << t.pass << ", fail " << t.fail << ", skipped " << t.skipped
            << "\n";
  }
  return report.failures() == 0 ? kExitOk : kExitFailures;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential distance matrices of bi-block graphs, in exact arithmetic", "expdist"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string spec_path;
  std::string out_path;
  std::string q_text;
  std::string what;
  VerifyFlags vf;

  auto* build = app.add_subcommand("build", "Canonicalize a graph spec and print its distance matrix");
  build->add_option("--spec", spec_path, "Graph spec JSON file")->required();
  build->add_option("--out", out_path, "Output file (default: stdout)");

  auto* compute = app.add_subcommand("compute", "Evaluate one object at a rational q");
  compute->add_option("--spec", spec_path, "Graph spec JSON file")->required();
  compute->add_option("--q", q_text, "Nonzero rational p/q")->required();
  compute->add_option("--what", what, "Object to compute")
      ->required()
      ->check(CLI::IsMember({"det", "inv", "cofsum", "qlap", "F", "A", "B", "mu", "x"}));
  compute->add_option("--out", out_path, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Seeded sweep of every closed form against the oracle");
  verify->add_option("--seed", vf.seed, "Sweep seed")->required();
  verify->add_option("--cases", vf.cases, "Number of random graphs")->required();
  verify->add_option("--r-max", vf.r_max, "Maximum number of blocks")->required();
  verify->add_option("--size-max", vf.size_max, "Maximum part size")->required();
  verify->add_option("--q", vf.q_csv, "Comma-separated q values (default: built-in list)");
  verify->add_option("--checks", vf.checks_csv, "Comma-separated checks (default: all)");
  verify->add_option("--out", vf.out_path, "Report file (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(spec_path, out_path, out);
    if (compute->parsed()) return cmd_compute(spec_path, q_text, what, out_path, out);
    return cmd_verify(vf, out, err);
  } catch (const CliFailure& f) {
    err << f.name << ": " << f.detail << "\n";
    return f.code;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return kExitSpecError;
  }
}

}  // namespace expdist::cli
