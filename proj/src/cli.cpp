#include "cubeprobe/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubeprobe/cnf.hpp"
#include "cubeprobe/estimator.hpp"
#include "cubeprobe/generate.hpp"
#include "cubeprobe/oracle.hpp"
#include "cubeprobe/poset.hpp"
#include "cubeprobe/poset_sampler.hpp"
#include "cubeprobe/tester.hpp"

namespace cubeprobe::cli {

namespace {

struct Parser {
  CLI::App app{"Distance estimation and identity testing for self-reducible samplers", "cubeprobe"};
  Config config;
  double test_delta = 0.1;
  std::string format = "table";
  std::string test_format = "table";
  std::string oracle_format = "table";

  CLI::App* estimate = nullptr;
  CLI::App* test = nullptr;
  CLI::App* oracle = nullptr;
  CLI::App* gen = nullptr;
  CLI::App* cnf = nullptr;

  Parser() {
    app.require_subcommand(1);
    app.allow_extras(false);
    const std::vector<std::string> formats{"table", "json"};

    estimate = app.add_subcommand("estimate", "Estimate the distance of a sampler from uniform");
    estimate->add_option("instance", config.instance_path, "Poset instance file")->required();
    estimate->add_option("--sampler", config.sampler, "uniform | biased-equal | biased:w1,w2,...");
    estimate->add_option("--zeta", config.zeta, "Additive error");
    estimate->add_option("--delta", config.delta, "Failure probability");
    add_run_flags(estimate, format);

    test = app.add_subcommand("test", "Accept or reject a sampler against uniform");
    test->add_option("instance", config.instance_path, "Poset instance file")->required();
    test->add_option("--sampler", config.sampler, "uniform | biased-equal | biased:w1,w2,...");
    test->add_option("--epsilon", config.epsilon, "Closeness threshold");
    test->add_option("--eta", config.eta, "Farness threshold");
    test->add_option("--delta", test_delta, "Failure probability, at most 1/2");
    add_run_flags(test, test_format);

    oracle = app.add_subcommand("oracle-dtv", "Exact distance between two sampler presets");
    oracle->add_option("instance", config.instance_path, "Poset instance file")->required();
    oracle->add_option("--p", config.p_spec, "First sampler preset");
    oracle->add_option("--q", config.q_spec, "Second sampler preset");
    oracle->add_option("--format", oracle_format, "table or json")
        ->check(CLI::IsMember(formats));

    gen = app.add_subcommand("gen", "Generate a synthetic poset instance");
    gen->add_option("--family", config.family, "avgdeg or bipartite")
        ->check(CLI::IsMember({"avgdeg", "bipartite"}));
    gen->add_option("--param", config.family_param, "Average indegree, or orientation probability");
    gen->add_option("--size", config.size, "Number of elements");
    gen->add_option("--index", config.index, "Replicate index");
    gen->add_option("--out", config.out_path, "Output file (default: stdout)");

    cnf = app.add_subcommand("encode-cnf", "Export the linear-extension CNF in DIMACS format");
    cnf->add_option("instance", config.instance_path, "Poset instance file")->required();
    cnf->add_option("--cnf-out", config.out_path, "Output file (default: stdout)");
  }

  void add_run_flags(CLI::App* sub, std::string& fmt) {
    sub->add_option("--seed", config.seed, "Master seed");
    sub->add_option("--threads", config.threads, "Worker threads");
    sub->add_option("--max-samples", config.max_samples, "Global sample budget (0: unlimited)");
    sub->add_option("--format", fmt, "table or json")
        ->check(CLI::IsMember(std::vector<std::string>{"table", "json"}));
  }

  void parse(const std::vector<std::string>& args) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (estimate->parsed()) {
      config.command = Command::Estimate;
    } else if (test->parsed()) {
      config.command = Command::Test;
      config.delta = test_delta;
      format = test_format;
    } else if (oracle->parsed()) {
      config.command = Command::OracleDtv;
      format = oracle_format;
    } else if (gen->parsed()) {
      config.command = Command::Gen;
    } else {
      config.command = Command::EncodeCnf;
    }
    config.format = format == "json" ? Format::Json : Format::Table;
    validate();
  }

  void validate() const {
    const Config& c = config;
    if (c.threads == 0) throw UsageError("--threads must be at least 1");
    try {
      switch (c.command) {
        case Command::Estimate:
          derive_params(1, c.zeta, c.delta);
          if (c.delta >= 1.0) throw UsageError("--delta must lie in (0,1)");
          SamplerSpec::parse(c.sampler);
          break;
        case Command::Test:
          make_tester_params(c.epsilon, c.eta, c.delta);
          SamplerSpec::parse(c.sampler);
          break;
        case Command::OracleDtv:
          SamplerSpec::parse(c.p_spec);
          SamplerSpec::parse(c.q_spec);
          break;
        case Command::Gen:
        case Command::EncodeCnf:
          break;
      }
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }
};

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

void print_table(std::ostream& out, const RunReport& r, const std::string& sampler) {
  const int name_w = static_cast<int>(std::max<std::size_t>(10, r.instance_path.size() + 2));
  out << std::left << std::setw(name_w) << "Instance" << std::setw(6) << "dim" << std::setw(16)
      << "Sampler" << std::setw(10) << "Estd dTV" << std::setw(14) << "#samples" << "A/R\n";
  out << std::left << std::setw(name_w) << r.instance_path << std::setw(6) << r.dim << std::setw(16)
      << sampler << std::setw(10) << fixed(r.estd_dtv, 4) << std::setw(14) << r.samples
      << (r.verdict ? std::string(1, *r.verdict) : "-") << '\n';
  if (r.status != "ok") out << "status: " << r.status << '\n';
}

nlohmann::json params_json(const EstimatorParams& p) {
  return {{"zeta", p.zeta},   {"delta", p.delta},       {"alpha", p.alpha},
          {"gamma", p.gamma}, {"delta_prime", p.delta_prime}, {"k", p.k}};
}

void emit(std::ostream& out, const Config& c, const RunReport& r) {
  if (c.format == Format::Json) {
    out << r.to_json().dump(2) << '\n';
  } else {
    print_table(out, r, c.sampler);
  }
}

int run_estimate_or_test(const Config& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Poset poset = load_poset(c.instance_path);
  const SamplerSpec spec = SamplerSpec::parse(c.sampler);
  const auto sampler = make_sampler(spec, poset);
  const UniformExtensionSampler known(poset);

  RunReport report;
  report.instance_path = c.instance_path;
  report.dim = sampler->dim();
  report.seed = c.seed;
  report.params = {{"sampler", spec.to_string()}, {"known", "uniform"},
                   {"threads", c.threads},        {"max_samples", c.max_samples}};

  EstimateOptions options;
  options.threads = c.threads;
  options.max_total_samples = c.max_samples;

  auto finish = [&](const EstimateReport& est) {
    report.estd_dtv = est.dtv_estimate;
    report.samples = est.total_samples;
    report.params.update(params_json(est.params));
  };

  int code = kOk;
  std::optional<TesterParams> tparams;
  try {
    if (c.command == Command::Test) {
      tparams = make_tester_params(c.epsilon, c.eta, c.delta);
      const Verdict v = cube_probe_tester(*sampler, known, c.epsilon, c.eta, c.delta, c.seed, options);
      finish(v.estimate);
      report.verdict = v.decision == Decision::Reject ? 'R' : 'A';
      code = v.decision == Decision::Reject ? kReject : kOk;
    } else {
      finish(cube_probe_est(*sampler, known, c.zeta, c.delta, c.seed, options));
    }
  } catch (const EstimateAborted& e) {
    finish(e.partial());
    report.status = "budget_exhausted";
    code = kBudget;
  }
  if (tparams) {
    report.params.update({{"epsilon", tparams->epsilon},
                          {"eta", tparams->eta},
                          {"delta", tparams->delta},
                          {"zeta", tparams->zeta},
                          {"delta_t", tparams->delta_t},
                          {"K", tparams->threshold_k}});
  }
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(out, c, report);
  return code;
}

int run_oracle(const Config& c, std::ostream& out) {
  const Poset poset = load_poset(c.instance_path);
  const auto p = exact_distribution(SamplerSpec::parse(c.p_spec), poset);
  const auto q = exact_distribution(SamplerSpec::parse(c.q_spec), poset);
  const Rational tv = exact_tv(p, q);
  if (c.format == Format::Json) {
    nlohmann::json doc{{"instance_path", c.instance_path},
                       {"dim", p.n},
                       {"p", c.p_spec},
                       {"q", c.q_spec},
                       {"tv", tv.str()},
                       {"tv_decimal", to_double(tv)}};
    out << doc.dump(2) << '\n';
  } else {
    out << tv.str() << " ≈ " << fixed(to_double(tv), 6) << '\n';
  }
  return kOk;
}

int write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  return kOk;
}

int run_gen(const Config& c, std::ostream& out) {
  InstanceId id;
  id.family = c.family == "bipartite" ? InstanceFamily::Bipartite : InstanceFamily::AvgDeg;
  id.param = c.family_param;
  id.size = c.size;
  id.index = c.index;
  nlohmann::json doc = nlohmann::json::parse(poset_to_json(generate_instance(id)));
  doc["name"] = id.name();
  return write_text(c.out_path, doc.dump() + "\n", out);
}

int run_encode_cnf(const Config& c, std::ostream& out) {
  return write_text(c.out_path, to_dimacs(encode_cnf(load_poset(c.instance_path))), out);
}

}  // namespace

nlohmann::json RunReport::to_json() const {
  nlohmann::json doc;
  doc["instance_path"] = instance_path;
  doc["dim"] = dim;
  doc["estd_dtv"] = estd_dtv;
  doc["samples"] = samples;
  doc["verdict"] = verdict ? nlohmann::json(std::string(1, *verdict)) : nlohmann::json(nullptr);
  doc["params"] = params;
  doc["seed"] = seed;
  doc["wall_time"] = wall_time;
  doc["status"] = status;
  return doc;
}

Config parse_args(const std::vector<std::string>& args) {
  Parser parser;
  try {
    parser.parse(args);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return parser.config;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parser parser;
  try {
    parser.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << parser.app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << parser.app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const Config& c = parser.config;
  try {
    switch (c.command) {
      case Command::Estimate:
      case Command::Test: return run_estimate_or_test(c, out);
      case Command::OracleDtv: return run_oracle(c, out);
      case Command::Gen: return run_gen(c, out);
      case Command::EncodeCnf: return run_encode_cnf(c, out);
    }
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cubeprobe::cli
