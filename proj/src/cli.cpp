#include "tvindex/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "tvindex/branching.hpp"
#include "tvindex/errors.hpp"
#include "tvindex/generators.hpp"
#include "tvindex/index.hpp"
#include "tvindex/io.hpp"
#include "tvindex/spectrum.hpp"
#include "tvindex/sweep.hpp"

namespace tvi::cli {

namespace {

using io::Json;

struct Options {
  std::string setup_path;
  std::string b_text;
  std::vector<std::string> b_list;
  std::string mode;
  std::string cutoff = "0";
  std::string name;
  std::string kind = "deRham";
  std::string tau_text;
  std::string output;
  std::string table_path;
  std::string torus_table_path;
  int n = 1;
  long long box = -1;
  bool admissible = false;
  bool serial = false;
  bool genuine = false;
};

OperatorSetup load_valid(const std::string& path, std::ostream& out) {
  OperatorSetup setup = io::read_setup(path);
  const auto report = validate_setup(setup);
  if (!report.ok()) {
    out << io::dump(io::to_json(report));
    throw InvalidSetup("setup failed validation", report.issues);
  }
  return setup;
}

WeightVector read_b(const std::string& text, const OperatorSetup& setup) {
  WeightVector b = io::parse_weight_list(text);
  if (b.size() != static_cast<std::size_t>(setup.m)) {
    throw RankMismatch("--b has " + std::to_string(b.size()) + " entries, torus rank is " + std::to_string(setup.m));
  }
  return b;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const OperatorSetup setup = io::read_setup(o.setup_path);
  const auto report = validate_setup(setup);
  out << io::dump(io::to_json(report));
  return report.ok() ? kSuccess : kValidationFailure;
}

int cmd_index(const Options& o, std::ostream& out) {
  const OperatorSetup setup = load_valid(o.setup_path, out);
  const WeightVector b = read_b(o.b_text, setup);
  if (o.mode == "signature-sum") {
    out << io::dump(io::to_json(b_signature_sum(setup, b), b));
  } else if (o.mode.empty() || o.mode == "index") {
    out << io::dump(io::to_json(transverse_index(setup, b), b));
  } else {
    throw ParseError("--mode must be index or signature-sum");
  }
  return kSuccess;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const OperatorSetup setup = load_valid(o.setup_path, out);
  const WeightVector b = read_b(o.b_text, setup);
  const Rational cutoff = parse_rational(o.cutoff);
  const SpectrumMode mode = parse_spectrum_mode(o.mode.empty() ? "generic" : o.mode);
  out << io::dump(io::to_json(total_spectrum(setup, b, cutoff, mode)));
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const OperatorSetup setup = load_valid(o.setup_path, out);
  if (setup.kind == OperatorKind::generic) {
    throw WrongOperatorKind("verify needs a deRham or signature setup");
  }
  const PreparedSetup prepared(setup);

  std::vector<WeightVector> bs;
  for (const auto& text : o.b_list) bs.push_back(read_b(text, setup));
  if (o.box >= 0) {
    auto swept = o.admissible ? admissible_vectors(prepared, o.box) : box_vectors(setup.m, o.box);
    bs.insert(bs.end(), swept.begin(), swept.end());
  }
  if (bs.empty()) throw ParseError("verify needs --b or --box");

  std::vector<Integer> values;
  std::string check;
  if (setup.kind == OperatorKind::signature) {
    check = "killing-identity";
    values = o.serial ? serial::signature_sums(prepared, bs) : parallel::signature_sums(prepared, bs);
  } else {
    check = "de-rham-vanishing";
    for (const auto& b : bs) {
      if (is_zero(b)) throw ZeroB("de Rham vanishing is checked only for b != 0");
    }
    values = o.serial ? serial::index_values(prepared, bs) : parallel::index_values(prepared, bs);
  }
  const auto failures = nonzero_entries(bs, values);
  out << io::dump({{"check", check},
                   {"evaluated", bs.size()},
                   {"passed", failures.empty()},
                   {"failures", io::failures_to_json(failures)}});
  return failures.empty() ? kSuccess : kVerificationFailure;
}

int cmd_generate(const Options& o, std::ostream& out) {
  std::optional<SlopeVector> tau;
  if (!o.tau_text.empty()) tau = io::parse_slope_list(o.tau_text);
  const OperatorKind kind = parse_operator_kind(o.kind);
  OperatorSetup setup;
  if (o.name == "cpn") {
    setup = gen_cpn(o.n, tau, kind);
  } else if (o.name == "sphere") {
    setup = gen_sphere_operator(tau);
  } else if (o.name == "su2modt") {
    setup = gen_su2_mod_t(kind, tau);
  } else {
    throw ParseError("unknown generator \"" + o.name + "\" (expected cpn, sphere or su2modt)");
  }
  const std::string text = io::dump(io::to_json(setup));
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output);
    if (!file) throw Error(o.output + ": cannot write");
    file << text;
  }
  return kSuccess;
}

int cmd_branch_su2(const Options& o, std::ostream& out) {
  const OperatorSetup setup = load_valid(o.setup_path, out);
  if (o.n < 0) throw ParseError("--n must be nonnegative");
  const Rational value = su2_index(setup, o.n, o.genuine);
  out << io::dump({{"n", o.n}, {"value", to_string(value)}});
  return kSuccess;
}

int cmd_branch(const Options& o, std::ostream& out) {
  const BranchingTable table = io::branching_from_json(io::read_json(o.table_path));
  TorusIndex torus;
  if (!o.torus_table_path.empty()) {
    torus = io::torus_index_from_json(io::read_json(o.torus_table_path));
  } else if (!o.setup_path.empty()) {
    torus = torus_index_of(load_valid(o.setup_path, out));
  } else {
    throw ParseError("branch needs --setup or --torus-index");
  }
  out << io::dump({{"value", to_string(apply_branching(table, torus))}});
  return kSuccess;
}

void apply_thread_env() {
  if (const char* env = std::getenv("TRANSVERSE_INDEX_THREADS")) {
    try {
      set_thread_limit(std::stoi(env));
    } catch (const std::exception&) {
      // Ignored: a malformed cap leaves the runtime default.
    }
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  apply_thread_env();
  Options o;
  CLI::App app{"Equivariant index multiplicities from fixed-point data", "tvindex"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check a setup file and print the validation report");
  validate->add_option("setup", o.setup_path, "Setup JSON")->required();

  auto* index = app.add_subcommand("index", "Torus index multiplicity ind^{rho_b}");
  index->add_option("setup", o.setup_path, "Setup JSON")->required();
  index->add_option("--b", o.b_text, "Comma-separated character b")->required();
  index->add_option("--mode", o.mode, "index | signature-sum");

  auto* spectrum = app.add_subcommand("spectrum", "Model-operator spectrum up to an inclusive cutoff");
  spectrum->add_option("setup", o.setup_path, "Setup JSON")->required();
  spectrum->add_option("--b", o.b_text, "Comma-separated character b")->required();
  spectrum->add_option("--cutoff", o.cutoff, "Cutoff as p/q")->required();
  spectrum->add_option("--mode", o.mode, "generic | numeric");

  auto* verify = app.add_subcommand("verify", "Killing identity (signature) or de Rham vanishing over a b sweep");
  verify->add_option("setup", o.setup_path, "Setup JSON")->required();
  verify->add_option("--b", o.b_list, "Explicit b (repeatable)");
  verify->add_option("--box", o.box, "Sweep every nonzero b with |b_i| <= BOX");
  verify->add_flag("--admissible", o.admissible, "Restrict the box to b in some fixed point's cone");
  verify->add_flag("--serial", o.serial, "Use the serial reference loop");

  auto* generate = app.add_subcommand("generate", "Write a built-in example setup");
  generate->add_option("name", o.name, "cpn | sphere | su2modt")->required();
  generate->add_option("--n", o.n, "Complex dimension for cpn");
  generate->add_option("--kind", o.kind, "deRham | signature");
  generate->add_option("--tau", o.tau_text, "Comma-separated slope entries p/q");
  generate->add_option("-o,--output", o.output, "Output path (default stdout)");

  auto* branch_su2 = app.add_subcommand("branch-su2", "SU(2) multiplicity of mu_n from torus multiplicities");
  branch_su2->add_option("setup", o.setup_path, "Rank-1 setup JSON")->required();
  branch_su2->add_option("--n", o.n, "Highest weight n >= 0")->required();
  branch_su2->add_flag("--genuine", o.genuine, "Require an integral result");

  auto* branch = app.add_subcommand("branch", "Apply a branching table to torus multiplicities");
  branch->add_option("--table", o.table_path, "Branching table JSON")->required();
  branch->add_option("--setup", o.setup_path, "Setup JSON supplying the torus multiplicities");
  branch->add_option("--torus-index", o.torus_table_path, "Torus multiplicity table JSON");

  std::vector<std::string> argv_storage(args.begin(), args.end());
  if (argv_storage.empty()) argv_storage.emplace_back("tvindex");
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "tvindex: " << e.what() << "\n";
    return kParseFailure;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*index) return cmd_index(o, out);
    if (*spectrum) return cmd_spectrum(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*generate) return cmd_generate(o, out);
    if (*branch_su2) return cmd_branch_su2(o, out);
    if (*branch) return cmd_branch(o, out);
  } catch (const ParseError& e) {
    err << "tvindex: parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const InvalidSetup& e) {
    err << "tvindex: " << e.what() << "\n";
    for (const auto& issue : e.issues()) err << "  " << issue << "\n";
    return kValidationFailure;
  } catch (const Error& e) {
    err << "tvindex: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "tvindex: internal error: " << e.what() << "\n";
    return kValidationFailure;
  }
  return kParseFailure;
}

}  // namespace tvi::cli
