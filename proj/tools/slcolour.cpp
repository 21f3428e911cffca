// slcolour: construct, solve and certify S-labelled colouring instances.
//
// Exit codes: 0 success, 1 negative answer (UNSAT, invalid certificate,
// failed property), 2 usage, I/O or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "slc/certify.hpp"
#include "slc/construct.hpp"
#include "slc/error.hpp"
#include "slc/formats.hpp"
#include "slc/properties.hpp"
#include "slc/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or to stdout when it is empty or "-".
void emit(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw IoError("cannot write '" + path + "'");
  }
}

std::string colours_line(const slc::Colouring& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(f.colours[i]);
  }
  return s;
}

// --- subcommands -------------------------------------------------------------

struct ConstructArgs {
  std::string gadget_case;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  emit(a.out, slc::encode(slc::build_gadget_instance(slc::gadget_case_from_string(a.gadget_case))));
  return kOk;
}

struct BadWitnessArgs {
  std::string perm;
  std::string out;
};

int run_bad_witness(const BadWitnessArgs& a) {
  const auto p = slc::parse_cycles(a.perm, 4);
  const auto w = slc::bad_witness(p);
  if (const auto* cite = std::get_if<slc::Citation>(&w)) {
    std::cout << p.to_cycles();
    if (cite->representative != p) std::cout << " (conjugate to " << cite->representative.to_cycles() << ")";
    std::cout << ": " << cite->reference << "\n";
    return kOk;
  }
  emit(a.out, slc::encode(std::get<slc::Construction>(w)));
  return kOk;
}

struct SolveArgs {
  std::string path;
  std::size_t enumerate = 0;
  bool count = false;
  bool stats = false;
  bool timing = false;
  std::string expect;
};

int run_solve(const SolveArgs& a) {
  const auto graph = slc::decode_instance(read_file(a.path)).graph;
  bool found = false;
  slc::SolveStats stats;
  if (a.count) {
    const auto r = slc::count_colourings(graph);
    std::cout << r.count << "\n";
    found = r.count > 0;
    stats = r.stats;
  } else if (a.enumerate > 0) {
    const auto r = slc::enumerate_colourings(graph, a.enumerate);
    for (const auto& f : r.colourings) std::cout << colours_line(f) << "\n";
    std::cout << r.colourings.size() << (r.truncated ? " colourings (truncated)\n" : " colourings\n");
    found = !r.colourings.empty();
    stats = r.stats;
  } else {
    const auto r = slc::solve(graph);
    std::cout << slc::to_string(r.status) << "\n";
    if (r.witness) std::cout << colours_line(*r.witness) << "\n";
    found = r.status == slc::Status::sat;
    stats = r.stats;
  }
  if (a.stats || a.timing) std::cout << slc::encode_stats(stats, a.timing);
  const bool want_sat = a.expect != "unsat";
  return found == want_sat ? kOk : kNegative;
}

struct CertifyArgs {
  std::string path;
  std::string out;
};

int run_certify(const CertifyArgs& a) {
  const auto inst = slc::decode_instance(read_file(a.path));
  emit(a.out, slc::encode(slc::make_certificate(inst.graph, inst.provenance)));
  return kOk;
}

struct CheckArgs {
  std::string cert;
  std::string path;
};

int run_check(const CheckArgs& a) {
  const auto cert = slc::decode_certificate(read_file(a.cert));
  const auto graph = slc::decode_instance(read_file(a.path)).graph;
  const auto r = slc::verify_certificate(cert, graph);
  if (!r) {
    std::cout << "invalid\n";
    std::cerr << "slcolour: " << r.reason << "\n";
    return kNegative;
  }
  std::cout << "valid\n";
  return kOk;
}

struct AdaptArgs {
  std::string from;
  int k = 0;
  std::string mode = "nk";
  std::string path;
  std::string out;
};

int run_adapt(const AdaptArgs& a) {
  const auto bytes = read_file(a.path);
  slc::SLabeledGraph graph = [&] {
    if (a.from == "signed") {
      return slc::decode_signed_input(
          bytes, a.k, a.mode == "zk" ? slc::SignedMode::cyclic : slc::SignedMode::natural);
    }
    if (a.from == "zk") return slc::decode_zk_input(bytes, a.k);
    return slc::decode_gain_input(bytes, a.k);
  }();
  emit(a.out, slc::encode(graph));
  return kOk;
}

struct ExportArgs {
  std::string path;
  std::string out;
};

int run_export(const ExportArgs& a) {
  emit(a.out, slc::to_dot(slc::decode_instance(read_file(a.path)).graph));
  return kOk;
}

struct PropsArgs {
  std::string suite;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
};

int run_props(const PropsArgs& a) {
  const auto r = slc::run_property_suite(a.suite, a.trials, a.seed);
  std::cout << r.name << ": " << r.trials << " trials, " << r.failures << " failures\n";
  if (!r.passed()) {
    std::cerr << "slcolour: first failure: " << r.first_failure << "\n";
    return kNegative;
  }
  return kOk;
}

int exit_code_for(slc::Errc code) {
  switch (code) {
    case slc::Errc::no_witness:
    case slc::Errc::cannot_certify:
      return kNegative;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-labelled graph colouring: constructions, solver and certificates", "slcolour"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build an uncolourable gadget instance");
  c->add_option("--case", construct.gadget_case, "c123 or c1234")
      ->required()
      ->check(CLI::IsMember({"c123", "c1234"}));
  c->add_option("--out", construct.out, "Output file (stdout if omitted)");

  BadWitnessArgs bad;
  auto* b = app.add_subcommand("bad-witness", "Uncolourable instance with labels in {id, p}");
  b->add_option("--perm", bad.perm, "Permutation of [4] in cycle notation")->required();
  b->add_option("--out", bad.out, "Output file (stdout if omitted)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Decide, enumerate or count proper colourings");
  s->add_option("path", solve.path, "Instance file")->required();
  auto* en = s->add_option("--enumerate", solve.enumerate, "List up to N colourings")
                 ->check(CLI::PositiveNumber);
  auto* cnt = s->add_flag("--count", solve.count, "Print the number of colourings");
  en->excludes(cnt);
  s->add_flag("--stats", solve.stats, "Print search statistics");
  s->add_flag("--timing", solve.timing, "Print statistics including wall time");
  s->add_option("--expect", solve.expect, "Answer that counts as success (default sat)")
      ->check(CLI::IsMember({"sat", "unsat"}));

  CertifyArgs certify;
  auto* ce = app.add_subcommand("certify", "Write a non-colourability certificate");
  ce->add_option("path", certify.path, "Instance file with provenance")->required();
  ce->add_option("--out", certify.out, "Certificate file (stdout if omitted)");

  CheckArgs check;
  auto* ch = app.add_subcommand("check-cert", "Verify a certificate against an instance");
  ch->add_option("cert", check.cert, "Certificate file")->required();
  ch->add_option("path", check.path, "Instance file")->required();

  AdaptArgs adapt;
  auto* ad = app.add_subcommand("adapt", "Translate another colouring framework into S-labels");
  ad->add_option("--from", adapt.from, "signed, zk or gain")
      ->required()
      ->check(CLI::IsMember({"signed", "zk", "gain"}));
  ad->add_option("--k", adapt.k, "Number of colours")->required()->check(CLI::PositiveNumber);
  ad->add_option("--mode", adapt.mode, "Signed colour set: nk or zk")
      ->check(CLI::IsMember({"nk", "zk"}));
  ad->add_option("path", adapt.path, "Input file")->required();
  ad->add_option("--out", adapt.out, "Output file (stdout if omitted)");

  ExportArgs exp;
  auto* ex = app.add_subcommand("export", "Export an instance");
  ex->add_option("--dot", exp.path, "Instance file to render as DOT")->required();
  ex->add_option("--out", exp.out, "Output file (stdout if omitted)");

  PropsArgs props;
  auto* pr = app.add_subcommand("props", "Run a randomized invariant suite");
  pr->add_option("--suite", props.suite, "conjugation, reversal, relabel or monotonicity")
      ->required()
      ->check(CLI::IsMember(slc::property_suite_names()));
  pr->add_option("--trials", props.trials, "Number of instances")->check(CLI::PositiveNumber);
  pr->add_option("--seed", props.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*c) return run_construct(construct);
    if (*b) return run_bad_witness(bad);
    if (*s) return run_solve(solve);
    if (*ce) return run_certify(certify);
    if (*ch) return run_check(check);
    if (*ad) return run_adapt(adapt);
    if (*ex) return run_export(exp);
    if (*pr) return run_props(props);
  } catch (const slc::ParseError& e) {
    std::cerr << "slcolour: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const slc::Error& e) {
    std::cerr << "slcolour: " << slc::to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const IoError& e) {
    std::cerr << "slcolour: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
