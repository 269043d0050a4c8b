#include "qvenn/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qvenn/blockcoding.hpp"
#include "qvenn/bounds.hpp"
#include "qvenn/errors.hpp"
#include "qvenn/properties.hpp"
#include "qvenn/serialize.hpp"
#include "qvenn/sidechannel.hpp"
#include "qvenn/tolerances.hpp"

namespace qvenn::cli {

namespace {

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw DomainError(what + ": '" + text + "' is not a number");
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  const double v = parse_number(text, what);
  if (v < 1 || v != std::floor(v) || v > 4096) throw DomainError(what + ": '" + text + "' is not a positive integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(v));
  return buf;
}

Json envelope(const std::string& command, Json result) {
  Json j;
  j["command"] = command;
  j["tolerances"] = tolerances_json();
  j["result"] = std::move(result);
  return j;
}

/// Flattens a JSON document into "path = value" lines.
void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else if (j.is_number_float()) {
    os << prefix << " = " << fmt12(j.get<double>()) << "\n";
  } else {
    os << prefix << " = " << j.dump() << "\n";
  }
}

/// Collects the verb's output, then writes it to --out or the stream.
struct Emitter {
  std::string format = "json";
  std::string out_path;

  void emit(const Json& doc, const std::string& text_body, std::ostream& out) const {
    std::ostringstream body;
    if (format == "json") {
      body << doc.dump(2) << "\n";
    } else {
      body << text_body;
      if (doc.contains("result")) flatten(doc["result"], "", body);
    }
    write(body.str(), out);
  }

  void write(const std::string& text, std::ostream& out) const {
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw DomainError("cannot write '" + out_path + "'");
    f << text;
  }
};

void add_common(CLI::App* sub, Emitter& em) {
  sub->add_option("--format", em.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", em.out_path, "Write the report to this file instead of standard output");
}

Labels label_list(const std::string& s) {
  Labels out = split(s, ',');
  if (out.empty()) throw DomainError("empty label list");
  return out;
}

PureState block_input(const std::string& kind, std::size_t n) {
  if (kind == "product") return product_bell_input(n);
  if (kind == "entangled") return entangled_block_input(n);
  throw DomainError("input must be 'product' or 'entangled', got '" + kind + "'");
}

void check_block_cap(std::size_t n) {
  if (n == 0 || n > kMaxBlockSymbols) {
    throw DomainError("n = " + std::to_string(n) + " is outside the supported range 1.." +
                      std::to_string(kMaxBlockSymbols));
  }
}

std::vector<BoundFormula> formulas_for(const std::string& model) {
  if (model == "erasure") return {BoundFormula::Erasure1_2p};
  if (model == "depolarizing") {
    return {BoundFormula::Depol8p3, BoundFormula::DepolCloning4p, BoundFormula::DepolHashing1Hp};
  }
  if (model == "errors") return {BoundFormula::Errors1_4p, BoundFormula::StabilizerHBound};
  if (model == "all") return all_bound_formulas();
  throw DomainError("unknown bound model '" + model + "' (expected erasure, depolarizing, errors or all)");
}

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size() && text.front() != '-') return v;
  } catch (const std::exception&) {
  }
  throw DomainError(what + "='" + text + "' is not an unsigned integer");
}

std::uint64_t resolve_seed(const std::string& flag) {
  if (!flag.empty()) return parse_seed(flag, "--seed");
  if (const char* env = std::getenv("QVENN_SEED"); env != nullptr && *env != '\0') return parse_seed(env, "QVENN_SEED");
  return kDefaultPropertySeed;
}

}  // namespace

QuantumChannel parse_channel_spec(const std::string& spec) {
  if (spec == "identity") return make_identity(2);
  if (starts_with(spec, "identity:")) return make_identity(parse_count(spec.substr(9), "identity dimension"));
  if (starts_with(spec, "depolarizing:")) return make_depolarizing(parse_number(spec.substr(13), "depolarizing p"));
  if (starts_with(spec, "erasure:")) return make_erasure(parse_number(spec.substr(8), "erasure p"));
  if (starts_with(spec, "unitary:")) {
    const Json j = read_json_file(spec.substr(8));
    return make_unitary(matrix_from_json(j.is_object() && j.contains("matrix") ? j.at("matrix") : j));
  }
  return channel_from_json(read_json_file(spec));
}

DensityState parse_input_spec(const std::string& spec) {
  if (starts_with(spec, "maximally-mixed:")) {
    return maximally_mixed("Q", parse_count(spec.substr(16), "maximally-mixed dimension"));
  }
  if (starts_with(spec, "diag:")) {
    std::vector<double> p;
    for (const auto& t : split(spec.substr(5), ',')) p.push_back(parse_number(t, "diag entry"));
    return diagonal_state("Q", p);
  }
  const DensityState s = state_from_json(read_json_file(spec));
  return DensityState(RegisterLayout({{"Q", s.layout().total_dim()}}), s.matrix());
}

EncodingIsometry parse_code_spec(const std::string& spec) {
  if (spec == "builtin:five-qubit") return five_qubit_code();
  if (spec == "builtin:four-two") return four_two_code();
  if (starts_with(spec, "builtin:")) {
    throw DomainError("unknown builtin code '" + spec + "' (expected builtin:five-qubit or builtin:four-two)");
  }
  return code_from_json(read_json_file(spec));
}

ClassicalChannel parse_classical_channel_spec(const std::string& spec) {
  if (starts_with(spec, "bsc:")) return binary_symmetric_channel(parse_number(spec.substr(4), "bsc q"));
  if (starts_with(spec, "noiseless:")) return noiseless_channel(parse_count(spec.substr(10), "noiseless size"));
  return classical_channel_from_json(read_json_file(spec));
}

Distribution parse_distribution_spec(const std::string& spec, std::size_t size) {
  if (spec == "uniform") return Distribution::uniform(size);
  std::vector<double> p;
  for (const auto& t : split(spec, ',')) p.push_back(parse_number(t, "probability"));
  return Distribution(std::move(p));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic analysis of quantum channels, codes and capacity bounds", "qvenn"};
  app.require_subcommand(1);
  Emitter em;

  // analyze-channel
  std::string channel_spec = "identity", input_spec = "maximally-mixed:2";
  auto* analyze = app.add_subcommand("analyze-channel", "Information, loss and noise of a channel");
  analyze->add_option("--channel", channel_spec, "identity[:d] | depolarizing:p | erasure:p | unitary:FILE | FILE");
  analyze->add_option("--input", input_spec, "maximally-mixed:d | diag:p0,p1,... | FILE");
  add_common(analyze, em);

  // venn
  std::string venn_state, venn_builtin, vx = "A", vy = "B", vz = "C";
  auto* venn = app.add_subcommand("venn", "Tripartite entropy Venn diagram");
  auto* venn_state_opt = venn->add_option("--state", venn_state, "Density-matrix JSON file");
  venn->add_option("--builtin", venn_builtin, "ghz | bell-product | teleportation")
      ->check(CLI::IsMember({"ghz", "bell-product", "teleportation"}))
      ->excludes(venn_state_opt);
  venn->add_option("--x", vx, "Comma-separated labels of X");
  venn->add_option("--y", vy, "Comma-separated labels of Y");
  venn->add_option("--z", vz, "Comma-separated labels of Z");
  add_common(venn, em);

  // block-report
  std::size_t block_n = 2;
  std::string block_input_kind = "entangled";
  auto* block = app.add_subcommand("block-report", "Joint versus one-symbol use of parallel channels");
  block->add_option("--channel", channel_spec, "Channel applied to every symbol");
  block->add_option("--n", block_n, "Number of symbols");
  block->add_option("--input", block_input_kind, "product | entangled");
  add_common(block, em);

  // code-check
  std::string code_spec;
  std::size_t erasures = 0;
  auto* code = app.add_subcommand("code-check", "Exhaustive erasure-pattern check of a code");
  code->add_option("code", code_spec, "builtin:five-qubit | builtin:four-two | FILE")->required();
  code->add_option("--erasures", erasures, "Number of erased qubits")->required();
  add_common(code, em);

  // bounds
  std::string bound_model = "erasure", grid_spec = "0:1:0.01";
  auto* bounds = app.add_subcommand("bounds", "Capacity-bound curves (CSV by default)");
  bounds->add_option("--model", bound_model, "erasure | depolarizing | errors | all");
  bounds->add_option("--p-grid", grid_spec, "start:stop:step");
  std::string bounds_format = "csv";
  bounds->add_option("--format", bounds_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--out", em.out_path, "Write the curves to this file instead of standard output");

  // mixture
  std::size_t mix_n = 1;
  double mix_p = 0.5;
  std::string mix_model = "erasure", mix_input = "product";
  auto* mixture = app.add_subcommand("mixture", "Binomial mixture decomposition and dual-channel relation");
  mixture->add_option("--model", mix_model, "erasure | depolarizing");
  mixture->add_option("--n", mix_n, "Number of symbols");
  mixture->add_option("--p", mix_p, "Channel parameter");
  mixture->add_option("--input", mix_input, "product | entangled");
  add_common(mixture, em);

  // teleport-demo
  auto* teleport = app.add_subcommand("teleport-demo", "Entropy diagram of teleportation as a side channel");
  add_common(teleport, em);

  // side-check
  std::string side_code, side_controls = "XXXXX,ZIIII", side_basis = "computational";
  std::size_t side_e = 0;
  auto* side = app.add_subcommand("side-check", "Erasure check of a code supplemented with a classical side channel");
  side->add_option("code", side_code, "builtin:five-qubit | builtin:four-two | FILE")->required();
  side->add_option("--erasures", side_e, "Number of erased qubits")->required();
  side->add_option("--controls", side_controls, "Comma-separated Pauli words controlled by the precursor qubits");
  side->add_option("--basis", side_basis, "Amplification basis")
      ->check(CLI::IsMember({"computational", "hadamard"}));
  add_common(side, em);

  // classical-report
  std::string cl_channel = "bsc:0.11", cl_input = "uniform";
  auto* classical = app.add_subcommand("classical-report", "Shannon information, loss and noise");
  classical->add_option("--channel", cl_channel, "bsc:q | noiseless:n | FILE");
  classical->add_option("--input", cl_input, "uniform | p0,p1,...");
  add_common(classical, em);

  // property-suite
  std::string seed_flag, only;
  auto* props = app.add_subcommand("property-suite", "Randomized invariant battery");
  props->add_option("--seed", seed_flag, "Generator seed (default: QVENN_SEED or a fixed value)");
  props->add_option("--only", only, "Comma-separated property names");
  add_common(props, em);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidationError;
  }

  try {
    if (analyze->parsed()) {
      // Computing on the serialized form makes a re-run on the echoed inputs bit-identical.
      const QuantumChannel ch = channel_from_json(channel_to_json(parse_channel_spec(channel_spec)));
      const DensityState input = state_from_json(state_to_json(parse_input_spec(input_spec)));
      const ChannelReport r = channel_report(ch, input);
      Json result = to_json(r);
      result["identities_hold"] =
          std::abs(r.residual_IL) <= tol::kIdentity && std::abs(r.residual_IN) <= tol::kIdentity;
      Json doc = envelope("analyze-channel", result);
      doc["inputs"] = {{"channel", channel_to_json(ch)}, {"input", state_to_json(input)}};
      em.emit(doc, "", out);
      return kOk;
    }
    if (venn->parsed()) {
      VennDiagram3 v;
      if (!venn_state.empty()) {
        const DensityState s = state_from_json(read_json_file(venn_state));
        v = venn3(s, label_list(vx), label_list(vy), label_list(vz));
      } else if (venn_builtin == "teleportation") {
        v = venn3(build_teleportation_model().state, {"R"}, {"Q"}, {"C"});
      } else {
        const PureState s = venn_builtin == "bell-product"
                                ? tensor_product(bell_pair("A", "B"), basis_state(RegisterLayout({{"C", 2}}), {0}))
                                : ghz_state({"A", "B", "C"});
        v = venn3(s, {"A"}, {"B"}, {"C"});
      }
      em.emit(envelope("venn", to_json(v)), render_venn(v), out);
      return kOk;
    }
    if (block->parsed()) {
      check_block_cap(block_n);
      const QuantumChannel ch = parse_channel_spec(channel_spec);
      const PureState input = block_input(block_input_kind, block_n);
      const BlockReport r = block_report(std::vector<QuantumChannel>(block_n, ch), input, symbol_labels(block_n));
      em.emit(envelope("block-report", to_json(r)), "", out);
      return r.sandwich_holds(tol::kIdentity) && r.subadditivity_holds(tol::kIdentity) ? kOk : kValidationError;
    }
    if (code->parsed()) {
      const EncodingIsometry c = parse_code_spec(code_spec);
      const ErasureVerdict v = verify_erasure_code(c, erasures);
      Json result = to_json(v);
      result["k"] = c.k();
      result["n"] = c.n();
      result["erasures"] = erasures;
      result["singleton_max_k"] = singleton_max_k(c.n(), erasures);
      em.emit(envelope("code-check", result), "", out);
      return kOk;
    }
    if (bounds->parsed()) {
      const auto formulas = formulas_for(bound_model);
      const auto grid = parse_grid(grid_spec);
      for (double p : grid) {
        if (p < 0.0 || p > 1.0) throw DomainError("p-grid leaves [0, 1]");
      }
      if (bounds_format == "json") {
        Json curves = Json::array();
        for (auto f : formulas) {
          const BoundCurve c = bound_curve(f, grid);
          Json samples = Json::array();
          for (const auto& [p, r] : c.samples) samples.push_back({{"p", round12(p)}, {"r_max", round12(r)}});
          curves.push_back({{"formula_id", c.name}, {"validity_note", validity_note(f)}, {"samples", samples}});
        }
        em.emit(envelope("bounds", {{"model", bound_model}, {"curves", curves}}), "", out);
      } else {
        std::ostringstream csv;
        csv << "p,formula_id,r_max\n";
        for (double p : grid) {
          for (auto f : formulas) csv << fmt12(p) << "," << formula_id(f) << "," << fmt12(bound_value(f, p)) << "\n";
        }
        em.write(csv.str(), out);
      }
      return kOk;
    }
    if (mixture->parsed()) {
      check_block_cap(mix_n);
      const NoiseModel model = parse_model(mix_model);
      const PureState input = block_input(mix_input, mix_n);
      const MixtureAnalysis m = binomial_mixture_analysis(mix_n, mix_p, input, model);
      const DualRelation d = dual_channel_relation(mix_n, mix_p, input, model);
      Json result = {{"mixture", to_json(m)}, {"dual", to_json(d)}};
      em.emit(envelope("mixture", result), "", out);
      return m.convexity_holds(tol::kIdentity) && d.holds ? kOk : kValidationError;
    }
    if (teleport->parsed()) {
      const SideChannelDiagram d = side_channel_diagram(build_teleportation_model());
      em.emit(envelope("teleport-demo", to_json(d)), render_venn(d.venn), out);
      return d.holds() ? kOk : kValidationError;
    }
    if (side->parsed()) {
      const EncodingIsometry c = parse_code_spec(side_code);
      std::vector<std::string> controls = split(side_controls, ',');
      const auto dp = Eigen::Index{1} << controls.size();
      CMatrix basis = CMatrix::Identity(dp, dp);
      if (side_basis == "hadamard") {
        basis = CMatrix::Identity(1, 1);
        for (std::size_t i = 0; i < controls.size(); ++i) basis = kron(basis, hadamard());
      }
      const SideChannelState sc = build_code_side_channel(c, controls, basis);
      const LosslessCheck lc = lossless_amplification_check(sc);
      const SideErasureVerdict v = verify_side_channel_code(sc, side_e);
      Json result = to_json(v);
      result["k"] = round12(sc.k);
      result["c"] = round12(sc.c);
      result["s"] = round12(sc.s);
      result["n"] = c.n();
      result["erasures"] = side_e;
      result["singleton_max_k"] = singleton_max_k(c.n(), side_e);
      result["amplification"] = to_json(lc);
      em.emit(envelope("side-check", result), "", out);
      return kOk;
    }
    if (classical->parsed()) {
      const ClassicalChannel ch = classical_channel_from_json(classical_channel_to_json(parse_classical_channel_spec(cl_channel)));
      const Distribution input = parse_distribution_spec(cl_input, ch.input_size());
      const ClassicalQuantumConsistency q = classical_quantum_consistency(ch, input);
      Json result = to_json(q.classical);
      result["quantum_embedding"] = {{"mutual_R_Q", round12(q.mutual_R_Q)},
                                     {"cond_mutual_R_E_given_Q", round12(q.cond_mutual_R_E_given_Q)},
                                     {"cond_mutual_Q_E_given_R", round12(q.cond_mutual_Q_E_given_R)},
                                     {"mutual_R_E", round12(q.mutual_R_E)},
                                     {"consistent", q.holds}};
      Json doc = envelope("classical-report", result);
      doc["inputs"] = {{"channel", classical_channel_to_json(ch)}};
      em.emit(doc, "", out);
      return kOk;
    }
    if (props->parsed()) {
      const std::uint64_t seed = resolve_seed(seed_flag);
      const PropertySuiteReport rep = only.empty() ? run_property_suite(seed) : run_property_suite(seed, split(only, ','));
      Json results = Json::array();
      for (const auto& r : rep.results) {
        results.push_back({{"name", r.name},
                           {"trials", r.trials},
                           {"failures", r.failures},
                           {"worst_excess", round12(r.worst_excess)},
                           {"tolerance", r.tolerance},
                           {"passed", r.passed()}});
      }
      em.emit(envelope("property-suite", {{"seed", rep.seed}, {"all_passed", rep.all_passed()}, {"properties", results}}),
              "", out);
      return rep.all_passed() ? kOk : kValidationError;
    }
  } catch (const Error& e) {
    err << "qvenn: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << "qvenn: internal error: " << e.what() << "\n";
    return kInternalError;
  }
  err << "qvenn: no command given\n";
  return kValidationError;
}

}  // namespace qvenn::cli
