#include "qvenn/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qvenn/errors.hpp"
#include "qvenn/tolerances.hpp"

namespace qvenn {

namespace {

Json numbers(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(round12(x));
  return a;
}

Json indices(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

template <typename T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError(std::string(what) + ": field '" + key + "' has the wrong type");
  }
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  if (std::abs(v) < 1e-13) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({round12(m(r, c).real()), round12(m(r, c).imag())});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) throw DomainError("matrix: expected nested arrays");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw DomainError("matrix: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw DomainError("matrix: entries must be [re, im] pairs");
      }
      m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json layout_to_json(const RegisterLayout& layout) {
  Json a = Json::array();
  for (const auto& s : layout.subsystems()) a.push_back({{"label", s.label}, {"dim", s.dim}});
  return a;
}

RegisterLayout layout_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("layout: expected a nonempty array");
  std::vector<Subsystem> subs;
  for (const auto& e : j) {
    const auto dim = field<long long>(e, "dim", "layout");
    if (dim <= 0) throw DomainError("layout: dimensions must be positive");
    subs.push_back({field<std::string>(e, "label", "layout"), static_cast<std::size_t>(dim)});
  }
  return RegisterLayout(std::move(subs));
}

Json state_to_json(const DensityState& s) {
  return {{"layout", layout_to_json(s.layout())}, {"matrix", matrix_to_json(s.matrix())}};
}

DensityState state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("layout") || !j.contains("matrix")) {
    throw DomainError("state: expected {layout, matrix}");
  }
  return DensityState(layout_from_json(j.at("layout")), matrix_from_json(j.at("matrix")));
}

Json channel_to_json(const QuantumChannel& ch) {
  Json kraus = Json::array();
  for (const auto& k : ch.kraus()) kraus.push_back(matrix_to_json(k));
  return {{"name", ch.name()}, {"input_dim", ch.input_dim()}, {"output_dim", ch.output_dim()}, {"kraus", kraus}};
}

QuantumChannel channel_from_json(const Json& j) {
  const auto din = field<long long>(j, "input_dim", "channel");
  const auto dout = field<long long>(j, "output_dim", "channel");
  if (din <= 0 || dout <= 0) throw DomainError("channel: dimensions must be positive");
  if (!j.contains("kraus") || !j.at("kraus").is_array()) throw DomainError("channel: missing 'kraus' array");
  std::vector<CMatrix> kraus;
  for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "json";
  return QuantumChannel(name, static_cast<std::size_t>(din), static_cast<std::size_t>(dout), std::move(kraus));
}

Json code_to_json(const EncodingIsometry& code) {
  return {{"name", code.name()}, {"k", code.k()}, {"n", code.n()}, {"matrix", matrix_to_json(code.matrix())}};
}

EncodingIsometry code_from_json(const Json& j) {
  const auto k = field<long long>(j, "k", "code");
  const auto n = field<long long>(j, "n", "code");
  if (k < 0 || n <= 0) throw DomainError("code: need k >= 0 and n >= 1");
  if (!j.contains("matrix")) throw DomainError("code: missing field 'matrix'");
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "json";
  return EncodingIsometry(static_cast<std::size_t>(k), static_cast<std::size_t>(n), matrix_from_json(j.at("matrix")),
                          name);
}

Json classical_channel_to_json(const ClassicalChannel& ch) {
  Json rows = Json::array();
  for (const auto& r : ch.transition()) rows.push_back(numbers(r));
  return {{"transition", rows}};
}

ClassicalChannel classical_channel_from_json(const Json& j) {
  return ClassicalChannel(field<std::vector<std::vector<double>>>(j, "transition", "classical channel"));
}

Json tolerances_json() {
  return {{"state", tol::kState},           {"clip", tol::kClip},
          {"sign", tol::kSign},             {"identity", tol::kIdentity},
          {"correctable", tol::kCorrectable}, {"classical", tol::kClassical}};
}

Json to_json(const ChannelReport& r) {
  return {{"source_entropy_S", round12(r.source_entropy_S)},
          {"information_I", round12(r.information_I)},
          {"loss_L", round12(r.loss_L)},
          {"noise_N", round12(r.noise_N)},
          {"output_entropy", round12(r.output_entropy)},
          {"residual_IL", round12(r.residual_IL)},
          {"residual_IN", round12(r.residual_IN)}};
}

Json to_json(const VennDiagram3& v) {
  return {{"labels", {v.label_x, v.label_y, v.label_z}},
          {"exclusive_x", round12(v.exclusive_x)},
          {"exclusive_y", round12(v.exclusive_y)},
          {"exclusive_z", round12(v.exclusive_z)},
          {"pair_xy_given_z", round12(v.pair_xy_given_z)},
          {"pair_xz_given_y", round12(v.pair_xz_given_y)},
          {"pair_yz_given_x", round12(v.pair_yz_given_x)},
          {"center", round12(v.center)},
          {"joint_entropy", round12(v.joint)},
          {"region_sum", round12(v.region_sum())}};
}

Json to_json(const BlockReport& r) {
  return {{"n", r.n},
          {"source_entropy", round12(r.source_entropy)},
          {"joint_I", round12(r.joint_I)},
          {"joint_L", round12(r.joint_L)},
          {"per_symbol_I", numbers(r.per_symbol_I)},
          {"per_symbol_L", numbers(r.per_symbol_L)},
          {"correlation_M", round12(r.correlation_M)},
          {"average_loss_l", round12(r.average_loss_l)},
          {"one_symbol_loss_l1", round12(r.one_symbol_loss_l1)},
          {"rate_bound", round12(r.rate_bound)},
          {"sandwich_lower", round12(r.sum_L() - 2.0 * r.correlation_M)},
          {"sandwich_upper", round12(r.sum_L())},
          {"sandwich_holds", r.sandwich_holds(tol::kIdentity)},
          {"subadditivity_holds", r.subadditivity_holds(tol::kIdentity)}};
}

Json to_json(const ErasureVerdict& v) {
  return {{"correctable", v.correctable},
          {"worst_pattern_loss", round12(v.worst_pattern_loss)},
          {"worst_pattern", indices(v.worst_pattern)},
          {"patterns_checked", v.patterns_checked}};
}

Json to_json(const MixtureAnalysis& m) {
  Json patterns = Json::array();
  for (std::size_t i = 0; i < m.weights.size(); ++i) {
    patterns.push_back({{"affected", indices(m.weights[i].affected)},
                        {"weight", round12(m.weights[i].weight)},
                        {"I_c", round12(m.per_pattern_I[i])}});
  }
  return {{"n", m.n},
          {"p", round12(m.p)},
          {"model", model_name(m.model)},
          {"weight_parameter", round12(m.weight_parameter)},
          {"source_entropy", round12(m.source_entropy)},
          {"joint_I", round12(m.joint_I)},
          {"joint_L", round12(m.joint_L)},
          {"convex_bound", round12(m.convex_bound)},
          {"intermediate_bound", round12(m.intermediate_bound)},
          {"weight_sum", round12(m.weight_sum())},
          {"convexity_holds", m.convexity_holds(tol::kIdentity)},
          {"patterns", patterns}};
}

Json to_json(const DualRelation& d) {
  return {{"p", round12(d.p)},         {"dual_p", round12(d.dual_p)}, {"k", round12(d.k)},
          {"I_p", round12(d.I_p)},     {"I_dual", round12(d.I_dual)}, {"L_p", round12(d.L_p)},
          {"L_dual", round12(d.L_dual)}, {"sum_I", round12(d.sum_I)}, {"sum_L", round12(d.sum_L)},
          {"holds", d.holds}};
}

Json to_json(const BoundCatalog& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    entries.push_back({{"formula_id", e.formula_id},
                       {"r_max", round12(e.r_max)},
                       {"within_validity", e.within_validity},
                       {"validity_note", e.validity_note}});
  }
  return {{"p", round12(c.p)}, {"entries", entries}, {"nondegenerate_zero_rate", c.nondegenerate_zero_rate}};
}

Json to_json(const LosslessCheck& c) {
  return {{"mutual_RP", round12(c.mutual_RP)}, {"mutual_RQC", round12(c.mutual_RQC)}, {"lossless", c.lossless}};
}

Json to_json(const SideChannelDiagram& d) {
  Json violations = Json::array();
  for (const auto& v : d.violations) violations.push_back(v);
  return {{"k", round12(d.k)},
          {"s", round12(d.s)},
          {"c", round12(d.c)},
          {"S_P", round12(d.S_P)},
          {"S_CP", round12(d.S_CP)},
          {"S_RQ", round12(d.S_RQ)},
          {"S_RC", round12(d.S_RC)},
          {"S_QC", round12(d.S_QC)},
          {"S_RQC", round12(d.S_RQC)},
          {"mutual_RQ", round12(d.mutual_RQ)},
          {"mutual_RC", round12(d.mutual_RC)},
          {"mutual_QC", round12(d.mutual_QC)},
          {"mutual_RP", round12(d.mutual_RP)},
          {"mutual_RQC", round12(d.mutual_RQC)},
          {"mutual_R_PC", round12(d.mutual_R_PC)},
          {"center", round12(d.center)},
          {"cond_RQ_given_C", round12(d.cond_RQ_C)},
          {"cond_C_given_RQ", round12(d.cond_C_RQ)},
          {"cond_mutual_RC_given_Q", round12(d.cond_mutual_RC_Q)},
          {"venn", to_json(d.venn)},
          {"violations", violations},
          {"holds", d.holds()}};
}

Json to_json(const SideErasureVerdict& v) {
  return {{"correctable", v.correctable},
          {"worst_loss", round12(v.worst_loss)},
          {"worst_pattern", indices(v.worst_pattern)},
          {"patterns_checked", v.patterns_checked},
          {"singleton_consistent", v.singleton_consistent}};
}

Json to_json(const ClassicalReport& r) {
  return {{"I", round12(r.I)}, {"L", round12(r.L)}, {"N", round12(r.N)}, {"H_X", round12(r.H_X)},
          {"H_Y", round12(r.H_Y)}};
}

Json to_json(const ClassicalBlockReport& r) {
  return {{"n", r.n},
          {"H_X", round12(r.H_X)},
          {"joint_I", round12(r.joint_I)},
          {"joint_L", round12(r.joint_L)},
          {"per_I", numbers(r.per_I)},
          {"per_L", numbers(r.per_L)},
          {"M", round12(r.M)},
          {"rate", round12(r.rate)},
          {"rate_bound", round12(r.rate_bound)},
          {"information_subadditive", r.information_subadditive},
          {"loss_subadditive", r.loss_subadditive},
          {"sandwich_holds", r.sandwich_holds}};
}

Json to_json(const DataProcessingRecord& r) {
  return {{"L1", round12(r.L1)},   {"L12", round12(r.L12)}, {"I1", round12(r.I1)},
          {"I12", round12(r.I12)}, {"I2", round12(r.I2)},   {"N2", round12(r.N2)},
          {"N12", round12(r.N12)}, {"holds", r.holds()}};
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("malformed JSON in " + origin + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

}  // namespace qvenn
