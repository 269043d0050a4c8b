#include "qvenn/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "qvenn/blockcoding.hpp"
#include "qvenn/bounds.hpp"
#include "qvenn/channel.hpp"
#include "qvenn/classical.hpp"
#include "qvenn/codes.hpp"
#include "qvenn/errors.hpp"
#include "qvenn/random.hpp"
#include "qvenn/sidechannel.hpp"
#include "qvenn/tolerances.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {

namespace {

/// Accumulates trial outcomes for one property.
class Tally {
 public:
  Tally(std::string name, double tolerance) {
    r_.name = std::move(name);
    r_.tolerance = tolerance;
    r_.worst_excess = -std::numeric_limits<double>::infinity();
  }

  /// `excess` is how far the trial overshoots its bound.
  void record(double excess) { record(excess, r_.tolerance); }

  void record(double excess, double tolerance) {
    ++r_.trials;
    const double margin = excess - tolerance;
    if (std::isnan(margin) || margin > 0.0) ++r_.failures;
    if (std::isnan(margin) || margin > r_.worst_excess) r_.worst_excess = margin;
  }

  PropertyResult result() const { return r_; }

 private:
  PropertyResult r_;
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

RegisterLayout tri_layout(Rng& rng, std::size_t lo, std::size_t hi) {
  return RegisterLayout({{"A", pick(rng, lo, hi)}, {"B", pick(rng, lo, hi)}, {"C", pick(rng, lo, hi)}});
}

double information(const QuantumChannel& ch, const DensityState& rho) { return channel_report(ch, rho).information_I; }

using Check = std::function<PropertyResult(Rng&)>;

struct Named {
  std::string name;
  Check run;
};

const std::vector<Named>& battery() {
  static const std::vector<Named> all{
      {"entropy_unitary_invariance",
       [](Rng& rng) {
         Tally t("entropy_unitary_invariance", tol::kIdentity);
         for (int i = 0; i < 50; ++i) {
           const std::size_t d = pick(rng, 2, 8);
           const DensityState rho = random_density(RegisterLayout({{"Q", d}}), rng);
           const CMatrix u = random_unitary(d, rng);
           const DensityState rot(rho.layout(), u * rho.matrix() * u.adjoint());
           t.record(std::abs(von_neumann_entropy(rho) - von_neumann_entropy(rot)));
         }
         return t.result();
       }},
      {"purify_round_trip",
       [](Rng& rng) {
         Tally t("purify_round_trip", tol::kClip);
         for (int i = 0; i < 50; ++i) {
           const DensityState rho = random_density(RegisterLayout({{"A", pick(rng, 2, 3)}, {"B", pick(rng, 1, 3)}}), rng);
           const DensityState back = partial_trace(purify(rho, "R"), {"A", "B"});
           t.record((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff());
         }
         return t.result();
       }},
      {"tensor_entropy_additivity",
       [](Rng& rng) {
         Tally t("tensor_entropy_additivity", tol::kIdentity);
         for (int i = 0; i < 50; ++i) {
           const DensityState a = random_density(RegisterLayout({{"A", pick(rng, 2, 4)}}), rng);
           const DensityState b = random_density(RegisterLayout({{"B", pick(rng, 2, 4)}}), rng);
           t.record(std::abs(von_neumann_entropy(tensor_product(a, b)) - von_neumann_entropy(a) -
                             von_neumann_entropy(b)));
         }
         return t.result();
       }},
      {"entropy_range",
       [](Rng& rng) {
         Tally t("entropy_range", tol::kSign);
         for (int i = 0; i < 50; ++i) {
           const std::size_t d = pick(rng, 2, 16);
           const double s = von_neumann_entropy(random_density(RegisterLayout({{"Q", d}}), rng));
           t.record(std::max(-s, s - std::log2(static_cast<double>(d))));
         }
         return t.result();
       }},
      {"subadditivity",
       [](Rng& rng) {
         Tally t("subadditivity", tol::kSign);
         for (int i = 0; i < 200; ++i) {
           const DensityState s = random_density(RegisterLayout({{"A", pick(rng, 2, 4)}, {"B", pick(rng, 2, 4)}}), rng);
           t.record(-mutual_entropy(s, {"A"}, {"B"}));
         }
         return t.result();
       }},
      {"araki_lieb_factor_two",
       [](Rng& rng) {
         Tally t("araki_lieb_factor_two", tol::kIdentity);
         for (int i = 0; i < 200; ++i) {
           const bool pure = i % 4 == 0;
           const RegisterLayout layout({{"A", pick(rng, 2, 4)}, {"B", pick(rng, 2, 4)}});
           const DensityState s = pure ? to_density(random_pure(layout, rng)) : random_density(layout, rng);
           const double bound = 2.0 * std::min(subset_entropy(s, {"A"}), subset_entropy(s, {"B"}));
           t.record(mutual_entropy(s, {"A"}, {"B"}) - bound);
         }
         return t.result();
       }},
      {"strong_subadditivity",
       [](Rng& rng) {
         Tally t("strong_subadditivity", tol::kSign);
         for (int i = 0; i < 200; ++i) {
           const DensityState s = random_density(tri_layout(rng, 2, 3), rng);
           t.record(-conditional_mutual_entropy(s, {"A"}, {"B"}, {"C"}));
         }
         return t.result();
       }},
      {"chain_rule",
       [](Rng& rng) {
         Tally t("chain_rule", tol::kIdentity);
         for (int i = 0; i < 200; ++i) {
           const DensityState s = random_density(tri_layout(rng, 2, 3), rng);
           t.record(std::abs(chain_rule_residual(s, {"A"}, {"B"}, {"C"})));
         }
         return t.result();
       }},
      {"pure_center_zero",
       [](Rng& rng) {
         Tally t("pure_center_zero", tol::kIdentity);
         for (int i = 0; i < 100; ++i) {
           const PureState s = random_pure(tri_layout(rng, 2, 3), rng);
           t.record(std::abs(ternary_mutual_entropy(s, {"A"}, {"B"}, {"C"})));
         }
         return t.result();
       }},
      {"venn_region_sum",
       [](Rng& rng) {
         Tally t("venn_region_sum", tol::kIdentity);
         for (int i = 0; i < 100; ++i) {
           const DensityState s = random_density(tri_layout(rng, 2, 3), rng);
           const VennDiagram3 v = venn3(s, {"A"}, {"B"}, {"C"});
           t.record(std::abs(v.region_sum() - v.joint));
         }
         return t.result();
       }},
      {"channel_identities",
       [](Rng& rng) {
         Tally t("channel_identities", tol::kIdentity);
         std::vector<QuantumChannel> channels{make_identity(2), make_depolarizing(0.25), make_erasure(0.3)};
         for (int i = 0; i < 3; ++i) channels.push_back(random_channel(2, pick(rng, 2, 3), pick(rng, 1, 4), rng));
         for (const auto& ch : channels) {
           for (int i = 0; i < 100; ++i) {
             const ChannelReport r = channel_report(ch, random_density(RegisterLayout({{"Q", 2}}), rng));
             t.record(std::max(std::abs(r.residual_IL), std::abs(r.residual_IN)));
             t.record(-std::min({r.information_I, r.loss_L, r.noise_N}), tol::kSign);
           }
         }
         return t.result();
       }},
      {"concavity_in_input",
       [](Rng& rng) {
         Tally t("concavity_in_input", tol::kIdentity);
         for (int i = 0; i < 30; ++i) {
           const QuantumChannel ch = random_channel(2, 2, pick(rng, 1, 4), rng);
           const DensityState a = random_density(RegisterLayout({{"Q", 2}}), rng);
           const DensityState b = random_density(RegisterLayout({{"Q", 2}}), rng);
           for (double lambda : {0.25, 0.5, 0.75}) {
             const DensityState mix_in(a.layout(), lambda * a.matrix() + (1.0 - lambda) * b.matrix());
             t.record(lambda * information(ch, a) + (1.0 - lambda) * information(ch, b) - information(ch, mix_in));
           }
         }
         return t.result();
       }},
      {"convexity_in_channel",
       [](Rng& rng) {
         Tally t("convexity_in_channel", tol::kIdentity);
         for (int i = 0; i < 30; ++i) {
           const QuantumChannel a = random_channel(2, 2, pick(rng, 1, 3), rng);
           const QuantumChannel b = random_channel(2, 2, pick(rng, 1, 3), rng);
           const DensityState rho = random_density(RegisterLayout({{"Q", 2}}), rng);
           for (double lambda : {0.25, 0.5, 0.75}) {
             t.record(information(mix(lambda, a, b), rho) - lambda * information(a, rho) -
                      (1.0 - lambda) * information(b, rho));
           }
         }
         return t.result();
       }},
      {"purification_independence",
       [](Rng& rng) {
         Tally t("purification_independence", tol::kIdentity);
         for (int i = 0; i < 30; ++i) {
           const QuantumChannel ch = random_channel(2, pick(rng, 2, 3), pick(rng, 1, 3), rng);
           const DensityState rho = random_density(RegisterLayout({{"Q", 2}}), rng);
           const ChannelReport a = channel_report(ch, rho);
           // A second purification: rotate the reference and enlarge it.
           PureState other = purify(rho, "R");
           other = apply_operator(other, {"R"}, random_isometry(3, 2, rng), {3});
           const ChannelReport b = channel_report(ch, other, "Q");
           t.record(std::max({std::abs(a.information_I - b.information_I), std::abs(a.loss_L - b.loss_L),
                              std::abs(a.noise_N - b.noise_N)}));
         }
         return t.result();
       }},
      {"data_processing",
       [](Rng& rng) {
         Tally t("data_processing", 0.0);
         for (int i = 0; i < 30; ++i) {
           const std::size_t mid = pick(rng, 2, 3);
           const QuantumChannel a = random_channel(2, mid, pick(rng, 1, 3), rng);
           const QuantumChannel b = random_channel(mid, 2, pick(rng, 2, 3), rng);
           const DataProcessingRecord r = data_processing_check(a, b, random_density(RegisterLayout({{"Q", 2}}), rng));
           t.record(r.holds() ? 0.0 : 1.0);
         }
         return t.result();
       }},
      {"block_subadditivity_and_sandwich",
       [](Rng& rng) {
         Tally t("block_subadditivity_and_sandwich", tol::kIdentity);
         for (int i = 0; i < 30; ++i) {
           const std::size_t n = pick(rng, 1, 3);
           std::vector<Subsystem> subs{{"R", pick(rng, 2, 4)}};
           for (const auto& l : symbol_labels(n)) subs.push_back({l, 2});
           const PureState input = random_pure(RegisterLayout(subs), rng);
           std::vector<QuantumChannel> chans;
           for (std::size_t j = 0; j < n; ++j) chans.push_back(random_channel(2, pick(rng, 2, 3), pick(rng, 1, 3), rng));
           const BlockReport r = block_report(chans, input, symbol_labels(n));
           const double lower = r.sum_L() - 2.0 * r.correlation_M;
           t.record(std::max({r.joint_I - r.sum_I(), r.joint_L - r.sum_L(), lower - r.joint_L}));
           t.record(-r.correlation_M, tol::kSign);
         }
         return t.result();
       }},
      {"vanishing_loss_condition",
       [](Rng& rng) {
         Tally t("vanishing_loss_condition", 1e-6);
         // Lossless blocks: identity channels on random inputs, and
         // random channels whose outputs keep an isometric copy.
         for (int i = 0; i < 20; ++i) {
           const std::size_t n = pick(rng, 1, 3);
           std::vector<Subsystem> subs{{"R", pick(rng, 2, 4)}};
           for (const auto& l : symbol_labels(n)) subs.push_back({l, 2});
           const PureState input = random_pure(RegisterLayout(subs), rng);
           std::vector<QuantumChannel> chans;
           for (std::size_t j = 0; j < n; ++j) {
             chans.push_back(j % 2 == 0 ? make_unitary(random_unitary(2, rng)) : random_channel(2, 2, 2, rng));
           }
           const BlockReport r = block_report(chans, input, symbol_labels(n));
           if (r.joint_L <= tol::kIdentity) {
             t.record(2.0 * r.source_entropy - r.sum_I());
           } else {
             t.record(-1.0);
           }
         }
         return t.result();
       }},
      {"code_concentration",
       [](Rng&) {
         Tally t("code_concentration", tol::kCorrectable);
         for (const auto& code : {five_qubit_code(), four_two_code()}) {
           const PureState enc = encode_entangled(code);
           for (std::size_t e = 0; e <= code.n(); ++e) {
             for (const auto& p : erasure_patterns(code.n(), e)) {
               const PatternLoss l = erasure_pattern_loss(enc, {"R"}, code.n(), p);
               t.record(l.mutual_RQe <= tol::kCorrectable ? 2.0 * static_cast<double>(code.k()) - l.mutual_RQu : -1.0);
             }
           }
         }
         return t.result();
       }},
      {"singleton_consistency",
       [](Rng& rng) {
         Tally t("singleton_consistency", 0.0);
         std::vector<EncodingIsometry> codes{five_qubit_code(), four_two_code(), identity_code(1)};
         for (int i = 0; i < 8; ++i) {
           const std::size_t n = pick(rng, 1, 5);
           const std::size_t k = pick(rng, 0, std::min<std::size_t>(2, n));
           codes.emplace_back(k, n, random_isometry(std::size_t{1} << n, std::size_t{1} << k, rng), "random");
         }
         for (const auto& code : codes) {
           for (std::size_t e = 0; e <= code.n(); ++e) {
             const bool ok = verify_erasure_code(code, e).correctable;
             t.record(ok && code.k() > singleton_max_k(code.n(), e) ? 1.0 : 0.0);
           }
         }
         return t.result();
       }},
      {"mixture_single_symbol_exact",
       [](Rng& rng) {
         Tally t("mixture_single_symbol_exact", tol::kIdentity);
         for (int i = 0; i < 20; ++i) {
           const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
           const PureState input = random_pure(RegisterLayout({{"R", pick(rng, 2, 3)}, {"Q1", 2}}), rng);
           const MixtureAnalysis m = binomial_mixture_analysis(1, p, input, NoiseModel::Erasure);
           t.record(std::max(std::abs(m.joint_I - m.convex_bound), std::abs(m.weight_sum() - 1.0)));
         }
         return t.result();
       }},
      {"paired_pattern_step",
       [](Rng& rng) {
         Tally t("paired_pattern_step", tol::kIdentity);
         for (int i = 0; i < 30; ++i) {
           const std::size_t n = pick(rng, 2, 5);
           const std::size_t k = pick(rng, 1, 2);
           const EncodingIsometry code(k, n, random_isometry(std::size_t{1} << n, std::size_t{1} << k, rng), "random");
           const PureState enc = encode_entangled(code);
           const std::size_t e = pick(rng, 1, n / 2);
           std::vector<std::size_t> order(n);
           for (std::size_t j = 0; j < n; ++j) order[j] = j;
           std::shuffle(order.begin(), order.end(), rng);
           std::vector<std::size_t> a(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(e));
           std::vector<std::size_t> b(order.begin() + static_cast<std::ptrdiff_t>(e),
                                      order.begin() + static_cast<std::ptrdiff_t>(2 * e));
           std::sort(a.begin(), a.end());
           std::sort(b.begin(), b.end());
           const PairedPatternStep s = paired_pattern_step(enc, n, a, b);
           t.record(std::max(s.lhs - s.overlap_bound, s.overlap_bound - s.dimension_bound));
         }
         return t.result();
       }},
      {"bound_ordering",
       [](Rng&) {
         Tally t("bound_ordering", 0.0);
         for (int i = 0; i <= 250; ++i) {
           const double p = 0.25 * i / 250.0;
           t.record(bound_value(BoundFormula::DepolCloning4p, p) - bound_value(BoundFormula::Depol8p3, p));
         }
         return t.result();
       }},
      {"side_channel_assignment",
       [](Rng& rng) {
         Tally t("side_channel_assignment", 0.0);
         for (int i = 0; i < 20; ++i) {
           const SideChannelState sc = random_lossless_model(2, pick(rng, 2, 4), pick(rng, 2, 4), rng);
           const SideChannelDiagram d = side_channel_diagram(sc);
           t.record(static_cast<double>(d.violations.size()));
         }
         return t.result();
       }},
      {"side_channel_inequality_chain",
       [](Rng& rng) {
         Tally t("side_channel_inequality_chain", tol::kIdentity);
         for (int i = 0; i < 20; ++i) {
           const SideChannelState sc = random_lossless_model(pick(rng, 2, 3), pick(rng, 3, 4), pick(rng, 2, 4), rng);
           t.record(std::max({sc.k - sc.s, sc.s - sc.k - sc.c, sc.c - sc.s - sc.k}));
         }
         return t.result();
       }},
      {"side_channel_c_given_rq",
       [](Rng& rng) {
         Tally t("side_channel_c_given_rq", tol::kCorrectable);
         for (int i = 0; i < 20; ++i) {
           const SideChannelState sc = random_lossless_model(2, pick(rng, 2, 4), pick(rng, 2, 4), rng);
           t.record(std::abs(conditional_entropy(sc.state, {"C"}, {"R", "Q"})));
         }
         return t.result();
       }},
      {"classical_sandwich",
       [](Rng& rng) {
         Tally t("classical_sandwich", 0.0);
         std::uniform_real_distribution<double> uni(0.0, 1.0);
         auto random_dist = [&](std::size_t m) {
           std::vector<double> p(m);
           double s = 0.0;
           for (auto& x : p) s += (x = uni(rng) + 1e-3);
           for (auto& x : p) x /= s;
           return p;
         };
         for (int i = 0; i < 50; ++i) {
           const std::size_t n = pick(rng, 1, 3);
           std::vector<ClassicalChannel> chans;
           std::size_t in = 1;
           for (std::size_t j = 0; j < n; ++j) {
             const std::size_t a = pick(rng, 2, 4), b = pick(rng, 2, 4);
             std::vector<std::vector<double>> rows;
             for (std::size_t x = 0; x < a; ++x) rows.push_back(random_dist(b));
             chans.emplace_back(std::move(rows));
             in *= a;
           }
           const ClassicalBlockReport r = classical_block_report(chans, Distribution(random_dist(in)));
           const double sum_i = r.rate_bound * static_cast<double>(n);
           const bool rate_ok = (r.H_X - r.joint_L) / static_cast<double>(n) <= sum_i / static_cast<double>(n) + tol::kClassical;
           t.record(r.sandwich_holds && r.information_subadditive && rate_ok ? 0.0 : 1.0);
         }
         return t.result();
       }},
  };
  return all;
}

}  // namespace

bool PropertySuiteReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed(); });
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : battery()) out.push_back(p.name);
    return out;
  }();
  return names;
}

PropertySuiteReport run_property_suite(std::uint64_t seed, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (std::find(property_names().begin(), property_names().end(), n) == property_names().end()) {
      throw DomainError("unknown property '" + n + "'");
    }
  }
  PropertySuiteReport report;
  report.seed = seed;
  const auto& all = battery();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (std::find(names.begin(), names.end(), all[i].name) == names.end()) continue;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Rng rng(seq);
    report.results.push_back(all[i].run(rng));
  }
  return report;
}

PropertySuiteReport run_property_suite(std::uint64_t seed) { return run_property_suite(seed, property_names()); }

}  // namespace qvenn
