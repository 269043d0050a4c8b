#pragma once

#include <vector>

#include "qvenn/channel.hpp"

namespace qvenn {

/// Non-negative weights summing to 1 within 1e-12.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probabilities);

  const std::vector<double>& probabilities() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

  static Distribution uniform(std::size_t n);

 private:
  std::vector<double> p_;
};

/// Shannon entropy in bits.
double shannon_entropy(const std::vector<double>& p);

/// Transition matrix p(y|x), rows indexed by x.
class ClassicalChannel {
 public:
  explicit ClassicalChannel(std::vector<std::vector<double>> transition);

  std::size_t input_size() const { return rows_.size(); }
  std::size_t output_size() const { return rows_.front().size(); }
  double operator()(std::size_t x, std::size_t y) const { return rows_[x][y]; }
  const std::vector<std::vector<double>>& transition() const { return rows_; }

 private:
  std::vector<std::vector<double>> rows_;
};

ClassicalChannel binary_symmetric_channel(double q);
ClassicalChannel noiseless_channel(std::size_t n);

struct ClassicalReport {
  double I = 0.0;  // H(X:Y)
  double L = 0.0;  // H(X|Y)
  double N = 0.0;  // H(Y|X)
  double H_X = 0.0;
  double H_Y = 0.0;
};

ClassicalReport classical_report(const ClassicalChannel& ch, const Distribution& input);

struct ClassicalBlockReport {
  std::size_t n = 0;
  double H_X = 0.0;  // H(X1...Xn)
  double joint_I = 0.0;
  double joint_L = 0.0;
  std::vector<double> per_I;
  std::vector<double> per_L;
  double M = 0.0;
  double rate = 0.0;        // H(X1...Xn)/n
  double rate_bound = 0.0;  // sum I_i / n
  bool information_subadditive = false;
  bool loss_subadditive = false;
  bool sandwich_holds = false;  // sum L_i - M <= L <= sum L_i
};

/// `joint_input` is indexed row-major over the channel input alphabets,
/// X1 most significant.
ClassicalBlockReport classical_block_report(const std::vector<ClassicalChannel>& channels,
                                            const Distribution& joint_input);

/// Kraus set sqrt(p(y|x)) |y><x|, one operator per (x, y) pair.
QuantumChannel embed_classical_channel(const ClassicalChannel& ch);

struct ClassicalQuantumConsistency {
  ClassicalReport classical;
  double mutual_R_Q = 0.0;                 // S(R:Q')
  double cond_mutual_R_E_given_Q = 0.0;    // S(R:E'|Q')
  double cond_mutual_Q_E_given_R = 0.0;    // S(Q':E'|R), equals 2 H(Y|X) here
  double mutual_R_E = 0.0;                 // S(R:E'), equals H(X) here
  bool holds = false;
};

/// Prepares sum_x sqrt(p(x)) |x>_R' |x>_R |x>_X so that R is classically
/// correlated with X, runs the embedded channel on X and compares the
/// quantum quantities with H(X:Y), H(X|Y) and 2 H(Y|X) to 1e-8.
ClassicalQuantumConsistency classical_quantum_consistency(const ClassicalChannel& ch, const Distribution& input);

}  // namespace qvenn
