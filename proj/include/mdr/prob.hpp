#ifndef MDR_PROB_HPP
#define MDR_PROB_HPP

#include <cstddef>
#include <vector>

namespace mdr {

// Tolerance ledger. Structural invariants are checked one to two orders above
// accumulated rounding for alphabets up to 16 symbols.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kMarginalTol = 1e-9;
inline constexpr double kProbFloor = 1e-12;

// x * log2(x), extended by continuity to 0 at x = 0. Inputs are probabilities;
// negative or > 1 arguments are rejected.
double h(double x);

// Probability vector over a finite alphabet. Immutable after construction.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  // Indices with strictly positive mass.
  std::vector<std::size_t> support() const;
  bool full_support() const;

 private:
  std::vector<double> probs_;
};

// Entropy in bits, -sum_i h(p_i).
double entropy(const Distribution& d);

// Row-stochastic table: one Distribution per conditioning symbol.
class Kernel {
 public:
  explicit Kernel(std::vector<Distribution> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const Distribution& row(std::size_t i) const { return rows_[i]; }
  double operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

 private:
  std::vector<Distribution> rows_;
};

// Real-valued cost table, indexed (u, v) or reduced (u, w). All entries finite.
class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  explicit CostMatrix(std::vector<std::vector<double>> table);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t u, std::size_t v) const { return c_[u * cols_ + v]; }
  double& at(std::size_t u, std::size_t v) { return c_[u * cols_ + v]; }
  double min() const;
  double max() const;
  double range() const { return max() - min(); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> c_;
};

// Conditional table p[u][w] = P(U = u | W = w) over the active support of a
// weight vector lambda. Columns off the support are identically zero.
class Coupling {
 public:
  Coupling(std::size_t num_u, std::size_t num_w, std::vector<std::size_t> support);

  std::size_t num_u() const { return num_u_; }
  std::size_t num_w() const { return num_w_; }
  const std::vector<std::size_t>& support() const { return support_; }
  double operator()(std::size_t u, std::size_t w) const { return p_[u * num_w_ + w]; }
  double& at(std::size_t u, std::size_t w) { return p_[u * num_w_ + w]; }

  // Max deviation of active column sums from 1.
  double column_residual() const;
  // Throws SpecError if any active column is off by more than tol.
  void validate(double tol = 1e-10) const;

  // Product coupling: every active column equals pu.
  static Coupling product(const Distribution& pu, const Distribution& lambda);

 private:
  std::size_t num_u_ = 0, num_w_ = 0;
  std::vector<std::size_t> support_;
  std::vector<double> p_;
};

// I(U;W) in bits, computed as H(U) + sum_w lambda_w sum_u h(p_uw). Throws
// ConsistencyError when sum_w lambda_w p_uw strays from pu by more than
// kMarginalTol.
double mutual_information(const Distribution& pu, const Distribution& lambda, const Coupling& p);

// Expected-cost reduction through a decoder kernel:
// out(u, w) = sum_v kernel(v|w) c(u, v).
CostMatrix reduce_cost(const Kernel& kernel, const CostMatrix& c);

// Bayes inversion P_{W|U}(w|u) = lambda_w p_uw / pu_u. Requires full-support pu.
Kernel coupling_to_forward(const Distribution& pu, const Distribution& lambda, const Coupling& p);

// Max deviation of sum_w lambda_w p_uw from pu over u.
double marginal_residual(const Distribution& pu, const Distribution& lambda, const Coupling& p);

// sum_w lambda_w sum_u p_uw c(u, w) for a reduced cost table.
double expected_cost(const Distribution& lambda, const Coupling& p, const CostMatrix& c_bar);

}  // namespace mdr

#endif  // MDR_PROB_HPP
