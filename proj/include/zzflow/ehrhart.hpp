#pragma once

// Exact lattice-point counts for dilates of the unit flow polytope and the
// h*-polynomial derived from them.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zzflow/error.hpp"
#include "zzflow/graph.hpp"

namespace zzflow {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with exact integer coefficients, lowest degree first. Trailing
/// zeros are trimmed so equal polynomials compare equal.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// Generating polynomial sum_k z^{values[k]}.
  static Polynomial from_values(const std::vector<int>& values) {
    std::vector<BigInt> c;
    for (int v : values) {
      if (v < 0) throw InvalidArgument("negative statistic value");
      if (c.size() <= static_cast<std::size_t>(v)) c.resize(static_cast<std::size_t>(v) + 1);
      c[static_cast<std::size_t>(v)] += 1;
    }
    return Polynomial(std::move(c));
  }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  BigInt sum() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  /// Comma separated coefficients, "0" for the zero polynomial.
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k) s += ",";
      s += coeffs_[k].str();
    }
    return s;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

/// Dimension of the unit flow polytope: |E| - |V| + 1 = n.
inline int polytope_dimension(int n) { return edge_count(n) - n + 1; }

/// Number of nonnegative integer flows sending t units from vertex 1 to
/// vertex n. Sweeps the vertices in order; the state is the pending inflow
/// into the next two vertices (the only edges crossing the cut).
inline BigInt lattice_count(int n, int t) {
  require_graph_size(n);
  if (t < 0) throw InvalidArgument("dilation must be nonnegative");
  using State = std::pair<int, int>;  // (inflow to v, inflow to v+1)
  std::map<State, BigInt> states;
  // Source: x_1 and y_0 both enter vertex 2, y_1 enters vertex 3.
  for (int to3 = 0; to3 <= t; ++to3) states[{t - to3, to3}] += t - to3 + 1;
  for (int v = 2; v <= n - 2; ++v) {
    std::map<State, BigInt> next;
    for (const auto& [st, ways] : states) {
      const auto [in_v, in_next] = st;
      for (int on_x = 0; on_x <= in_v; ++on_x) {
        next[{in_next + on_x, in_v - on_x}] += ways;
      }
    }
    states = std::move(next);
  }
  // Both edges out of n-1 end at the sink.
  BigInt total = 0;
  for (const auto& [st, ways] : states) total += ways * (st.first + 1);
  return total;
}

/// h*_k = sum_{j<=k} (-1)^{k-j} C(d+1, k-j) L(j), k = 0..d.
inline Polynomial hstar_from_counts(const std::vector<BigInt>& counts, int dim) {
  if (counts.size() < static_cast<std::size_t>(dim) + 1) {
    throw InvalidArgument("need lattice counts for t = 0..d");
  }
  std::vector<BigInt> h;
  for (int k = 0; k <= dim; ++k) {
    BigInt s = 0;
    for (int j = 0; j <= k; ++j) {
      BigInt term = binomial(dim + 1, k - j) * counts[static_cast<std::size_t>(j)];
      if ((k - j) % 2) s -= term;
      else s += term;
    }
    h.push_back(s);
  }
  return Polynomial(std::move(h));
}

inline Polynomial hstar_ehrhart(int n) {
  require_graph_size(n);
  const int d = polytope_dimension(n);
  std::vector<BigInt> counts;
  for (int t = 0; t <= d; ++t) counts.push_back(lattice_count(n, t));
  Polynomial h = hstar_from_counts(counts, d);
  for (const auto& c : h.coeffs()) {
    if (c < 0) {
      throw ConsistencyFault("negative h* coefficient for n=" + std::to_string(n) + ": " + h.str());
    }
  }
  return h;
}

/// L(t) = sum_k h*_k C(t + d - k, d).
inline BigInt ehrhart_value(const Polynomial& hstar, int dim, int t) {
  BigInt s = 0;
  for (std::size_t k = 0; k < hstar.coeffs().size(); ++k) {
    s += hstar.coeffs()[k] * binomial(t + dim - static_cast<long long>(k), dim);
  }
  return s;
}

}  // namespace zzflow
