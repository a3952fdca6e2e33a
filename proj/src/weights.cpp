#include "orbitkit/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace orbitkit {

namespace {

long long total_of(const WeightVector& w) {
  return std::accumulate(w.begin(), w.end(), 0LL);
}

void require_dominant(const WeightVector& w, const char* who) {
  if (!is_dominant(w))
    throw std::invalid_argument(std::string(who) + ": weight is not weakly decreasing");
}

// ceil(a / b) for b > 0, exact for negative a.
long long ceil_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return q + (r > 0 ? 1 : 0);
}

// Enumerates rows interlacing `row` (next[i] between row[i+1] and row[i])
// and recurses one level down the triangular pattern; `sums` collects the
// row sums top-down so the weight can be read off at the bottom.
void gt_descend(const std::vector<int>& row, std::vector<long long>& sums,
                std::map<WeightVector, int>& out);

void gt_fill(const std::vector<int>& row, std::vector<int>& next, std::size_t pos,
             std::vector<long long>& sums, std::map<WeightVector, int>& out) {
  if (pos == next.size()) {
    gt_descend(next, sums, out);
    return;
  }
  for (int v = row[pos + 1]; v <= row[pos]; ++v) {
    next[pos] = v;
    gt_fill(row, next, pos + 1, sums, out);
  }
}

void gt_descend(const std::vector<int>& row, std::vector<long long>& sums,
                std::map<WeightVector, int>& out) {
  sums.push_back(total_of(row));
  if (row.size() == 1) {
    // sums holds s_n, ..., s_1; the weight entry k (0-based) is s_{k+1} - s_k.
    const std::size_t n = sums.size();
    WeightVector w(n);
    for (std::size_t k = 0; k < n; ++k) {
      const long long below = (k == 0) ? 0 : sums[n - k];
      w[k] = static_cast<int>(sums[n - 1 - k] - below);
    }
    ++out[w];
  } else {
    std::vector<int> next(row.size() - 1);
    gt_fill(row, next, 0, sums, out);
  }
  sums.pop_back();
}

} // namespace

bool is_dominant(const WeightVector& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

bool dominance_leq(const WeightVector& lambda, const WeightVector& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("dominance_leq: length mismatch");
  require_dominant(lambda, "dominance_leq");
  require_dominant(mu, "dominance_leq");
  long long sl = 0, sm = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (i + 1 < lambda.size() && sl > sm) return false;
  }
  return sl == sm;
}

std::vector<WeightVector> weyl_orbit(const WeightVector& mu) {
  WeightVector w = mu;
  std::sort(w.begin(), w.end());
  std::vector<WeightVector> orbit;
  do {
    orbit.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return orbit;
}

bool hull_membership(const std::vector<Rational>& p, const WeightVector& mu) {
  if (p.size() != mu.size())
    throw std::invalid_argument("hull_membership: length mismatch");
  require_dominant(mu, "hull_membership");
  std::vector<Rational> q = p;
  std::sort(q.begin(), q.end(), [](const Rational& a, const Rational& b) { return b < a; });
  Rational sp;
  long long sm = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    sp += q[i];
    sm += mu[i];
    if (i + 1 < q.size() && Rational(sm) < sp) return false;
  }
  return sp == Rational(sm);
}

MajorizationSlack majorization_slack(std::vector<double> p, std::vector<double> spectrum) {
  if (p.size() != spectrum.size())
    throw std::invalid_argument("majorization_slack: length mismatch");
  std::sort(p.begin(), p.end(), std::greater<double>());
  std::sort(spectrum.begin(), spectrum.end(), std::greater<double>());
  double sp = 0, ss = 0, slack = 0;
  bool first = true;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    sp += p[i];
    ss += spectrum[i];
    const double gap = ss - sp;
    if (first || gap < slack) slack = gap;
    first = false;
  }
  const double tp = std::accumulate(p.begin(), p.end(), 0.0);
  const double ts = std::accumulate(spectrum.begin(), spectrum.end(), 0.0);
  return {slack, tp - ts};
}

std::map<WeightVector, int> weights_of_irrep(const WeightVector& lambda) {
  require_dominant(lambda, "weights_of_irrep");
  std::map<WeightVector, int> out;
  if (lambda.empty()) {
    out[WeightVector{}] = 1;
    return out;
  }
  std::vector<long long> sums;
  gt_descend(lambda, sums, out);
  return out;
}

long long weyl_dim(const WeightVector& lambda) {
  require_dominant(lambda, "weyl_dim");
  // Product of (lambda_i - lambda_j + j - i) / (j - i), reduced as we go so
  // the intermediates stay integral-sized.
  long long num = 1, den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      num *= lambda[i] - lambda[j] + static_cast<long long>(j - i);
      den *= static_cast<long long>(j - i);
      const long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  return num / den;
}

bool quantum_check(const WeightVector& lambda, const WeightVector& mu, bool verify) {
  const bool order = dominance_leq(lambda, mu);
  if (verify) {
    bool hull = true;
    for (const auto& [nu, mult] : weights_of_irrep(lambda)) {
      (void)mult;
      std::vector<Rational> q(nu.begin(), nu.end());
      if (!hull_membership(q, mu)) {
        hull = false;
        break;
      }
    }
    if (hull != order)
      throw std::logic_error("quantum_check: order and hull characterizations disagree");
  }
  return order;
}

std::vector<WeightVector> list_quantum_modules(const WeightVector& mu) {
  require_dominant(mu, "list_quantum_modules");
  const std::size_t n = mu.size();
  const long long total = total_of(mu);
  std::vector<long long> prefix(n);
  {
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) prefix[i] = (s += mu[i]);
  }
  std::vector<WeightVector> out;
  WeightVector cur(n);
  // Depth-first over entries, descending: the prefix-sum cap bounds each
  // entry above, and the need to reach the full total with the remaining
  // weakly-decreasing entries bounds it below.
  auto search = [&](auto&& self, std::size_t k, long long s) -> void {
    if (k == n) {
      if (s == total) out.push_back(cur);
      return;
    }
    const long long slots = static_cast<long long>(n - k);
    long long hi = prefix[k] - s;
    if (k > 0) hi = std::min<long long>(hi, cur[k - 1]);
    const long long lo = ceil_div(total - s, slots);
    for (long long v = hi; v >= lo; --v) {
      cur[k] = static_cast<int>(v);
      self(self, k + 1, s + v);
    }
  };
  if (n > 0) search(search, 0, 0);
  else if (total == 0) out.push_back({});
  return out;
}

PartitionReport partition_check(const WeightVector& lambda, const WeightVector& mu,
                                const std::vector<double>& z) {
  if (!dominance_leq(lambda, mu))
    throw std::invalid_argument("partition_check: lambda is not below mu");
  const std::size_t n = mu.size();
  if (z.size() != n)
    throw std::invalid_argument("partition_check: direction length mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (z[i] == z[j])
        throw std::invalid_argument("partition_check: singular direction (equal entries)");

  double lhs = 0;
  long long dim = 0;
  for (const auto& [nu, mult] : weights_of_irrep(lambda)) {
    double e = 0;
    for (std::size_t i = 0; i < n; ++i) e += nu[i] * z[i];
    lhs += mult * std::exp(-e);
    dim += mult;
  }
  lhs /= static_cast<double>(dim);

  double rhs = 0;
  for (const auto& p : weyl_orbit(mu)) {
    double e = 0, denom = 1;
    for (std::size_t i = 0; i < n; ++i) e += p[i] * z[i];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p[i] < p[j]) denom *= z[i] - z[j];
    rhs += std::exp(-e) / denom;
  }
  double vol = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mu[i] > mu[j]) vol *= static_cast<double>(mu[i] - mu[j]) / static_cast<double>(j - i);
  rhs /= vol;

  return {lhs, rhs, lhs >= rhs};
}

} // namespace orbitkit
