#pragma once

// Brute-force reference implementations used to check the library. They
// share no code with it: permutations are plain vectors, words are letter
// lists, and linear algebra uses closed forms or power iteration.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Letters = std::vector<std::pair<int, int>>;  // (generator, sign)

inline Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a b)(j) = a(b(j)).
inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[b[j]];
  return c;
}

inline Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) c[a[j]] = static_cast<int>(j);
  return c;
}

inline int mismatches(const Perm& a, const Perm& b) {
  int k = 0;
  for (std::size_t j = 0; j < a.size(); ++j) k += a[j] != b[j];
  return k;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Letters reduce(const Letters& w) {
  Letters s;
  for (const auto& l : w) {
    if (!s.empty() && s.back().first == l.first && s.back().second == -l.second) s.pop_back();
    else s.push_back(l);
  }
  return s;
}

inline Perm evaluate(const Letters& w, const std::vector<Perm>& images, int n) {
  Perm r = identity(n);
  for (const auto& [g, sign] : w) r = compose(r, sign > 0 ? images[g] : inverse(images[g]));
  return r;
}

inline Letters commutator_letters() { return {{0, 1}, {1, 1}, {0, -1}, {1, -1}}; }

// Distance of [a, b] from the identity in Sym(n), as a mismatch count.
inline int commutator_count(const Perm& a, const Perm& b) {
  const int n = static_cast<int>(a.size());
  return mismatches(evaluate(commutator_letters(), {a, b}, n), identity(n));
}

struct CommutingPairs {
  int n = 0;
  std::vector<std::pair<Perm, Perm>> pairs;

  explicit CommutingPairs(int degree) : n(degree) {
    const auto perms = all_perms(n);
    for (const auto& a : perms)
      for (const auto& b : perms)
        if (compose(a, b) == compose(b, a)) pairs.emplace_back(a, b);
  }

  // Minimum over commuting pairs of max(d(a, a'), d(b, b')), as a count.
  int homdist_count(const Perm& a, const Perm& b) const {
    int best = n;
    for (const auto& [x, y] : pairs) best = std::min(best, std::max(mismatches(a, x), mismatches(b, y)));
    return best;
  }
};

// Every assignment of `generators` permutations of degree n that kills all relators.
inline std::vector<std::vector<Perm>> all_homs(const std::vector<Letters>& relators, int generators, int n) {
  const auto perms = all_perms(n);
  std::vector<std::vector<Perm>> out;
  std::vector<std::size_t> idx(generators, 0);
  while (true) {
    std::vector<Perm> images;
    for (int g = 0; g < generators; ++g) images.push_back(perms[idx[g]]);
    bool ok = true;
    for (const auto& r : relators) ok = ok && evaluate(r, images, n) == identity(n);
    if (ok) out.push_back(images);
    int g = generators - 1;
    while (g >= 0 && ++idx[g] == perms.size()) idx[g--] = 0;
    if (g < 0) break;
  }
  return out;
}

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat adjoint(const Mat& a) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<C>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = std::conj(a[j][i]);
  return c;
}

inline double frobenius(const Mat& a) {
  double s = 0;
  for (const auto& row : a)
    for (const auto& x : row) s += std::norm(x);
  return std::sqrt(s);
}

// Largest singular value by power iteration on a*a.
inline double op_norm(const Mat& a, int iterations = 500) {
  const std::size_t n = a.size();
  const Mat g = mat_mul(adjoint(a), a);
  std::vector<C> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = C(1.0 + 0.1 * static_cast<double>(i), 0.3 * static_cast<double>(i));
  double lambda = 0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<C> w(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += g[i][j] * v[j];
    double norm = 0;
    for (const auto& x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm == 0) return 0;
    for (auto& x : w) x /= norm;
    lambda = norm;
    v = w;
  }
  return std::sqrt(lambda);
}

// Singular values of a 2x2 matrix in closed form, descending.
inline std::pair<double, double> singular_values_2x2(const Mat& a) {
  const double f2 = std::pow(frobenius(a), 2);
  const double det = std::abs(a[0][0] * a[1][1] - a[0][1] * a[1][0]);
  const double disc = std::sqrt(std::max(0.0, f2 * f2 - 4 * det * det));
  return {std::sqrt((f2 + disc) / 2), std::sqrt(std::max(0.0, (f2 - disc) / 2))};
}

// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

}  // namespace oracle
