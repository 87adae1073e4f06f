#include "tca/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tca {

Complex DualGroup::value(int chi, int t) const {
  int k = char_exponents[chi][t];
  double angle = 2.0 * 3.14159265358979323846 * k / exponent;
  return {std::cos(angle), std::sin(angle)};
}

DualGroup dual_group(const FiniteGroup& k) {
  if (!k.is_abelian()) throw std::invalid_argument("dual_group: group is not abelian");
  const int n = k.order();

  int exponent = 1;
  for (int x = 0; x < n; ++x) exponent = std::lcm(exponent, k.element_order(x));

  // greedy generating set
  std::vector<int> gens;
  std::vector<int> closure = {k.identity()};
  while (static_cast<int>(closure.size()) < n) {
    for (int x = 0; x < n; ++x)
      if (std::find(closure.begin(), closure.end(), x) == closure.end()) {
        gens.push_back(x);
        closure = subgroup_generated(k, gens);
        break;
      }
  }

  // try every assignment of generator exponents; keep the consistent ones
  std::vector<std::vector<int>> chars;
  std::vector<int> assign(gens.size(), 0);
  auto emit = [&]() {
    std::vector<int> chi(n, -1);
    chi[k.identity()] = 0;
    std::vector<int> frontier = {k.identity()};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          int y = k.op(x, gens[gi]);
          int v = (chi[x] + assign[gi]) % exponent;
          if (chi[y] < 0) {
            chi[y] = v;
            next.push_back(y);
          } else if (chi[y] != v) {
            return;  // inconsistent assignment: not a character
          }
        }
      frontier = std::move(next);
    }
    // consistency across all pairs (closure walk above only checks generator steps)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((chi[x] + chi[y]) % exponent != chi[k.op(x, y)]) return;
    chars.push_back(std::move(chi));
  };
  std::function<void(std::size_t)> enumerate = [&](std::size_t gi) {
    if (gi == gens.size()) {
      emit();
      return;
    }
    for (int v = 0; v < exponent; ++v) {
      assign[gi] = v;
      enumerate(gi + 1);
    }
  };
  enumerate(0);

  if (static_cast<int>(chars.size()) != n)
    throw std::logic_error("dual_group: found " + std::to_string(chars.size()) +
                           " characters for a group of order " + std::to_string(n));
  std::sort(chars.begin(), chars.end());

  // the dual group law is pointwise addition of exponent vectors mod m
  auto index_of = [&](const std::vector<int>& c) {
    return static_cast<int>(std::lower_bound(chars.begin(), chars.end(), c) - chars.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l = "x[";
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (gi) l += ",";
      l += std::to_string(chars[i][gens[gi]]);
    }
    labels[i] = l + "]";
    for (int j = 0; j < n; ++j) {
      std::vector<int> sum(n);
      for (int t = 0; t < n; ++t) sum[t] = (chars[i][t] + chars[j][t]) % exponent;
      table[static_cast<std::size_t>(i) * n + j] = index_of(sum);
    }
  }
  FiniteGroup dual(n, std::move(table), std::move(labels));
  dual.set_name(k.name() + "^");

  DualGroup out{std::move(dual), exponent, std::move(chars)};
  return out;
}

Vec fourier_transform(const DualGroup& dual, const Vec& f, double weight) {
  const int n = static_cast<int>(dual.char_exponents.size());
  if (f.size() != n) throw std::invalid_argument("fourier_transform: length mismatch");
  Vec out = Vec::Zero(n);
  for (int chi = 0; chi < n; ++chi)
    for (int t = 0; t < n; ++t) out[chi] += weight * f[t] * std::conj(dual.value(chi, t));
  return out;
}

Vec inverse_fourier(const DualGroup& dual, const Vec& fhat) {
  const int n = static_cast<int>(dual.char_exponents.size());
  if (fhat.size() != n) throw std::invalid_argument("inverse_fourier: length mismatch");
  Vec out = Vec::Zero(n);
  for (int t = 0; t < n; ++t)
    for (int chi = 0; chi < n; ++chi) out[t] += fhat[chi] * dual.value(chi, t);
  return out;
}

}  // namespace tca
