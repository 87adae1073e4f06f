#include "tca/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tca {

namespace {

std::vector<std::string> default_labels(int order) {
  std::vector<std::string> out(order);
  for (int i = 0; i < order; ++i) out[i] = "g" + std::to_string(i);
  return out;
}

bool table_closed(int order, const std::vector<int>& table) {
  for (int v : table)
    if (v < 0 || v >= order) return false;
  return true;
}

std::string power_label(const std::string& base, int k) {
  if (k == 0) return "e";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ <= 0) throw std::invalid_argument("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("Cayley table size does not match order");
  if (labels_.empty()) labels_ = default_labels(order_);
  if (labels_.size() != static_cast<std::size_t>(order_))
    throw std::invalid_argument("label count does not match order");

  // Identity and inverses are only resolved for closed tables; otherwise the
  // group is left in the "invalid" state and verify_group_axioms tells why.
  inverse_.assign(order_, -1);
  if (!table_closed(order_, table_)) return;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g) ok = op(e, g) == g && op(g, e) == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) return;
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (op(a, b) == identity_ && op(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
}

int FiniteGroup::power(int a, int k) const {
  if (k < 0) return power(inverse(a), -k);
  int acc = identity_;
  for (int i = 0; i < k; ++i) acc = op(acc, a);
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int acc = a;
  for (int m = 1; m <= order_; ++m) {
    if (acc == identity_) return m;
    acc = op(acc, a);
  }
  throw std::logic_error("element order not found; table is not a group");
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (int a = 0; a < order_; ++a)
    if (element_order(a) == order_) return true;
  return false;
}

std::optional<int> FiniteGroup::element_by_label(std::string_view l) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == l) return i;
  return std::nullopt;
}

void FiniteGroup::add_named_subgroup(std::string key, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  named_subgroups_[std::move(key)] = std::move(elements);
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int a = 0; a < order_; ++a) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b) central = op(a, b) == op(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<AxiomViolation> verify_group_axioms(const FiniteGroup& g) {
  std::vector<AxiomViolation> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = g.op(a, b);
      if (v < 0 || v >= n)
        out.push_back({"closure", {a, b, -1},
                       "table[" + g.label(a) + "," + g.label(b) + "] = " + std::to_string(v)});
    }
  if (!out.empty()) return out;  // later checks would index out of range

  constexpr std::size_t report_cap = 1000;
  for (int a = 0; a < n && out.size() < report_cap; ++a)
    for (int b = 0; b < n && out.size() < report_cap; ++b)
      for (int c = 0; c < n && out.size() < report_cap; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          out.push_back({"associativity", {a, b, c},
                         "(" + g.label(a) + " " + g.label(b) + ") " + g.label(c) + " != " +
                             g.label(a) + " (" + g.label(b) + " " + g.label(c) + ")"});

  if (!g.valid()) {
    out.push_back({"identity", {-1, -1, -1}, "no two-sided identity element"});
    return out;
  }
  for (int a = 0; a < n; ++a)
    if (g.inverse(a) < 0)
      out.push_back({"inverse", {a, -1, -1}, g.label(a) + " has no two-sided inverse"});
  return out;
}

// ---- constructors ---------------------------------------------------------

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = power_label("a", i);
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  }
  FiniteGroup g(n, std::move(table), std::move(labels));
  g.set_name("C" + std::to_string(n));
  g.add_named_subgroup("trivial", {0});
  return g;
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_group: n must be >= 1");
  const int order = 2 * n;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(order);
  auto idx = [n](int rot, int flip) { return flip * n + ((rot % n) + n) % n; };
  for (int i = 0; i < n; ++i) {
    labels[idx(i, 0)] = power_label("r", i);
    labels[idx(i, 1)] = i == 0 ? "s" : power_label("r", i) + "s";
  }
  // (r^i s^u)(r^j s^v) = r^(i + j or i - j) s^(u xor v)
  for (int u = 0; u < 2; ++u)
    for (int i = 0; i < n; ++i)
      for (int v = 0; v < 2; ++v)
        for (int j = 0; j < n; ++j) {
          int a = idx(i, u), b = idx(j, v);
          int rot = u == 0 ? i + j : i - j;
          table[static_cast<std::size_t>(a) * order + b] = idx(rot, u ^ v);
        }
  FiniteGroup g(order, std::move(table), std::move(labels));
  g.set_name("D" + std::to_string(n));
  std::vector<int> rot(n);
  std::iota(rot.begin(), rot.end(), 0);
  g.add_named_subgroup("rot", rot);
  g.add_named_subgroup("trivial", {0});
  return g;
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric_group: n must be in [1, 6]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int i = 0; i < order; ++i) {
    std::string l;
    for (int v : perms[i]) l += static_cast<char>('0' + v);
    labels[i] = l;
    for (int j = 0; j < order; ++j) {
      std::vector<int> q(n);
      for (int t = 0; t < n; ++t) q[t] = perms[i][perms[j][t]];  // (i . j)(t)
      table[static_cast<std::size_t>(i) * order + j] = index_of(q);
    }
  }
  FiniteGroup g(order, std::move(table), std::move(labels));
  g.set_name("S" + std::to_string(n));
  g.add_named_subgroup("trivial", {0});
  return g;
}

FiniteGroup quaternion_group() {
  // element = sign * axis, axis in {1, i, j, k}; index = 2*axis + (sign < 0)
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1}};
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_mul[ax][bx];
      table[static_cast<std::size_t>(a) * 8 + b] = 2 * axis_mul[ax][bx] + (sign < 0 ? 1 : 0);
    }
  FiniteGroup g(8, std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  g.set_name("Q8");
  g.add_named_subgroup("center", {0, 1});
  g.add_named_subgroup("trivial", {0});
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), order = na * nb;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(order);
  auto idx = [nb](int ia, int ib) { return ia * nb + ib; };
  for (int ia = 0; ia < na; ++ia)
    for (int ib = 0; ib < nb; ++ib) {
      labels[idx(ia, ib)] = "(" + a.label(ia) + "," + b.label(ib) + ")";
      for (int ja = 0; ja < na; ++ja)
        for (int jb = 0; jb < nb; ++jb)
          table[static_cast<std::size_t>(idx(ia, ib)) * order + idx(ja, jb)] =
              idx(a.op(ia, ja), b.op(ib, jb));
    }
  FiniteGroup g(order, std::move(table), std::move(labels));
  g.set_name(a.name() + "x" + b.name());
  std::vector<int> base(na);
  for (int ia = 0; ia < na; ++ia) base[ia] = idx(ia, 0);
  g.add_named_subgroup("base", base);
  g.add_named_subgroup("trivial", {0});
  return g;
}

FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               const std::vector<std::vector<int>>& act) {
  const int na = a.order(), nb = b.order();
  if (static_cast<int>(act.size()) != nb)
    throw std::invalid_argument("semidirect_product: need one permutation per acting element");
  for (int ib = 0; ib < nb; ++ib) {
    const auto& phi = act[ib];
    if (static_cast<int>(phi.size()) != na)
      throw std::invalid_argument("semidirect_product: permutation size mismatch");
    std::vector<bool> seen(na, false);
    for (int v : phi) {
      if (v < 0 || v >= na || seen[v])
        throw std::invalid_argument("semidirect_product: action is not a permutation");
      seen[v] = true;
    }
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < na; ++y)
        if (phi[a.op(x, y)] != a.op(phi[x], phi[y]))
          throw std::invalid_argument("semidirect_product: action of " + b.label(ib) +
                                      " is not an automorphism (fails at " + a.label(x) + "," +
                                      a.label(y) + ")");
  }
  for (int ib = 0; ib < nb; ++ib)
    for (int jb = 0; jb < nb; ++jb)
      for (int x = 0; x < na; ++x)
        if (act[b.op(ib, jb)][x] != act[ib][act[jb][x]])
          throw std::invalid_argument("semidirect_product: action is not a homomorphism at (" +
                                      b.label(ib) + "," + b.label(jb) + ")");

  const int order = na * nb;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(order);
  auto idx = [nb](int ia, int ib) { return ia * nb + ib; };
  // (a1, b1)(a2, b2) = (a1 . phi_b1(a2), b1 b2)
  for (int ia = 0; ia < na; ++ia)
    for (int ib = 0; ib < nb; ++ib) {
      labels[idx(ia, ib)] = "(" + a.label(ia) + "," + b.label(ib) + ")";
      for (int ja = 0; ja < na; ++ja)
        for (int jb = 0; jb < nb; ++jb)
          table[static_cast<std::size_t>(idx(ia, ib)) * order + idx(ja, jb)] =
              idx(a.op(ia, act[ib][ja]), b.op(ib, jb));
    }
  FiniteGroup g(order, std::move(table), std::move(labels));
  g.set_name("sd(" + a.name() + "," + b.name() + ")");
  std::vector<int> base(na);
  for (int ia = 0; ia < na; ++ia) base[ia] = idx(ia, 0);
  g.add_named_subgroup("base", base);
  g.add_named_subgroup("trivial", {0});
  return g;
}

// ---- subgroups ------------------------------------------------------------

std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators) {
  std::set<int> closure = {g.identity()};
  std::vector<int> frontier = {g.identity()};
  for (int v : generators)
    if (closure.insert(v).second) frontier.push_back(v);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : generators) {
        int y = g.op(x, s);
        if (closure.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

std::optional<std::string> check_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  if (elements.empty()) return "empty set";
  std::set<int> members(elements.begin(), elements.end());
  for (int v : elements)
    if (v < 0 || v >= g.order()) return "element index " + std::to_string(v) + " out of range";
  if (!members.count(g.identity())) return "does not contain the identity";
  for (int x : elements)
    for (int y : elements)
      if (!members.count(g.op(x, y)))
        return "not closed: " + g.label(x) + " * " + g.label(y) + " = " + g.label(g.op(x, y));
  for (int x : elements)
    if (!members.count(g.inverse(x))) return "not inverse-closed at " + g.label(x);
  return std::nullopt;
}

std::optional<std::pair<int, int>> normality_witness(const FiniteGroup& g,
                                                     const std::vector<int>& elements) {
  std::set<int> members(elements.begin(), elements.end());
  for (int x = 0; x < g.order(); ++x)
    for (int k : elements)
      if (!members.count(g.conjugate(x, k))) return std::make_pair(x, k);
  return std::nullopt;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elements) {
  if (auto bad = check_subgroup(g, elements))
    throw std::invalid_argument("subgroup_as_group: " + *bad);
  const int n = static_cast<int>(elements.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < n; ++i) pos[elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = g.label(elements[i]);
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = pos[g.op(elements[i], elements[j])];
  }
  FiniteGroup out(n, std::move(table), std::move(labels));
  out.set_name(g.name() + "-sub" + std::to_string(n));
  return out;
}

namespace {

// Backtracking isomorphism search: map a greedy generating set of `a` to
// candidate images in `b` of matching element order, extending by closure.
bool extend_iso(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& image,
                const std::vector<int>& gens, std::size_t next) {
  // close the partial map; fail on conflicts
  std::vector<int> known;
  for (int x = 0; x < a.order(); ++x)
    if (image[x] >= 0) known.push_back(x);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < known.size(); ++i)
      for (std::size_t j = 0; j < known.size(); ++j) {
        int x = known[i], y = known[j];
        int xy = a.op(x, y), im = b.op(image[x], image[y]);
        if (image[xy] < 0) {
          for (int z : known)
            if (image[z] == im) return false;  // not injective
          image[xy] = im;
          known.push_back(xy);
          grew = true;
        } else if (image[xy] != im) {
          return false;
        }
      }
  }
  if (next == gens.size())
    return static_cast<int>(known.size()) == a.order();
  int gen = gens[next];
  if (image[gen] >= 0) return extend_iso(a, b, image, gens, next + 1);
  int want = a.element_order(gen);
  for (int cand = 0; cand < b.order(); ++cand) {
    if (b.element_order(cand) != want) continue;
    bool used = false;
    for (int x = 0; x < a.order(); ++x)
      if (image[x] == cand) used = true;
    if (used) continue;
    std::vector<int> saved = image;
    image[gen] = cand;
    if (extend_iso(a, b, image, gens, next + 1)) return true;
    image = saved;
  }
  return false;
}

}  // namespace

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > 16) throw std::domain_error("isomorphic: exhaustive search capped at order 16");
  // order-profile prefilter
  std::vector<int> pa, pb;
  for (int x = 0; x < a.order(); ++x) pa.push_back(a.element_order(x));
  for (int x = 0; x < b.order(); ++x) pb.push_back(b.element_order(x));
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return false;

  std::vector<int> gens;
  std::vector<int> closure = {a.identity()};
  while (static_cast<int>(closure.size()) < a.order()) {
    for (int x = 0; x < a.order(); ++x)
      if (std::find(closure.begin(), closure.end(), x) == closure.end()) {
        gens.push_back(x);
        closure = subgroup_generated(a, gens);
        break;
      }
  }
  std::vector<int> image(a.order(), -1);
  image[a.identity()] = b.identity();
  return extend_iso(a, b, image, gens, 0);
}

}  // namespace tca
