#include "tca/extension.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "tca/group_expr.hpp"

namespace tca {

int GroupExtension::kernel_index(int g) const {
  auto it = std::lower_bound(kernel.begin(), kernel.end(), g);
  if (it == kernel.end() || *it != g) return -1;
  return static_cast<int>(it - kernel.begin());
}

std::pair<FiniteGroup, std::vector<int>> quotient_group(const FiniteGroup& g,
                                                        const std::vector<int>& kernel) {
  std::vector<int> k = kernel;
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (auto bad = check_subgroup(g, k))
    throw std::invalid_argument("quotient: kernel is not a subgroup: " + *bad);
  if (auto w = normality_witness(g, k))
    throw std::invalid_argument("quotient: kernel is not normal: " + g.label(w->first) + " * " +
                                g.label(w->second) + " * " + g.label(g.inverse(w->first)) +
                                " = " + g.label(g.conjugate(w->first, w->second)) +
                                " lies outside");

  // coset of x = { k x }; identified by its minimal element
  std::vector<int> coset_min(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int mn = g.order();
    for (int kk : k) mn = std::min(mn, g.op(kk, x));
    coset_min[x] = mn;
  }
  std::vector<int> reps;  // sorted ascending, identity coset first
  for (int x = 0; x < g.order(); ++x)
    if (coset_min[x] == x) reps.push_back(x);

  const int h_order = static_cast<int>(reps.size());
  std::vector<int> projection(g.order());
  for (int x = 0; x < g.order(); ++x)
    projection[x] = static_cast<int>(
        std::lower_bound(reps.begin(), reps.end(), coset_min[x]) - reps.begin());

  std::vector<int> table(static_cast<std::size_t>(h_order) * h_order);
  std::vector<std::string> labels(h_order);
  for (int i = 0; i < h_order; ++i) {
    labels[i] = "[" + g.label(reps[i]) + "]";
    for (int j = 0; j < h_order; ++j)
      table[static_cast<std::size_t>(i) * h_order + j] = projection[g.op(reps[i], reps[j])];
  }
  FiniteGroup h(h_order, std::move(table), std::move(labels));
  h.set_name(g.name() + "/K" + std::to_string(k.size()));
  return {std::move(h), std::move(projection)};
}

std::vector<int> choose_section(const FiniteGroup& g, const FiniteGroup& h,
                                const std::vector<int>& projection) {
  std::vector<int> section(h.order(), -1);
  for (int x = g.order() - 1; x >= 0; --x) section[projection[x]] = x;  // min index wins
  // the identity coset always lifts to the identity, whatever its index
  section[h.identity()] = g.identity();
  for (int v : section)
    if (v < 0) throw std::invalid_argument("choose_section: projection is not surjective");
  return section;
}

std::vector<int> cocycle_table(const FiniteGroup& g, const std::vector<int>& kernel,
                               const FiniteGroup& h, const std::vector<int>& projection,
                               const std::vector<int>& section) {
  for (int x = 0; x < h.order(); ++x)
    if (projection[section[x]] != x)
      throw std::invalid_argument("cocycle_table: section is not a right inverse at " +
                                  h.label(x));
  std::vector<int> tau(static_cast<std::size_t>(h.order()) * h.order());
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y) {
      int t = g.op(g.op(section[x], section[y]), g.inverse(section[h.op(x, y)]));
      auto it = std::lower_bound(kernel.begin(), kernel.end(), t);
      if (it == kernel.end() || *it != t)
        throw std::invalid_argument("cocycle_table: tau(" + h.label(x) + "," + h.label(y) +
                                    ") = " + g.label(t) + " is not in the kernel");
      tau[static_cast<std::size_t>(x) * h.order() + y] = static_cast<int>(it - kernel.begin());
    }
  return tau;
}

bool is_split(const GroupExtension& ext) {
  int e = ext.kernel_group.identity();
  return std::all_of(ext.tau.begin(), ext.tau.end(), [e](int v) { return v == e; });
}

std::optional<std::vector<int>> find_homomorphic_section(const FiniteGroup& g,
                                                         const std::vector<int>& kernel,
                                                         const FiniteGroup& h,
                                                         const std::vector<int>& projection,
                                                         long long cap) {
  (void)kernel;
  std::vector<std::vector<int>> coset_of(h.order());
  for (int x = 0; x < g.order(); ++x) coset_of[projection[x]].push_back(x);
  // a homomorphic section is forced to send the identity to the identity
  coset_of[h.identity()] = {g.identity()};

  long long budget = cap;
  std::vector<int> eta(h.order(), -1);
  std::function<bool(int)> dfs = [&](int next) -> bool {
    if (next == h.order()) return true;
    for (int cand : coset_of[next]) {
      if (--budget < 0) return false;
      eta[next] = cand;
      bool ok = true;
      for (int x = 0; x <= next && ok; ++x)
        for (int y = 0; y <= next && ok; ++y) {
          int xy = h.op(x, y);
          if (xy <= next) ok = g.op(eta[x], eta[y]) == eta[xy];
        }
      if (ok && dfs(next + 1)) return true;
      eta[next] = -1;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return eta;
}

GroupExtension make_extension(FiniteGroup g, std::vector<int> kernel, std::string name) {
  std::sort(kernel.begin(), kernel.end());
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
  auto [h, projection] = quotient_group(g, kernel);
  std::vector<int> section = choose_section(g, h, projection);
  std::vector<int> tau = cocycle_table(g, kernel, h, projection, section);
  FiniteGroup kernel_group = subgroup_as_group(g, kernel);
  kernel_group.set_name(name.empty() ? g.name() + "-kernel" : name + "-kernel");
  GroupExtension ext{std::move(g),       std::move(kernel), std::move(kernel_group),
                     std::move(h),       std::move(projection), std::move(section),
                     std::move(tau),     std::move(name)};
  return ext;
}

GroupExtension with_section(const GroupExtension& ext, std::vector<int> section) {
  GroupExtension out = ext;
  out.tau = cocycle_table(out.total, out.kernel, out.quotient, out.projection, section);
  out.section = std::move(section);
  return out;
}

GroupExtension make_extension_from_spec(std::string_view spec, int order_cap) {
  auto slash = spec.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("extension spec needs the form 'GROUP-EXPR / SUBGROUP'");
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view expr_text = trim(spec.substr(0, slash));
  std::string_view selector = trim(spec.substr(slash + 1));
  if (selector.empty()) throw std::invalid_argument("extension spec has an empty subgroup selector");

  GroupExpr expr = parse_group_expr(expr_text);
  FiniteGroup g = build_group(expr, order_cap);

  std::vector<int> kernel;
  std::string canonical_selector;
  if (selector.front() == '<') {
    if (selector.back() != '>')
      throw std::invalid_argument("generator selector must look like <label,label,...>");
    std::string_view inner = selector.substr(1, selector.size() - 2);
    std::vector<int> gens;
    std::string canon;
    std::size_t start = 0;
    while (start <= inner.size()) {
      std::size_t comma = inner.find(',', start);
      std::string_view piece =
          trim(inner.substr(start, comma == std::string_view::npos ? inner.size() - start
                                                                   : comma - start));
      if (!piece.empty()) {
        auto idx = g.element_by_label(piece);
        if (!idx)
          throw std::invalid_argument("no element labeled '" + std::string(piece) + "' in " +
                                      g.name());
        gens.push_back(*idx);
        if (!canon.empty()) canon += ",";
        canon += std::string(piece);
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (gens.empty()) throw std::invalid_argument("generator selector is empty");
    kernel = subgroup_generated(g, gens);
    canonical_selector = "<" + canon + ">";
  } else {
    std::string key(selector);
    auto& named = g.named_subgroups();
    auto it = named.find(key);
    if (it != named.end()) {
      kernel = it->second;
    } else if (key == "center") {
      kernel = g.center();
    } else {
      std::string known = "center";
      for (const auto& [k, v] : named) known += ", " + k;
      throw std::invalid_argument("unknown subgroup selector '" + key + "' (known: " + known +
                                  ")");
    }
    canonical_selector = key;
  }

  return make_extension(std::move(g), std::move(kernel),
                        render(expr) + "/" + canonical_selector);
}

}  // namespace tca
