#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tca {

/// A finite group given by its Cayley table over elements 0..order-1.
/// Instances built by the constructors in this header are groups by
/// construction; arbitrary tables (including broken ones) are accepted so
/// that verify_group_axioms can report violations as data.
class FiniteGroup {
 public:
  /// table is row-major: table[a * order + b] = index of a*b.
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels = {});

  int order() const { return order_; }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  bool valid() const { return identity_ >= 0; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }

  /// g * a * g^-1
  int conjugate(int g, int a) const { return op(op(g, a), inverse(g)); }
  int power(int a, int k) const;
  int element_order(int a) const;
  bool is_abelian() const;
  bool is_cyclic() const;

  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> element_by_label(std::string_view l) const;

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Subgroups the construction knows about ("base", "rot", "center", ...),
  /// each a sorted list of element indices.
  const std::map<std::string, std::vector<int>>& named_subgroups() const { return named_subgroups_; }
  void add_named_subgroup(std::string key, std::vector<int> elements);

  std::vector<int> center() const;

 private:
  int order_;
  std::vector<int> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
  std::map<std::string, std::vector<int>> named_subgroups_;
};

/// One failed group axiom together with the elements that witness it.
struct AxiomViolation {
  std::string axiom;            // "closure", "associativity", "identity", "inverse"
  std::array<int, 3> witness;   // unused slots are -1
  std::string detail;
};

/// Exhaustive axiom check; violations are data, not errors.
std::vector<AxiomViolation> verify_group_axioms(const FiniteGroup& g);

// ---- constructors ---------------------------------------------------------

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);    // order 2n
FiniteGroup symmetric_group(int n);   // order n!
FiniteGroup quaternion_group();       // Q8

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// B acts on A through `act`: act[b] is a permutation of A's elements, and
/// must be an automorphism for every b with act[e_B] = id and
/// act[b1*b2] = act[b1] . act[b2]. Throws std::invalid_argument otherwise.
FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               const std::vector<std::vector<int>>& act);

// ---- subgroups ------------------------------------------------------------

/// Closure of `generators` under product; sorted indices.
std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators);

/// Empty optional if `elements` is a subgroup, else a short description.
std::optional<std::string> check_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

/// Empty optional if normal; else witness pair (g, k) with g k g^-1 outside.
std::optional<std::pair<int, int>> normality_witness(const FiniteGroup& g,
                                                     const std::vector<int>& elements);

/// The subgroup as a FiniteGroup of its own; `elements` must be sorted and
/// closed. Element i of the result is g-element elements[i]; labels carried over.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elements);

/// Exhaustive isomorphism test, capped at order 16 (throws beyond).
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace tca
