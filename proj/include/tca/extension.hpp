#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tca/group.hpp"

namespace tca {

/// A group extension 1 -> K -> G -> H -> 1 with a chosen section eta and the
/// resulting K-valued cocycle tau(x,y) = eta(x) eta(y) eta(xy)^-1.
struct GroupExtension {
  FiniteGroup total;               // G
  std::vector<int> kernel;         // sorted G-indices of K
  FiniteGroup kernel_group;        // K with its own indexing; K[i] = kernel[i] in G
  FiniteGroup quotient;            // H
  std::vector<int> projection;     // |G| entries, G-index -> H-index
  std::vector<int> section;        // |H| entries, H-index -> G-index
  std::vector<int> tau;            // |H|^2 row-major, values are K-indices
  std::string name;

  int project(int g) const { return projection[g]; }
  int lift(int x) const { return section[x]; }
  int tau_at(int x, int y) const { return tau[static_cast<std::size_t>(x) * quotient.order() + y]; }

  /// K-index of a G-element, or -1 if it lies outside the kernel.
  int kernel_index(int g) const;
};

/// Quotient G/K. Throws std::invalid_argument when K is not a subgroup or not
/// normal (message carries the witness). Returns H and the projection map;
/// cosets are ordered by their minimal element, so the identity coset is 0.
std::pair<FiniteGroup, std::vector<int>> quotient_group(const FiniteGroup& g,
                                                        const std::vector<int>& kernel);

/// Deterministic section: eta(x) = minimal-index element of the coset, which
/// in particular gives eta(e_H) = e_G.
std::vector<int> choose_section(const FiniteGroup& g, const FiniteGroup& h,
                                const std::vector<int>& projection);

/// tau(x,y) = eta(x) eta(y) eta(xy)^-1 as K-indices. Throws if the section
/// is not a right inverse of the projection.
std::vector<int> cocycle_table(const FiniteGroup& g, const std::vector<int>& kernel,
                               const FiniteGroup& h, const std::vector<int>& projection,
                               const std::vector<int>& section);

bool is_split(const GroupExtension& ext);

/// Exhaustive search for a section that is a group homomorphism. The search
/// space is |K|^(|H|-1); returns nothing if none exists or the cap is hit.
std::optional<std::vector<int>> find_homomorphic_section(const FiniteGroup& g,
                                                         const std::vector<int>& kernel,
                                                         const FiniteGroup& h,
                                                         const std::vector<int>& projection,
                                                         long long cap = 4'000'000);

/// Full pipeline with the minimal-index section.
GroupExtension make_extension(FiniteGroup g, std::vector<int> kernel, std::string name);

/// Same extension with a caller-chosen section (tau recomputed).
GroupExtension with_section(const GroupExtension& ext, std::vector<int> section);

/// "EXPR / SELECTOR" where SELECTOR is "<label,label,...>" (generated
/// subgroup) or a named subgroup ("base", "rot", "center", "trivial").
GroupExtension make_extension_from_spec(std::string_view spec, int order_cap = 512);

}  // namespace tca
