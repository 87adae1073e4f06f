#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tca/group.hpp"

namespace tca {

/// Parse failure with the offset (0-based) into the input and what was
/// expected there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position, std::string expected)
      : std::runtime_error(std::move(message)), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Expression tree for the group grammar:
///   expr := term ("x" term)*
///   term := atom | "sd(" expr "," expr "," name ")" | "wr(" expr "," n "," name ")"
///   atom := "C"n | "D"n | "S"n | "Q8"
/// Product is left-associative; whitespace is ignored; atoms are
/// case-sensitive. Action names: "inv", "cyc", "triv".
struct GroupExpr {
  enum class Kind { Atom, Product, Semidirect, Wreath };

  Kind kind = Kind::Atom;
  std::string atom;                  // "C", "D", "S" or "Q8"
  int param = 0;                     // n of Cn/Dn/Sn, copies of wr
  std::string action;                // sd/wr action name
  std::vector<GroupExpr> children;   // 2 for Product/Semidirect, 1 for Wreath

  bool operator==(const GroupExpr& other) const;
};

GroupExpr parse_group_expr(std::string_view text);
std::string render(const GroupExpr& e);

/// Order of the group the expression denotes, without building it.
long long expression_order(const GroupExpr& e);

/// Builds the group, enforcing the order cap. Throws ParseError (from
/// parsing), std::invalid_argument (bad action) or std::domain_error
/// (order cap exceeded).
FiniteGroup build_group(const GroupExpr& e, int order_cap = 512);
FiniteGroup build_group(std::string_view text, int order_cap = 512);

}  // namespace tca
