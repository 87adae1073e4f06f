#include "tca/group_expr.hpp"

#include <cctype>
#include <stdexcept>

namespace tca {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) throw ParseError("expected '" + std::string(1, c) + "' in " + what, pos, std::string(1, c));
  }

  bool lookahead_keyword(std::string_view kw) {
    skip_ws();
    return text.substr(pos, kw.size()) == kw;
  }

  int integer(const std::string& what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer in " + what, pos, "digit");
    long long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (text[i] - '0');
      if (v > 100000) throw ParseError("integer too large", start, "smaller integer");
    }
    return static_cast<int>(v);
  }

  std::string action_name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::islower(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected action name", pos, "inv, cyc or triv");
    return std::string(text.substr(start, pos - start));
  }

  GroupExpr term() {
    char c = peek();
    if (lookahead_keyword("sd(")) {
      pos += 2;
      expect('(', "sd");
      GroupExpr e;
      e.kind = GroupExpr::Kind::Semidirect;
      e.children.push_back(expr());
      expect(',', "sd");
      e.children.push_back(expr());
      expect(',', "sd");
      e.action = action_name();
      expect(')', "sd");
      return e;
    }
    if (lookahead_keyword("wr(")) {
      pos += 2;
      expect('(', "wr");
      GroupExpr e;
      e.kind = GroupExpr::Kind::Wreath;
      e.children.push_back(expr());
      expect(',', "wr");
      e.param = integer("wr copy count");
      expect(',', "wr");
      e.action = action_name();
      expect(')', "wr");
      return e;
    }
    if (c == 'Q') {
      std::size_t at = pos;
      ++pos;
      if (integer("Q8") != 8) throw ParseError("only Q8 is available", at, "Q8");
      GroupExpr e;
      e.kind = GroupExpr::Kind::Atom;
      e.atom = "Q8";
      e.param = 8;
      return e;
    }
    if (c == 'C' || c == 'D' || c == 'S') {
      ++pos;
      GroupExpr e;
      e.kind = GroupExpr::Kind::Atom;
      e.atom = std::string(1, c);
      e.param = integer(std::string(1, c) + "n atom");
      return e;
    }
    throw ParseError("expected a group expression", pos, "Cn, Dn, Sn, Q8, sd(, wr(");
  }

  GroupExpr expr() {
    GroupExpr left = term();
    while (peek() == 'x') {
      ++pos;
      GroupExpr node;
      node.kind = GroupExpr::Kind::Product;
      node.children.push_back(std::move(left));
      node.children.push_back(term());
      left = std::move(node);
    }
    return left;
  }
};

}  // namespace

bool GroupExpr::operator==(const GroupExpr& other) const {
  return kind == other.kind && atom == other.atom && param == other.param &&
         action == other.action && children == other.children;
}

GroupExpr parse_group_expr(std::string_view text) {
  Parser p{text};
  GroupExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("unexpected trailing input", p.pos, "end of expression");
  return e;
}

std::string render(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Atom:
      return e.atom == "Q8" ? "Q8" : e.atom + std::to_string(e.param);
    case GroupExpr::Kind::Product:
      return render(e.children[0]) + "x" + render(e.children[1]);
    case GroupExpr::Kind::Semidirect:
      return "sd(" + render(e.children[0]) + "," + render(e.children[1]) + "," + e.action + ")";
    case GroupExpr::Kind::Wreath:
      return "wr(" + render(e.children[0]) + "," + std::to_string(e.param) + "," + e.action + ")";
  }
  throw std::logic_error("unreachable");
}

long long expression_order(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Atom: {
      if (e.atom == "Q8") return 8;
      if (e.atom == "C") return e.param;
      if (e.atom == "D") return 2LL * e.param;
      // Sn
      long long f = 1;
      for (int i = 2; i <= e.param; ++i) {
        f *= i;
        if (f > 1'000'000'000LL) return f;  // far beyond any cap already
      }
      return f;
    }
    case GroupExpr::Kind::Product:
    case GroupExpr::Kind::Semidirect:
      return expression_order(e.children[0]) * expression_order(e.children[1]);
    case GroupExpr::Kind::Wreath: {
      long long base = expression_order(e.children[0]);
      long long total = e.param;
      for (int i = 0; i < e.param; ++i) {
        total *= base;
        if (total > 1'000'000'000LL) return total;
      }
      return total;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

/// Number of equal left-assoc product factors: W x W x ... x W.
int count_equal_factors(const GroupExpr& e, const GroupExpr*& factor) {
  if (e.kind == GroupExpr::Kind::Product) {
    int left = count_equal_factors(e.children[0], factor);
    if (left == 0 || !(e.children[1] == *factor)) return 0;
    return left + 1;
  }
  factor = &e;
  return 1;
}

std::vector<std::vector<int>> trivial_action(int na, int nb) {
  std::vector<int> id(na);
  for (int i = 0; i < na; ++i) id[i] = i;
  return std::vector<std::vector<int>>(nb, id);
}

std::vector<std::vector<int>> make_action(const std::string& name, const GroupExpr& kernel_expr,
                                          const FiniteGroup& a, const GroupExpr& acting_expr,
                                          const FiniteGroup& b) {
  if (acting_expr.kind != GroupExpr::Kind::Atom || acting_expr.atom != "C")
    throw std::invalid_argument("named actions need a cyclic acting group Cn");
  const int na = a.order(), nb = b.order();
  if (name == "triv") return trivial_action(na, nb);
  if (name == "inv") {
    if (!a.is_abelian()) throw std::invalid_argument("action 'inv' needs an abelian kernel");
    std::vector<std::vector<int>> act(nb, std::vector<int>(na));
    for (int k = 0; k < nb; ++k)
      for (int x = 0; x < na; ++x) act[k][x] = (k % 2 == 0) ? x : a.inverse(x);
    return act;
  }
  if (name == "cyc") {
    const GroupExpr* factor = nullptr;
    int m = count_equal_factors(kernel_expr, factor);
    if (m < 1) throw std::invalid_argument("action 'cyc' needs a direct power W x ... x W");
    if (nb % m != 0)
      throw std::invalid_argument("action 'cyc' needs the factor count (" + std::to_string(m) +
                                  ") to divide the acting order (" + std::to_string(nb) + ")");
    long long w = expression_order(*factor);
    // left-assoc product indexes factors in mixed radix, most significant first
    std::vector<int> rot(na);
    for (int x = 0; x < na; ++x) {
      std::vector<int> digit(m);
      int rest = x;
      for (int d = m - 1; d >= 0; --d) {
        digit[d] = rest % static_cast<int>(w);
        rest /= static_cast<int>(w);
      }
      std::vector<int> shifted(m);
      for (int d = 0; d < m; ++d) shifted[d] = digit[(d + 1) % m];  // rotate left
      int y = 0;
      for (int d = 0; d < m; ++d) y = y * static_cast<int>(w) + shifted[d];
      rot[x] = y;
    }
    std::vector<std::vector<int>> act(nb, std::vector<int>(na));
    for (int x = 0; x < na; ++x) act[0][x] = x;
    for (int k = 1; k < nb; ++k)
      for (int x = 0; x < na; ++x) act[k][x] = rot[act[k - 1][x]];
    return act;
  }
  throw std::invalid_argument("unknown action-name '" + name + "'");
}

}  // namespace

FiniteGroup build_group(const GroupExpr& e, int order_cap) {
  long long order = expression_order(e);
  if (order > order_cap)
    throw std::domain_error("group order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(order_cap));
  switch (e.kind) {
    case GroupExpr::Kind::Atom: {
      if (e.atom == "Q8") return quaternion_group();
      if (e.param < 1) throw std::invalid_argument("atom parameter must be >= 1");
      if (e.atom == "C") return cyclic_group(e.param);
      if (e.atom == "D") return dihedral_group(e.param);
      return symmetric_group(e.param);
    }
    case GroupExpr::Kind::Product: {
      FiniteGroup a = build_group(e.children[0], order_cap);
      FiniteGroup b = build_group(e.children[1], order_cap);
      FiniteGroup g = direct_product(a, b);
      g.set_name(render(e));
      return g;
    }
    case GroupExpr::Kind::Semidirect: {
      FiniteGroup a = build_group(e.children[0], order_cap);
      FiniteGroup b = build_group(e.children[1], order_cap);
      auto act = make_action(e.action, e.children[0], a, e.children[1], b);
      FiniteGroup g = semidirect_product(a, b, act);
      g.set_name(render(e));
      return g;
    }
    case GroupExpr::Kind::Wreath: {
      // wr(W, n, act) = sd(W x ... x W, Cn, act)
      if (e.param < 1) throw std::invalid_argument("wr copy count must be >= 1");
      GroupExpr power = e.children[0];
      for (int i = 1; i < e.param; ++i) {
        GroupExpr node;
        node.kind = GroupExpr::Kind::Product;
        node.children.push_back(std::move(power));
        node.children.push_back(e.children[0]);
        power = std::move(node);
      }
      GroupExpr acting;
      acting.kind = GroupExpr::Kind::Atom;
      acting.atom = "C";
      acting.param = e.param;
      FiniteGroup a = build_group(power, order_cap);
      FiniteGroup b = build_group(acting, order_cap);
      auto act = make_action(e.action, power, a, acting, b);
      FiniteGroup g = semidirect_product(a, b, act);
      g.set_name(render(e));
      return g;
    }
  }
  throw std::logic_error("unreachable");
}

FiniteGroup build_group(std::string_view text, int order_cap) {
  return build_group(parse_group_expr(text), order_cap);
}

}  // namespace tca
