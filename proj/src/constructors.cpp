#include "cutlab/constructors.hpp"

#include <limits>
#include <numeric>
#include <utility>

#include "cutlab/error.hpp"
#include "cutlab/structure.hpp"

namespace cutlab {

namespace spec {

bool Product::operator==(const Product& other) const { return factors == other.factors; }

bool Quotient::operator==(const Quotient& other) const {
  if (normal_generators != other.normal_generators) return false;
  if (!group || !other.group) return group == other.group;
  return *group == *other.group;
}

}  // namespace spec

namespace {

std::size_t power_mod(std::size_t base, std::size_t exp, std::size_t mod) {
  std::size_t result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::size_t inverse_mod(std::size_t r, std::size_t m) {
  for (std::size_t t = 0; t < m; ++t)
    if (t * r % m == 1 % m) return t;
  throw InvalidMetacyclicParameters("r has no inverse modulo m");
}

std::string power_label(const char* symbol, std::size_t k) {
  if (k == 0) return {};
  if (k == 1) return symbol;
  return std::string(symbol) + "^" + std::to_string(k);
}

// Labels "a^i b^j" for index j*m + i; the identity is "1".
std::vector<std::string> normal_form_labels(std::size_t m, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(m * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      std::string a = power_label("a", i);
      std::string b = power_label("b", j);
      if (a.empty() && b.empty()) labels.emplace_back("1");
      else if (b.empty()) labels.push_back(std::move(a));
      else if (a.empty()) labels.push_back(std::move(b));
      else labels.push_back(a + " " + b);
    }
  }
  return labels;
}

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw InvalidParameters(std::string(what) + " must be positive");
}

void require_within(std::size_t order, std::size_t max_order) {
  if (order > max_order) throw OrderCapExceeded(order, max_order);
}

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t max_order) {
  // only a genuine overflow loses the exact order
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) throw OrderCapExceeded(max_order + 1, max_order);
  require_within(a * b, max_order);
  return a * b;
}

std::size_t factorial_order(std::size_t degree, std::size_t max_order) {
  std::size_t order = 1;
  for (std::size_t k = 2; k <= degree; ++k) order = checked_mul(order, k, max_order);
  return order;
}

FiniteGroup build_cyclic(std::size_t n) {
  GroupParts parts;
  parts.order = n;
  parts.multiply = [n](Element x, Element y) { return static_cast<Element>((x + y) % n); };
  parts.inverse = [n](Element x) { return static_cast<Element>((n - x) % n); };
  if (n > 1) parts.generators = {1};
  parts.labels = normal_form_labels(n, 1);
  return build_from_function(std::move(parts));
}

FiniteGroup build_abelian(const std::vector<std::size_t>& factors) {
  // Mixed radix: the last factor varies fastest.
  std::size_t n = 1;
  for (std::size_t f : factors) n *= f;
  std::vector<std::size_t> stride(factors.size(), 1);
  for (std::size_t k = factors.size(); k-- > 1;) stride[k - 1] = stride[k] * factors[k];

  auto op = [factors, stride](Element x, Element y, bool invert) {
    Element z = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const std::size_t f = factors[k];
      const std::size_t dx = x / stride[k] % f;
      const std::size_t dy = y / stride[k] % f;
      const std::size_t d = invert ? (f - dx) % f : (dx + dy) % f;
      z += static_cast<Element>(d * stride[k]);
    }
    return z;
  };

  GroupParts parts;
  parts.order = n;
  parts.multiply = [op](Element x, Element y) { return op(x, y, false); };
  parts.inverse = [op](Element x) { return op(x, 0, true); };
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (factors[k] > 1) parts.generators.push_back(static_cast<Element>(stride[k]));
  parts.labels.reserve(n);
  for (Element x = 0; x < n; ++x) {
    std::string label = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k != 0) label += ",";
      label += std::to_string(x / stride[k] % factors[k]);
    }
    parts.labels.push_back(label + ")");
  }
  return build_from_function(std::move(parts));
}

FiniteGroup build_metacyclic(std::size_t m, std::size_t n, std::size_t r) {
  // b^j a^k = a^(k t^j) b^j with t = r^-1, so that b^-1 a b = a^r.
  const std::size_t t = inverse_mod(r % m, m);
  std::vector<std::size_t> twist(n);
  for (std::size_t j = 0; j < n; ++j) twist[j] = power_mod(t, j, m);

  GroupParts parts;
  parts.order = m * n;
  parts.multiply = [m, n, twist](Element x, Element y) {
    const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
    return static_cast<Element>((j + l) % n * m + (i + k * twist[j]) % m);
  };
  if (m > 1) parts.generators.push_back(1);
  if (n > 1) parts.generators.push_back(static_cast<Element>(m));
  parts.labels = normal_form_labels(m, n);
  return build_from_function(std::move(parts));
}

FiniteGroup build_dicyclic(std::size_t n) {
  const std::size_t m = 2 * n;
  GroupParts parts;
  parts.order = 2 * m;
  parts.multiply = [n, m](Element x, Element y) {
    const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
    std::size_t e = j == 0 ? i + k : i + m - k;
    if (j + l == 2) return static_cast<Element>((e + n) % m);
    return static_cast<Element>((j + l) * m + e % m);
  };
  parts.generators = {1, static_cast<Element>(m)};
  parts.labels = normal_form_labels(m, 2);
  return build_from_function(std::move(parts));
}

FiniteGroup build_heisenberg(std::size_t p) {
  // (x, y, z) has index x*p^2 + y*p + z.
  const std::size_t pp = p * p;
  GroupParts parts;
  parts.order = p * pp;
  parts.multiply = [p, pp](Element u, Element v) {
    const std::size_t x = u / pp, y = u / p % p, z = u % p;
    const std::size_t x2 = v / pp, y2 = v / p % p, z2 = v % p;
    return static_cast<Element>((x + x2) % p * pp + (y + y2) % p * p + (z + z2 + x * y2) % p);
  };
  parts.generators = {static_cast<Element>(pp), static_cast<Element>(p)};
  parts.labels.reserve(p * pp);
  for (std::size_t u = 0; u < p * pp; ++u)
    parts.labels.push_back("[" + std::to_string(u / pp) + "," + std::to_string(u / p % p) + "," +
                           std::to_string(u % p) + "]");
  return build_from_function(std::move(parts));
}

std::vector<std::vector<Element>> symmetric_generators(std::size_t degree) {
  std::vector<Element> transposition(degree), cycle(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    transposition[i] = static_cast<Element>(i);
    cycle[i] = static_cast<Element>((i + 1) % degree);
  }
  if (degree >= 2) std::swap(transposition[0], transposition[1]);
  return {transposition, cycle};
}

}  // namespace

std::string GroupSpec::kind() const {
  static constexpr const char* kNames[] = {"cyclic",    "abelian",   "metacyclic",  "dicyclic",
                                           "heisenberg", "symmetric", "permutation", "table",
                                           "product",    "quotient"};
  return kNames[value.index()];
}

GroupSpec cyclic(std::size_t n) { return {spec::Cyclic{n}}; }
GroupSpec abelian(std::vector<std::size_t> factors) { return {spec::Abelian{std::move(factors)}}; }
GroupSpec metacyclic(std::size_t m, std::size_t n, std::size_t r) { return {spec::Metacyclic{m, n, r}}; }
GroupSpec dicyclic(std::size_t n) { return {spec::Dicyclic{n}}; }
GroupSpec heisenberg(std::size_t p) { return {spec::Heisenberg{p}}; }
GroupSpec symmetric(std::size_t degree) { return {spec::Symmetric{degree}}; }
GroupSpec permutation_group(std::size_t degree, std::vector<std::vector<Element>> generators) {
  return {spec::Permutation{degree, std::move(generators)}};
}
GroupSpec table_group(std::vector<std::vector<Element>> table) {
  const std::size_t n = table.size();
  return {spec::Table{n, std::move(table)}};
}
GroupSpec product(std::vector<GroupSpec> factors) { return {spec::Product{std::move(factors)}}; }
GroupSpec quotient_of(GroupSpec group, std::vector<Element> normal_generators) {
  return {spec::Quotient{std::make_shared<const GroupSpec>(std::move(group)),
                         std::move(normal_generators)}};
}

namespace {

// Validates parameters and returns the order (an upper bound for quotients).
std::size_t checked_order(const GroupSpec& s, std::size_t max_order) {
  struct Visitor {
    std::size_t max_order;

    std::size_t operator()(const spec::Cyclic& c) const {
      require_positive(c.n, "cyclic order n");
      require_within(c.n, max_order);
      return c.n;
    }
    std::size_t operator()(const spec::Abelian& a) const {
      std::size_t order = 1;
      for (std::size_t f : a.factors) {
        require_positive(f, "abelian invariant factor");
        order = checked_mul(order, f, max_order);
      }
      return order;
    }
    std::size_t operator()(const spec::Metacyclic& mc) const {
      require_positive(mc.m, "metacyclic m");
      require_positive(mc.n, "metacyclic n");
      require_positive(mc.r, "metacyclic r");
      if (std::gcd(mc.r, mc.m) != 1)
        throw InvalidMetacyclicParameters("gcd(r, m) = gcd(" + std::to_string(mc.r) + ", " +
                                          std::to_string(mc.m) + ") = " +
                                          std::to_string(std::gcd(mc.r, mc.m)) + ", expected 1");
      const std::size_t residue = power_mod(mc.r, mc.n, mc.m);
      if (residue != 1 % mc.m)
        throw InvalidMetacyclicParameters("r^n = " + std::to_string(mc.r) + "^" + std::to_string(mc.n) +
                                          " = " + std::to_string(residue) + " (mod " +
                                          std::to_string(mc.m) + "), expected 1");
      return checked_mul(mc.m, mc.n, max_order);
    }
    std::size_t operator()(const spec::Dicyclic& d) const {
      require_positive(d.n, "dicyclic n");
      return checked_mul(4, d.n, max_order);
    }
    std::size_t operator()(const spec::Heisenberg& h) const {
      if (h.p == 2 || !is_prime(h.p))
        throw NotAPrime("heisenberg requires an odd prime, got " + std::to_string(h.p));
      return checked_mul(checked_mul(h.p, h.p, max_order), h.p, max_order);
    }
    std::size_t operator()(const spec::Symmetric& sym) const {
      require_positive(sym.degree, "symmetric degree");
      return factorial_order(sym.degree, max_order);
    }
    std::size_t operator()(const spec::Permutation& perm) const {
      require_positive(perm.degree, "permutation degree");
      // The closure size is only known after enumeration.
      return 1;
    }
    std::size_t operator()(const spec::Table& t) const {
      require_positive(t.order, "table order");
      require_within(t.order, max_order);
      if (t.table.size() != t.order)
        throw InvalidParameters("table has " + std::to_string(t.table.size()) + " rows, order is " +
                                std::to_string(t.order));
      return t.order;
    }
    std::size_t operator()(const spec::Product& p) const {
      std::size_t order = 1;
      for (const auto& f : p.factors) order = checked_mul(order, checked_order(f, max_order), max_order);
      return order;
    }
    std::size_t operator()(const spec::Quotient& q) const {
      if (!q.group) throw InvalidParameters("quotient is missing its group");
      return checked_order(*q.group, max_order);
    }
  };
  return std::visit(Visitor{max_order}, s.value);
}

FiniteGroup build(const GroupSpec& s, std::size_t max_order) {
  struct Visitor {
    std::size_t max_order;

    FiniteGroup operator()(const spec::Cyclic& c) const { return build_cyclic(c.n); }
    FiniteGroup operator()(const spec::Abelian& a) const { return build_abelian(a.factors); }
    FiniteGroup operator()(const spec::Metacyclic& mc) const { return build_metacyclic(mc.m, mc.n, mc.r); }
    FiniteGroup operator()(const spec::Dicyclic& d) const { return build_dicyclic(d.n); }
    FiniteGroup operator()(const spec::Heisenberg& h) const { return build_heisenberg(h.p); }
    FiniteGroup operator()(const spec::Symmetric& sym) const {
      return build_from_permutations(sym.degree, symmetric_generators(sym.degree), max_order);
    }
    FiniteGroup operator()(const spec::Permutation& perm) const {
      return build_from_permutations(perm.degree, perm.generators, max_order);
    }
    FiniteGroup operator()(const spec::Table& t) const { return build_from_table(t.order, t.table); }
    FiniteGroup operator()(const spec::Product& p) const {
      if (p.factors.empty()) return FiniteGroup{};
      FiniteGroup g = build(p.factors.front(), max_order);
      for (std::size_t k = 1; k < p.factors.size(); ++k)
        g = direct_product(g, build(p.factors[k], max_order), max_order);
      return g;
    }
    FiniteGroup operator()(const spec::Quotient& q) const {
      const FiniteGroup g = build(*q.group, max_order);
      for (Element x : q.normal_generators)
        if (x >= g.order())
          throw InvalidParameters("normal generator " + std::to_string(x) +
                                  " is not an element index of a group of order " +
                                  std::to_string(g.order()));
      const Subgroup normal = subgroup_generated(g, q.normal_generators);
      if (!normal.is_normal())
        throw NotNormal("the subgroup generated by the listed elements is not normal");
      return quotient(g, normal);
    }
  };
  return std::visit(Visitor{max_order}, s.value);
}

}  // namespace

void validate_spec(const GroupSpec& s, std::size_t max_order) { checked_order(s, max_order); }

FiniteGroup construct(const GroupSpec& s, std::size_t max_order) {
  checked_order(s, max_order);
  return build(s, max_order);
}

std::string describe(const GroupSpec& s) {
  struct Visitor {
    std::string operator()(const spec::Cyclic& c) const { return "cyclic(" + std::to_string(c.n) + ")"; }
    std::string operator()(const spec::Abelian& a) const {
      std::string out = "abelian(";
      for (std::size_t k = 0; k < a.factors.size(); ++k)
        out += (k ? "," : "") + std::to_string(a.factors[k]);
      return out + ")";
    }
    std::string operator()(const spec::Metacyclic& mc) const {
      return "metacyclic(" + std::to_string(mc.m) + "," + std::to_string(mc.n) + "," +
             std::to_string(mc.r) + ")";
    }
    std::string operator()(const spec::Dicyclic& d) const { return "dicyclic(" + std::to_string(d.n) + ")"; }
    std::string operator()(const spec::Heisenberg& h) const {
      return "heisenberg(" + std::to_string(h.p) + ")";
    }
    std::string operator()(const spec::Symmetric& sym) const {
      return "symmetric(" + std::to_string(sym.degree) + ")";
    }
    std::string operator()(const spec::Permutation& perm) const {
      return "permutation(degree " + std::to_string(perm.degree) + ", " +
             std::to_string(perm.generators.size()) + " generators)";
    }
    std::string operator()(const spec::Table& t) const { return "table(" + std::to_string(t.order) + ")"; }
    std::string operator()(const spec::Product& p) const {
      if (p.factors.empty()) return "product()";
      std::string out;
      for (std::size_t k = 0; k < p.factors.size(); ++k) out += (k ? " x " : "") + describe(p.factors[k]);
      return out;
    }
    std::string operator()(const spec::Quotient& q) const {
      return "quotient(" + (q.group ? describe(*q.group) : std::string("?")) + ")";
    }
  };
  return std::visit(Visitor{}, s.value);
}

}  // namespace cutlab
