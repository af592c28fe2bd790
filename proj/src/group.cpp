#include "cutlab/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "cutlab/error.hpp"

namespace cutlab {

struct FiniteGroup::Data {
  std::size_t order = 1;
  MultiplyFn multiply;
  std::vector<Element> inverse;
  std::vector<Element> generators;
  std::vector<std::string> labels;
  ConjugacyPartition conjugacy;
};

namespace {

constexpr std::size_t kFullAssociativityLimit = 256;
constexpr std::size_t kAssociativitySamples = 10000;
constexpr std::uint64_t kAssociativitySeed = 0xC07;

std::string triple(Element x, Element y, Element z) {
  std::ostringstream out;
  out << "(" << x << ", " << y << ", " << z << ")";
  return out.str();
}

// Grows `members` (closed under right multiplication by `gens` except for the
// newest generator) to the full subgroup generated by `gens`.
void extend_closure(const MultiplyFn& multiply, std::span<const Element> gens,
                    std::vector<Element>& members, std::vector<std::uint8_t>& mask) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element y = members[i];
    for (Element s : gens) {
      const Element z = multiply(y, s);
      if (!mask[z]) {
        mask[z] = 1;
        members.push_back(z);
      }
    }
  }
}

std::vector<Element> greedy_generators(std::size_t n, const MultiplyFn& multiply) {
  std::vector<Element> gens;
  std::vector<Element> members{kIdentity};
  std::vector<std::uint8_t> mask(n, 0);
  mask[kIdentity] = 1;
  for (Element x = 1; x < n && members.size() < n; ++x) {
    if (mask[x]) continue;
    gens.push_back(x);
    extend_closure(multiply, gens, members, mask);
  }
  if (gens.empty()) gens.push_back(kIdentity);
  return gens;
}

std::vector<Element> inverses_from_powers(std::size_t n, const MultiplyFn& multiply) {
  constexpr Element kUnknown = ~Element{0};
  std::vector<Element> inv(n, kUnknown);
  inv[kIdentity] = kIdentity;
  std::vector<Element> powers;
  for (Element x = 1; x < n; ++x) {
    if (inv[x] != kUnknown) continue;
    powers.assign({kIdentity, x});
    while (powers.back() != kIdentity) {
      if (powers.size() > n + 1) throw NotAGroup("powers of element " + std::to_string(x) +
                                                 " never reach the identity");
      powers.push_back(multiply(powers.back(), x));
    }
    const std::size_t m = powers.size() - 1;
    for (std::size_t k = 1; k < m; ++k) inv[powers[k]] = powers[m - k];
  }
  return inv;
}

// Latin square, identity and inverse checks on a raw multiplication.
void check_axioms(std::size_t n, const MultiplyFn& multiply, std::span<const Element> inverse) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (Element x = 0; x < n; ++x) {
    ++stamp;
    for (Element y = 0; y < n; ++y) {
      const Element z = multiply(x, y);
      if (z >= n) throw NotAGroup("entry at cell (" + std::to_string(x) + ", " + std::to_string(y) +
                                  ") is out of range");
      if (seen[z] == stamp)
        throw NotAGroup("row " + std::to_string(x) + " repeats entry " + std::to_string(z) +
                        " (cell (" + std::to_string(x) + ", " + std::to_string(y) + "))");
      seen[z] = stamp;
    }
  }
  for (Element y = 0; y < n; ++y) {
    ++stamp;
    for (Element x = 0; x < n; ++x) {
      const Element z = multiply(x, y);
      if (seen[z] == stamp)
        throw NotAGroup("column " + std::to_string(y) + " repeats entry " + std::to_string(z) +
                        " (cell (" + std::to_string(x) + ", " + std::to_string(y) + "))");
      seen[z] = stamp;
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (multiply(kIdentity, x) != x || multiply(x, kIdentity) != x)
      throw NotAGroup("index 0 is not an identity at cell (0, " + std::to_string(x) + ")");
    const Element y = inverse[x];
    if (multiply(x, y) != kIdentity || multiply(y, x) != kIdentity)
      throw NotAGroup("element " + std::to_string(x) + " has no two-sided inverse");
  }
}

void check_associativity(std::size_t n, const MultiplyFn& multiply) {
  auto check = [&](Element x, Element y, Element z) {
    if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z)))
      throw NotAGroup("associativity fails at triple " + triple(x, y, z));
  };
  if (n <= kFullAssociativityLimit) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) check(x, y, z);
    return;
  }
  std::mt19937_64 rng(kAssociativitySeed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
    const Element x = pick(rng);
    const Element y = pick(rng);
    const Element z = pick(rng);
    check(x, y, z);
  }
}

std::string cycle_label(std::span<const Element> image) {
  std::string out;
  std::vector<std::uint8_t> done(image.size(), 0);
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (done[start] || image[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = 1;
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
      i = image[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup() {
  static const FiniteGroup trivial = [] {
    GroupParts parts;
    parts.order = 1;
    parts.multiply = [](Element, Element) { return kIdentity; };
    parts.inverse = [](Element) { return kIdentity; };
    return build_from_function(std::move(parts));
  }();
  data_ = trivial.data_;
}

std::size_t FiniteGroup::order() const noexcept { return data_->order; }

Element FiniteGroup::multiply(Element x, Element y) const { return data_->multiply(x, y); }

Element FiniteGroup::inverse(Element x) const { return data_->inverse[x]; }

std::span<const Element> FiniteGroup::generators() const noexcept { return data_->generators; }

bool FiniteGroup::has_labels() const noexcept { return !data_->labels.empty(); }

std::string FiniteGroup::label(Element x) const {
  if (data_->labels.empty()) return std::to_string(x);
  return data_->labels[x];
}

const ConjugacyPartition& FiniteGroup::conjugacy() const noexcept { return data_->conjugacy; }

Element FiniteGroup::conjugate_by(Element x, Element g) const {
  return multiply(multiply(inverse(g), x), g);
}

bool FiniteGroup::is_abelian() const {
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (multiply(gens[i], gens[j]) != multiply(gens[j], gens[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Builders

FiniteGroup build_from_function(GroupParts parts) {
  auto data = std::make_shared<FiniteGroup::Data>();
  const std::size_t n = parts.order;
  data->order = n;
  data->multiply = std::move(parts.multiply);
  if (parts.inverse) {
    data->inverse.resize(n);
    for (Element x = 0; x < n; ++x) data->inverse[x] = parts.inverse(x);
  } else {
    data->inverse = inverses_from_powers(n, data->multiply);
  }
  std::erase(parts.generators, kIdentity);
  std::sort(parts.generators.begin(), parts.generators.end());
  parts.generators.erase(std::unique(parts.generators.begin(), parts.generators.end()),
                         parts.generators.end());
  data->generators =
      parts.generators.empty() ? greedy_generators(n, data->multiply) : std::move(parts.generators);
  data->labels = std::move(parts.labels);
  data->conjugacy = conjugacy_partition(n, data->multiply, data->inverse, data->generators);
  return FiniteGroup(std::move(data));
}

FiniteGroup build_from_table(std::size_t n, const std::vector<std::vector<Element>>& table) {
  if (n == 0) throw NotAGroup("a group needs at least one element");
  if (table.size() != n) throw NotAGroup("table has " + std::to_string(table.size()) + " rows, expected " +
                                         std::to_string(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n)
      throw NotAGroup("row " + std::to_string(x) + " has " + std::to_string(table[x].size()) +
                      " entries, expected " + std::to_string(n));
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] >= n)
        throw NotAGroup("entry at cell (" + std::to_string(x) + ", " + std::to_string(y) +
                        ") is out of range");
  }

  // Locate the identity and swap it into index 0.
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (e == n) throw NotAGroup("no element acts as a two-sided identity");
  auto relabel = [e](Element x) -> Element {
    if (x == e) return 0;
    if (x == 0) return static_cast<Element>(e);
    return x;
  };

  auto flat = std::make_shared<std::vector<Element>>(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      (*flat)[relabel(static_cast<Element>(x)) * n + relabel(static_cast<Element>(y))] =
          relabel(table[x][y]);

  MultiplyFn multiply = [flat, n](Element x, Element y) { return (*flat)[x * n + y]; };

  std::vector<Element> inverse(n, 0);
  for (Element x = 0; x < n; ++x) {
    const auto row = std::span<const Element>(*flat).subspan(x * n, n);
    const auto it = std::find(row.begin(), row.end(), kIdentity);
    // A missing inverse is reported by the Latin-square check below.
    inverse[x] = it == row.end() ? kIdentity : static_cast<Element>(it - row.begin());
  }
  check_axioms(n, multiply, inverse);
  check_associativity(n, multiply);

  GroupParts parts;
  parts.order = n;
  parts.multiply = std::move(multiply);
  parts.inverse = [inverse](Element x) { return inverse[x]; };
  return build_from_function(std::move(parts));
}

FiniteGroup build_from_permutations(std::size_t degree,
                                    const std::vector<std::vector<Element>>& generators,
                                    std::size_t max_order) {
  if (degree == 0) throw NotAPermutation("degree must be positive");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& gen = generators[k];
    if (gen.size() != degree)
      throw NotAPermutation("generator " + std::to_string(k) + " has length " +
                            std::to_string(gen.size()) + ", expected " + std::to_string(degree));
    std::vector<std::uint8_t> hit(degree, 0);
    for (Element v : gen) {
      if (v >= degree || hit[v])
        throw NotAPermutation("generator " + std::to_string(k) + " is not a bijection on 0.." +
                              std::to_string(degree - 1));
      hit[v] = 1;
    }
  }

  struct PermData {
    std::size_t degree;
    std::vector<Element> images;  // element k occupies [k*degree, (k+1)*degree)
    std::unordered_map<std::u32string, Element> index;

    std::span<const Element> image(Element k) const {
      return std::span<const Element>(images).subspan(k * degree, degree);
    }
    Element lookup(const std::u32string& key) const { return index.at(key); }
  };
  auto perms = std::make_shared<PermData>();
  perms->degree = degree;

  auto key_of = [](std::span<const Element> img) {
    return std::u32string(img.begin(), img.end());
  };
  auto insert = [&](std::span<const Element> img) -> std::pair<Element, bool> {
    const auto key = key_of(img);
    const auto found = perms->index.find(key);
    if (found != perms->index.end()) return {found->second, false};
    const auto id = static_cast<Element>(perms->index.size());
    if (id + 1 > max_order) throw OrderCapExceeded(id + 1, max_order);
    perms->index.emplace(key, id);
    perms->images.insert(perms->images.end(), img.begin(), img.end());
    return {id, true};
  };

  std::vector<Element> identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<Element>(i);
  insert(identity);

  std::vector<Element> scratch(degree);
  for (Element k = 0; k < perms->index.size(); ++k) {
    for (const auto& gen : generators) {
      const auto img = perms->image(k);
      for (std::size_t i = 0; i < degree; ++i) scratch[i] = gen[img[i]];
      insert(scratch);
    }
  }

  std::vector<Element> gen_ids;
  for (const auto& gen : generators) gen_ids.push_back(perms->lookup(key_of(gen)));

  const std::size_t n = perms->index.size();
  std::vector<std::string> labels(n);
  for (Element k = 0; k < n; ++k) labels[k] = cycle_label(perms->image(k));

  GroupParts parts;
  parts.order = n;
  parts.multiply = [perms](Element x, Element y) {
    const auto a = perms->image(x);
    const auto b = perms->image(y);
    std::u32string key(perms->degree, U'\0');
    for (std::size_t i = 0; i < perms->degree; ++i) key[i] = b[a[i]];
    return perms->lookup(key);
  };
  parts.inverse = [perms](Element x) {
    const auto a = perms->image(x);
    std::u32string key(perms->degree, U'\0');
    for (std::size_t i = 0; i < perms->degree; ++i) key[a[i]] = static_cast<char32_t>(i);
    return perms->lookup(key);
  };
  parts.generators = std::move(gen_ids);
  parts.labels = std::move(labels);
  return build_from_function(std::move(parts));
}

void validate_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const MultiplyFn multiply = [&g](Element x, Element y) { return g.multiply(x, y); };
  std::vector<Element> inverse(n);
  for (Element x = 0; x < n; ++x) inverse[x] = g.inverse(x);
  check_axioms(n, multiply, inverse);
  check_associativity(n, multiply);
  const auto span = subgroup_generated(g, g.generators());
  if (span.order() != n)
    throw NotAGroup("generators span only " + std::to_string(span.order()) + " of " +
                    std::to_string(n) + " elements");
}

// ---------------------------------------------------------------------------
// Element arithmetic

Element power(const FiniteGroup& g, Element x, long long k) {
  unsigned long long e;
  Element base;
  if (k < 0) {
    base = g.inverse(x);
    e = static_cast<unsigned long long>(-(k + 1)) + 1;
  } else {
    base = x;
    e = static_cast<unsigned long long>(k);
  }
  Element result = kIdentity;
  while (e != 0) {
    if (e & 1) result = g.multiply(result, base);
    e >>= 1;
    if (e != 0) base = g.multiply(base, base);
  }
  return result;
}

std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != kIdentity; y = g.multiply(y, x)) ++k;
  return k;
}

std::vector<Element> cyclic_powers(const FiniteGroup& g, Element x) {
  std::vector<Element> powers{kIdentity};
  for (Element y = x; y != kIdentity; y = g.multiply(y, x)) powers.push_back(y);
  return powers;
}

ConjugacyPartition conjugacy_partition(std::size_t n, const MultiplyFn& multiply,
                                       std::span<const Element> inverse,
                                       std::span<const Element> generators) {
  constexpr ClassId kUnassigned = ~ClassId{0};
  ConjugacyPartition p;
  p.class_of.assign(n, kUnassigned);
  std::vector<Element> orbit;
  for (Element x = 0; x < n; ++x) {
    if (p.class_of[x] != kUnassigned) continue;
    const auto id = static_cast<ClassId>(p.representatives.size());
    p.class_of[x] = id;
    orbit.assign({x});
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Element s : generators) {
        const Element z = multiply(multiply(inverse[s], orbit[i]), s);
        if (p.class_of[z] == kUnassigned) {
          p.class_of[z] = id;
          orbit.push_back(z);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    p.representatives.push_back(x);
    p.class_members.push_back(orbit);
  }
  p.inverse_class.resize(p.representatives.size());
  for (ClassId c = 0; c < p.representatives.size(); ++c)
    p.inverse_class[c] = p.class_of[inverse[p.representatives[c]]];
  return p;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> generators, std::vector<Element> members)
    : parent_(std::move(parent)), generators_(std::move(generators)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  mask_.assign(parent_.order(), 0);
  for (Element m : members_) mask_[m] = 1;
  normal_ = true;
  for (Element m : members_) {
    for (Element g : parent_.generators()) {
      if (!mask_[parent_.conjugate_by(m, g)]) {
        normal_ = false;
        return;
      }
    }
  }
}

Subgroup closure_under(const FiniteGroup& g, std::span<const Element> seeds,
                       std::span<const Element> conjugators) {
  const MultiplyFn multiply = [&g](Element x, Element y) { return g.multiply(x, y); };
  std::vector<Element> gens;
  std::vector<Element> members{kIdentity};
  std::vector<std::uint8_t> mask(g.order(), 0);
  mask[kIdentity] = 1;

  auto add = [&](Element s) {
    if (mask[s]) return;
    gens.push_back(s);
    extend_closure(multiply, gens, members, mask);
  };
  for (Element s : seeds) add(s);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element c : conjugators) add(g.conjugate_by(gens[i], c));

  return Subgroup(g, std::move(gens), std::move(members));
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> seeds,
                            bool normal_closure) {
  return closure_under(g, seeds, normal_closure ? g.generators() : std::span<const Element>{});
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return subgroup_generated(g, {}); }

Subgroup whole_group(const FiniteGroup& g) { return subgroup_generated(g, g.generators()); }

Subgroup center(const FiniteGroup& g) {
  std::vector<Element> central;
  for (Element x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Element s : g.generators()) {
      if (g.multiply(x, s) != g.multiply(s, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) central.push_back(x);
  }
  return subgroup_generated(g, central);
}

Element commutator(const FiniteGroup& g, Element x, Element y) {
  return g.multiply(g.multiply(x, y), g.multiply(g.inverse(x), g.inverse(y)));
}

ElementCommutators commutator_of_element(const FiniteGroup& g, Element x) {
  std::vector<std::uint8_t> hit(g.order(), 0);
  std::vector<Element> set;
  for (Element y = 0; y < g.order(); ++y) {
    const Element c = commutator(g, x, y);
    if (!hit[c]) {
      hit[c] = 1;
      set.push_back(c);
    }
  }
  std::sort(set.begin(), set.end());
  auto subgroup = subgroup_generated(g, set, true);
  return {std::move(set), std::move(subgroup)};
}

std::vector<Element> coset_map(const FiniteGroup& g, const Subgroup& normal) {
  if (!normal.is_normal()) throw NotNormal("quotient requires a normal subgroup");
  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> coset(g.order(), kUnassigned);
  Element next = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset[x] != kUnassigned) continue;
    for (Element m : normal.members()) coset[g.multiply(x, m)] = next;
    ++next;
  }
  return coset;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& normal) {
  auto coset = std::make_shared<const std::vector<Element>>(coset_map(g, normal));
  auto reps = std::make_shared<std::vector<Element>>(g.order() / normal.order());
  for (auto x = static_cast<Element>(g.order()); x-- > 0;) (*reps)[(*coset)[x]] = x;

  GroupParts parts;
  parts.order = reps->size();
  parts.multiply = [g, coset, reps](Element a, Element b) {
    return (*coset)[g.multiply((*reps)[a], (*reps)[b])];
  };
  parts.inverse = [g, coset, reps](Element a) { return (*coset)[g.inverse((*reps)[a])]; };
  for (Element s : g.generators()) parts.generators.push_back((*coset)[s]);
  parts.labels.reserve(reps->size());
  for (Element r : *reps) parts.labels.push_back("[" + g.label(r) + "]");
  return build_from_function(std::move(parts));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t max_order) {
  const std::size_t n = g.order() * h.order();
  if (n > max_order) throw OrderCapExceeded(n, max_order);
  const auto m = static_cast<Element>(h.order());

  GroupParts parts;
  parts.order = n;
  parts.multiply = [g, h, m](Element x, Element y) {
    return g.multiply(x / m, y / m) * m + h.multiply(x % m, y % m);
  };
  parts.inverse = [g, h, m](Element x) { return g.inverse(x / m) * m + h.inverse(x % m); };
  for (Element s : g.generators()) parts.generators.push_back(s * m);
  for (Element s : h.generators()) parts.generators.push_back(s);
  parts.labels.reserve(n);
  for (Element x = 0; x < n; ++x)
    parts.labels.push_back("(" + g.label(x / m) + ", " + h.label(x % m) + ")");
  return build_from_function(std::move(parts));
}

FiniteGroup subgroup_as_group(const Subgroup& s) {
  const FiniteGroup& g = s.parent();
  auto members = std::make_shared<const std::vector<Element>>(s.members().begin(), s.members().end());
  auto position = std::make_shared<std::vector<Element>>(g.order(), 0);
  for (Element k = 0; k < members->size(); ++k) (*position)[(*members)[k]] = k;

  GroupParts parts;
  parts.order = members->size();
  parts.multiply = [g, members, position](Element x, Element y) {
    return (*position)[g.multiply((*members)[x], (*members)[y])];
  };
  parts.inverse = [g, members, position](Element x) { return (*position)[g.inverse((*members)[x])]; };
  for (Element t : s.generators()) parts.generators.push_back((*position)[t]);
  for (Element m : *members) parts.labels.push_back(g.label(m));
  return build_from_function(std::move(parts));
}

std::vector<std::vector<Element>> cayley_table(const FiniteGroup& g) {
  std::vector<std::vector<Element>> table(g.order(), std::vector<Element>(g.order()));
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) table[x][y] = g.multiply(x, y);
  return table;
}

}  // namespace cutlab
