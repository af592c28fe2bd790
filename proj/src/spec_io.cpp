#include "cutlab/spec_io.hpp"

#include "cutlab/error.hpp"

namespace cutlab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Schema violations have no byte offset once parsing succeeded.
[[noreturn]] void schema_error(const std::string& message) { throw ParseError(0, message); }

const json& field(const json& obj, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) schema_error(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t natural(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number_unsigned())
    schema_error(std::string("field \"") + name + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::size_t> natural_list(const json& v, const std::string& what) {
  if (!v.is_array()) schema_error(what + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    if (!x.is_number_unsigned()) schema_error(what + " must contain non-negative integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

std::vector<Element> element_list(const json& v, const std::string& what) {
  std::vector<Element> out;
  for (std::size_t x : natural_list(v, what)) out.push_back(static_cast<Element>(x));
  return out;
}

std::vector<std::vector<Element>> element_matrix(const json& v, const std::string& what) {
  if (!v.is_array()) schema_error(what + " must be an array of arrays");
  std::vector<std::vector<Element>> out;
  for (const auto& row : v) out.push_back(element_list(row, what + " row"));
  return out;
}

}  // namespace

GroupSpec group_spec_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("a group spec must be a JSON object");
  const json& kind_field = field(doc, "kind");
  if (!kind_field.is_string()) schema_error("field \"kind\" must be a string");
  const auto kind = kind_field.get<std::string>();

  if (kind == "cyclic") return cyclic(natural(doc, "n"));
  if (kind == "abelian") return abelian(natural_list(field(doc, "factors"), "factors"));
  if (kind == "metacyclic") return metacyclic(natural(doc, "m"), natural(doc, "n"), natural(doc, "r"));
  if (kind == "dicyclic") return dicyclic(natural(doc, "n"));
  if (kind == "heisenberg") return heisenberg(natural(doc, "p"));
  if (kind == "symmetric") return symmetric(natural(doc, "degree"));
  if (kind == "permutation")
    return permutation_group(natural(doc, "degree"), element_matrix(field(doc, "generators"), "generators"));
  if (kind == "table") {
    GroupSpec s{spec::Table{natural(doc, "order"), element_matrix(field(doc, "table"), "table")}};
    return s;
  }
  if (kind == "product") {
    const json& factors = field(doc, "factors");
    if (!factors.is_array()) schema_error("factors must be an array");
    std::vector<GroupSpec> specs;
    for (const auto& f : factors) specs.push_back(group_spec_from_json(f));
    return product(std::move(specs));
  }
  if (kind == "quotient")
    return quotient_of(group_spec_from_json(field(doc, "group")),
                       element_list(field(doc, "normal_generators"), "normal_generators"));
  schema_error("unknown kind \"" + kind + "\"");
}

GroupSpec parse_group_spec(std::string_view text, std::size_t max_order) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  GroupSpec s = group_spec_from_json(doc);
  validate_spec(s, max_order);
  return s;
}

ordered_json spec_to_json(const GroupSpec& s) {
  struct Visitor {
    ordered_json operator()(const spec::Cyclic& c) const { return {{"kind", "cyclic"}, {"n", c.n}}; }
    ordered_json operator()(const spec::Abelian& a) const {
      return {{"kind", "abelian"}, {"factors", a.factors}};
    }
    ordered_json operator()(const spec::Metacyclic& mc) const {
      return {{"kind", "metacyclic"}, {"m", mc.m}, {"n", mc.n}, {"r", mc.r}};
    }
    ordered_json operator()(const spec::Dicyclic& d) const { return {{"kind", "dicyclic"}, {"n", d.n}}; }
    ordered_json operator()(const spec::Heisenberg& h) const { return {{"kind", "heisenberg"}, {"p", h.p}}; }
    ordered_json operator()(const spec::Symmetric& sym) const {
      return {{"kind", "symmetric"}, {"degree", sym.degree}};
    }
    ordered_json operator()(const spec::Permutation& perm) const {
      return {{"kind", "permutation"}, {"degree", perm.degree}, {"generators", perm.generators}};
    }
    ordered_json operator()(const spec::Table& t) const {
      return {{"kind", "table"}, {"order", t.order}, {"table", t.table}};
    }
    ordered_json operator()(const spec::Product& p) const {
      ordered_json factors = ordered_json::array();
      for (const auto& f : p.factors) factors.push_back(spec_to_json(f));
      return {{"kind", "product"}, {"factors", factors}};
    }
    ordered_json operator()(const spec::Quotient& q) const {
      return {{"kind", "quotient"}, {"group", spec_to_json(*q.group)}, {"normal_generators", q.normal_generators}};
    }
  };
  return std::visit(Visitor{}, s.value);
}

}  // namespace cutlab
