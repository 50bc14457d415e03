#include "derring/names.hpp"

#include <cctype>

namespace derring {

namespace {

struct Cursor {
  const std::string &s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw error("ring spec '" + s + "': expected '" + std::string(1, c) +
                  "' at position " + std::to_string(pos));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) throw error("ring spec '" + s + "': expected integer");
    return std::stoll(s.substr(start, pos - start));
  }
};

FiniteRing parse_ring_expr(Cursor &c) {
  std::string head = c.ident();
  c.expect('(');
  if (head == "Zmod") {
    std::int64_t n = c.integer();
    c.expect(')');
    return make_zmod(n);
  }
  if (head == "GF") {
    std::int64_t p = c.integer();
    c.expect(',');
    std::int64_t e = c.integer();
    c.expect(')');
    if (e < 1) throw error("GF: exponent must be positive");
    return make_field(p, static_cast<std::size_t>(e));
  }
  if (head == "Mat") {
    std::int64_t k = c.integer();
    c.expect(',');
    FiniteRing inner = parse_ring_expr(c);
    c.expect(')');
    if (k < 1) throw error("Mat: size must be positive");
    return make_matrix_ring(inner, static_cast<std::size_t>(k));
  }
  if (head == "Prod") {
    FiniteRing a = parse_ring_expr(c);
    c.expect(',');
    FiniteRing b = parse_ring_expr(c);
    c.expect(')');
    return make_product(a, b);
  }
  throw error("unknown ring constructor '" + head + "'");
}

FiniteGroup parse_group_atom(const std::string &a) {
  auto tail_int = [&](std::size_t off) {
    if (off >= a.size()) throw error("group spec '" + a + "': missing size");
    return std::stoll(a.substr(off));
  };
  if (a == "Q8") return quaternion8();
  if (a.rfind("Heis", 0) == 0) return heisenberg_group(tail_int(4));
  if (!a.empty() && a[0] == 'C')
    return cyclic_group(static_cast<std::size_t>(tail_int(1)));
  if (!a.empty() && a[0] == 'D')
    return dihedral_group(static_cast<std::size_t>(tail_int(1)));
  if (!a.empty() && a[0] == 'S')
    return symmetric_group(static_cast<std::size_t>(tail_int(1)));
  if (!a.empty() && a[0] == 'A')
    return alternating_group(static_cast<std::size_t>(tail_int(1)));
  throw error("unknown group '" + a + "'");
}

}  // namespace

FiniteRing parse_ring(const std::string &spec) {
  Cursor c{spec};
  FiniteRing r = parse_ring_expr(c);
  c.skip_ws();
  if (c.pos != spec.size())
    throw error("ring spec '" + spec + "': trailing characters");
  return r;
}

FiniteRing parse_ring(const nlohmann::json &spec) {
  if (spec.is_string()) return parse_ring(spec.get<std::string>());
  if (!spec.is_object())
    throw error("ring spec must be a string or an object");
  std::vector<std::int64_t> orders =
      spec.at("orders").get<std::vector<std::int64_t>>();
  auto mul = spec.at("mul")
                 .get<std::vector<std::vector<std::vector<std::int64_t>>>>();
  Coeffs one = spec.at("one").get<Coeffs>();
  std::string name = spec.value("name", std::string("ring"));
  return FiniteRing::create(Ambient(std::move(orders)), std::move(mul),
                            std::move(one), std::move(name));
}

FiniteGroup parse_group(const std::string &spec) {
  std::vector<std::string> atoms;
  std::size_t start = 0;
  while (true) {
    std::size_t x = spec.find('x', start);
    if (x == std::string::npos) {
      atoms.push_back(spec.substr(start));
      break;
    }
    atoms.push_back(spec.substr(start, x - start));
    start = x + 1;
  }
  FiniteGroup g = parse_group_atom(atoms[0]);
  for (std::size_t i = 1; i < atoms.size(); ++i)
    g = direct_product(g, parse_group_atom(atoms[i]));
  g.rename(spec);
  return g;
}

FiniteGroup parse_group(const nlohmann::json &spec) {
  if (spec.is_string()) return parse_group(spec.get<std::string>());
  if (!spec.is_object())
    throw error("group spec must be a string or an object");
  auto table = spec.at("table").get<std::vector<std::vector<std::size_t>>>();
  if (spec.contains("order") &&
      spec.at("order").get<std::size_t>() != table.size())
    throw error("group spec: order does not match the table");
  std::string name = spec.value("name", std::string("group"));
  return FiniteGroup::from_cayley(table, std::move(name));
}

nlohmann::json ring_info_json(const FiniteRing &r, const Caps &caps) {
  nlohmann::json j;
  j["name"] = r.name();
  j["orders"] = r.ambient().orders;
  j["cardinality"] = r.cardinality().get_str();
  j["commutative"] = r.is_commutative();
  j["center_cardinality"] = r.center().cardinality().get_str();
  j["pi_additive"] = r.pi_additive();
  try {
    j["units"] = r.units(caps.enumeration).size();
    std::vector<std::string> idem;
    for (const RingElement &e : r.idempotents(caps.enumeration))
      idem.push_back(e.str());
    j["idempotents"] = idem;
    j["semiprime"] = r.is_semiprime(caps.enumeration);
    j["prime"] = r.is_prime(caps.enumeration);
    FiniteRing::Radical rad = r.prime_radical(caps.enumeration);
    j["prime_radical_cardinality"] = rad.ideal.cardinality().get_str();
    j["prime_radical_nilpotency_index"] = rad.nilpotency_index;
  } catch (const cap_error &e) {
    j["enumeration_skipped"] = e.what();
  }
  return j;
}

nlohmann::json group_info_json(const FiniteGroup &g) {
  nlohmann::json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["exponent"] = g.exponent();
  j["pi"] = g.pi();
  j["center_order"] = g.center().size();
  j["derived_subgroup_order"] = g.derived_subgroup().size();
  std::vector<std::size_t> class_sizes;
  for (const auto &c : g.conjugacy_classes()) class_sizes.push_back(c.size());
  j["conjugacy_class_sizes"] = class_sizes;
  auto cls = g.nilpotency_class();
  if (cls)
    j["nilpotency_class"] = *cls;
  else
    j["nilpotency_class"] = nullptr;
  std::vector<std::size_t> upper;
  for (const auto &z : g.upper_central_series()) upper.push_back(z.size());
  j["upper_central_series_orders"] = upper;
  std::vector<std::size_t> lower;
  for (const auto &z : g.lower_central_series()) lower.push_back(z.size());
  j["lower_central_series_orders"] = lower;
  return j;
}

}  // namespace derring
