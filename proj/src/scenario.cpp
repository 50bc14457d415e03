#include "derring/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace derring {

namespace {

using i64 = std::int64_t;

bool vec_zero(const Coeffs &v) {
  return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

std::uint64_t splitmix(std::uint64_t &x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t rand_below(std::uint64_t &state, std::size_t n) {
  return static_cast<std::size_t>(splitmix(state) % n);
}

Coeffs random_element(const FiniteRing &r, std::uint64_t &state) {
  Coeffs v(r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i)
    v[i] = static_cast<i64>(
        rand_below(state, static_cast<std::size_t>(r.ambient().orders[i])));
  return v;
}

bool primes_invertible(const FiniteRing &r, const std::vector<i64> &primes) {
  for (i64 p : primes)
    if (!r.is_invertible_prime(p)) return false;
  return true;
}

bool coprime_additive(const FiniteRing &r, const FiniteGroup &g) {
  std::vector<i64> pr = r.pi_additive(), pg = g.pi();
  for (i64 p : pr)
    for (i64 q : pg)
      if (p == q) return false;
  return true;
}

std::string subgroup_tag(const FiniteGroup &g, const SubgroupSet &h,
                         std::size_t index) {
  (void)g;
  return "H" + std::to_string(index) + "(|H|=" + std::to_string(h.size()) + ")";
}

// ---------------------------------------------------------------- families

std::vector<std::string> default_rings_small() {
  return {"Zmod(2)", "Zmod(3)", "Zmod(4)", "Zmod(5)", "Zmod(6)",
          "GF(2,2)",   "Mat(2,Zmod(2))"};
}

std::vector<std::string> default_groups_small() {
  return {"C2", "C4", "C6", "S3", "D4", "Q8"};
}

std::vector<std::string> scan_rings() {
  std::vector<std::string> out;
  for (i64 m = 2; m <= 12; ++m) out.push_back("Zmod(" + std::to_string(m) + ")");
  out.push_back("GF(2,2)");
  out.push_back("Mat(2,Zmod(2))");
  out.push_back("Mat(2,Zmod(3))");
  out.push_back("Prod(Zmod(2),Zmod(3))");
  return out;
}

std::vector<std::string> abelian_groups_up_to(std::size_t bound) {
  // all abelian groups of each order, as products of prime-power cyclics
  std::vector<std::string> out;
  std::function<std::vector<std::vector<i64>>(i64)> partitions =
      [&](i64 e) {
        std::vector<std::vector<i64>> res;
        std::function<void(i64, i64, std::vector<i64> &)> go =
            [&](i64 left, i64 maxpart, std::vector<i64> &cur) {
              if (left == 0) {
                res.push_back(cur);
                return;
              }
              for (i64 part = std::min(left, maxpart); part >= 1; --part) {
                cur.push_back(part);
                go(left - part, part, cur);
                cur.pop_back();
              }
            };
        std::vector<i64> cur;
        go(e, e, cur);
        return res;
      };
  for (std::size_t m = 2; m <= bound; ++m) {
    std::map<i64, i64> fac;
    i64 rest = static_cast<i64>(m);
    for (i64 p = 2; p * p <= rest; ++p)
      while (rest % p == 0) {
        ++fac[p];
        rest /= p;
      }
    if (rest > 1) ++fac[rest];
    std::vector<std::vector<std::vector<i64>>> per_prime;  // factor lists
    for (auto [p, e] : fac) {
      std::vector<std::vector<i64>> lists;
      for (const auto &lambda : partitions(e)) {
        std::vector<i64> factors;
        for (i64 part : lambda) {
          i64 q = 1;
          for (i64 i = 0; i < part; ++i) q *= p;
          factors.push_back(q);
        }
        lists.push_back(factors);
      }
      per_prime.push_back(lists);
    }
    std::vector<std::vector<i64>> combos{{}};
    for (const auto &lists : per_prime) {
      std::vector<std::vector<i64>> next;
      for (const auto &base : combos)
        for (const auto &lst : lists) {
          std::vector<i64> c = base;
          c.insert(c.end(), lst.begin(), lst.end());
          next.push_back(c);
        }
      combos = next;
    }
    for (auto c : combos) {
      std::sort(c.begin(), c.end(), std::greater<i64>());
      std::string name;
      for (std::size_t i = 0; i < c.size(); ++i)
        name += (i ? "x" : "") + ("C" + std::to_string(c[i]));
      out.push_back(name);
    }
  }
  return out;
}

// ------------------------------------------------------------ infrastructure

struct Runner {
  const ScenarioConfig &cfg;
  Report &report;

  void run(Instance base, const std::function<void(Instance &)> &body) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(base);
      if (base.verdict.empty()) base.verdict = "PASS";
    } catch (const cap_error &e) {
      base.verdict = "SKIP";
      base.detail["skip_reason"] = std::string("cap: ") + e.what();
    } catch (const std::exception &e) {
      base.verdict = "ERROR";
      base.detail["error"] = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    base.millis =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() /
        1000.0;
    report.instances.push_back(std::move(base));
  }

  void skip(Instance base, const std::string &why) {
    base.hypothesis_satisfied = false;
    base.verdict = "SKIP";
    base.detail["skip_reason"] = why;
    report.instances.push_back(std::move(base));
  }

  std::vector<nlohmann::json> ring_specs(
      const std::vector<std::string> &fallback) const {
    if (!cfg.rings.empty()) return cfg.rings;
    std::vector<nlohmann::json> out;
    for (const auto &s : fallback) out.emplace_back(s);
    return out;
  }
  std::vector<nlohmann::json> group_specs(
      const std::vector<std::string> &fallback) const {
    if (!cfg.groups.empty()) return cfg.groups;
    std::vector<nlohmann::json> out;
    for (const auto &s : fallback) out.emplace_back(s);
    return out;
  }
  /// Group-ring family: explicit pairs when configured, otherwise the
  /// rings x groups product.
  std::vector<std::pair<FiniteRing, FiniteGroup>> pair_family(
      const std::vector<nlohmann::json> &rings,
      const std::vector<nlohmann::json> &groups) const {
    std::vector<std::pair<FiniteRing, FiniteGroup>> out;
    if (!cfg.pairs.empty()) {
      for (const auto &[rs, gs] : cfg.pairs)
        out.emplace_back(parse_ring(rs), parse_group(gs));
      return out;
    }
    for (const auto &gs : groups) {
      FiniteGroup g = parse_group(gs);
      for (const auto &rs : rings) out.emplace_back(parse_ring(rs), g);
    }
    return out;
  }
};

std::string spec_name(const nlohmann::json &spec) {
  if (spec.is_string()) return spec.get<std::string>();
  if (spec.is_object() && spec.contains("name"))
    return spec.at("name").get<std::string>();
  return spec.dump();
}

// carrier construction with cap failures downgraded to one SKIP record
std::optional<GroupRing> build_carrier(Runner &r, Instance base,
                                       const FiniteRing &ring,
                                       const FiniteGroup &g) {
  try {
    return GroupRing::build(ring, g, r.cfg.caps);
  } catch (const cap_error &e) {
    base.sub = "carrier";
    r.skip(base, std::string("cap: ") + e.what());
    return std::nullopt;
  }
}

// image of a derivation across the whole carrier, as an additive span
Submodule image_span(const FiniteRing &b, const Derivation &d) {
  std::vector<IntVec> rows;
  for (const Coeffs &im : d.images()) rows.push_back(to_ivec(im));
  return Submodule::span(b.ambient(), rows);
}

// span of images of a composite map applied to all generators
Submodule composite_image_span(const FiniteRing &b,
                               const std::vector<const Derivation *> &seq) {
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < b.rank(); ++i) {
    Coeffs v = b.generator(i);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) v = (*it)->apply(v);
    rows.push_back(to_ivec(v));
  }
  return Submodule::span(b.ambient(), rows);
}

bool stable_under(const Submodule &ideal, const Derivation &d) {
  for (const IntVec &g : ideal.gen_rows())
    if (!ideal.contains(to_ivec(d.apply(d.ring().reduce(to_i64vec(g))))))
      return false;
  return true;
}

// ------------------------------------------------------------------- checks

void check_oracle(Runner &r) {
  struct Item {
    std::string ring, group;  // group empty = plain ring
  };
  std::vector<Item> items;
  if (!r.cfg.rings.empty() || !r.cfg.groups.empty()) {
    for (const auto &rs : r.cfg.rings) {
      if (r.cfg.groups.empty()) items.push_back({spec_name(rs), ""});
      for (const auto &gs : r.cfg.groups)
        items.push_back({spec_name(rs), spec_name(gs)});
    }
  } else {
    for (i64 n = 2; n <= 12; ++n)
      items.push_back({"Zmod(" + std::to_string(n) + ")", ""});
    items.push_back({"Zmod(2)", "C2"});
    items.push_back({"Zmod(3)", "C2"});
    items.push_back({"Zmod(5)", "C2"});
    items.push_back({"Zmod(2)", "C2xC2"});
    items.push_back({"Mat(2,Zmod(2))", ""});
  }
  for (const auto &it : items) {
    Instance base;
    base.check = "ORACLE";
    base.ring = it.ring;
    base.group = it.group;
    base.hypothesis = "candidate image space <= 2^" +
                      std::to_string(static_cast<int>(r.cfg.caps.oracle_log2_images));
    r.run(base, [&](Instance &inst) {
      if (it.group.empty()) {
        FiniteRing b = parse_ring(it.ring);
        std::vector<IntVec> dense = oracle_der(b, r.cfg.caps.oracle_log2_images);
        DerivationSpace space = der(b, r.cfg.caps);
        inst.detail["der_cardinality"] = space.cardinality().get_str();
        if (space.cardinality() != dense.size())
          throw error("oracle mismatch: solver " +
                      space.cardinality().get_str() + " vs dense " +
                      std::to_string(dense.size()));
        for (const IntVec &flat : dense)
          if (!space.coords().contains(flat))
            throw error("oracle derivation missing from solver kernel");
        inst.verdict = "PASS";
      } else {
        FiniteRing cr = parse_ring(it.ring);
        FiniteGroup g = parse_group(it.group);
        GroupRing gr = GroupRing::build(cr, g, r.cfg.caps);
        {
          std::vector<IntVec> dense =
              oracle_der_r(gr, r.cfg.caps.oracle_log2_images);
          DerivationSpace space = der_r(gr, r.cfg.caps);
          inst.detail["der_r_cardinality"] = space.cardinality().get_str();
          if (space.cardinality() != dense.size())
            throw error("oracle mismatch (der_r): solver " +
                        space.cardinality().get_str() + " vs dense " +
                        std::to_string(dense.size()));
          for (const IntVec &v : dense)
            if (!space.coords().contains(v))
              throw error("oracle R-derivation missing from solver kernel");
        }
        {
          std::vector<IntVec> dense =
              oracle_der(gr.carrier(), r.cfg.caps.oracle_log2_images);
          DerivationSpace space = der(gr.carrier(), r.cfg.caps);
          inst.detail["der_cardinality"] = space.cardinality().get_str();
          if (space.cardinality() != dense.size())
            throw error("oracle mismatch (der): solver " +
                        space.cardinality().get_str() + " vs dense " +
                        std::to_string(dense.size()));
          for (const IntVec &v : dense)
            if (!space.coords().contains(v))
              throw error("oracle derivation missing from solver kernel");
        }
        inst.verdict = "PASS";
      }
    });
  }
}

void check_t2(Runner &r) {
  for (const auto &pr :
       r.pair_family(r.ring_specs([] {
    std::vector<std::string> v;
    for (i64 m = 2; m <= 30; ++m) v.push_back("Zmod(" + std::to_string(m) + ")");
    return v;
  }()),
                     r.group_specs(abelian_groups_up_to(16));
  for (const auto &gs : groups) {
    FiniteGroup g = parse_group(gs);
    if (!g.is_abelian()) continue;
    for (const auto &rs : rings) {
      FiniteRing ring = parse_ring(rs);
      Instance base;
      base.check = "T2";
      base.ring = ring.name();
      base.group = g.name();
      base.hypothesis = "every p in pi(G) invertible in R";
      if (!primes_invertible(ring, g.pi())) {
        r.skip(base, "pi(G) not invertible in R");
        continue;
      }
      r.run(base, [&](Instance &inst) {
        GroupRing gr = GroupRing::build(ring, g, r.cfg.caps);
        DerivationSpace space = der_r(gr, r.cfg.caps);
        inst.detail["der_r_cardinality"] = space.cardinality().get_str();
        inst.verdict = space.cardinality() == 1 ? "PASS" : "FAIL";
      });
    }
  }
}

void check_c14(Runner &r, const std::string &id) {
  for (const auto &pr :
       r.pair_family(r.ring_specs([] {
    std::vector<std::string> v;
    for (i64 m = 2; m <= 11; ++m) v.push_back("Zmod(" + std::to_string(m) + ")");
    return v;
  }()),
                     r.group_specs({"S3", "D4", "Q8", "D5"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance base;
      base.check = id;
      base.ring = ring.name();
      base.group = g.name();
      base.hypothesis = "every p in pi(G) invertible in R";
      if (!primes_invertible(ring, g.pi())) {
        r.skip(base, "pi(G) not invertible in R");
        continue;
      }
      r.run(base, [&](Instance &inst) {
        GroupRing gr = GroupRing::build(ring, g, r.cfg.caps);
        const FiniteRing &b = gr.carrier();
        DerivationSpace space = der_r(gr, r.cfg.caps);
        inst.detail["der_r_cardinality"] = space.cardinality().get_str();
        Submodule z = b.center();
        std::size_t checked = 0;
        for (const Derivation &d : space.generators()) {
          auto w = inner_witness(b, d);
          if (!w) {
            inst.verdict = "FAIL";
            inst.detail["outer_generator"] = static_cast<int>(checked);
            return;
          }
          Coeffs x = averaging_witness(gr, d, g.full_subgroup());
          if (Derivation::inner(b, b.neg(x)) != d)
            throw error("averaging witness does not reproduce the derivation");
          // the two witnesses agree up to a central summand
          Coeffs diff = b.sub(b.neg(x), *w);
          if (!z.contains(to_ivec(diff)))
            throw error("averaging and solver witnesses differ non-centrally");
          if (id == "C20") {
            std::set<Coeffs> img;
            for (std::size_t gi = 0; gi < g.order(); ++gi)
              img.insert(d.apply(gr.basis_element(gi)));
            inst.detail["image_set_sizes"].push_back(img.size());
          }
          ++checked;
        }
        inst.detail["generators_checked"] = checked;
        inst.verdict = "PASS";
      });
    }
  }
}

void check_ggc4(Runner &r) {
  auto rings = r.ring_specs(
      {"Zmod(2)", "Zmod(3)", "Zmod(5)", "GF(2,2)", "Mat(2,Zmod(2))"});
  auto groups = r.group_specs({"S3", "D4", "Q8", "C6"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance base;
      base.check = "GGC4";
      base.ring = ring.name();
      base.group = g.name();
      base.hypothesis = "none";
      r.run(base, [&](Instance &inst) {
        GroupRing gr = GroupRing::build(ring, g, r.cfg.caps);
        InnerDerLie ider = inner_der_lie(gr, r.cfg.caps);
        inst.detail["ider_cardinality"] =
            ider.via_quotient.lie.cardinality().get_str();
        // abelian iff the derived subgroup is central
        bool abelian = true;
        const FiniteLieRing &l = ider.via_quotient.lie;
        for (std::size_t i = 0; i < l.rank() && abelian; ++i)
          for (std::size_t j = 0; j < l.rank() && abelian; ++j)
            if (!vec_zero(l.table(i, j))) abelian = false;
        SubgroupSet derived = g.derived_subgroup();
        SubgroupSet center = g.center();
        bool derived_central = true;
        for (std::size_t e : derived.indices())
          if (!center.contains(e)) derived_central = false;
        inst.detail["ider_abelian"] = abelian;
        inst.detail["derived_subgroup_central"] = derived_central;
        if (abelian && !derived_central) {
          inst.verdict = "FAIL";  // this direction holds in any characteristic
        } else if (!abelian && derived_central) {
          // the converse needs characteristic 2 on these families; a group
          // commutator gh - hg can sit outside the center even when G' is
          // central (Q8 over Z/3: [i, j] = 2k)
          inst.verdict = "FLAG";
          inst.detail["flag"] =
              "G' central but IDer nonabelian (converse fails off char 2)";
        } else {
          inst.verdict = "PASS";
        }
      });
    }
  }
}

void check_p10(Runner &r) {
  for (const auto &pr :
       r.pair_family(r.ring_specs({"Zmod(2)", "Zmod(3)", "Zmod(5)", "Zmod(6)", "GF(2,2)"}),
                     r.group_specs({"C2", "C4", "S3", "Q8"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance base;
      base.check = "P10";
      base.ring = ring.name();
      base.group = g.name();
      auto grq = build_carrier(r, base, ring, g);
      if (!grq) continue;
      const GroupRing &gr = *grq;
      const FiniteRing &b = gr.carrier();

      Instance i1 = base;
      i1.sub = "i";
      i1.hypothesis = "none";
      r.run(i1, [&](Instance &inst) {
        DerivationSpace full = der(b, r.cfg.caps);
        DerivationSpace zd = zder(b, r.cfg.caps);
        inst.detail["der_cardinality"] = full.cardinality().get_str();
        inst.detail["zder_cardinality"] = zd.cardinality().get_str();
        for (const Derivation &zg : zd.generators())
          for (const Derivation &dg : full.generators())
            if (!zd.contains(bracket(zg, dg)))
              throw error("zder is not an ideal of der");
        inst.verdict = "PASS";
      });

      Instance i2 = base;
      i2.sub = "ii";
      i2.hypothesis = "none";
      r.run(i2, [&](Instance &inst) {
        DerivationSpace zd = zder(b, r.cfg.caps);
        Submodule comm = b.commutator_span();
        for (const Derivation &zg : zd.generators())
          for (const IntVec &c : comm.gen_rows())
            if (!vec_zero(zg.apply(b.reduce(to_i64vec(c)))))
              throw error("central derivation does not kill [R,R]");
        inst.verdict = "PASS";
      });

      Instance i3 = base;
      i3.sub = "iii";
      i3.hypothesis = "R is exp(G)-torsion-free";
      if (std::gcd(g.exponent(), ring.ambient().exponent()) != 1) {
        r.skip(i3, "R has exp(G)-torsion");
      } else {
        r.run(i3, [&](Instance &inst) {
          DerivationSpace zd = zder(b, r.cfg.caps);
          for (const Derivation &zg : zd.generators())
            for (std::size_t gi = 0; gi < g.order(); ++gi)
              if (!vec_zero(zg.apply(gr.basis_element(gi))))
                throw error("central derivation does not kill G");
          inst.verdict = "PASS";
        });
      }
    }
  }
}

void check_p11(Runner &r) {
  for (const auto &pr :
       r.pair_family(r.ring_specs(
      {"Zmod(2)", "Zmod(3)", "Zmod(5)", "Zmod(6)", "GF(2,2)", "Mat(2,Zmod(2))"}),
                     r.group_specs({"C4", "S3", "D4", "Q8"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance base;
      base.check = "P11";
      base.ring = ring.name();
      base.group = g.name();
      auto grq = build_carrier(r, base, ring, g);
      if (!grq) continue;
      const GroupRing &gr = *grq;
      const FiniteRing &b = gr.carrier();
      const bool coprime = coprime_additive(ring, g);

      Instance i1 = base;
      i1.sub = "i";
      i1.hypothesis = "none";
      r.run(i1, [&](Instance &inst) {
        DerivationSpace space = der_r(gr, r.cfg.caps);
        Submodule zrg = gr.central_coeff_span();
        for (const Derivation &d : space.generators())
          for (std::size_t gi = 0; gi < g.order(); ++gi)
            if (!zrg.contains(to_ivec(d.apply(gr.basis_element(gi)))))
              throw error("delta(g) escapes Z(R)[G]");
        inst.verdict = "PASS";
      });

      Instance i2 = base;
      i2.sub = "ii";
      i2.hypothesis = "none";
      r.run(i2, [&](Instance &inst) {
        DerivationSpace space = der_r(gr, r.cfg.caps);
        DerivationSpace zd = zder_r(gr, r.cfg.caps);
        for (const Derivation &zg : zd.generators())
          for (const Derivation &dg : space.generators())
            if (!zd.contains(bracket(dg, zg)))
              throw error("zder_r is not an ideal of der_r");
        inst.verdict = "PASS";
      });

      Instance i3 = base;
      i3.sub = "iii";
      i3.hypothesis = "pi(F(R)) disjoint from pi(G)";
      if (!coprime) {
        r.skip(i3, "pi(F(R)) meets pi(G)");
      } else {
        r.run(i3, [&](Instance &inst) {
          DerivationSpace zd = zder_r(gr, r.cfg.caps);
          inst.detail["zder_r_cardinality"] = zd.cardinality().get_str();
          inst.verdict = zd.cardinality() == 1 ? "PASS" : "FAIL";
        });
      }

      Instance i4 = base;
      i4.sub = "iv";
      i4.hypothesis = "pi(F(R)) disjoint from pi(G)";
      if (!coprime) {
        r.skip(i4, "pi(F(R)) meets pi(G)");
      } else {
        r.run(i4, [&](Instance &inst) {
          DerivationSpace zd = zder_r(gr, r.cfg.caps);
          for (const Derivation &zg : zd.generators())
            for (std::size_t gi = 0; gi < g.order(); ++gi)
              if (!vec_zero(zg.apply(gr.basis_element(gi))))
                throw error("central R-derivation does not kill tau(G)");
          inst.verdict = "PASS";
        });
      }

      Instance i5 = base;
      i5.sub = "v";
      i5.hypothesis = "pi(F(R)) disjoint from pi(G)";
      if (!coprime) {
        r.skip(i5, "pi(F(R)) meets pi(G)");
      } else {
        r.run(i5, [&](Instance &inst) {
          DerivationSpace rspace = der_r(gr, r.cfg.caps);
          DerivationSpace full = der(b, r.cfg.caps);
          bool lhs = rspace.cardinality() == 1;
          bool rhs = true;
          for (const Derivation &d : full.generators())
            for (std::size_t gi = 0; gi < g.order() && rhs; ++gi)
              if (!vec_zero(d.apply(gr.basis_element(gi)))) rhs = false;
          inst.detail["der_r_trivial"] = lhs;
          inst.detail["full_der_kills_G"] = rhs;
          inst.verdict = lhs == rhs ? "PASS" : "FAIL";
        });
      }
    }
  }
}

void check_p21(Runner &r) {
  for (const auto &pr :
       r.pair_family(r.ring_specs({"Zmod(2)", "Zmod(3)", "Zmod(5)", "GF(2,2)"}),
                     r.group_specs({"S3", "D4", "Q8", "C6", "A4"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance base;
      base.check = "P21";
      base.ring = ring.name();
      base.group = g.name();

      Instance i1 = base;
      i1.sub = "i";
      i1.hypothesis = "none";
      r.run(i1, [&](Instance &inst) {
        GroupRing gr = GroupRing::build(ring, g, r.cfg.caps);
        InnerDerLie ider = inner_der_lie(gr, r.cfg.caps);
        auto nil = nilpotency_class(ider.via_quotient.lie);
        auto solv = solvable_length(ider.via_quotient.lie);
        inst.detail["ider_nilpotency_class"] =
            nil ? nlohmann::json(*nil) : nlohmann::json(nullptr);
        inst.detail["ider_solvable_length"] =
            solv ? nlohmann::json(*solv) : nlohmann::json(nullptr);
        if (nil && !g.nilpotency_class())
          throw error("IDer nilpotent but G is not nilpotent");
        if (solv && !g.is_solvable())
          throw error("IDer solvable but G is not solvable");
        inst.verdict = "PASS";
      });

      // division-ring characterization; prime fields and GF(p,e) qualify
      bool division = false;
      i64 p = 0;
      {
        std::vector<i64> pf = prime_factors(ring.ambient().exponent());
        if (pf.size() == 1) {
          p = pf[0];
          try {
            division = ring.units(r.cfg.caps.enumeration).size() + 1 ==
                       ring.cardinality();
          } catch (const cap_error &) {
            division = false;
          }
        }
      }
      Instance i2 = base;
      i2.sub = "ii";
      i2.hypothesis = "R is a division ring of characteristic p";
      if (!division) {
        r.skip(i2, "R is not a division ring");
      } else {
        r.run(i2, [&](Instance &inst) {
          GroupRing gr = GroupRing::build(ring, g, r.cfg.caps);
          InnerDerLie ider = inner_der_lie(gr, r.cfg.caps);
          bool nil = nilpotency_class(ider.via_quotient.lie).has_value();
          bool solv = solvable_length(ider.via_quotient.lie).has_value();
          bool p_abelian = g.is_p_abelian(p);
          bool g_nilpotent = g.nilpotency_class().has_value();
          bool expect_nil = p_abelian && g_nilpotent;
          bool expect_solv;
          if (p != 2) {
            expect_solv = p_abelian;
          } else {
            expect_solv = false;
            for (const SubgroupSet &h : g.all_subgroups())
              if (2 * h.size() >= g.order() &&
                  [&] {
                    std::size_t d = g.derived_of(h).size();
                    while (d % 2 == 0) d /= 2;
                    return d == 1;
                  }())
                expect_solv = true;
          }
          inst.detail["ider_nilpotent"] = nil;
          inst.detail["expected_nilpotent"] = expect_nil;
          inst.detail["ider_solvable"] = solv;
          inst.detail["expected_solvable"] = expect_solv;
          inst.verdict = (nil == expect_nil && solv == expect_solv) ? "PASS"
                                                                    : "FAIL";
        });
      }
    }
  }
}

void check_p28(Runner &r) {
  for (const auto &pr :
       r.pair_family(r.ring_specs({"Zmod(3)", "Zmod(5)"}),
                     r.group_specs({"Q8", "D4", "C2xC4"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance base;
      base.check = "P28";
      base.ring = ring.name();
      base.group = g.name();
      base.hypothesis = "G nilpotent of class >= 2, pi(G) disjoint from pi(F(R))";
      auto cls = g.nilpotency_class();
      if (!cls || *cls < 2) {
        r.skip(base, "nilpotency class below 2");
        continue;
      }
      if (!coprime_additive(ring, g)) {
        r.skip(base, "pi(G) meets pi(F(R))");
        continue;
      }
      r.run(base, [&](Instance &inst) {
        GroupRing gr = GroupRing::build(ring, g, r.cfg.caps);
        const FiniteRing &b = gr.carrier();
        DerivationSpace space = der_r(gr, r.cfg.caps);
        std::vector<Derivation> gens = space.generators();
        std::vector<SubgroupSet> upper = g.upper_central_series();
        // I_R(Z_i) for i >= 1
        std::vector<Submodule> ideals;
        for (std::size_t i = 1; i < upper.size(); ++i)
          ideals.push_back(gr.augmentation_ideal(upper[i]).ideal);
        const int m = *cls;
        // composite of every (m-1)-tuple of generators lands in I_R(Z_1)
        double tuples = std::pow(static_cast<double>(gens.size()),
                                 static_cast<double>(m - 1));
        if (tuples > 4096.0) throw cap_error("P28: too many generator tuples");
        std::vector<std::size_t> idx(static_cast<std::size_t>(m - 1), 0);
        bool done = gens.empty();
        while (!done) {
          std::vector<const Derivation *> seq;
          for (std::size_t i : idx) seq.push_back(&gens[i]);
          Submodule img = composite_image_span(b, seq);
          if (!ideals[0].contains(img))
            throw error("composite image escapes I_R(Z_1)");
          std::size_t k = 0;
          while (k < idx.size() && ++idx[k] == gens.size()) {
            idx[k] = 0;
            ++k;
          }
          if (k == idx.size()) done = true;
        }
        // every I_R(Z_i) is delta-stable
        for (std::size_t i = 0; i < ideals.size(); ++i)
          for (const Derivation &d : gens)
            if (!stable_under(ideals[i], d))
              throw error("I_R(Z_" + std::to_string(i + 1) +
                          ") is not delta-stable");
        inst.detail["class"] = m;
        inst.detail["generators"] = gens.size();
        inst.verdict = "PASS";
      });
    }
  }
}

void check_l8(Runner &r) {
  for (const auto &pr :
       r.pair_family(r.ring_specs({"Zmod(2)", "Zmod(3)", "Zmod(5)", "Zmod(6)"}),
                     r.group_specs({"C2", "C4", "S3", "Q8"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance base;
      base.check = "L8";
      base.ring = ring.name();
      base.group = g.name();
      base.sub = "iii";
      base.hypothesis = "none";
      r.run(base, [&](Instance &inst) {
        GroupRing gr = GroupRing::build(ring, g, r.cfg.caps);
        const FiniteRing &b = gr.carrier();
        DerivationSpace space = der(b, r.cfg.caps);
        std::size_t checked = 0;
        for (const Derivation &d : space.generators()) {
          bool hom = true;
          for (std::size_t x = 0; x < g.order() && hom; ++x)
            for (std::size_t y = 0; y < g.order() && hom; ++y) {
              Coeffs lhs = l_map(gr, d, g.mul(x, y));
              Coeffs rhs = b.add(l_map(gr, d, x), l_map(gr, d, y));
              if (lhs != rhs) hom = false;
            }
          bool commutes = true;
          for (std::size_t x = 0; x < g.order() && commutes; ++x) {
            Coeffs lx = l_map(gr, d, x);
            for (std::size_t u = 0; u < g.order() && commutes; ++u)
              if (!vec_zero(b.commutator(lx, gr.basis_element(u))))
                commutes = false;
          }
          if (hom != commutes)
            throw error("L_delta homomorphism criterion failed");
          ++checked;
        }
        inst.detail["generators_checked"] = checked;
        inst.verdict = "PASS";
      });
    }
  }
}

void check_l9(Runner &r) {
  for (const auto &pr :
       r.pair_family(r.ring_specs([] {
    std::vector<std::string> v;
    for (i64 n = 2; n <= 8; ++n) v.push_back("Zmod(" + std::to_string(n) + ")");
    return v;
  }());
  for (const auto &rs : rings) {
    FiniteRing ring = parse_ring(rs);
    Instance base;
    base.check = "L9";
    base.ring = ring.name();
    base.hypothesis = "ring small enough for dense solder tables";
    r.run(base, [&](Instance &inst) {
      std::vector<Solder> solders =
          enumerate_solders(ring, r.cfg.caps.solder_elements);
      inst.detail["solder_count"] = solders.size();
      std::size_t derivations = 0;
      for (const Solder &h : solders) {
        SolderReport rep =
            check_solder_properties(ring, h, r.cfg.caps.solder_elements);
        if (!rep.clean()) throw error("solder property report not clean");
        if (rep.delta_is_derivation) ++derivations;
      }
      inst.detail["with_derivation"] = derivations;
      inst.verdict = "PASS";
    });
  }
}

void check_l13(Runner &r) {
  auto rings = r.ring_specs({"Zmod(5)", "Zmod(7)"}),
                     r.group_specs({"S3", "D4", "Q8"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance pair_base;
      pair_base.check = "L13";
      pair_base.ring = ring.name();
      pair_base.group = g.name();
      auto grq = build_carrier(r, pair_base, ring, g);
      if (!grq) continue;
      const GroupRing &gr = *grq;
      std::vector<Derivation> gens;
      try {
        gens = der_r(gr, r.cfg.caps).generators();
      } catch (const cap_error &e) {
        pair_base.sub = "der_r";
        r.skip(pair_base, std::string("cap: ") + e.what());
        continue;
      }
      std::vector<SubgroupSet> normals = g.normal_subgroups();
      for (std::size_t hi = 0; hi < normals.size(); ++hi) {
        const SubgroupSet &h = normals[hi];
        Instance base;
        base.check = "L13";
        base.ring = ring.name();
        base.group = g.name();
        base.sub = subgroup_tag(g, h, hi);
        base.hypothesis = "every p in pi(H) invertible in R";
        bool ok = true;
        for (std::size_t e : h.indices())
          for (i64 p : prime_factors(static_cast<i64>(g.element_order(e))))
            if (!ring.is_invertible_prime(p)) ok = false;
        if (!ok) {
          r.skip(base, "pi(H) not invertible in R");
          continue;
        }
        r.run(base, [&](Instance &inst) {
          Submodule ideal = gr.augmentation_ideal(h).ideal;
          for (const Derivation &d : gens) {
            if (!stable_under(ideal, d))
              throw error("I_R(H) is not delta-stable");
            if (h.size() > 0) {
              Coeffs x = averaging_witness(gr, d, h);
              Coeffs nx = gr.carrier().neg(x);
              for (std::size_t e : h.indices()) {
                Coeffs basis = gr.basis_element(e);
                if (d.apply(basis) != gr.carrier().commutator(nx, basis))
                  throw error("delta != inner(-x_H) on H");
              }
            }
          }
          inst.detail["ideal_cardinality"] = ideal.cardinality().get_str();
          inst.detail["generators"] = gens.size();
          inst.verdict = "PASS";
        });
      }
    }
  }
}

void check_l19(Runner &r) {
  for (const auto &pr :
       r.pair_family(r.ring_specs({"Zmod(3)", "Zmod(5)", "Zmod(7)"}),
                     r.group_specs({"C4", "S3", "D4", "Q8"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance base;
      base.check = "L19";
      base.ring = ring.name();
      base.group = g.name();
      base.hypothesis = "every p in pi(G) invertible in R";
      if (!primes_invertible(ring, g.pi())) {
        r.skip(base, "pi(G) not invertible in R");
        continue;
      }
      r.run(base, [&](Instance &inst) {
        GroupRing gr = GroupRing::build(ring, g, r.cfg.caps);
        DerivationSpace space = der(gr.carrier(), r.cfg.caps);
        SubgroupSet z = g.center();
        for (const Derivation &d : space.generators()) {
          for (std::size_t gi = 0; gi < g.order(); ++gi)
            if (!coefficient_vanishing(gr, d, gi))
              throw error("commuting coefficient fails to vanish");
          for (std::size_t zi : z.indices())
            if (!vec_zero(d.apply(gr.basis_element(zi))))
              throw error("derivation does not kill Z(G)");
        }
        inst.detail["generators_checked"] =
            space.coords().gens().rows();
        inst.verdict = "PASS";
      });
    }
  }
}

void check_l23(Runner &r) {
  for (const auto &pr :
       r.pair_family(r.ring_specs({"Zmod(4)", "Zmod(6)", "Zmod(12)", "GF(2,2)",
                             "Mat(2,Zmod(2))", "Mat(2,Zmod(3))",
                             "Prod(Zmod(2),Zmod(3))"});
  std::vector<std::pair<std::string, std::string>> carriers;
  for (const auto &rs : rings) carriers.push_back({spec_name(rs), ""});
  for (const auto &gs : r.cfg.groups)
    for (const auto &rs : rings)
      carriers.push_back({spec_name(rs), spec_name(gs)});
  if (r.cfg.groups.empty()) carriers.push_back({"Zmod(2)", "Q8"});

  for (const auto &[rname, gname] : carriers) {
    Instance base;
    base.check = "L23";
    base.ring = rname;
    base.group = gname;

    // assemble the carrier
    std::optional<FiniteRing> carrier_opt;
    try {
      FiniteRing ring = parse_ring(rname);
      if (gname.empty()) {
        carrier_opt = std::move(ring);
      } else {
        FiniteGroup g = parse_group(gname);
        carrier_opt = GroupRing::build(ring, g, r.cfg.caps).carrier();
      }
    } catch (const cap_error &e) {
      Instance sk = base;
      sk.sub = "carrier";
      r.skip(sk, std::string("cap: ") + e.what());
      continue;
    }
    const FiniteRing &carrier = *carrier_opt;

    Instance i1 = base;
    i1.sub = "i+ii";
    i1.hypothesis = "none";
    r.run(i1, [&](Instance &inst) {
      DerivationSpace space = der(carrier, r.cfg.caps);
      LiePresentation lie = derivation_lie(space, "Der(" + carrier.name() + ")");
      Submodule zc = lie_center(lie.lie);
      Submodule center = carrier.center();
      std::vector<Derivation> all = space.generators();
      std::size_t central_count = 0;
      for (const IntVec &zrow : zc.gen_rows()) {
        Derivation d = space.expand(lie.pres.lift(zrow));
        ++central_count;
        if (!center.contains(image_span(carrier, d)))
          throw error("central derivation image escapes Z(B)");
        for (const IntVec &zb : center.gen_rows()) {
          Coeffs dz = d.apply(carrier.reduce(to_i64vec(zb)));
          for (const Derivation &other : all)
            for (std::size_t i = 0; i < carrier.rank(); ++i) {
              Coeffs prod =
                  carrier.mul(dz, other.apply(carrier.generator(i)));
              if (!vec_zero(prod))
                throw error("delta(Z(B)) fails to annihilate Der B");
            }
        }
      }
      inst.detail["central_derivation_generators"] = central_count;
      inst.verdict = "PASS";
    });

    FiniteLieRing assoc = from_associative(carrier);
    auto lie_nil = nilpotency_class(assoc);
    auto lie_solv = solvable_length(assoc);

    Instance i4 = base;
    i4.sub = "iv";
    i4.hypothesis = "B Lie nilpotent";
    if (!lie_nil) {
      r.skip(i4, "B is not Lie nilpotent");
    } else {
      r.run(i4, [&](Instance &inst) {
        Submodule c = carrier.commutator_ideal();
        Submodule rad =
            carrier.prime_radical(r.cfg.caps.enumeration).ideal;
        inst.verdict = rad.contains(c) ? "PASS" : "FAIL";
      });
    }

    Instance i5 = base;
    i5.sub = "v";
    i5.hypothesis = "B Lie solvable";
    if (!lie_solv) {
      r.skip(i5, "B is not Lie solvable");
    } else {
      r.run(i5, [&](Instance &inst) {
        Submodule rad =
            carrier.prime_radical(r.cfg.caps.enumeration).ideal;
        LieSeries ds = derived_series(assoc);
        bool found = false;
        for (const Submodule &term : ds.terms) {
          std::vector<IntVec> rows;
          for (const IntVec &u : term.gen_rows()) {
            Coeffs cu = carrier.reduce(to_i64vec(u));
            for (std::size_t i = 0; i < carrier.rank(); ++i)
              rows.push_back(
                  to_ivec(carrier.commutator(cu, carrier.generator(i))));
          }
          if (rad.contains(Submodule::span(carrier.ambient(), rows))) {
            found = true;
            break;
          }
        }
        inst.verdict = found ? "PASS" : "FAIL";
      });
    }

    Instance i6 = base;
    i6.sub = "vi";
    i6.hypothesis = "B semiprime and Lie solvable";
    bool semiprime = false;
    bool sp_known = true;
    try {
      semiprime = carrier.is_semiprime(r.cfg.caps.enumeration);
    } catch (const cap_error &) {
      sp_known = false;
    }
    if (!sp_known) {
      r.skip(i6, "semiprimeness enumeration capped");
    } else if (!semiprime || !lie_solv) {
      r.skip(i6, "hypothesis (semiprime and Lie solvable) not met");
    } else {
      r.run(i6, [&](Instance &inst) {
        if (carrier.is_commutative()) {
          inst.verdict = "PASS";
        } else if (vec_zero(carrier.scale(2, carrier.one()))) {
          // characteristic-2 exception, same phenomenon the T5 scan flags
          inst.verdict = "FLAG";
          inst.detail["flag"] =
              "semiprime Lie-solvable noncommutative carrier in char 2";
        } else {
          inst.verdict = "FAIL";
        }
      });
    }
  }
}

void check_l25(Runner &r) {
  auto rings = r.ring_specs({"Mat(2,Zmod(4))", "Mat(2,Zmod(6))"});
  for (const auto &rs : rings) {
    FiniteRing ring = parse_ring(rs);
    Instance base;
    base.check = "L25";
    base.ring = ring.name();
    base.hypothesis = "[[x,y],x] == 0 (rejection sampled)";
    r.run(base, [&](Instance &inst) {
      std::uint64_t state = r.cfg.seed ^ 0xa5a5a5a5ULL;
      std::size_t accepted = 0, attempts = 0;
      const std::size_t want = r.cfg.samples;
      while (accepted < want && attempts < 400 * want) {
        ++attempts;
        Coeffs x = random_element(ring, state);
        Coeffs y = random_element(ring, state);
        Coeffs xy = ring.commutator(x, y);
        Coeffs pre = ring.commutator(xy, x);
        if (!vec_zero(pre)) continue;
        ++accepted;
        std::uint64_t k = 2 + rand_below(state, 5);
        if (!commutator_power_identity(ring, x, y, k))
          throw error("[x^k,y] != k x^{k-1} [x,y]");
      }
      if (accepted < want)
        throw cap_error("L25: rejection sampling starved (" +
                        std::to_string(accepted) + "/" + std::to_string(want) +
                        ")");
      inst.detail["accepted_samples"] = accepted;
      inst.detail["attempts"] = attempts;
      inst.verdict = "PASS";
    });
  }
}

void check_l26(Runner &r) {
  auto rings = r.ring_specs({"Zmod(5)", "Zmod(7)"}),
                     r.group_specs({"C4", "C6", "S3", "D4", "Q8"}))) {
    const FiniteGroup &g = pr.second;
    {
      const FiniteRing &ring = pr.first;
      Instance base;
      base.check = "L26";
      base.ring = ring.name();
      base.group = g.name();
      base.hypothesis = "every p in pi(G) invertible in R";
      if (!primes_invertible(ring, g.pi())) {
        r.skip(base, "pi(G) not invertible in R");
        continue;
      }
      r.run(base, [&](Instance &inst) {
        GroupRing gr = GroupRing::build(ring, g, r.cfg.caps);
        EngelReport rep = engel_scan(gr);
        inst.detail["engel"] = rep.engel;
        inst.detail["abelian"] = g.is_abelian();
        if (rep.engel) {
          if (!g.is_abelian()) throw error("Engel set but G non-abelian");
          DerivationSpace space = der_r(gr, r.cfg.caps);
          inst.detail["der_r_cardinality"] = space.cardinality().get_str();
          if (space.cardinality() != 1)
            throw error("Engel and abelian but Der_R R[G] != 0");
        } else {
          if (g.is_abelian()) throw error("abelian G must be an Engel set");
          inst.detail["non_engel_pair"] = {rep.witness->first,
                                           rep.witness->second};
        }
        inst.verdict = "PASS";
      });
    }
  }
}

void check_t5(Runner &r) {
  auto rings = r.ring_specs(scan_rings());
  for (const auto &rs : rings) {
    FiniteRing ring = parse_ring(rs);
    Instance base;
    base.check = "T5SCAN";
    base.ring = ring.name();
    base.hypothesis = "B semiprime";
    bool semiprime = false;
    try {
      semiprime = ring.is_semiprime(r.cfg.caps.enumeration);
    } catch (const cap_error &e) {
      r.skip(base, std::string("cap: ") + e.what());
      continue;
    }
    if (!semiprime) {
      r.skip(base, "B is not semiprime");
      continue;
    }
    r.run(base, [&](Instance &inst) {
      DerivationSpace space = der(ring, r.cfg.caps);
      LiePresentation lie = derivation_lie(space, "Der(" + ring.name() + ")");
      auto nil = nilpotency_class(lie.lie);
      auto solv = solvable_length(lie.lie);
      bool trivial = space.cardinality() == 1;
      inst.detail["der_cardinality"] = space.cardinality().get_str();
      inst.detail["nilpotent"] = nil.has_value();
      inst.detail["solvable"] = solv.has_value();
      if (nil && !trivial) {
        inst.verdict = "FAIL";
        inst.detail["violation"] = "nilpotent Der with Der != 0";
        return;
      }
      if (solv && !trivial) {
        bool char2 = vec_zero(ring.scale(2, ring.one()));
        if (char2) {
          inst.verdict = "FLAG";
          inst.detail["flag"] =
              "solvable Der != 0 on a semiprime carrier of characteristic 2";
          inst.detail["solvable_length"] = *solv;
          return;
        }
        inst.verdict = "FAIL";
        inst.detail["violation"] = "solvable Der with Der != 0 away from char 2";
        return;
      }
      inst.verdict = "PASS";
    });
  }
}

using CheckFn = void (*)(Runner &);

const std::map<std::string, std::function<void(Runner &)>> &check_table() {
  static const std::map<std::string, std::function<void(Runner &)>> table = {
      {"T2", [](Runner &r) { check_t2(r); }},
      {"C14", [](Runner &r) { check_c14(r, "C14"); }},
      {"C20", [](Runner &r) { check_c14(r, "C20"); }},
      {"GGC4", [](Runner &r) { check_ggc4(r); }},
      {"P10", [](Runner &r) { check_p10(r); }},
      {"P11", [](Runner &r) { check_p11(r); }},
      {"P21", [](Runner &r) { check_p21(r); }},
      {"P28", [](Runner &r) { check_p28(r); }},
      {"L8", [](Runner &r) { check_l8(r); }},
      {"L9", [](Runner &r) { check_l9(r); }},
      {"L13", [](Runner &r) { check_l13(r); }},
      {"L19", [](Runner &r) { check_l19(r); }},
      {"L23", [](Runner &r) { check_l23(r); }},
      {"L25", [](Runner &r) { check_l25(r); }},
      {"L26", [](Runner &r) { check_l26(r); }},
      {"T5SCAN", [](Runner &r) { check_t5(r); }},
      {"ORACLE", [](Runner &r) { check_oracle(r); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string> &all_checks() {
  static const std::vector<std::string> ids = {
      "ORACLE", "T2",  "C14", "C20", "GGC4", "P10", "P11", "P21", "P28",
      "L8",     "L9",  "L13", "L19", "L23",  "L25", "L26", "T5SCAN"};
  return ids;
}

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json &j) {
  ScenarioConfig cfg;
  cfg.check = j.at("check").get<std::string>();
  if (j.contains("rings"))
    for (const auto &r : j.at("rings")) cfg.rings.push_back(r);
  if (j.contains("groups"))
    for (const auto &g : j.at("groups")) cfg.groups.push_back(g);
  if (j.contains("caps")) {
    const auto &c = j.at("caps");
    cfg.caps.enumeration = c.value("enumeration", cfg.caps.enumeration);
    cfg.caps.solve_unknowns = c.value("solve_unknowns", cfg.caps.solve_unknowns);
    cfg.caps.rank = c.value("rank", cfg.caps.rank);
    cfg.caps.solder_elements =
        c.value("solder_elements", cfg.caps.solder_elements);
    cfg.caps.oracle_log2_images =
        c.value("oracle_log2_images", cfg.caps.oracle_log2_images);
  }
  cfg.seed = j.value("seed", cfg.seed);
  cfg.samples = j.value("samples", cfg.samples);
  return cfg;
}

nlohmann::json ScenarioConfig::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["rings"] = rings;
  j["groups"] = groups;
  j["caps"] = {{"enumeration", caps.enumeration},
               {"solve_unknowns", caps.solve_unknowns},
               {"rank", caps.rank},
               {"solder_elements", caps.solder_elements},
               {"oracle_log2_images", caps.oracle_log2_images}};
  j["seed"] = seed;
  j["samples"] = samples;
  return j;
}

std::size_t Report::count(const std::string &verdict) const {
  std::size_t n = 0;
  for (const Instance &i : instances)
    if (i.verdict == verdict) ++n;
  return n;
}

void Report::sort_instances() {
  std::sort(instances.begin(), instances.end(),
            [](const Instance &a, const Instance &b) { return a.key() < b.key(); });
}

void Report::append(const Report &other) {
  instances.insert(instances.end(), other.instances.begin(),
                   other.instances.end());
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["check"] = check;
  j["seed"] = seed;
  nlohmann::json arr = nlohmann::json::array();
  for (const Instance &i : instances) {
    nlohmann::json ji;
    ji["check"] = i.check;
    ji["ring"] = i.ring;
    ji["group"] = i.group;
    ji["sub"] = i.sub;
    ji["hypothesis"] = i.hypothesis;
    ji["hypothesis_satisfied"] = i.hypothesis_satisfied;
    ji["verdict"] = i.verdict;
    ji["detail"] = i.detail;
    arr.push_back(std::move(ji));
  }
  j["instances"] = std::move(arr);
  j["summary"] = {{"pass", count("PASS")},
                  {"fail", count("FAIL")},
                  {"skip", count("SKIP")},
                  {"flag", count("FLAG")},
                  {"error", count("ERROR")}};
  if (with_timing) {
    nlohmann::json times;
    for (const Instance &i : instances) times[i.key()] = i.millis;
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = {{"generated_at", buf}, {"instance_millis", times}};
  }
  return j;
}

std::string Report::text_summary() const {
  std::ostringstream os;
  for (const Instance &i : instances) {
    os << (i.verdict + "    ").substr(0, 6) << " " << i.check;
    if (!i.sub.empty()) os << "(" << i.sub << ")";
    os << "  " << i.ring;
    if (!i.group.empty()) os << " [" << i.group << "]";
    if (i.verdict == "SKIP" && i.detail.contains("skip_reason"))
      os << "  -- " << i.detail["skip_reason"].get<std::string>();
    if (i.verdict == "FLAG" && i.detail.contains("flag"))
      os << "  -- " << i.detail["flag"].get<std::string>();
    if (i.verdict == "ERROR" && i.detail.contains("error"))
      os << "  -- " << i.detail["error"].get<std::string>();
    os << "\n";
  }
  os << "pass " << count("PASS") << ", fail " << count("FAIL") << ", skip "
     << count("SKIP") << ", flag " << count("FLAG") << ", error "
     << count("ERROR") << "\n";
  return os.str();
}

Report run_scenario(const ScenarioConfig &cfg) {
  const auto &table = check_table();
  auto it = table.find(cfg.check);
  if (it == table.end()) throw error("unknown check id '" + cfg.check + "'");
  Report report;
  report.check = cfg.check;
  report.seed = cfg.seed;
  Runner runner{cfg, report};
  it->second(runner);
  report.sort_instances();
  return report;
}

Report run_scan(std::uint64_t seed, const Caps &caps) {
  Report merged;
  merged.check = "scan";
  merged.seed = seed;
  for (const std::string &id : all_checks()) {
    ScenarioConfig cfg;
    cfg.check = id;
    cfg.caps = caps;
    cfg.seed = seed;
    merged.append(run_scenario(cfg));
  }
  merged.sort_instances();
  return merged;
}

std::vector<IntVec> oracle_der(const FiniteRing &b, double log2_cap) {
  const std::size_t n = b.rank();
  double log2_total = static_cast<double>(n) *
                      std::log2(b.cardinality().get_d() > 0
                                    ? b.cardinality().get_d()
                                    : 1.0);
  if (log2_total > log2_cap)
    throw cap_error("oracle_der(" + b.name() + "): image space 2^" +
                    std::to_string(log2_total) + " over cap");
  const std::size_t card = static_cast<std::size_t>(b.cardinality().get_ui());
  std::vector<IntVec> found;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Coeffs> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = b.element_at(idx[i]);
    if (is_derivation(b, images)) {
      IntVec flat;
      flat.reserve(n * n);
      for (const Coeffs &im : images)
        for (i64 c : im) flat.emplace_back(static_cast<long>(c));
      found.push_back(std::move(flat));
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == card) {
      idx[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return found;
}

std::vector<IntVec> oracle_der_r(const GroupRing &gr, double log2_cap) {
  const FiniteRing &b = gr.carrier();
  const std::size_t ng = gr.group().order(), nr = gr.coeff_ring().rank();
  double log2_total =
      static_cast<double>(ng) * std::log2(b.cardinality().get_d());
  if (log2_total > log2_cap)
    throw cap_error("oracle_der_r(" + b.name() + "): image space 2^" +
                    std::to_string(log2_total) + " over cap");
  const std::size_t card = static_cast<std::size_t>(b.cardinality().get_ui());
  std::vector<IntVec> found;
  std::vector<std::size_t> idx(ng, 0);
  while (true) {
    std::vector<Coeffs> y(ng);
    for (std::size_t gi = 0; gi < ng; ++gi) y[gi] = b.element_at(idx[gi]);
    // expand to images of all additive generators via r_t * y_g
    std::vector<Coeffs> images(b.rank());
    for (std::size_t gi = 0; gi < ng; ++gi)
      for (std::size_t t = 0; t < nr; ++t) {
        Coeffs rt(b.rank(), 0);
        if (gr.coeff_ring().ambient().orders[t] > 1) rt[t] = 1;
        images[gr.block(gi, t)] = b.mul(rt, y[gi]);
      }
    bool vanishes_on_r = true;
    for (std::size_t t = 0; t < nr && vanishes_on_r; ++t)
      if (!vec_zero(images[gr.block(0, t)])) vanishes_on_r = false;
    if (vanishes_on_r && is_derivation(b, images)) {
      IntVec coords;
      coords.reserve(ng * b.rank());
      for (std::size_t gi = 0; gi < ng; ++gi)
        for (i64 c : y[gi]) coords.emplace_back(static_cast<long>(c));
      found.push_back(std::move(coords));
    }
    std::size_t k = 0;
    while (k < ng && ++idx[k] == card) {
      idx[k] = 0;
      ++k;
    }
    if (k == ng) break;
  }
  return found;
}

}  // namespace derring
