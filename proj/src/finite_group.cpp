#include "derring/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace derring {

FiniteGroup FiniteGroup::from_cayley(
    const std::vector<std::vector<std::size_t>> &t, std::string name,
    CheckLevel check) {
  FiniteGroup g;
  g.n_ = t.size();
  g.name_ = std::move(name);
  if (g.n_ == 0 || g.n_ > 0xffff) throw error("from_cayley: bad order");
  g.table_.resize(g.n_ * g.n_);
  for (std::size_t i = 0; i < g.n_; ++i) {
    if (t[i].size() != g.n_) throw error("from_cayley: table not square");
    for (std::size_t j = 0; j < g.n_; ++j) {
      if (t[i][j] >= g.n_) throw error("from_cayley: entry out of range");
      g.table_[i * g.n_ + j] = static_cast<std::uint16_t>(t[i][j]);
    }
  }
  if (check != CheckLevel::none) {
    for (std::size_t i = 0; i < g.n_; ++i)
      if (g.mul(0, i) != i || g.mul(i, 0) != i)
        throw error("from_cayley: identity must sit at index 0");
    // Latin square
    for (std::size_t i = 0; i < g.n_; ++i) {
      std::vector<bool> seen_row(g.n_, false), seen_col(g.n_, false);
      for (std::size_t j = 0; j < g.n_; ++j) {
        if (seen_row[g.mul(i, j)] || seen_col[g.mul(j, i)])
          throw error("from_cayley: not a Latin square");
        seen_row[g.mul(i, j)] = true;
        seen_col[g.mul(j, i)] = true;
      }
    }
    if (check == CheckLevel::full && g.n_ <= 512) {
      for (std::size_t a = 0; a < g.n_; ++a)
        for (std::size_t b = 0; b < g.n_; ++b)
          for (std::size_t c = 0; c < g.n_; ++c)
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
              throw error("from_cayley: not associative");
    } else {
      std::uint64_t s = 0xc2b2ae3d27d4eb4fULL;
      for (int k = 0; k < 4096; ++k) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        std::size_t a = (s >> 33) % g.n_;
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        std::size_t b = (s >> 33) % g.n_;
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        std::size_t c = (s >> 33) % g.n_;
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw error("from_cayley: not associative");
      }
    }
  }
  g.inv_.resize(g.n_);
  for (std::size_t i = 0; i < g.n_; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < g.n_; ++j)
      if (g.mul(i, j) == 0) {
        if (g.mul(j, i) != 0) throw error("from_cayley: one-sided inverse");
        g.inv_[i] = static_cast<std::uint16_t>(j);
        found = true;
        break;
      }
    if (!found) throw error("from_cayley: missing inverse");
  }
  return g;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::int64_t FiniteGroup::exponent() const {
  std::int64_t e = 1;
  for (std::size_t i = 0; i < n_; ++i)
    e = std::lcm(e, static_cast<std::int64_t>(element_order(i)));
  return e;
}

std::vector<std::int64_t> FiniteGroup::pi() const {
  return prime_factors(exponent());
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

SubgroupSet FiniteGroup::trivial_subgroup() const {
  SubgroupSet s{std::vector<std::uint8_t>(n_, 0), true};
  s.member[0] = 1;
  return s;
}

SubgroupSet FiniteGroup::full_subgroup() const {
  return SubgroupSet{std::vector<std::uint8_t>(n_, 1), true};
}

SubgroupSet FiniteGroup::center() const {
  SubgroupSet s{std::vector<std::uint8_t>(n_, 0), true};
  for (std::size_t g = 0; g < n_; ++g) {
    bool central = true;
    for (std::size_t x = 0; x < n_ && central; ++x)
      if (mul(g, x) != mul(x, g)) central = false;
    s.member[g] = central ? 1 : 0;
  }
  return s;
}

SubgroupSet FiniteGroup::centralizer(const std::vector<std::size_t> &set) const {
  SubgroupSet s{std::vector<std::uint8_t>(n_, 0), false};
  for (std::size_t g = 0; g < n_; ++g) {
    bool ok = true;
    for (std::size_t x : set)
      if (mul(g, x) != mul(x, g)) {
        ok = false;
        break;
      }
    s.member[g] = ok ? 1 : 0;
  }
  s.normal = is_normal(s);
  return s;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(n_, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t g = 0; g < n_; ++g) {
    if (seen[g]) continue;
    std::set<std::size_t> cls;
    for (std::size_t x = 0; x < n_; ++x) cls.insert(conj(g, x));
    std::vector<std::size_t> v(cls.begin(), cls.end());
    for (std::size_t e : v) seen[e] = true;
    classes.push_back(std::move(v));
  }
  return classes;
}

SubgroupSet FiniteGroup::closure(std::vector<std::size_t> seeds) const {
  std::vector<std::uint8_t> in(n_, 0);
  std::vector<std::size_t> stack;
  auto push = [&](std::size_t e) {
    if (!in[e]) {
      in[e] = 1;
      stack.push_back(e);
    }
  };
  push(0);
  for (std::size_t s : seeds) push(s);
  std::vector<std::size_t> members{};
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    members.push_back(a);
    for (std::size_t b = 0; b < n_; ++b)
      if (in[b]) {
        push(mul(a, b));
        push(mul(b, a));
      }
  }
  SubgroupSet s{std::move(in), false};
  s.normal = is_normal(s);
  return s;
}

bool FiniteGroup::is_subgroup(const SubgroupSet &s) const {
  if (s.member.size() != n_ || !s.member[0]) return false;
  std::vector<std::size_t> idx = s.indices();
  for (std::size_t a : idx) {
    if (!s.contains(inv(a))) return false;
    for (std::size_t b : idx)
      if (!s.contains(mul(a, b))) return false;
  }
  return true;
}

bool FiniteGroup::is_normal(const SubgroupSet &s) const {
  for (std::size_t h = 0; h < n_; ++h) {
    if (!s.contains(h)) continue;
    for (std::size_t x = 0; x < n_; ++x)
      if (!s.contains(conj(h, x))) return false;
  }
  return true;
}

SubgroupSet FiniteGroup::make_subgroup(
    const std::vector<std::size_t> &elements) const {
  SubgroupSet s{std::vector<std::uint8_t>(n_, 0), false};
  for (std::size_t e : elements) {
    if (e >= n_) throw error("make_subgroup: index out of range");
    s.member[e] = 1;
  }
  if (!s.member[0]) s.member[0] = 1;
  if (!is_subgroup(s)) throw error("make_subgroup: not closed");
  s.normal = is_normal(s);
  return s;
}

SubgroupSet FiniteGroup::derived_subgroup() const {
  std::vector<std::size_t> comms;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) comms.push_back(commutator(a, b));
  return closure(std::move(comms));
}

std::vector<SubgroupSet> FiniteGroup::upper_central_series() const {
  std::vector<SubgroupSet> series{trivial_subgroup()};
  while (true) {
    const SubgroupSet &z = series.back();
    SubgroupSet next{std::vector<std::uint8_t>(n_, 0), true};
    for (std::size_t g = 0; g < n_; ++g) {
      bool ok = true;
      for (std::size_t x = 0; x < n_ && ok; ++x)
        if (!z.contains(commutator(g, x))) ok = false;
      next.member[g] = ok ? 1 : 0;
    }
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().size() == n_) break;
  }
  return series;
}

std::vector<SubgroupSet> FiniteGroup::lower_central_series() const {
  std::vector<SubgroupSet> series{full_subgroup()};
  while (true) {
    const SubgroupSet &g = series.back();
    std::vector<std::size_t> comms;
    for (std::size_t a : g.indices())
      for (std::size_t x = 0; x < n_; ++x) comms.push_back(commutator(a, x));
    SubgroupSet next = closure(std::move(comms));
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().size() == 1) break;
  }
  return series;
}

std::optional<int> FiniteGroup::nilpotency_class() const {
  std::vector<SubgroupSet> up = upper_central_series();
  if (up.back().size() != n_) return std::nullopt;
  return static_cast<int>(up.size()) - 1;
}

bool FiniteGroup::is_p_abelian(std::int64_t p) const {
  std::size_t d = derived_subgroup().size();
  while (d % static_cast<std::size_t>(p) == 0) d /= static_cast<std::size_t>(p);
  return d == 1;
}

SubgroupSet FiniteGroup::derived_of(const SubgroupSet &s) const {
  std::vector<std::size_t> comms;
  std::vector<std::size_t> idx = s.indices();
  for (std::size_t a : idx)
    for (std::size_t b : idx) comms.push_back(commutator(a, b));
  return closure(std::move(comms));
}

bool FiniteGroup::is_solvable() const {
  SubgroupSet s = full_subgroup();
  while (true) {
    SubgroupSet d = derived_of(s);
    if (d == s) return s.size() == 1;
    if (d.size() == 1) return true;
    s = d;
  }
}

std::vector<SubgroupSet> FiniteGroup::all_subgroups() const {
  std::set<SubgroupSet> known;
  std::vector<SubgroupSet> queue{trivial_subgroup()};
  known.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    SubgroupSet s = queue[head];
    for (std::size_t g = 1; g < n_; ++g) {
      if (s.contains(g)) continue;
      std::vector<std::size_t> seeds = s.indices();
      seeds.push_back(g);
      SubgroupSet t = closure(std::move(seeds));
      if (known.insert(t).second) queue.push_back(std::move(t));
    }
  }
  std::vector<SubgroupSet> out(known.begin(), known.end());
  std::sort(out.begin(), out.end(), [](const SubgroupSet &a, const SubgroupSet &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.member < b.member;
  });
  return out;
}

std::vector<SubgroupSet> FiniteGroup::normal_subgroups() const {
  std::vector<SubgroupSet> subs = all_subgroups();
  std::vector<SubgroupSet> out;
  for (SubgroupSet &s : subs)
    if (s.normal) out.push_back(std::move(s));
  return out;
}

FiniteGroup FiniteGroup::quotient(const SubgroupSet &nsub) const {
  if (!is_subgroup(nsub) || !is_normal(nsub))
    throw error("quotient: subgroup not normal");
  std::vector<std::size_t> rep(n_, n_);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < n_; ++g) {
    if (rep[g] != n_) continue;
    std::size_t least = g;
    std::vector<std::size_t> coset;
    for (std::size_t h : nsub.indices()) {
      std::size_t e = mul(g, h);
      coset.push_back(e);
      least = std::min(least, e);
    }
    for (std::size_t e : coset) rep[e] = least;
    reps.push_back(least);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<std::size_t> label(n_, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) label[reps[i]] = i;
  std::vector<std::vector<std::size_t>> t(reps.size(),
                                          std::vector<std::size_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      t[i][j] = label[rep[mul(reps[i], reps[j])]];
  return from_cayley(t, name_ + "/N", CheckLevel::full);
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw error("cyclic_group: order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_cayley(t, "C" + std::to_string(n),
                                  CheckLevel::none);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 1) throw error("dihedral_group: n must be >= 1");
  const std::size_t o = 2 * n;
  auto idx = [&](std::size_t flip, std::size_t rot) { return flip * n + rot; };
  std::vector<std::vector<std::size_t>> t(o, std::vector<std::size_t>(o));
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < 2; ++l)
        for (std::size_t j = 0; j < n; ++j) {
          // (s^k r^i)(s^l r^j) = s^{k+l} r^{(-1)^l i + j}
          std::size_t rot = l ? (n - i + j) % n : (i + j) % n;
          t[idx(k, i)][idx(l, j)] = idx((k + l) % 2, rot);
        }
  return FiniteGroup::from_cayley(t, "D" + std::to_string(n),
                                  CheckLevel::full);
}

FiniteGroup quaternion8() {
  // 0..7 = 1, -1, i, -i, j, -j, k, -k
  auto enc = [](int sign, int unit) { return unit * 2 + (sign < 0 ? 1 : 0); };
  // unit products: table over {1, i, j, k} with sign
  static const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int usgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2 ? -1 : 1;
      int ub = b / 2, sb = b % 2 ? -1 : 1;
      int u = umul[ua][ub];
      int s = sa * sb * usgn[ua][ub];
      t[a][b] = static_cast<std::size_t>(enc(s, u));
    }
  return FiniteGroup::from_cayley(t, "Q8", CheckLevel::full);
}

namespace {
std::vector<std::vector<std::size_t>> permutations_lex(std::size_t n,
                                                       bool even_only) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup perm_group(std::size_t n, bool even_only, const std::string &name) {
  if (n < 1 || n > 5) throw error(name + ": supported degrees are 1..5");
  std::vector<std::vector<std::size_t>> perms = permutations_lex(n, even_only);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> t(perms.size(),
                                          std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  return FiniteGroup::from_cayley(t, name, CheckLevel::full);
}
}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  return perm_group(n, false, "S" + std::to_string(n));
}

FiniteGroup alternating_group(std::size_t n) {
  return perm_group(n, true, "A" + std::to_string(n));
}

FiniteGroup elementary_abelian(std::int64_t p, std::size_t k) {
  if (k < 1) throw error("elementary_abelian: k must be >= 1");
  FiniteGroup g = cyclic_group(static_cast<std::size_t>(p));
  for (std::size_t i = 1; i < k; ++i)
    g = direct_product(g, cyclic_group(static_cast<std::size_t>(p)));
  g.rename("E" + std::to_string(p) + "^" + std::to_string(k));
  return g;
}

FiniteGroup heisenberg_group(std::int64_t p) {
  const std::size_t q = static_cast<std::size_t>(p);
  const std::size_t n = q * q * q;
  auto idx = [&](std::size_t a, std::size_t b, std::size_t c) {
    return (a * q + b) * q + c;
  };
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c)
        for (std::size_t a2 = 0; a2 < q; ++a2)
          for (std::size_t b2 = 0; b2 < q; ++b2)
            for (std::size_t c2 = 0; c2 < q; ++c2)
              t[idx(a, b, c)][idx(a2, b2, c2)] =
                  idx((a + a2) % q, (b + b2) % q, (c + c2 + a * b2) % q);
  return FiniteGroup::from_cayley(t, "Heis" + std::to_string(p),
                                  CheckLevel::spot);
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  const std::size_t n = a.order() * b.order();
  auto idx = [&](std::size_t x, std::size_t y) { return x * b.order() + y; };
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x1 = 0; x1 < a.order(); ++x1)
    for (std::size_t y1 = 0; y1 < b.order(); ++y1)
      for (std::size_t x2 = 0; x2 < a.order(); ++x2)
        for (std::size_t y2 = 0; y2 < b.order(); ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup::from_cayley(t, a.name() + "x" + b.name(),
                                  CheckLevel::none);
}

}  // namespace derring
