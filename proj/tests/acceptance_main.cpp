// Acceptance suite: runs every acceptance criterion at zero tolerance and
// prints one PASS/FAIL line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "derring/scenario.hpp"

using namespace derring;

namespace {

int failures = 0;

void criterion(int n, const std::string &what,
               const std::function<void()> &body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string verdict = "PASS";
  std::string note;
  try {
    body();
  } catch (const std::exception &e) {
    verdict = "FAIL";
    note = e.what();
    ++failures;
  }
  auto t1 = std::chrono::steady_clock::now();
  double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() /
      1000.0;
  std::printf("criterion %2d: %s  (%.1fs)  %s%s%s\n", n, verdict.c_str(), secs,
              what.c_str(), note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
}

void require(bool ok, const std::string &msg) {
  if (!ok) throw error(msg);
}

std::uint64_t splitmix(std::uint64_t &x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Coeffs random_element(const FiniteRing &r, std::uint64_t &state) {
  Coeffs v(r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i)
    v[i] = static_cast<std::int64_t>(
        splitmix(state) % static_cast<std::uint64_t>(r.ambient().orders[i]));
  return v;
}

void require_no_fail(const Report &rep, const std::string &label) {
  require(rep.count("FAIL") == 0, label + ": FAIL instances present");
  require(rep.count("ERROR") == 0, label + ": ERROR instances present");
  require(rep.count("PASS") > 0, label + ": nothing ran");
}

}  // namespace

int main() {
  const std::uint64_t seed = 20240811;

  criterion(1, "oracle equivalence of the kernel solver (< 60 s)", [&] {
    auto t0 = std::chrono::steady_clock::now();
    ScenarioConfig cfg;
    cfg.check = "ORACLE";
    cfg.seed = seed;
    Report rep = run_scenario(cfg);
    require_no_fail(rep, "ORACLE");
    require(rep.count("SKIP") == 0, "ORACLE: unexpected skip");
    auto t1 = std::chrono::steady_clock::now();
    require(std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count() <
                60,
            "oracle suite exceeded one minute");
  });

  criterion(2, "T2: abelian |G| <= 16 times Z/m (m <= 30), coprime filtered",
            [&] {
              auto t0 = std::chrono::steady_clock::now();
              ScenarioConfig cfg;
              cfg.check = "T2";
              cfg.seed = seed;
              Report rep = run_scenario(cfg);
              require_no_fail(rep, "T2");
              require(rep.count("SKIP") > 0,
                      "T2: the modular pairs should be skipped");
              auto t1 = std::chrono::steady_clock::now();
              require(std::chrono::duration_cast<std::chrono::seconds>(t1 - t0)
                              .count() < 300,
                      "T2 suite exceeded five minutes");
            });

  criterion(3, "C14: inner witnesses and exact averaging on S3 D4 Q8 D5", [&] {
    ScenarioConfig cfg;
    cfg.check = "C14";
    cfg.seed = seed;
    Report rep = run_scenario(cfg);
    require_no_fail(rep, "C14");
    GroupRing gr = GroupRing::build(make_zmod(5), symmetric_group(3));
    require(der_r(gr).cardinality() == 125,
            "der_R(Z/5[S3]) cardinality is not 125");
    // GGC4 oracle for the same number: |Z(R)[G]| / |Z(Z(R)[G])| = 5^6 / 5^3
    mpz_class expect =
        gr.central_coeff_span().cardinality() /
        gr.center_of_central_coeff().cardinality();
    require(expect == 125, "GGC4 quotient is not 125");
  });

  criterion(4, "modular counterpoint: der_R(Z/2[C2]) has 4 elements, none "
               "nonzero inner",
            [&] {
              GroupRing gr = GroupRing::build(make_zmod(2), cyclic_group(2));
              DerivationSpace d = der_r(gr);
              require(d.cardinality() == 4, "cardinality is not 4");
              std::size_t nonzero_inner = 0, nonzero = 0;
              // walk the whole 4-element space
              std::vector<Derivation> all;
              for (const IntVec &row : oracle_der_r(gr, 24.0)) {
                Derivation dd = d.expand(row);
                if (dd.is_zero()) continue;
                ++nonzero;
                if (inner_witness(gr.carrier(), dd)) ++nonzero_inner;
              }
              require(nonzero == 3, "expected 3 nonzero R-derivations");
              require(nonzero_inner == 0, "a nonzero derivation was inner");
            });

  criterion(5, "GGC4: both constructions agree; abelian iff G' central", [&] {
    ScenarioConfig cfg;
    cfg.check = "GGC4";
    cfg.seed = seed;
    Report rep = run_scenario(cfg);
    require_no_fail(rep, "GGC4");
    struct Want {
      const char *g;
      bool abelian;
    } wants[] = {{"S3", false}, {"D4", true}, {"Q8", true}};
    for (const auto &w : wants) {
      GroupRing gr = GroupRing::build(make_zmod(2), parse_group(w.g));
      InnerDerLie ider = inner_der_lie(gr);
      bool abelian = true;
      const FiniteLieRing &l = ider.via_quotient.lie;
      for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j)
          for (std::int64_t c : l.table(i, j))
            if (c != 0) abelian = false;
      require(abelian == w.abelian,
              std::string(w.g) + ": IDer abelian mismatch");
    }
  });

  criterion(6, "P21 verdicts: F2[Q8] F2[D4] nilpotent; F3[S3] F2[S3] "
               "solvable; F5[S3] not solvable",
            [&] {
              struct Want {
                std::int64_t p;
                const char *g;
                bool nilpotent, solvable;
              } wants[] = {{2, "Q8", true, true},
                           {2, "D4", true, true},
                           {3, "S3", false, true},
                           {2, "S3", false, true},
                           {5, "S3", false, false}};
              for (const auto &w : wants) {
                GroupRing gr =
                    GroupRing::build(make_zmod(w.p), parse_group(w.g));
                InnerDerLie ider = inner_der_lie(gr);
                bool nil =
                    nilpotency_class(ider.via_quotient.lie).has_value();
                bool solv =
                    solvable_length(ider.via_quotient.lie).has_value();
                require(nil == w.nilpotent,
                        std::string("F") + std::to_string(w.p) + "[" + w.g +
                            "]: nilpotency verdict mismatch");
                require(solv == w.solvable,
                        std::string("F") + std::to_string(w.p) + "[" + w.g +
                            "]: solvability verdict mismatch");
                // independent dense bracket-closure oracle on the first term
                const FiniteLieRing &l = ider.via_quotient.lie;
                if (l.cardinality() <= 64) {
                  std::set<Coeffs> everything;
                  std::vector<Coeffs> all;
                  std::size_t card =
                      static_cast<std::size_t>(l.cardinality().get_ui());
                  for (std::size_t idx = 0; idx < card; ++idx) {
                    Coeffs v(l.rank());
                    std::size_t t = idx;
                    for (std::size_t i = 0; i < l.rank(); ++i) {
                      v[i] = static_cast<std::int64_t>(
                          t % static_cast<std::size_t>(l.ambient().orders[i]));
                      t /= static_cast<std::size_t>(l.ambient().orders[i]);
                    }
                    all.push_back(v);
                  }
                  std::set<Coeffs> brackets;
                  brackets.insert(l.zero());
                  for (const Coeffs &a : all)
                    for (const Coeffs &b : all) brackets.insert(l.bracket(a, b));
                  bool grew = true;
                  while (grew) {
                    grew = false;
                    std::vector<Coeffs> cur(brackets.begin(), brackets.end());
                    for (const Coeffs &a : cur)
                      for (const Coeffs &b : cur)
                        if (brackets.insert(l.add(a, b)).second) grew = true;
                  }
                  LieSeries lcs = lower_central_series(l);
                  if (lcs.terms.size() > 1)
                    require(brackets.size() == lcs.terms[1].cardinality(),
                            "dense closure disagrees with gamma_2");
                }
              }
            });

  criterion(7, "P28/L13 on Z/3[Q8] and Z/3[D4]: stability and the central "
               "augmentation bound",
            [&] {
              ScenarioConfig cfg;
              cfg.check = "P28";
              cfg.rings = {"Zmod(3)"};
              cfg.groups = {"Q8", "D4"};
              cfg.seed = seed;
              Report rep = run_scenario(cfg);
              require_no_fail(rep, "P28");
              require(rep.count("SKIP") == 0, "P28: unexpected skip");
              ScenarioConfig l13;
              l13.check = "L13";
              l13.rings = {"Zmod(3)"};
              l13.groups = {"Q8", "D4"};
              l13.seed = seed;
              Report rep13 = run_scenario(l13);
              require_no_fail(rep13, "L13");
              require(rep13.count("SKIP") == 0, "L13: unexpected skip");
            });

  criterion(8, "property suites, 500 seeded samples each", [&] {
    std::uint64_t state = seed;
    GroupRing g53 = GroupRing::build(make_zmod(5), symmetric_group(3));
    const FiniteRing &b53 = g53.carrier();
    FiniteRing m26 = make_matrix_ring(make_zmod(6), 2);

    // Leibniz holds for every constructed derivation
    for (int i = 0; i < 500; ++i) {
      const FiniteRing &b = (i % 2 == 0) ? b53 : m26;
      Coeffs a = random_element(b, state);
      Derivation d = Derivation::inner(b, a);
      require(is_derivation(b, d.images()), "Leibniz violated by inner(a)");
    }

    // bracket identity inner([a,b]) == [inner(a), inner(b)]
    for (int i = 0; i < 500; ++i) {
      const FiniteRing &b = (i % 2 == 0) ? b53 : m26;
      Coeffs x = random_element(b, state), y = random_element(b, state);
      require(bracket(Derivation::inner(b, x), Derivation::inner(b, y)) ==
                  Derivation::inner(b, b.commutator(x, y)),
              "bracket identity violated");
    }

    // L19 coefficient vanishing under the hypothesis
    for (int i = 0; i < 500; ++i) {
      Coeffs a = random_element(b53, state);
      Derivation d = Derivation::inner(b53, a);
      std::size_t gi = splitmix(state) % g53.group().order();
      require(coefficient_vanishing(g53, d, gi),
              "L19 coefficient vanishing violated");
    }

    // L25 under its precondition, rejection sampled
    {
      std::size_t accepted = 0, attempts = 0;
      while (accepted < 500 && attempts < 200000) {
        ++attempts;
        Coeffs x = random_element(m26, state), y = random_element(m26, state);
        Coeffs pre = m26.commutator(m26.commutator(x, y), x);
        if (!m26.element(pre).is_zero()) continue;
        ++accepted;
        require(commutator_power_identity(
                    m26, x, y, 2 + splitmix(state) % 5),
                "L25 identity violated");
      }
      require(accepted == 500, "L25 sampling starved");
    }

    // P11(i) / L8(iii): delta(g) lands in Z(R)[G] for R-derivations
    {
      DerivationSpace space = der_r(g53);
      std::vector<Derivation> gens = space.generators();
      Submodule zrg = g53.central_coeff_span();
      for (int i = 0; i < 500; ++i) {
        // random member of the space
        Derivation d = Derivation::zero(b53);
        for (const Derivation &gen : gens) {
          std::int64_t c = static_cast<std::int64_t>(splitmix(state) % 5);
          Derivation scaled = gen;
          for (std::int64_t k = 1; k < c; ++k) scaled = scaled + gen;
          if (c > 0) d = d + scaled;
        }
        std::size_t gi = splitmix(state) % g53.group().order();
        require(zrg.contains(to_ivec(d.apply(g53.basis_element(gi)))),
                "P11(i) membership violated");
        require(space.contains(d), "space not closed under combinations");
      }
    }

    // solder reports clean on Z/n, n <= 8
    for (std::int64_t n = 2; n <= 8; ++n) {
      FiniteRing r = make_zmod(n);
      for (const Solder &h : enumerate_solders(r, 64))
        require(check_solder_properties(r, h, 64).clean(),
                "solder report not clean on Z/" + std::to_string(n));
    }
  });

  criterion(9, "T5 scan: nilpotent direction clean; char-2 discrepancy "
               "flagged deterministically",
            [&] {
              ScenarioConfig cfg;
              cfg.check = "T5SCAN";
              cfg.seed = seed;
              Report rep = run_scenario(cfg);
              require(rep.count("FAIL") == 0, "T5 scan has FAILs");
              require(rep.count("ERROR") == 0, "T5 scan has ERRORs");
              std::size_t flags = 0;
              for (const Instance &i : rep.instances) {
                if (i.verdict == "FLAG") {
                  ++flags;
                  require(i.ring == "Mat(2,Zmod(2))",
                          "unexpected flagged carrier " + i.ring);
                }
              }
              require(flags == 1, "expected exactly one flagged carrier");
            });

  criterion(10, "determinism: two scans, byte-identical JSON sans timestamp "
                "(each < 15 min)",
            [&] {
              auto t0 = std::chrono::steady_clock::now();
              Caps caps;
              Report a = run_scan(seed, caps);
              auto t1 = std::chrono::steady_clock::now();
              require(std::chrono::duration_cast<std::chrono::seconds>(t1 - t0)
                              .count() < 900,
                      "scan exceeded 15 minutes");
              Report b = run_scan(seed, caps);
              nlohmann::json ja = a.to_json(true), jb = b.to_json(true);
              ja.erase("timestamp");
              jb.erase("timestamp");
              require(ja.dump() == jb.dump(),
                      "scan reports differ beyond the timestamp");
              require(a.count("FAIL") == 0 && a.count("ERROR") == 0,
                      "scan contains failures");
            });

  std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria PASS"
                                    : "ACCEPTANCE: failures present");
  return failures == 0 ? 0 : 1;
}
