// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "sqdiff/sqdiff.hpp"

namespace {

using namespace sqdiff;
using namespace sqdiff::analytic;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Check()>& body) {
  const auto t0 = Clock::now();
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > limit_s) c.require(false, "runtime " + std::to_string(secs) + " s over " + std::to_string(limit_s) + " s");
  std::printf("%s %d %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs,
              c.detail.empty() ? "" : ": ", c.detail.c_str());
  std::fflush(stdout);
  failures += !c.ok;
}

std::string run_cli(const std::vector<std::string>& args, const std::string& input, int& code) {
  std::istringstream in(input);
  std::ostringstream out, err;
  code = cli::run(args, in, out, err);
  return out.str();
}

bool dpll_agrees(std::size_t k, std::uint64_t n, SearchStatus bt) {
  const auto cnf = encode_cnf(k, n);
  const auto r = dpll_solve(parse_dimacs(to_dimacs(cnf)));
  if (r.status == SatStatus::Sat) {
    if (!verify_colouring(decode_model(r.model, k, n)).clean()) return false;
    return bt == SearchStatus::Colourable;
  }
  return r.status == SatStatus::Unsat && bt == SearchStatus::NotColourable;
}

IntegerSet congruence(std::int64_t residue, std::int64_t modulus, std::int64_t n) {
  IntegerSet s;
  for (std::int64_t x = 1; x <= n; ++x)
    if (x % modulus == residue) s.push_back(x);
  return s;
}

}  // namespace

int main() {
  criterion(1, "construction validity k=2..6", 10, [] {
    Check c;
    for (int k = 2; k <= 6; ++k) {
      int code = 0;
      const auto text = run_cli({"construct", "--k", std::to_string(k)}, "", code);
      c.require(code == 0, "construct exit code");
      const auto verdict = run_cli({"verify"}, text, code);
      c.require(code == 0 && verdict == "clean\n", "k=" + std::to_string(k) + " verdict " + verdict);
      const auto col = colouring_from_string(text);
      c.require(col.n() == tower2(static_cast<unsigned>(k - 1)), "k=" + std::to_string(k) + " length");
      if (k <= 4) {
        const auto explicit_cols = col.to_explicit();
        c.require(!oracle::least_mono(explicit_cols).has_value(),
                  "brute force disagrees at k=" + std::to_string(k));
      }
    }
    return c;
  });

  criterion(2, "exact S(1) = 1", 1, [] {
    Check c;
    c.require(feasible(1, 1).status == SearchStatus::Colourable, "feasible(1,1)");
    c.require(feasible(1, 2).status == SearchStatus::NotColourable, "feasible(1,2)");
    return c;
  });

  criterion(3, "S(2) exact with backtracking/DPLL agreement", 600, [] {
    Check c;
    Budget b;
    b.wall = std::chrono::minutes(10);
    const auto s = compute_S(2, b);
    c.require(s.value >= 4, "value below 4");
    for (const auto& p : s.probes)
      c.require(dpll_agrees(2, p.n, p.status), "DPLL disagrees at probed n=" + std::to_string(p.n));
    if (s.exact) {
      c.require(feasible(2, s.value + 1).status == SearchStatus::NotColourable, "refutation at S(2)+1");
      c.require(s.witness && verify_colouring(*s.witness).clean(), "witness at S(2)");
      std::printf("  S(2) = %llu exact\n", static_cast<unsigned long long>(s.value));
    } else {
      std::printf("  S(2) >= %llu (budget exhausted)\n", static_cast<unsigned long long>(s.value));
    }
    for (std::uint64_t n = 1; n <= 40; ++n)
      c.require(dpll_agrees(2, n, feasible(2, n).status), "DPLL disagrees at n=" + std::to_string(n));
    return c;
  });

  criterion(4, "counting identities", 30, [] {
    Check c;
    for (std::uint64_t n = 1; n <= 500; ++n) {
      std::uint64_t formula = 0;
      for (std::uint64_t z = 1; z * z <= n - 1; ++z) formula += n - z * z;
      c.require(enumerate_solutions(n).size() == formula, "|enumerate_solutions(" + std::to_string(n) + ")|");
    }
    std::mt19937_64 rng(2024);
    for (std::uint64_t n : {50u, 100u, 200u}) {
      const auto total = enumerate_solutions(n).size();
      for (int rep = 0; rep < 100; ++rep) {
        const auto cols = oracle::random_colouring(rng, n, 3);
        const auto counts = count_per_class(Colouring::explicit_form(3, cols));
        std::uint64_t mono = 0;
        for (auto v : counts.per_class) mono += v;
        c.require(counts.total == total && mono + counts.cross_class == total,
                  "class counts inconsistent at n=" + std::to_string(n));
        std::vector<std::uint64_t> expect(3, 0);
        for (const auto& t : enumerate_solutions(n))
          if (cols[t.x - 1] == cols[t.y - 1] && cols[t.y - 1] == cols[t.z - 1]) ++expect[cols[t.x - 1]];
        c.require(expect == counts.per_class, "per-class counts at n=" + std::to_string(n));
      }
    }
    return c;
  });

  criterion(5, "extremal oracle agreement", 120, [] {
    Check c;
    for (std::uint64_t n = 1; n <= 40; ++n) {
      const auto a = fs_extremal(n), b = fs_extremal_split(n);
      c.require(a.optimal && a.size == b.size, "routes disagree at n=" + std::to_string(n));
      c.require(is_square_difference_free(a.witness) && is_square_difference_free(b.witness),
                "witness at n=" + std::to_string(n));
    }
    c.require(fs_extremal(5).size == 2, "fs_extremal(5)");
    c.require(oracle::extremal_by_enumeration(5) == 2, "enumeration at 5");
    return c;
  });

  criterion(6, "Weyl sum trivial bound and envelope C=10", 60, [] {
    Check c;
    for (std::uint64_t np : {1000u, 10000u}) {
      const double trivial = static_cast<double>(isqrt(np));
      std::uint64_t violations = 0;
      double worst = 0;
      for (std::int64_t j = 0; j < 4096; ++j) {
        const GridAngle g{j, 4096};
        const double mag = std::abs(weyl_sum(g, np));
        c.require(mag <= trivial + 1e-9 * std::sqrt(static_cast<double>(np)), "trivial bound");
        const auto q = diophantine_approx(g, isqrt(np)).q;
        const double ratio = mag / weyl_envelope(np, q);
        worst = std::max(worst, ratio);
        if (ratio > 10.0) {
          ++violations;
          std::printf("  violation N'=%llu theta=%lld/4096 q=%llu ratio=%.6f\n",
                      static_cast<unsigned long long>(np), static_cast<long long>(j),
                      static_cast<unsigned long long>(q), ratio);
        }
      }
      std::printf("  N'=%llu envelope violations %llu/4096, worst |T|/envelope %.6f\n",
                  static_cast<unsigned long long>(np), static_cast<unsigned long long>(violations), worst);
      c.require(violations == 0, "envelope violations at N'=" + std::to_string(np));
    }
    return c;
  });

  criterion(7, "Parseval exactness", 60, [] {
    Check c;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0, 1);
    double worst = 0;
    for (int rep = 0; rep < 1000; ++rep) {
      const std::uint64_t n = 1 + rng() % 2048;
      const double p = u(rng);
      IntegerSet a;
      for (std::uint64_t x = 1; x <= n; ++x)
        if (u(rng) < p) a.push_back(static_cast<std::int64_t>(x));
      const auto gap = parseval_check(BalancedIndicator(a, n), next_pow2(2 * n)).relative_gap();
      worst = std::max(worst, gap);
      c.require(gap <= 1e-9, "gap " + std::to_string(gap) + " at N=" + std::to_string(n));
    }
    std::printf("  worst relative gap %.3e\n", worst);
    return c;
  });

  criterion(8, "increment trichotomy on structured inputs", 30, [] {
    Check c;
    const auto many = increment_search(interval_set(1, 100), 100, 9, 1);
    const auto* m = std::get_if<ManySolutions>(&many);
    c.require(m && m->count == 286 && m->threshold == 150.0, "[100], N'=9");
    const auto inc = increment_search(congruence(1, 3, 3000), 3000, 8, 3);
    const auto* i = std::get_if<Increment>(&inc);
    c.require(i && i->q == 3 && i->new_density == 1.0, "1 mod 3 in [3000]");
    for (std::int64_t n : {1, 100, 3000}) {
      const auto full = increment_search(interval_set(1, n), static_cast<std::uint64_t>(n),
                                         static_cast<std::uint64_t>(n), 1);
      c.require(std::holds_alternative<FurtherTooLarge>(full), "[N], N'=N at N=" + std::to_string(n));
    }
    return c;
  });

  criterion(9, "iteration trace structure", 120, [] {
    Check c;
    for (unsigned k = 2; k <= 4; ++k) {
      const auto col = construct_lower_bound(k);
      const auto trace = iteration_trace(col);
      c.require(trace.stages.size() <= k, "more than k stages at k=" + std::to_string(k));
      for (std::size_t s = 0; s < trace.stages.size(); ++s) {
        const auto& st = trace.stages[s];
        c.require(st.alpha > 0 && st.alpha <= 1, "alpha outside (0,1]");
        if (s) {
          const auto& prev = trace.stages[s - 1].J;
          c.require(st.J.size() == prev.size() + 1 && std::equal(prev.begin(), prev.end(), st.J.begin()),
                    "J not strictly growing");
        }
      }
      const auto text = colouring_to_string(col);
      int c1 = 0, c2 = 0;
      const auto a = run_cli({"trace"}, text, c1);
      const auto b = run_cli({"--threads", "1", "--seed", "0", "trace"}, text, c2);
      c.require(c1 == 0 && c2 == 0 && a == b && !a.empty(), "trace output differs between runs");
      std::printf("  k=%u stages=%zu terminal=%s\n", k, trace.stages.size(), trace.terminal.c_str());
    }
    return c;
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
