// Acceptance gate: one line per criterion, "criterion N: PASS|FAIL <detail>".
// Usage: acceptance [--criterion N]...   (default: all)
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wiener/claims.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"

using namespace wiener;

namespace {

constexpr double kTolerance = 1e-8;
constexpr int kGraphMax = 7;
constexpr int kTreeMax = 17;

struct Tally {
  int runs = 0;
  int failed = 0;
  int inconclusive = 0;
  std::string first_problem;

  void add(const ClaimReport& r) {
    ++runs;
    if (r.verdict == Verdict::pass) return;
    if (r.verdict == Verdict::fail) ++failed;
    if (r.verdict == Verdict::inconclusive_budget) ++inconclusive;
    if (first_problem.empty()) {
      std::ostringstream os;
      os << r.claim_id;
      for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
      os << ' ' << to_string(r.verdict);
      if (!r.counterexamples.empty()) os << " [" << r.counterexamples.front().subject << ": " << r.counterexamples.front().detail << ']';
      first_problem = os.str();
    }
  }
  void require(bool ok, const std::string& what) {
    ++runs;
    if (ok) return;
    ++failed;
    if (first_problem.empty()) first_problem = what;
  }
  bool ok() const { return failed == 0 && inconclusive == 0; }
  std::string summary() const {
    std::string s = std::to_string(runs) + " checks, " + std::to_string(failed) + " failed";
    if (inconclusive) s += ", " + std::to_string(inconclusive) + " inconclusive";
    if (!first_problem.empty()) s += "; first: " + first_problem;
    return s;
  }
};

const ClaimOptions kOpt{kTolerance, 1, false};

Tally c1() {
  Tally t;
  for (int n = 3; n <= kGraphMax; ++n) t.add(verify_max_modulus(n, kOpt));
  return t;
}

Tally c2() {
  Tally t;
  for (int n = 3; n <= kGraphMax; ++n) t.add(verify_min_modulus(n, kOpt));
  return t;
}

Tally c3() {
  Tally t;
  for (int n = 3; n <= 14; ++n) t.add(verify_tree_ratio_bounds(n, kOpt));
  for (int n = 5; n <= kTreeMax; ++n) t.add(verify_tree_root_bound(n, kOpt));
  std::uint64_t count = 0;
  enumerate_trees(kTreeMax, [&](const Graph&) { ++count; });
  t.require(count == 48629, "free trees of order 17: " + std::to_string(count));
  return t;
}

Tally c4() {
  Tally t;
  for (int n = 3; n <= kGraphMax; ++n) t.add(verify_ratio_lower(n, kOpt));
  return t;
}

Tally c5() {
  Tally t;
  for (int n = 6; n <= 1000; ++n) t.add(verify_tn_interval(n, kOpt));
  for (int n = 5; n <= kTreeMax; ++n) t.add(verify_tn_extremal(n, kOpt));
  return t;
}

Tally c6() {
  Tally t;
  for (int n = 3; n <= 100; ++n) t.add(verify_path_annulus(n, kOpt));
  return t;
}

Tally c7() {
  Tally t;
  for (std::int64_t a = 1; a <= 50; ++a) {
    for (std::int64_t b = 1; b <= 50; ++b) t.add(verify_density(a, b, kOpt));
  }
  // r = 1/2, 1, 2, 5
  const std::pair<std::int64_t, std::int64_t> ratios[] = {{1, 2}, {1, 1}, {2, 1}, {5, 1}};
  for (auto [a, b] : ratios) t.add(verify_tree_density_limit(a, b, 1000, kOpt));
  return t;
}

Tally c8() {
  Tally t;
  for (std::int64_t n = 4; n <= 200; ++n) t.add(verify_double_star_discriminant(n, kOpt));
  return t;
}

Tally c9() {
  Tally t;
  using Clock = std::chrono::steady_clock;
  const std::pair<Asymptotic, std::int64_t> runs[] = {
      {Asymptotic::broom_imag, 1000000}, {Asymptotic::broom_real, 1000000}, {Asymptotic::g_n_imag, 10000}};
  for (auto [which, n] : runs) {
    const auto start = Clock::now();
    t.add(verify_broom_asymptotics(which, n, kOpt));
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    t.require(secs <= 1.0, std::string(to_string(which)) + " took " + std::to_string(secs) + " s");
  }
  return t;
}

Tally c10() {
  Tally t;
  for (int n = 2; n <= 6; ++n) t.add(find_purely_imaginary(InstanceClass::graphs, n, kOpt));
  for (int n = 3; n <= 12; ++n) t.add(find_purely_imaginary(InstanceClass::trees, n, kOpt));
  return t;
}

Tally c11() {
  Tally t;
  for (int n = 6; n <= kTreeMax; ++n) t.add(verify_extremal_real(n, InstanceClass::trees, kOpt));
  for (int n = 3; n <= 5; ++n) t.add(verify_extremal_real(n, InstanceClass::graphs, kOpt));
  return t;
}

Tally c12() {
  Tally t;
  t.add(verify_leaf_augmentation(200, 3, 15, 3, kOpt));
  return t;
}

Tally c13() {
  Tally t;
  for (int n = 2; n <= kGraphMax; ++n) t.add(verify_properties(InstanceClass::graphs, n, kOpt));
  for (int n = 2; n <= kTreeMax; ++n) t.add(verify_properties(InstanceClass::trees, n, kOpt));
  return t;
}

const std::vector<std::function<Tally()>> kCriteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const int n = std::atoi(argv[++i]);
      if (n < 1 || n > static_cast<int>(kCriteria.size())) {
        std::cerr << "no criterion " << argv[i] << '\n';
        return 2;
      }
      selected.push_back(n);
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (selected.empty()) {
    for (int n = 1; n <= static_cast<int>(kCriteria.size()); ++n) selected.push_back(n);
  }

  bool all_ok = true;
  for (int n : selected) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = kCriteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      t.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << n << ": " << (t.ok() ? "PASS" : "FAIL") << " (" << t.summary() << "; "
              << secs << " s)" << std::endl;
    all_ok = all_ok && t.ok();
  }
  return all_ok ? 0 : 1;
}
