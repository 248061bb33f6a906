// Acceptance suite: one PASS/FAIL line per criterion, with wall time against its budget.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qnk/cli.hpp"

using namespace qnk;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget; // seconds
    std::function<std::vector<CheckResult>()> run;
    // optional filter: only these results decide the verdict
    std::function<bool(const CheckResult&)> counts = [](const CheckResult&) { return true; };
};

const std::vector<std::pair<int, int>> kSmall{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}};

Rng stream(int id) { return Rng(20240611ULL + 7919ULL * static_cast<unsigned>(id)); }

void add(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

bool property_check(const CheckResult& c) {
    const std::string& n = c.name;
    return n.rfind("theta", 0) == 0 || n.rfind("belavin", 0) == 0 || n.rfind("transpose", 0) == 0 ||
           n.rfind("shuffle", 0) == 0;
}

} // namespace

int main() {
    std::vector<Criterion> cs;

    cs.push_back({1, "QYBE2 residual < 1e-8, 20 random (u,v) per (n,k)", 10, [] {
                      std::vector<CheckResult> out;
                      Rng rng = stream(1);
                      for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}})
                          add(out, qybe_check(AlgebraParams::make(n, k), 20, rng));
                      return out;
                  },
                  [](const CheckResult& c) { return c.name == "qybe2"; }});

    cs.push_back({2, "six transformation laws and the zeta shift < 1e-9, 5 random z", 5, [] {
                      std::vector<CheckResult> out;
                      Rng rng = stream(2);
                      for (auto [n, k] : kSmall) add(out, transform_check(AlgebraParams::make(n, k), 5, rng));
                      return out;
                  }});

    cs.push_back({3, "det R / closed form - 1 < 1e-6 (n <= 4); k-independence n = 3,4,5", 20, [] {
                      std::vector<CheckResult> out;
                      Rng rng = stream(3);
                      for (auto [n, k] : kSmall) add(out, det_check(AlgebraParams::make(n, k), 5, rng));
                      for (int n : {3, 4, 5})
                          add(out, det_k_independence(n, kDefaultEta, default_tau(kDefaultEta), 5, rng));
                      return out;
                  }});

    cs.push_back({4, "nullity table over a full (1/n)Lambda cell, n <= 4, gaps >= 1e4", 30, [] {
                      std::vector<CheckResult> out;
                      Rng rng = stream(4);
                      for (auto [n, k] : kSmall) add(out, nullity_table(AlgebraParams::make(n, k), rng));
                      return out;
                  }});

    cs.push_back({5, "rank F_d(-tau) = C(n+d-1,d), kernel = relations; n = 3,4, d <= 4", 180, [] {
                      std::vector<CheckResult> out;
                      for (int n : {3, 4}) add(out, hilbert_check(AlgebraParams::make(n, 1), 4));
                      return out;
                  }});

    cs.push_back({6, "rank F_d(tau) = C(n,d) for d <= n+1, F_{n+1}(tau) = 0; n = 3,4", 120, [] {
                      std::vector<CheckResult> out;
                      for (int n : {3, 4}) add(out, dual_hilbert_check(AlgebraParams::make(n, 1), n + 1));
                      return out;
                  }});

    cs.push_back({7, "T_d rank tables, all cases, n = 3, d = 3,4", 120, [] {
                      std::vector<CheckResult> out;
                      for (int d : {3, 4}) add(out, t_rank_table(AlgebraParams::make(3, 1), d));
                      return out;
                  }});

    cs.push_back({8, "product identity < 1e-8, (a,b) in {(1,1),(1,2),(2,1),(2,2)}, n = 3", 60, [] {
                      std::vector<CheckResult> out;
                      Rng rng = stream(8);
                      for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}})
                          add(out, mult_identity_check(AlgebraParams::make(3, 1), a, b, rng));
                      return out;
                  }});

    cs.push_back({9, "Koszul lattice dims = classical values; n = 3, d = 3,4; n = 2, d <= 5", 180, [] {
                      std::vector<CheckResult> out;
                      for (int d : {3, 4}) add(out, koszul_check(AlgebraParams::make(3, 1), d));
                      for (int d = 2; d <= 5; ++d) add(out, koszul_check(AlgebraParams::make(2, 1), d));
                      return out;
                  }});

    cs.push_back({10, "Frobenius pairing ranks C(n,i), top rank 1, F_{n+1}(tau) = 0; n = 2,3", 120, [] {
                      std::vector<CheckResult> out;
                      for (int n : {2, 3}) add(out, frobenius_check(AlgebraParams::make(n, 1)));
                      return out;
                  }});

    cs.push_back({11, "tau -> 0 limits monotone and < 1e-2 at eps = 1.25e-3, n = 3", 30, [] {
                      return limit_check(3, 1, kDefaultEta, 3, {-2, -1, 0, 1, 2, 3});
                  }});

    cs.push_back({12, "property suite green in one `report all` run (n = 3), < 10 min", 600, [] {
                      Config cfg; // defaults: n = 3, k = 1, d_max = 4, every check
                      return run(cfg).results;
                  },
                  property_check});

    int failed = 0;
    for (const auto& c : cs) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckResult> rs;
        std::string error;
        try {
            rs = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        int considered = 0, bad = 0;
        double worst = 0;
        std::vector<const CheckResult*> offenders;
        for (const auto& r : rs) {
            if (!c.counts(r)) continue;
            ++considered;
            if (std::isfinite(r.residual)) worst = std::max(worst, r.residual);
            if (r.status != Status::Pass) {
                ++bad;
                offenders.push_back(&r);
            }
        }
        const bool ok = error.empty() && considered > 0 && bad == 0 && secs <= c.budget;
        if (!ok) ++failed;
        std::printf("criterion %2d %s  %-78s checks=%d not_passed=%d max_residual=%.3g time=%.1fs/%.0fs\n", c.id,
                    ok ? "PASS" : "FAIL", c.title.c_str(), considered, bad, worst, secs, c.budget);
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        if (secs > c.budget) std::printf("    over the time budget\n");
        for (size_t i = 0; i < offenders.size() && i < 8; ++i)
            std::printf("    %s %s %s residual=%.3g\n", to_string(offenders[i]->status), offenders[i]->name.c_str(),
                        offenders[i]->params.dump().c_str(), offenders[i]->residual);
        if (offenders.size() > 8) std::printf("    ... %zu more\n", offenders.size() - 8);
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu criteria, %zu pass, %d fail\n", cs.size(), cs.size() - failed, failed);
    return failed == 0 ? 0 : 1;
}
