// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Criteria 1 and 2 carry wall-clock budgets enforced here.
#include <chrono>
#include <cstdio>
#include <string>

#include "filtcat/api.hpp"
#include "filtcat/verify.hpp"

using namespace filtcat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const char* label, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d [%s]: %s%s%s\n", n, label, ok ? "pass" : "FAIL",
                detail.empty() ? "" : " ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string suite_detail(const VerifyReport& rep, double secs) {
    std::string d = std::to_string(rep.passed) + "/" + std::to_string(rep.total) +
                    " trials, " + std::to_string(secs).substr(0, 5) + "s";
    if (!rep.failures.empty())
        d += "; first failure: trial " + std::to_string(rep.failures[0].trial) + ": " +
             rep.failures[0].message;
    return d;
}

VerifyReport run_suite(const char* suite, size_t trials, size_t max_poset = 6,
                       size_t max_dim = 3, size_t max_bound = 3) {
    VerifyConfig cfg;
    cfg.suite = suite;
    cfg.trials = trials;
    cfg.seed = 42;
    cfg.max_poset = max_poset;
    cfg.max_dim = max_dim;
    cfg.max_bound = max_bound;
    return run_verify(cfg);
}

}  // namespace

int main() {
    std::string shipped = std::string(FILTCAT_REPO_DIR) + "/instances/coim_vs_im.json";

    // 1. Shipped worked example: image keeps the target's dims, coimage the
    // source's, the morphism is mono and epi yet not strict, and the
    // comparison map is injective with zero filtered cokernel. Under 1 s.
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        try {
            CommandRequest req;
            req.command = "op";
            req.in_path = shipped;
            req.name = "f";
            req.kind = "im";
            ok = ok && run_command(req).text.find("dims 2,3,4,5,5\n") != std::string::npos;
            req.kind = "coim";
            ok = ok && run_command(req).text.find("dims 1,2,3,4,5\n") != std::string::npos;
            VerifyReport rep = run_suite("coim-vs-im", 1);
            ok = ok && rep.ok();
            double secs = seconds_since(t0);
            detail = std::to_string(secs).substr(0, 5) + "s";
            if (secs >= 1.0) {
                ok = false;
                detail += " (budget 1s exceeded)";
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        report(1, "worked example", ok, detail);
    }

    // 2. Filtered kernel/cokernel/image/coimage against the factorization
    // oracle on 200 random morphisms, posets up to 8 elements, dims up to 4.
    // Under 60 s.
    {
        auto t0 = Clock::now();
        VerifyReport rep = run_suite("filtops-oracle", 200, 8, 4);
        double secs = seconds_since(t0);
        bool ok = rep.ok() && secs < 60.0;
        report(2, "filtered ops vs oracle", ok, suite_detail(rep, secs));
    }

    // 3. Base change of strict epis and co-base change of strict monos,
    // 200 trials of each kind.
    {
        auto t0 = Clock::now();
        VerifyReport rep = run_suite("quasiab", 200);
        report(3, "pullback/pushout stability", rep.ok(),
               suite_detail(rep, seconds_since(t0)));
    }

    // 4. Termwise resolutions of random complexes: augmentation is a
    // quasi-isomorphism, the reflection of the total complex matches, and
    // the two-term resolution of a filtered object is strictly exact.
    {
        auto t0 = Clock::now();
        VerifyReport rep = run_suite("rees-resolution", 200);
        report(4, "resolution round trips", rep.ok(),
               suite_detail(rep, seconds_since(t0)));
    }

    // 5. The two-term presentation category recovers the functor category.
    {
        auto t0 = Clock::now();
        VerifyReport rep = run_suite("heart", 100);
        report(5, "heart equivalence", rep.ok(), suite_detail(rep, seconds_since(t0)));
    }

    // 6. Splitting identities of the Rees construction as matrix equalities.
    {
        auto t0 = Clock::now();
        VerifyReport rep = run_suite("rees-splittings", 100);
        report(6, "rees splittings", rep.ok(), suite_detail(rep, seconds_since(t0)));
    }

    // 7. Reflection adjunction: transposes are mutually inverse bijections.
    {
        auto t0 = Clock::now();
        VerifyReport rep = run_suite("adjunction", 100);
        report(7, "reflection adjunction", rep.ok(),
               suite_detail(rep, seconds_since(t0)));
    }

    // 8. Reflection commutes with the convolution tensor on stabilized
    // inputs, window bounds up to 3.
    {
        auto t0 = Clock::now();
        VerifyReport rep = run_suite("kappa-tensor", 100);
        report(8, "reflection vs tensor", rep.ok(),
               suite_detail(rep, seconds_since(t0)));
    }

    // 9. Polynomial filtration squared: level dims equal the triangle
    // numbers, checked for every window bound up to 4.
    {
        auto t0 = Clock::now();
        VerifyReport rep = run_suite("tensor-dims", 0, 6, 3, 4);
        bool ok = rep.ok() && rep.total == 5;
        report(9, "tensor dimension oracle", ok, suite_detail(rep, seconds_since(t0)));
    }

    // 10. Module-level resolution round trips over the truncated polynomial
    // ring, with the augmentation linear in every trial.
    {
        auto t0 = Clock::now();
        VerifyReport rep = run_suite("module-resolution", 100, 6, 2);
        report(10, "module resolutions", rep.ok(),
               suite_detail(rep, seconds_since(t0)));
    }

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
