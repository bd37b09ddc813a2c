#pragma once

#include "circpat/enumerate.hpp"
#include "circpat/word.hpp"
#include "circpat/zseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circpat {

enum class VerifyStatus { Pass, Fail, NotApplicable };

const char* status_name(VerifyStatus s);

// Structured outcome of one identity check. A failing report always carries
// the first diverging coefficient; passing and not-applicable ones never do.
struct VerificationReport {
    std::string identity;
    std::optional<Word> pattern;
    int size_checked = 0;  // n_max for exhaustive checks, order for series ones
    VerifyStatus status = VerifyStatus::Pass;
    std::optional<SeriesDivergence> first_divergence;
    std::string detail;
    double wall_seconds = 0.0;
};

// Exact agreement of the transfer C = 1 + ln P with the enumeration oracle.
// Orbits without a 1-initial member report not-applicable, with the raw
// comparison outcome noted in the detail text.
VerificationReport verify_theorem_main(const Word& sigma, int n_max,
                                       const EnumOptions& opts = {});

// D' = D^2 - D + 1 for the 123 series at u = 0, as an exact series identity.
VerificationReport verify_conjecture_part1(int order);

// C' = exp(C - C(0,0) - z^2/2) for the 132 series at u = 0, exact.
VerificationReport verify_conjecture_part2(int order);

// The circular distribution is identical across the symmetry orbit.
VerificationReport verify_symmetries(const Word& sigma, int n_max,
                                     const EnumOptions& opts = {});

// Round trips of the factorization bijection on all of S_n, plus weight
// preservation for 1-initial patterns. For a control pattern that does not
// start with 1 the check passes by exhibiting a counterexample.
VerificationReport verify_bijection(const Word& sigma, int n_max);

// Closed forms against their series routes: the 1234 quotient form at u=0
// (exact), the 123 tanh form at sample points (within tol), the
// non-overlapping integral form for 132 (exact to n_max), and the u=1
// degenerations of both Riccati series.
VerificationReport verify_closed_forms(int order, double tol, int n_max = 8,
                                       const EnumOptions& opts = {});

// Pattern-specific ODE solutions against the enumeration oracle.
VerificationReport verify_ode_vs_oracle(const Word& sigma, int n_max,
                                        const EnumOptions& opts = {});

struct SuiteConfig {
    int n_max = 8;
    int order = 20;
    double tol = 1e-8;
    EnumOptions opts;
};

// The full default battery, in a fixed deterministic order.
std::vector<VerificationReport> run_default_suite(const SuiteConfig& cfg = {});

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace circpat
