#pragma once

#include "circpat/enumerate.hpp"
#include "circpat/word.hpp"
#include "circpat/zseries.hpp"

#include <optional>
#include <string>

namespace circpat {

// Linear EGF: n! * [z^n] P is the linear distribution polynomial.
ZSeries p_bruteforce(const Word& sigma, int order, const EnumOptions& opts = {});
// Circular EGF: n! * [z^n] C is the circular distribution polynomial.
ZSeries c_bruteforce(const Word& sigma, int order, const EnumOptions& opts = {});

// Circular EGF from the linear one: C = 1 + ln P. Valid whenever the
// symmetry orbit of sigma contains a 1-initial pattern (both P and C are
// orbit invariants); throws TheoremNotApplicableError otherwise.
ZSeries c_from_p(const Word& sigma, const ZSeries& P);

// The orbit member starting with 1 that c_from_p normalizes through.
std::optional<Word> one_initial_orbit_member(const Word& sigma);

// omega = 1/P for the increasing pattern 1 2 ... m (m >= 3), solved by
// coefficient extraction from its linear ODE.
ZSeries omega_monotone(int m, int order);

// D = C' for pattern 123, from the first-order Riccati recurrence.
ZSeries d_riccati_123(int order);
// D = C' for pattern 1234, from the second-order recurrence.
ZSeries d_riccati_1234(int order);

// omega = 1/P for a non-overlapping 1-initial pattern of length >= 3.
ZSeries omega_nonoverlapping(const Word& sigma, int order);

// C in closed form for a non-overlapping pattern with sigma_1 = 1 and
// sigma_m = 2: C = 1 - ln(1 - int_0^z exp((u-1) t^(m-1)/(m-1)!) dt).
ZSeries c_nonoverlapping_closed(const Word& sigma, int order);

// D for 1234 at u = 0 as the exact series quotient of
// (cos z + sin z + e^-z) / (cos z - sin z + e^-z).
ZSeries closed_form_d1234_u0(int order);

// Floating-point value of D for 123 at (u0, z0) from the tanh/arctanh
// closed form, evaluated through complex arithmetic (the radical is
// imaginary for u in [0, 1)). Throws std::domain_error at poles.
double eval_d123_closed(double u0, double z0);

enum class GFSource { Bruteforce, Ode, ClosedForm };

std::string gf_source_name(GFSource s);

// The four series of one pattern, built through one of the three routes.
// Ode/closed-form routes normalize the pattern through its symmetry orbit
// to a 1-initial member (recorded in normalized_via).
struct PatternGF {
    Word pattern;
    GFSource source = GFSource::Bruteforce;
    std::optional<Word> normalized_via;
    ZSeries P{0};
    ZSeries omega{0};
    ZSeries C{0};
    ZSeries D{0};

    static PatternGF bruteforce(const Word& sigma, int order, const EnumOptions& opts = {});
    static PatternGF ode(const Word& sigma, int order);
    static PatternGF closed_form(const Word& sigma, int order);
};

}  // namespace circpat
