#include "circpat/gfengine.hpp"

#include "circpat/errors.hpp"

#include <cmath>
#include <complex>
#include <numeric>

namespace circpat {

namespace {

ZSeries egf_from_rows(const Word& sigma, int order, const EnumOptions& opts, bool circular) {
    std::vector<UPoly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        const UPoly row = circular ? circular_distribution(sigma, n, opts)
                                   : linear_distribution(sigma, n, opts);
        coeffs[static_cast<std::size_t>(n)] = row.scaled(Rational(1, factorial(n)));
    }
    return ZSeries(order, std::move(coeffs));
}

const UPoly& one_minus_u() {
    static const UPoly p(std::vector<Rational>{1, -1});
    return p;
}

const UPoly& u_minus_one() {
    static const UPoly p(std::vector<Rational>{-1, 1});
    return p;
}

Word increasing_word(int m) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(m));
    std::iota(e.begin(), e.end(), 1);
    return Word(std::move(e));
}

}  // namespace

ZSeries p_bruteforce(const Word& sigma, int order, const EnumOptions& opts) {
    return egf_from_rows(sigma, order, opts, false);
}

ZSeries c_bruteforce(const Word& sigma, int order, const EnumOptions& opts) {
    return egf_from_rows(sigma, order, opts, true);
}

std::optional<Word> one_initial_orbit_member(const Word& sigma) {
    for (const Word& w : symmetry_orbit(sigma))
        if (w[0] == 1) return w;
    return std::nullopt;
}

ZSeries c_from_p(const Word& sigma, const ZSeries& P) {
    if (!one_initial_orbit_member(sigma))
        throw TheoremNotApplicableError(
            "no member of the symmetry orbit of \"" + sigma.str() +
            "\" starts with 1; the linear-to-circular transfer does not apply");
    return add(ZSeries::one(P.order()), ln1(P));
}

ZSeries omega_monotone(int m, int order) {
    if (m < 3) throw PatternNotSupportedError("monotone recurrence needs length >= 3");
    std::vector<UPoly> w(static_cast<std::size_t>(order) + 1);
    if (order >= 0) w[0] = UPoly(1);
    if (order >= 1) w[1] = UPoly(-1);
    // remaining initial conditions (indices 2..m-2) stay zero
    for (int n = 0; n + m - 1 <= order; ++n) {
        UPoly acc;
        for (int j = 0; j <= m - 2; ++j) {
            const int idx = n + j;
            if (w[static_cast<std::size_t>(idx)].is_zero()) continue;
            const Rational ratio(factorial(idx), factorial(n + m - 1));
            acc = acc + w[static_cast<std::size_t>(idx)].scaled(ratio);
        }
        w[static_cast<std::size_t>(n + m - 1)] = -(one_minus_u() * acc);
    }
    return ZSeries(order, std::move(w));
}

ZSeries d_riccati_123(int order) {
    std::vector<UPoly> d(static_cast<std::size_t>(order) + 1);
    d[0] = UPoly(1);
    for (int n = 0; n + 1 <= order; ++n) {
        UPoly sq;  // [z^n] D^2
        for (int k = 0; k <= n; ++k)
            sq = sq + d[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(n - k)];
        UPoly lin = d[static_cast<std::size_t>(n)];
        if (n == 0) lin = lin - UPoly(1);
        d[static_cast<std::size_t>(n + 1)] =
            (sq + u_minus_one() * lin).scaled(Rational(1, n + 1));
    }
    return ZSeries(order, std::move(d));
}

ZSeries d_riccati_1234(int order) {
    std::vector<UPoly> d(static_cast<std::size_t>(order) + 1);
    std::vector<UPoly> sq;  // cached [z^k] D^2
    d[0] = UPoly(1);
    if (order >= 1) d[1] = UPoly(1);
    for (int n = 0; n + 2 <= order; ++n) {
        UPoly sq_n;
        for (int k = 0; k <= n; ++k)
            sq_n = sq_n + d[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(n - k)];
        sq.push_back(sq_n);
        UPoly cube_n;  // [z^n] D^3
        for (int k = 0; k <= n; ++k)
            cube_n = cube_n + sq[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(n - k)];
        UPoly dd_n;  // [z^n] D'D
        for (int k = 0; k <= n; ++k)
            dd_n = dd_n + d[static_cast<std::size_t>(k + 1)].scaled(k + 1) *
                              d[static_cast<std::size_t>(n - k)];
        UPoly lin = d[static_cast<std::size_t>(n + 1)].scaled(n + 1) - sq_n +
                    d[static_cast<std::size_t>(n)];
        if (n == 0) lin = lin - UPoly(1);
        const UPoly rhs = dd_n.scaled(3) - cube_n + u_minus_one() * lin;
        d[static_cast<std::size_t>(n + 2)] =
            rhs.scaled(Rational(1, BigInt(n + 2) * (n + 1)));
    }
    return ZSeries(order, std::move(d));
}

namespace {

// Shared precondition for the non-overlapping ODE routes.
void require_nonoverlapping_one_initial(const Word& sigma) {
    if (sigma.size() < 3)
        throw PatternNotSupportedError("non-overlapping route needs a pattern of length >= 3");
    if (sigma[0] != 1)
        throw PatternNotSupportedError("non-overlapping route needs a 1-initial pattern, got \"" +
                                       sigma.str() + "\"");
    if (!is_nonoverlapping(sigma))
        throw PatternNotSupportedError("pattern \"" + sigma.str() +
                                       "\" has overlapping occurrences");
}

}  // namespace

ZSeries omega_nonoverlapping(const Word& sigma, int order) {
    require_nonoverlapping_one_initial(sigma);
    const int m = static_cast<int>(sigma.size());
    const int b = static_cast<int>(sigma[sigma.size() - 1]);
    std::vector<UPoly> w(static_cast<std::size_t>(order) + 1);
    if (order >= 0) w[0] = UPoly(1);
    if (order >= 1) w[1] = UPoly(-1);
    // w_2 .. w_{b-1} stay zero
    for (int n = 0; n + b <= order; ++n) {
        if (n < m - b) continue;  // the z^(m-b) factor contributes nothing yet
        const int q = n - m + b + 1;
        const UPoly& wq = w[static_cast<std::size_t>(q)];
        if (wq.is_zero()) continue;
        const Rational ratio = Rational(q, factorial(m - b)) * Rational(factorial(n), factorial(n + b));
        w[static_cast<std::size_t>(n + b)] = -(one_minus_u() * wq.scaled(ratio));
    }
    return ZSeries(order, std::move(w));
}

ZSeries c_nonoverlapping_closed(const Word& sigma, int order) {
    require_nonoverlapping_one_initial(sigma);
    const int m = static_cast<int>(sigma.size());
    if (sigma[sigma.size() - 1] != 2)
        throw PatternNotSupportedError("closed form needs the pattern to end in 2, got \"" +
                                       sigma.str() + "\"");
    const int inner_order = std::max(order - 1, 0);
    const ZSeries exponent = ZSeries::monomial(
        u_minus_one().scaled(Rational(1, factorial(m - 1))), m - 1, inner_order);
    const ZSeries integrand = exp0(exponent);
    const ZSeries integral = integrate(integrand);
    const ZSeries one = ZSeries::one(integral.order());
    return truncated(sub(one, ln1(sub(one, integral))), order);
}

ZSeries closed_form_d1234_u0(int order) {
    std::vector<UPoly> num(static_cast<std::size_t>(order) + 1);
    std::vector<UPoly> den(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        const Rational inv_fact(1, factorial(n));
        Rational cos_n = 0, sin_n = 0;
        if (n % 2 == 0) cos_n = (n % 4 == 0) ? inv_fact : -inv_fact;
        if (n % 2 == 1) sin_n = (n % 4 == 1) ? inv_fact : -inv_fact;
        const Rational exp_n = (n % 2 == 0) ? inv_fact : -inv_fact;
        // halve both so the denominator has unit constant term
        num[static_cast<std::size_t>(n)] = UPoly((cos_n + sin_n + exp_n) / 2);
        den[static_cast<std::size_t>(n)] = UPoly((cos_n - sin_n + exp_n) / 2);
    }
    return div(ZSeries(order, std::move(num)), ZSeries(order, std::move(den)));
}

double eval_d123_closed(double u0, double z0) {
    const double disc = u0 * u0 + 2.0 * u0 - 3.0;
    if (std::abs(disc) < 1e-12) {
        // degenerate radical (u = 1 up to rounding): D = 1/(1-z)
        if (std::abs(1.0 - z0) < 1e-12) throw std::domain_error("pole at z = 1");
        return 1.0 / (1.0 - z0);
    }
    const std::complex<double> s = std::sqrt(std::complex<double>(disc, 0.0));
    const std::complex<double> arg =
        std::complex<double>(z0, 0.0) * s / 2.0 - std::atanh((u0 + 1.0) / s);
    const std::complex<double> val = 0.5 * (1.0 - u0 - std::tanh(arg) * s);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()) ||
        std::abs(val.imag()) > 1e-6 * std::max(1.0, std::abs(val.real())))
        throw std::domain_error("evaluation hit a pole of the closed form");
    return val.real();
}

std::string gf_source_name(GFSource s) {
    switch (s) {
        case GFSource::Bruteforce: return "bruteforce";
        case GFSource::Ode: return "ode";
        case GFSource::ClosedForm: return "closed-form";
    }
    return "unknown";
}

PatternGF PatternGF::bruteforce(const Word& sigma, int order, const EnumOptions& opts) {
    PatternGF gf;
    gf.pattern = sigma;
    gf.source = GFSource::Bruteforce;
    gf.P = p_bruteforce(sigma, order, opts);
    gf.C = c_bruteforce(sigma, order, opts);
    gf.omega = div(ZSeries::one(order), gf.P);
    gf.D = derive(gf.C);
    return gf;
}

namespace {

Word normalized_or_throw(const Word& sigma) {
    const auto member = one_initial_orbit_member(sigma);
    if (!member)
        throw PatternNotSupportedError("no member of the symmetry orbit of \"" + sigma.str() +
                                       "\" starts with 1");
    return *member;
}

}  // namespace

PatternGF PatternGF::ode(const Word& sigma, int order) {
    const Word tau = normalized_or_throw(sigma);
    const int m = static_cast<int>(tau.size());
    const int work = std::min(order + 1, kMaxSeriesOrder);

    PatternGF gf;
    gf.pattern = sigma;
    gf.source = GFSource::Ode;
    if (!(tau == sigma)) gf.normalized_via = tau;

    bool have_d = false;
    if (tau == increasing_word(m) && m >= 3) {
        gf.omega = omega_monotone(m, work);
        if (m == 3) {
            gf.D = d_riccati_123(order);
            have_d = true;
        } else if (m == 4) {
            gf.D = d_riccati_1234(order);
            have_d = true;
        }
    } else if (m >= 3 && is_nonoverlapping(tau)) {
        gf.omega = omega_nonoverlapping(tau, work);
    } else {
        throw PatternNotSupportedError("no differential equation route covers pattern \"" +
                                       sigma.str() + "\"");
    }
    gf.P = div(ZSeries::one(work), gf.omega);
    gf.C = c_from_p(tau, gf.P);
    if (!have_d) {
        const ZSeries dc = derive(gf.C);
        gf.D = dc.order() > order ? truncated(dc, order) : dc;
    }
    gf.omega = truncated(gf.omega, order);
    gf.P = truncated(gf.P, order);
    gf.C = truncated(gf.C, order);
    return gf;
}

PatternGF PatternGF::closed_form(const Word& sigma, int order) {
    const Word tau = normalized_or_throw(sigma);
    const int work = std::min(order + 1, kMaxSeriesOrder);

    PatternGF gf;
    gf.pattern = sigma;
    gf.source = GFSource::ClosedForm;
    if (!(tau == sigma)) gf.normalized_via = tau;

    gf.C = c_nonoverlapping_closed(tau, work);
    gf.omega = exp0(sub(ZSeries::one(work), gf.C));
    gf.P = div(ZSeries::one(work), gf.omega);
    const ZSeries dc = derive(gf.C);
    gf.D = dc.order() > order ? truncated(dc, order) : dc;
    gf.C = truncated(gf.C, order);
    gf.omega = truncated(gf.omega, order);
    gf.P = truncated(gf.P, order);
    return gf;
}

}  // namespace circpat
