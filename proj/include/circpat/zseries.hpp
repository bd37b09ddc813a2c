#pragma once

#include "circpat/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circpat {

// Hard ceiling on truncation orders; the CLI enforces a lower limit.
inline constexpr int kMaxSeriesOrder = 128;

// Truncated power series in z whose coefficients are polynomials in u.
// coeff(n) is the z^n coefficient; under the EGF convention n! * coeff(n)
// is the size-n distribution polynomial. Values are immutable once built.
class ZSeries {
public:
    explicit ZSeries(int order);  // zero series
    ZSeries(int order, std::vector<UPoly> coeffs);

    static ZSeries constant(const Rational& c, int order);
    static ZSeries one(int order) { return constant(1, order); }
    // c * z^z_power, truncated at `order`.
    static ZSeries monomial(const UPoly& c, int z_power, int order);

    int order() const { return order_; }
    const UPoly& coeff(int n) const;
    const std::vector<UPoly>& coeffs() const { return coeffs_; }

    bool operator==(const ZSeries& o) const = default;

    std::string str() const;  // one "[z^n] <poly>" line per coefficient

private:
    int order_ = 0;
    std::vector<UPoly> coeffs_;  // exactly order_+1 entries
};

// Binary operations truncate to the minimum operand order.
ZSeries add(const ZSeries& f, const ZSeries& g);
ZSeries sub(const ZSeries& f, const ZSeries& g);
ZSeries mul(const ZSeries& f, const ZSeries& g);
// Requires g's constant term to be the unit 1 or -1; throws
// SingularDivisionError / UnsupportedDivisionError otherwise.
ZSeries div(const ZSeries& f, const ZSeries& g);

ZSeries negate(const ZSeries& f);
ZSeries scale(const ZSeries& f, const Rational& c);
ZSeries scale(const ZSeries& f, const UPoly& p);

// d/dz; the result order drops by one (a known-to-z^N series determines its
// derivative only to z^(N-1)).
ZSeries derive(const ZSeries& f);
// Antiderivative with constant term 0; every stored coefficient survives at
// the next z-degree, so the order rises by one (capped at kMaxSeriesOrder).
ZSeries integrate(const ZSeries& f);

// ln f for f with constant term 1, computed as integrate(derive(f)/f);
// preserves the order.
ZSeries ln1(const ZSeries& f);
// exp f for f with constant term 0, by the coefficient recurrence
// E' = f'E; preserves the order.
ZSeries exp0(const ZSeries& f);

// Substitute a fixed rational for u in every coefficient.
ZSeries subst_u(const ZSeries& f, const Rational& u0);

ZSeries truncated(const ZSeries& f, int order);

// Horner evaluation of the truncated polynomial at (u0, z0).
double eval_numeric(const ZSeries& f, double u0, double z0);

ZSeries operator+(const ZSeries& f, const ZSeries& g);
ZSeries operator-(const ZSeries& f, const ZSeries& g);
ZSeries operator*(const ZSeries& f, const ZSeries& g);

struct SeriesDivergence {
    int n = 0;
    UPoly expected;
    UPoly got;
};

// First z-degree (up to the common order, or `upto` if given) where the two
// series disagree; nullopt when they agree everywhere compared.
std::optional<SeriesDivergence> first_divergence(const ZSeries& expected,
                                                 const ZSeries& got,
                                                 int upto = -1);

}  // namespace circpat
