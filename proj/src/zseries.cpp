#include "circpat/zseries.hpp"

#include "circpat/errors.hpp"

#include <algorithm>
#include <utility>

namespace circpat {

namespace {

int checked_order(int order) {
    if (order < 0) throw SeriesDomainError("series order must be nonnegative");
    if (order > kMaxSeriesOrder)
        throw SeriesDomainError("series order exceeds engine cap " +
                                std::to_string(kMaxSeriesOrder));
    return order;
}

}  // namespace

ZSeries::ZSeries(int order)
    : order_(checked_order(order)),
      coeffs_(static_cast<std::size_t>(order) + 1) {}

ZSeries::ZSeries(int order, std::vector<UPoly> coeffs)
    : order_(checked_order(order)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(order_) + 1);
}

ZSeries ZSeries::constant(const Rational& c, int order) {
    ZSeries r(order);
    r.coeffs_[0] = UPoly(c);
    return r;
}

ZSeries ZSeries::monomial(const UPoly& c, int z_power, int order) {
    ZSeries r(order);
    if (z_power >= 0 && z_power <= order) r.coeffs_[static_cast<std::size_t>(z_power)] = c;
    return r;
}

const UPoly& ZSeries::coeff(int n) const {
    if (n < 0 || n > order_)
        throw SeriesDomainError("coefficient index " + std::to_string(n) +
                                " outside order " + std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(n)];
}

std::string ZSeries::str() const {
    std::string out;
    for (int n = 0; n <= order_; ++n) {
        out += "[z^" + std::to_string(n) + "] " + coeffs_[static_cast<std::size_t>(n)].str();
        if (n < order_) out += "\n";
    }
    return out;
}

ZSeries add(const ZSeries& f, const ZSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<UPoly> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = f.coeff(k) + g.coeff(k);
    return ZSeries(n, std::move(c));
}

ZSeries sub(const ZSeries& f, const ZSeries& g) { return add(f, negate(g)); }

ZSeries mul(const ZSeries& f, const ZSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<UPoly> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g.coeff(j).is_zero()) continue;
            c[static_cast<std::size_t>(i + j)] =
                c[static_cast<std::size_t>(i + j)] + f.coeff(i) * g.coeff(j);
        }
    }
    return ZSeries(n, std::move(c));
}

ZSeries div(const ZSeries& f, const ZSeries& g) {
    const UPoly& g0 = g.coeff(0);
    if (g0.is_zero())
        throw SingularDivisionError("series division by a divisor with zero constant term");
    if (!g0.is_constant() || (g0.coeff(0) != 1 && g0.coeff(0) != -1))
        throw UnsupportedDivisionError(
            "series division requires a divisor with constant term 1 or -1, got " + g0.str());
    const Rational unit = g0.coeff(0);  // its own inverse
    const int n = std::min(f.order(), g.order());
    std::vector<UPoly> h(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        UPoly acc = f.coeff(k);
        for (int j = 1; j <= k; ++j) {
            if (g.coeff(j).is_zero()) continue;
            acc = acc - g.coeff(j) * h[static_cast<std::size_t>(k - j)];
        }
        h[static_cast<std::size_t>(k)] = acc.scaled(unit);
    }
    return ZSeries(n, std::move(h));
}

ZSeries negate(const ZSeries& f) {
    std::vector<UPoly> c(static_cast<std::size_t>(f.order()) + 1);
    for (int k = 0; k <= f.order(); ++k) c[static_cast<std::size_t>(k)] = -f.coeff(k);
    return ZSeries(f.order(), std::move(c));
}

ZSeries scale(const ZSeries& f, const Rational& c) {
    std::vector<UPoly> v(static_cast<std::size_t>(f.order()) + 1);
    for (int k = 0; k <= f.order(); ++k) v[static_cast<std::size_t>(k)] = f.coeff(k).scaled(c);
    return ZSeries(f.order(), std::move(v));
}

ZSeries scale(const ZSeries& f, const UPoly& p) {
    std::vector<UPoly> v(static_cast<std::size_t>(f.order()) + 1);
    for (int k = 0; k <= f.order(); ++k) v[static_cast<std::size_t>(k)] = f.coeff(k) * p;
    return ZSeries(f.order(), std::move(v));
}

ZSeries derive(const ZSeries& f) {
    const int n = std::max(f.order() - 1, 0);
    std::vector<UPoly> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k + 1 <= f.order(); ++k)
        c[static_cast<std::size_t>(k)] = f.coeff(k + 1).scaled(k + 1);
    return ZSeries(n, std::move(c));
}

ZSeries integrate(const ZSeries& f) {
    const int n = std::min(f.order() + 1, kMaxSeriesOrder);
    std::vector<UPoly> c(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = f.coeff(k - 1).scaled(Rational(1, k));
    return ZSeries(n, std::move(c));
}

ZSeries ln1(const ZSeries& f) {
    if (!(f.coeff(0) == UPoly(1)))
        throw SeriesDomainError("ln requires constant term 1, got " + f.coeff(0).str());
    return integrate(div(derive(f), f));
}

ZSeries exp0(const ZSeries& f) {
    if (!f.coeff(0).is_zero())
        throw SeriesDomainError("exp requires constant term 0, got " + f.coeff(0).str());
    const int n = f.order();
    std::vector<UPoly> e(static_cast<std::size_t>(n) + 1);
    e[0] = UPoly(1);
    for (int k = 1; k <= n; ++k) {
        UPoly acc;
        for (int j = 1; j <= k; ++j) {
            if (f.coeff(j).is_zero()) continue;
            acc = acc + f.coeff(j).scaled(j) * e[static_cast<std::size_t>(k - j)];
        }
        e[static_cast<std::size_t>(k)] = acc.scaled(Rational(1, k));
    }
    return ZSeries(n, std::move(e));
}

ZSeries subst_u(const ZSeries& f, const Rational& u0) {
    std::vector<UPoly> c(static_cast<std::size_t>(f.order()) + 1);
    for (int k = 0; k <= f.order(); ++k)
        c[static_cast<std::size_t>(k)] = UPoly(f.coeff(k).eval(u0));
    return ZSeries(f.order(), std::move(c));
}

ZSeries truncated(const ZSeries& f, int order) {
    if (order > f.order())
        throw SeriesDomainError("cannot extend a series by truncation");
    std::vector<UPoly> c(f.coeffs().begin(), f.coeffs().begin() + order + 1);
    return ZSeries(order, std::move(c));
}

double eval_numeric(const ZSeries& f, double u0, double z0) {
    double acc = 0.0;
    for (int k = f.order(); k >= 0; --k) acc = acc * z0 + f.coeff(k).eval_double(u0);
    return acc;
}

ZSeries operator+(const ZSeries& f, const ZSeries& g) { return add(f, g); }
ZSeries operator-(const ZSeries& f, const ZSeries& g) { return sub(f, g); }
ZSeries operator*(const ZSeries& f, const ZSeries& g) { return mul(f, g); }

std::optional<SeriesDivergence> first_divergence(const ZSeries& expected,
                                                 const ZSeries& got, int upto) {
    int n = std::min(expected.order(), got.order());
    if (upto >= 0) n = std::min(n, upto);
    for (int k = 0; k <= n; ++k)
        if (!(expected.coeff(k) == got.coeff(k)))
            return SeriesDivergence{k, expected.coeff(k), got.coeff(k)};
    return std::nullopt;
}

}  // namespace circpat
