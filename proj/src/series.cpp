#include "ffdyck/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ffdyck {

namespace {

void check_order(int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be >= 0, got " + std::to_string(order));
}

void check_m(int m)
{
    if (m < 1)
        throw std::invalid_argument("slope parameter m must be >= 1, got " + std::to_string(m));
}

} // namespace

SeriesPoly::SeriesPoly(int order)
{
    check_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesPoly::SeriesPoly(std::vector<BigInt> coeffs, int order) : coeffs_(std::move(coeffs))
{
    check_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesPoly SeriesPoly::constant(const BigInt& c, int order)
{
    return monomial(c, 0, order);
}

SeriesPoly SeriesPoly::monomial(const BigInt& c, int power, int order)
{
    SeriesPoly s(order);
    if (power >= 0 && power <= order)
        s.coeffs_[static_cast<std::size_t>(power)] = c;
    return s;
}

const BigInt& SeriesPoly::operator[](int k) const
{
    static const BigInt zero = 0;
    if (k < 0)
        return zero;
    if (k > order())
        throw std::out_of_range("coefficient " + std::to_string(k) + " is past truncation order "
                                + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(k)];
}

bool SeriesPoly::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

SeriesPoly& SeriesPoly::operator*=(const BigInt& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

SeriesPoly operator*(const SeriesPoly& lhs, const SeriesPoly& rhs)
{
    const int order = std::min(lhs.order(), rhs.order());
    SeriesPoly out(order);
    for (int i = 0; i <= order; ++i) {
        const BigInt& a = lhs.coeffs_[static_cast<std::size_t>(i)];
        if (a == 0)
            continue;
        for (int j = 0; i + j <= order; ++j) {
            const BigInt& b = rhs.coeffs_[static_cast<std::size_t>(j)];
            if (b != 0)
                out.coeffs_[static_cast<std::size_t>(i + j)] += a * b;
        }
    }
    return out;
}

SeriesPoly SeriesPoly::pow(unsigned exponent) const
{
    SeriesPoly result = constant(1, order());
    SeriesPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

SeriesPoly SeriesPoly::shifted(int k) const
{
    if (k < 0)
        throw std::invalid_argument("shifted: negative shift");
    SeriesPoly out(order());
    for (int i = 0; i + k <= order(); ++i)
        out.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

SeriesPoly SeriesPoly::inflate(int factor, int new_order) const
{
    if (factor < 1)
        throw std::invalid_argument("inflate: factor must be >= 1");
    // Source coefficients past order() are unknown, not zero.
    if (new_order >= (order() + 1) * factor)
        throw std::invalid_argument("inflate: source order too small for requested order");
    SeriesPoly out(new_order);
    for (int i = 0; i <= order() && i * factor <= new_order; ++i)
        out.coeffs_[static_cast<std::size_t>(i * factor)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

SeriesPoly SeriesPoly::truncated(int new_order) const
{
    if (new_order > order())
        throw std::invalid_argument("truncated: cannot raise the order");
    return SeriesPoly(coeffs_, new_order);
}

SeriesPoly u_series(int m, int n_max)
{
    check_m(m);
    check_order(n_max);

    // Each pass fixes at least one more coefficient, since every term on the
    // right-hand side carries a factor t.
    SeriesPoly u = SeriesPoly::constant(1, n_max);
    for (int pass = 0; pass < n_max; ++pass) {
        SeriesPoly next = SeriesPoly::constant(1, n_max);
        const SeriesPoly u2 = u * u;
        SeriesPoly u2j = SeriesPoly::constant(1, n_max);
        for (int j = 1; j <= m; ++j) {
            u2j = u2j * u2;
            next += u2j.shifted(j) * binomial(m + j, m - j);
        }
        if (next == u)
            break;
        u = std::move(next);
    }
    return u;
}

SeriesPoly d_series(int m, int n_max)
{
    check_m(m);
    const SeriesPoly u = u_series(m, n_max);
    const SeriesPoly u2 = u * u;
    SeriesPoly d = SeriesPoly::constant(1, n_max) + u2.shifted(1);
    SeriesPoly u_odd = u; // U^{2j-1}
    for (int j = 1; j <= m; ++j) {
        if (j > 1)
            u_odd = u_odd * u2;
        d += u_odd.shifted(j) * binomial(m + j - 1, m - j);
    }
    return d;
}

std::vector<SeriesPoly> l_system(int m, int tau_order)
{
    check_m(m);
    check_order(tau_order);
    const int top = 2 * m + 1;
    const SeriesPoly tau = SeriesPoly::monomial(1, 1, tau_order);

    std::vector<SeriesPoly> l(static_cast<std::size_t>(top) + 1, SeriesPoly(tau_order));
    for (int pass = 0; pass <= tau_order + 1; ++pass) {
        std::vector<SeriesPoly> next(l.size(), SeriesPoly(tau_order));
        const SeriesPoly& l1 = l[1];
        next[static_cast<std::size_t>(top)] = tau;
        next[static_cast<std::size_t>(top - 1)] = l1.shifted(2);
        for (int i = top - 2; i >= 1; --i) {
            const auto idx = static_cast<std::size_t>(i);
            next[idx] = (l1 * l[idx + 1]).shifted(1) + l[idx + 2].shifted(1);
        }
        if (next == l)
            break;
        l = std::move(next);
    }
    return l;
}

SeriesPoly l_series(int m, int i, int tau_order)
{
    if (i < 1 || i > 2 * m + 1)
        throw std::invalid_argument("l_series: index must be in 1..2m+1");
    return l_system(m, tau_order)[static_cast<std::size_t>(i)];
}

} // namespace ffdyck
