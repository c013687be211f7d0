#include "ffdyck/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ffdyck/errors.hpp"

namespace ffdyck {

namespace {

void check_m(int m)
{
    if (m < 1)
        throw std::invalid_argument("slope parameter m must be >= 1, got " + std::to_string(m));
}

void check_n(int n)
{
    if (n < 0)
        throw std::invalid_argument("n must be >= 0, got " + std::to_string(n));
}

} // namespace

BigInt mu(int m, int j)
{
    check_m(m);
    if (j < 0)
        throw std::invalid_argument("mu: j must be >= 0");
    return binomial(m + j, m - j);
}

std::vector<BigInt> mu_sequence(int m)
{
    std::vector<BigInt> out;
    for (int j = 1; j <= m; ++j)
        out.push_back(mu(m, j));
    return out;
}

BellArgs factorial_weighted(std::span<const BigInt> weights)
{
    std::vector<BigInt> xs;
    xs.reserve(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j)
        xs.push_back(factorial(static_cast<int>(j) + 1) * weights[j]);
    return BellArgs(std::move(xs));
}

BigInt count_u_weighted(int n, std::span<const BigInt> weights)
{
    check_n(n);
    if (n == 0)
        return 1;
    const BellArgs xs = factorial_weighted(weights);
    BigInt numerator = 0;
    for (int k = 1; k <= n; ++k)
        numerator += binomial(2 * n, k - 1) * factorial(k - 1) * bell_partial(n, k, xs);
    return exact_divide(numerator, factorial(n), "count_u");
}

BigInt count_u(int m, int n)
{
    check_m(m);
    const auto weights = mu_sequence(m);
    return count_u_weighted(n, weights);
}

BigInt count_u_m2_simplified(int n)
{
    if (n < 1)
        throw std::invalid_argument("count_u_m2_simplified: n must be >= 1");
    BigInt sum = 0;
    for (int k = (n + 1) / 2; k <= n; ++k) {
        BigInt power = 1;
        for (int e = 0; e < 2 * k - n; ++e)
            power *= 3;
        sum += binomial(2 * n + 1, k) * binomial(k, n - k) * power;
    }
    return exact_divide(sum, 2 * n + 1, "count_u_m2_simplified");
}

BigInt delta(int m, int nu, int l)
{
    check_m(m);
    if (nu < 0 || l < 0)
        throw std::invalid_argument("delta: nu and l must be >= 0");
    const auto weights = mu_sequence(m);
    const BellArgs xs = factorial_weighted(weights);
    BigInt sum = 0;
    for (int k = 0; k <= nu; ++k)
        sum += binomial(2 * nu + 2 * l + 1, k) * factorial(k) * bell_partial(nu, k, xs);
    return exact_divide(BigInt(2 * l + 1) * sum, BigInt(2 * nu + 2 * l + 1) * factorial(nu), "delta");
}

BigInt count_d(int m, int n)
{
    check_m(m);
    check_n(n);
    if (n == 0)
        return 1;
    BigInt total = 0;
    for (int l = 0; l <= std::min(m, n - 1); ++l)
        total += binomial(m + l + 1, m - l) * delta(m, n - l - 1, l);
    return total;
}

BigInt count_colored_dyck(int m, int n)
{
    check_m(m);
    check_n(n);
    const int length = 4 * n;

    std::vector<BigInt> weight(static_cast<std::size_t>(m) + 1);
    for (int j = 1; j <= m; ++j)
        weight[static_cast<std::size_t>(j)] = binomial(m + j, m - j);

    // ways[p][h]: weighted count of block sequences of total length p ending
    // at height h. A block is either a lone down-step or u^{2j} d.
    std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(length) + 1,
                                          std::vector<BigInt>(static_cast<std::size_t>(length) + 1));
    ways[0][0] = 1;
    for (int p = 0; p < length; ++p) {
        for (int h = 0; h <= length; ++h) {
            const BigInt& here = ways[static_cast<std::size_t>(p)][static_cast<std::size_t>(h)];
            if (here == 0)
                continue;
            if (h >= 1)
                ways[static_cast<std::size_t>(p) + 1][static_cast<std::size_t>(h) - 1] += here;
            for (int j = 1; j <= m; ++j) {
                const int end = p + 2 * j + 1;
                const int top = h + 2 * j - 1;
                if (end > length || top > length)
                    break;
                ways[static_cast<std::size_t>(end)][static_cast<std::size_t>(top)]
                    += here * weight[static_cast<std::size_t>(j)];
            }
        }
    }
    return ways[static_cast<std::size_t>(length)][0];
}

} // namespace ffdyck
