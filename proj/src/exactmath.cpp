#include "ffdyck/exactmath.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ffdyck/errors.hpp"

namespace ffdyck {

BigInt binomial(int n, int k)
{
    if (n < 0)
        throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    // result stays integral: after step i it equals C(n-k+i, i).
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial: n must be non-negative");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

BigInt exact_divide(const BigInt& numerator, const BigInt& denominator, std::string_view what)
{
    if (denominator == 0)
        throw NonIntegerResult(std::string(what) + ": division by zero");
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw NonIntegerResult(std::string(what) + ": " + numerator.str() + " is not divisible by "
                               + denominator.str());
    }
    return quotient;
}

const BigInt& BellArgs::operator[](int j) const
{
    static const BigInt zero = 0;
    if (j < 1 || j > stored())
        return zero;
    return entries_[static_cast<std::size_t>(j - 1)];
}

BigInt bell_partial(int n, int k, const BellArgs& xs)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("bell_partial: n and k must be non-negative");
    if (k > n)
        return 0;

    // table[r][c] = B_{r,c}, filled for c <= k.
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(n) + 1,
                                           std::vector<BigInt>(static_cast<std::size_t>(k) + 1));
    table[0][0] = 1;
    for (int c = 1; c <= k; ++c) {
        for (int r = c; r <= n; ++r) {
            BigInt sum = 0;
            for (int j = 1; j <= r - c + 1; ++j) {
                const BigInt& x = xs[j];
                if (x == 0)
                    continue;
                sum += binomial(r - 1, j - 1) * x * table[r - j][c - 1];
            }
            table[r][c] = std::move(sum);
        }
    }
    return table[n][k];
}

} // namespace ffdyck
