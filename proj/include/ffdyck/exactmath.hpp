#ifndef FFDYCK_EXACTMATH_HPP
#define FFDYCK_EXACTMATH_HPP

#include <initializer_list>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffdyck {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

BigInt factorial(int n);

/// Returns numerator / denominator, throwing NonIntegerResult (tagged with
/// `what`) when the remainder is nonzero.
BigInt exact_divide(const BigInt& numerator, const BigInt& denominator, std::string_view what);

/// Argument sequence (x_1, x_2, ...) of a partial Bell polynomial.
///
/// Indexing is 1-based; entries past the stored ones read as zero.
class BellArgs {
public:
    BellArgs() = default;
    explicit BellArgs(std::vector<BigInt> entries) : entries_(std::move(entries)) {}
    BellArgs(std::initializer_list<BigInt> entries) : entries_(entries) {}

    /// x_j for j >= 1.
    const BigInt& operator[](int j) const;

    int stored() const { return static_cast<int>(entries_.size()); }

private:
    std::vector<BigInt> entries_;
};

/// Partial exponential Bell polynomial B_{n,k}(x_1, x_2, ...), evaluated through
/// B_{n,k} = sum_{j>=1} C(n-1, j-1) x_j B_{n-j,k-1} with B_{0,0} = 1.
BigInt bell_partial(int n, int k, const BellArgs& xs);

} // namespace ffdyck

#endif
