#ifndef FFDYCK_SERIES_HPP
#define FFDYCK_SERIES_HPP

#include <vector>

#include "ffdyck/exactmath.hpp"

namespace ffdyck {

/// Power series truncated at a fixed order, with exact integer coefficients.
///
/// Coefficients 0..order() are stored; everything above is discarded by every
/// ring operation. Binary operations on operands of different orders truncate
/// to the smaller one. The same type holds series in t and in tau; switching
/// between them is always an explicit inflate().
class SeriesPoly {
public:
    /// The zero series of the given order.
    explicit SeriesPoly(int order);
    /// Coefficients past `order` are dropped, missing ones are zero.
    SeriesPoly(std::vector<BigInt> coeffs, int order);

    static SeriesPoly constant(const BigInt& c, int order);
    /// c * t^power.
    static SeriesPoly monomial(const BigInt& c, int power, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of t^k; zero for k < 0. Throws std::out_of_range past order().
    const BigInt& operator[](int k) const;

    bool is_zero() const;

    SeriesPoly& operator+=(const SeriesPoly& rhs);
    SeriesPoly& operator-=(const SeriesPoly& rhs);
    SeriesPoly& operator*=(const BigInt& scalar);

    friend SeriesPoly operator+(SeriesPoly lhs, const SeriesPoly& rhs) { return lhs += rhs; }
    friend SeriesPoly operator-(SeriesPoly lhs, const SeriesPoly& rhs) { return lhs -= rhs; }
    friend SeriesPoly operator*(SeriesPoly lhs, const BigInt& scalar) { return lhs *= scalar; }
    friend SeriesPoly operator*(const SeriesPoly& lhs, const SeriesPoly& rhs);

    SeriesPoly pow(unsigned exponent) const;
    /// Multiplies by t^k (k >= 0), keeping the order.
    SeriesPoly shifted(int k) const;
    /// Substitutes t = tau^factor and truncates at `new_order` in tau.
    SeriesPoly inflate(int factor, int new_order) const;
    SeriesPoly truncated(int new_order) const;

    friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Solution of U = 1 + sum_{j=1}^m C(m+j, m-j) t^j U^{2j}, to order n_max in t.
SeriesPoly u_series(int m, int n_max);

/// D = 1 + t U^2 + sum_{j=1}^m C(m+j-1, m-j) t^j U^{2j-1}, to order n_max in t.
SeriesPoly d_series(int m, int n_max);

/// All of L_1 .. L_{2m+1} (index 0 unused) solving
///   L_{2m+1} = tau, L_{2m} = tau^2 L_1, L_i = tau L_1 L_{i+1} + tau L_{i+2},
/// to order tau_order in tau.
std::vector<SeriesPoly> l_system(int m, int tau_order);

/// L_i from l_system().
SeriesPoly l_series(int m, int i, int tau_order);

} // namespace ffdyck

#endif
