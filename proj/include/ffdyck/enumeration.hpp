#ifndef FFDYCK_ENUMERATION_HPP
#define FFDYCK_ENUMERATION_HPP

#include <span>
#include <vector>

#include "ffdyck/exactmath.hpp"

namespace ffdyck {

/// mu_j = C(m+j, m-j); zero for j > m.
BigInt mu(int m, int j);

/// mu_1 .. mu_m.
std::vector<BigInt> mu_sequence(int m);

/// (1! mu_1, 2! mu_2, ...) for arbitrary weights mu_1, mu_2, ...
BellArgs factorial_weighted(std::span<const BigInt> weights);

/// Number of U-words of length (2m+3)n, by the partial-Bell closed form
///   u_n = (1/n!) sum_{k=1}^n C(2n, k-1) (k-1)! B_{n,k}(1!mu_1, 2!mu_2, ...).
BigInt count_u(int m, int n);

/// The same closed form for an arbitrary weight sequence mu_1, mu_2, ...
/// (weights[0] is mu_1).
BigInt count_u_weighted(int n, std::span<const BigInt> weights);

/// Binomial-sum form valid for m = 2:
///   u_n = 1/(2n+1) sum_{k=ceil(n/2)}^n C(2n+1, k) C(k, n-k) 3^{2k-n}.
BigInt count_u_m2_simplified(int n);

/// Delta_{nu,l} = (2l+1)/(2nu+2l+1) sum_{k=0}^{nu} C(2nu+2l+1, k) (k!/nu!) B_{nu,k}(1!mu_1, ...).
BigInt delta(int m, int nu, int l);

/// Number of D-words of length (2m+3)n:
///   theta_n = sum_{l=0}^{min(m, n-1)} C(m+l+1, m-l) Delta_{n-l-1,l}.
BigInt count_d(int m, int n);

/// Dyck words of semilength 2n built from blocks d and u^{2j}d, each maximal
/// ascent of length 2j weighted by mu_j. Shares no code with count_u.
BigInt count_colored_dyck(int m, int n);

} // namespace ffdyck

#endif
