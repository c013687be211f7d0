#include "ffdyck/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <utility>

#include "ffdyck/codes.hpp"
#include "ffdyck/enumeration.hpp"
#include "ffdyck/grammar.hpp"
#include "ffdyck/language.hpp"
#include "ffdyck/series.hpp"
#include "ffdyck/treebij.hpp"

namespace ffdyck {

Counters Counters::standard()
{
    return {[](int m, int n) { return ffdyck::count_u(m, n); }, [](int m, int n) { return ffdyck::count_d(m, n); }};
}

bool SelfcheckReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SelfcheckReport::to_text(bool with_timings) const
{
    std::ostringstream out;
    std::size_t failures = 0;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) {
            ++failures;
            out << ": " << c.detail;
        }
        if (with_timings)
            out << " (" << std::fixed << std::setprecision(3) << c.seconds << " s)";
        out << '\n';
    }
    out << (failures == 0 ? "PASS" : "FAIL") << ": " << checks.size() - failures << "/" << checks.size()
        << " checks passed\n";
    return out.str();
}

namespace {

// Returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

class Suite {
public:
    void add(std::string name, Check check) { pending_.emplace_back(std::move(name), std::move(check)); }

    SelfcheckReport run()
    {
        SelfcheckReport report;
        for (auto& [name, check] : pending_) {
            CheckResult r;
            r.name = name;
            const auto start = std::chrono::steady_clock::now();
            try {
                r.detail = check();
                r.passed = r.detail.empty();
            } catch (const std::exception& e) {
                r.detail = std::string("exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            report.checks.push_back(std::move(r));
        }
        return report;
    }

private:
    std::vector<std::pair<std::string, Check>> pending_;
};

std::string mismatch(const std::string& what, const BigInt& got, const BigInt& want)
{
    return what + ": got " + got.str() + ", expected " + want.str();
}

std::string mn(int m, int n)
{
    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

BigInt stirling2(int n, int k)
{
    std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(n) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
    s[0][0] = 1;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i)
        for (std::size_t j = 1; j <= i; ++j)
            s[i][j] = BigInt(j) * s[i - 1][j] + s[i - 1][j - 1];
    return k > n ? BigInt(0) : s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt power(const BigInt& base, int e)
{
    BigInt r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

void add_exactmath_checks(Suite& suite)
{
    suite.add("binomial Pascal rule n<=64", [] {
        for (int n = 1; n <= 64; ++n)
            for (int k = 1; k <= n; ++k)
                if (binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k))
                    return "C(" + std::to_string(n) + "," + std::to_string(k) + ")";
        return std::string();
    });
    suite.add("bell_partial vs Stirling S(n,k) n<=12", [] {
        const BellArgs ones(std::vector<BigInt>(12, 1));
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= n; ++k)
                if (bell_partial(n, k, ones) != stirling2(n, k))
                    return mismatch("B_{" + std::to_string(n) + "," + std::to_string(k) + "}",
                                    bell_partial(n, k, ones), stirling2(n, k));
        return std::string();
    });
    suite.add("two-argument Bell identity n<=12", [] {
        for (auto [c1, c2] : {std::pair{1, 1}, std::pair{2, 3}}) {
            const BellArgs xs{BigInt(c1), BigInt(2 * c2)};
            for (int n = 0; n <= 12; ++n)
                for (int j = 0; j <= n; ++j) {
                    if (2 * j < n)
                        continue;
                    const BigInt want = exact_divide(factorial(n), factorial(j), "n!/j!") * binomial(j, n - j)
                                        * power(c1, 2 * j - n) * power(c2, n - j);
                    if (bell_partial(n, j, xs) != want)
                        return mismatch("B_{" + std::to_string(n) + "," + std::to_string(j) + "}",
                                        bell_partial(n, j, xs), want);
                }
        }
        return std::string();
    });
    suite.add("Bell convolution identity n<=10", [] {
        for (int m = 1; m <= 3; ++m) {
            const auto weights = mu_sequence(m);
            const BellArgs z = factorial_weighted(weights);
            for (int n = 1; n <= 10; ++n)
                for (int k = 0; k < n; ++k) {
                    BigInt rhs = 0;
                    for (int l = k; l <= n - 1; ++l)
                        rhs += binomial(n - 1, l) * z[n - l] * bell_partial(l, k, z);
                    if (bell_partial(n, k + 1, z) != rhs)
                        return mismatch("m=" + std::to_string(m) + " B_{" + std::to_string(n) + ","
                                            + std::to_string(k + 1) + "}",
                                        bell_partial(n, k + 1, z), rhs);
                }
        }
        return std::string();
    });
}

void add_count_checks(Suite& suite, const Counters& counters, int n_max, int tau_order)
{
    for (int m = 1; m <= 3; ++m) {
        suite.add("three-way count_u m=" + std::to_string(m), [=] {
            const auto u = u_series(m, n_max);
            for (int n = 0; n <= n_max; ++n) {
                const BigInt bell = counters.count_u(m, n);
                if (bell != u[n])
                    return mismatch("bell vs series " + mn(m, n), bell, u[n]);
                const BigInt colored = count_colored_dyck(m, n);
                if (bell != colored)
                    return mismatch("bell vs colored " + mn(m, n), bell, colored);
            }
            return std::string();
        });
        suite.add("count_d vs d_series m=" + std::to_string(m), [=] {
            const auto d = d_series(m, n_max);
            for (int n = 0; n <= n_max; ++n)
                if (counters.count_d(m, n) != d[n])
                    return mismatch(mn(m, n), counters.count_d(m, n), d[n]);
            return std::string();
        });
        suite.add("u_series fixed-point residual m=" + std::to_string(m), [=] {
            const auto u = u_series(m, n_max);
            SeriesPoly rhs = SeriesPoly::constant(1, n_max);
            for (int j = 1; j <= m; ++j)
                rhs += u.pow(static_cast<unsigned>(2 * j)).shifted(j) * mu(m, j);
            return (rhs - u).is_zero() ? std::string() : std::string("nonzero residual");
        });
        suite.add("L-system identities m=" + std::to_string(m) + " order " + std::to_string(tau_order), [=] {
            const auto l = l_system(m, tau_order);
            const SeriesPoly& l1 = l[1];
            SeriesPoly rhs1(tau_order);
            SeriesPoly rhs2(tau_order);
            for (int j = 0; j <= m; ++j)
                rhs1 += l1.pow(static_cast<unsigned>(2 * j)).shifted(j + m + 1) * binomial(m + j, m - j);
            for (int j = 0; j <= m - 1; ++j)
                rhs2 += l1.pow(static_cast<unsigned>(2 * j + 1)).shifted(j + m + 1) * binomial(m + j, m - j - 1);
            if (l1 != rhs1)
                return std::string("L_1 closed form");
            if (l[2] != rhs2)
                return std::string("L_2 closed form");
            const int period = 2 * m + 3;
            const auto u = u_series(m, tau_order / period);
            if (l1 != u.inflate(period, tau_order).shifted(m + 1))
                return std::string("L_1 = tau^(m+1) U(tau^(2m+3))");
            return std::string();
        });
    }
    suite.add("count_u_m2_simplified vs count_u", [=] {
        for (int n = 1; n <= n_max; ++n)
            if (count_u_m2_simplified(n) != counters.count_u(2, n))
                return mismatch("n=" + std::to_string(n), count_u_m2_simplified(n), counters.count_u(2, n));
        return std::string();
    });
    suite.add("m=1 Catalan closed forms", [=] {
        const int top = std::min(n_max, 15);
        for (int n = 1; n <= top; ++n) {
            const BigInt cat = exact_divide(binomial(2 * n, n), n + 1, "C_n");
            const BigInt prev = exact_divide(binomial(2 * n - 2, n - 1), n, "C_{n-1}");
            if (counters.count_u(1, n) != cat)
                return mismatch("u_" + std::to_string(n), counters.count_u(1, n), cat);
            if (counters.count_d(1, n) != cat + prev)
                return mismatch("theta_" + std::to_string(n), counters.count_d(1, n), cat + prev);
        }
        return std::string();
    });
}

void add_language_checks(Suite& suite, const Counters& counters,
                         const std::vector<std::pair<int, int>>& pairs, bool full)
{
    for (auto [m, n] : pairs) {
        suite.add("count_u vs brute " + mn(m, n), [=] {
            const BigInt brute = brute_enumerate_U(Slope(m), n).size();
            const BigInt formula = counters.count_u(m, n);
            return formula == brute ? std::string() : mismatch("count_u", formula, brute);
        });
        suite.add("count_d vs brute " + mn(m, n), [=] {
            const BigInt brute = brute_enumerate_D(Slope(m), n).size();
            const BigInt formula = counters.count_d(m, n);
            return formula == brute ? std::string() : mismatch("count_d", formula, brute);
        });
        suite.add("grammar vs brute " + mn(m, n), [=] {
            if (generate_U_words(m, n) != brute_enumerate_U(Slope(m), n))
                return std::string("U word sets differ");
            if (generate_D_words(m, n) != brute_enumerate_D(Slope(m), n))
                return std::string("D word sets differ");
            return std::string();
        });
        suite.add("grammar unambiguity " + mn(m, n), [=] {
            const auto u = generate_U_words(m, n);
            const auto d = generate_D_words(m, n);
            if (std::adjacent_find(u.begin(), u.end()) != u.end())
                return std::string("duplicate U derivation");
            if (std::adjacent_find(d.begin(), d.end()) != d.end())
                return std::string("duplicate D derivation");
            if (BigInt(u.size()) != counters.count_u(m, n))
                return mismatch("|U|", BigInt(u.size()), counters.count_u(m, n));
            if (BigInt(d.size()) != counters.count_d(m, n))
                return mismatch("|D|", BigInt(d.size()), counters.count_d(m, n));
            return std::string();
        });
    }
    for (int m = 1; m <= 2; ++m) {
        const int max_len = full ? 2 * m + 3 + 7 : 2 * m + 3;
        suite.add("lattice predicate vs is_in_U m=" + std::to_string(m) + " len<=" + std::to_string(max_len), [=] {
            const Slope s(m);
            for (int len = 0; len <= max_len; ++len)
                for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
                    std::string letters(static_cast<std::size_t>(len), 'a');
                    for (int i = 0; i < len; ++i)
                        if ((mask >> i) & 1U)
                            letters[static_cast<std::size_t>(i)] = 'b';
                    const Word w(letters);
                    if (is_in_U(w, s) != is_in_U_lattice(w, s))
                        return "disagree on " + letters;
                }
            return std::string();
        });
    }
    for (int m = 1; m <= 3; ++m) {
        if (!full && m == 3)
            break;
        suite.add("primitive count m=" + std::to_string(m), [=] {
            for (int j = 1; j <= m; ++j) {
                const BigInt got = primitive_U_words(m, j).size();
                if (got != mu(m, j))
                    return mismatch("j=" + std::to_string(j), got, mu(m, j));
            }
            return std::string();
        });
    }
}

void add_tree_checks(Suite& suite, const Counters& counters, int n_max)
{
    for (int n = 1; n <= n_max; ++n) {
        suite.add("tree round-trip n=" + std::to_string(n), [=] {
            for (const auto& w : generate_U_words(2, n)) {
                const auto t = word_to_tree(w);
                if (t.edge_count() != static_cast<std::size_t>(2 * n))
                    return "edge count for " + w.letters();
                if (tree_to_word(t) != w)
                    return "word " + w.letters();
            }
            for (const auto& t : enumerate_trees(n))
                if (word_to_tree(tree_to_word(t)) != t)
                    return "tree " + t.serialize();
            return std::string();
        });
    }
    for (int n = 1; n <= n_max + 1; ++n) {
        suite.add("tree count n=" + std::to_string(n), [=] {
            const BigInt got = enumerate_trees(n).size();
            return got == counters.count_u(2, n) ? std::string() : mismatch("trees", got, counters.count_u(2, n));
        });
    }
}

void add_code_checks(Suite& suite, const Counters& counters, std::initializer_list<std::pair<int, int>> codes)
{
    for (auto [m, n_max] : codes) {
        suite.add("cross-bifix-free build_code m=" + std::to_string(m) + " n_max=" + std::to_string(n_max), [=] {
            const auto code = build_code(m, n_max);
            const auto report = verify_cross_bifix_free(code.words);
            if (!report.ok) {
                const auto& v = *report.first_violation;
                return "overlap " + v.prefix_word + " / " + v.suffix_word + " at " + std::to_string(v.overlap);
            }
            for (const auto& w : code.words)
                if (!has_split_valuation_property(Word::from_binary(w), code.slope))
                    return "split valuation fails for " + w;
            for (int n = 1; n <= n_max; ++n) {
                const auto len = static_cast<std::size_t>((2 * m + 3) * n);
                const BigInt count = std::count(code.lengths.begin(), code.lengths.end(), len);
                if (count != counters.count_d(m, n))
                    return mismatch("code size at n=" + std::to_string(n), count, counters.count_d(m, n));
            }
            return std::string();
        });
    }
}

} // namespace

SelfcheckReport run_selfcheck(CheckLevel level, const Counters& counters)
{
    const bool full = level == CheckLevel::full;
    Suite suite;
    add_exactmath_checks(suite);
    add_count_checks(suite, counters, full ? 20 : 2, full ? 40 : 20);

    std::vector<std::pair<int, int>> pairs{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    if (!full)
        std::erase_if(pairs, [](const auto& p) { return p.second > 2; });
    add_language_checks(suite, counters, pairs, full);
    add_tree_checks(suite, counters, full ? 3 : 2);
    if (full)
        add_code_checks(suite, counters, {{1, 4}, {2, 3}});
    else
        add_code_checks(suite, counters, {{1, 2}, {2, 2}});
    return suite.run();
}

} // namespace ffdyck
