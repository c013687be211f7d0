// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "ffdyck/codes.hpp"
#include "ffdyck/enumeration.hpp"
#include "ffdyck/exactmath.hpp"
#include "ffdyck/grammar.hpp"
#include "ffdyck/language.hpp"
#include "ffdyck/series.hpp"
#include "ffdyck/treebij.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace ffdyck;

namespace {

// Empty string means success; otherwise the first discrepancy found.
using Outcome = std::string;

template <class A, class B>
Outcome differ(const std::string& what, const A& got, const B& want)
{
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    return os.str();
}

std::vector<std::string> sorted_letters(const std::vector<Word>& ws, std::string_view alphabet = "ab")
{
    std::vector<std::string> out;
    for (const auto& w : ws)
        out.push_back(w.render(alphabet));
    std::sort(out.begin(), out.end());
    return out;
}

std::string fixture(const std::string& name)
{
    return std::string(FFDYCK_FIXTURE_DIR) + "/" + name;
}

BigInt catalan(int n)
{
    return binomial(2 * n, n) / (n + 1);
}

Outcome catalan_specialization()
{
    const std::vector<BigInt> want{1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 1; n <= 10; ++n) {
        if (count_u(1, n) != want[n - 1])
            return differ("u_" + std::to_string(n), count_u(1, n), want[n - 1]);
        if (catalan(n) != want[n - 1])
            return differ("C_" + std::to_string(n), catalan(n), want[n - 1]);
        const BigInt theta = catalan(n) + catalan(n - 1);
        if (count_d(1, n) != theta)
            return differ("theta_" + std::to_string(n), count_d(1, n), theta);
    }
    return {};
}

Outcome slope_five_halves_sequences()
{
    const std::vector<BigInt> u{3, 19, 153, 1390, 13581, 139315, 1479855};
    const std::vector<BigInt> d{3, 13, 94, 810, 7667, 76998, 805560};
    for (int n = 1; n <= 7; ++n) {
        if (count_u(2, n) != u[n - 1])
            return differ("u_" + std::to_string(n), count_u(2, n), u[n - 1]);
        if (count_d(2, n) != d[n - 1])
            return differ("theta_" + std::to_string(n), count_d(2, n), d[n - 1]);
    }
    return {};
}

Outcome three_way_agreement()
{
    for (int m = 1; m <= 3; ++m) {
        const auto us = u_series(m, 20);
        const auto ds = d_series(m, 20);
        for (int n = 0; n <= 20; ++n) {
            const std::string at = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            if (count_u(m, n) != us[n])
                return differ("bell vs series" + at, count_u(m, n), us[n]);
            if (count_colored_dyck(m, n) != us[n])
                return differ("colored vs series" + at, count_colored_dyck(m, n), us[n]);
            if (count_d(m, n) != ds[n])
                return differ("count_d vs series" + at, count_d(m, n), ds[n]);
        }
    }
    return {};
}

Outcome brute_force_ground_truth()
{
    const std::vector<std::pair<int, int>> pairs{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1},
                                                 {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    for (auto [m, n] : pairs) {
        const std::string at = " m=" + std::to_string(m) + " n=" + std::to_string(n);
        const BigInt bu = brute_enumerate_U(Slope(m), n).size();
        const BigInt bd = brute_enumerate_D(Slope(m), n).size();
        if (bu != count_u(m, n))
            return differ("|U|" + at, bu, count_u(m, n));
        if (bd != count_d(m, n))
            return differ("|D|" + at, bd, count_d(m, n));
    }
    return {};
}

Outcome reference_listing()
{
    auto want = ffdyck::testing::read_fixture(fixture("d32_words.txt"));
    std::sort(want.begin(), want.end());
    std::vector<std::string> got;
    const std::vector<std::size_t> per_length{2, 3, 7, 19};
    for (int n = 1; n <= 4; ++n) {
        const auto r = ffdyck::testing::run_command("'" + std::string(FFDYCK_CLI_PATH) + "' generate --m 1 --n "
                                                    + std::to_string(n) + " --language D --alphabet 01");
        if (r.exit_code != 0)
            return "generate exited with " + std::to_string(r.exit_code);
        const auto lines = ffdyck::testing::split_lines(r.out);
        if (lines.size() != per_length[n - 1])
            return differ("words at n=" + std::to_string(n), lines.size(), per_length[n - 1]);
        got.insert(got.end(), lines.begin(), lines.end());
    }
    std::sort(got.begin(), got.end());
    if (got != want)
        return differ("listing size or content", got.size(), want.size());
    return {};
}

Outcome building_blocks()
{
    const std::vector<std::vector<std::size_t>> counts{{1}, {3, 1}, {6, 5, 1}};
    std::vector<std::string> m2;
    std::vector<std::string> m3;
    for (int m = 1; m <= 3; ++m)
        for (int j = 1; j <= m; ++j) {
            const auto ws = primitive_U_words(m, j);
            if (ws.size() != counts[m - 1][j - 1])
                return differ("primitives m=" + std::to_string(m) + " j=" + std::to_string(j), ws.size(),
                              counts[m - 1][j - 1]);
            auto& sink = m == 2 ? m2 : m3;
            if (m >= 2)
                for (const auto& w : ws)
                    sink.push_back(w.letters());
        }
    std::sort(m2.begin(), m2.end());
    std::sort(m3.begin(), m3.end());
    const std::vector<std::string> m2_want{"abbbabb", "abbbabbbabbbab", "abbbbab", "babbbab"};
    if (m2 != m2_want)
        return "slope 5/2 primitives differ from the expected four words";
    auto m3_want = ffdyck::testing::read_fixture(fixture("u72_primitives.txt"));
    std::sort(m3_want.begin(), m3_want.end());
    if (m3 != m3_want)
        return "slope 7/2 primitives differ from the 12-word table";
    return {};
}

Outcome tree_bijection()
{
    std::size_t words = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : generate_U_words(2, n)) {
            ++words;
            const ColoredTree t = word_to_tree(w);
            if (tree_to_word(t) != w)
                return "round-trip fails on " + w.letters();
            if (t.edge_count() != static_cast<std::size_t>(2 * n))
                return "wrong edge count for " + w.letters();
        }
    if (words != 175)
        return differ("U words of length 7, 14, 21", words, 175);
    for (int n = 1; n <= 4; ++n) {
        const BigInt trees = enumerate_trees(n).size();
        if (trees != count_u(2, n))
            return differ("trees with " + std::to_string(2 * n) + " edges", trees, count_u(2, n));
    }
    const Word fig("abbbbaabbbabbbaababbbabbbbabbbbbabb");
    const ColoredTree t = word_to_tree(fig);
    if (t.edge_count() != 10)
        return differ("edges of the 35-letter example", t.edge_count(), 10);
    if (tree_to_word(t) != fig)
        return "35-letter example does not decode back to itself";
    return {};
}

Outcome cross_bifix_free()
{
    for (auto [m, n_max] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}}) {
        const auto code = build_code(m, n_max);
        if (m == 1 && code.words.size() != 31)
            return differ("build_code(1, 4) size", code.words.size(), 31);
        const auto report = verify_cross_bifix_free(code.words);
        if (!report.ok)
            return "overlap " + report.first_violation->prefix_word + " / " + report.first_violation->suffix_word;
        for (const auto& w : code.words)
            if (!has_split_valuation_property(Word::from_binary(w), Slope(m)))
                return "split valuation fails on " + w;
    }
    return {};
}

Outcome series_identities()
{
    const int order = 40;
    for (int m = 1; m <= 3; ++m) {
        const auto l = l_system(m, order);
        SeriesPoly rhs1(order);
        SeriesPoly rhs2(order);
        for (int j = 0; j <= m; ++j)
            rhs1 += l[1].pow(static_cast<unsigned>(2 * j)).shifted(j + m + 1) * binomial(m + j, m - j);
        for (int j = 0; j <= m - 1; ++j)
            rhs2 += l[1].pow(static_cast<unsigned>(2 * j + 1)).shifted(j + m + 1) * binomial(m + j, m - j - 1);
        const std::string at = " m=" + std::to_string(m);
        if (l[1] != rhs1)
            return "L_1 identity" + at;
        if (l[2] != rhs2)
            return "L_2 identity" + at;
        const int period = 2 * m + 3;
        if (l[1] != u_series(m, order / period).inflate(period, order).shifted(m + 1))
            return "L_1 factorization" + at;
    }
    return {};
}

Outcome selfcheck_full()
{
    const auto r = ffdyck::testing::run_command("'" + std::string(FFDYCK_CLI_PATH) + "' selfcheck --level full");
    if (r.exit_code != 0)
        return "selfcheck exited with " + std::to_string(r.exit_code);
    if (r.out.find("FAIL") != std::string::npos)
        return "selfcheck reported a failure";
    for (const char* name : {"bell_partial vs Stirling", "two-argument Bell identity", "Bell convolution identity",
                             "grammar unambiguity", "grammar vs brute"})
        if (r.out.find(std::string("PASS ") + name) == std::string::npos)
            return std::string("missing check: ") + name;
    return {};
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds; // 0: no limit
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Catalan specialization", 1.0, catalan_specialization},
        {2, "slope 5/2 sequences", 1.0, slope_five_halves_sequences},
        {3, "three-way count agreement", 10.0, three_way_agreement},
        {4, "exhaustive search ground truth", 60.0, brute_force_ground_truth},
        {5, "slope 3/2 word listing", 0.0, reference_listing},
        {6, "building blocks", 0.0, building_blocks},
        {7, "tree bijection", 10.0, tree_bijection},
        {8, "cross-bifix-free codes", 5.0, cross_bifix_free},
        {9, "series identities", 5.0, series_identities},
        {10, "selfcheck full", 0.0, selfcheck_full},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.empty() && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            std::ostringstream os;
            os << "took " << seconds << " s, limit " << c.limit_seconds << " s";
            outcome = os.str();
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (outcome.empty() ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") " << seconds << " s";
        if (!outcome.empty()) {
            line << ": " << outcome;
            ++failures;
        }
        std::cout << line.str() << '\n';
    }
    return failures == 0 ? 0 : 1;
}
