#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffdyck/codes.hpp"
#include "ffdyck/enumeration.hpp"
#include "ffdyck/errors.hpp"
#include "ffdyck/grammar.hpp"
#include "ffdyck/language.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <set>

using namespace ffdyck;

namespace {

std::vector<std::string> letters_of(const std::vector<Word>& ws)
{
    std::vector<std::string> out;
    for (const auto& w : ws)
        out.push_back(w.letters());
    return out;
}

// Words of valuation i with no nonempty Dyck factor whose proper nonempty
// prefixes all lie strictly above i. Scans all 2^len strings.
std::vector<std::string> l_words_by_scan(int m, int i, int len)
{
    const long up = 2 * m + 1;
    std::vector<std::string> out;
    for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
        std::string w;
        for (int k = 0; k < len; ++k)
            w.push_back(((mask >> k) & 1U) ? 'b' : 'a');
        long h = 0;
        bool ok = true;
        for (int k = 0; k < len && ok; ++k) {
            h += w[k] == 'a' ? up : -2;
            ok = k + 1 == len || h > i;
        }
        if (!ok || h != i)
            continue;
        for (int p = 0; p < len && ok; ++p) {
            long v = 0;
            for (int q = p; q < len; ++q) {
                v += w[q] == 'a' ? up : -2;
                if (v < 0)
                    break;
                if (v == 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok)
            out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("grammar text")
{
    CHECK(Grammar(1).to_string() ==
          "D = eps + L_1L_1b + L_2b\n"
          "L_1 = L_2L_1b + L_3b\n"
          "L_2 = aL_1b\n"
          "L_3 = a\n");
    const Grammar g(2);
    CHECK(g.productions().size() == 6);
    CHECK(g.name(Grammar::D) == "D");
    CHECK(g.name(Grammar::L(4)) == "L_4");
    CHECK_THROWS_AS(Grammar(0), std::invalid_argument);
}

TEST_CASE("generate_L examples")
{
    CHECK(letters_of(generate_L(1, 3, 1)) == std::vector<std::string>{"a"});
    // aab has valuation 4 when m = 1; the shortest L_1 word is ab.
    CHECK(letters_of(generate_L(1, 1, 2)) == std::vector<std::string>{"ab"});
    CHECK(generate_L(1, 1, 3).empty());
    CHECK(letters_of(generate_L(2, 4, 5)) == std::vector<std::string>{"aabbb"});
    CHECK(generate_L(2, 4, 8).empty());
}

TEST_CASE("generate_L matches exhaustive scan")
{
    for (int m = 1; m <= 2; ++m)
        for (int i = 1; i <= 2 * m + 1; ++i)
            for (int len = 1; len <= 15; ++len) {
                CAPTURE(m);
                CAPTURE(i);
                CAPTURE(len);
                REQUIRE(sorted(letters_of(generate_L(m, i, len))) == l_words_by_scan(m, i, len));
            }
}

TEST_CASE("generated U and D examples")
{
    CHECK(letters_of(generate_U_words(2, 1)) == std::vector<std::string>{"abbbabb", "abbbbab", "babbbab"});
    CHECK(letters_of(generate_U_words(1, 0)) == std::vector<std::string>{""});
    CHECK(generate_D_words(1, 1).size() == 2);
    CHECK(generate_D_words(2, 2).size() == 13);
}

TEST_CASE("grammar output equals exhaustive search and is unambiguous")
{
    const std::vector<std::pair<int, int>> pairs{{1, 1}, {1, 4}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
    for (auto [m, n] : pairs) {
        CAPTURE(m);
        CAPTURE(n);
        const Slope s(m);
        const auto gu = letters_of(generate_U_words(m, n));
        const auto gd = letters_of(generate_D_words(m, n));
        CHECK(std::set<std::string>(gu.begin(), gu.end()).size() == gu.size());
        CHECK(std::set<std::string>(gd.begin(), gd.end()).size() == gd.size());
        CHECK(sorted(gu) == sorted(letters_of(brute_enumerate_U(s, n))));
        CHECK(sorted(gd) == sorted(letters_of(brute_enumerate_D(s, n))));
        CHECK(BigInt(gu.size()) == count_u(m, n));
        CHECK(BigInt(gd.size()) == count_d(m, n));
    }
}

TEST_CASE("D words of positive length form a cross-bifix-free set")
{
    std::vector<std::string> all;
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : generate_D_words(2, n))
            all.push_back(w.letters());
    CHECK(verify_cross_bifix_free(all).ok);
}

TEST_CASE("primitive U words")
{
    CHECK(letters_of(primitive_U_words(2, 1)) == std::vector<std::string>{"abbbabb", "abbbbab", "babbbab"});
    CHECK(letters_of(primitive_U_words(2, 2)) == std::vector<std::string>{"abbbabbbabbbab"});
    for (int m = 1; m <= 3; ++m)
        for (int j = 1; j <= m; ++j)
            CHECK(BigInt(primitive_U_words(m, j).size()) == mu(m, j));
}

TEST_CASE("primitive U words for slope 7/2 match the reference table")
{
    std::vector<std::string> expected =
        ffdyck::testing::read_fixture(std::string(FFDYCK_FIXTURE_DIR) + "/u72_primitives.txt");
    std::vector<std::string> got;
    for (int j = 1; j <= 3; ++j)
        for (const auto& w : primitive_U_words(3, j))
            got.push_back(w.letters());
    CHECK(sorted(got) == sorted(expected));
}

TEST_CASE("insertion detection")
{
    const Slope s(2);
    CHECK_FALSE(is_insertion(Word("abbbabbbabbbab"), s));
    // abbbabb spliced in right after the leading a of abbbabb.
    CHECK(is_insertion(Word("aabbbabbbbbabb"), s));
    CHECK_FALSE(is_insertion(Word("abbbabb"), s));
}

TEST_CASE("cap is enforced")
{
    CHECK_THROWS_AS(generate_U_words(2, 6, 1000), CapExceeded);
    CHECK_THROWS_AS(generate_L(2, 1, 31, 10), CapExceeded);
}
