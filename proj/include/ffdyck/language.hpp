#ifndef FFDYCK_LANGUAGE_HPP
#define FFDYCK_LANGUAGE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ffdyck {

/// Valuation scheme h(a) = 2m+1, h(b) = -2 for a slope (2m+1)/2, m >= 1.
class Slope {
public:
    explicit Slope(int m);

    int m() const { return m_; }
    int rise() const { return 2 * m_ + 1; }
    static constexpr int fall() { return 2; }
    /// Length unit of valuation-0 words: 2m+3.
    int period() const { return 2 * m_ + 3; }

    friend bool operator==(Slope, Slope) = default;

private:
    int m_;
};

/// A finite word over {a, b}. The empty word is valid.
class Word {
public:
    Word() = default;
    /// Throws InvalidWord if `letters` contains anything but 'a' and 'b'.
    explicit Word(std::string letters);

    /// Reads the binary rendering 0 -> a, 1 -> b.
    static Word from_binary(std::string_view bits);
    /// Reads `text` in either alphabet: "ab" or "01".
    static Word parse(std::string_view text, std::string_view alphabet);

    const std::string& letters() const { return letters_; }
    std::string to_binary() const;
    std::string render(std::string_view alphabet) const;

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
    friend Word operator+(const Word& lhs, const Word& rhs);

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string letters_;
};

/// values[i] = h(first i letters); values[0] = 0.
struct PrefixProfile {
    std::vector<std::int64_t> values;

    std::int64_t total() const { return values.back(); }
    std::int64_t min() const;
};

std::int64_t valuation(const Word& w, Slope s);
PrefixProfile prefix_profile(const Word& w, Slope s);

bool is_dyck(const Word& w, Slope s);
/// No nonempty proper factor of `w` is a Dyck word.
bool is_factor_free(const Word& w, Slope s);
bool is_in_D(const Word& w, Slope s);
/// U-word test: empty, or valuation 0 with some prefix below 0, every prefix
/// above -2m, and a w b^m factor-free (the L_1 = a U b^m border).
bool is_in_U(const Word& w, Slope s);

/// a w b^m.
Word bordered(const Word& w, Slope s);

/// Membership in U read off the east-north lattice path (a = east, b = north):
/// ends on y = (2m+1)x/2, crosses it, stays strictly below y = (2m+1)x/2 + m,
/// and the bordered path of a w b^m joins no two points of a slope line while
/// staying weakly below it. Written in coordinates, independently of is_in_U.
bool is_in_U_lattice(const Word& w, Slope s);

/// Default candidate cap for exhaustive search, 10^7, overridden by the
/// DYCK_BRUTE_CAP environment variable.
std::uint64_t default_brute_cap();

/// Number of words with the given letter counts, saturating at UINT64_MAX.
std::uint64_t candidate_count(int length, int a_count);

/// Throws CapExceeded when C(length, a_count) exceeds `cap`.
void enforce_cap(int length, int a_count, std::uint64_t cap, std::string_view what);

/// All U-words of length (2m+3)n, lexicographic (a < b).
std::vector<Word> brute_enumerate_U(Slope s, int n, std::uint64_t cap = default_brute_cap());
/// All D-words of length (2m+3)n, n >= 1, lexicographic (a < b).
std::vector<Word> brute_enumerate_D(Slope s, int n, std::uint64_t cap = default_brute_cap());

} // namespace ffdyck

#endif
