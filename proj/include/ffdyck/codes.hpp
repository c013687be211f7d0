#ifndef FFDYCK_CODES_HPP
#define FFDYCK_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ffdyck/language.hpp"

namespace ffdyck {

/// Variable-length binary code made of factor-free Dyck words (0 = a, 1 = b).
struct CodeSet {
    Slope slope;
    std::vector<std::string> words; // lexicographic
    std::vector<std::size_t> lengths; // parallel to words

    std::string to_text() const;
    /// {"slope": "3/2", "words": [...]}.
    nlohmann::ordered_json to_json() const;
};

/// All D-words of lengths (2m+3)n for n = 1..n_max.
CodeSet build_code(int m, int n_max, std::uint64_t cap = default_brute_cap());

/// A prefix of `prefix_word` of length `overlap` equals a suffix of `suffix_word`.
struct Overlap {
    std::string prefix_word;
    std::string suffix_word;
    std::size_t overlap;

    friend auto operator<=>(const Overlap&, const Overlap&) = default;
};

struct CrossBifixReport {
    bool ok = true;
    std::optional<Overlap> first_violation;
};

/// Checks every ordered pair (w1, w2), w1 = w2 included: no nonempty proper
/// prefix of w1 may equal a suffix of w2. On failure reports the smallest
/// (w1, w2, overlap) in lexicographic order.
CrossBifixReport verify_cross_bifix_free(const std::vector<std::string>& words);

/// Every split w = w1 w2 into nonempty parts has h(w1) > 0 and h(w2) < 0.
bool has_split_valuation_property(const Word& w, Slope s);

} // namespace ffdyck

#endif
