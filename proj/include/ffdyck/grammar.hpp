#ifndef FFDYCK_GRAMMAR_HPP
#define FFDYCK_GRAMMAR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffdyck/language.hpp"

namespace ffdyck {

struct Symbol {
    enum class Kind { terminal, nonterminal };

    Kind kind;
    char letter = 0;     // terminal
    int nonterminal = 0; // index into Grammar::productions()

    static Symbol t(char c) { return {Kind::terminal, c, 0}; }
    static Symbol nt(int index) { return {Kind::nonterminal, 0, index}; }
};

using Alternative = std::vector<Symbol>;

struct Production {
    int lhs;
    std::vector<Alternative> alternatives;
};

/// The factor-free grammar for slope (2m+1)/2:
///
///   D       = eps + L_1 L_1 b + L_2 b
///   L_{2m+1} = a
///   L_{2m}   = a L_1 b
///   L_i      = L_{i+1} L_1 b + L_{i+2} b      (1 <= i <= 2m-1)
///
/// Nonterminal 0 is D, nonterminal i is L_i.
class Grammar {
public:
    explicit Grammar(int m);

    int m() const { return m_; }
    static constexpr int D = 0;
    static int L(int i) { return i; }

    const std::vector<Production>& productions() const { return productions_; }
    std::string name(int nonterminal) const;
    /// Human-readable rules, one per line.
    std::string to_string() const;

private:
    int m_;
    std::vector<Production> productions_;
};

/// Length-indexed memoized expansion of a grammar: (nonterminal, length) -> words.
///
/// Words are collected without deduplication, so an ambiguous grammar shows up
/// as repeated entries. Each returned list is sorted.
class LengthExpander {
public:
    explicit LengthExpander(const Grammar& g);

    const std::vector<std::string>& expand(int nonterminal, int length);

private:
    void expand_alternative(const Alternative& alt, std::size_t pos, int remaining, std::string& prefix,
                            std::vector<std::string>& out);

    const Grammar& grammar_;
    std::vector<int> min_length_;
    std::map<std::pair<int, int>, std::vector<std::string>> memo_;
};

/// All words of `target_len` letters derivable from L_i.
std::vector<Word> generate_L(int m, int i, int target_len, std::uint64_t cap = default_brute_cap());

/// U-words of length (2m+3)n, read off L_1 = a U b^m.
std::vector<Word> generate_U_words(int m, int n, std::uint64_t cap = default_brute_cap());

/// Nonempty D-words of length (2m+3)n (n >= 1).
std::vector<Word> generate_D_words(int m, int n, std::uint64_t cap = default_brute_cap());

/// U-words of length (2m+3)j that are not the insertion of a nonempty U-word
/// into a shorter nonempty U-word.
std::vector<Word> primitive_U_words(int m, int j, std::uint64_t cap = default_brute_cap());

/// Whether `w` = p u s for nonempty U-words u and p s, with p ending in `a`.
bool is_insertion(const Word& w, Slope s);

} // namespace ffdyck

#endif
