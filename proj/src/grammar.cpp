#include "ffdyck/grammar.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ffdyck/errors.hpp"

namespace ffdyck {

Grammar::Grammar(int m) : m_(m)
{
    if (m < 1)
        throw std::invalid_argument("slope parameter m must be >= 1, got " + std::to_string(m));
    const int top = 2 * m + 1;
    productions_.resize(static_cast<std::size_t>(top) + 1);

    using S = Symbol;
    productions_[D] = {D, {{}, {S::nt(L(1)), S::nt(L(1)), S::t('b')}, {S::nt(L(2)), S::t('b')}}};
    productions_[static_cast<std::size_t>(top)] = {top, {{S::t('a')}}};
    productions_[static_cast<std::size_t>(top - 1)] = {top - 1, {{S::t('a'), S::nt(L(1)), S::t('b')}}};
    for (int i = 1; i <= top - 2; ++i) {
        productions_[static_cast<std::size_t>(i)]
            = {i, {{S::nt(L(i + 1)), S::nt(L(1)), S::t('b')}, {S::nt(L(i + 2)), S::t('b')}}};
    }
}

std::string Grammar::name(int nonterminal) const
{
    return nonterminal == D ? "D" : "L_" + std::to_string(nonterminal);
}

std::string Grammar::to_string() const
{
    std::ostringstream out;
    for (const auto& p : productions_) {
        out << name(p.lhs) << " =";
        for (std::size_t k = 0; k < p.alternatives.size(); ++k) {
            out << (k == 0 ? " " : " + ");
            if (p.alternatives[k].empty())
                out << "eps";
            for (const auto& sym : p.alternatives[k]) {
                if (sym.kind == Symbol::Kind::terminal)
                    out << sym.letter;
                else
                    out << name(sym.nonterminal);
            }
        }
        out << '\n';
    }
    return out.str();
}

LengthExpander::LengthExpander(const Grammar& g) : grammar_(g)
{
    // Least fixed point of the minimal derivable length per nonterminal.
    constexpr int unreachable = std::numeric_limits<int>::max() / 4;
    const auto& prods = grammar_.productions();
    min_length_.assign(prods.size(), unreachable);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : prods) {
            for (const auto& alt : p.alternatives) {
                int len = 0;
                for (const auto& sym : alt)
                    len += sym.kind == Symbol::Kind::terminal ? 1 : min_length_[static_cast<std::size_t>(sym.nonterminal)];
                len = std::min(len, unreachable);
                if (len < min_length_[static_cast<std::size_t>(p.lhs)]) {
                    min_length_[static_cast<std::size_t>(p.lhs)] = len;
                    changed = true;
                }
            }
        }
    }
}

const std::vector<std::string>& LengthExpander::expand(int nonterminal, int length)
{
    const auto key = std::make_pair(nonterminal, length);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    std::vector<std::string> words;
    if (length >= min_length_[static_cast<std::size_t>(nonterminal)]) {
        std::string prefix;
        for (const auto& alt : grammar_.productions()[static_cast<std::size_t>(nonterminal)].alternatives)
            expand_alternative(alt, 0, length, prefix, words);
    }
    std::sort(words.begin(), words.end());
    return memo_.emplace(key, std::move(words)).first->second;
}

void LengthExpander::expand_alternative(const Alternative& alt, std::size_t pos, int remaining,
                                        std::string& prefix, std::vector<std::string>& out)
{
    if (pos == alt.size()) {
        if (remaining == 0)
            out.push_back(prefix);
        return;
    }
    int rest_min = 0;
    for (std::size_t k = pos + 1; k < alt.size(); ++k)
        rest_min += alt[k].kind == Symbol::Kind::terminal ? 1 : min_length_[static_cast<std::size_t>(alt[k].nonterminal)];

    const Symbol& sym = alt[pos];
    if (sym.kind == Symbol::Kind::terminal) {
        if (remaining - 1 < rest_min)
            return;
        prefix.push_back(sym.letter);
        expand_alternative(alt, pos + 1, remaining - 1, prefix, out);
        prefix.pop_back();
        return;
    }

    const int lo = min_length_[static_cast<std::size_t>(sym.nonterminal)];
    for (int len = lo; len <= remaining - rest_min; ++len) {
        // Recursive expansion may grow memo_; map nodes stay put.
        const std::vector<std::string>& parts = expand(sym.nonterminal, len);
        const std::size_t mark = prefix.size();
        for (const auto& part : parts) {
            prefix += part;
            expand_alternative(alt, pos + 1, remaining - len, prefix, out);
            prefix.resize(mark);
        }
    }
}

namespace {

std::vector<Word> to_words(const std::vector<std::string>& raw)
{
    std::vector<Word> out;
    out.reserve(raw.size());
    for (const auto& s : raw)
        out.emplace_back(s);
    return out;
}

// Number of a's in a word of the given length and total valuation, or -1.
int a_count_for(Slope s, int length, int value)
{
    const int numerator = value + Slope::fall() * length;
    if (numerator < 0 || numerator % s.period() != 0)
        return -1;
    return numerator / s.period();
}

} // namespace

std::vector<Word> generate_L(int m, int i, int target_len, std::uint64_t cap)
{
    const Slope s(m);
    if (i < 1 || i > 2 * m + 1)
        throw std::invalid_argument("generate_L: index must be in 1..2m+1");
    if (target_len < 0)
        throw std::invalid_argument("generate_L: negative length");
    const int as = a_count_for(s, target_len, i);
    if (as < 0 || as > target_len)
        return {};
    enforce_cap(target_len, as, cap, "generate_L");

    const Grammar g(m);
    LengthExpander expander(g);
    return to_words(expander.expand(Grammar::L(i), target_len));
}

std::vector<Word> generate_U_words(int m, int n, std::uint64_t cap)
{
    if (n < 0)
        throw std::invalid_argument("generate_U_words: n must be >= 0");
    const Slope s(m);
    const auto wrapped = generate_L(m, 1, s.period() * n + m + 1, cap);
    std::vector<Word> out;
    out.reserve(wrapped.size());
    for (const auto& w : wrapped) {
        // L_1 = a U b^m: every word starts with a and ends with b^m.
        out.push_back(w.substr(1, w.size() - 1 - static_cast<std::size_t>(m)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> generate_D_words(int m, int n, std::uint64_t cap)
{
    if (n < 1)
        throw std::invalid_argument("generate_D_words: n must be >= 1");
    const Slope s(m);
    const int length = s.period() * n;
    enforce_cap(length, 2 * n, cap, "generate_D_words");
    const Grammar g(m);
    LengthExpander expander(g);
    return to_words(expander.expand(Grammar::D, length));
}

bool is_insertion(const Word& w, Slope s)
{
    const std::size_t len = w.size();
    const auto unit = static_cast<std::size_t>(s.period());
    for (std::size_t ulen = unit; ulen < len; ulen += unit) {
        for (std::size_t start = 1; start + ulen <= len; ++start) {
            if (w[start - 1] != 'a')
                continue;
            const Word inner = w.substr(start, ulen);
            if (!is_in_U(inner, s))
                continue;
            if (is_in_U(w.substr(0, start) + w.substr(start + ulen), s))
                return true;
        }
    }
    return false;
}

std::vector<Word> primitive_U_words(int m, int j, std::uint64_t cap)
{
    if (j < 1)
        throw std::invalid_argument("primitive_U_words: j must be >= 1");
    const Slope s(m);
    std::vector<Word> out;
    for (auto& w : generate_U_words(m, j, cap)) {
        if (!is_insertion(w, s))
            out.push_back(std::move(w));
    }
    return out;
}

} // namespace ffdyck
