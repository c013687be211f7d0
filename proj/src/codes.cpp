#include "ffdyck/codes.hpp"

#include <algorithm>
#include <sstream>

#include "ffdyck/grammar.hpp"

namespace ffdyck {

std::string CodeSet::to_text() const
{
    std::ostringstream out;
    for (const auto& w : words)
        out << w << '\n';
    return out.str();
}

nlohmann::ordered_json CodeSet::to_json() const
{
    nlohmann::ordered_json j;
    j["slope"] = std::to_string(slope.rise()) + "/2";
    j["words"] = words;
    return j;
}

CodeSet build_code(int m, int n_max, std::uint64_t cap)
{
    if (n_max < 1)
        throw std::invalid_argument("build_code: n_max must be >= 1");
    CodeSet code{Slope(m), {}, {}};
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& w : generate_D_words(m, n, cap))
            code.words.push_back(w.to_binary());
    }
    std::sort(code.words.begin(), code.words.end());
    for (const auto& w : code.words)
        code.lengths.push_back(w.size());
    return code;
}

CrossBifixReport verify_cross_bifix_free(const std::vector<std::string>& words)
{
    std::vector<std::string> sorted = words;
    std::sort(sorted.begin(), sorted.end());

    CrossBifixReport report;
    for (const auto& w1 : sorted) {
        for (const auto& w2 : sorted) {
            const std::size_t longest = w1.empty() ? 0 : std::min(w1.size() - 1, w2.size());
            for (std::size_t k = 1; k <= longest; ++k) {
                if (w1.compare(0, k, w2, w2.size() - k, k) == 0) {
                    report.ok = false;
                    report.first_violation = Overlap{w1, w2, k};
                    return report;
                }
            }
        }
    }
    return report;
}

bool has_split_valuation_property(const Word& w, Slope s)
{
    const auto p = prefix_profile(w, s);
    const auto total = p.total();
    for (std::size_t i = 1; i < w.size(); ++i) {
        const auto head = p.values[i];
        if (head <= 0 || total - head >= 0)
            return false;
    }
    return true;
}

} // namespace ffdyck
