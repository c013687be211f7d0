#include "ffdyck/language.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "ffdyck/errors.hpp"
#include "ffdyck/exactmath.hpp"

namespace ffdyck {

Slope::Slope(int m) : m_(m)
{
    if (m < 1)
        throw std::invalid_argument("slope parameter m must be >= 1, got " + std::to_string(m));
}

Word::Word(std::string letters) : letters_(std::move(letters))
{
    for (char c : letters_) {
        if (c != 'a' && c != 'b')
            throw InvalidWord("word contains letter '" + std::string(1, c) + "', expected a or b");
    }
}

Word Word::from_binary(std::string_view bits)
{
    return parse(bits, "01");
}

Word Word::parse(std::string_view text, std::string_view alphabet)
{
    if (alphabet == "ab")
        return Word(std::string(text));
    if (alphabet != "01")
        throw std::invalid_argument("unknown alphabet '" + std::string(alphabet) + "'");
    std::string letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c == '0')
            letters.push_back('a');
        else if (c == '1')
            letters.push_back('b');
        else
            throw InvalidWord("binary word contains '" + std::string(1, c) + "', expected 0 or 1");
    }
    return Word(std::move(letters));
}

std::string Word::to_binary() const
{
    return render("01");
}

std::string Word::render(std::string_view alphabet) const
{
    if (alphabet == "ab")
        return letters_;
    if (alphabet != "01")
        throw std::invalid_argument("unknown alphabet '" + std::string(alphabet) + "'");
    std::string bits = letters_;
    std::replace(bits.begin(), bits.end(), 'a', '0');
    std::replace(bits.begin(), bits.end(), 'b', '1');
    return bits;
}

Word Word::substr(std::size_t pos, std::size_t len) const
{
    Word w;
    w.letters_ = letters_.substr(pos, len);
    return w;
}

Word operator+(const Word& lhs, const Word& rhs)
{
    Word w;
    w.letters_ = lhs.letters_ + rhs.letters_;
    return w;
}

std::int64_t PrefixProfile::min() const
{
    return *std::min_element(values.begin(), values.end());
}

std::int64_t valuation(const Word& w, Slope s)
{
    const auto as = std::count(w.letters().begin(), w.letters().end(), 'a');
    const auto bs = static_cast<std::int64_t>(w.size()) - as;
    return as * s.rise() - bs * Slope::fall();
}

PrefixProfile prefix_profile(const Word& w, Slope s)
{
    PrefixProfile p;
    p.values.reserve(w.size() + 1);
    p.values.push_back(0);
    for (char c : w.letters())
        p.values.push_back(p.values.back() + (c == 'a' ? s.rise() : -Slope::fall()));
    return p;
}

bool is_dyck(const Word& w, Slope s)
{
    const auto p = prefix_profile(w, s);
    return p.total() == 0 && p.min() >= 0;
}

namespace {

// Factor (i, j] is Dyck iff profile[j] == profile[i] and nothing in between
// dips below profile[i].
bool has_proper_dyck_factor(const std::vector<std::int64_t>& profile)
{
    const std::size_t len = profile.size() - 1;
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j <= len; ++j) {
            if (profile[j] < profile[i])
                break;
            if (profile[j] == profile[i] && !(i == 0 && j == len))
                return true;
        }
    }
    return false;
}

} // namespace

bool is_factor_free(const Word& w, Slope s)
{
    return !has_proper_dyck_factor(prefix_profile(w, s).values);
}

bool is_in_D(const Word& w, Slope s)
{
    return is_dyck(w, s) && is_factor_free(w, s);
}

bool is_in_U(const Word& w, Slope s)
{
    if (w.empty())
        return true;
    const auto p = prefix_profile(w, s);
    if (p.total() != 0)
        return false;
    const auto lowest = p.min();
    if (lowest >= 0 || lowest <= -2 * s.m())
        return false;
    if (has_proper_dyck_factor(p.values))
        return false;
    // U-words are exactly the w with a w b^m in L_1, so factors reaching into
    // the border count too.
    return is_factor_free(bordered(w, s), s);
}

Word bordered(const Word& w, Slope s)
{
    return Word("a") + w + Word(std::string(static_cast<std::size_t>(s.m()), 'b'));
}

bool is_in_U_lattice(const Word& w, Slope s)
{
    if (w.empty())
        return true;

    struct Point {
        std::int64_t x;
        std::int64_t y;
    };
    std::vector<Point> path{{0, 0}};
    for (char c : w.letters()) {
        Point next = path.back();
        if (c == 'a')
            ++next.x;
        else
            ++next.y;
        path.push_back(next);
    }

    const std::int64_t num = s.rise(); // slope num/2
    // Signed vertical offset (doubled) of q above the slope line through p.
    auto above = [num](const Point& p, const Point& q) { return 2 * (q.y - p.y) - num * (q.x - p.x); };

    const Point origin{0, 0};
    if (above(origin, path.back()) != 0)
        return false;

    bool crosses = false;
    for (const Point& q : path) {
        const auto off = above(origin, q);
        if (off > 0)
            crosses = true;
        if (off >= 2 * s.m())
            return false;
    }
    if (!crosses)
        return false;

    // Factor-freeness is read on the path of a w b^m: one east step before,
    // m north steps after.
    std::vector<Point> full{{-1, 0}};
    full.insert(full.end(), path.begin(), path.end());
    for (int k = 1; k <= s.m(); ++k)
        full.push_back({path.back().x, path.back().y + k});

    const std::size_t last = full.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t j = i + 1; j <= last; ++j) {
            if (i == 0 && j == last)
                continue;
            if (above(full[i], full[j]) != 0)
                continue;
            bool below = true;
            for (std::size_t k = i + 1; k < j && below; ++k)
                below = above(full[i], full[k]) <= 0;
            if (below)
                return false;
        }
    }
    return true;
}

std::uint64_t default_brute_cap()
{
    constexpr std::uint64_t fallback = 10'000'000;
    const char* env = std::getenv("DYCK_BRUTE_CAP");
    if (env == nullptr || *env == '\0')
        return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        return fallback;
    return parsed;
}

std::uint64_t candidate_count(int length, int a_count)
{
    const BigInt c = binomial(length, a_count);
    if (c > std::numeric_limits<std::uint64_t>::max())
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(c);
}

void enforce_cap(int length, int a_count, std::uint64_t cap, std::string_view what)
{
    const auto candidates = candidate_count(length, a_count);
    if (candidates > cap) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(candidates)
                          + " candidates exceed cap " + std::to_string(cap));
    }
}

namespace {

enum class Target { U, D };

// Depth-first search over words with fixed letter counts. Letters are tried
// a-first, so results come out in lexicographic order.
class BruteSearch {
public:
    BruteSearch(Slope s, int n, Target target)
        : slope_(s), target_(target), length_(s.period() * n), as_left_(2 * n), bs_left_(s.rise() * n)
    {
        buffer_.reserve(static_cast<std::size_t>(length_));
        profile_.reserve(static_cast<std::size_t>(length_) + 1);
        profile_.push_back(0);
    }

    std::vector<Word> run()
    {
        descend();
        return std::move(found_);
    }

private:
    void descend()
    {
        if (as_left_ == 0 && bs_left_ == 0) {
            Word w(buffer_);
            if (target_ == Target::U ? is_in_U(w, slope_) : is_in_D(w, slope_))
                found_.push_back(std::move(w));
            return;
        }
        if (as_left_ > 0) {
            --as_left_;
            step('a', slope_.rise());
            ++as_left_;
        }
        if (bs_left_ > 0) {
            --bs_left_;
            step('b', -Slope::fall());
            ++bs_left_;
        }
    }

    void step(char letter, int delta)
    {
        const std::int64_t value = profile_.back() + delta;
        const std::int64_t floor = target_ == Target::U ? -2 * slope_.m() : -1;
        if (value > floor) {
            buffer_.push_back(letter);
            profile_.push_back(value);
            if (!closes_dyck_factor())
                descend();
            profile_.pop_back();
            buffer_.pop_back();
        }
    }

    // Whether the newest position ends a nonempty Dyck factor other than the
    // whole word.
    bool closes_dyck_factor() const
    {
        const std::size_t j = profile_.size() - 1;
        const std::int64_t level = profile_[j];
        const bool complete = static_cast<int>(j) == length_;
        std::int64_t interior_min = std::numeric_limits<std::int64_t>::max();
        for (std::size_t i = j; i-- > 0;) {
            if (interior_min < level)
                return false;
            if (profile_[i] == level && !(complete && i == 0))
                return true;
            interior_min = std::min(interior_min, profile_[i]);
        }
        return false;
    }

    Slope slope_;
    Target target_;
    int length_;
    int as_left_;
    int bs_left_;
    std::string buffer_;
    std::vector<std::int64_t> profile_;
    std::vector<Word> found_;
};

void check_n(int n, std::string_view what)
{
    if (n < 1)
        throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

} // namespace

std::vector<Word> brute_enumerate_U(Slope s, int n, std::uint64_t cap)
{
    check_n(n, "brute_enumerate_U");
    enforce_cap(s.period() * n, 2 * n, cap, "brute_enumerate_U");
    return BruteSearch(s, n, Target::U).run();
}

std::vector<Word> brute_enumerate_D(Slope s, int n, std::uint64_t cap)
{
    check_n(n, "brute_enumerate_D");
    enforce_cap(s.period() * n, 2 * n, cap, "brute_enumerate_D");
    return BruteSearch(s, n, Target::D).run();
}

} // namespace ffdyck
