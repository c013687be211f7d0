// ffdyck: count, generate and verify factor-free Dyck words of slope (2m+1)/2.
//
// Exit codes: 0 ok, 1 selfcheck failure or internal error, 2 bad arguments,
// 3 brute-force cap exceeded (see DYCK_BRUTE_CAP).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffdyck/codes.hpp"
#include "ffdyck/enumeration.hpp"
#include "ffdyck/errors.hpp"
#include "ffdyck/grammar.hpp"
#include "ffdyck/language.hpp"
#include "ffdyck/selfcheck.hpp"
#include "ffdyck/series.hpp"
#include "ffdyck/treebij.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_bad_args = 2;
constexpr int exit_cap = 3;

struct Options {
    int m = 1;
    int n = 1;
    std::string language = "U";
    std::string method = "bell";
    std::string alphabet;
    std::string format = "text";
    std::string word;
    std::string encode;
    std::string decode;
    std::string level = "quick";
};

ffdyck::BigInt run_count(const Options& o)
{
    using namespace ffdyck;
    const bool u = o.language == "U";
    if (o.method == "bell")
        return u ? count_u(o.m, o.n) : count_d(o.m, o.n);
    if (o.method == "series")
        return u ? u_series(o.m, o.n)[o.n] : d_series(o.m, o.n)[o.n];
    if (o.method == "colored") {
        if (!u)
            throw std::invalid_argument("method 'colored' counts U only");
        return count_colored_dyck(o.m, o.n);
    }
    if (o.n == 0)
        return 1;
    const Slope s(o.m);
    return u ? brute_enumerate_U(s, o.n).size() : brute_enumerate_D(s, o.n).size();
}

int cmd_count(const Options& o)
{
    std::cout << run_count(o) << '\n';
    return exit_ok;
}

int cmd_generate(const Options& o)
{
    using namespace ffdyck;
    const std::string alphabet = o.alphabet.empty() ? "ab" : o.alphabet;
    std::vector<Word> words;
    if (o.n == 0)
        words.emplace_back();
    else
        words = o.language == "U" ? generate_U_words(o.m, o.n) : generate_D_words(o.m, o.n);

    std::vector<std::string> rendered;
    for (const auto& w : words)
        rendered.push_back(w.render(alphabet));
    if (o.format == "json") {
        std::cout << nlohmann::ordered_json(rendered).dump() << '\n';
    } else {
        for (const auto& w : rendered)
            std::cout << w << '\n';
    }
    return exit_ok;
}

int cmd_verify(const Options& o)
{
    using namespace ffdyck;
    const Slope s(o.m);
    const Word w = Word::parse(o.word, o.alphabet.empty() ? "ab" : o.alphabet);
    const auto profile = prefix_profile(w, s);
    nlohmann::ordered_json report;
    report["valuation"] = profile.total();
    report["min_prefix"] = profile.min();
    report["is_dyck"] = is_dyck(w, s);
    report["is_factor_free"] = is_factor_free(w, s);
    report["in_U"] = is_in_U(w, s);
    report["in_D"] = is_in_D(w, s);
    std::cout << report.dump() << '\n';
    return exit_ok;
}

int cmd_tree(const Options& o)
{
    using namespace ffdyck;
    if (!o.encode.empty()) {
        std::cout << tree_to_json(word_to_tree(Word(o.encode))).dump() << '\n';
        return exit_ok;
    }
    const auto parsed = nlohmann::json::parse(o.decode);
    std::cout << tree_to_word(tree_from_json(parsed)).letters() << '\n';
    return exit_ok;
}

int cmd_codes(const Options& o)
{
    using namespace ffdyck;
    const std::string alphabet = o.alphabet.empty() ? "01" : o.alphabet;
    auto code = build_code(o.m, o.n);
    const auto report = verify_cross_bifix_free(code.words);
    if (!report.ok) {
        std::cerr << "error: generated code is not cross-bifix-free\n";
        return exit_check_failed;
    }
    if (alphabet == "ab") {
        for (auto& w : code.words)
            w = Word::from_binary(w).letters();
    }
    if (o.format == "json")
        std::cout << code.to_json().dump() << '\n';
    else
        std::cout << code.to_text();
    return exit_ok;
}

int cmd_selfcheck(const Options& o)
{
    using namespace ffdyck;
    const auto report = run_selfcheck(o.level == "full" ? CheckLevel::full : CheckLevel::quick);
    std::cout << report.to_text(o.level == "full");
    return report.passed() ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Factor-free generalized Dyck words of slope (2m+1)/2"};
    app.require_subcommand(1);
    Options o;

    const auto languages = CLI::IsMember({"U", "D"});
    const auto alphabets = CLI::IsMember({"ab", "01"});
    const auto formats = CLI::IsMember({"text", "json"});

    auto* count = app.add_subcommand("count", "Count U- or D-words of length (2m+3)n");
    count->add_option("--m", o.m, "Slope parameter, slope (2m+1)/2")->required()->check(CLI::Range(1, 1000));
    count->add_option("--n", o.n, "Length in units of 2m+3")->required()->check(CLI::Range(0, 100000));
    count->add_option("--language", o.language, "U or D")->check(languages);
    count->add_option("--method", o.method, "bell, series, colored or brute")
        ->check(CLI::IsMember({"bell", "series", "colored", "brute"}));

    auto* generate = app.add_subcommand("generate", "List U- or D-words of length (2m+3)n");
    generate->add_option("--m", o.m, "Slope parameter")->required()->check(CLI::Range(1, 1000));
    generate->add_option("--n", o.n, "Length in units of 2m+3")->required()->check(CLI::Range(0, 100000));
    generate->add_option("--language", o.language, "U or D")->check(languages);
    generate->add_option("--alphabet", o.alphabet, "ab (default) or 01")->check(alphabets);
    generate->add_option("--format", o.format, "text or json")->check(formats);

    auto* verify = app.add_subcommand("verify", "Report membership of a single word");
    verify->add_option("--m", o.m, "Slope parameter")->required()->check(CLI::Range(1, 1000));
    verify->add_option("--word", o.word, "The word")->required();
    verify->add_option("--alphabet", o.alphabet, "ab (default) or 01")->check(alphabets);

    auto* tree = app.add_subcommand("tree", "Slope 5/2 word <-> colored tree bijection");
    auto* enc = tree->add_option("--encode", o.encode, "U-word to encode as a tree");
    auto* dec = tree->add_option("--decode", o.decode, "Tree JSON to decode into a word");
    enc->excludes(dec);
    tree->require_option(1);

    auto* codes = app.add_subcommand("codes", "Cross-bifix-free code from D-words");
    codes->add_option("--m", o.m, "Slope parameter")->required()->check(CLI::Range(1, 1000));
    codes->add_option("--n-max", o.n, "Largest length unit")->required()->check(CLI::Range(1, 100000));
    codes->add_option("--alphabet", o.alphabet, "01 (default) or ab")->check(alphabets);
    codes->add_option("--format", o.format, "text or json")->check(formats);

    auto* selfcheck = app.add_subcommand("selfcheck", "Run the cross-module invariant suite");
    selfcheck->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_args;
    }

    try {
        if (count->parsed())
            return cmd_count(o);
        if (generate->parsed())
            return cmd_generate(o);
        if (verify->parsed())
            return cmd_verify(o);
        if (tree->parsed())
            return cmd_tree(o);
        if (codes->parsed())
            return cmd_codes(o);
        return cmd_selfcheck(o);
    } catch (const ffdyck::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_cap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_args;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_args;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_check_failed;
    }
}
