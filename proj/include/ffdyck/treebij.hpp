#ifndef FFDYCK_TREEBIJ_HPP
#define FFDYCK_TREEBIJ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ffdyck/language.hpp"

namespace ffdyck {

// Colored plane trees for slope 5/2 (m = 2).
//
// Internal nodes have outdegree 2 or 4. A binary node is blue, red or green;
// a 4-ary node and a leaf carry no color. Each node type fixes the labels read
// when walking around it counterclockwise:
//
//            down-left   between children   up-right
//   blue        ba            bbba              b
//   red         a             bbbba             b
//   green       a             bbba              bb
//   4-ary       a             bbba (x3)         b

enum class Color { none, blue, red, green };

class ColoredTree {
public:
    /// A single leaf.
    ColoredTree() = default;

    static ColoredTree leaf() { return {}; }
    /// Throws MalformedTree on a color/outdegree mismatch.
    static ColoredTree node(Color color, std::vector<ColoredTree> children);

    Color color() const { return color_; }
    const std::vector<ColoredTree>& children() const { return children_; }
    bool is_leaf() const { return children_.empty(); }

    std::size_t edge_count() const;

    /// Preorder rendering: L for a leaf, B/R/G/F (F = four children) followed
    /// by the children in parentheses, e.g. "R(LF(LLG(B(LL)L)L))".
    std::string serialize() const;

    friend bool operator==(const ColoredTree&, const ColoredTree&) = default;

private:
    Color color_ = Color::none;
    std::vector<ColoredTree> children_;
};

/// Checks color/outdegree consistency over the whole tree.
void validate(const ColoredTree& t);

/// Left-to-right traversal decoder. Throws NotInU unless `w` is a nonempty
/// U-word for m = 2.
ColoredTree word_to_tree(const Word& w);

/// Counterclockwise traversal encoder; output is a U-word of length 7 * edges / 2.
Word tree_to_word(const ColoredTree& t);

/// All colored trees with 2n edges, ordered by serialize().
std::vector<ColoredTree> enumerate_trees(int n, std::uint64_t cap = default_brute_cap());

/// {"color": "blue"|"red"|"green"|"none", "children": [...]}.
nlohmann::ordered_json tree_to_json(const ColoredTree& t);
/// Throws MalformedTree on schema or invariant violations.
ColoredTree tree_from_json(const nlohmann::json& j);

std::string color_name(Color c);

} // namespace ffdyck

#endif
