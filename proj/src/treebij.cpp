#include "ffdyck/treebij.hpp"

#include <algorithm>
#include <map>

#include "ffdyck/errors.hpp"
#include "ffdyck/exactmath.hpp"

namespace ffdyck {

namespace {

const Slope five_halves{2};

char color_letter(const ColoredTree& t)
{
    switch (t.color()) {
    case Color::blue:
        return 'B';
    case Color::red:
        return 'R';
    case Color::green:
        return 'G';
    case Color::none:
        break;
    }
    return t.is_leaf() ? 'L' : 'F';
}

} // namespace

std::string color_name(Color c)
{
    switch (c) {
    case Color::blue:
        return "blue";
    case Color::red:
        return "red";
    case Color::green:
        return "green";
    case Color::none:
        break;
    }
    return "none";
}

namespace {

// Children built through node() are already valid, so only `t` itself is checked.
void check_node(const ColoredTree& t)
{
    const auto degree = t.children().size();
    const bool colored = t.color() != Color::none;
    if (degree == 2 && !colored)
        throw MalformedTree("binary node without a color");
    if ((degree == 0 || degree == 4) && colored)
        throw MalformedTree("only binary nodes carry a color");
    if (degree != 0 && degree != 2 && degree != 4)
        throw MalformedTree("node of outdegree " + std::to_string(degree) + "; expected 0, 2 or 4");
}

} // namespace

void validate(const ColoredTree& t)
{
    check_node(t);
    for (const auto& c : t.children())
        validate(c);
}

ColoredTree ColoredTree::node(Color color, std::vector<ColoredTree> children)
{
    ColoredTree t;
    t.color_ = color;
    t.children_ = std::move(children);
    check_node(t);
    return t;
}

std::size_t ColoredTree::edge_count() const
{
    std::size_t edges = children_.size();
    for (const auto& c : children_)
        edges += c.edge_count();
    return edges;
}

std::string ColoredTree::serialize() const
{
    std::string out(1, color_letter(*this));
    if (!is_leaf()) {
        out += '(';
        for (const auto& c : children_)
            out += c.serialize();
        out += ')';
    }
    return out;
}

namespace {

void emit(const ColoredTree& t, std::string& out)
{
    if (t.is_leaf())
        return;
    const auto& kids = t.children();
    out += t.color() == Color::blue ? "ba" : "a";
    emit(kids[0], out);
    const char* between = t.color() == Color::red ? "bbbba" : "bbba";
    for (std::size_t k = 1; k < kids.size(); ++k) {
        out += between;
        emit(kids[k], out);
    }
    out += t.color() == Color::green ? "bb" : "b";
}

// Tree under construction, addressed by index; node 0 is the root.
class TreeBuilder {
public:
    TreeBuilder() : nodes_(1) {}

    int root() const { return 0; }
    int parent(int v) const { return nodes_[static_cast<std::size_t>(v)].parent; }
    std::size_t degree(int v) const { return nodes_[static_cast<std::size_t>(v)].children.size(); }
    Color color(int v) const { return nodes_[static_cast<std::size_t>(v)].color; }
    void paint(int v, Color c) { nodes_[static_cast<std::size_t>(v)].color = c; }
    bool is_first_child(int v) const
    {
        return nodes_[static_cast<std::size_t>(parent(v))].children.front() == v;
    }

    int add_child(int v)
    {
        const int child = static_cast<int>(nodes_.size());
        nodes_.push_back({v, {}, Color::none});
        nodes_[static_cast<std::size_t>(v)].children.push_back(child);
        return child;
    }

    ColoredTree freeze(int v) const
    {
        const auto& n = nodes_[static_cast<std::size_t>(v)];
        std::vector<ColoredTree> kids;
        for (int c : n.children)
            kids.push_back(freeze(c));
        return ColoredTree::node(n.color, std::move(kids));
    }

private:
    struct Node {
        int parent;
        std::vector<int> children;
        Color color;
    };
    std::vector<Node> nodes_;
};

[[noreturn]] void lost(const std::string& what, std::size_t pos)
{
    throw MalformedTraversal("word_to_tree: " + what + " at letter " + std::to_string(pos));
}

// Walks the word left to right. Each 'a' creates one edge; the run of b's in
// front of it decides where:
//   run 0 (a)      left edge below the cursor
//   run 1 (ba)     left edge below the cursor, which turns blue
//   run 3 (bbba)   next edge from the cursor's parent
//   run 4 (bbbba)  right edge of a red parent if the cursor is a first child,
//                  otherwise one step up (b) followed by bbba
//   longer runs    up-steps first, then bbba or bbbba as above
// An up-step from the last child of a binary node with left label a that is
// not red is bb and paints the node green; every other up-step is b.
class Decoder {
public:
    ColoredTree run(const std::string& w)
    {
        int cursor = tree_.root();
        std::size_t run_length = 0;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            if (w[pos] == 'b') {
                ++run_length;
                continue;
            }
            cursor = place_edge(cursor, run_length, pos);
            run_length = 0;
        }
        while (cursor != tree_.root())
            cursor = step_up(cursor, run_length, w.size());
        if (run_length != 0)
            lost("trailing letters after returning to the root", w.size());
        return tree_.freeze(tree_.root());
    }

private:
    int place_edge(int cursor, std::size_t run_length, std::size_t pos)
    {
        if (run_length <= 1) {
            if (tree_.degree(cursor) != 0)
                lost("descent from a node that already has children", pos);
            if (run_length == 1)
                tree_.paint(cursor, Color::blue);
            return tree_.add_child(cursor);
        }

        std::size_t remaining = run_length;
        for (;;) {
            if (cursor == tree_.root())
                lost("moved above the root", pos);
            const int up = tree_.parent(cursor);
            if (remaining == 4 && tree_.is_first_child(cursor) && tree_.color(up) != Color::blue) {
                tree_.paint(up, Color::red);
                return tree_.add_child(up);
            }
            if (remaining == 3) {
                if (!accepts_sibling(up))
                    lost("bbba after a completed node", pos);
                return tree_.add_child(up);
            }
            cursor = step_up(cursor, remaining, pos);
            if (remaining < 3)
                lost("b-run too short for a sibling edge", pos);
        }
    }

    bool accepts_sibling(int v) const
    {
        const auto d = tree_.degree(v);
        if (tree_.color(v) == Color::blue)
            return d == 1;
        return tree_.color(v) == Color::none && d >= 1 && d <= 3;
    }

    // Moves from `cursor` to its parent, consuming the parent's up-label from
    // `remaining`.
    int step_up(int cursor, std::size_t& remaining, std::size_t pos)
    {
        if (cursor == tree_.root())
            lost("moved above the root", pos);
        const int up = tree_.parent(cursor);
        const auto d = tree_.degree(up);
        std::size_t cost = 1;
        if (tree_.color(up) == Color::none) {
            if (d == 2) {
                cost = 2;
                tree_.paint(up, Color::green);
            } else if (d != 4) {
                lost("left a node of outdegree " + std::to_string(d), pos);
            }
        } else if (d != 2) {
            lost("left an incomplete binary node", pos);
        }
        if (remaining < cost)
            lost("b-run ends inside an up-label", pos);
        remaining -= cost;
        return up;
    }

    TreeBuilder tree_;
};

} // namespace

ColoredTree word_to_tree(const Word& w)
{
    if (w.empty() || !is_in_U(w, five_halves))
        throw NotInU("word_to_tree: '" + w.letters() + "' is not a nonempty U-word for slope 5/2");
    return Decoder().run(w.letters());
}

Word tree_to_word(const ColoredTree& t)
{
    validate(t);
    std::string out;
    emit(t, out);
    return Word(std::move(out));
}

std::vector<ColoredTree> enumerate_trees(int n, std::uint64_t cap)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_trees: n must be >= 1");

    // Sizes first, so an oversized request fails before allocating.
    std::vector<BigInt> size(static_cast<std::size_t>(n) + 1);
    size[0] = 1;
    for (int h = 1; h <= n; ++h) {
        BigInt total = 0;
        for (int a = 0; a <= h - 1; ++a)
            total += 3 * size[static_cast<std::size_t>(a)] * size[static_cast<std::size_t>(h - 1 - a)];
        for (int a = 0; a <= h - 2; ++a)
            for (int b = 0; a + b <= h - 2; ++b)
                for (int c = 0; a + b + c <= h - 2; ++c)
                    total += size[static_cast<std::size_t>(a)] * size[static_cast<std::size_t>(b)]
                             * size[static_cast<std::size_t>(c)] * size[static_cast<std::size_t>(h - 2 - a - b - c)];
        size[static_cast<std::size_t>(h)] = total;
    }
    if (size[static_cast<std::size_t>(n)] > cap)
        throw CapExceeded("enumerate_trees: " + size[static_cast<std::size_t>(n)].str() + " trees exceed cap "
                          + std::to_string(cap));

    // by_half[h]: trees with 2h edges.
    std::vector<std::vector<ColoredTree>> by_half(static_cast<std::size_t>(n) + 1);
    by_half[0].push_back(ColoredTree::leaf());
    for (int h = 1; h <= n; ++h) {
        auto& out = by_half[static_cast<std::size_t>(h)];
        for (Color c : {Color::blue, Color::red, Color::green})
            for (int a = 0; a <= h - 1; ++a)
                for (const auto& left : by_half[static_cast<std::size_t>(a)])
                    for (const auto& right : by_half[static_cast<std::size_t>(h - 1 - a)])
                        out.push_back(ColoredTree::node(c, {left, right}));
        for (int a = 0; a <= h - 2; ++a)
            for (int b = 0; a + b <= h - 2; ++b)
                for (int c = 0; a + b + c <= h - 2; ++c) {
                    const int d = h - 2 - a - b - c;
                    for (const auto& t1 : by_half[static_cast<std::size_t>(a)])
                        for (const auto& t2 : by_half[static_cast<std::size_t>(b)])
                            for (const auto& t3 : by_half[static_cast<std::size_t>(c)])
                                for (const auto& t4 : by_half[static_cast<std::size_t>(d)])
                                    out.push_back(ColoredTree::node(Color::none, {t1, t2, t3, t4}));
                }
    }

    auto result = std::move(by_half[static_cast<std::size_t>(n)]);
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(result.size());
    for (std::size_t k = 0; k < result.size(); ++k)
        keys.emplace_back(result[k].serialize(), k);
    std::sort(keys.begin(), keys.end());
    std::vector<ColoredTree> sorted;
    sorted.reserve(result.size());
    for (const auto& [key, k] : keys)
        sorted.push_back(std::move(result[k]));
    return sorted;
}

nlohmann::ordered_json tree_to_json(const ColoredTree& t)
{
    nlohmann::ordered_json j;
    j["color"] = color_name(t.color());
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : t.children())
        j["children"].push_back(tree_to_json(c));
    return j;
}

ColoredTree tree_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("color") || !j["color"].is_string())
        throw MalformedTree("tree node must be an object with a string \"color\"");
    static const std::map<std::string, Color> colors{
        {"none", Color::none}, {"blue", Color::blue}, {"red", Color::red}, {"green", Color::green}};
    const auto it = colors.find(j["color"].get<std::string>());
    if (it == colors.end())
        throw MalformedTree("unknown color \"" + j["color"].get<std::string>() + "\"");
    std::vector<ColoredTree> kids;
    if (j.contains("children")) {
        if (!j["children"].is_array())
            throw MalformedTree("\"children\" must be an array");
        for (const auto& c : j["children"])
            kids.push_back(tree_from_json(c));
    }
    return ColoredTree::node(it->second, std::move(kids));
}

} // namespace ffdyck
