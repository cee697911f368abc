#include "kbox/trees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kbox {

KAryTree KAryTree::empty(int arity)
{
    if (arity < 1) {
        throw std::invalid_argument("tree arity must be >= 1");
    }
    return KAryTree(arity, nullptr);
}

KAryTree KAryTree::node(std::vector<KAryTree> children)
{
    if (children.empty()) {
        throw std::invalid_argument("a node needs at least one child slot");
    }
    const int arity = static_cast<int>(children.size());
    std::size_t nodes = 1;
    for (const auto& c : children) {
        if (c.arity() != arity) {
            throw std::invalid_argument("child arity " + std::to_string(c.arity()) + " differs from " +
                                        std::to_string(arity));
        }
        nodes += c.node_count();
    }
    return KAryTree(arity, std::make_shared<const Node>(Node{std::move(children), nodes}));
}

const std::vector<KAryTree>& KAryTree::children() const
{
    if (!node_) {
        throw std::logic_error("empty tree has no children");
    }
    return node_->children;
}

bool KAryTree::operator==(const KAryTree& other) const
{
    if (arity_ != other.arity_ || is_empty() != other.is_empty()) {
        return false;
    }
    if (is_empty() || node_ == other.node_) {
        return true;
    }
    return node_->nodes == other.node_->nodes && node_->children == other.node_->children;
}

namespace {

void write_tree(const KAryTree& t, std::string& out)
{
    if (t.is_empty()) {
        out.push_back('-');
        return;
    }
    out.push_back('(');
    bool first = true;
    for (const auto& c : t.children()) {
        if (!first) {
            out.push_back(' ');
        }
        first = false;
        write_tree(c, out);
    }
    out.push_back(')');
}

class TreeParser {
public:
    TreeParser(std::string_view text, int arity) : text_(text), arity_(arity) {}

    KAryTree parse_all()
    {
        KAryTree t = parse();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("tree text: " + why + " at index " + std::to_string(pos_), pos_);
    }

    KAryTree parse()
    {
        if (pos_ >= text_.size()) {
            fail("unexpected end");
        }
        if (text_[pos_] == '-') {
            ++pos_;
            return KAryTree::empty(arity_);
        }
        if (text_[pos_] != '(') {
            fail("expected '-' or '('");
        }
        ++pos_;
        std::vector<KAryTree> kids;
        while (true) {
            kids.push_back(parse());
            if (pos_ >= text_.size()) {
                fail("unterminated node");
            }
            if (text_[pos_] == ')') {
                ++pos_;
                break;
            }
            if (text_[pos_] != ' ') {
                fail("expected ' ' or ')'");
            }
            ++pos_;
        }
        if (static_cast<int>(kids.size()) != arity_) {
            fail("node has " + std::to_string(kids.size()) + " slots, expected " + std::to_string(arity_));
        }
        return KAryTree::node(std::move(kids));
    }

    std::string_view text_;
    int arity_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_string(const KAryTree& t)
{
    std::string out;
    write_tree(t, out);
    return out;
}

KAryTree parse_tree(std::string_view text, int arity)
{
    return TreeParser(text, arity).parse_all();
}

std::size_t TreeTuple::total_nodes() const
{
    std::size_t n = 0;
    for (const auto& t : trees) {
        n += t.node_count();
    }
    return n;
}

std::string to_string(const TreeTuple& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.trees.size(); ++i) {
        if (i > 0) {
            out.push_back(';');
        }
        out += to_string(t.trees[i]);
    }
    return out;
}

TreeTuple parse_tree_tuple(std::string_view text, int arity)
{
    TreeTuple out;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(';', start);
        std::string_view item = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
        out.trees.push_back(parse_tree(item, arity));
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return out;
}

namespace {

// Calls visit(sizes) for every way to split `total` into `slots` non-negative
// parts, lexicographic in the parts.
void for_each_split(std::size_t slots, std::size_t total, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> sizes(slots, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
        if (i + 1 == slots) {
            sizes[i] = left;
            visit(sizes);
            return;
        }
        for (std::size_t s = 0; s <= left; ++s) {
            sizes[i] = s;
            rec(i + 1, left - s);
        }
    };
    if (slots == 0) {
        if (total == 0) {
            visit(sizes);
        }
        return;
    }
    rec(0, total);
}

// Cartesian product of per-slot choice lists, slot 0 varying slowest.
void for_each_product(const std::vector<const std::vector<KAryTree>*>& lists,
                      const std::function<void(const std::vector<KAryTree>&)>& visit)
{
    std::vector<KAryTree> current;
    current.reserve(lists.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == lists.size()) {
            visit(current);
            return;
        }
        for (const auto& t : *lists[i]) {
            current.push_back(t);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
}

std::vector<std::vector<KAryTree>> trees_up_to(int arity, std::size_t n)
{
    const auto k = static_cast<std::size_t>(arity);
    std::vector<std::vector<KAryTree>> by_size(n + 1);
    by_size[0].push_back(KAryTree::empty(arity));
    for (std::size_t m = 1; m <= n; ++m) {
        for_each_split(k, m - 1, [&](const std::vector<std::size_t>& sizes) {
            std::vector<const std::vector<KAryTree>*> lists;
            for (std::size_t s : sizes) {
                lists.push_back(&by_size[s]);
            }
            for_each_product(lists, [&](const std::vector<KAryTree>& kids) { by_size[m].push_back(KAryTree::node(kids)); });
        });
    }
    return by_size;
}

} // namespace

std::vector<KAryTree> generate_trees(int arity, std::size_t n)
{
    if (arity < 1) {
        throw std::invalid_argument("generate_trees: arity must be >= 1");
    }
    return trees_up_to(arity, n)[n];
}

std::vector<TreeTuple> generate_tree_tuples(int arity, std::size_t r, std::size_t n)
{
    const auto by_size = trees_up_to(arity, n);
    std::vector<TreeTuple> out;
    for_each_split(r, n, [&](const std::vector<std::size_t>& sizes) {
        std::vector<const std::vector<KAryTree>*> lists;
        for (std::size_t s : sizes) {
            lists.push_back(&by_size[s]);
        }
        for_each_product(lists, [&](const std::vector<KAryTree>& ts) { out.push_back(TreeTuple{ts}); });
    });
    return out;
}

std::size_t KDyckPath::size() const
{
    std::size_t c = 0;
    for (KStep s : steps) {
        c += (s == KStep::Down) ? 1 : 0;
    }
    return c;
}

std::string to_string(const KDyckPath& p)
{
    std::string out;
    out.reserve(p.steps.size());
    for (KStep s : p.steps) {
        out.push_back(s == KStep::Up ? 'U' : 'D');
    }
    return out;
}

KDyckPath parse_kdyck(std::string_view text, int k)
{
    KDyckPath p{k, {}};
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'U') {
            p.steps.push_back(KStep::Up);
        } else if (text[i] == 'D') {
            p.steps.push_back(KStep::Down);
        } else {
            throw ParseError("invalid k-Dyck step '" + std::string(1, text[i]) + "' at index " + std::to_string(i), i);
        }
    }
    return p;
}

KPathProfile profile(const std::vector<KStep>& steps, int k)
{
    KPathProfile pr;
    long y = 0;
    for (KStep s : steps) {
        y += (s == KStep::Up) ? 1 : -k;
        pr.min_height = std::min(pr.min_height, y);
    }
    pr.final_height = y;
    return pr;
}

bool is_valid(const KDyckPath& p)
{
    if (p.k < 1) {
        return false;
    }
    const auto pr = profile(p.steps, p.k);
    return pr.min_height >= 0 && pr.final_height == 0;
}

std::vector<KDyckPath> generate_kdyck(int k, std::size_t n)
{
    if (k < 1) {
        throw std::invalid_argument("generate_kdyck: k must be >= 1");
    }
    std::vector<KDyckPath> out;
    std::vector<KStep> steps;
    const std::size_t ups_total = static_cast<std::size_t>(k) * n;
    std::function<void(std::size_t, std::size_t, long)> rec = [&](std::size_t ups, std::size_t downs, long y) {
        if (ups == ups_total && downs == n) {
            out.push_back(KDyckPath{k, steps});
            return;
        }
        if (ups < ups_total) {
            steps.push_back(KStep::Up);
            rec(ups + 1, downs, y + 1);
            steps.pop_back();
        }
        if (downs < n && y >= k) {
            steps.push_back(KStep::Down);
            rec(ups, downs + 1, y - k);
            steps.pop_back();
        }
    };
    rec(0, 0, 0);
    return out;
}

namespace {

void append_kdyck(const KAryTree& t, std::vector<KStep>& out)
{
    if (t.is_empty()) {
        return;
    }
    const auto& kids = t.children();
    const std::size_t k = kids.size() - 1;
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(KStep::Up);
        append_kdyck(kids[i], out);
    }
    out.push_back(KStep::Down);
    append_kdyck(kids[k], out);
}

// Rebuilds the tree for steps [lo, hi), a k-Dyck path starting and ending at
// height `base`. after[i] is the height once step i is taken.
KAryTree build_tree(const std::vector<KStep>& steps, const std::vector<long>& after, std::size_t lo, std::size_t hi,
                    long base, int k)
{
    if (lo == hi) {
        return KAryTree::empty(k + 1);
    }
    // The closing D is the first step that comes back to base.
    std::size_t close = lo;
    while (after[close] != base) {
        ++close;
    }
    // Position of the U opening each of the k up-slots.
    std::vector<std::size_t> opener(static_cast<std::size_t>(k));
    opener[0] = lo;
    for (int i = 1; i < k; ++i) {
        const long level = base + i;
        std::size_t last = opener[static_cast<std::size_t>(i - 1)];
        for (std::size_t j = last; j < close; ++j) {
            if (after[j] == level) {
                last = j;
            }
        }
        opener[static_cast<std::size_t>(i)] = last + 1;
    }
    std::vector<KAryTree> kids;
    kids.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) {
        const std::size_t from = opener[static_cast<std::size_t>(i)] + 1;
        const std::size_t to = (i + 1 < k) ? opener[static_cast<std::size_t>(i + 1)] : close;
        kids.push_back(build_tree(steps, after, from, to, base + i + 1, k));
    }
    kids.push_back(build_tree(steps, after, close + 1, hi, base, k));
    return KAryTree::node(std::move(kids));
}

} // namespace

KDyckPath tree_to_kdyck(const KAryTree& tree)
{
    if (tree.arity() < 2) {
        throw std::invalid_argument("tree_to_kdyck: tree arity must be >= 2");
    }
    KDyckPath p{tree.arity() - 1, {}};
    append_kdyck(tree, p.steps);
    return p;
}

KAryTree kdyck_to_tree(const KDyckPath& path)
{
    if (!is_valid(path)) {
        throw InvalidPath("kdyck_to_tree: not a valid " + std::to_string(path.k) + "-Dyck path: " + to_string(path));
    }
    std::vector<long> after;
    after.reserve(path.steps.size());
    long y = 0;
    for (KStep s : path.steps) {
        y += (s == KStep::Up) ? 1 : -path.k;
        after.push_back(y);
    }
    return build_tree(path.steps, after, 0, path.steps.size(), 0, path.k);
}

PathWord kdyck_to_augmented(const KDyckPath& p)
{
    if (p.k < 2) {
        throw std::invalid_argument("kdyck_to_augmented: requires k >= 2");
    }
    if (!is_valid(p)) {
        throw InvalidPath("kdyck_to_augmented: not a valid " + std::to_string(p.k) + "-Dyck path: " + to_string(p));
    }
    PathWord out;
    for (KStep s : p.steps) {
        if (s == KStep::Up) {
            out.push_back(Step::U);
        } else {
            out.push_back(Step::U);
            out.append(Step::D, static_cast<std::size_t>(p.k - 1));
            out.push_back(Step::L);
            out.push_back(Step::D);
        }
    }
    return out;
}

KDyckPath augmented_to_kdyck(const PathWord& p, int k)
{
    if (k < 2) {
        throw std::invalid_argument("augmented_to_kdyck: requires k >= 2");
    }
    const PathClass c = classify(p, k);
    if (!c.augmented_size) {
        throw InvalidPath("augmented_to_kdyck: " + to_string(p) + " is not an augmented " + std::to_string(k) +
                          "-Dyck path");
    }
    KDyckPath out{k, {}};
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t run = 0;
        while (p[i] == Step::U) {
            ++run;
            ++i;
        }
        out.steps.insert(out.steps.end(), run - 1, KStep::Up);
        out.steps.push_back(KStep::Down);
        i += static_cast<std::size_t>(k) + 1; // D^{k-1} L D
    }
    return out;
}

} // namespace kbox
