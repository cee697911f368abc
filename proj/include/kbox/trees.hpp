#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "kbox/path.hpp"

namespace kbox {

/// A k-ary tree: empty, or a node with exactly k ordered child slots
/// (slot 0 leftmost). Immutable; copies share structure.
class KAryTree {
public:
    static KAryTree empty(int arity);
    static KAryTree node(std::vector<KAryTree> children);

    int arity() const { return arity_; }
    bool is_empty() const { return node_ == nullptr; }
    std::size_t node_count() const { return node_ ? node_->nodes : 0; }

    /// Requires a non-empty tree.
    const std::vector<KAryTree>& children() const;

    bool operator==(const KAryTree& other) const;

private:
    struct Node {
        std::vector<KAryTree> children;
        std::size_t nodes;
    };

    KAryTree(int arity, std::shared_ptr<const Node> node) : arity_(arity), node_(std::move(node)) {}

    int arity_;
    std::shared_ptr<const Node> node_;
};

/// Empty is "-", a node is "(c0 c1 ... c{k-1})".
std::string to_string(const KAryTree& t);
/// Arity is taken from the text; an empty tree needs the expected arity.
KAryTree parse_tree(std::string_view text, int arity);

struct TreeTuple {
    std::vector<KAryTree> trees;

    std::size_t total_nodes() const;
    bool operator==(const TreeTuple&) const = default;
};

/// Trees joined by ';'.
std::string to_string(const TreeTuple& t);
TreeTuple parse_tree_tuple(std::string_view text, int arity);

/// All k-ary trees with n nodes. Ordered by the node counts of the child
/// slots (lexicographic, slot 0 first), then recursively by child.
std::vector<KAryTree> generate_trees(int arity, std::size_t n);

/// All r-tuples of k-ary trees with n nodes in total.
std::vector<TreeTuple> generate_tree_tuples(int arity, std::size_t r, std::size_t n);

enum class KStep : unsigned char { Up, Down };

/// Lattice path with steps U = (1,1) and D = (k,-k), never below the x-axis
/// and ending on it. The big down step is stored as one symbol.
struct KDyckPath {
    int k = 1;
    std::vector<KStep> steps;

    std::size_t size() const;
    bool operator==(const KDyckPath&) const = default;
};

/// Word over {U, D}, D being the (k,-k) step.
std::string to_string(const KDyckPath& p);
KDyckPath parse_kdyck(std::string_view text, int k);

/// Lowest height reached and final height of a word over {U, D}.
struct KPathProfile {
    long min_height = 0;
    long final_height = 0;
};
KPathProfile profile(const std::vector<KStep>& steps, int k);

bool is_valid(const KDyckPath& p);

/// All k-Dyck paths of size n, lexicographic with U before D.
std::vector<KDyckPath> generate_kdyck(int k, std::size_t n);

/// Tree of arity k+1 to k-Dyck path via
///     mu = U mu_1 U mu_2 ... U mu_k D mu_{k+1},
/// child slot i giving mu_{i+1}.
KDyckPath tree_to_kdyck(const KAryTree& tree);
KAryTree kdyck_to_tree(const KDyckPath& path);

/// Replaces each D step by U D^{k-1} L D. Requires k >= 2.
PathWord kdyck_to_augmented(const KDyckPath& p);
/// Inverse of kdyck_to_augmented; throws InvalidPath for anything that is
/// not an augmented k-Dyck path.
KDyckPath augmented_to_kdyck(const PathWord& p, int k);

} // namespace kbox
