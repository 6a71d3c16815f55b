#ifndef AROMATIC_FOREST_HPP
#define AROMATIC_FOREST_HPP

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aromatic {

// Directed graph where every node has at most one outgoing arrow.
// Stored as a successor map; kNoSuccessor marks a root.
class AromaticForest {
public:
    static constexpr int kNoSuccessor = -1;

    explicit AromaticForest(std::size_t node_count)
        : successor_(node_count, kNoSuccessor) {}

    AromaticForest(std::size_t node_count, std::vector<int> successor);

    std::size_t node_count() const { return successor_.size(); }
    std::size_t arrow_count() const;
    std::size_t root_count() const { return node_count() - arrow_count(); }

    bool has_successor(std::size_t v) const { return successor_.at(v) != kNoSuccessor; }
    int successor(std::size_t v) const { return successor_.at(v); }
    void set_successor(std::size_t v, std::size_t target);
    void clear_successor(std::size_t v) { successor_.at(v) = kNoSuccessor; }

    // roots in increasing node order
    std::vector<std::size_t> roots() const;
    bool is_tree() const { return root_count() == 1; }

    // in_neighbors()[v] lists sources of arrows into v, in increasing node order
    std::vector<std::vector<int>> in_neighbors() const;
    std::vector<int> in_degrees() const;

    // image of the forest under perm (perm[old] = new); used by the
    // relabeling-invariance tests
    AromaticForest relabeled(const std::vector<std::size_t>& perm) const;

    bool operator==(const AromaticForest&) const = default;

private:
    std::vector<int> successor_;
};

// kappa(j) = number of nodes with j incoming arrows.  Trailing zeros are
// normalized away so (1) == (1,0).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> counts);

    int operator()(std::size_t j) const {
        return j < counts_.size() ? counts_[j] : 0;
    }
    const std::vector<int>& counts() const { return counts_; }

    int size() const;          // |kappa|
    int derived_size() const;  // |kappa'| = sum j*kappa(j)
    Composition derived() const;

    std::string to_string() const;  // "(3,1,2)"; the zero composition prints "(0)"

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> counts_;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position);
    std::size_t position;  // byte offset into the input
};

// Canonical string under the grammar
//   tree      ::= '[' tree* ']'          children sorted lexicographically
//   cyclenode ::= '{' tree* '}'          pendant trees sorted
//   aroma     ::= '(' cyclenode+ ')'     lexicographically minimal rotation,
//                                        cycle listed in successor order
//   forest    ::= component (' ' component)*   components sorted
// Equal strings <=> isomorphic digraphs; invariant under node relabeling.
std::string canonicalize(const AromaticForest& forest);

// Inverse of canonicalize up to isomorphism; input need not be sorted.
// Node indices are assigned in order of appearance of the opening bracket,
// so parse(canonicalize(f)) yields the canonical node numbering.
AromaticForest parse(std::string_view text);

Composition composition(const AromaticForest& forest);

inline Composition derived_composition(const Composition& c) { return c.derived(); }

inline constexpr int kDefaultEnumerationCap = 7;

// All isomorphism classes of aromatic trees (n nodes, n-1 arrows), as
// canonical strings.  Brute force over successor assignments with node 0
// fixed as the root; doubles as the correctness oracle for the module.
std::set<std::string> enumerate_trees(int order, int cap = kDefaultEnumerationCap);

std::set<std::string> enumerate_trees_with_composition(const Composition& kappa,
                                                       int cap = kDefaultEnumerationCap);

// Trees of the given order grouped by composition.
std::map<Composition, std::vector<std::string>> trees_by_composition(
    int order, int cap = kDefaultEnumerationCap);

struct Decomposition {
    std::vector<std::string> trees;   // rooted-tree components, sorted
    std::vector<std::string> aromas;  // components with node count == arrow count, sorted
};

// Connected components split into rooted trees and aromas; joining all
// component strings back in sorted order reproduces canonicalize(forest).
Decomposition decompose(const AromaticForest& forest);

}  // namespace aromatic

#endif  // AROMATIC_FOREST_HPP
