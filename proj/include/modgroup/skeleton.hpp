#pragma once

#include "modgroup/factorization.hpp"
#include "modgroup/psl2.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace modgroup {

enum class Branch { Up, Down };

// The directions of the Farey branches along the segment between the two
// monogons of the skeleton. Empty for the L^4 skeleton.
struct PseudoTree {
    std::vector<Branch> branches;
    friend bool operator==(const PseudoTree&, const PseudoTree&) = default;
};

enum class Marking { Left, Right };

struct MarkedPseudoTree {
    PseudoTree tree;
    Marking marking = Marking::Left;
    friend bool operator==(const MarkedPseudoTree&, const MarkedPseudoTree&) = default;
};

// Serialization over `u` / `d`. Throws ParseError on other characters.
PseudoTree parse_tree(std::string_view branches);
std::string to_string(const PseudoTree& t);
std::string to_string(const MarkedPseudoTree& t);

// Up -> L, Down -> R.
std::string a_word(const PseudoTree& t);
PseudoTree tree_from_a_word(std::string_view a);
// Reverse and swap Up <-> Down, the tree read from the other monogon.
PseudoTree reversed(const PseudoTree& t);

// L^2 A L^2 A^t
GroupElement monodromy_at_infinity(const PseudoTree& t);

struct FullGroupSkeleton {
    friend bool operator==(const FullGroupSkeleton&, const FullGroupSkeleton&) = default;
};
struct CyclicSkeleton {
    friend bool operator==(const CyclicSkeleton&, const CyclicSkeleton&) = default;
};
using Skeleton = std::variant<FullGroupSkeleton, CyclicSkeleton, MarkedPseudoTree>;

// Skeleton of the subgroup generated by t_u and t_v. For a tree the marking
// records which para-symmetry of the diagram the pair (t_u, t_v) realizes;
// only the L^4 tree can tell its two markings apart.
Skeleton from_twists(const TwistVector& u, const TwistVector& v);
Skeleton skeleton_of(const Factorization& pair);

bool isomorphic(const PseudoTree& x, const PseudoTree& y);
bool isomorphic(const MarkedPseudoTree& x, const MarkedPseudoTree& y);

bool is_even_tree(const PseudoTree& t);

}  // namespace modgroup
