#include "modgroup/skeleton.hpp"

#include "modgroup/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace modgroup {

PseudoTree parse_tree(std::string_view branches) {
    PseudoTree t;
    for (char c : branches) {
        if (c == 'u') t.branches.push_back(Branch::Up);
        else if (c == 'd') t.branches.push_back(Branch::Down);
        else throw ParseError(std::string("branch letters are u and d, got '") + c + "'");
    }
    return t;
}

std::string to_string(const PseudoTree& t) {
    std::string out;
    for (auto b : t.branches) out += b == Branch::Up ? 'u' : 'd';
    return out;
}

std::string to_string(const MarkedPseudoTree& t) {
    return to_string(t.tree) + (t.marking == Marking::Left ? "/left" : "/right");
}

std::string a_word(const PseudoTree& t) {
    std::string out;
    for (auto b : t.branches) out += b == Branch::Up ? 'L' : 'R';
    return out;
}

PseudoTree tree_from_a_word(std::string_view a) {
    PseudoTree t;
    for (char c : a) {
        if (c == 'L') t.branches.push_back(Branch::Up);
        else if (c == 'R') t.branches.push_back(Branch::Down);
        else throw DomainError("A-words are over L and R");
    }
    return t;
}

PseudoTree reversed(const PseudoTree& t) { return tree_from_a_word(transpose(a_word(t))); }

GroupElement monodromy_at_infinity(const PseudoTree& t) {
    auto a = a_word(t);
    return evaluate_lr("LL" + a + "LL" + transpose(a));
}

Skeleton skeleton_of(const Factorization& pair) {
    if (pair.size() != 2) throw DomainError("a skeleton needs exactly two twists");
    const auto& u = pair.vectors()[0];
    const auto& v = pair.vectors()[1];
    auto w = abs(wedge(u, v));
    if (w == 1) return FullGroupSkeleton{};
    if (w == 0) return CyclicSkeleton{};
    auto g = pair.product();
    auto label = strong_class_label(pair);
    const auto* axis = std::get_if<AxisLabel>(&label);
    if (!axis) throw std::logic_error("twists with |u^v| >= 2 must land on a para-symmetry");
    auto c = classify(g);
    auto diagram = c.diagram ? *c.diagram : CyclicDiagram("LLLL");
    for (const auto& s : para_symmetries(diagram)) {
        if (s.axis != axis->axis) continue;
        MarkedPseudoTree out;
        out.tree = tree_from_a_word(extract_A(diagram, s));
        out.marking = out.tree.branches.empty() && s.anchor % 2 != 0 ? Marking::Right : Marking::Left;
        return out;
    }
    throw std::logic_error("label refers to a missing para-symmetry");
}

Skeleton from_twists(const TwistVector& u, const TwistVector& v) {
    auto checked_u = TwistVector::make(u.p, u.q);
    auto checked_v = TwistVector::make(v.p, v.q);
    return skeleton_of(Factorization::from_vectors({checked_u, checked_v}));
}

bool isomorphic(const PseudoTree& x, const PseudoTree& y) { return x == y || x == reversed(y); }

bool isomorphic(const MarkedPseudoTree& x, const MarkedPseudoTree& y) {
    if (!isomorphic(x.tree, y.tree)) return false;
    return !x.tree.branches.empty() || x.marking == y.marking;
}

bool is_even_tree(const PseudoTree& t) { return is_even_word(a_word(t)); }

}  // namespace modgroup
