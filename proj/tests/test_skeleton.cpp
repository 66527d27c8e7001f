#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modgroup/errors.hpp"
#include "modgroup/skeleton.hpp"

#include <numeric>

using namespace modgroup;

namespace {

std::vector<std::string> all_words(int n) {
    std::vector<std::string> out;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        std::string w;
        for (int i = 0; i < n; ++i) w += (bits >> i) & 1 ? 'd' : 'u';
        out.push_back(w);
    }
    return out;
}

}  // namespace

TEST_CASE("monodromy at infinity") {
    CHECK(classify(monodromy_at_infinity(PseudoTree{})).parabolic_index == -4);
    CHECK(*classify(monodromy_at_infinity(parse_tree("uu"))).diagram == CyclicDiagram("LLLLLLRR"));
    CHECK(*classify(monodromy_at_infinity(parse_tree("ud"))).diagram == build_V(1));
    CHECK(to_string(parse_tree("udd")) == "udd");
    CHECK_THROWS_AS(parse_tree("ux"), ParseError);
}

TEST_CASE("skeleton from twists") {
    using V = TwistVector;
    CHECK(std::holds_alternative<FullGroupSkeleton>(from_twists(V::make(1, 0), V::make(0, 1))));
    CHECK(std::holds_alternative<CyclicSkeleton>(from_twists(V::make(1, 0), V::make(1, 0))));
    CHECK(std::holds_alternative<CyclicSkeleton>(from_twists(V::make(1, 0), V::make(-1, 0))));
    auto t = std::get<MarkedPseudoTree>(from_twists(V::make(1, 0), V::make(1, 2)));
    CHECK(t.tree.branches.empty());
    CHECK_THROWS_AS(from_twists(V{2, 4}, V::make(1, 0)), DomainError);
}

TEST_CASE("the two L^4 markings differ") {
    auto canon = canonical_2factorizations(evaluate("L^4"));
    REQUIRE(canon.size() == 2);
    auto a = std::get<MarkedPseudoTree>(skeleton_of(canon[0].pair));
    auto b = std::get<MarkedPseudoTree>(skeleton_of(canon[1].pair));
    CHECK(isomorphic(a.tree, b.tree));
    CHECK_FALSE(isomorphic(a, b));
    CHECK(isomorphic(a, a));
}

TEST_CASE("isomorphism") {
    CHECK(isomorphic(parse_tree("ud"), parse_tree("ud")));
    CHECK(isomorphic(parse_tree("uu"), parse_tree("dd")));
    CHECK_FALSE(isomorphic(parse_tree("uu"), parse_tree("ud")));
    CHECK_FALSE(isomorphic(MarkedPseudoTree{{}, Marking::Left}, MarkedPseudoTree{{}, Marking::Right}));
    CHECK(isomorphic(MarkedPseudoTree{parse_tree("u"), Marking::Left}, MarkedPseudoTree{parse_tree("d"), Marking::Left}));
}

TEST_CASE("even trees") {
    CHECK(is_even_tree(PseudoTree{}));
    CHECK(is_even_tree(parse_tree("uudd")));
    CHECK_FALSE(is_even_tree(parse_tree("ud")));
}

TEST_CASE("branch word round trip") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& w : all_words(n)) {
            auto t = parse_tree(w);
            auto g = monodromy_at_infinity(t);
            auto c = classify(g);
            auto diagram = c.diagram ? *c.diagram : CyclicDiagram("LLLL");
            bool hit = false;
            for (const auto& s : para_symmetries(diagram)) {
                auto a = extract_A(diagram, s);
                hit |= a == a_word(t) || a == transpose(a_word(t));
            }
            CHECK(hit);
            CHECK(is_even_tree(t) == is_even_word(a_word(t)));
        }
}

TEST_CASE("twist pairs land in their product class") {
    auto vectors = primitive_vectors(4);
    for (const auto& u : vectors)
        for (const auto& v : vectors) {
            auto s = from_twists(u, v);
            const auto* tree = std::get_if<MarkedPseudoTree>(&s);
            if (!tree) continue;
            auto product = dehn_twist(u) * dehn_twist(v);
            CHECK(classify(monodromy_at_infinity(tree->tree)) == classify(product));
        }
}

TEST_CASE("two twists generate a free group") {
    // reduced words of length <= 6 in a, b and their inverses never vanish
    for (const auto& tree : {"", "u", "ud", "uudd"}) {
        auto pair = decomposition_pair(a_word(parse_tree(tree)));
        const GroupElement gens[4] = {pair[0], pair[0].inverse(), pair[1], pair[1].inverse()};
        std::vector<std::pair<GroupElement, int>> layer{{GroupElement{}, -1}};
        for (int len = 1; len <= 6; ++len) {
            std::vector<std::pair<GroupElement, int>> next;
            for (const auto& [g, last] : layer)
                for (int k = 0; k < 4; ++k) {
                    if (last >= 0 && (k ^ 1) == last) continue;
                    auto h = g * gens[k];
                    CHECK_FALSE(h.is_identity());
                    next.emplace_back(h, k);
                }
            layer = std::move(next);
        }
    }
}
