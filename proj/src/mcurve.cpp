#include "modgroup/mcurve.hpp"

#include "modgroup/cyclic_diagram.hpp"
#include "modgroup/errors.hpp"

#include <algorithm>

namespace modgroup {

JunctionWord::JunctionWord(std::vector<JunctionLetter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw DomainError("empty junction word");
    for (std::size_t i = 1; i + 1 < letters_.size(); ++i)
        if (letters_[i] == JunctionLetter::Star) throw DomainError("* may only appear at the ends of a junction word");
}

int JunctionWord::stars() const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), JunctionLetter::Star));
}

JunctionWord parse_junction(std::string_view text) {
    std::vector<JunctionLetter> out;
    for (std::size_t i = 0; i < text.size();) {
        if (text.substr(i, 3) == "↑") {
            out.push_back(JunctionLetter::Up);
            i += 3;
            continue;
        }
        if (text.substr(i, 3) == "↓") {
            out.push_back(JunctionLetter::Down);
            i += 3;
            continue;
        }
        switch (text[i]) {
            case 'u': out.push_back(JunctionLetter::Up); break;
            case 'd': out.push_back(JunctionLetter::Down); break;
            case '*':
            case '.': out.push_back(JunctionLetter::Star); break;
            default: throw ParseError(std::string("unknown junction letter '") + text[i] + "'");
        }
        ++i;
    }
    if (out.empty()) throw ParseError("empty junction word");
    for (std::size_t i = 1; i + 1 < out.size(); ++i)
        if (out[i] == JunctionLetter::Star) throw ParseError("* may only appear at the ends of a junction word");
    return JunctionWord(std::move(out));
}

std::string to_string(const JunctionWord& j) {
    std::string out;
    for (auto c : j.letters()) out += c == JunctionLetter::Up ? 'u' : c == JunctionLetter::Down ? 'd' : '*';
    return out;
}

namespace {

JunctionLetter swapped(JunctionLetter c) {
    if (c == JunctionLetter::Up) return JunctionLetter::Down;
    if (c == JunctionLetter::Down) return JunctionLetter::Up;
    return c;
}

void require_two_stars(const JunctionWord& j) {
    if (!is_zigzag_free(j)) throw DomainError("needs a zigzag-free junction word (* at both ends)");
}

}  // namespace

JunctionWord flip(const JunctionWord& j, Flip which) {
    auto letters = j.letters();
    if (which == Flip::Vertical) std::reverse(letters.begin(), letters.end());
    else std::transform(letters.begin(), letters.end(), letters.begin(), swapped);
    return JunctionWord(std::move(letters));
}

JunctionWord canonical_class(const JunctionWord& j, bool directed) {
    auto vh = flip(flip(j, Flip::Vertical), Flip::Horizontal);
    auto best = std::min(j, vh);
    if (!directed) best = std::min({best, flip(j, Flip::Vertical), flip(j, Flip::Horizontal)});
    return best;
}

bool is_zigzag_free(const JunctionWord& j) { return j.size() >= 2 && j.stars() == 2; }

PseudoTree branch_word(const JunctionWord& j, const JunctionConvention& convention) {
    require_two_stars(j);
    std::vector<JunctionLetter> interior(j.letters().begin() + 1, j.letters().end() - 1);
    if (convention.reverse) std::reverse(interior.begin(), interior.end());
    PseudoTree t;
    for (std::size_t i = 0; i < interior.size(); ++i) {
        bool down = interior[i] == JunctionLetter::Up;
        if (convention.swap) down = !down;
        if (convention.alternate && i % 2 == 1) down = !down;
        auto b = down ? Branch::Down : Branch::Up;
        t.branches.push_back(b);
        t.branches.push_back(b);
    }
    return t;
}

StrongClassLabel pendant_label(const JunctionWord& j, const JunctionConvention& convention) {
    return strong_class_label(decomposition_pair(a_word(branch_word(j, convention))));
}

Necklace junction_stones(const JunctionWord& j) {
    if (j.size() < 2) throw DomainError("a junction needs at least two blocks");
    // Pieces along the real part: a parity toggle, an oval or junction
    // vertex, or a zigzag vertex (which also toggles).
    enum class Piece { Toggle, Vertex, Zigzag };
    using Run = std::vector<Piece>;
    auto top = [](JunctionLetter c) { return c == JunctionLetter::Up ? Run{Piece::Vertex} : Run{Piece::Toggle}; };
    auto bottom = [](JunctionLetter c) { return c == JunctionLetter::Up ? Run{Piece::Toggle} : Run{Piece::Vertex}; };
    auto append = [](Run& out, const Run& r) { out.insert(out.end(), r.begin(), r.end()); };
    auto append_reversed = [](Run& out, const Run& r) { out.insert(out.end(), r.rbegin(), r.rend()); };

    const auto& w = j.letters();
    const std::size_t d = w.size();
    Run seq;
    if (w.front() == JunctionLetter::Star) {
        seq.push_back(Piece::Vertex);
    } else {
        append_reversed(seq, bottom(w.front()));
        seq.push_back(Piece::Zigzag);
        append(seq, top(w.front()));
    }
    for (std::size_t i = 1; i + 1 < d; ++i) {
        seq.push_back(Piece::Vertex);
        append(seq, top(w[i]));
    }
    seq.push_back(Piece::Vertex);
    if (w.back() == JunctionLetter::Star) {
        seq.push_back(Piece::Vertex);
    } else {
        append(seq, top(w.back()));
        seq.push_back(Piece::Zigzag);
        append_reversed(seq, bottom(w.back()));
    }
    for (std::size_t i = d - 2; i >= 1; --i) {
        seq.push_back(Piece::Vertex);
        append_reversed(seq, bottom(w[i]));
    }
    seq.push_back(Piece::Vertex);

    bool odd = false;
    std::vector<Stone> stones;
    for (auto p : seq) {
        switch (p) {
            case Piece::Toggle: odd = !odd; break;
            case Piece::Vertex: stones.push_back(odd ? Stone::Square : Stone::Circle); break;
            case Piece::Zigzag:
                stones.push_back(odd ? Stone::Right : Stone::Left);
                odd = !odd;
                break;
        }
    }
    // the traversal above runs against the orientation of the real part
    return transform(Necklace(std::move(stones)), {Transform::Kind::Inverse, 0});
}

NecklaceClass flat_diagram(const JunctionWord& j) {
    auto category = j.size() % 2 == 0 ? Category::FlatOriented : Category::TwistedOriented;
    return canonicalize(junction_stones(j), category);
}

ConjugacyClass monodromy_class(const JunctionWord& j) {
    if (is_zigzag_free(j)) return classify(monodromy_at_infinity(branch_word(j)));
    auto stones = junction_stones(j);
    return classify(j.size() % 2 == 0 ? monodromy(stones) : twisted_monodromy(stones));
}

int classes_sharing_real_part(const JunctionWord& j) {
    require_two_stars(j);
    auto c = monodromy_class(j);
    // the tree of ** has monodromy L^4, the V-form with m = 0
    auto diagram = c.diagram ? *c.diagram : CyclicDiagram("LLLL");
    if (c.kind == ConjugacyClass::Kind::Parabolic && c.parabolic_index != -4) return 1;
    auto r = recognize(diagram);
    if (const auto* wf = std::get_if<WForm>(&r)) return is_even_word(std::string_view(wf->insert)) ? 2 : 1;
    if (std::holds_alternative<VForm>(r)) return is_even_word(diagram) ? 2 : 1;
    return 1;
}

}  // namespace modgroup
