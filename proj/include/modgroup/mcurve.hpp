#pragma once

#include "modgroup/factorization.hpp"
#include "modgroup/necklace.hpp"
#include "modgroup/psl2.hpp"
#include "modgroup/skeleton.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace modgroup {

enum class JunctionLetter { Up, Down, Star };

// A chain of cubic blocks: the end blocks are * (no zigzag) or an arrow,
// interior blocks are arrows.
class JunctionWord {
public:
    // Throws DomainError when a * sits strictly inside or the word is empty.
    explicit JunctionWord(std::vector<JunctionLetter> letters);

    const std::vector<JunctionLetter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }  // the degree d
    int stars() const;                                    // w

    friend bool operator==(const JunctionWord&, const JunctionWord&) = default;
    friend auto operator<=>(const JunctionWord&, const JunctionWord&) = default;

private:
    std::vector<JunctionLetter> letters_;
};

// Accepts u d * and the glyphs ↑ ↓; '.' stands for *. Throws ParseError.
JunctionWord parse_junction(std::string_view text);
std::string to_string(const JunctionWord& j);  // over u d *

enum class Flip { Vertical, Horizontal };
// Vertical reverses the word, Horizontal swaps u and d.
JunctionWord flip(const JunctionWord& j, Flip which);
// Least word of the orbit under vh (directed) or under <v, h>.
JunctionWord canonical_class(const JunctionWord& j, bool directed);

// How interior arrows become Farey branch pairs.
struct JunctionConvention {
    bool swap = false;       // u -> Up pair instead of Down pair
    bool reverse = false;    // read the interior right to left
    bool alternate = false;  // swap every second block
    friend bool operator==(const JunctionConvention&, const JunctionConvention&) = default;
};
inline constexpr JunctionConvention junction_convention{};

bool is_zigzag_free(const JunctionWord& j);

// Two same-direction branches per interior arrow. DomainError unless w = 2.
PseudoTree branch_word(const JunctionWord& j, const JunctionConvention& convention = junction_convention);
// Strong class of the tree's decomposition pair. DomainError unless w = 2.
StrongClassLabel pendant_label(const JunctionWord& j, const JunctionConvention& convention = junction_convention);

// The stone word read along the real part, of length 3d - w. Ends marked *
// contribute an oval; arrow ends contribute an arrow stone and a vertex.
Necklace junction_stones(const JunctionWord& j);
// FlatOriented for even d, TwistedOriented for odd d.
NecklaceClass flat_diagram(const JunctionWord& j);

// Monodromy at infinity of the branch word for w = 2; otherwise the
// (twisted, for odd d) monodromy of the stone word.
ConjugacyClass monodromy_class(const JunctionWord& j);

// Number of curves, up to equivalence, sharing the real part of j: 2 when
// the monodromy is a W-form with even insert or the even V-form L^4, else 1.
// DomainError unless w = 2.
int classes_sharing_real_part(const JunctionWord& j);

}  // namespace modgroup
