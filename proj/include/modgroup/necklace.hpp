#pragma once

#include "modgroup/factorization.hpp"
#include "modgroup/psl2.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modgroup {

// Declaration order is the order used for canonical representatives.
enum class Stone : std::uint8_t { Circle, Square, Right, Left };

char to_char(Stone s);  // O S > <
Stone dual(Stone s);
Stone inverse(Stone s);
// Circle: Y X^2 Y X^2 Y, Square: X^2 Y X^2, Right: X Y, Left: Y X.
const GroupElement& stone_monodromy(Stone s);

// A broken necklace diagram: a nonempty word in the stones.
class Necklace {
public:
    explicit Necklace(std::vector<Stone> stones);

    const std::vector<Stone>& stones() const { return stones_; }
    std::size_t size() const { return stones_.size(); }
    Stone operator[](std::size_t i) const { return stones_[i]; }

    friend bool operator==(const Necklace&, const Necklace&) = default;
    friend auto operator<=>(const Necklace&, const Necklace&) = default;

private:
    std::vector<Stone> stones_;
};

// Accepts O S > < and the glyphs ○ □. Throws ParseError.
Necklace parse_necklace(std::string_view text);
std::string to_string(const Necklace& n);

GroupElement monodromy(const Necklace& n);
// m(N) Y
GroupElement twisted_monodromy(const Necklace& n);

struct Transform {
    enum class Kind { Dual, Inverse, Shift, TwistedShift } kind = Kind::Shift;
    int k = 1;  // for the shifts; negative values shift backwards
};
// Shift(k) moves the first k stones to the end; TwistedShift(k) does the
// same k times, dualizing each wrapped stone.
Necklace transform(const Necklace& n, Transform t);

struct NecklaceStats {
    int circles = 0;
    int squares = 0;
    int rights = 0;
    int lefts = 0;
    int betti = 0;       // total Betti number of the real part
    int euler = 0;       // Euler characteristic of the real part
    int essential = 0;   // cyclically adjacent stones whose facing endpoint types differ
};
NecklaceStats stats(const Necklace& n);

// N< + N> + w == 2. Throws DomainError unless the length is 6k - w for some k >= 1.
bool is_maximal(const Necklace& n, int w);
// N_ess <= 2k and N_ess + N< + N> <= 6k, with k read from the length 6k - w.
bool passes_essential_obstruction(const Necklace& n, int w);
// k with size == 6k - w; DomainError when there is none.
int necklace_k(const Necklace& n, int w);

enum class Category { Oriented, NonOriented, FlatOriented, FlatNonOriented, TwistedOriented, TwistedNonOriented };
std::string to_string(Category c);
std::optional<Category> parse_category(std::string_view text);

struct NecklaceClass {
    Category category = Category::Oriented;
    Necklace representative;
    friend bool operator==(const NecklaceClass&, const NecklaceClass&) = default;
};
// Orbit minimum under the group of the category.
NecklaceClass canonicalize(const Necklace& n, Category category);

// w = 0: [Empty] iff m(N) is trivial; w = 1: [Twist] iff m(N) is a twist;
// w = 2: the canonical strong classes of m(N). DomainError for other w.
std::vector<StrongClassLabel> pendants(const Necklace& n, int w);

// The canonical 2-factorization of m(N) carried to m(N') by a symmetry
// mapping N to N', where N' = Shift(shift) of N (or of N^-1 when inverted).
Factorization carry_pendant(const Necklace& n, const Factorization& f, bool inverted, int shift);

struct EnumerationOptions {
    unsigned jobs = 0;                          // 0: hardware concurrency
    std::optional<unsigned long long> budget;   // raw words; default from environment
    bool keep_classes = true;
};

struct EnumeratedClass {
    Necklace diagram;
    StrongClassLabel pendant;
};

struct EnumerationResult {
    int k = 1;
    int w = 0;
    Category category = Category::NonOriented;
    unsigned long long count = 0;
    std::vector<EnumeratedClass> classes;  // ordered by diagram, then pendant
    double elapsed_seconds = 0;
};

inline constexpr unsigned long long default_enumeration_budget = 1ULL << 28;  // 4^14
// MODGROUP_BUDGET if set and parseable, else the default.
unsigned long long enumeration_budget();

// Classes of w-pendant necklace diagrams of length 6k - w. Only the Oriented
// and NonOriented categories are supported. Throws BudgetError when 4^(6k-w)
// exceeds the budget.
EnumerationResult enumerate(int k, int w, Category category, const EnumerationOptions& options = {});

}  // namespace modgroup
