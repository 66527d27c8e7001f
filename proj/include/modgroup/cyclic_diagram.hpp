#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace modgroup {

// A cyclic word over {L, R}. The stored rotation is kept as given so that
// positions and axes have a meaning; equality ignores rotation.
class CyclicDiagram {
public:
    explicit CyclicDiagram(std::string letters);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    // Cyclic indexing, negative indices allowed.
    char at(std::ptrdiff_t i) const;

    // rotated(k)[i] == at(i + k)
    CyclicDiagram rotated(std::ptrdiff_t k) const;
    // Offset r of the least rotation under L < R (the first one if periodic).
    std::size_t canonical_offset() const;
    CyclicDiagram canonical() const { return rotated(static_cast<std::ptrdiff_t>(canonical_offset())); }
    // Smallest p with at(i + p) == at(i) for all i.
    std::size_t period() const;

    friend bool operator==(const CyclicDiagram& x, const CyclicDiagram& y);

private:
    std::string letters_;
};

// Index of the lexicographically least rotation (Booth).
std::size_t least_rotation(std::string_view s);

// Reverse and swap L <-> R.
std::string transpose(std::string_view word);
bool is_palindrome(std::string_view word);

// Fixed-point-free reflection i -> axis - i preserving the four anchor L's
// at {anchor, anchor+1} and {anchor+m/2, anchor+m/2+1} and flipping every
// other letter.
struct ParaSymmetry {
    int axis = 0;
    int anchor = 0;  // the smaller anchor start, (axis - 1) / 2
    friend bool operator==(const ParaSymmetry&, const ParaSymmetry&) = default;
};

std::vector<ParaSymmetry> para_symmetries(const CyclicDiagram& d);
// Residues c with at(c - i) == at(i) for every i.
std::vector<int> reflection_symmetries(const CyclicDiagram& d);
// Rotates d to the anchor of s and returns A from L L A L L A^t.
std::string extract_A(const CyclicDiagram& d, const ParaSymmetry& s);

struct WForm {
    int numerator = 1;
    int denominator = 3;
    std::string insert;  // the word B

    // Validates odd coprime numerator < denominator, denominator >= 3.
    static WForm make(int numerator, int denominator, std::string insert);
    friend bool operator==(const WForm&, const WForm&) = default;
};

struct VForm {
    int m = 0;
    friend bool operator==(const VForm&, const VForm&) = default;
};
struct OneAxis {
    friend bool operator==(const OneAxis&, const OneAxis&) = default;
};
struct NoAxis {
    friend bool operator==(const NoAxis&, const NoAxis&) = default;
};
using Recognition = std::variant<VForm, WForm, OneAxis, NoAxis>;

// L^2 (LR)^m L^2 (LR)^m
CyclicDiagram build_V(int m);
CyclicDiagram build_W(const WForm& f);
// Structural match against the V and W patterns; independent of
// para_symmetries except for the OneAxis/NoAxis split.
Recognition recognize(const CyclicDiagram& d);
std::string describe(const Recognition& r);

// Linear word: every maximal run has even length.
bool is_even_word(std::string_view word);
// Cyclic runs all even.
bool is_even_word(const CyclicDiagram& d);

// Run lengths of the cyclic word starting at a run boundary; a constant
// word yields a single run.
std::vector<std::size_t> cyclic_runs(const CyclicDiagram& d);

}  // namespace modgroup
