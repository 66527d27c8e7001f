#pragma once

#include "modgroup/psl2.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace modgroup {

// An ordered sequence of positive Dehn twists with their twist vectors.
class Factorization {
public:
    // Throws DomainError if some factor is not conjugate to R.
    explicit Factorization(std::vector<GroupElement> factors);
    static Factorization from_vectors(const std::vector<TwistVector>& vectors);

    const std::vector<GroupElement>& factors() const { return factors_; }
    const std::vector<TwistVector>& vectors() const { return vectors_; }
    std::size_t size() const { return factors_.size(); }
    const GroupElement& operator[](std::size_t i) const { return factors_[i]; }
    // Left to right product, the monodromy at infinity.
    GroupElement product() const;
    // Every factor replaced by h^-1 x h.
    Factorization conjugated_by(const GroupElement& h) const;

    friend bool operator==(const Factorization& x, const Factorization& y) { return x.factors_ == y.factors_; }

private:
    std::vector<GroupElement> factors_;
    std::vector<TwistVector> vectors_;
};

std::string to_string(const Factorization& f);

// sigma_i (dir = +1) or its inverse on factors i, i+1, with i counted from 1.
Factorization hurwitz_move(const Factorization& f, std::size_t i, int dir);

// Strong equivalence class of a 2-factorization, named by the canonical
// construction that produces its representative. Axis refers to a
// para-symmetry of the canonical rotation of the cutting word of the product.
struct FullGroupLabel {
    friend bool operator==(const FullGroupLabel&, const FullGroupLabel&) = default;
};
struct EqualTwistsLabel {
    friend bool operator==(const EqualTwistsLabel&, const EqualTwistsLabel&) = default;
};
struct AxisLabel {
    int axis = 1;
    friend bool operator==(const AxisLabel&, const AxisLabel&) = default;
};
// Degenerate pendants: the empty factorization of the identity and a single twist.
struct EmptyLabel {
    friend bool operator==(const EmptyLabel&, const EmptyLabel&) = default;
};
struct SingleTwistLabel {
    friend bool operator==(const SingleTwistLabel&, const SingleTwistLabel&) = default;
};
using StrongClassLabel = std::variant<EmptyLabel, SingleTwistLabel, FullGroupLabel, EqualTwistsLabel, AxisLabel>;

std::string to_string(const StrongClassLabel& label);

struct CanonicalFactorization {
    StrongClassLabel label;
    Factorization pair;
};

bool exists_2factorization(const GroupElement& g);
// One representative per strong class, ordered by label (axes ascending).
std::vector<CanonicalFactorization> canonical_2factorizations(const GroupElement& g);

struct ClassCounts {
    int strong = 0;
    int weak = 0;
    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};
ClassCounts count_classes(const GroupElement& g);

// Both throw DomainError unless f1, f2 are 2-factorizations; strong needs
// equal products, weak needs conjugate products.
bool decide_strong_equivalence(const Factorization& f1, const Factorization& f2);
bool decide_weak_equivalence(const Factorization& f1, const Factorization& f2);

// Index into canonical_2factorizations(f.product()) of the class of f.
std::size_t strong_class_index(const Factorization& f);
StrongClassLabel strong_class_label(const Factorization& f);

// Cap on conjugation steps in the strong-equivalence search.
inline constexpr long long max_orbit_steps = 1'000'000;

struct ClassReality {
    StrongClassLabel label;
    bool real = false;
    // Index of the class the real structure carries this one to, when not real.
    std::optional<std::size_t> partner;
};

struct RealityReport {
    bool applicable = false;
    std::string reason;  // set when not applicable
    std::vector<ClassReality> classes;
    // Real structures of g counted as symmetry axes of its cyclic diagram;
    // 2 for the X and R^2 classes.
    int real_structures = 0;
};
RealityReport factorization_reality(const GroupElement& g);

// tau-hat applied to a 2-factorization: (tau^(m2), tau^(m1)).
Factorization tau_hat(const RealStructure& tau, const Factorization& f);

struct OracleProduct {
    TwistVector u, v;
    GroupElement product;
};
// Every ordered pair of sign-normalized primitive vectors with |p|, |q| <= bound.
std::vector<OracleProduct> oracle_products(int bound);
std::vector<TwistVector> primitive_vectors(int bound);

// The first factors of the canonical pair for L^2 A L^2 A^t before any
// conjugation: X L^-1 X^-1 and (Y A X) L^-1 (Y A X)^-1.
Factorization decomposition_pair(std::string_view a_word);

}  // namespace modgroup
