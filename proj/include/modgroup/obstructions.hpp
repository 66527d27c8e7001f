#pragma once

#include "modgroup/psl2.hpp"

namespace modgroup {

// 2 - t or 2 + t is a perfect square, t the trace of a lift.
bool trace_test(const GroupElement& g);

struct QuotientReport {
    int modulus = 2;
    bool solvable = false;
    // Pairs (x1, x2) of conjugates of R in SL(2, Z/n) with x1 x2 equal to
    // a lift of g, summed over the distinct lifts +-g.
    long long solution_count = 0;
};

inline constexpr int max_quotient_modulus = 12;

// Throws BudgetError for n > max_quotient_modulus and DomainError for n < 2.
QuotientReport finite_quotient_test(const GroupElement& g, int n);

}  // namespace modgroup
