#include "modgroup/obstructions.hpp"

#include "modgroup/errors.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

namespace modgroup {

bool trace_test(const GroupElement& g) {
    auto t = g.trace();
    return is_perfect_square(2 - t) || is_perfect_square(2 + t);
}

namespace {

using Mat = std::array<int, 4>;

struct TwistClass {
    int n;
    std::vector<Mat> members;
    std::vector<bool> contains;  // indexed by encode()

    int encode(const Mat& m) const { return ((m[0] * n + m[1]) * n + m[2]) * n + m[3]; }
};

Mat multiply(const Mat& x, const Mat& y, int n) {
    return {(x[0] * y[0] + x[1] * y[2]) % n, (x[0] * y[1] + x[1] * y[3]) % n, (x[2] * y[0] + x[3] * y[2]) % n,
            (x[2] * y[1] + x[3] * y[3]) % n};
}

// inverse of a determinant 1 matrix
Mat inverse(const Mat& m, int n) { return {m[3], (n - m[1]) % n, (n - m[2]) % n, m[0]}; }

std::unique_ptr<TwistClass> build_class(int n) {
    auto out = std::make_unique<TwistClass>();
    out->n = n;
    out->contains.assign(static_cast<std::size_t>(n) * n * n * n, false);
    const Mat r{1 % n, 0, 1 % n, 1 % n};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (((a * d - b * c) % n + n) % n != 1 % n) continue;
                    Mat h{a, b, c, d};
                    auto x = multiply(multiply(inverse(h, n), r, n), h, n);
                    auto key = static_cast<std::size_t>(out->encode(x));
                    if (out->contains[key]) continue;
                    out->contains[key] = true;
                    out->members.push_back(x);
                }
    return out;
}

const TwistClass& twist_class(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<TwistClass>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = build_class(n);
    return *slot;
}

int reduce(const Integer& x, int n) {
    Integer r = x % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

}  // namespace

QuotientReport finite_quotient_test(const GroupElement& g, int n) {
    if (n < 2) throw DomainError("modulus must be at least 2");
    if (n > max_quotient_modulus)
        throw BudgetError("modulus " + std::to_string(n) + " exceeds the quotient budget of " +
                          std::to_string(max_quotient_modulus));
    const auto& cls = twist_class(n);
    const auto& m = g.lift();
    Mat plus{reduce(m.a, n), reduce(m.b, n), reduce(m.c, n), reduce(m.d, n)};
    Mat minus{(n - plus[0]) % n, (n - plus[1]) % n, (n - plus[2]) % n, (n - plus[3]) % n};
    std::set<Mat> lifts{plus, minus};

    QuotientReport report;
    report.modulus = n;
    for (const auto& target : lifts)
        for (const auto& x1 : cls.members) {
            auto x2 = multiply(inverse(x1, n), target, n);
            if (cls.contains[static_cast<std::size_t>(cls.encode(x2))]) ++report.solution_count;
        }
    report.solvable = report.solution_count > 0;
    return report;
}

}  // namespace modgroup
