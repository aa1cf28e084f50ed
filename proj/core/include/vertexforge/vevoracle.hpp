#pragma once

#include "vertexforge/partitions.hpp"
#include "vertexforge/qseries.hpp"

#include <stdexcept>
#include <vector>

namespace vf {

/// mode operator E_c(n); (0,0) is excluded
struct EOp {
    long c = 0;
    long n = 0;
};

/// raised when a vacuum expectation hits the divergent scalar 1/[0]
class DivergentTerm : public std::domain_error {
public:
    explicit DivergentTerm(const std::string& msg) : std::domain_error(msg) {}
};

/**
 * @brief Vacuum expectation value of a product of mode operators, evaluated by
 *        normal ordering.
 *
 * Rewriting rule, always applied to the rightmost adjacent pair with left
 * index nonnegative and right index negative:
 *   E_a(m) E_b(n) = E_b(n) E_a(m) + [an - bm] E_{a+b}(m+n)   when (a+b, m+n) != (0,0)
 *   E_a(m) E_{-a}(-m) = E_{-a}(-m) E_a(m) + a                when a >= 0
 * Boundary values: an annihilator E_a(m) with a > 0 on the right kills the
 * vacuum, E_0(m) on the right contributes 1/[m], a creator (negative index) on
 * the left kills the dual vacuum, and the empty product gives 1.
 */
QRational vev_e_product(std::vector<EOp> ops);

/**
 * @brief Three-partition vertex weight computed from mode operator vacuum
 *        expectations and symmetric group characters, with no Schur function
 *        machinery shared with the series evaluator.  Slow; meant as an
 *        independent cross-check.
 */
QRational three_point_oracle(const Partition& l1, const Partition& l2, const Partition& l3,
                             int threads = 1);

} // namespace vf
