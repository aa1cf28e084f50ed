#pragma once

#include "vertexforge/qseries.hpp"
#include "vertexforge/toric.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vf {

/**
 * @brief Multidegree series over the internal edges of a graph: a finite map
 *        degree vector -> coefficient, with the truncation box recorded.
 *
 * total_bound < 0 means no cap on the total degree.  The stored support is
 * complete inside the box; absent keys are zero.
 */
struct DegreeSeries {
    std::vector<int> edge_ids;
    std::vector<int> bound;
    long total_bound = -1;
    std::map<DegreeVector, QRational> coeff;

    const QRational* find(const DegreeVector& d) const;
    bool in_box(const DegreeVector& d) const;
};

/// weight of the partition assignment at one graph: framing factors times vertex weights
QRational y_amplitude(const GTGraph& g, const GammaPartition& gamma);

/// coefficient of the partition function at fixed degree; the zero degree gives 1
QRational z_coefficient(const GTGraph& g, const DegreeVector& d, int threads = 1);

/// all coefficients with d <= bound componentwise (and |d| <= total_bound when set)
DegreeSeries z_series(const GTGraph& g, const std::vector<int>& bound, long total_bound = -1,
                      int threads = 1);

/// log of an already computed partition series, truncated to its box
DegreeSeries log_series(const DegreeSeries& z);

/// log of the partition function, truncated to the same box
DegreeSeries free_energy(const GTGraph& g, const std::vector<int>& bound, long total_bound = -1,
                         int threads = 1);

/// 1, 0, or -1 by the square-free prime signature; k >= 1
int mobius(long k);

/**
 * @brief Degree-d part of the free energy with multicover contributions removed:
 *        sum over k dividing gcd(d) of mu(k)/k times the degree-d/k coefficient
 *        with q replaced by q^k.
 */
QRational g_invariant(const DegreeSeries& f, const DegreeVector& d);

/// raised when a number expected to be an integer polynomial in t is not
class IntegralityViolation : public std::runtime_error {
public:
    IntegralityViolation(DegreeVector d, std::string rendered, const std::string& msg)
        : std::runtime_error(msg), degree(std::move(d)), value(std::move(rendered)) {}

    DegreeVector degree;
    std::string value; ///< the offending quantity, rendered
};

/**
 * @brief Genus decomposition of one degree: t * G_d must be a polynomial in t
 *        with integer coefficients, and the genus-g number is (-1)^(g-1) times
 *        its t^g coefficient.
 * @throws IntegralityViolation when the polynomiality or integrality fails
 */
std::map<int, Int> gv_extract(const DegreeVector& d, const QRational& g_d);

/// integer invariants indexed by (degree or class vector, genus)
struct GVTable {
    std::map<std::pair<std::vector<int>, int>, Int> n;
};

/// rebuild the degree-d free-energy coefficient from the table entries at d/k
QRational reconstruct_free_energy(const GVTable& table, const DegreeVector& d);

/**
 * @brief Linear map from edge degrees to curve classes, one row per class
 *        coordinate.  sum() collapses everything to the total degree.
 */
struct ClassMap {
    std::vector<std::vector<int>> rows;

    static ClassMap sum(std::size_t edge_count);
    static ClassMap identity(std::size_t edge_count);
    std::vector<int> apply(const DegreeVector& d) const;
};

/// sum table entries whose degrees map to the same class
GVTable aggregate_by_class(const GVTable& table, const ClassMap& cm);

/// (k*|n|)! / prod (k*n_i)! for a nonnegative tuple n and k >= 1
Int multinomial(long k, const std::vector<long>& n);

} // namespace vf
