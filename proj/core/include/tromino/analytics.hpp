#ifndef TROMINO_ANALYTICS_HPP
#define TROMINO_ANALYTICS_HPP

#include <array>
#include <vector>

#include "tromino/count.hpp"

namespace tromino {

/// Integer-coefficient polynomial, ascending powers of z, trailing zeros
/// trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<BigCount> coeffs);

    const std::vector<BigCount>& coeffs() const { return coeffs_; }
    BigCount at(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigCount(0); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial shifted(int k) const;  // multiply by z^k
    bool operator==(const IntPolynomial&) const = default;

private:
    void trim();
    std::vector<BigCount> coeffs_;
};

/// Ratio of integer polynomials; a power-series expansion exists whenever the
/// denominator has a nonzero constant term.
struct RationalGF {
    IntPolynomial num;
    IntPolynomial den;
};

RationalGF operator+(const RationalGF& a, const RationalGF& b);
RationalGF operator*(const RationalGF& a, const RationalGF& b);
RationalGF operator*(const IntPolynomial& p, const RationalGF& g);

/// First T+1 Taylor coefficients via the linear recurrence induced by the
/// denominator. Throws Error(NoninvertibleConstantTerm) when den(0) = 0 and
/// Error(NonIntegralSeries) when a coefficient is not an integer (possible
/// when den(0) is not a unit).
std::vector<BigCount> gf_series(const RationalGF& g, int terms);

/// The width-4 interface generating functions
///   G  = (1 - 6z)      / (1 - 10z + 22z^2 + 4z^3)
///   G1 = z(1 - 2z)     / (1 - 10z + 22z^2 + 4z^3)
///   G2 = 2z            / (1 - 10z + 22z^2 + 4z^3)
struct MooreGFs {
    RationalGF g, g1, g2;
};
MooreGFs moore_gfs();

/// G_V, G_H assembled from the interface GFs by exact polynomial arithmetic,
/// and the mixed-count series F both as printed,
///   F = (6 - 56z + 152z^2 - 120z^3 + 160z^4) / (1 - 10z + 22z^2 + 4z^3)^2,
/// and reconstructed as G_V + G_H. The coefficient of z^t counts the tilings
/// of the 4 x (3t+2) rectangle by one domino and trominoes, t starting at 0.
struct DerivedGFs {
    RationalGF g_v, g_h, f_printed, f_reconstructed;
};
DerivedGFs derived_gfs();

struct GrowthConstant {
    double value = 0.0;
    std::array<long, 4> cubic{};  // p(x) = x^3 - 10x^2 + 22x + 4, ascending
    double residual() const;
};

/// Largest positive root of x^3 - 10x^2 + 22x + 4, by Newton iteration from
/// 10 converged to |step| < 1e-12.
GrowthConstant growth_constant();

struct KasteleynResult {
    double log_value = 0.0;  // natural log of the product
    BigCount rounded;
};

/// The trigonometric product counting domino tilings of the 2m x 2n
/// rectangle, evaluated in log space with pairwise summation. The rounded
/// integer is exact at desk scale (value < 2^63).
KasteleynResult kasteleyn_count(int m, int n);

/// 2^((4mn-2)/3) * min(N_D(m, 2n), N_D(2m, n)) with exact DP domino counts;
/// an upper bound on the tromino tilings of the domino-deficient m x n
/// rectangle summed over domino positions. Requires 3 | (mn - 2).
BigCount upper_bound_domino_deficient(int m, int n);

/// Closed forms for the 2 x (3t+1) mixed counts: total (2t+1)*2^t with
/// vertical-domino component (t+1)*2^t and horizontal component t*2^t.
BigCount t2_count_formula(int t);
BigCount t2_vertical(int t);
BigCount t2_horizontal(int t);

}  // namespace tromino

#endif
