#include "tromino/analytics.hpp"

#include <cmath>

namespace tromino {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<BigCount> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigCount> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigCount(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) + b.at(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigCount> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigCount(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) - b.at(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return IntPolynomial{};
    std::vector<BigCount> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigCount(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (coeffs_.empty()) return {};
    std::vector<BigCount> out(coeffs_.size() + k, BigCount(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return {a.num * b.num, a.den * b.den};
}

RationalGF operator*(const IntPolynomial& p, const RationalGF& g) { return {p * g.num, g.den}; }

std::vector<BigCount> gf_series(const RationalGF& g, int terms) {
    if (terms < 0) throw Error(Errc::BadInput, "series length must be >= 0");
    const BigCount d0 = g.den.at(0);
    if (d0 == 0)
        throw Error(Errc::NoninvertibleConstantTerm,
                    "denominator constant term is zero; no power series exists");
    std::vector<mpq_class> a(static_cast<size_t>(terms) + 1);
    for (int k = 0; k <= terms; ++k) {
        mpq_class acc(g.num.at(k));
        for (int j = 1; j <= k && j <= g.den.degree(); ++j)
            acc -= mpq_class(g.den.at(j)) * a[k - j];
        a[k] = acc / mpq_class(d0);
        a[k].canonicalize();
    }
    std::vector<BigCount> out;
    out.reserve(a.size());
    for (const mpq_class& q : a) {
        if (q.get_den() != 1)
            throw Error(Errc::NonIntegralSeries, "series coefficient is not an integer");
        out.push_back(q.get_num());
    }
    return out;
}

namespace {

const IntPolynomial& interface_denominator() {
    static const IntPolynomial d{1, -10, 22, 4};
    return d;
}

}  // namespace

MooreGFs moore_gfs() {
    const IntPolynomial& d = interface_denominator();
    return {
        {IntPolynomial{1, -6}, d},
        {IntPolynomial{0, 1, -2}, d},
        {IntPolynomial{0, 2}, d},
    };
}

DerivedGFs derived_gfs() {
    const auto [g, g1, g2] = moore_gfs();
    // every product of two interface GFs sits over the squared denominator,
    // so the combinations are assembled as numerator arithmetic over it
    const IntPolynomial den2 = interface_denominator() * interface_denominator();
    // G_V = 12 z G2 G + 8 G1 G + 6 z G2^2 + 2 G^2
    const IntPolynomial gv_num = IntPolynomial{0, 12} * g2.num * g.num +
                                 IntPolynomial{8} * g1.num * g.num +
                                 IntPolynomial{0, 6} * g2.num * g2.num +
                                 IntPolynomial{2} * g.num * g.num;
    // G_H = 4(1+2z) G^2 + 4z(1+6z) G2^2 + 32 z G1 G2 + 28 z G G2 + 16 z G G1
    const IntPolynomial gh_num = IntPolynomial{4, 8} * g.num * g.num +
                                 IntPolynomial{0, 4, 24} * g2.num * g2.num +
                                 IntPolynomial{0, 32} * g1.num * g2.num +
                                 IntPolynomial{0, 28} * g.num * g2.num +
                                 IntPolynomial{0, 16} * g.num * g1.num;
    RationalGF g_v{gv_num, den2};
    RationalGF g_h{gh_num, den2};
    RationalGF f_printed{IntPolynomial{6, -56, 152, -120, 160}, den2};
    RationalGF f_reconstructed{gv_num + gh_num, den2};
    return {std::move(g_v), std::move(g_h), std::move(f_printed), std::move(f_reconstructed)};
}

double GrowthConstant::residual() const {
    const double x = value;
    double acc = 0.0;
    for (int i = 3; i >= 0; --i) acc = acc * x + static_cast<double>(cubic[i]);
    return std::abs(acc);
}

GrowthConstant growth_constant() {
    GrowthConstant out;
    out.cubic = {4, 22, -10, 1};
    long double x = 10.0L;
    for (int it = 0; it < 200; ++it) {
        const long double p = ((x - 10.0L) * x + 22.0L) * x + 4.0L;
        const long double dp = (3.0L * x - 20.0L) * x + 22.0L;
        const long double step = p / dp;
        x -= step;
        if (std::abs(static_cast<double>(step)) < 1e-12 && it > 2) break;
    }
    out.value = static_cast<double>(x);
    return out;
}

KasteleynResult kasteleyn_count(int m, int n) {
    if (m < 1 || n < 1) throw Error(Errc::BadInput, "half-dimensions must be positive");
    const long double pi = 3.14159265358979323846264338327950288L;
    std::vector<long double> logs;
    logs.reserve(static_cast<size_t>(m) * n);
    long double mantissa = 1.0L;
    long long exponent = 2LL * m * n;  // 4^(mn) = 2^(2mn)
    for (int j = 1; j <= m; ++j) {
        const long double cj = std::cos(j * pi / (2 * m + 1));
        for (int k = 1; k <= n; ++k) {
            const long double ck = std::cos(k * pi / (2 * n + 1));
            const long double factor = cj * cj + ck * ck;
            logs.push_back(std::log(factor));
            int e = 0;
            mantissa = std::frexp(mantissa * factor, &e);
            exponent += e;
        }
    }
    // pairwise summation keeps the log accurate for large boards
    std::vector<long double> sums = std::move(logs);
    while (sums.size() > 1) {
        std::vector<long double> next;
        next.reserve((sums.size() + 1) / 2);
        for (size_t i = 0; i + 1 < sums.size(); i += 2) next.push_back(sums[i] + sums[i + 1]);
        if (sums.size() % 2) next.push_back(sums.back());
        sums = std::move(next);
    }
    KasteleynResult out;
    out.log_value =
        static_cast<double>((sums.empty() ? 0.0L : sums[0]) + 2.0L * m * n * std::log(2.0L));
    if (exponent <= 62) {
        out.rounded = BigCount(static_cast<long>(std::llround(std::ldexp(mantissa, exponent))));
    } else {
        // exactness beyond 63 bits is limited by long double precision
        const long long shift = exponent - 62;
        BigCount scaled(static_cast<long>(std::llround(std::ldexp(mantissa, 62))));
        mpz_mul_2exp(out.rounded.get_mpz_t(), scaled.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(shift));
    }
    return out;
}

BigCount upper_bound_domino_deficient(int m, int n) {
    if ((static_cast<long long>(m) * n - 2) % 3 != 0)
        throw Error(Errc::Area, "bound needs 3 | (mn - 2)");
    const BigCount wide = count_domino(Rect{m, 2 * n});
    const BigCount tall = count_domino(Rect{2 * m, n});
    BigCount scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>((4LL * m * n - 2) / 3));
    return scale * std::min(wide, tall);
}

namespace {

BigCount pow2(int t) {
    BigCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(t));
    return out;
}

}  // namespace

BigCount t2_count_formula(int t) {
    if (t < 0) throw Error(Errc::BadInput, "t must be >= 0");
    return BigCount(2 * t + 1) * pow2(t);
}

BigCount t2_vertical(int t) {
    if (t < 0) throw Error(Errc::BadInput, "t must be >= 0");
    return BigCount(t + 1) * pow2(t);
}

BigCount t2_horizontal(int t) {
    if (t < 0) throw Error(Errc::BadInput, "t must be >= 0");
    return BigCount(t) * pow2(t);
}

}  // namespace tromino
