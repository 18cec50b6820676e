#include "comax/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include "comax/errors.hpp"

namespace comax {

UnimodalVerdict is_unimodal(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("is_unimodal: zero polynomial");
    const auto a = dense_coefficients(p);
    const std::size_t last = a.size() - 1;

    // longest non-decreasing prefix and non-increasing suffix
    std::size_t inc = 0;
    while (inc < last && a[inc] <= a[inc + 1]) ++inc;
    std::size_t dec = last;
    while (dec > 0 && a[dec - 1] >= a[dec]) --dec;

    if (dec > inc) return {false, std::nullopt};
    return {true, static_cast<std::int64_t>(dec)};
}

std::int64_t oscillation(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("oscillation: zero polynomial");
    const auto a = dense_coefficients(p);
    std::int64_t changes = 0;
    int prev = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        const int sign = a[i] < a[i + 1] ? 1 : (a[i] > a[i + 1] ? -1 : 0);
        if (sign == 0) continue;
        if (prev != 0 && sign != prev) ++changes;
        prev = sign;
    }
    return changes;
}

LogConcavityVerdict is_log_concave(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("is_log_concave: zero polynomial");
    const auto a = dense_coefficients(p);
    LogConcavityVerdict verdict;
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (a[i] * a[i] < a[i - 1] * a[i + 1]) {
            verdict.log_concave = false;
            verdict.violations.push_back(static_cast<std::int64_t>(i));
        }
    return verdict;
}

bool newton_check(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("newton_check: zero polynomial");
    const auto a = dense_coefficients(p);
    for (const auto& c : a)
        if (c < 0) throw std::domain_error("newton_check: coefficients must be non-negative");
    const std::int64_t n = static_cast<std::int64_t>(a.size()) - 1;
    for (std::int64_t i = 1; i < n; ++i) {
        // a_i^2 >= a_{i-1} a_{i+1} (1 + 1/i)(1 + 1/(n-i)), cleared denominators
        const BigInt lhs = a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)] * i * (n - i);
        const BigInt rhs =
            a[static_cast<std::size_t>(i - 1)] * a[static_cast<std::size_t>(i + 1)] * (i + 1) * (n - i + 1);
        if (lhs < rhs) return false;
    }
    return true;
}

Annulus enestrom_kakeya(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("enestrom_kakeya: degree >= 1 required");
    const auto a = dense_coefficients(p);
    for (const auto& c : a)
        if (c <= 0)
            throw std::domain_error(
                "enestrom_kakeya: requires strictly positive coefficients");
    Annulus bounds{BigRational(a[0], a[1]), BigRational(a[0], a[1])};
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        const BigRational ratio(a[i], a[i + 1]);
        bounds.inner = std::min(bounds.inner, ratio);
        bounds.outer = std::max(bounds.outer, ratio);
    }
    return bounds;
}

namespace {

using Cmplx = std::complex<long double>;
using QuadReal = boost::multiprecision::float128;
using QuadCmplx = boost::multiprecision::complex128;

template <typename R>
R real_from(const BigInt& x) {
    return x.template convert_to<R>();
}

template <typename R, typename C>
struct DensePoly {
    std::vector<R> coeffs;  // ascending
    std::vector<R> abs_coeffs;
    std::vector<R> deriv;

    explicit DensePoly(const std::vector<BigInt>& exact) {
        using std::abs;
        coeffs.reserve(exact.size());
        for (const auto& c : exact) coeffs.push_back(real_from<R>(c));
        abs_coeffs.reserve(coeffs.size());
        for (const auto& c : coeffs) abs_coeffs.push_back(abs(c));
        deriv.resize(coeffs.size() > 1 ? coeffs.size() - 1 : 0);
        for (std::size_t i = 1; i < coeffs.size(); ++i) deriv[i - 1] = coeffs[i] * R(i);
    }

    C eval(C z) const {
        C acc{0, 0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + C(*it, R(0));
        return acc;
    }

    C eval_deriv(C z) const {
        C acc{0, 0};
        for (auto it = deriv.rbegin(); it != deriv.rend(); ++it) acc = acc * z + C(*it, R(0));
        return acc;
    }

    /// |p(z)| / sum |a_i| |z|^i
    R residual(C z) const {
        using std::abs;
        const R az = abs(z);
        R scale{0};
        for (auto it = abs_coeffs.rbegin(); it != abs_coeffs.rend(); ++it) scale = scale * az + *it;
        if (scale == R(0)) return R(0);
        return abs(eval(z)) / scale;
    }
};

/// One working-precision tier of the simultaneous iteration: assess, run
/// Ehrlich-Aberth sweeps while any root's residual exceeds tol, Newton-polish,
/// and report whether residuals and the root-sum identity both hold.
template <typename R, typename C>
struct AberthTier {
    const DensePoly<R, C> poly;
    const R tol;
    const int max_iterations;
    R expected_sum;

    AberthTier(const std::vector<BigInt>& exact, double tolerance, int iterations)
        : poly(exact), tol(tolerance), max_iterations(iterations) {
        const std::size_t d = exact.size() - 1;
        expected_sum = -real_from<R>(exact[d - 1]) / real_from<R>(exact[d]);
    }

    void sweep(std::vector<C>& roots, const std::vector<bool>& frozen,
               std::vector<R>& correction_size) const {
        using std::abs;
        const std::size_t d = roots.size();
        for (std::size_t i = 0; i < d; ++i) {
            if (frozen[i]) continue;
            const C pz = poly.eval(roots[i]);
            const C dpz = poly.eval_deriv(roots[i]);
            if (abs(dpz) == R(0)) {
                const R nudge = R(1e-6) * (abs(roots[i]) + R(1));
                roots[i] += C(nudge, R(1e-6));
                correction_size[i] = nudge;
                continue;
            }
            const C w = pz / dpz;
            C repulsion{0, 0};
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                const C diff = roots[i] - roots[j];
                if (abs(diff) == R(0)) continue;
                repulsion += C(R(1), R(0)) / diff;
            }
            const C denom = C(R(1), R(0)) - w * repulsion;
            C correction = abs(denom) == R(0) ? w : w / denom;
            // a near-zero denominator can fling the iterate to a huge radius
            // it would crawl back from; bound the step instead
            const R limit = R(2) * (R(1) + abs(roots[i]));
            const R magnitude = abs(correction);
            if (magnitude > limit) correction = correction * C(limit / magnitude, R(0));
            roots[i] -= correction;
            correction_size[i] = abs(correction);
            if (!(abs(roots[i]) < R(1e30))) {
                // NaN or runaway; restart from a rotated unit-circle point
                const double angle = 2.0 * std::numbers::pi * static_cast<double>(i + 1) /
                                         static_cast<double>(d) +
                                     0.7;
                roots[i] = C(R(std::cos(angle)), R(std::sin(angle)));
                correction_size[i] = R(1e30);
            }
        }
    }

    void polish(std::vector<C>& roots) const {
        using std::abs;
        for (auto& z : roots) {
            for (int step = 0; step < 4; ++step) {
                const C dp = poly.eval_deriv(z);
                if (abs(dp) == R(0)) break;
                const C next = z - poly.eval(z) / dp;
                if (poly.residual(next) <= poly.residual(z))
                    z = next;
                else
                    break;
            }
        }
    }

    bool sum_identity_holds(const std::vector<C>& roots) const {
        using std::abs;
        C sum{0, 0};
        for (const auto& z : roots) sum += z;
        const R scale = std::max(R(1), R(abs(expected_sum)));
        return abs(sum - C(expected_sum, R(0))) <= R(1e-9) * scale;
    }

    bool all_residuals_ok(const std::vector<C>& roots) const {
        for (const auto& z : roots)
            if (poly.residual(z) > tol) return false;
        return true;
    }

    struct Outcome {
        bool residuals_ok;
        bool sum_ok;
    };

    /// Iterates until every root freezes (residual met and correction at the
    /// precision floor -- backward error alone is not enough, since an
    /// ill-conditioned cluster passes the residual test at badly wrong
    /// positions), the budget runs out, or the tier stalls.  A stall is
    /// declared only when the corrections of the active roots plateau while
    /// those roots already meet the residual tolerance: that is the flat
    /// region this precision cannot resolve further.  A root still far from
    /// the zero set keeps the tier iterating.
    Outcome run(std::vector<C>& roots) const {
        constexpr std::size_t kStallWindow = 50;
        using std::abs;
        const R eps = std::numeric_limits<R>::epsilon() * R(8);
        std::vector<bool> frozen(roots.size(), false);
        std::vector<R> correction(roots.size(), R(1e60));
        std::vector<R> max_history;
        bool done = false;
        for (int iter = 0; iter < max_iterations && !done; ++iter) {
            sweep(roots, frozen, correction);
            done = true;
            bool actives_meet_tol = true;
            R max_active{0};
            for (std::size_t i = 0; i < roots.size(); ++i) {
                if (frozen[i]) continue;
                const R res = poly.residual(roots[i]);
                if (res <= tol && correction[i] <= eps * (R(1) + R(abs(roots[i])))) {
                    frozen[i] = true;
                    continue;
                }
                done = false;
                if (res > tol) actives_meet_tol = false;
                max_active = std::max(max_active, correction[i]);
            }
            max_history.push_back(max_active);
            const std::size_t t = max_history.size() - 1;
            if (!done && actives_meet_tol && t >= kStallWindow &&
                max_history[t] > R(0.9) * max_history[t - kStallWindow])
                break;
        }
        polish(roots);
        return {all_residuals_ok(roots), sum_identity_holds(roots)};
    }
};

std::vector<Root> aberth_solve(const std::vector<BigInt>& exact, double tol, int max_iterations) {
    const std::size_t d = exact.size() - 1;

    // perturbed-circle initial guesses; radius from the constant/leading
    // magnitude ratio computed via bit lengths to stay overflow-safe
    const double bits0 = static_cast<double>(boost::multiprecision::msb(abs(exact.front())));
    const double bitsd = static_cast<double>(boost::multiprecision::msb(abs(exact.back())));
    double radius = std::exp2((bits0 - bitsd) / static_cast<double>(d));
    radius = std::clamp(radius, 1e-6, 1e6);

    std::vector<std::complex<double>> zd(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.25) /
                                 static_cast<double>(d) +
                             0.45;
        zd[i] = {radius * std::cos(angle), radius * std::sin(angle)};
    }

    const AberthTier<double, std::complex<double>> tier1(exact, tol, max_iterations);
    tier1.run(zd);

    std::vector<Cmplx> zl(d);
    for (std::size_t i = 0; i < d; ++i) zl[i] = {zd[i].real(), zd[i].imag()};
    const AberthTier<long double, Cmplx> tier2(exact, tol, max_iterations);
    const auto extended = tier2.run(zl);

    // escalate whenever the residual contract is unmet; escalate for forward
    // accuracy (root-sum identity) only while the coefficient bit-length
    // leaves binary128 enough headroom for the cancellation
    std::size_t coeff_bits = 0;
    for (const auto& c : exact)
        if (c != 0) coeff_bits = std::max<std::size_t>(coeff_bits, boost::multiprecision::msb(abs(c)));
    const bool escalate =
        !extended.residuals_ok || (!extended.sum_ok && coeff_bits <= 100);

    std::vector<Root> out;
    out.reserve(d);
    if (!escalate) {
        std::vector<int> unconverged;
        for (std::size_t i = 0; i < d; ++i)
            if (tier2.poly.residual(zl[i]) > static_cast<long double>(tol))
                unconverged.push_back(static_cast<int>(i));
        if (!unconverged.empty()) {
            std::string msg = "find_roots: no convergence for root indices";
            for (int i : unconverged) msg += " " + std::to_string(i);
            throw convergence_error(msg, unconverged);
        }
        for (const auto& z : zl)
            out.push_back(Root{static_cast<double>(z.real()), static_cast<double>(z.imag()),
                               static_cast<double>(tier2.poly.residual(z))});
        return out;
    }

    std::vector<QuadCmplx> zq(d);
    for (std::size_t i = 0; i < d; ++i)
        zq[i] = QuadCmplx(QuadReal(zl[i].real()), QuadReal(zl[i].imag()));
    const AberthTier<QuadReal, QuadCmplx> tier3(exact, tol, max_iterations);
    tier3.run(zq);

    std::vector<int> unconverged;
    for (std::size_t i = 0; i < d; ++i)
        if (tier3.poly.residual(zq[i]) > QuadReal(tol)) unconverged.push_back(static_cast<int>(i));
    if (!unconverged.empty()) {
        std::string msg = "find_roots: no convergence for root indices";
        for (int i : unconverged) msg += " " + std::to_string(i);
        throw convergence_error(msg, unconverged);
    }

    for (const auto& z : zq)
        out.push_back(Root{z.real().convert_to<double>(), z.imag().convert_to<double>(),
                           tier3.poly.residual(z).convert_to<double>()});
    return out;
}

}  // namespace

std::vector<Root> find_roots(const IntPolynomial& p, double tol, int max_iterations) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("find_roots: degree >= 1 required");

    // zero-root multiplicity is the minimal sparse exponent, read off exactly
    const std::int64_t zero_mult = p.min_exponent();
    IntPolynomial deflated;
    for (const auto& [e, c] : p.terms()) deflated.set_coefficient(e - zero_mult, c);

    std::vector<Root> out(static_cast<std::size_t>(zero_mult), Root{0.0, 0.0, 0.0});

    if (deflated.degree() >= 1) {
        const auto exact = dense_coefficients(deflated);
        const auto located = aberth_solve(exact, tol, max_iterations);
        out.insert(out.end(), located.begin(), located.end());
    }

    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return out;
}

namespace {

constexpr int kRealRootGrid = 4096;

/// Exact real-zero count of the deflated polynomial by sign changes on a
/// rational grid spanning a Cauchy-style root bound.
std::int64_t grid_real_count(const IntPolynomial& q) {
    const auto a = dense_coefficients(q);
    const std::size_t d = a.size() - 1;
    if (d == 0) return 0;

    BigInt max_abs = 0;
    for (std::size_t i = 0; i < d; ++i) {
        BigInt mag = a[i] < 0 ? BigInt(-a[i]) : a[i];
        max_abs = std::max(max_abs, mag);
    }
    BigInt lead = a[d] < 0 ? BigInt(-a[d]) : a[d];
    const BigRational cauchy = BigRational(max_abs, lead) + 1;

    // exact power-of-two Fujiwara-style bound via bit lengths:
    // |a_{d-k}/a_d|^(1/k) <= 2^((msb|a_{d-k}| + 1 - msb|a_d|)/k), so every
    // zero has magnitude below 2^(1 + max_k ceil(...)).  Usually far tighter
    // than the Cauchy value, which keeps the sign grid fine enough.
    const std::int64_t lead_bits = static_cast<std::int64_t>(boost::multiprecision::msb(lead));
    std::int64_t best_exp = 0;
    for (std::size_t k = 1; k <= d; ++k) {
        const BigInt& c = a[d - k];
        if (c == 0) continue;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        const std::int64_t delta =
            static_cast<std::int64_t>(boost::multiprecision::msb(mag)) + 1 - lead_bits;
        if (delta <= 0) continue;
        best_exp = std::max(best_exp, (delta + static_cast<std::int64_t>(k) - 1) /
                                          static_cast<std::int64_t>(k));
    }
    const BigRational fujiwara = BigRational(BigInt(1) << (1 + best_exp));

    // every real zero lies in [-(B+1), B+1]; grid points are
    // (2j - N) * span / N with span = B + 1 as a rational
    const BigRational span = std::min(cauchy, fujiwara) + 1;
    const BigInt span_num = numerator(span);
    const BigInt span_den = denominator(span);
    const BigInt den = span_den * kRealRootGrid;

    std::int64_t count = 0;
    int prev_sign = 0;
    for (int j = 0; j <= kRealRootGrid; ++j) {
        const BigInt num = span_num * (2 * j - kRealRootGrid);
        // sign of q(num/den) via integer Horner with cleared denominators
        BigInt value = a[d];
        BigInt den_power = 1;
        for (std::size_t i = d; i-- > 0;) {
            den_power *= den;
            value = value * num + a[i] * den_power;
        }
        const int sign = value == 0 ? 0 : (value < 0 ? -1 : 1);
        if (sign == 0) {
            ++count;
            prev_sign = 0;
        } else {
            if (prev_sign != 0 && sign != prev_sign) ++count;
            prev_sign = sign;
        }
    }
    return count;
}

}  // namespace

std::int64_t real_root_count(const IntPolynomial& p, const RunConfig& cfg) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("real_root_count: degree >= 1 required");

    const auto roots = find_roots(p, cfg.root_tol, cfg.max_iterations);
    std::int64_t numeric = 0;
    for (const auto& r : roots)
        if (std::abs(r.im) <= cfg.tol_imag * (1.0 + std::hypot(r.re, r.im))) ++numeric;

    const std::int64_t zero_mult = p.min_exponent();
    IntPolynomial deflated;
    for (const auto& [e, c] : p.terms()) deflated.set_coefficient(e - zero_mult, c);
    const std::int64_t exact = zero_mult + grid_real_count(deflated);

    if (numeric != exact)
        throw inconsistency_error("real_root_count: numeric threshold counts " +
                                  std::to_string(numeric) + " real zeros but the exact grid counts " +
                                  std::to_string(exact));
    return numeric;
}

AnalysisReport analyze(const IntPolynomial& p, const RunConfig& cfg) {
    if (p.is_zero()) throw std::domain_error("analyze: zero polynomial");
    AnalysisReport report;

    const auto uni = is_unimodal(p);
    report.unimodal = uni.unimodal;
    report.mode_index = uni.mode;
    report.oscillation = oscillation(p);

    auto lc = is_log_concave(p);
    report.log_concave = lc.log_concave;
    report.log_concave_violations = std::move(lc.violations);
    report.newton_holds = newton_check(p);

    try {
        report.annulus = enestrom_kakeya(p);
    } catch (const std::domain_error& e) {
        report.annulus_omitted_reason = e.what();
    }

    if (p.degree() >= 1) {
        report.roots = find_roots(p, cfg.root_tol, cfg.max_iterations);
        report.real_root_count = real_root_count(p, cfg);
    }
    return report;
}

}  // namespace comax
