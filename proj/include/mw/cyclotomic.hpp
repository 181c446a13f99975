#pragma once

// Exact arithmetic in Z[zeta_2N] together with half-integer powers of N.
//
// Every quantity in the state sum is a cyclotomic integer times N^(-e/2).
// The ambient ring is Z[zeta_2N] (not Z[zeta_N]) so that a square root of
// omega is available: omega = zeta_2N^(2a), sqrt(omega) = zeta_2N^a.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace mw {

using BigInt = mpz_class;

/// Malformed user input (files, CLI arguments, invalid gluing data).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured term budget.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& msg, double estimate)
        : std::runtime_error(msg), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

namespace detail {

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a,
                                    const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Exact division by a monic divisor; throws if the division is not exact.
inline std::vector<BigInt> poly_divexact(std::vector<BigInt> num,
                                         const std::vector<BigInt>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd) throw std::logic_error("poly_divexact: degree underflow");
    std::vector<BigInt> q(dn - dd + 1, BigInt(0));
    for (int k = dn - dd; k >= 0; --k) {
        BigInt c = num[k + dd];
        q[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0) throw std::logic_error("poly_divexact: remainder nonzero");
    return q;
}

inline std::vector<BigInt> cyclotomic_poly(int m) {
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto compute = [](auto&& self, int n) -> const std::vector<BigInt>& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        std::vector<BigInt> result;
        if (n == 1) {
            result = {BigInt(-1), BigInt(1)};
        } else {
            std::vector<BigInt> num(n + 1, BigInt(0));
            num[0] = -1;
            num[n] = 1;
            std::vector<BigInt> den{BigInt(1)};
            for (int d = 1; d < n; ++d)
                if (n % d == 0) den = poly_mul(den, self(self, d));
            result = poly_divexact(std::move(num), den);
        }
        return cache.emplace(n, std::move(result)).first->second;
    };
    return compute(compute, m);
}

}  // namespace detail

/// Shared reduction data for the ring Z[zeta_m] = Z[x]/Phi_m(x), m = 2N.
class CycloContext {
public:
    static std::shared_ptr<const CycloContext> get(int modulus) {
        if (modulus < 1) throw input_error("cyclotomic modulus must be >= 1");
        static std::map<int, std::shared_ptr<const CycloContext>> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(modulus);
        if (it != cache.end()) return it->second;
        auto ctx = std::shared_ptr<const CycloContext>(new CycloContext(modulus));
        cache.emplace(modulus, ctx);
        return ctx;
    }

    int modulus() const { return modulus_; }
    int degree() const { return degree_; }
    const std::vector<BigInt>& minimal_polynomial() const { return minpoly_; }

    // Canonical coefficient row of x^j for j >= degree (index j - degree).
    const std::vector<BigInt>& reduction_row(int j) const {
        return rows_.at(static_cast<std::size_t>(j - degree_));
    }
    int max_reducible_degree() const {
        return degree_ + static_cast<int>(rows_.size()) - 1;
    }

    // Canonical form of zeta^j, j in [0, modulus), with machine-word entries.
    // Used by the identity verifiers for fast exact accumulation.
    const std::vector<long long>& zeta_row_i64(int j) const {
        return zeta_i64_.at(static_cast<std::size_t>(j));
    }

private:
    explicit CycloContext(int modulus) : modulus_(modulus) {
        minpoly_ = detail::cyclotomic_poly(modulus);
        degree_ = static_cast<int>(minpoly_.size()) - 1;
        const int maxdeg = 2 * std::max(modulus_, degree_) + 1;
        rows_.reserve(static_cast<std::size_t>(maxdeg - degree_ + 1));
        std::vector<BigInt> r(degree_);
        for (int i = 0; i < degree_; ++i) r[i] = -minpoly_[i];
        rows_.push_back(r);
        for (int j = degree_ + 1; j <= maxdeg; ++j) {
            BigInt top = degree_ > 0 ? r[degree_ - 1] : BigInt(0);
            for (int i = degree_ - 1; i >= 1; --i) r[i] = r[i - 1];
            if (degree_ > 0) r[0] = 0;
            if (top != 0)
                for (int i = 0; i < degree_; ++i) r[i] += top * rows_[0][i];
            rows_.push_back(r);
        }
        zeta_i64_.resize(static_cast<std::size_t>(modulus_));
        for (int j = 0; j < modulus_; ++j) {
            std::vector<long long> row(static_cast<std::size_t>(degree_), 0);
            if (j < degree_) {
                row[static_cast<std::size_t>(j)] = 1;
            } else {
                const auto& rr = reduction_row(j);
                for (int i = 0; i < degree_; ++i) {
                    if (!rr[i].fits_slong_p())
                        throw std::logic_error("zeta row exceeds machine word");
                    row[static_cast<std::size_t>(i)] = rr[i].get_si();
                }
            }
            zeta_i64_[static_cast<std::size_t>(j)] = std::move(row);
        }
    }

    int modulus_;
    int degree_;
    std::vector<BigInt> minpoly_;
    std::vector<std::vector<BigInt>> rows_;
    std::vector<std::vector<long long>> zeta_i64_;
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

/// Element of Z[zeta_2N] in canonical form (degree < phi(2N)).
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(CycloContextPtr ctx)
        : ctx_(std::move(ctx)),
          c_(static_cast<std::size_t>(ctx_->degree()), BigInt(0)) {}
    CycInt(CycloContextPtr ctx, std::vector<BigInt> canonical)
        : ctx_(std::move(ctx)), c_(std::move(canonical)) {
        if (static_cast<int>(c_.size()) != ctx_->degree())
            throw std::logic_error("CycInt: wrong coefficient count");
    }

    const CycloContextPtr& context() const { return ctx_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const BigInt& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        a.require_same(b);
        CycInt out(a.ctx_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
        return out;
    }
    friend CycInt operator-(const CycInt& a, const CycInt& b) {
        a.require_same(b);
        CycInt out(a.ctx_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
        return out;
    }
    CycInt operator-() const {
        CycInt out(ctx_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
        return out;
    }
    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.require_same(b);
        const int deg = a.ctx_->degree();
        std::vector<BigInt> prod(static_cast<std::size_t>(2 * deg - 1 > 0 ? 2 * deg - 1 : 1),
                                 BigInt(0));
        for (int i = 0; i < deg; ++i) {
            if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < deg; ++j)
                prod[static_cast<std::size_t>(i + j)] +=
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
        return reduce(a.ctx_, std::move(prod));
    }
    CycInt& operator+=(const CycInt& b) { return *this = *this + b; }
    CycInt& operator-=(const CycInt& b) { return *this = *this - b; }
    CycInt& operator*=(const CycInt& b) { return *this = *this * b; }

    CycInt times_int(const BigInt& k) const {
        CycInt out(ctx_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * k;
        return out;
    }

    // Exact division of every coefficient; throws logic_error if not exact.
    CycInt divexact_int(const BigInt& k) const {
        CycInt out(ctx_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!mpz_divisible_p(c_[i].get_mpz_t(), k.get_mpz_t()))
                throw std::logic_error("CycInt::divexact_int: not divisible");
            mpz_divexact(out.c_[i].get_mpz_t(), c_[i].get_mpz_t(), k.get_mpz_t());
        }
        return out;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        a.require_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    // Reduce an arbitrary integer polynomial in zeta to canonical form.
    static CycInt reduce(const CycloContextPtr& ctx, std::vector<BigInt> raw) {
        const int deg = ctx->degree();
        if (static_cast<int>(raw.size()) - 1 > ctx->max_reducible_degree())
            throw std::logic_error("CycInt::reduce: degree beyond reduction table");
        CycInt out(ctx);
        const int top = std::min<int>(deg, static_cast<int>(raw.size()));
        for (int i = 0; i < top; ++i) out.c_[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)];
        for (int j = deg; j < static_cast<int>(raw.size()); ++j) {
            const BigInt& v = raw[static_cast<std::size_t>(j)];
            if (v == 0) continue;
            const auto& row = ctx->reduction_row(j);
            for (int i = 0; i < deg; ++i) out.c_[static_cast<std::size_t>(i)] += v * row[static_cast<std::size_t>(i)];
        }
        return out;
    }

private:
    void require_same(const CycInt& b) const {
        if (!ctx_ || !b.ctx_ || ctx_->modulus() != b.ctx_->modulus())
            throw std::logic_error("CycInt: mixed cyclotomic contexts");
    }

    CycloContextPtr ctx_;
    std::vector<BigInt> c_;
};

/// canonicalize: integer polynomial in zeta_2N -> canonical ring element.
inline CycInt canonicalize(const CycloContextPtr& ctx, const std::vector<BigInt>& raw) {
    return CycInt::reduce(ctx, raw);
}
inline CycInt canonicalize(const CycloContextPtr& ctx, const std::vector<long>& raw) {
    std::vector<BigInt> tmp(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) tmp[i] = raw[i];
    return CycInt::reduce(ctx, std::move(tmp));
}

/// The root-of-unity configuration: N = ord(omega), omega = zeta_N^a,
/// sqrt(omega) fixed as zeta_2N^a (or zeta_2N^(a+N) when negate_sqrt is set).
class RootSpec {
public:
    explicit RootSpec(int order, int power = 1, bool negate_sqrt = false)
        : order_(order), negate_sqrt_(negate_sqrt) {
        if (order < 1) throw input_error("root order must be >= 1");
        int a = power % order;
        if (a < 0) a += order;
        if (a == 0) a = order;  // representative in [1, N]
        if (std::gcd(a, order) != 1)
            throw input_error("root power must be coprime to the order");
        power_ = a;
        ctx_ = CycloContext::get(2 * order);
    }

    int order() const { return order_; }
    int power() const { return power_; }
    bool negate_sqrt() const { return negate_sqrt_; }
    const CycloContextPtr& context() const { return ctx_; }

    RootSpec with_negated_sqrt() const { return RootSpec(order_, power_, !negate_sqrt_); }
    RootSpec inverse_root() const { return RootSpec(order_, order_ - power_ == 0 ? 1 : order_ - power_, negate_sqrt_); }

    /// zeta_2N^j, canonical.
    CycInt zeta_pow(long long j) const {
        const int m = 2 * order_;
        int e = static_cast<int>(((j % m) + m) % m);
        std::vector<BigInt> raw(static_cast<std::size_t>(e + 1), BigInt(0));
        raw[static_cast<std::size_t>(e)] = 1;
        return CycInt::reduce(ctx_, std::move(raw));
    }

    /// omega^k = zeta_2N^(2ak).
    CycInt omega_pow(long long k) const { return zeta_pow(2 * static_cast<long long>(power_) * reduce_mod(k, order_)); }

    /// (sqrt omega)^k.
    CycInt sqrt_omega_pow(long long k) const {
        return zeta_pow(static_cast<long long>(sqrt_exponent()) * reduce_mod(k, 2 * order_));
    }

    /// Phi(k) = (sqrt omega)^(k(k+N)); well defined on Z/N.
    CycInt phi(long long k) const {
        const long long kk = reduce_mod(k, order_);
        return sqrt_omega_pow(kk * (kk + order_));
    }
    /// Phi-bar(k) = 1/Phi(k).
    CycInt phi_bar(long long k) const {
        const long long kk = reduce_mod(k, order_);
        return sqrt_omega_pow(-kk * (kk + order_));
    }

    CycInt one() const { return from_int(1); }
    CycInt from_int(long v) const {
        CycInt out(ctx_);
        std::vector<BigInt> raw{BigInt(v)};
        return CycInt::reduce(ctx_, std::move(raw));
    }

    /// Exponent s with sqrt(omega) = zeta_2N^s.
    int sqrt_exponent() const { return power_ + (negate_sqrt_ ? order_ : 0); }

    static long long reduce_mod(long long v, long long m) {
        long long r = v % m;
        return r < 0 ? r + m : r;
    }

private:
    int order_;
    int power_;
    bool negate_sqrt_;
    CycloContextPtr ctx_;
};

/// Value c * N^(-e/2) with c in Z[zeta_2N] and e >= 0.
///
/// sqrt(N) itself is never represented in the ring; only the half-power
/// exponent is tracked. Equality across differing exponent parity is
/// conservatively false for nonzero values (see scalar_eq).
class Scalar {
public:
    Scalar() = default;
    Scalar(CycInt cyc, int half_power) : cyc_(std::move(cyc)), half_power_(half_power) {
        if (half_power < 0) throw std::logic_error("Scalar: negative half power");
    }
    static Scalar zero(const CycloContextPtr& ctx) { return Scalar(CycInt(ctx), 0); }

    const CycInt& cyc() const { return cyc_; }
    int half_power() const { return half_power_; }
    bool is_zero() const { return cyc_.is_zero(); }
    int base() const { return cyc_.context()->modulus() / 2; }  // N

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.cyc_ * b.cyc_, a.half_power_ + b.half_power_);
    }
    Scalar operator-() const { return Scalar(-cyc_, half_power_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int n = a.base();
        if (n == 1) return Scalar(a.cyc_ + b.cyc_, std::max(a.half_power_, b.half_power_));
        if (((a.half_power_ - b.half_power_) & 1) != 0)
            throw std::logic_error("Scalar: addition across half-power parity");
        const Scalar& lo = a.half_power_ <= b.half_power_ ? a : b;
        const Scalar& hi = a.half_power_ <= b.half_power_ ? b : a;
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>((hi.half_power_ - lo.half_power_) / 2));
        return Scalar(lo.cyc_.times_int(scale) + hi.cyc_, hi.half_power_);
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// Multiply by N^(k/2); k may be negative or positive. Positive powers
    /// that would make the exponent negative are absorbed into cyc.
    Scalar times_half_power(int k) const {
        const int n = base();
        long long e = static_cast<long long>(half_power_) - k;
        if (n == 1) return Scalar(cyc_, static_cast<int>(std::max<long long>(e, 0)));
        if (e >= 0) return Scalar(cyc_, static_cast<int>(e));
        long long m = -e;
        const int rem = static_cast<int>(m & 1);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>((m + rem) / 2));
        return Scalar(cyc_.times_int(scale), rem);
    }

    /// Galois conjugation zeta -> zeta^(-1) (complex conjugation).
    Scalar conjugate() const {
        const auto& ctx = cyc_.context();
        const int m = ctx->modulus();
        std::vector<BigInt> raw(static_cast<std::size_t>(m), BigInt(0));
        const auto& c = cyc_.coeffs();
        for (int j = 0; j < ctx->degree(); ++j) {
            if (c[static_cast<std::size_t>(j)] == 0) continue;
            raw[static_cast<std::size_t>((m - j) % m)] += c[static_cast<std::size_t>(j)];
        }
        return Scalar(CycInt::reduce(ctx, std::move(raw)), half_power_);
    }

    /// Canonical display form: strip N-divisible content out of the exponent.
    Scalar reduced() const {
        if (is_zero()) return Scalar(CycInt(cyc_.context()), 0);
        const int n = base();
        if (n == 1) return Scalar(cyc_, 0);
        CycInt c = cyc_;
        int e = half_power_;
        const BigInt nn(n);
        while (e >= 2) {
            bool divisible = true;
            for (const BigInt& x : c.coeffs())
                if (!mpz_divisible_p(x.get_mpz_t(), nn.get_mpz_t())) {
                    divisible = false;
                    break;
                }
            if (!divisible) break;
            c = c.divexact_int(nn);
            e -= 2;
        }
        return Scalar(std::move(c), e);
    }

private:
    CycInt cyc_;
    int half_power_ = 0;
};

/// Exact equality of Scalar values.
///
/// Zero compares equal regardless of exponent. For N >= 2, values with
/// differing exponent parity compare unequal (conservative; sqrt(N) may lie
/// in the ring for some N, but no comparison in this project needs that).
inline bool scalar_eq(const Scalar& a, const Scalar& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.is_zero() != b.is_zero()) return false;
    const int n = a.base();
    if (n != b.base()) throw std::logic_error("scalar_eq: mixed contexts");
    if (n == 1) return a.cyc() == b.cyc();
    if (((a.half_power() - b.half_power()) & 1) != 0) return false;
    const Scalar& lo = a.half_power() <= b.half_power() ? a : b;
    const Scalar& hi = a.half_power() <= b.half_power() ? b : a;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>((hi.half_power() - lo.half_power()) / 2));
    return lo.cyc().times_int(scale) == hi.cyc();
}

namespace detail {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_t v;
};

}  // namespace detail

struct ComplexStrings {
    std::string real;
    std::string imag;
};

/// Decimal approximation of a Scalar at the principal embedding
/// zeta_2N = exp(pi*i/N), accurate to the requested number of digits.
inline ComplexStrings to_complex_strings(const Scalar& s, int digits) {
    if (digits < 1) throw input_error("precision must be >= 1");
    const auto& ctx = s.cyc().context();
    const int n = ctx->modulus() / 2;
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.4) + 64;
    detail::Mpfr pi(prec), ang(prec), co(prec), si(prec), re(prec), im(prec), t(prec), den(prec);
    mpfr_const_pi(pi.v, MPFR_RNDN);
    mpfr_set_zero(re.v, 1);
    mpfr_set_zero(im.v, 1);
    const auto& c = s.cyc().coeffs();
    for (int j = 0; j < ctx->degree(); ++j) {
        const BigInt& cj = c[static_cast<std::size_t>(j)];
        if (cj == 0) continue;
        mpfr_mul_si(ang.v, pi.v, j, MPFR_RNDN);
        mpfr_div_si(ang.v, ang.v, n, MPFR_RNDN);
        mpfr_sin_cos(si.v, co.v, ang.v, MPFR_RNDN);
        mpfr_set_z(t.v, cj.get_mpz_t(), MPFR_RNDN);
        mpfr_fma(re.v, t.v, co.v, re.v, MPFR_RNDN);
        mpfr_fma(im.v, t.v, si.v, im.v, MPFR_RNDN);
    }
    mpfr_ui_pow_ui(den.v, static_cast<unsigned long>(n),
                   static_cast<unsigned long>(s.half_power()), MPFR_RNDN);
    mpfr_sqrt(den.v, den.v, MPFR_RNDN);
    mpfr_div(re.v, re.v, den.v, MPFR_RNDN);
    mpfr_div(im.v, im.v, den.v, MPFR_RNDN);
    auto fmt = [&](mpfr_t x) {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits - 1, x);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    };
    return {fmt(re.v), fmt(im.v)};
}

/// Convenience double-precision approximation.
inline std::complex<double> to_complex(const Scalar& s) {
    ComplexStrings cs = to_complex_strings(s, 25);
    return {std::stod(cs.real), std::stod(cs.imag)};
}

/// Exact rendering: "(<polynomial in z>) * N^(-e/2), z = zeta_2N",
/// coefficients in ascending degree order.
inline std::string render_exact(const Scalar& s) {
    const auto& ctx = s.cyc().context();
    const int n = ctx->modulus() / 2;
    std::string poly;
    const auto& c = s.cyc().coeffs();
    for (int j = 0; j < ctx->degree(); ++j) {
        const BigInt& cj = c[static_cast<std::size_t>(j)];
        if (cj == 0) continue;
        const bool neg = cj < 0;
        BigInt mag = neg ? BigInt(-cj) : cj;
        std::string term;
        if (j == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str() + "*";
            term += "z";
            if (j > 1) term += "^" + std::to_string(j);
        }
        if (poly.empty())
            poly = (neg ? "-" : "") + term;
        else
            poly += (neg ? " - " : " + ") + term;
    }
    if (poly.empty()) poly = "0";
    return "(" + poly + ") * " + std::to_string(n) + "^(-" +
           std::to_string(s.half_power()) + "/2), z = zeta_" +
           std::to_string(ctx->modulus());
}

}  // namespace mw
