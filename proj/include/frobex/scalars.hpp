#ifndef FROBEX_SCALARS_HPP
#define FROBEX_SCALARS_HPP

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobex/error.hpp"

namespace frobex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

/// Integer polynomial, lowest degree first.
using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

/// Exact quotient of num by a monic den; throws if the division leaves a remainder.
inline IntPoly divide_exact(IntPoly num, const IntPoly& den)
{
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size())
        throw Error("divide_exact: degree too small");
    IntPoly q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        const BigInt c = num[k];
        if (c == 0)
            continue;
        q[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            num[k - dd + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty())
        throw Error("divide_exact: nonzero remainder");
    return q;
}

inline std::map<unsigned, IntPoly>& cyclotomic_memo()
{
    static std::map<unsigned, IntPoly> memo;
    return memo;
}

/// Phi_n by dividing x^n - 1 by Phi_d for every proper divisor d. Caller holds the registry lock.
inline const IntPoly& cyclotomic_locked(unsigned n)
{
    auto& memo = cyclotomic_memo();
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            p = divide_exact(p, cyclotomic_locked(d));
    return memo.emplace(n, std::move(p)).first->second;
}

struct FieldData {
    unsigned conductor = 1;
    std::size_t degree = 1;
    IntPoly min_poly;
    /// fold[k - degree] is x^k reduced mod Phi_N, for degree <= k <= 2*degree - 2.
    std::vector<IntPoly> fold;
    /// zeta_pow[j] is x^j reduced mod Phi_N, for 0 <= j < N.
    std::vector<IntPoly> zeta_pow;
};

inline std::mutex& registry_mutex()
{
    static std::mutex m;
    return m;
}

inline std::map<unsigned, std::unique_ptr<FieldData>>& registry()
{
    static std::map<unsigned, std::unique_ptr<FieldData>> r;
    return r;
}

inline std::unique_ptr<FieldData> build_field(unsigned n)
{
    auto f = std::make_unique<FieldData>();
    f->conductor = n;
    f->min_poly = cyclotomic_locked(n);
    f->degree = f->min_poly.size() - 1;
    const std::size_t deg = f->degree;
    const std::size_t top = std::max<std::size_t>(n, 2 * deg - 1);
    IntPoly cur(deg, 0);
    cur[0] = 1;
    for (std::size_t k = 0; k < top; ++k) {
        if (k < n)
            f->zeta_pow.push_back(cur);
        if (k >= deg && k <= 2 * deg - 2)
            f->fold.push_back(cur);
        // multiply by x and reduce
        BigInt carry = cur[deg - 1];
        for (std::size_t j = deg - 1; j > 0; --j)
            cur[j] = cur[j - 1];
        cur[0] = 0;
        if (carry != 0)
            for (std::size_t j = 0; j < deg; ++j)
                cur[j] -= carry * f->min_poly[j];
    }
    return f;
}

inline std::atomic<unsigned>& cap_storage()
{
    static std::atomic<unsigned> cap{120};
    return cap;
}

} // namespace detail

/// Largest conductor field_make accepts.
inline unsigned conductor_cap() { return detail::cap_storage().load(); }
inline void set_conductor_cap(unsigned cap) { detail::cap_storage().store(cap); }

/// Handle to the cyclotomic field Q(zeta_N). Handles are interned, so equality is identity.
class CycField {
public:
    CycField() : data_(rationals()) {}

    static CycField make(unsigned n)
    {
        if (n == 0)
            throw FieldError("conductor must be positive");
        if (n > conductor_cap())
            throw CapacityError("conductor " + std::to_string(n) + " exceeds cap " +
                                std::to_string(conductor_cap()));
        std::lock_guard<std::mutex> lock(detail::registry_mutex());
        auto& reg = detail::registry();
        auto it = reg.find(n);
        if (it == reg.end())
            it = reg.emplace(n, detail::build_field(n)).first;
        return CycField(it->second.get());
    }

    unsigned conductor() const { return data_->conductor; }
    std::size_t degree() const { return data_->degree; }
    const detail::IntPoly& min_poly() const { return data_->min_poly; }
    const detail::FieldData* data() const { return data_; }

    friend bool operator==(const CycField& a, const CycField& b) { return a.data_ == b.data_; }
    friend bool operator!=(const CycField& a, const CycField& b) { return a.data_ != b.data_; }

    std::string name() const { return "Q(zeta_" + std::to_string(conductor()) + ")"; }

private:
    explicit CycField(const detail::FieldData* d) : data_(d) {}
    static const detail::FieldData* rationals()
    {
        static const detail::FieldData* q = make(1).data_;
        return q;
    }
    const detail::FieldData* data_;
};

inline CycField field_make(unsigned n) { return CycField::make(n); }

inline void require_same_field(const CycField& a, const CycField& b)
{
    if (a != b)
        throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

/// Element of Q(zeta_N), stored as an integer polynomial over a positive common denominator,
/// reduced mod Phi_N and in lowest terms.
class CycScalar {
public:
    CycScalar() = default;
    explicit CycScalar(CycField f) : field_(f) {}
    CycScalar(CycField f, long v) : field_(f)
    {
        if (v != 0) {
            num_.assign(f.degree(), 0);
            num_[0] = v;
        }
    }
    CycScalar(CycField f, const Rational& r) : field_(f)
    {
        if (r != 0) {
            num_.assign(f.degree(), 0);
            num_[0] = boost::multiprecision::numerator(r);
            den_ = boost::multiprecision::denominator(r);
        }
    }

    /// zeta_N^j for any integer j.
    static CycScalar zeta(CycField f, long j)
    {
        const long n = f.conductor();
        long e = ((j % n) + n) % n;
        CycScalar s(f);
        s.num_ = f.data()->zeta_pow[static_cast<std::size_t>(e)];
        return s;
    }

    /// Build from rational coefficients of 1, z, z^2, ... (any length; reduced mod Phi_N).
    static CycScalar from_coeffs(CycField f, const std::vector<Rational>& coeffs)
    {
        BigInt den = 1;
        for (const auto& c : coeffs)
            den = boost::multiprecision::lcm(den, BigInt(boost::multiprecision::denominator(c)));
        const std::size_t deg = f.degree();
        const auto& zp = f.data()->zeta_pow;
        std::vector<BigInt> acc(deg, 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0)
                continue;
            BigInt c = boost::multiprecision::numerator(coeffs[k]) * (den / boost::multiprecision::denominator(coeffs[k]));
            const auto& p = zp[k % f.conductor()];
            for (std::size_t j = 0; j < deg; ++j)
                if (p[j] != 0)
                    acc[j] += c * p[j];
        }
        CycScalar s(f);
        s.num_ = std::move(acc);
        s.den_ = den;
        s.normalize();
        return s;
    }

    CycField field() const { return field_; }
    bool is_zero() const { return num_.empty(); }
    bool is_one() const { return is_rational() && den_ == 1 && !num_.empty() && num_[0] == 1; }

    /// True when the scalar lies in Q.
    bool is_rational() const
    {
        for (std::size_t k = 1; k < num_.size(); ++k)
            if (num_[k] != 0)
                return false;
        return true;
    }

    Rational coeff(std::size_t k) const
    {
        if (num_.empty())
            return Rational(0);
        return Rational(num_.at(k), den_);
    }

    std::vector<Rational> coeffs() const
    {
        std::vector<Rational> out(field_.degree());
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = coeff(k);
        return out;
    }

    const std::vector<BigInt>& numerators() const { return num_; }
    const BigInt& denominator() const { return den_; }

    CycScalar operator-() const
    {
        CycScalar r = *this;
        for (auto& c : r.num_)
            c = -c;
        return r;
    }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b)
    {
        require_same_field(a.field_, b.field_);
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        CycScalar r(a.field_);
        r.num_.resize(a.num_.size());
        if (a.den_ == b.den_) {
            for (std::size_t k = 0; k < r.num_.size(); ++k)
                r.num_[k] = a.num_[k] + b.num_[k];
            r.den_ = a.den_;
        } else {
            for (std::size_t k = 0; k < r.num_.size(); ++k)
                r.num_[k] = a.num_[k] * b.den_ + b.num_[k] * a.den_;
            r.den_ = a.den_ * b.den_;
        }
        r.normalize();
        return r;
    }

    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

    friend CycScalar operator*(const CycScalar& a, const CycScalar& b)
    {
        require_same_field(a.field_, b.field_);
        if (a.is_zero() || b.is_zero())
            return CycScalar(a.field_);
        if (a.is_rational())
            return b.scaled(a.num_[0], a.den_);
        if (b.is_rational())
            return a.scaled(b.num_[0], b.den_);
        const auto* fd = a.field_.data();
        const std::size_t deg = fd->degree;
        std::vector<BigInt> prod(2 * deg - 1, 0);
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.num_[i] == 0)
                continue;
            for (std::size_t j = 0; j < deg; ++j)
                if (b.num_[j] != 0)
                    prod[i + j] += a.num_[i] * b.num_[j];
        }
        CycScalar r(a.field_);
        r.num_.assign(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(deg));
        for (std::size_t k = deg; k < prod.size(); ++k) {
            if (prod[k] == 0)
                continue;
            const auto& f = fd->fold[k - deg];
            for (std::size_t j = 0; j < deg; ++j)
                if (f[j] != 0)
                    r.num_[j] += prod[k] * f[j];
        }
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }

    friend CycScalar operator/(const CycScalar& a, const CycScalar& b)
    {
        require_same_field(a.field_, b.field_);
        return a * b.inverse();
    }

    CycScalar& operator+=(const CycScalar& b) { return *this = *this + b; }
    CycScalar& operator-=(const CycScalar& b) { return *this = *this - b; }
    CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }
    CycScalar& operator/=(const CycScalar& b) { return *this = *this / b; }

    /// Multiplicative inverse by the extended Euclidean algorithm on (representative, Phi_N).
    CycScalar inverse() const
    {
        if (is_zero())
            throw DivisionByZero("inverse of zero in " + field_.name());
        if (is_rational())
            return scaled_inverse_rational();
        using RPoly = std::vector<Rational>;
        auto rtrim = [](RPoly& p) {
            while (!p.empty() && p.back() == 0)
                p.pop_back();
        };
        auto divmod = [&](RPoly a, const RPoly& b, RPoly& q) {
            q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
            const Rational lead = b.back();
            while (a.size() >= b.size() && !a.empty()) {
                const std::size_t shift = a.size() - b.size();
                const Rational c = a.back() / lead;
                q[shift] = c;
                for (std::size_t j = 0; j < b.size(); ++j)
                    a[shift + j] -= c * b[j];
                a.pop_back();
                rtrim(a);
            }
            return a;
        };
        auto sub_mul = [&](const RPoly& s0, const RPoly& q, const RPoly& s1) {
            RPoly out(std::max(s0.size(), q.size() + s1.size()), Rational(0));
            for (std::size_t i = 0; i < s0.size(); ++i)
                out[i] += s0[i];
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j)
                    out[i + j] -= q[i] * s1[j];
            rtrim(out);
            return out;
        };
        RPoly r0(field_.min_poly().begin(), field_.min_poly().end());
        RPoly r1(num_.begin(), num_.end());
        rtrim(r1);
        RPoly s0, s1{Rational(1)};
        while (r1.size() > 1) {
            RPoly q;
            RPoly r = divmod(r0, r1, q);
            RPoly s = sub_mul(s0, q, s1);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r1.empty())
            throw Error("inverse: representative shares a factor with the modulus");
        const Rational c = r1[0];
        for (auto& x : s1)
            x = x * Rational(den_) / c;
        return from_coeffs(field_, s1);
    }

    friend bool operator==(const CycScalar& a, const CycScalar& b)
    {
        return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Coefficient-vector lexicographic order (constant term first).
    friend int compare(const CycScalar& a, const CycScalar& b)
    {
        if (a.field_ != b.field_)
            return a.field_.conductor() < b.field_.conductor() ? -1 : 1;
        const std::size_t deg = a.field_.degree();
        for (std::size_t k = 0; k < deg; ++k) {
            BigInt x = a.num_.empty() ? BigInt(0) : a.num_[k] * b.den_;
            BigInt y = b.num_.empty() ? BigInt(0) : b.num_[k] * a.den_;
            if (x != y)
                return x < y ? -1 : 1;
        }
        return 0;
    }
    friend bool operator<(const CycScalar& a, const CycScalar& b) { return compare(a, b) < 0; }

    /// Polynomial text in z, highest power first, e.g. "1/2*z^3 - 2".
    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string out;
        bool first = true;
        for (std::size_t k = num_.size(); k-- > 0;) {
            if (num_[k] == 0)
                continue;
            Rational c(num_[k], den_);
            const bool neg = c < 0;
            if (neg)
                c = -c;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            const bool unit = c == 1;
            if (k == 0 || !unit)
                out += rational_text(c);
            if (k > 0) {
                if (!unit)
                    out += "*";
                out += "z^" + std::to_string(k);
            }
        }
        return out;
    }

    static std::string rational_text(const Rational& r)
    {
        std::string s = boost::multiprecision::numerator(r).str();
        if (boost::multiprecision::denominator(r) != 1)
            s += "/" + boost::multiprecision::denominator(r).str();
        return s;
    }

private:
    CycScalar scaled(const BigInt& n, const BigInt& d) const
    {
        CycScalar r(field_);
        r.num_.resize(num_.size());
        for (std::size_t k = 0; k < num_.size(); ++k)
            r.num_[k] = num_[k] * n;
        r.den_ = den_ * d;
        if (r.den_ < 0) {
            r.den_ = -r.den_;
            for (auto& c : r.num_)
                c = -c;
        }
        r.normalize();
        return r;
    }

    CycScalar scaled_inverse_rational() const
    {
        CycScalar r(field_);
        r.num_.assign(num_.size(), 0);
        r.num_[0] = den_;
        r.den_ = num_[0];
        if (r.den_ < 0) {
            r.den_ = -r.den_;
            r.num_[0] = -r.num_[0];
        }
        return r;
    }

    void normalize()
    {
        BigInt g = den_;
        bool any = false;
        for (const auto& c : num_) {
            if (c != 0) {
                any = true;
                if (g != 1)
                    g = boost::multiprecision::gcd(g, c);
            }
        }
        if (!any) {
            num_.clear();
            den_ = 1;
            return;
        }
        if (g < 0)
            g = -g;
        if (g != 1) {
            for (auto& c : num_)
                if (c != 0)
                    c /= g;
            den_ /= g;
        }
    }

    CycField field_;
    std::vector<BigInt> num_; // empty means zero
    BigInt den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------
// Text format

namespace detail {

class ScalarLexer {
public:
    explicit ScalarLexer(std::string_view t) : text_(t) {}

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    BigInt integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse a polynomial in z with rational coefficients; exponents are taken mod N.
inline CycScalar parse_scalar(CycField f, std::string_view text)
{
    detail::ScalarLexer lx(text);
    std::vector<Rational> coeffs(f.conductor(), Rational(0));
    if (lx.done())
        lx.fail("empty scalar");
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.accept('-'))
            sign = -1;
        else if (lx.accept('+'))
            sign = 1;
        else if (!first)
            lx.fail("expected '+' or '-'");
        first = false;
        Rational c(1);
        bool have_coeff = false;
        if (lx.at_digit()) {
            BigInt n = lx.integer();
            BigInt d = 1;
            if (lx.accept('/')) {
                d = lx.integer();
                if (d == 0)
                    lx.fail("zero denominator");
            }
            c = Rational(n, d);
            have_coeff = true;
        }
        std::size_t e = 0;
        bool have_z = false;
        if (have_coeff && lx.accept('*')) {
            if (lx.peek() != 'z')
                lx.fail("expected 'z' after '*'");
        }
        if (lx.accept('z')) {
            have_z = true;
            e = 1;
            if (lx.accept('^')) {
                BigInt k = lx.integer();
                k %= f.conductor();
                e = static_cast<std::size_t>(k);
            }
        }
        if (!have_coeff && !have_z)
            lx.fail("expected coefficient or 'z'");
        coeffs[e % f.conductor()] += sign * c;
    }
    return CycScalar::from_coeffs(f, coeffs);
}

/// Parse "Q(zeta_N): <poly>".
inline CycScalar parse_scalar_with_field(std::string_view text)
{
    const std::string prefix = "Q(zeta_";
    if (text.substr(0, prefix.size()) != prefix)
        throw ParseError("expected \"Q(zeta_N):\" prefix at position 0");
    std::size_t i = prefix.size();
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
    if (j == i || j + 1 >= text.size() || text[j] != ')' || text[j + 1] != ':')
        throw ParseError("malformed field prefix at position " + std::to_string(j));
    const unsigned n = static_cast<unsigned>(std::stoul(std::string(text.substr(i, j - i))));
    return parse_scalar(field_make(n), text.substr(j + 2));
}

inline std::string format_scalar_with_field(const CycScalar& s)
{
    return s.field().name() + ": " + s.to_string();
}

// ---------------------------------------------------------------------------
// Distinguished scalars

/// Image of s under zeta_N -> zeta_M^(M/N).
inline CycScalar embed(const CycScalar& s, CycField target)
{
    const unsigned n = s.field().conductor();
    const unsigned m = target.conductor();
    if (m % n != 0)
        throw FieldError("cannot embed " + s.field().name() + " into " + target.name());
    if (s.is_zero())
        return CycScalar(target);
    std::vector<Rational> coeffs(m, Rational(0));
    const auto& num = s.numerators();
    for (std::size_t k = 0; k < num.size(); ++k)
        if (num[k] != 0)
            coeffs[k * (m / n)] += Rational(num[k], s.denominator());
    return CycScalar::from_coeffs(target, coeffs);
}

/// The k-th power of the standard primitive n-th root of unity zeta_N^(N/n).
inline CycScalar root_of_unity(CycField f, unsigned n, long k)
{
    if (n == 0)
        throw FieldError("root_of_unity: n must be positive");
    const long kk = ((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    if (n == 1)
        return CycScalar(f, 1L);
    if (f.conductor() % n == 0)
        return CycScalar::zeta(f, kk * static_cast<long>(f.conductor() / n));
    if (n == 2)
        return CycScalar(f, kk == 0 ? 1L : -1L);
    throw FieldError("root_of_unity: " + std::to_string(n) + " does not divide conductor of " + f.name());
}

namespace detail {

inline std::vector<unsigned> prime_factors(unsigned n)
{
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

/// n = s^2 * q with q squarefree.
inline std::pair<unsigned, unsigned> square_split(unsigned n)
{
    unsigned s = 1, q = 1;
    for (unsigned p : prime_factors(n)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i)
            s *= p;
        if (e % 2 == 1)
            q *= p;
    }
    return {s, q};
}

inline int legendre(unsigned a, unsigned p)
{
    unsigned long long r = 1, b = a % p, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    if (r == 0)
        return 0;
    return r == 1 ? 1 : -1;
}

} // namespace detail

/// Smallest conductor whose field contains sqrt(n) via the Gauss-sum construction.
inline unsigned sqrt_conductor(unsigned n)
{
    if (n == 0)
        throw FieldError("sqrt_conductor: n must be positive");
    const unsigned q = detail::square_split(n).second;
    unsigned c = 1;
    for (unsigned p : detail::prime_factors(q)) {
        unsigned need = p == 2 ? 8 : (p % 4 == 1 ? p : 4 * p);
        c = std::lcm(c, need);
    }
    return c;
}

/// sqrt(n) as a product of Gauss sums: sqrt(2) = z8 + z8^-1, sqrt(p) = g or -i*g for odd p.
/// The representative is positive under zeta_N -> exp(2*pi*i/N).
inline CycScalar sqrt_rational(CycField f, unsigned n)
{
    const unsigned need = sqrt_conductor(n);
    if (f.conductor() % need != 0)
        throw FieldError("sqrt(" + std::to_string(n) + ") needs conductor divisible by " + std::to_string(need) +
                         ", have " + f.name());
    const auto [s, q] = detail::square_split(n);
    CycScalar r(f, static_cast<long>(s));
    for (unsigned p : detail::prime_factors(q)) {
        if (p == 2) {
            r *= root_of_unity(f, 8, 1) + root_of_unity(f, 8, 7);
            continue;
        }
        CycScalar g(f);
        for (unsigned a = 1; a < p; ++a) {
            const CycScalar z = root_of_unity(f, p, a);
            g = detail::legendre(a, p) > 0 ? g + z : g - z;
        }
        if (p % 4 == 3)
            g = -(root_of_unity(f, 4, 1) * g);
        r *= g;
    }
    if (r * r != CycScalar(f, static_cast<long>(n)))
        throw Error("sqrt_rational: construction failed to square to " + std::to_string(n));
    return r;
}

} // namespace frobex

#endif // FROBEX_SCALARS_HPP
