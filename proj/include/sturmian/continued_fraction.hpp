#pragma once

/**
 * @file continued_fraction.hpp
 * @brief Eventually periodic continued fractions, Sturm-number classification,
 *        and exact arithmetic on quadratic surds.
 *
 * A SturmCF stores an expansion [0; a_1, a_2, ...] whose partial quotients are
 * eventually periodic, written "0;a1,...,ah,(b1,...,bm)".  Construction
 * canonicalizes: the period is made primitive and the preperiod minimal, so
 * value-equal expansions compare equal componentwise.
 *
 * A QuadraticSurd is an exact (P + sqrt(D))/Q with integer P, Q != 0 and
 * nonsquare D >= 2.  Comparisons and floors are integer-exact; floating point
 * appears only in approx() and as a seed for the integer square root.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sturmian {

using i64 = std::int64_t;
using i128 = __int128;

namespace detail {

inline i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw Overflow("integer addition overflow");
    return r;
}

inline i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw Overflow("integer multiplication overflow");
    return r;
}

inline i64 narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw Overflow("value does not fit in 64 bits");
    return static_cast<i64>(v);
}

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 x, i128 y) {
    x = abs128(x);
    y = abs128(y);
    while (y != 0) {
        i128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

/// floor(sqrt(v)) for v >= 0.
inline i128 isqrt128(i128 v) {
    if (v < 0) throw Overflow("isqrt of negative value");
    if (v == 0) return 0;
    auto seed = static_cast<i128>(sqrtl(static_cast<long double>(v)));
    while (seed > 0 && seed * seed > v) --seed;
    while ((seed + 1) * (seed + 1) <= v) ++seed;
    return seed;
}

inline bool is_square128(i128 v) {
    if (v < 0) return false;
    i128 r = isqrt128(v);
    return r * r == v;
}

/// Sign of X + B*sqrt(D), exact.  D >= 2 nonsquare, so zero only at X == B == 0.
inline int sign_lin(i128 X, i128 B, i128 D) {
    if (B == 0) return X > 0 ? 1 : (X < 0 ? -1 : 0);
    if (X >= 0 && B > 0) return 1;
    if (X <= 0 && B < 0) return -1;
    i128 lhs = X * X, rhs = B * B * D;  // opposite signs: compare squares
    if (X >= 0) return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
}

inline i128 floordiv(i128 num, i128 den) {
    i128 q = num / den, r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

/// floor((A + B*sqrt(D)) / C), exact.  Any sign of C.
inline i128 floor_lin(i128 A, i128 B, i128 C, i128 D) {
    if (C == 0) throw InvalidSurd("division by zero denominator");
    if (C < 0) { A = -A; B = -B; C = -C; }
    if (B == 0) return floordiv(A, C);
    i128 S = isqrt128(B * B * D);            // floor(|B| sqrt(D))
    i128 num_lo = A + (B > 0 ? S : -S - 1);  // floor of the numerator
    i128 t = floordiv(num_lo, C);
    while (sign_lin(A - (t + 1) * C, B, D) >= 0) ++t;
    while (sign_lin(A - t * C, B, D) < 0) --t;
    return t;
}

} // namespace detail

/// Exact rational intercept for mechanical words; reduced, den > 0.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d) : num(n), den(d) {
        if (den == 0) throw ParseError("rational denominator must be nonzero");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rational parse(std::string_view text) {
        auto read = [](std::string_view part) -> i64 {
            std::size_t used = 0;
            i64 value = 0;
            try {
                value = std::stoll(std::string(part), &used);
            } catch (const std::logic_error&) {
                throw ParseError("malformed rational component '" + std::string(part) + "'");
            }
            if (used != part.size())
                throw ParseError("malformed rational component '" + std::string(part) + "'");
            return value;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(read(text), 1);
        return Rational(read(text.substr(0, slash)), read(text.substr(slash + 1)));
    }

    std::string str() const {
        std::ostringstream os;
        os << num;
        if (den != 1) os << '/' << den;
        return os.str();
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class SturmType { TypeI, TypeII, NotSturm };

inline std::string to_string(SturmType t) {
    switch (t) {
        case SturmType::TypeI: return "type-i";
        case SturmType::TypeII: return "type-ii";
        default: return "not-sturm";
    }
}

class SturmCF {
public:
    SturmCF(std::vector<i64> preperiod, std::vector<i64> period)
        : pre_(std::move(preperiod)), per_(std::move(period)) {
        if (per_.empty()) throw ParseError("continued fraction period must be nonempty");
        for (i64 v : pre_) check_entry(v);
        for (i64 v : per_) check_entry(v);
        canonicalize();
    }

    /// Grammar: "0;" {int ","} "(" int {"," int} ")".
    static SturmCF parse(std::string_view text) {
        const char* bad = "malformed continued fraction";
        std::size_t pos = 0;
        auto need = [&](char ch) {
            if (pos >= text.size() || text[pos] != ch)
                throw ParseError(std::string(bad) + ": expected '" + ch + "'");
            ++pos;
        };
        auto read_int = [&]() -> i64 {
            std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (pos == start) throw ParseError(std::string(bad) + ": expected an integer");
            if (pos - start > 18) throw Overflow("partial quotient too large");
            return std::stoll(std::string(text.substr(start, pos - start)));
        };
        need('0');
        need(';');
        std::vector<i64> pre, per;
        while (pos < text.size() && text[pos] != '(') {
            pre.push_back(read_int());
            need(',');
        }
        need('(');
        per.push_back(read_int());
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            per.push_back(read_int());
        }
        need(')');
        if (pos != text.size()) throw ParseError(std::string(bad) + ": trailing input");
        return SturmCF(std::move(pre), std::move(per));
    }

    std::string str() const {
        std::ostringstream os;
        os << "0;";
        for (i64 v : pre_) os << v << ',';
        os << '(';
        for (std::size_t i = 0; i < per_.size(); ++i) {
            if (i) os << ',';
            os << per_[i];
        }
        os << ')';
        return os.str();
    }

    const std::vector<i64>& preperiod() const noexcept { return pre_; }
    const std::vector<i64>& period() const noexcept { return per_; }

    /// a_i of the canonical expansion, i >= 1.
    i64 partial_quotient(i64 i) const {
        if (i < 1) throw IndexOutOfRange("partial quotient index starts at 1");
        auto idx = static_cast<std::size_t>(i - 1);
        if (idx < pre_.size()) return pre_[idx];
        return per_[(idx - pre_.size()) % per_.size()];
    }

    friend bool operator==(const SturmCF&, const SturmCF&) = default;

private:
    static void check_entry(i64 v) {
        if (v < 1) throw ParseError("partial quotients must be >= 1");
    }

    void canonicalize() {
        // Primitive period: shrink to the shortest repeating cell.
        for (std::size_t t = 1; t <= per_.size() / 2; ++t) {
            if (per_.size() % t != 0) continue;
            bool rep = true;
            for (std::size_t i = t; i < per_.size() && rep; ++i)
                rep = per_[i] == per_[i - t];
            if (rep) {
                per_.resize(t);
                break;
            }
        }
        // Minimal preperiod: absorb trailing preperiod entries that match the
        // end of the period, rotating the period right to keep the value.
        while (!pre_.empty() && pre_.back() == per_.back()) {
            pre_.pop_back();
            std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
        }
    }

    std::vector<i64> pre_;
    std::vector<i64> per_;
};

struct Convergent {
    i64 n;
    i64 p;
    i64 q;
    friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// p_n/q_n with p_0/q_0 = 0/1, p_1/q_1 = 1/a_1 and the usual recurrence.
inline Convergent convergent(const SturmCF& cf, i64 n) {
    if (n < 0) throw IndexOutOfRange("convergent index must be nonnegative");
    i64 p_prev = 1, q_prev = 0;  // formal p_{-1}/q_{-1}
    i64 p = 0, q = 1;
    for (i64 i = 1; i <= n; ++i) {
        i64 a = cf.partial_quotient(i);
        i64 p_next = detail::checked_add(detail::checked_mul(a, p), p_prev);
        i64 q_next = detail::checked_add(detail::checked_mul(a, q), q_prev);
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    return {n, p, q};
}

inline std::vector<Convergent> convergents(const SturmCF& cf, i64 n) {
    std::vector<Convergent> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (i64 i = 0; i <= n; ++i) out.push_back(convergent(cf, i));
    return out;
}

namespace detail {

// Sturm numbers have an expansion of one of two shapes:
//   type (i):  [0; 1+d_1, (d_2, ..., d_n)]   with d_n >= d_1 >= 1,
//   type (ii): [0; 1, d_1, (d_2, ..., d_n)]  with d_n >= d_1 >= 1.
// Canonicalization may have folded leading entries into the period, so each
// shape is recovered by unrolling the period as needed.

struct AlignedForm {
    std::vector<i64> directive;  // d_1, ..., d_n
};

inline std::optional<AlignedForm> align_type_i(const SturmCF& cf) {
    const auto& pre = cf.preperiod();
    const auto& per = cf.period();
    std::vector<i64> d;
    if (pre.empty()) {
        if (per[0] < 2) return std::nullopt;
        d.push_back(per[0] - 1);
        d.insert(d.end(), per.begin() + 1, per.end());
        d.push_back(per[0]);
    } else if (pre.size() == 1) {
        if (pre[0] < 2) return std::nullopt;
        d.push_back(pre[0] - 1);
        d.insert(d.end(), per.begin(), per.end());
    } else {
        return std::nullopt;
    }
    if (d.front() < 1 || d.back() < d.front()) return std::nullopt;
    return AlignedForm{std::move(d)};
}

inline std::optional<AlignedForm> align_type_ii(const SturmCF& cf) {
    const auto& pre = cf.preperiod();
    const auto& per = cf.period();
    std::vector<i64> d;
    if (pre.empty()) {
        if (per[0] != 1) return std::nullopt;
        // Sequence 1, p2, ..., pm, 1, p2, ...: d_1 = p2, period restarts at p3.
        std::size_t m = per.size();
        d.push_back(per[1 % m]);
        for (std::size_t i = 0; i < m; ++i) d.push_back(per[(2 + i) % m]);
    } else if (pre.size() == 1) {
        if (pre[0] != 1) return std::nullopt;
        d.push_back(per[0]);
        d.insert(d.end(), per.begin() + 1, per.end());
        d.push_back(per[0]);
    } else if (pre.size() == 2) {
        if (pre[0] != 1) return std::nullopt;
        d.push_back(pre[1]);
        d.insert(d.end(), per.begin(), per.end());
    } else {
        return std::nullopt;
    }
    if (d.front() < 1 || d.back() < d.front()) return std::nullopt;
    return AlignedForm{std::move(d)};
}

} // namespace detail

inline SturmType classify(const SturmCF& cf) {
    if (detail::align_type_i(cf)) return SturmType::TypeI;
    if (detail::align_type_ii(cf)) return SturmType::TypeII;
    return SturmType::NotSturm;
}

/// Directive (d_1, ..., d_n) of the type (i) form [0; 1+d_1, (d_2, ..., d_n)].
inline std::vector<i64> type_i_directive(const SturmCF& cf) {
    auto form = detail::align_type_i(cf);
    if (!form) throw NotTypeI("expansion " + cf.str() + " is not a type (i) Sturm number");
    return std::move(form->directive);
}

/// Directive (d_1, ..., d_n) of the type (ii) form [0; 1, d_1, (d_2, ..., d_n)].
inline std::vector<i64> type_ii_directive(const SturmCF& cf) {
    auto form = detail::align_type_ii(cf);
    if (!form) throw NotTypeI("expansion " + cf.str() + " is not a type (ii) Sturm number");
    return std::move(form->directive);
}

/**
 * Expansion of 1 - alpha.  A type (i) alpha = [0; 1+d_1, (d_2..d_n)] maps to
 * [0; 1, d_1, (d_2..d_n)] and vice versa; the constructor rebuilds the
 * canonical form of the result.
 */
inline SturmCF complement(const SturmCF& cf) {
    if (auto form = detail::align_type_i(cf)) {
        const auto& d = form->directive;
        return SturmCF({1, d[0]}, std::vector<i64>(d.begin() + 1, d.end()));
    }
    if (auto form = detail::align_type_ii(cf)) {
        const auto& d = form->directive;
        return SturmCF({1 + d[0]}, std::vector<i64>(d.begin() + 1, d.end()));
    }
    throw NotTypeI("complement requires a Sturm number expansion, got " + cf.str());
}

/**
 * Exact quadratic surd (P + sqrt(D))/Q.  The stored triple is reduced: no
 * h > 1 divides P and Q with h^2 dividing D.  Reduced triples are unique per
 * value (the sign of Q is forced by the positive sqrt coefficient), so
 * equality is componentwise.
 */
class QuadraticSurd {
public:
    QuadraticSurd(i64 P, i64 D, i64 Q) {
        if (Q == 0) throw InvalidSurd("denominator must be nonzero");
        assign_reduced(P, D, Q);
    }

    i64 P() const noexcept { return P_; }
    i64 D() const noexcept { return D_; }
    i64 Q() const noexcept { return Q_; }

    double approx() const {
        return (static_cast<double>(P_) + std::sqrt(static_cast<double>(D_))) /
               static_cast<double>(Q_);
    }

    std::string str() const {
        std::ostringstream os;
        os << '(' << P_ << " + sqrt(" << D_ << ")) / " << Q_;
        return os.str();
    }

    /// Exact floor(n * value + rho).
    i64 floor_affine(i64 n, const Rational& rho = Rational()) const {
        // n*(P + sqrt(D))/Q + num/den = (A + B sqrt(D)) / C
        i128 A = i128(n) * P_ * rho.den + i128(rho.num) * Q_;
        i128 B = i128(n) * rho.den;
        i128 C = i128(Q_) * rho.den;
        return detail::narrow(detail::floor_lin(A, B, C, D_));
    }

    /// Exact ceil(n * value + rho).
    i64 ceil_affine(i64 n, const Rational& rho = Rational()) const {
        i128 A = i128(n) * P_ * rho.den + i128(rho.num) * Q_;
        i128 B = i128(n) * rho.den;
        i128 C = i128(Q_) * rho.den;
        return detail::narrow(-detail::floor_lin(-A, -B, C, D_));
    }

    /// Image under x -> (a x + b) / (c x + d), exact.
    QuadraticSurd mobius(i64 a, i64 b, i64 c, i64 d) const {
        // With x = (P + sqrt(D))/Q, rationalizing the denominator gives
        //   (a x + b)/(c x + d) = (N + M sqrt(D)) / E, where
        //   N = (aP + bQ)(cP + dQ) - a c D,  M = Q (a d - b c),
        //   E = (cP + dQ)^2 - c^2 D.
        i128 u = i128(a) * P_ + i128(b) * Q_;
        i128 v = i128(c) * P_ + i128(d) * Q_;
        i128 N = u * v - i128(a) * c * D_;
        i128 M = i128(Q_) * (i128(a) * d - i128(b) * c);
        i128 E = v * v - i128(c) * c * D_;
        if (M == 0 || E == 0) throw InvalidSurd("Moebius image degenerates to a rational");
        // Fold M into the radicand so the sqrt coefficient is +1 again:
        // value = (N s + sqrt(M^2 D)) / (E s) with s = sign(M).
        i128 s = M < 0 ? -1 : 1;
        QuadraticSurd out;
        out.assign_reduced(N * s, M * M * D_, E * s);
        return out;
    }

    /**
     * Continued fraction re-expansion of a value in (0,1), returned as
     * (preperiod, period) of [0; c_1, c_2, ...].
     */
    std::pair<std::vector<i64>, std::vector<i64>> cf_expansion(std::size_t max_steps = 4096) const {
        if (floor_affine(1) != 0) throw InvalidSurd("re-expansion requires a value in (0,1)");
        // Classic P-Q iteration; first normalize so Q divides D - P^2.
        i128 P = P_, D = D_, Q = Q_;
        if ((D - P * P) % Q != 0) {
            P *= detail::abs128(Q);
            D *= Q * Q;
            Q *= detail::abs128(Q);
        }
        std::vector<i64> quotients;
        std::vector<std::pair<i128, i128>> seen;
        i128 a = detail::floor_lin(P, 1, Q, D);  // integer part, zero here
        for (std::size_t step = 0; step < max_steps; ++step) {
            P = a * Q - P;
            Q = (D - P * P) / Q;
            if (Q == 0) throw InvalidSurd("re-expansion hit a rational value");
            a = detail::floor_lin(P, 1, Q, D);
            auto state = std::make_pair(P, Q);
            for (std::size_t i = 0; i < seen.size(); ++i) {
                if (seen[i] == state) {
                    auto cut = quotients.begin() + static_cast<std::ptrdiff_t>(i);
                    return {std::vector<i64>(quotients.begin(), cut),
                            std::vector<i64>(cut, quotients.end())};
                }
            }
            seen.push_back(state);
            quotients.push_back(detail::narrow(a));
        }
        throw Overflow("continued fraction re-expansion did not cycle");
    }

    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

private:
    QuadraticSurd() = default;

    void assign_reduced(i128 P, i128 D, i128 Q) {
        // Divide common square factors out of (P, Q, D) by trial division.
        i128 common = detail::gcd128(P, Q);
        for (i128 f = 2; f * f <= common; ++f) {
            while (common % f == 0 && D % (f * f) == 0) {
                P /= f;
                Q /= f;
                D /= f * f;
                common /= f;
            }
            while (common % f == 0) common /= f;
        }
        if (common > 1 && D % (common * common) == 0) {
            P /= common;
            Q /= common;
            D /= common * common;
        }
        P_ = detail::narrow(P);
        D_ = detail::narrow(D);
        Q_ = detail::narrow(Q);
        if (D_ < 2 || detail::is_square128(D_))
            throw InvalidSurd("radicand must be a nonsquare integer >= 2");
    }

    i64 P_ = 0, D_ = 2, Q_ = 1;
};

/**
 * Exact value of the expansion.  The purely periodic tail is the attracting
 * fixed point of its Moebius product; the preperiod is then applied right to
 * left via x -> 1/(a + x).
 */
inline QuadraticSurd surd_value(const SturmCF& cf) {
    // The period composes the steps f_a(x) = 1/(a + x), first entry applied
    // last: x = (f_{b_1} o ... o f_{b_m})(x) = (A x + B) / (C x + D2), built
    // by right-multiplying the running matrix by [[0,1],[1,a]].
    i128 A = 1, B = 0, C = 0, D2 = 1;
    for (i64 a : cf.period()) {
        i128 nA = B, nB = A + i128(a) * B;
        i128 nC = D2, nD = C + i128(a) * D2;
        A = nA;
        B = nB;
        C = nC;
        D2 = nD;
        if (detail::abs128(nB) > (i128(1) << 62) || detail::abs128(nD) > (i128(1) << 62))
            throw Overflow("period matrix entries exceed 64 bits");
    }
    // Fixed point: C x^2 + (D2 - A) x - B = 0 with the positive root
    // ((A - D2) + sqrt((D2 - A)^2 + 4 B C)) / (2 C).
    i128 disc = (D2 - A) * (D2 - A) + 4 * B * C;
    QuadraticSurd x(detail::narrow(A - D2), detail::narrow(disc), detail::narrow(2 * C));
    const auto& pre = cf.preperiod();
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) x = x.mobius(0, 1, 1, *it);
    if (x.floor_affine(1) != 0) throw InvalidSurd("expansion value escaped (0,1)");
    return x;
}

/// floor(n * alpha + rho), exact.
inline i64 floor_multiple(const QuadraticSurd& alpha, i64 n, const Rational& rho = Rational()) {
    return alpha.floor_affine(n, rho);
}

/// ceil(n * alpha + rho), exact.
inline i64 ceil_multiple(const QuadraticSurd& alpha, i64 n, const Rational& rho = Rational()) {
    return alpha.ceil_affine(n, rho);
}

} // namespace sturmian
