#pragma once

/**
 * @file decomposition.hpp
 * @brief Singular words, generalized adjoining singular words, and the
 *        decomposition of every conjugate of a characteristic word into
 *        conjugated morphism images.
 *
 * Over a type (i) expansion alpha = [0; 1+d_1, (d_2, ..., d_n)] the singular
 * words are
 *
 *     w_{-2} = e,  w_m = a s_m b^{-1} (m odd),  w_m = b s_m a^{-1} (m even),
 *
 * and the generalized adjoining singular words are
 *
 *     v_{-2} = e,  v_{-1} = a^{d_1},
 *     v_m = b s_{m+1}^{d_{m+2}-1} s_m a^{-1} (m even),
 *     v_m = a s_{m+1}^{d_{m+2}-1} s_m b^{-1} (m odd).
 *
 * All are palindromes, |v_m| = q_{m+2} - q_{m+1}, and c_alpha factors as the
 * infinite product v_{-1} v_0 v_1 ... (equivalently as the grouped product of
 * (v_{2j} w_{2j+1})^{d_{2j+3}} over j >= -1).
 *
 * When alpha = [0; 2, (r)], every conjugate of c_alpha is a tail of that
 * product: for k in [q_m - 1, q_{m+1} - 2] the k-th conjugate equals
 *
 *     prod_{j >= m-1} (sigma^{j+1})_t (b),   t = k - q_m,
 *
 * where the sentinel index t = -1 stands for v_j itself.  The mirrored
 * statement with sigma_hat, the letter a, and E(v_j) covers every conjugate
 * of c_{1-alpha}.
 */

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "continued_fraction.hpp"
#include "errors.hpp"
#include "generator.hpp"
#include "morphism.hpp"
#include "word.hpp"

namespace sturmian {

/// Singular word w_m, m >= -2.  Requires a type (i) expansion.
inline Word singular_word(const SturmCF& cf, i64 m) {
    if (m < -2) throw IndexOutOfRange("singular word index starts at -2");
    type_i_directive(cf);  // validates the shape
    if (m == -2) return Word();
    StandardSequence s(DirectiveSequence::from_cf(cf));
    bool odd = ((m % 2) + 2) % 2 == 1;
    if (odd) return strip_suffix(Word(Letter::a) + s.at(m), Word(Letter::b));
    return strip_suffix(Word(Letter::b) + s.at(m), Word(Letter::a));
}

/// Generalized adjoining singular word v_m, m >= -2.
inline Word adjoining_singular(const SturmCF& cf, i64 m) {
    if (m < -2) throw IndexOutOfRange("adjoining singular word index starts at -2");
    std::vector<i64> d0 = type_i_directive(cf);
    if (m == -2) return Word();
    if (m == -1) return Word::repeat(Word(Letter::a), d0[0]);
    DirectiveSequence d = DirectiveSequence::from_cf(cf);
    StandardSequence s(d);
    Word body = Word::repeat(s.at(m + 1), d.at(m + 2) - 1) + s.at(m);
    bool odd = m % 2 == 1;
    if (odd) return strip_suffix(Word(Letter::a) + body, Word(Letter::b));
    return strip_suffix(Word(Letter::b) + body, Word(Letter::a));
}

enum class FactorKind { VWord, WWord, ConjugatedImage };

/**
 * One factor of a decomposition.  j is the position in the product; for
 * conjugated images the word is (sigma^{j+1})_t applied to the base letter,
 * and conj_index records t (the sentinel -1 denotes the adjoining word v_j).
 */
struct Factor {
    i64 j;
    FactorKind kind;
    i64 conj_index;
    Word word;
};

struct MelanconGroup {
    i64 g;          // group index: the block (v_{2g} w_{2g+1})^{exponent}
    Word v;
    Word w;
    i64 exponent;   // d_{2g+3}
};

struct MelanconFactorization {
    std::vector<Factor> flat;          // v_{-1}, v_0, ..., v_J
    std::vector<MelanconGroup> groups; // g = -1, ..., J
};

/// Both forms of the adjoining-word factorization of c_alpha, up to index J.
inline MelanconFactorization melancon_factors(const SturmCF& cf, i64 J) {
    if (J < -1) throw IndexOutOfRange("factorization depth must be >= -1");
    MelanconFactorization out;
    for (i64 j = -1; j <= J; ++j)
        out.flat.push_back({j, FactorKind::VWord, -1, adjoining_singular(cf, j)});
    DirectiveSequence d = DirectiveSequence::from_cf(cf);
    for (i64 g = -1; g <= J; ++g)
        out.groups.push_back({g, adjoining_singular(cf, 2 * g),
                              singular_word(cf, 2 * g + 1), d.at(2 * g + 3)});
    return out;
}

/// r such that the expansion is [0; 2, (r)]; UnsupportedExpansion otherwise.
inline i64 slope_parameter(const SturmCF& cf) {
    std::vector<i64> d;
    try {
        d = type_i_directive(cf);
    } catch (const NotTypeI&) {
        throw UnsupportedExpansion(
            "conjugate decomposition needs an expansion of the form 0;2,(r), got " + cf.str());
    }
    bool ok = d[0] == 1;
    for (std::size_t i = 2; i < d.size() && ok; ++i) ok = d[i] == d[1];
    if (!ok)
        throw UnsupportedExpansion(
            "conjugate decomposition needs an expansion of the form 0;2,(r), got " + cf.str());
    return d[1];
}

struct Location {
    i64 m;
    i64 p;
    friend bool operator==(const Location&, const Location&) = default;
};

/// The unique (m, p) with k = q_{m+1} - p and 2 <= p <= q_{m+1} - q_m + 1,
/// i.e. q_m - 1 <= k <= q_{m+1} - 2.
inline Location locate(const SturmCF& cf, i64 k) {
    slope_parameter(cf);
    if (k < 0) throw IndexOutOfRange("conjugate number must be nonnegative");
    i64 m = 0;
    while (convergent(cf, m + 1).q - 2 < k) ++m;
    return {m, convergent(cf, m + 1).q - k};
}

struct RemovalForm {
    i64 m;
    i64 p;
    i64 conj_index;  // t = k - q_m; -1 means no letters are removed from v_{m-1}
    Word u;          // prefix of v_{m-1} of length t + 1
};

/**
 * The k-th conjugate of c_alpha as u^{-1} (v_{m-1} v_m v_{m+1} ...): the tail
 * of the adjoining-word product starting at index m-1, with the first t+1
 * letters removed.
 */
inline RemovalForm removal_form(const SturmCF& cf, i64 k) {
    Location loc = locate(cf, k);
    i64 t = k - convergent(cf, loc.m).q;
    Word u;
    if (t >= 0) u = adjoining_singular(cf, loc.m - 1).substr(0, static_cast<std::size_t>(t + 1));
    return {loc.m, loc.p, t, std::move(u)};
}

/**
 * The conjugated-image decomposition of the k-th conjugate of c_alpha (or of
 * c_{1-alpha} when hat is set).  Factors are produced lazily; factor i has
 * product index j = (m-1) + i and word (sigma^{j+1})_t (b), reading sigma_hat
 * and the letter a in the hat case.  The sentinel t = -1 yields v_j itself
 * (E(v_j) in the hat case).
 */
class ConjugateDecomposition {
public:
    ConjugateDecomposition(SturmCF alpha, i64 k, bool hat)
        : alpha_(std::move(alpha)), hat_(hat), k_(k),
          base_(hat ? build_sigma_hat(alpha_) : build_sigma(alpha_)) {
        Location loc = locate(alpha_, k_);
        m_ = loc.m;
        p_ = loc.p;
        t_ = k_ - convergent(alpha_, m_).q;
        powers_.push_back(Morphism());  // sigma^0
    }

    const SturmCF& alpha() const noexcept { return alpha_; }
    bool hat() const noexcept { return hat_; }
    i64 k() const noexcept { return k_; }
    i64 m() const noexcept { return m_; }
    i64 p() const noexcept { return p_; }
    i64 conj_index() const noexcept { return t_; }
    i64 first_index() const noexcept { return m_ - 1; }

    /// The word whose conjugates are being decomposed: c_alpha or E(c_alpha).
    WordStream base_word() const {
        WordStream c = characteristic_word(alpha_);
        return hat_ ? exchanged(c) : c;
    }

    /// The k-th conjugate itself: the base word with its first k letters removed.
    WordStream conjugated_word() const { return shift(base_word(), k_); }

    /// Prefix of length k removed from the base word by the conjugation.
    Word removed_prefix() const {
        return base_word().prefix(static_cast<std::size_t>(k_));
    }

    const Factor& factor(std::size_t i) {
        while (cache_.size() <= i) cache_.push_back(make_factor(first_index() +
                                                    static_cast<i64>(cache_.size())));
        return cache_[i];
    }

    std::vector<Factor> factors(std::size_t count) {
        factor(count == 0 ? 0 : count - 1);
        return std::vector<Factor>(cache_.begin(),
                                   cache_.begin() + static_cast<std::ptrdiff_t>(count));
    }

    Word concatenated(std::size_t count) {
        Word out;
        for (std::size_t i = 0; i < count; ++i) out = out + factor(i).word;
        return out;
    }

    /// Extends the factor list until it covers len letters, then checks the
    /// concatenation against the conjugate itself.  Returns the factor count.
    std::size_t verify_prefix(std::size_t len) {
        std::size_t total = 0, count = 0;
        while (total < len) {
            total += factor(count).word.size();
            ++count;
        }
        if (concatenated(count) != conjugated_word().prefix(total))
            throw CertificateMismatch("decomposition does not concatenate to the conjugate");
        return count;
    }

private:
    Factor make_factor(i64 j) {
        if (t_ == -1) {
            Word v = adjoining_singular(alpha_, j);
            return {j, FactorKind::VWord, t_, hat_ ? v.exchanged() : v};
        }
        const Morphism& pw = sigma_power(j + 1);
        Letter base = hat_ ? Letter::a : Letter::b;
        return {j, FactorKind::ConjugatedImage, t_, right_conjugate(pw, t_).image(base)};
    }

    const Morphism& sigma_power(i64 e) {
        while (static_cast<i64>(powers_.size()) <= e)
            powers_.push_back(compose(powers_.back(), base_));
        return powers_[static_cast<std::size_t>(e)];
    }

    SturmCF alpha_;
    bool hat_;
    i64 k_, m_ = 0, p_ = 0, t_ = 0;
    Morphism base_;
    std::vector<Morphism> powers_;
    std::vector<Factor> cache_;
};

/// Decomposition of the k-th conjugate of c_alpha; alpha must be [0;2,(r)].
inline ConjugateDecomposition conjugate_decomposition(const SturmCF& alpha, i64 k) {
    return ConjugateDecomposition(alpha, k, false);
}

/// Decomposition of the k-th conjugate of c_{1-alpha}; alpha must be [0;2,(r)].
inline ConjugateDecomposition conjugate_decomposition_hat(const SturmCF& alpha, i64 k) {
    return ConjugateDecomposition(alpha, k, true);
}

struct ExchangeConjugationRecord {
    i64 k;
    Morphism mirrored_conjugate;  // (E psi E)_k
    Morphism conjugate_mirrored;  // E psi_k E
    bool equal;
};

/// Checks the identity (E psi E)_k = E psi_k E.
inline ExchangeConjugationRecord exchange_conjugation(const Morphism& psi, i64 k) {
    const Morphism& E = Morphism::exchange();
    Morphism lhs = right_conjugate(compose(compose(E, psi), E), k);
    Morphism rhs = compose(compose(E, right_conjugate(psi, k)), E);
    return {k, lhs, rhs, lhs == rhs};
}

/// Display form of a factor, e.g. "(s^3)_{-1}(b)" or "(σ̂^3)_{-1}(a)".
inline std::string factor_symbol(const Factor& f, bool hat, bool unicode) {
    std::ostringstream os;
    const char* sigma = unicode ? "σ" : "s";
    const char* hat_mark = unicode ? "̂" : "_hat";
    os << '(' << sigma;
    if (hat) os << hat_mark;
    os << '^' << (f.j + 1) << ")_{" << f.conj_index << "}(" << (hat ? 'a' : 'b') << ')';
    return os.str();
}

} // namespace sturmian
