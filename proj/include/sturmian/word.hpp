#pragma once

/**
 * @file word.hpp
 * @brief Finite and infinite words over the two-letter alphabet {a, b}.
 *
 * Word is an immutable value type backed by a std::string restricted to the
 * characters 'a' and 'b'.  WordStream is a right-infinite word; it hands out
 * finite prefixes on demand and memoizes everything it has produced, so
 * repeated prefix() calls never recompute earlier letters and always agree
 * with one another.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace sturmian {

enum class Letter : char { a = 'a', b = 'b' };

inline char to_char(Letter c) { return static_cast<char>(c); }

inline Letter other(Letter c) { return c == Letter::a ? Letter::b : Letter::a; }

inline Letter letter_from_char(char ch) {
    if (ch != 'a' && ch != 'b')
        throw ParseError(std::string("letter must be 'a' or 'b', got '") + ch + "'");
    return static_cast<Letter>(ch);
}

class Word {
public:
    Word() = default;

    /*implicit*/ Word(Letter c) : text_(1, to_char(c)) {}

    explicit Word(std::string_view text) : text_(text) {
        for (char ch : text_) letter_from_char(ch);
    }

    static Word repeat(const Word& w, std::int64_t count) {
        if (count < 0) throw IndexOutOfRange("repeat count must be nonnegative");
        std::string out;
        out.reserve(w.size() * static_cast<std::size_t>(count));
        for (std::int64_t i = 0; i < count; ++i) out += w.text_;
        return Word(PrivateTag{}, std::move(out));
    }

    std::size_t size() const noexcept { return text_.size(); }
    bool empty() const noexcept { return text_.empty(); }

    Letter at(std::size_t i) const {
        if (i >= text_.size()) throw IndexOutOfRange("letter index past end of word");
        return static_cast<Letter>(text_[i]);
    }
    Letter operator[](std::size_t i) const { return at(i); }

    const std::string& str() const noexcept { return text_; }

    Word reversed() const {
        return Word(PrivateTag{}, std::string(text_.rbegin(), text_.rend()));
    }

    /// Letter-exchange image E(w): swap every a and b.
    Word exchanged() const {
        std::string out = text_;
        for (char& ch : out) ch = (ch == 'a') ? 'b' : 'a';
        return Word(PrivateTag{}, std::move(out));
    }

    bool starts_with(const Word& p) const {
        return text_.compare(0, p.size(), p.text_) == 0;
    }
    bool ends_with(const Word& s) const {
        return s.size() <= size() &&
               text_.compare(size() - s.size(), s.size(), s.text_) == 0;
    }

    Word substr(std::size_t pos, std::size_t len) const {
        if (pos > size() || len > size() - pos)
            throw IndexOutOfRange("substring range past end of word");
        return Word(PrivateTag{}, text_.substr(pos, len));
    }

    friend Word operator+(const Word& u, const Word& v) {
        return Word(PrivateTag{}, u.text_ + v.text_);
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& u, const Word& v) {
        return u.text_ <=> v.text_;
    }

private:
    struct PrivateTag {};
    Word(PrivateTag, std::string text) : text_(std::move(text)) {}

    std::string text_;
};

inline Word concat(const Word& u, const Word& v) { return u + v; }

/// u^{-1} w: remove the prefix u.  Throws NotAPrefix if u is not a prefix of w.
inline Word strip_prefix(const Word& u, const Word& w) {
    if (!w.starts_with(u))
        throw NotAPrefix("'" + u.str() + "' is not a prefix of '" + w.str() + "'");
    return w.substr(u.size(), w.size() - u.size());
}

/// w v^{-1}: remove the suffix v.  Throws NotASuffix if v is not a suffix of w.
inline Word strip_suffix(const Word& w, const Word& v) {
    if (!w.ends_with(v))
        throw NotASuffix("'" + v.str() + "' is not a suffix of '" + w.str() + "'");
    return w.substr(0, w.size() - v.size());
}

/// The k-th conjugate: w = xy with |x| = k maps to yx.  Requires 0 <= k <= |w|.
inline Word conjugate(const Word& w, std::int64_t k) {
    if (k < 0 || static_cast<std::size_t>(k) > w.size())
        throw IndexOutOfRange("conjugation index must lie in [0, |w|]");
    auto cut = static_cast<std::size_t>(k);
    return w.substr(cut, w.size() - cut) + w.substr(0, cut);
}

inline bool is_palindrome(const Word& w) {
    const std::string& t = w.str();
    return std::equal(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2),
                      t.rbegin());
}

/// All distinct length-n factors of w.  Requires 1 <= n <= |w|.
inline std::set<Word> distinct_factors(const Word& w, std::size_t n) {
    if (n == 0 || n > w.size())
        throw IndexOutOfRange("factor length must lie in [1, |w|]");
    std::set<Word> out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
    return out;
}

/**
 * A right-infinite word.  Copies share one memoized buffer; a grower callback
 * extends the buffer on demand.  The grower must be deterministic and must
 * only ever append (each call sees the buffer it previously produced), which
 * guarantees prefix(n) is a prefix of prefix(m) whenever n <= m.
 */
class WordStream {
public:
    /// Extends buf so that buf.size() >= target.
    using Grower = std::function<void(std::string& buf, std::size_t target)>;

    explicit WordStream(Grower grow)
        : state_(std::make_shared<State>(std::move(grow))) {}

    Word prefix(std::size_t len) const { return Word(prefix_str(len)); }

    std::string prefix_str(std::size_t len) const {
        std::lock_guard<std::mutex> lock(state_->mu);
        if (state_->buf.size() < len) {
            state_->grow(state_->buf, len);
            if (state_->buf.size() < len)
                throw DirectiveTooShort("stream ended before requested prefix length");
        }
        return state_->buf.substr(0, len);
    }

    Letter at(std::size_t i) const { return Word(prefix_str(i + 1))[i]; }

private:
    struct State {
        explicit State(Grower g) : grow(std::move(g)) {}
        std::mutex mu;
        std::string buf;
        Grower grow;
    };
    std::shared_ptr<State> state_;
};

/// Stream beginning with the finite word u and continuing as s.
inline WordStream prepend(const Word& u, const WordStream& s) {
    std::string head = u.str();
    return WordStream([head, s](std::string& buf, std::size_t target) {
        if (target <= head.size()) {
            buf = head.substr(0, std::max(buf.size(), target));
            return;
        }
        buf = head + s.prefix_str(target - head.size());
    });
}

/// Drops the first k letters of s.
inline WordStream shift(const WordStream& s, std::int64_t k) {
    if (k < 0) throw IndexOutOfRange("shift amount must be nonnegative");
    auto skip = static_cast<std::size_t>(k);
    return WordStream([s, skip](std::string& buf, std::size_t target) {
        std::string whole = s.prefix_str(skip + target);
        buf.assign(whole, skip, std::string::npos);
    });
}

/// u^{-1} s for a stream: requires u to be a prefix of s.
inline WordStream strip_prefix(const Word& u, const WordStream& s) {
    if (s.prefix(u.size()) != u)
        throw NotAPrefix("'" + u.str() + "' is not a prefix of the stream");
    return shift(s, static_cast<std::int64_t>(u.size()));
}

/// Letter-exchange image E(s) of a stream.
inline WordStream exchanged(const WordStream& s) {
    return WordStream([s](std::string& buf, std::size_t target) {
        std::string src = s.prefix_str(target);
        for (char& ch : src) ch = (ch == 'a') ? 'b' : 'a';
        buf = std::move(src);
    });
}

/// The periodic stream www...  Requires w nonempty.
inline WordStream periodic(const Word& w) {
    if (w.empty()) throw EmptyImage("periodic stream needs a nonempty period");
    std::string cell = w.str();
    return WordStream([cell](std::string& buf, std::size_t target) {
        while (buf.size() < target) buf += cell;
    });
}

} // namespace sturmian
