#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "dkdv/errors.hpp"
#include "dkdv/rational.hpp"

namespace dkdv {

/// Classification of one coordinate of an iterated state.
struct EntrySignature {
    enum class Kind : std::uint8_t { ZeroLike, InfLike, Regular };

    // Order of the leading exponent; 0 for Regular, kInfiniteOrder for an
    // exact zero (which vanishes to all orders).
    static constexpr long kInfiniteOrder = std::numeric_limits<long>::max();

    Kind kind = Kind::Regular;
    long order = 0;

    bool is_singular() const { return kind != Kind::Regular; }

    friend bool operator==(const EntrySignature&, const EntrySignature&) = default;

    static EntrySignature regular() { return {Kind::Regular, 0}; }
    static EntrySignature zero_like(long order) { return {Kind::ZeroLike, order}; }
    static EntrySignature inf_like(long order) { return {Kind::InfLike, order}; }

    std::string str() const {
        switch (kind) {
            case Kind::Regular: return "u";
            case Kind::ZeroLike:
                if (order == kInfiniteOrder) return "0!";
                return order == 1 ? "0" : "0^" + std::to_string(order);
            default:
                return order == 1 ? "inf" : "inf^" + std::to_string(order);
        }
    }
};

/// Truncated formal Laurent series in a single indeterminate eps, with exact
/// coefficients in K (a field). Three states are possible:
///
///   - exact zero: the series is 0 to all orders (a distinguished marker,
///     never encoded by a fake valuation);
///   - determined: the coefficients for exponents [valuation, truncation)
///     are known, the one at `valuation` is nonzero, and everything below
///     the valuation is exactly zero;
///   - truncated zero: every coefficient below `truncation` is known to be
///     zero but nothing is known beyond it, so the valuation is undetermined.
///     Operations that need the leading coefficient throw UndeterminedLeading,
///     which callers resolve by raising the truncation order.
///
/// Truncation propagation: add/sub keep the smaller truncation; mul keeps
/// min(val(s)+trunc(t), val(t)+trunc(s)); the reciprocal keeps the same
/// number of known coefficients.
template <class K>
class Laurent {
public:
    Laurent() : exact_zero_(true), val_(0), trunc_(0) {}

    static Laurent exact_zero() { return Laurent(); }

    static Laurent constant(const K& c, long truncation) {
        if (c.is_zero()) return exact_zero();
        return monomial(c, 0, truncation);
    }

    static Laurent epsilon(long truncation) { return monomial(K::one(), 1, truncation); }

    static Laurent monomial(const K& c, long exponent, long truncation) {
        if (c.is_zero()) return exact_zero();
        if (truncation <= exponent)
            throw std::invalid_argument("monomial truncated below its own exponent");
        Laurent s;
        s.exact_zero_ = false;
        s.val_ = exponent;
        s.trunc_ = truncation;
        s.c_.assign(static_cast<std::size_t>(truncation - exponent), K{});
        s.c_[0] = c;
        return s;
    }

    bool is_exact_zero() const { return exact_zero_; }

    /// True when the leading coefficient (hence the valuation) is known.
    bool leading_known() const { return !exact_zero_ && !c_.empty(); }

    /// True when no nonzero coefficient is known but the series is not an
    /// exact zero: it is 0 + O(eps^truncation).
    bool is_truncated_zero() const { return !exact_zero_ && c_.empty(); }

    long valuation() const {
        require_leading();
        return val_;
    }

    long truncation() const {
        if (exact_zero_) throw std::logic_error("truncation of exact zero");
        return trunc_;
    }

    const K& leading() const {
        require_leading();
        return c_.front();
    }

    bool coeff_known(long e) const {
        if (exact_zero_) return true;
        return e < trunc_;
    }

    /// Coefficient of eps^e. Exactly zero below the valuation; throws
    /// UndeterminedLeading at or beyond the truncation order.
    K coeff(long e) const {
        if (exact_zero_) return K{};
        if (e >= trunc_) throw UndeterminedLeading(trunc_);
        if (e < val_) return K{};
        return c_[static_cast<std::size_t>(e - val_)];
    }

    std::size_t known_coeff_count() const { return c_.size(); }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Laurent operator+(const Laurent& s, const Laurent& t) {
        if (s.exact_zero_) return t;
        if (t.exact_zero_) return s;
        long trunc = std::min(s.trunc_, t.trunc_);
        long lo = std::min(s.low_known(), t.low_known());
        Laurent r;
        r.exact_zero_ = false;
        if (lo >= trunc) {  // nothing determined in the common window
            r.val_ = r.trunc_ = trunc;
            return r;
        }
        r.val_ = lo;
        r.trunc_ = trunc;
        r.c_.assign(static_cast<std::size_t>(trunc - lo), K{});
        for (long e = lo; e < trunc; ++e)
            r.c_[static_cast<std::size_t>(e - lo)] = s.coeff(e) + t.coeff(e);
        r.normalize();
        return r;
    }

    friend Laurent operator-(const Laurent& s, const Laurent& t) { return s + (-t); }

    friend Laurent operator*(const Laurent& s, const Laurent& t) {
        if (s.exact_zero_ || t.exact_zero_) return exact_zero();
        long vs = s.low_known(), vt = t.low_known();
        long trunc = std::min(vs + t.trunc_, vt + s.trunc_);
        Laurent r;
        r.exact_zero_ = false;
        if (s.c_.empty() || t.c_.empty()) {  // truncated zero times anything known
            r.val_ = r.trunc_ = trunc;
            return r;
        }
        long width = trunc - (vs + vt);
        r.val_ = vs + vt;
        r.trunc_ = trunc;
        r.c_.assign(static_cast<std::size_t>(width), K{});
        std::size_t ns = s.c_.size(), nt = t.c_.size();
        for (std::size_t i = 0; i < ns && i < static_cast<std::size_t>(width); ++i) {
            if (s.c_[i].is_zero()) continue;
            std::size_t jmax = std::min(nt, static_cast<std::size_t>(width) - i);
            for (std::size_t j = 0; j < jmax; ++j)
                r.c_[i + j] = r.c_[i + j] + s.c_[i] * t.c_[j];
        }
        // Leading product is nonzero over a field, but keep the invariant honest.
        r.normalize();
        return r;
    }

    /// Reciprocal by recursive inversion of the unit part. The result keeps
    /// the same number of known coefficients.
    Laurent reciprocal() const {
        if (exact_zero_) throw ExactZeroReciprocal();
        if (c_.empty()) throw UndeterminedLeading(trunc_);
        std::size_t n = c_.size();
        Laurent r;
        r.exact_zero_ = false;
        r.val_ = -val_;
        r.trunc_ = -val_ + static_cast<long>(n);
        r.c_.assign(n, K{});
        K inv0 = c_[0].inverse();
        r.c_[0] = inv0;
        for (std::size_t k = 1; k < n; ++k) {
            K acc{};
            for (std::size_t j = 1; j <= k; ++j) acc = acc + c_[j] * r.c_[k - j];
            r.c_[k] = -(inv0 * acc);
        }
        return r;
    }

    friend Laurent operator/(const Laurent& s, const Laurent& t) { return s * t.reciprocal(); }

    /// Entry classification by the sign of the valuation. An exact zero is
    /// ZeroLike of infinite order by convention; a truncated zero throws
    /// UndeterminedLeading so callers can raise the truncation order.
    EntrySignature classify() const {
        if (exact_zero_) return EntrySignature::zero_like(EntrySignature::kInfiniteOrder);
        if (c_.empty()) throw UndeterminedLeading(trunc_);
        if (val_ > 0) return EntrySignature::zero_like(val_);
        if (val_ < 0) return EntrySignature::inf_like(-val_);
        return EntrySignature::regular();
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.exact_zero_ == b.exact_zero_ && a.val_ == b.val_ && a.trunc_ == b.trunc_ &&
               a.c_ == b.c_;
    }

    std::string str() const {
        if (exact_zero_) return "0";
        std::ostringstream os;
        bool first = true;
        for (long e = val_; e < trunc_; ++e) {
            K c = coeff(e);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << coeff_str(c) << ")";
            if (e != 0) os << "*eps^" << e;
            first = false;
        }
        if (first) os << "0";
        os << " + O(eps^" << trunc_ << ")";
        return os.str();
    }

private:
    void require_leading() const {
        if (exact_zero_) throw std::logic_error("valuation of exact zero");
        if (c_.empty()) throw UndeterminedLeading(trunc_);
    }

    // Lowest exponent whose coefficient is known nonzero, or the truncation
    // order for a truncated zero (every known coefficient vanishes below it).
    long low_known() const { return c_.empty() ? trunc_ : val_; }

    void normalize() {
        std::size_t skip = 0;
        while (skip < c_.size() && c_[skip].is_zero()) ++skip;
        if (skip > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
            val_ += static_cast<long>(skip);
        }
        if (c_.empty()) val_ = trunc_;
    }

    static std::string coeff_str(const K& c) {
        if constexpr (requires { c.str(); }) {
            return c.str();
        } else {
            return std::to_string(c.v);
        }
    }

    bool exact_zero_;
    long val_;    // equal to trunc_ for a truncated zero
    long trunc_;  // exponents >= trunc_ are unknown
    std::vector<K> c_;  // c_[i] = coefficient of eps^(val_ + i); dense window
};

using LaurentQ = Laurent<Rational>;

}  // namespace dkdv
