#pragma once

#include <cstdint>
#include <ostream>

#include "twyang/rational.hpp"

namespace twyang {

/// Element of the prime field F_p with p = 2^61 - 1.
///
/// Used as a homomorphic image of the rationals for large linear systems. A rank that is
/// full modulo p is full over Q, and a nullity of one modulo p is one over Q; the converse
/// directions only hold outside finitely many primes.
class ModP {
   public:
    static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

    constexpr ModP() = default;
    constexpr ModP(int v) : v_(v >= 0 ? std::uint64_t(v) : kPrime - std::uint64_t(-(long long)v) % kPrime) {}
    static constexpr ModP raw(std::uint64_t v) { ModP m; m.v_ = v; return m; }
    explicit ModP(const Rational& r) : ModP(from_rational(r)) {}

    /// Reduction of a rational; throws Error(PoleAtPoint) if p divides the denominator.
    static ModP from_rational(const Rational& r);

    constexpr std::uint64_t value() const noexcept { return v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    static constexpr std::uint64_t reduce(unsigned __int128 x) noexcept {
        std::uint64_t lo = std::uint64_t(x & kPrime);
        std::uint64_t hi = std::uint64_t(x >> 61);
        std::uint64_t s = lo + hi;
        s = (s & kPrime) + (s >> 61);
        return s >= kPrime ? s - kPrime : s;
    }

    constexpr ModP& operator+=(ModP o) noexcept {
        v_ += o.v_;
        if (v_ >= kPrime) v_ -= kPrime;
        return *this;
    }
    constexpr ModP& operator-=(ModP o) noexcept {
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + kPrime - o.v_;
        return *this;
    }
    constexpr ModP& operator*=(ModP o) noexcept {
        v_ = reduce((unsigned __int128)v_ * o.v_);
        return *this;
    }
    ModP& operator/=(ModP o) { return *this *= o.inverse(); }

    friend constexpr ModP operator+(ModP a, ModP b) noexcept { return a += b; }
    friend constexpr ModP operator-(ModP a, ModP b) noexcept { return a -= b; }
    friend constexpr ModP operator*(ModP a, ModP b) noexcept { return a *= b; }
    friend ModP operator/(ModP a, ModP b) { return a /= b; }
    constexpr ModP operator-() const noexcept { return raw(v_ == 0 ? 0 : kPrime - v_); }
    friend constexpr bool operator==(ModP a, ModP b) noexcept { return a.v_ == b.v_; }

    ModP inverse() const;
    ModP pow(std::uint64_t e) const noexcept;

    friend std::ostream& operator<<(std::ostream& os, ModP m) { return os << m.v_; }

   private:
    std::uint64_t v_ = 0;
};

inline bool is_zero(ModP m) noexcept { return m.is_zero(); }

/// Rational with numerator and denominator below sqrt(p/2) congruent to m; false if none exists.
bool rational_reconstruct(ModP m, Rational& out);

}  // namespace twyang
