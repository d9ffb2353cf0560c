#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace ulrich {

using Int = long long;

struct InvalidSurface : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidPolarization : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConditionViolated : std::runtime_error {
    ConditionViolated(std::string which, std::string msg)
        : std::runtime_error(std::move(msg)), branch(std::move(which)) {}
    std::string branch;
};

/// An exact identity that must hold by construction failed. Indicates a bug.
struct VerificationError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Halve a value known to be even. Used for the half-integer terms of
/// Riemann-Roch; everything stays in exact integer arithmetic.
inline Int exact_halve(Int doubled) {
    if (doubled % 2 != 0)
        throw VerificationError("exact_halve: odd value " + std::to_string(doubled));
    return doubled / 2;
}

/// Formal integer combination of named Pic^0 generators. Degree 0 by
/// construction; participates in genericity bookkeeping only and never
/// affects a numerical result.
class TwistLabel {
public:
    TwistLabel() = default;

    static TwistLabel generator(const std::string& name) {
        TwistLabel t;
        t.terms_[name] = 1;
        return t;
    }

    bool is_zero() const { return terms_.empty(); }

    // A label is "general" unless it is the zero expression.
    bool is_general() const { return !is_zero(); }

    TwistLabel operator+(const TwistLabel& o) const {
        TwistLabel r = *this;
        for (const auto& [name, c] : o.terms_) r.add(name, c);
        return r;
    }

    TwistLabel operator-(const TwistLabel& o) const {
        TwistLabel r = *this;
        for (const auto& [name, c] : o.terms_) r.add(name, -c);
        return r;
    }

    TwistLabel operator-() const {
        TwistLabel r;
        for (const auto& [name, c] : terms_) r.terms_[name] = -c;
        return r;
    }

    bool operator==(const TwistLabel& o) const { return terms_ == o.terms_; }
    bool operator!=(const TwistLabel& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [name, c] : terms_) {
            if (s.empty()) {
                if (c == -1) s += "-";
                else if (c != 1) s += std::to_string(c) + "*";
            } else {
                s += (c < 0) ? " - " : " + ";
                Int m = c < 0 ? -c : c;
                if (m != 1) s += std::to_string(m) + "*";
            }
            s += name;
        }
        return s;
    }

    const std::map<std::string, Int>& terms() const { return terms_; }

private:
    void add(const std::string& name, Int c) {
        auto it = terms_.find(name);
        if (it == terms_.end()) {
            if (c != 0) terms_[name] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<std::string, Int> terms_;
};

/// Numerical divisor class a*C0 + b*F with an optional formal twist.
struct DivisorClass {
    Int a = 0;
    Int b = 0;
    TwistLabel twist;

    DivisorClass() = default;
    DivisorClass(Int a_, Int b_) : a(a_), b(b_) {}
    DivisorClass(Int a_, Int b_, TwistLabel t) : a(a_), b(b_), twist(std::move(t)) {}

    DivisorClass operator+(const DivisorClass& o) const {
        return {a + o.a, b + o.b, twist + o.twist};
    }
    DivisorClass operator-(const DivisorClass& o) const {
        return {a - o.a, b - o.b, twist - o.twist};
    }
    DivisorClass operator-() const { return {-a, -b, -twist}; }

    friend DivisorClass operator*(Int n, const DivisorClass& d) {
        DivisorClass r{n * d.a, n * d.b};
        for (Int i = 0; i < (n < 0 ? -n : n); ++i)
            r.twist = (n > 0) ? r.twist + d.twist : r.twist - d.twist;
        return r;
    }

    bool same_class(const DivisorClass& o) const { return a == o.a && b == o.b; }
    bool operator==(const DivisorClass& o) const {
        return same_class(o) && twist == o.twist;
    }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }

    std::string to_string() const;
};

/// Geometrically ruled surface pi: X -> C over a genus-g curve, with
/// minimal section C0 of self-intersection -e. Only e >= 1 is admitted.
class RuledSurface {
public:
    RuledSurface(Int genus, Int invariant) : g_(genus), e_(invariant) {
        if (g_ < 0) throw InvalidSurface("genus must be >= 0");
        if (e_ < 1) throw InvalidSurface("invariant e must be >= 1");
    }

    Int genus() const { return g_; }
    Int invariant() const { return e_; }

    /// The formal Pic^0 element appearing in the canonical bundle.
    TwistLabel k_twist() const { return TwistLabel::generator("k"); }

    /// chi(O_X) = 1 - g.
    Int chi_structure_sheaf() const { return 1 - g_; }

private:
    Int g_;
    Int e_;
};

/// Ample class H = alpha*C0 + beta*F; validates alpha >= 1, beta > alpha*e.
class Polarization {
public:
    Polarization(Int alpha, Int beta, const RuledSurface& s) : cls_(alpha, beta) {
        if (alpha < 1)
            throw InvalidPolarization("alpha must be >= 1 (got " +
                                      std::to_string(alpha) + ")");
        if (beta <= alpha * s.invariant())
            throw InvalidPolarization("beta must exceed alpha*e (beta=" +
                                      std::to_string(beta) + ", alpha*e=" +
                                      std::to_string(alpha * s.invariant()) + ")");
    }

    Int alpha() const { return cls_.a; }
    Int beta() const { return cls_.b; }
    const DivisorClass& cls() const { return cls_; }

private:
    DivisorClass cls_;
};

/// Intersection number, from C0^2 = -e, C0.F = 1, F^2 = 0.
Int intersect(const DivisorClass& d1, const DivisorClass& d2, const RuledSurface& s);

/// K_X = -2C0 + (2g-2-e)F, carrying the twist k.
DivisorClass canonical_class(const RuledSurface& s);

/// chi(O_X(d)) = (a+1)(b+1-g) - (a+1)a e/2, exact. The twist is ignored.
Int euler_char_line(const RuledSurface& s, const DivisorClass& d);

/// chi of a rank-2 bundle with Chern classes (c1, c2):
/// 2 chi(O_X) + c1.(c1-K)/2 - c2. Requires c1.(c1-K) even.
Int rank2_chi(const RuledSurface& s, const DivisorClass& c1, Int c2);

/// Chern classes of E(d) for rank-2 E with classes (c1, c2):
/// (c1 + 2d, c2 + c1.d + d^2).
std::pair<DivisorClass, Int> twist_chern(const DivisorClass& c1, Int c2,
                                         const DivisorClass& d,
                                         const RuledSurface& s);

}  // namespace ulrich
