#pragma once

#include <stdexcept>
#include <string>

#include "wzw/laurent.hpp"
#include "wzw/poly.hpp"

namespace wzw {

struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

/// Rational function in u over Q(eps_N), kept normalized: numerator and
/// denominator coprime, denominator monic and nonzero. Laurent data (negative
/// powers of u) is absorbed into the denominator.
class RatFunc {
public:
    RatFunc() : num_(0), den_(0) {}
    explicit RatFunc(int field_n)
        : num_(field_n), den_(Poly::constant(Cyc::one(field_n))) {}
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const Cyc& c);
    static RatFunc from_rat(int field_n, const Rat& r);
    static RatFunc from_poly(const Poly& p);
    static RatFunc from_laurent(const Laurent& l);
    static RatFunc var(int field_n);
    /// c * u^e for any integer e.
    static RatFunc monomial(const Cyc& c, int e);

    int field_n() const { return num_.field_n(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.deg() <= 0 && den_.deg() == 0; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator*(const Cyc& s) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;

    /// Exact evaluation; throws pole_error at a denominator zero.
    Cyc eval_cyc(const Cyc& u0) const;
    /// Numeric evaluation; throws pole_error when |den(u)| < tol relative to
    /// the coefficient scale.
    Cplx eval(const Cplx& u, double pole_tol = 1e-9) const;

    /// f(c*u)
    RatFunc scale_var(const Cyc& c) const;
    /// f(c/u)
    RatFunc subst_recip(const Cyc& c) const;
    /// u * d/du (multiplicative-coordinate derivative)
    RatFunc u_ddu() const;
    RatFunc u_ddu(int times) const;

    /// Pole order at u0 (0 if regular).
    int pole_order(const Cyc& u0) const;
    /// Laurent expansion in xi = u - u0 including all terms with exponent
    /// <= order_hi (starts at -pole_order).
    Laurent expansion(const Cyc& u0, int order_hi) const;
    /// Expansion in s = 1/u at infinity, terms with exponent <= order_hi.
    Laurent expansion_at_infinity(int order_hi) const;
    /// Coefficient of (u-u0)^{-1}.
    Cyc residue_at(const Cyc& u0) const;
    /// Order of vanishing at infinity (deg den - deg num); very negative
    /// means a pole at infinity. Zero function returns a large sentinel.
    int order_at_infinity() const;

    /// True if the denominator divides u^j * (u^N - 1)^m for some j, m.
    bool denominator_in_standard_form(int n_twist) const;

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

inline RatFunc operator*(const Cyc& s, const RatFunc& f) { return f * s; }

}  // namespace wzw
