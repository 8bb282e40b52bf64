#pragma once

#include <map>
#include <string>

#include "wzw/poly.hpp"

namespace wzw {

/// Sparse Laurent polynomial over Q(eps_N): finite map exponent -> coefficient.
/// Used for q-expansion bookkeeping where exponents go negative.
class Laurent {
public:
    Laurent() : n_(0) {}
    explicit Laurent(int field_n) : n_(field_n) {}

    static Laurent monomial(const Cyc& c, int e);
    static Laurent from_poly(const Poly& p, int shift = 0);

    int field_n() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    int min_deg() const;
    int max_deg() const;
    Cyc coeff(int e) const;
    const std::map<int, Cyc>& terms() const { return t_; }

    void add_term(int e, const Cyc& c);

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator*(const Cyc& s) const;
    bool operator==(const Laurent& o) const { return n_ == o.n_ ? t_ == o.t_ : false; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// p(c*u)
    Laurent scale_var(const Cyc& c) const;
    /// Substitute u -> u^k (k >= 1).
    Laurent stretch(int k) const;

    Cplx eval(const Cplx& u) const;

    std::string str(const std::string& var = "u") const;

private:
    int n_;
    std::map<int, Cyc> t_;  // exponent -> nonzero coefficient
};

}  // namespace wzw
