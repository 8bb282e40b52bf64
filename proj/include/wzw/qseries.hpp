#pragma once

#include <vector>

#include "wzw/ratfunc.hpp"

namespace wzw {

/// Truncated formal series in q with RatFunc (in u) coefficients. Supports a
/// negative starting exponent; `trunc` is the highest exponent the series is
/// exact through. All arithmetic tracks the resulting validity window.
class QSeries {
public:
    QSeries() : n_(0), qmin_(0), trunc_(-1) {}
    QSeries(int field_n, int trunc) : n_(field_n), qmin_(0), trunc_(trunc) {}

    static QSeries constant(const RatFunc& c, int trunc);
    /// c * q^e
    static QSeries monomial(const RatFunc& c, int e, int trunc);

    int field_n() const { return n_; }
    int trunc() const { return trunc_; }
    int qmin() const { return qmin_; }
    /// Coefficient of q^e (zero outside stored range).
    RatFunc coeff(int e) const;
    void set_coeff(int e, const RatFunc& c);

    bool is_zero() const;

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const Cyc& s) const;
    QSeries operator*(const RatFunc& f) const;
    bool equal_through(const QSeries& o, int order) const;

    /// Retruncate to a lower order.
    QSeries truncate(int new_trunc) const;

    /// Multiplicative inverse as a formal series; the lowest coefficient must
    /// be an invertible RatFunc.
    QSeries inverse() const;

    /// Apply a RatFunc -> RatFunc map to every coefficient.
    template <typename F>
    QSeries map_coeffs(F&& f) const {
        QSeries r(n_, trunc_);
        r.qmin_ = qmin_;
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(f(c));
        r.tidy();
        return r;
    }

    /// u -> eps^j * u on every coefficient.
    QSeries subst_eps_u(int j) const;

    /// Formal substitution u -> q*u, re-expanding each rational coefficient
    /// at u = 0 (the |qu| < 1 branch), so the result has Laurent-polynomial
    /// coefficients. The output window where the input truncation fully
    /// determines the result is exponent-dependent; see WFunction checks.
    QSeries subst_q_u() const;

    Cplx eval(const Cplx& q, const Cplx& u, double pole_tol = 1e-9) const;

    std::string str() const;

private:
    void tidy();
    int n_;
    int qmin_;
    std::vector<RatFunc> c_;  // coefficient of q^{qmin_ + i}
    int trunc_;
};

}  // namespace wzw
