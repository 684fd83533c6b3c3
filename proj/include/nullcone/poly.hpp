#ifndef NULLCONE_POLY_HPP
#define NULLCONE_POLY_HPP

#include <map>
#include <string>

#include "nullcone/rational.hpp"

namespace nullcone {

// Sparse multivariate polynomial with exact rational coefficients.
// Monomials are exponent vectors of a fixed arity, kept in lexicographic
// order; zero coefficients are never stored.
class Poly {
public:
    using Mono = std::vector<int>;

    Poly() : arity_(0) {}
    explicit Poly(std::size_t arity) : arity_(arity) {}

    static Poly constant(const Rat& c, std::size_t arity);
    static Poly var(std::size_t i, std::size_t arity);  // the i-th variable (0-based)

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Mono, Rat>& terms() const { return terms_; }

    Rat coefficient(const Mono& m) const;
    void add_term(const Mono& m, const Rat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c);
    friend Poly operator*(const Rat& c, Poly p) { return p *= c; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const std::vector<Rat>& point) const;
    int total_degree() const;  // -1 for the zero polynomial
    bool uses_var(std::size_t i) const;
    bool is_homogeneous(int degree) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    std::size_t arity_;
    std::map<Mono, Rat> terms_;
};

// Square matrix of polynomials (pencils of linear forms in practice).
class PolyMatrix {
public:
    PolyMatrix() : n_(0) {}
    PolyMatrix(std::size_t n, std::size_t arity)
        : n_(n), arity_(arity), e_(n * n, Poly(arity)) {}

    std::size_t size() const { return n_; }
    std::size_t arity() const { return arity_; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    Poly& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    bool is_alternating() const;
    PolyMatrix minor_without(const std::vector<std::size_t>& removed) const;

private:
    std::size_t n_, arity_;
    std::vector<Poly> e_;
};

// Exact determinant by cofactor expansion (sizes stay small here).
Poly det_poly(const PolyMatrix& m);

// Pfaffian of an even-size alternating matrix, normalized so the standard
// symplectic block sum(E_{2i-1,2i} - E_{2i,2i-1}) has Pfaffian 1.
Poly pfaffian(const PolyMatrix& m);
Rat pfaffian(const RatMat& m);

}  // namespace nullcone

#endif
