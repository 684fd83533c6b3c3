#ifndef NULLCONE_RATIONAL_HPP
#define NULLCONE_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullcone {

// Exact rational scalar. Wraps a GMP rational kept in canonical form:
// gcd(num, den) = 1 and den > 0. Equality is value equality.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long long n) : v_(static_cast<long>(n)) {}  // LP64: long is 64-bit
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }

    // Parses "a/b" or "a".
    static Rat parse(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { Rat r; r.v_ = -v_; return r; }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    std::string str() const;

private:
    mpq_class v_;
};

// Fixed-dimension vector of exact rationals.
class RatVec {
public:
    RatVec() = default;
    explicit RatVec(std::size_t dim) : e_(dim) {}
    RatVec(std::initializer_list<Rat> xs) : e_(xs) {}
    explicit RatVec(std::vector<Rat> xs) : e_(std::move(xs)) {}

    std::size_t dim() const { return e_.size(); }
    const Rat& operator[](std::size_t i) const { return e_[i]; }
    Rat& operator[](std::size_t i) { return e_[i]; }

    RatVec& operator+=(const RatVec& o);
    RatVec& operator-=(const RatVec& o);
    RatVec& operator*=(const Rat& c);
    friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
    friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
    friend RatVec operator*(const Rat& c, RatVec v) { return v *= c; }

    bool is_zero() const;
    friend bool operator==(const RatVec& a, const RatVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const RatVec& a, const RatVec& b) { return !(a == b); }
    bool operator<(const RatVec& o) const;  // lexicographic

    std::string str() const;

private:
    std::vector<Rat> e_;
};

// Dense rectangular matrix of exact rationals.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    static RatMat identity(std::size_t n);
    RatVec apply(const RatVec& x) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

// Exact dot product. Throws on dimension mismatch.
Rat inner(const RatVec& a, const RatVec& b);

// Smallest positive integer multiple clearing all denominators.
mpz_class common_denominator(const RatVec& v);

}  // namespace nullcone

#endif
