#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace camina {

using Rational = mpq_class;
using Integer = mpz_class;

/* "num/den", always with a denominator. */
std::string rational_to_string(const Rational& r);
/* Accepts "a" or "a/b". */
Rational parse_rational(std::string_view text);

bool is_prime(unsigned long v);

/* Element of Q(zeta_p) in the power basis zeta^0..zeta^{p-2}. */
class CycloScalar {
public:
    CycloScalar() = default;
    explicit CycloScalar(unsigned p);
    CycloScalar(unsigned p, const Rational& r);
    CycloScalar(unsigned p, std::vector<Rational> coeffs);

    static CycloScalar zeta_pow(unsigned p, long t);

    unsigned prime() const noexcept { return p_; }
    std::span<const Rational> coeffs() const noexcept { return c_; }
    bool is_zero() const;
    bool is_rational() const;

    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    CycloScalar& operator*=(const Rational& r);

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator*(CycloScalar a, const Rational& r) { return a *= r; }
    CycloScalar operator-() const;
    friend bool operator==(const CycloScalar& a, const CycloScalar& b);
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    /* zeta -> zeta^t, t coprime to p. */
    CycloScalar galois(unsigned t) const;
    CycloScalar conj() const;
    /* Product of all Galois conjugates, a rational. */
    Rational norm() const;
    CycloScalar inverse() const;

    std::string to_string() const;

private:
    unsigned p_ = 2;
    std::vector<Rational> c_ = std::vector<Rational>(1);
};

CycloScalar zeta_pow(unsigned p, long t);
CycloScalar conj(const CycloScalar& x);

/* Dense matrix over Q(zeta_p), coefficients stored entry-major. */
class CycloMatrix {
public:
    CycloMatrix() = default;
    CycloMatrix(std::size_t rows, std::size_t cols, unsigned p);

    static CycloMatrix identity(std::size_t n, unsigned p);
    static CycloMatrix all_ones(std::size_t n, unsigned p);
    /* Ones at (t, t+1 mod size). */
    static CycloMatrix shift(std::size_t size, unsigned p);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    unsigned prime() const noexcept { return p_; }
    std::size_t width() const noexcept { return p_ - 1; }

    CycloScalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const CycloScalar& v);
    void set(std::size_t r, std::size_t c, const Rational& v);
    std::span<const Rational> entry(std::size_t r, std::size_t c) const;
    std::span<Rational> entry(std::size_t r, std::size_t c);
    bool entry_is_zero(std::size_t r, std::size_t c) const;
    bool is_zero() const;
    std::size_t nonzero_count() const;

    /* Flat coefficient view, (r*cols + c)*(p-1) + t. */
    const std::vector<Rational>& data() const noexcept { return data_; }
    std::vector<Rational>& data() noexcept { return data_; }

    CycloMatrix& operator+=(const CycloMatrix& o);
    CycloMatrix& operator-=(const CycloMatrix& o);
    CycloMatrix& operator*=(const Rational& r);
    CycloMatrix& operator*=(const CycloScalar& s);
    friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) { return a += b; }
    friend CycloMatrix operator-(CycloMatrix a, const CycloMatrix& b) { return a -= b; }
    friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
    friend CycloMatrix operator*(CycloMatrix a, const Rational& r) { return a *= r; }
    friend CycloMatrix operator*(CycloMatrix a, const CycloScalar& s) { return a *= s; }
    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
    friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

    CycloMatrix transpose() const;
    CycloMatrix conj_transpose() const;
    CycloMatrix galois(unsigned t) const;
    CycloScalar trace() const;
    CycloMatrix power(unsigned e) const;

    CycloMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
    CycloMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const CycloMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    unsigned p_ = 2;
    std::vector<Rational> data_;
};

CycloMatrix mat_mul(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix mat_add(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix mat_scale(const CycloMatrix& a, const CycloScalar& s);
CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix conj_transpose(const CycloMatrix& a);
CycloScalar trace(const CycloMatrix& a);
CycloMatrix identity(std::size_t n, unsigned p);
CycloMatrix all_ones(std::size_t n, unsigned p);
/* p x p cyclic shift over Q(zeta_p). */
CycloMatrix shift_matrix(unsigned p);
/* tr(A conj(B)^T) */
CycloScalar inner_product(const CycloMatrix& a, const CycloMatrix& b);

/* Incremental row-echelon basis for vectorized matrices. */
class LinearSpan {
public:
    LinearSpan(std::size_t length, unsigned p);

    /* Returns true when the dimension grew. */
    bool insert(const CycloMatrix& m);
    bool insert(std::vector<Rational> flat);
    bool contains(const CycloMatrix& m) const;
    std::size_t dimension() const noexcept { return rows_.size(); }
    std::size_t length() const noexcept { return len_; }

private:
    struct Row {
        std::size_t pivot;
        std::vector<std::size_t> support;
        std::vector<Rational> coeffs;
    };
    void reduce(std::vector<Rational>& v) const;

    std::size_t len_;
    unsigned p_;
    std::vector<Row> rows_;
};

std::size_t span_dimension(std::span<const CycloMatrix> mats);

struct Closure {
    std::size_t dimension = 0;
    /* Linearly independent words spanning the algebra. */
    std::vector<CycloMatrix> basis;
};

Closure algebra_closure(std::span<const CycloMatrix> generators);
std::size_t closure_dimension(std::span<const CycloMatrix> generators);

} // namespace camina
