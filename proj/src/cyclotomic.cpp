#include "camina/cyclotomic.hpp"

#include "camina/error.hpp"

#include <algorithm>
#include <sstream>

namespace camina {

namespace {

void require_prime(unsigned p)
{
    if (!is_prime(p))
        throw PreconditionError("cyclotomic prime must be prime, got " + std::to_string(p));
}

void require_same(unsigned p, unsigned q)
{
    if (p != q)
        throw MismatchError("mismatched cyclotomic primes " + std::to_string(p) + " and " + std::to_string(q));
}

/* Fold a length-p redundant vector into the power basis. */
void reduce_full(Rational* full, unsigned p)
{
    Rational& top = full[p - 1];
    if (sgn(top) != 0) {
        for (unsigned t = 0; t + 1 < p; ++t)
            full[t] -= top;
        top = 0;
    }
}

/* acc (length p) += a * b, a and b in the power basis. */
void addmul_full(Rational* acc, const Rational* a, const Rational* b, unsigned p, Rational& tmp)
{
    const unsigned w = p - 1;
    for (unsigned s = 0; s < w; ++s) {
        if (sgn(a[s]) == 0)
            continue;
        for (unsigned t = 0; t < w; ++t) {
            if (sgn(b[t]) == 0)
                continue;
            unsigned e = s + t;
            if (e >= p)
                e -= p;
            mpq_mul(tmp.get_mpq_t(), a[s].get_mpq_t(), b[t].get_mpq_t());
            mpq_add(acc[e].get_mpq_t(), acc[e].get_mpq_t(), tmp.get_mpq_t());
        }
    }
}

bool span_zero(const Rational* a, unsigned w)
{
    for (unsigned t = 0; t < w; ++t)
        if (sgn(a[t]) != 0)
            return false;
    return true;
}

/* out = a * b in the power basis; out must not alias. */
void mul_into(Rational* out, const Rational* a, const Rational* b, unsigned p)
{
    if (p == 2) {
        mpq_mul(out[0].get_mpq_t(), a[0].get_mpq_t(), b[0].get_mpq_t());
        return;
    }
    thread_local std::vector<Rational> full;
    thread_local Rational tmp;
    full.assign(p, Rational(0));
    addmul_full(full.data(), a, b, p, tmp);
    reduce_full(full.data(), p);
    for (unsigned t = 0; t + 1 < p; ++t)
        out[t].swap(full[t]);
}

void galois_into(Rational* out, const Rational* a, unsigned p, unsigned t)
{
    std::vector<Rational> full(p);
    for (unsigned s = 0; s + 1 < p; ++s)
        if (sgn(a[s]) != 0)
            full[(static_cast<unsigned long>(s) * t) % p] += a[s];
    reduce_full(full.data(), p);
    for (unsigned s = 0; s + 1 < p; ++s)
        out[s] = full[s];
}

} // namespace

std::string rational_to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw ValidationError("malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

bool is_prime(unsigned long v)
{
    if (v < 2)
        return false;
    for (unsigned long d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

// ---------------------------------------------------------------- scalar

CycloScalar::CycloScalar(unsigned p) : p_(p), c_(p >= 2 ? p - 1 : 1)
{
    require_prime(p);
}

CycloScalar::CycloScalar(unsigned p, const Rational& r) : CycloScalar(p)
{
    c_[0] = r;
}

CycloScalar::CycloScalar(unsigned p, std::vector<Rational> coeffs) : p_(p)
{
    require_prime(p);
    if (coeffs.size() == p) {
        reduce_full(coeffs.data(), p);
        coeffs.pop_back();
    }
    if (coeffs.size() != p - 1)
        throw MismatchError("coefficient list must have length p-1 or p");
    c_ = std::move(coeffs);
}

CycloScalar CycloScalar::zeta_pow(unsigned p, long t)
{
    require_prime(p);
    long e = t % static_cast<long>(p);
    if (e < 0)
        e += p;
    std::vector<Rational> full(p);
    full[e] = 1;
    return CycloScalar(p, std::move(full));
}

CycloScalar zeta_pow(unsigned p, long t) { return CycloScalar::zeta_pow(p, t); }

bool CycloScalar::is_zero() const { return span_zero(c_.data(), p_ - 1); }

bool CycloScalar::is_rational() const
{
    for (unsigned t = 1; t + 1 < p_; ++t)
        if (sgn(c_[t]) != 0)
            return false;
    return true;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o)
{
    require_same(p_, o.p_);
    for (unsigned t = 0; t + 1 < p_; ++t)
        c_[t] += o.c_[t];
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o)
{
    require_same(p_, o.p_);
    for (unsigned t = 0; t + 1 < p_; ++t)
        c_[t] -= o.c_[t];
    return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o)
{
    require_same(p_, o.p_);
    std::vector<Rational> out(p_ - 1);
    mul_into(out.data(), c_.data(), o.c_.data(), p_);
    c_ = std::move(out);
    return *this;
}

CycloScalar& CycloScalar::operator*=(const Rational& r)
{
    for (auto& c : c_)
        c *= r;
    return *this;
}

CycloScalar CycloScalar::operator-() const
{
    CycloScalar r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

bool operator==(const CycloScalar& a, const CycloScalar& b)
{
    return a.p_ == b.p_ && a.c_ == b.c_;
}

CycloScalar CycloScalar::galois(unsigned t) const
{
    if (t % p_ == 0)
        throw PreconditionError("Galois exponent must be coprime to p");
    CycloScalar r(p_);
    galois_into(r.c_.data(), c_.data(), p_, t % p_);
    return r;
}

CycloScalar CycloScalar::conj() const { return galois(p_ - 1 == 0 ? 1 : p_ - 1); }

CycloScalar conj(const CycloScalar& x) { return x.conj(); }

Rational CycloScalar::norm() const
{
    CycloScalar prod(p_, Rational(1));
    for (unsigned t = 1; t < p_; ++t)
        prod *= galois(t);
    if (!prod.is_rational())
        throw InvariantError("norm is not rational");
    return prod.c_[0];
}

CycloScalar CycloScalar::inverse() const
{
    if (is_zero())
        throw PreconditionError("inverse of zero");
    CycloScalar prod(p_, Rational(1));
    for (unsigned t = 2; t < p_; ++t)
        prod *= galois(t);
    CycloScalar n = *this * prod;
    if (!n.is_rational())
        throw InvariantError("norm is not rational");
    Rational inv = 1 / n.c_[0];
    prod *= inv;
    return prod;
}

std::string CycloScalar::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (unsigned t = 0; t + 1 < p_; ++t) {
        if (sgn(c_[t]) == 0)
            continue;
        if (!first)
            os << (sgn(c_[t]) < 0 ? " - " : " + ");
        else if (sgn(c_[t]) < 0)
            os << "-";
        first = false;
        Rational a = abs(c_[t]);
        if (t == 0)
            os << a.get_str();
        else {
            if (a != 1)
                os << a.get_str() << "*";
            os << "z";
            if (t > 1)
                os << "^" << t;
        }
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------- matrix

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols, unsigned p)
    : rows_(rows), cols_(cols), p_(p)
{
    require_prime(p);
    data_.resize(rows * cols * (p - 1));
}

CycloMatrix CycloMatrix::identity(std::size_t n, unsigned p)
{
    CycloMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m.entry(i, i)[0] = 1;
    return m;
}

CycloMatrix CycloMatrix::all_ones(std::size_t n, unsigned p)
{
    CycloMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.entry(i, j)[0] = 1;
    return m;
}

CycloMatrix CycloMatrix::shift(std::size_t size, unsigned p)
{
    CycloMatrix m(size, size, p);
    for (std::size_t t = 0; t < size; ++t)
        m.entry(t, (t + 1) % size)[0] = 1;
    return m;
}

CycloScalar CycloMatrix::at(std::size_t r, std::size_t c) const
{
    auto e = entry(r, c);
    return CycloScalar(p_, std::vector<Rational>(e.begin(), e.end()));
}

void CycloMatrix::set(std::size_t r, std::size_t c, const CycloScalar& v)
{
    require_same(p_, v.prime());
    auto e = entry(r, c);
    std::copy(v.coeffs().begin(), v.coeffs().end(), e.begin());
}

void CycloMatrix::set(std::size_t r, std::size_t c, const Rational& v)
{
    auto e = entry(r, c);
    std::fill(e.begin(), e.end(), Rational(0));
    e[0] = v;
}

std::span<const Rational> CycloMatrix::entry(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw PreconditionError("matrix index out of range");
    return {data_.data() + (r * cols_ + c) * (p_ - 1), p_ - 1};
}

std::span<Rational> CycloMatrix::entry(std::size_t r, std::size_t c)
{
    if (r >= rows_ || c >= cols_)
        throw PreconditionError("matrix index out of range");
    return {data_.data() + (r * cols_ + c) * (p_ - 1), p_ - 1};
}

bool CycloMatrix::entry_is_zero(std::size_t r, std::size_t c) const
{
    return span_zero(data_.data() + (r * cols_ + c) * (p_ - 1), p_ - 1);
}

bool CycloMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::size_t CycloMatrix::nonzero_count() const
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < rows_ * cols_; ++i)
        if (!span_zero(data_.data() + i * (p_ - 1), p_ - 1))
            ++n;
    return n;
}

static void require_dims(const CycloMatrix& a, const CycloMatrix& b)
{
    require_same(a.prime(), b.prime());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw MismatchError("matrix dimension mismatch");
}

CycloMatrix& CycloMatrix::operator+=(const CycloMatrix& o)
{
    require_dims(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0)
            data_[i] += o.data_[i];
    return *this;
}

CycloMatrix& CycloMatrix::operator-=(const CycloMatrix& o)
{
    require_dims(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0)
            data_[i] -= o.data_[i];
    return *this;
}

CycloMatrix& CycloMatrix::operator*=(const Rational& r)
{
    for (auto& x : data_)
        if (sgn(x) != 0)
            x *= r;
    return *this;
}

CycloMatrix& CycloMatrix::operator*=(const CycloScalar& s)
{
    require_same(p_, s.prime());
    if (s.is_rational())
        return *this *= s.coeffs()[0];
    const unsigned w = p_ - 1;
    std::vector<Rational> out(w);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
        Rational* e = data_.data() + i * w;
        if (span_zero(e, w))
            continue;
        mul_into(out.data(), e, s.coeffs().data(), p_);
        for (unsigned t = 0; t < w; ++t)
            e[t].swap(out[t]);
    }
    return *this;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b)
{
    require_same(a.p_, b.p_);
    if (a.cols_ != b.rows_)
        throw MismatchError("matrix product dimension mismatch");
    const unsigned p = a.p_;
    const unsigned w = p - 1;
    CycloMatrix c(a.rows_, b.cols_, p);

    std::vector<std::vector<std::size_t>> bnz(b.rows_);
    for (std::size_t l = 0; l < b.rows_; ++l)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (!b.entry_is_zero(l, j))
                bnz[l].push_back(j);

    Rational tmp;
    if (p == 2) {
        for (std::size_t i = 0; i < a.rows_; ++i) {
            Rational* crow = c.data_.data() + i * c.cols_;
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Rational& x = a.data_[i * a.cols_ + l];
                if (sgn(x) == 0)
                    continue;
                const Rational* brow = b.data_.data() + l * b.cols_;
                for (std::size_t j : bnz[l]) {
                    mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), brow[j].get_mpq_t());
                    mpq_add(crow[j].get_mpq_t(), crow[j].get_mpq_t(), tmp.get_mpq_t());
                }
            }
        }
        return c;
    }

    std::vector<Rational> acc(b.cols_ * p);
    std::vector<char> touched(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        bool any = false;
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Rational* x = a.data_.data() + (i * a.cols_ + l) * w;
            if (span_zero(x, w))
                continue;
            for (std::size_t j : bnz[l]) {
                addmul_full(acc.data() + j * p, x, b.data_.data() + (l * b.cols_ + j) * w, p, tmp);
                touched[j] = 1;
                any = true;
            }
        }
        if (!any)
            continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
            if (!touched[j])
                continue;
            touched[j] = 0;
            Rational* f = acc.data() + j * p;
            reduce_full(f, p);
            Rational* dst = c.data_.data() + (i * c.cols_ + j) * w;
            for (unsigned t = 0; t < w; ++t) {
                dst[t].swap(f[t]);
                f[t] = 0;
            }
        }
    }
    return c;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
}

CycloMatrix CycloMatrix::transpose() const
{
    CycloMatrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            auto src = entry(r, c);
            auto dst = t.entry(c, r);
            std::copy(src.begin(), src.end(), dst.begin());
        }
    return t;
}

CycloMatrix CycloMatrix::galois(unsigned t) const
{
    if (t % p_ == 0)
        throw PreconditionError("Galois exponent must be coprime to p");
    CycloMatrix g(rows_, cols_, p_);
    if (p_ == 2) {
        g.data_ = data_;
        return g;
    }
    const unsigned w = p_ - 1;
    for (std::size_t i = 0; i < rows_ * cols_; ++i)
        if (!span_zero(data_.data() + i * w, w))
            galois_into(g.data_.data() + i * w, data_.data() + i * w, p_, t % p_);
    return g;
}

CycloMatrix CycloMatrix::conj_transpose() const { return galois(p_ - 1).transpose(); }

CycloScalar CycloMatrix::trace() const
{
    if (rows_ != cols_)
        throw MismatchError("trace of a non-square matrix");
    CycloScalar s(p_);
    for (std::size_t i = 0; i < rows_; ++i)
        s += at(i, i);
    return s;
}

CycloMatrix CycloMatrix::power(unsigned e) const
{
    if (rows_ != cols_)
        throw MismatchError("power of a non-square matrix");
    CycloMatrix r = identity(rows_, p_);
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

CycloMatrix CycloMatrix::submatrix(std::span<const std::size_t> rs, std::span<const std::size_t> cs) const
{
    CycloMatrix s(rs.size(), cs.size(), p_);
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) {
            auto src = entry(rs[i], cs[j]);
            std::copy(src.begin(), src.end(), s.entry(i, j).begin());
        }
    return s;
}

CycloMatrix CycloMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw PreconditionError("submatrix out of range");
    CycloMatrix s(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            auto src = entry(r0 + i, c0 + j);
            std::copy(src.begin(), src.end(), s.entry(i, j).begin());
        }
    return s;
}

void CycloMatrix::set_block(std::size_t r0, std::size_t c0, const CycloMatrix& b)
{
    require_same(p_, b.p_);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw PreconditionError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            auto src = b.entry(i, j);
            std::copy(src.begin(), src.end(), entry(r0 + i, c0 + j).begin());
        }
}

std::string CycloMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",\n [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << at(r, c).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

CycloMatrix mat_mul(const CycloMatrix& a, const CycloMatrix& b) { return a * b; }
CycloMatrix mat_add(const CycloMatrix& a, const CycloMatrix& b) { return a + b; }
CycloMatrix mat_scale(const CycloMatrix& a, const CycloScalar& s) { return a * s; }
CycloMatrix conj_transpose(const CycloMatrix& a) { return a.conj_transpose(); }
CycloScalar trace(const CycloMatrix& a) { return a.trace(); }
CycloMatrix identity(std::size_t n, unsigned p) { return CycloMatrix::identity(n, p); }
CycloMatrix all_ones(std::size_t n, unsigned p) { return CycloMatrix::all_ones(n, p); }
CycloMatrix shift_matrix(unsigned p) { return CycloMatrix::shift(p, p); }

CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b)
{
    require_same(a.prime(), b.prime());
    const unsigned p = a.prime();
    CycloMatrix k(a.rows() * b.rows(), a.cols() * b.cols(), p);
    std::vector<Rational> out(p - 1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.entry_is_zero(i, j))
                continue;
            auto x = a.entry(i, j);
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    if (b.entry_is_zero(r, c))
                        continue;
                    mul_into(out.data(), x.data(), b.entry(r, c).data(), p);
                    auto dst = k.entry(i * b.rows() + r, j * b.cols() + c);
                    std::copy(out.begin(), out.end(), dst.begin());
                }
        }
    return k;
}

CycloScalar inner_product(const CycloMatrix& a, const CycloMatrix& b)
{
    require_dims(a, b);
    const unsigned p = a.prime();
    CycloScalar s(p);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a.entry_is_zero(r, c) && !b.entry_is_zero(r, c))
                s += a.at(r, c) * b.at(r, c).conj();
    return s;
}

// ---------------------------------------------------------------- spans

LinearSpan::LinearSpan(std::size_t length, unsigned p) : len_(length), p_(p)
{
    require_prime(p);
}

void LinearSpan::reduce(std::vector<Rational>& v) const
{
    const unsigned w = p_ - 1;
    std::vector<Rational> f(w), prod(w);
    for (const Row& row : rows_) {
        const Rational* pv = v.data() + row.pivot * w;
        if (span_zero(pv, w))
            continue;
        std::copy(pv, pv + w, f.begin());
        for (std::size_t e : row.support) {
            mul_into(prod.data(), f.data(), row.coeffs.data() + e * w, p_);
            Rational* dst = v.data() + e * w;
            for (unsigned t = 0; t < w; ++t)
                if (sgn(prod[t]) != 0)
                    dst[t] -= prod[t];
        }
    }
}

bool LinearSpan::insert(const CycloMatrix& m)
{
    require_same(p_, m.prime());
    if (m.rows() * m.cols() != len_)
        throw MismatchError("span vector length mismatch");
    return insert(m.data());
}

bool LinearSpan::insert(std::vector<Rational> v)
{
    const unsigned w = p_ - 1;
    if (v.size() != len_ * w)
        throw MismatchError("span vector length mismatch");
    reduce(v);
    std::size_t pivot = len_;
    for (std::size_t e = 0; e < len_; ++e)
        if (!span_zero(v.data() + e * w, w)) {
            pivot = e;
            break;
        }
    if (pivot == len_)
        return false;
    CycloScalar lead(p_, std::vector<Rational>(v.begin() + pivot * w, v.begin() + (pivot + 1) * w));
    CycloScalar inv = lead.inverse();
    Row row{pivot, {}, std::move(v)};
    std::vector<Rational> out(w);
    for (std::size_t e = pivot; e < len_; ++e) {
        Rational* x = row.coeffs.data() + e * w;
        if (span_zero(x, w))
            continue;
        mul_into(out.data(), x, inv.coeffs().data(), p_);
        for (unsigned t = 0; t < w; ++t)
            x[t].swap(out[t]);
        row.support.push_back(e);
    }
    rows_.push_back(std::move(row));
    return true;
}

bool LinearSpan::contains(const CycloMatrix& m) const
{
    std::vector<Rational> v = m.data();
    if (v.size() != len_ * (p_ - 1))
        throw MismatchError("span vector length mismatch");
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::size_t span_dimension(std::span<const CycloMatrix> mats)
{
    if (mats.empty())
        throw PreconditionError("span of an empty list");
    LinearSpan span(mats[0].rows() * mats[0].cols(), mats[0].prime());
    for (const auto& m : mats)
        span.insert(m);
    return span.dimension();
}

Closure algebra_closure(std::span<const CycloMatrix> generators)
{
    if (generators.empty())
        throw PreconditionError("closure of an empty generating set");
    const auto& g0 = generators[0];
    if (g0.rows() != g0.cols())
        throw MismatchError("closure generators must be square");
    LinearSpan span(g0.rows() * g0.cols(), g0.prime());
    Closure out;
    for (const auto& g : generators)
        if (span.insert(g))
            out.basis.push_back(g);
    for (std::size_t i = 0; i < out.basis.size(); ++i)
        for (const auto& g : generators) {
            CycloMatrix w = out.basis[i] * g;
            if (span.insert(w))
                out.basis.push_back(std::move(w));
        }
    out.dimension = out.basis.size();
    return out;
}

std::size_t closure_dimension(std::span<const CycloMatrix> generators)
{
    return algebra_closure(generators).dimension;
}

} // namespace camina
