#include "camina/cyclotomic.hpp"
#include "camina/error.hpp"
#include "camina/group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace camina {

namespace {

constexpr std::size_t kBuiltinOrderCap = 4096;

FiniteGroup from_operation(std::size_t n, const std::function<Element(Element, Element)>& op,
                           std::vector<std::string> labels = {})
{
    if (n > kBuiltinOrderCap)
        throw PreconditionError("builtin group order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kBuiltinOrderCap));
    std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            rows[a][b] = op(a, b);
    return FiniteGroup::from_table(rows, std::move(labels), Validation::Trusted);
}

void require_prime_param(unsigned p)
{
    if (!is_prime(p))
        throw PreconditionError("parameter p must be prime, got " + std::to_string(p));
}

/* Arithmetic in F_{p^r}, elements as base-p digit vectors packed into integers. */
class FiniteField {
public:
    FiniteField(unsigned p, unsigned r) : p_(p), r_(r)
    {
        q_ = 1;
        for (unsigned i = 0; i < r; ++i)
            q_ *= p;
        modulus_ = find_irreducible();
        mul_.assign(q_ * q_, 0);
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                mul_[a * q_ + b] = pack(poly_mod(poly_mul(unpack(a), unpack(b)), modulus_));
    }

    unsigned size() const { return q_; }
    unsigned add(unsigned a, unsigned b) const
    {
        unsigned out = 0, scale = 1;
        for (unsigned i = 0; i < r_; ++i) {
            out += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return out;
    }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }

private:
    using Poly = std::vector<unsigned>;

    Poly unpack(unsigned a) const
    {
        Poly f(r_);
        for (unsigned i = 0; i < r_; ++i) {
            f[i] = a % p_;
            a /= p_;
        }
        return f;
    }
    unsigned pack(const Poly& f) const
    {
        unsigned out = 0, scale = 1;
        for (unsigned i = 0; i < r_; ++i) {
            out += (i < f.size() ? f[i] : 0) * scale;
            scale *= p_;
        }
        return out;
    }
    Poly poly_mul(const Poly& a, const Poly& b) const
    {
        Poly c(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        return c;
    }
    /* remainder modulo a monic polynomial */
    Poly poly_mod(Poly a, const Poly& m) const
    {
        const std::size_t dm = m.size() - 1;
        for (std::size_t i = a.size(); i-- > dm;) {
            unsigned c = a[i] % p_;
            if (c == 0)
                continue;
            for (std::size_t j = 0; j <= dm; ++j)
                a[i - dm + j] = (a[i - dm + j] + (p_ - c) * m[j]) % p_;
        }
        a.resize(dm);
        return a;
    }
    bool divides(const Poly& d, const Poly& f) const
    {
        Poly r = poly_mod(f, d);
        for (unsigned c : r)
            if (c)
                return false;
        return true;
    }
    Poly find_irreducible() const
    {
        if (r_ == 1)
            return {0, 1};
        unsigned count = q_;
        for (unsigned lower = 0; lower < count; ++lower) {
            Poly f = unpack(lower);
            f.push_back(1);
            bool irreducible = true;
            for (unsigned deg = 1; deg * 2 <= r_ && irreducible; ++deg) {
                unsigned span = 1;
                for (unsigned i = 0; i < deg; ++i)
                    span *= p_;
                for (unsigned low = 0; low < span && irreducible; ++low) {
                    Poly d(deg + 1);
                    unsigned v = low;
                    for (unsigned i = 0; i < deg; ++i) {
                        d[i] = v % p_;
                        v /= p_;
                    }
                    d[deg] = 1;
                    if (divides(d, f))
                        irreducible = false;
                }
            }
            if (irreducible)
                return f;
        }
        throw InvariantError("no irreducible polynomial found");
    }

    unsigned p_, r_, q_;
    Poly modulus_;
    std::vector<unsigned> mul_;
};

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

std::vector<std::string> split_args(const std::string& s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
            continue;
        }
        cur.push_back(c);
    }
    if (!cur.empty() || !out.empty())
        out.push_back(cur);
    return out;
}

unsigned parse_uint(const std::string& s, const std::string& spec)
{
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ValidationError("invalid integer parameter '" + s + "' in builtin '" + spec + "'");
    return static_cast<unsigned>(std::stoul(s));
}

} // namespace

FiniteGroup cyclic_group(unsigned m)
{
    if (m < 1)
        throw PreconditionError("cyclic(m) requires m >= 1");
    return from_operation(m, [m](Element a, Element b) { return (a + b) % m; });
}

FiniteGroup elementary_abelian_group(unsigned p, unsigned r)
{
    require_prime_param(p);
    if (r < 1)
        throw PreconditionError("elementary_abelian(p,r) requires r >= 1");
    std::size_t n = 1;
    for (unsigned i = 0; i < r; ++i) {
        n *= p;
        if (n > kBuiltinOrderCap)
            throw PreconditionError("builtin group order exceeds cap");
    }
    return from_operation(n, [p, r](Element a, Element b) {
        Element out = 0, scale = 1;
        for (unsigned i = 0; i < r; ++i) {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return out;
    });
}

FiniteGroup dihedral_group(unsigned order)
{
    if (order < 2 || order % 2 != 0)
        throw PreconditionError("dihedral(2m) requires an even order >= 2");
    const unsigned m = order / 2;
    std::vector<std::string> labels(order);
    for (unsigned j = 0; j < 2; ++j)
        for (unsigned i = 0; i < m; ++i) {
            std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
            std::string s = j ? "s" : "";
            labels[i + m * j] = (r + s).empty() ? "1" : r + s;
        }
    return from_operation(
        order,
        [m](Element x, Element y) {
            unsigned a = x % m, b = x / m, c = y % m, d = y / m;
            unsigned rot = b ? (a + m - c) % m : (a + c) % m;
            return static_cast<Element>(rot + m * ((b + d) % 2));
        },
        std::move(labels));
}

FiniteGroup quaternion_group()
{
    /* a^i b^j with a = i, b = j, b a = a^-1 b, b^2 = a^2 */
    return from_operation(
        8,
        [](Element x, Element y) {
            unsigned i = x % 4, j = x / 4, k = y % 4, l = y / 4;
            unsigned e = j ? (i + 4 - k) % 4 : (i + k) % 4;
            unsigned f = j + l;
            if (f == 2) {
                e = (e + 2) % 4;
                f = 0;
            }
            return static_cast<Element>(e + 4 * f);
        },
        {"1", "i", "-1", "-i", "j", "k", "-j", "-k"});
}

FiniteGroup heisenberg_group(unsigned p, unsigned r)
{
    require_prime_param(p);
    if (r < 1)
        throw PreconditionError("heisenberg(p,r) requires r >= 1");
    std::size_t q = 1;
    for (unsigned i = 0; i < r; ++i)
        q *= p;
    if (q * q * q > kBuiltinOrderCap)
        throw PreconditionError("builtin group order exceeds cap");
    FiniteField f(p, r);
    const auto qq = static_cast<unsigned>(q);
    return from_operation(q * q * q, [&f, qq](Element x, Element y) {
        unsigned a = x % qq, b = (x / qq) % qq, c = x / (qq * qq);
        unsigned a2 = y % qq, b2 = (y / qq) % qq, c2 = y / (qq * qq);
        unsigned na = f.add(a, a2);
        unsigned nb = f.add(b, b2);
        unsigned nc = f.add(f.add(c, c2), f.mul(a, b2));
        return static_cast<Element>(na + qq * nb + qq * qq * nc);
    });
}

FiniteGroup extraspecial_exp_p_group(unsigned p)
{
    require_prime_param(p);
    if (p == 2)
        throw PreconditionError("extraspecial_exp_p(p) requires an odd prime");
    return heisenberg_group(p, 1);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const auto na = static_cast<Element>(a.order());
    return from_operation(a.order() * b.order(), [&a, &b, na](Element x, Element y) {
        return static_cast<Element>(a.mul(x % na, y % na) + na * b.mul(x / na, y / na));
    });
}

FiniteGroup make_builtin(std::string_view spec_view)
{
    const std::string spec = strip(spec_view);
    std::string name = spec;
    std::vector<std::string> args;
    auto open = spec.find('(');
    if (open != std::string::npos) {
        if (spec.back() != ')')
            throw ValidationError("malformed builtin spec '" + spec + "'");
        name = spec.substr(0, open);
        args = split_args(spec.substr(open + 1, spec.size() - open - 2));
    } else {
        for (const char* fam : {"cyclic", "dihedral"}) {
            std::string f = fam;
            if (name.size() > f.size() && name.compare(0, f.size(), f) == 0 &&
                std::isdigit(static_cast<unsigned char>(name[f.size()]))) {
                args = {name.substr(f.size())};
                name = f;
            }
        }
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw ValidationError("builtin '" + name + "' expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "cyclic") {
        want(1);
        return cyclic_group(parse_uint(args[0], spec));
    }
    if (name == "elementary_abelian") {
        want(2);
        return elementary_abelian_group(parse_uint(args[0], spec), parse_uint(args[1], spec));
    }
    if (name == "dihedral") {
        want(1);
        return dihedral_group(parse_uint(args[0], spec));
    }
    if (name == "quaternion8" || name == "quaternion") {
        if (!args.empty() && !(args.size() == 1 && args[0] == "8"))
            throw ValidationError("quaternion8 takes no parameters");
        return quaternion_group();
    }
    if (name == "extraspecial_exp_p") {
        want(1);
        return extraspecial_exp_p_group(parse_uint(args[0], spec));
    }
    if (name == "heisenberg") {
        want(2);
        return heisenberg_group(parse_uint(args[0], spec), parse_uint(args[1], spec));
    }
    if (name == "direct_product") {
        want(2);
        FiniteGroup a = make_builtin(args[0]);
        FiniteGroup b = make_builtin(args[1]);
        if (a.order() * b.order() > kBuiltinOrderCap)
            throw PreconditionError("builtin group order exceeds cap");
        return direct_product(a, b);
    }
    throw ValidationError("unknown builtin group '" + name + "'");
}

} // namespace camina
