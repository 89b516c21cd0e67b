#include "camina/scheme.hpp"

#include "camina/error.hpp"

#include <algorithm>

namespace camina {

std::size_t GroupScheme::inverse_class(std::size_t i) const
{
    return conj.class_of[group.inv(conj.classes.at(i).front())];
}

GroupScheme build_scheme(const FiniteGroup& g)
{
    GroupScheme s;
    s.group = g;
    s.conj = conjugacy_classes(g);
    s.d = s.conj.size() - 1;
    const std::size_t n = g.order();
    s.relation.assign(n * n, 0);
    for (Element x = 0; x < n; ++x) {
        Element xi = g.inv(x);
        for (Element y = 0; y < n; ++y)
            s.relation[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint32_t>(s.conj.class_of[g.mul(y, xi)]);
    }
    std::vector<std::size_t> count(s.class_count());
    for (Element x = 0; x < n; ++x) {
        if (s.rel(x, x) != 0)
            throw InvariantError("relation(x,x) must be the identity class");
        std::fill(count.begin(), count.end(), 0);
        for (Element y = 0; y < n; ++y)
            ++count[s.rel(x, y)];
        for (std::size_t i = 0; i < s.class_count(); ++i)
            if (count[i] != s.conj.classes[i].size())
                throw InvariantError("relation row sums disagree with class sizes");
    }
    return s;
}

std::size_t IntersectionTensor::nonzero_triples() const
{
    return static_cast<std::size_t>(std::count_if(v_.begin(), v_.end(), [](std::uint64_t x) { return x != 0; }));
}

IntersectionTensor intersection_numbers(const GroupScheme& s)
{
    const std::size_t m = s.class_count();
    const std::size_t n = s.order();
    IntersectionTensor t(m);
    IntersectionTensor check(m);
    const Element x2 = static_cast<Element>(n - 1);
    for (std::size_t h = 0; h < m; ++h) {
        const auto& ch = s.conj.classes[h];
        /* base pair (e, c) and verification pair (x2, c' x2) */
        const Element x = 0;
        const Element y = ch.front();
        const Element y2 = s.group.mul(ch.back(), x2);
        for (Element z = 0; z < n; ++z) {
            ++t.at(s.rel(x, z), s.rel(z, y), h);
            ++check.at(s.rel(x2, z), s.rel(z, y2), h);
        }
    }
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (t.at(i, j, h) != check.at(i, j, h))
                    throw InvariantError("intersection number depends on the base pair");
    return t;
}

AcResult is_almost_commutative(const IntersectionTensor& t)
{
    const std::size_t m = t.classes();
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (t.at(i, j, h) != t.at(j, i, h))
                    throw InvariantError("scheme is not commutative");
    AcResult r;
    r.almost_commutative = true;
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t i = 0; i < m; ++i) {
            if (h == i)
                continue;
            std::vector<std::size_t> js;
            for (std::size_t j = 0; j < m; ++j)
                if (t.at(i, j, h) != 0)
                    js.push_back(j);
            if (js.size() != 1) {
                r.almost_commutative = false;
                r.certificate = AcCertificate{h, i, std::move(js)};
                return r;
            }
        }
    return r;
}

ClassProduct class_product(const GroupScheme& s, std::size_t i, std::size_t j)
{
    if (i >= s.class_count() || j >= s.class_count())
        throw PreconditionError("class index out of range");
    ClassProduct out;
    for (Element a : s.conj.classes[i])
        for (Element b : s.conj.classes[j])
            ++out.multiplicity[s.conj.class_of[s.group.mul(a, b)]];
    for (const auto& [c, _] : out.multiplicity)
        out.classes.push_back(c);
    return out;
}

} // namespace camina
