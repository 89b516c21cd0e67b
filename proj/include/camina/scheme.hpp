#pragma once

#include "camina/group.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace camina {

/* Relations R_i = {(x,y) : y x^-1 in C_i}. */
struct GroupScheme {
    FiniteGroup group;
    ConjugacyData conj;
    /* n*n, relation(x,y) = class of y x^-1 */
    std::vector<std::uint32_t> relation;
    std::size_t d = 0;

    std::size_t order() const noexcept { return group.order(); }
    std::size_t class_count() const noexcept { return d + 1; }
    std::uint32_t rel(Element x, Element y) const { return relation[static_cast<std::size_t>(x) * order() + y]; }
    /* index of the class C_i^-1 */
    std::size_t inverse_class(std::size_t i) const;
};

GroupScheme build_scheme(const FiniteGroup& g);

class IntersectionTensor {
public:
    IntersectionTensor() = default;
    explicit IntersectionTensor(std::size_t classes) : m_(classes), v_(classes * classes * classes) {}

    std::size_t classes() const noexcept { return m_; }
    /* p_{ij}^h */
    std::uint64_t at(std::size_t i, std::size_t j, std::size_t h) const { return v_[(h * m_ + i) * m_ + j]; }
    std::uint64_t& at(std::size_t i, std::size_t j, std::size_t h) { return v_[(h * m_ + i) * m_ + j]; }
    std::size_t nonzero_triples() const;

private:
    std::size_t m_ = 0;
    std::vector<std::uint64_t> v_;
};

IntersectionTensor intersection_numbers(const GroupScheme& s);

struct AcCertificate {
    std::size_t h = 0;
    std::size_t i = 0;
    std::vector<std::size_t> nonzero_j;
};

struct AcResult {
    bool almost_commutative = false;
    std::optional<AcCertificate> certificate;
};

/* Tanaka's condition: for distinct h, i exactly one j has p_{ij}^h != 0. */
AcResult is_almost_commutative(const IntersectionTensor& t);

struct ClassProduct {
    std::vector<std::size_t> classes;
    /* class -> number of pairs (a, b) with ab in that class */
    std::map<std::size_t, std::uint64_t> multiplicity;
};

ClassProduct class_product(const GroupScheme& s, std::size_t i, std::size_t j);

} // namespace camina
