#pragma once

#include "camina/cyclotomic.hpp"
#include "camina/group.hpp"
#include "camina/scheme.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace camina {

inline constexpr std::size_t kNoClass = static_cast<std::size_t>(-1);

/* Location of a class relative to Z(G) <= G'. */
enum class ClassKind { Central, Middle, Outer, Other };

std::string to_string(ClassKind k);

struct CentralGenerators {
    unsigned p = 0;
    /* independent generators of Z(G) */
    std::vector<Element> z;
    /* representatives of independent generators of G'/Z(G) (class 3 only) */
    std::vector<Element> g;
};

/* Greedy scan in index order. Throws ScopeError when Z(G) (or G'/Z(G) in
   class 3) is not elementary abelian. */
CentralGenerators central_generators(const FiniteGroup& g);
/* Scan candidates in order, keeping those outside <base, kept>, until the
   generated subgroup has order target. */
std::vector<Element> greedy_generators(const FiniteGroup& g, const std::vector<Element>& candidates,
                                       const std::vector<Element>& base, std::size_t target);
/* Throws PreconditionError unless gens is a valid independent choice. */
void validate_generators(const FiniteGroup& g, const CentralGenerators& gens);

/* Element with exponent vector m at index m_1 + p m_2 + ..., computed as
   g_r^{m_r} ... g_2^{m_2} g_1^{m_1}. */
std::vector<Element> exponent_sequence(const FiniteGroup& g, std::span<const Element> gens, unsigned p);
/* exponent vector of an index */
std::vector<unsigned> exponent_digits(std::size_t index, unsigned p, std::size_t length);
std::size_t exponent_index(std::span<const unsigned> digits, unsigned p);
std::size_t int_pow(std::size_t base, unsigned e);

/* Classes of a group (or of a subset closed under the relevant conjugation)
   with a fixed member order. Shared by real groups and the synthetic harness. */
struct ClassLayout {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<std::vector<Element>> classes;
    /* element -> class index, kNoClass outside the layout */
    std::vector<std::size_t> class_of;
    std::vector<ClassKind> kind;
    unsigned p = 2;
    unsigned k = 0;
    unsigned n = 0;
    unsigned nil_class = 0;
    std::vector<Element> z_gens;
    std::vector<Element> g_gens;
    /* Z(G) in exponent order */
    std::vector<Element> sigma;
    /* G'/Z(G) representatives in exponent order (class 3) */
    std::vector<Element> upsilon;

    std::size_t size() const noexcept { return classes.size(); }
    /* (x,y) entry 1 iff y x^-1 in C_c, rows ordered by rows, columns by cols */
    CycloMatrix relation_block(std::size_t c, std::span<const Element> rows, std::span<const Element> cols) const;
    /* C_i,C_j block of A_c */
    CycloMatrix block(std::size_t c, std::size_t i, std::size_t j) const;
    /* membership mask of the product set C_i C_c */
    std::vector<char> product_mask(std::size_t i, std::size_t c) const;
    bool subset_of(std::size_t j, const std::vector<char>& mask) const;
};

/* The C_i,C_i blocks of the central-class and derived-class adjacency
   matrices on one class, indexed by exponent vectors. */
struct ClassBlocks {
    std::size_t class_index = 0;
    /* true for a class outside G' in a class-3 group */
    bool outer = false;
    unsigned p = 2;
    unsigned k = 0;
    unsigned n = 0;
    std::vector<CycloMatrix> central;
    std::vector<std::size_t> central_class;
    /* derived[0] is empty */
    std::vector<CycloMatrix> derived;
    std::vector<std::size_t> derived_class;
    std::vector<std::size_t> derived_class_size;

    std::size_t size() const { return central.empty() ? 0 : central[0].rows(); }
};

ClassBlocks class_blocks_on(const ClassLayout& layout, std::size_t class_index, std::span<const Element> members,
                            bool outer);

struct ElementOrdering {
    /* position -> element */
    std::vector<Element> order;
    /* element -> position */
    std::vector<std::size_t> position;
    std::vector<std::size_t> class_offset;
    std::optional<CentralGenerators> generators;
};

class TerwilligerContext {
public:
    static TerwilligerContext build(const GroupScheme& s, std::optional<CentralGenerators> gens = std::nullopt);

    const GroupScheme& scheme() const noexcept { return *scheme_; }
    const FiniteGroup& group() const noexcept { return scheme_->group; }
    const CaminaProfile& profile() const noexcept { return profile_; }
    const ElementOrdering& ordering() const noexcept { return ordering_; }
    const ClassLayout& layout() const noexcept { return layout_; }

    unsigned prime() const noexcept { return layout_.p; }
    std::size_t size() const noexcept { return group().order(); }
    std::size_t class_count() const noexcept { return layout_.size(); }
    std::size_t class_size(std::size_t i) const { return layout_.classes.at(i).size(); }
    std::size_t class_offset(std::size_t i) const { return ordering_.class_offset.at(i); }
    ClassKind kind(std::size_t i) const { return layout_.kind.at(i); }
    /* nonabelian Camina p-group of class 2 or 3 with generators */
    bool camina_scope() const noexcept { return camina_scope_; }
    unsigned nil_class() const noexcept { return layout_.nil_class; }
    unsigned k() const noexcept { return layout_.k; }
    unsigned n_param() const noexcept { return layout_.n; }

    /* class index of relation(position r, position c) */
    std::uint32_t rel(std::size_t r, std::size_t c) const { return relpos_[r * size() + c]; }
    /* column positions of the ones in row r of A_i */
    const std::vector<std::uint32_t>& adjacency_row(std::size_t i, std::size_t r) const { return adj_[i][r]; }

    CycloMatrix adjacency(std::size_t i) const;
    CycloMatrix dual_idempotent(std::size_t i) const;
    CycloMatrix block(const CycloMatrix& m, std::size_t i, std::size_t j) const;
    /* block of A_c without materializing A_c */
    CycloMatrix adjacency_block(std::size_t c, std::size_t i, std::size_t j) const;
    /* n x n matrix with b placed at the C_i,C_i block */
    CycloMatrix embed(std::size_t i, const CycloMatrix& b) const;
    /* re-index rows/cols from positions to element indices */
    CycloMatrix to_element_indexing(const CycloMatrix& m) const;

    ClassBlocks class_blocks(std::size_t i) const;
    /* class of the central element with exponent vector index idx */
    std::size_t central_class(std::size_t idx) const;
    /* class of the G'/Z(G) coset with exponent index idx (class 3) */
    std::size_t derived_class(std::size_t idx) const;

private:
    std::shared_ptr<const GroupScheme> scheme_;
    CaminaProfile profile_;
    ElementOrdering ordering_;
    ClassLayout layout_;
    bool camina_scope_ = false;
    std::vector<std::uint32_t> relpos_;
    std::vector<std::vector<std::vector<std::uint32_t>>> adj_;
};

/* Count of nonzero intersection numbers; requires almost commutativity. */
std::size_t dim_by_triples(const TerwilligerContext& ctx);

/* Algebra closure of {A_j} and {E_i*}, computed separately on each block
   space E_i* T E_h*. */
struct BlockClosure {
    std::size_t dimension = 0;
    /* basis[i][h] spans E_i* T E_h* (as |C_i| x |C_h| blocks) */
    std::vector<std::vector<std::vector<CycloMatrix>>> basis;
};

BlockClosure block_closure(const TerwilligerContext& ctx);
std::size_t dim_by_closure(const TerwilligerContext& ctx);
/* embedded n x n basis matrices */
std::vector<CycloMatrix> closure_basis(const TerwilligerContext& ctx, const BlockClosure& c);

std::size_t class2_dimension_formula(unsigned p, unsigned n, unsigned k);
std::size_t class3_dimension_formula(unsigned p, unsigned n, unsigned k);

struct CheckEntry {
    std::string check;
    std::string case_label;
    std::vector<std::size_t> indices;
    bool pass = false;
};

struct VerificationReport {
    std::vector<CheckEntry> entries;

    void add(std::string check, std::string case_label, std::vector<std::size_t> indices, bool pass);
    void append(const VerificationReport& other);
    bool all_pass() const;
    std::size_t failures() const;
    /* check -> (passed, total) */
    std::map<std::string, std::pair<std::size_t, std::size_t>> summary() const;
};

VerificationReport verify_block_lemmas(const TerwilligerContext& ctx);
VerificationReport verify_power_product_lemmas(const TerwilligerContext& ctx);
VerificationReport verify_kronecker_decompositions(const TerwilligerContext& ctx);

/* Building blocks shared with the synthetic harness. */
void check_outer_blocks_constant(const ClassLayout& layout, VerificationReport& r);
void check_central_blocks(const ClassLayout& layout, VerificationReport& r);
void check_derived_blocks(const ClassLayout& layout, VerificationReport& r);
void check_inner_blocks_constant(const ClassLayout& layout, VerificationReport& r);
void check_outer_row_counts(const ClassBlocks& b, VerificationReport& r);
void check_central_power_laws(const ClassBlocks& b, VerificationReport& r);
void check_derived_power_laws(const ClassBlocks& b, VerificationReport& r);
void check_kronecker_forms(const ClassBlocks& b, VerificationReport& r);

/* kron of p x p factors: identity everywhere except P at 1-based slot `slot` */
CycloMatrix shift_kronecker(unsigned p, unsigned factors, unsigned slot);

} // namespace camina
