#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace camina {

using Element = std::uint32_t;

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr std::size_t kExhaustiveAssociativityLimit = 512;
inline constexpr std::size_t kSampledAssociativityTriples = 1000000;

enum class Validation { Full, Trusted };

/* Group given by its multiplication table; element 0 is the identity. */
class FiniteGroup {
public:
    FiniteGroup() = default;

    /* Validates, then renumbers so the identity is 0. Trusted skips the
       associativity scan. */
    static FiniteGroup from_table(const std::vector<std::vector<Element>>& rows,
                                  std::vector<std::string> labels = {},
                                  Validation mode = Validation::Full,
                                  std::uint64_t seed = kDefaultSeed);

    std::size_t order() const noexcept { return n_; }
    Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Element inv(Element a) const { return inv_[a]; }
    static constexpr Element identity() noexcept { return 0; }

    /* g x g^-1 */
    Element conjugate(Element x, Element g) const { return mul(mul(g, x), inv(g)); }
    /* a^-1 b^-1 a b */
    Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    Element power(Element x, std::uint64_t e) const;
    std::size_t element_order(Element x) const;
    bool is_abelian() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    std::string label(Element x) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::span<const Element> table() const noexcept { return table_; }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
    {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Element> table_;
    std::vector<Element> inv_;
    std::vector<std::string> labels_;
};

FiniteGroup load_cayley_table(std::istream& in, std::uint64_t seed = kDefaultSeed);
FiniteGroup load_cayley_table_text(std::string_view text, std::uint64_t seed = kDefaultSeed);
FiniteGroup load_cayley_table_file(const std::string& path, std::uint64_t seed = kDefaultSeed);
std::string write_cayley_table(const FiniteGroup& g);

/* Builtin families: cyclic(m), elementary_abelian(p,r), dihedral(2m),
   quaternion8, extraspecial_exp_p(p), heisenberg(p,r), direct_product(G,H). */
FiniteGroup make_builtin(std::string_view spec);

FiniteGroup cyclic_group(unsigned m);
FiniteGroup elementary_abelian_group(unsigned p, unsigned r);
FiniteGroup dihedral_group(unsigned order);
FiniteGroup quaternion_group();
FiniteGroup extraspecial_exp_p_group(unsigned p);
FiniteGroup heisenberg_group(unsigned p, unsigned r);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

struct Subgroup {
    std::vector<Element> members;
    bool is_normal = false;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Element x) const;
    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

struct ConjugacyData {
    std::vector<std::vector<Element>> classes;
    std::vector<std::size_t> class_of;

    std::size_t size() const noexcept { return classes.size(); }
};

/* Class 0 = {identity}; others ordered by (size, smallest member). */
ConjugacyData conjugacy_classes(const FiniteGroup& g);

/* Validates closure; fills normality. */
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> members);
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
/* [H, K] generated by h^-1 k^-1 h k. */
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
/* G, gamma_2, gamma_3, ... until it stabilizes. */
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
/* Class 1 for abelian groups, 0 for the trivial group, nullopt if not nilpotent. */
std::optional<unsigned> nilpotency_class(const FiniteGroup& g);
std::size_t centralizer_order(const FiniteGroup& g, Element x);

/* (p, e) with n = p^e, e >= 1. */
std::optional<std::pair<unsigned, unsigned>> prime_power(std::size_t n);

struct Quotient {
    FiniteGroup group;
    /* element of G -> coset index */
    std::vector<Element> coset_of;
    /* coset index -> smallest member */
    std::vector<Element> representative;
};

Quotient quotient(const FiniteGroup& g, const Subgroup& n);

/* Normal subgroups of g contained in h (h normal). */
std::vector<Subgroup> normal_subgroups_within(const FiniteGroup& g, const Subgroup& h);

bool is_camina(const FiniteGroup& g);

struct CaminaPairResult {
    bool decision = false;          /* fused classes of G/K lift to single classes */
    bool definition = false;        /* g conjugate to all of gK for g outside K */
    bool centralizer_orders = false;/* |C_G(x)| = |C_{G/K}(xK)| outside K */
    bool class_products = false;    /* C_i C_j = C_j for C_i in K, C_j outside */
    bool agree() const
    {
        return decision == definition && decision == centralizer_orders && decision == class_products;
    }
};

CaminaPairResult is_camina_pair(const FiniteGroup& g, const Subgroup& k);

struct CaminaProfile {
    std::size_t order = 0;
    std::size_t class_count = 0;
    bool is_abelian = false;
    bool is_camina = false;
    bool is_p_group = false;
    unsigned p = 0;
    /* 1 = abelian; nullopt = not nilpotent */
    std::optional<unsigned> nilpotency_class;
    std::size_t center_order = 0;
    std::size_t derived_order = 0;
    unsigned k = 0;
    unsigned n_param = 0;
    bool center_elementary_abelian = false;
    bool center_in_derived = false;
    bool derived_over_center_elementary = false;
    bool is_nonabelian_camina_p_group = false;
    bool shapes_checked = false;
    bool outer_shape = false;
    bool middle_shape = false;
    bool inner_shape = false;
    bool n_param_valid = false;
};

CaminaProfile camina_profile(const FiniteGroup& g);

enum class AcFamily { None, Abelian, FrobeniusAffine, FrobeniusQ8, CaminaPGroup };

std::string to_string(AcFamily f);

/* Membership in the four families of almost-commutative group schemes. */
AcFamily classification_family(const FiniteGroup& g);

} // namespace camina
