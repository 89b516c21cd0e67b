#pragma once

#include "camina/terwilliger.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace camina {

enum class Family { W, X, Y };

std::string to_string(Family f);

struct IdempotentLabel {
    Family family = Family::W;
    std::size_t class_index = 0;
    /* length k for W and X, length n for Y */
    std::vector<unsigned> alpha;

    std::string to_string() const;
    friend bool operator==(const IdempotentLabel&, const IdempotentLabel&) = default;
};

/* An idempotent supported on a single C_i,C_i block. */
struct Idempotent {
    IdempotentLabel label;
    CycloMatrix block;
};

/* (1/p^k) sum_a zeta^{alpha.a} prod_j B_j^{a_j} over the central-class blocks.
   W on inner-type classes, X on class-3 outer classes. */
CycloMatrix w_block(const ClassBlocks& b, std::span<const unsigned> alpha);
/* (1/p^{n+k}) (sum of central blocks + sum_{a != 0} p^k prod_j zeta^{g_j a_j} p^{-a_j k} D_j^{a_j}) */
CycloMatrix y_block(const ClassBlocks& b, std::span<const unsigned> gamma);

/* Full n x n matrices; throw ScopeError on a wrong family/class pairing. */
CycloMatrix build_W(const TerwilligerContext& ctx, std::size_t i, std::span<const unsigned> alpha);
CycloMatrix build_X(const TerwilligerContext& ctx, std::size_t i, std::span<const unsigned> beta);
CycloMatrix build_Y(const TerwilligerContext& ctx, std::size_t i, std::span<const unsigned> gamma);

/* Family(ies) that apply to class i, empty when none. */
std::vector<Family> families_for(const TerwilligerContext& ctx, std::size_t i);

/* Non-primary idempotents on one block (all nonzero labels). */
std::vector<Idempotent> block_inventory(const ClassBlocks& b);
/* Whole non-primary inventory, classes ascending, labels in exponent order. */
std::vector<Idempotent> inventory(const TerwilligerContext& ctx);
/* Number of non-primary idempotents the decomposition theorem predicts. */
std::size_t expected_inventory_size(const TerwilligerContext& ctx);

CycloMatrix embed(const TerwilligerContext& ctx, const Idempotent& e);

/* identity minus the inventory; throws PreconditionError when the inventory
   is incomplete */
CycloMatrix primary_idempotent(const TerwilligerContext& ctx, const std::vector<Idempotent>& inv);

struct CentralityResult {
    bool central = true;
    /* first generator that fails to commute: "A" or "E*", with its class */
    std::string generator;
    std::size_t index = 0;
};

CentralityResult verify_centrality(const TerwilligerContext& ctx, const CycloMatrix& m);
/* dim span{M b M : b in basis} */
std::size_t ideal_dimension(const CycloMatrix& m, const std::vector<CycloMatrix>& basis);
bool verify_primitivity(const CycloMatrix& m, const std::vector<CycloMatrix>& basis);

/* Pairwise product and inner-product orthogonality plus orthogonality to the
   all-ones block of the supporting class. Pairs on distinct classes have
   disjoint support and are not compared. */
VerificationReport verify_orthogonality(const std::vector<Idempotent>& inv);

/* Checks that need only the block family of one class: idempotency, partition
   of unity, zero-label normalization, traces, orthogonality inside the block. */
void check_block_idempotents(const ClassBlocks& b, const std::vector<Idempotent>& members, VerificationReport& r);

enum class ClosureMode { Auto, Always, Never };

struct WedderburnOptions {
    ClosureMode closure = ClosureMode::Auto;
    /* Auto runs the closure oracle up to this group order */
    std::size_t closure_order_limit = 256;
};

struct WedderburnReport {
    std::size_t dim_T = 0;
    std::size_t dim_formula = 0;
    std::optional<std::size_t> dim_closure;
    std::size_t dim_primary = 0;
    std::size_t one_dim_ideal_count = 0;
    std::size_t expected_count = 0;
    std::size_t class_count = 0;
    std::vector<IdempotentLabel> idempotent_inventory;
    std::map<std::string, bool> checks;
    VerificationReport details;

    bool all_pass() const;
};

WedderburnReport wedderburn_report(const TerwilligerContext& ctx, const WedderburnOptions& opt = {});
/* variant reusing an inventory built by the caller */
WedderburnReport wedderburn_report(const TerwilligerContext& ctx, const std::vector<Idempotent>& inv,
                                   const WedderburnOptions& opt = {});

/* perm[a] = b when galois_t(inv[a]) == inv[b]; nullopt if some image is not in
   the inventory */
std::optional<std::vector<std::size_t>> galois_permutation(const std::vector<Idempotent>& inv, unsigned t);

/* Inventory as full matrices indexed by element number. */
std::vector<CycloMatrix> element_indexed_inventory(const TerwilligerContext& ctx, const std::vector<Idempotent>& inv);
/* true when both lists hold the same matrices up to order */
bool same_matrix_set(const std::vector<CycloMatrix>& a, const std::vector<CycloMatrix>& b);

/* Model of the structure a class-3 Camina p-group induces on G' and on one
   outer class, built from an abelian group H with |Z| = p^k, |H/Z| = p^n. */
struct SyntheticClass3 {
    unsigned p = 2;
    unsigned n = 1;
    unsigned k = 1;
    bool twisted = false;
    std::shared_ptr<const FiniteGroup> h;
    ClassLayout layout;
    /* blocks on one hypothetical outer class */
    ClassBlocks outer;
};

/* Throws PreconditionError unless p is prime, n,k >= 1 and p^{n+k} <= 4096.
   twisted makes H of exponent p^2 (u_j^p = z_{j mod k}). */
SyntheticClass3 synth_class3_context(unsigned p, unsigned n, unsigned k, bool twisted = false);

struct SyntheticReport {
    VerificationReport lemmas;
    VerificationReport idempotents;
    std::size_t middle_classes = 0;
    std::size_t x_count = 0;
    std::size_t y_count = 0;
    std::size_t w_count = 0;

    bool all_pass() const { return lemmas.all_pass() && idempotents.all_pass(); }
};

SyntheticReport synth_class3_report(const SyntheticClass3& s);

} // namespace camina
