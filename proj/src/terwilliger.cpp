#include "camina/terwilliger.hpp"

#include "camina/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace camina {

std::string to_string(ClassKind k)
{
    switch (k) {
    case ClassKind::Central: return "central";
    case ClassKind::Middle: return "middle";
    case ClassKind::Outer: return "outer";
    case ClassKind::Other: return "other";
    }
    return "other";
}

std::size_t int_pow(std::size_t base, unsigned e)
{
    std::size_t r = 1;
    while (e--)
        r *= base;
    return r;
}

std::vector<unsigned> exponent_digits(std::size_t index, unsigned p, std::size_t length)
{
    std::vector<unsigned> d(length);
    for (std::size_t i = 0; i < length; ++i) {
        d[i] = static_cast<unsigned>(index % p);
        index /= p;
    }
    return d;
}

std::size_t exponent_index(std::span<const unsigned> digits, unsigned p)
{
    std::size_t idx = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
        idx = idx * p + digits[i];
    return idx;
}

std::vector<Element> exponent_sequence(const FiniteGroup& g, std::span<const Element> gens, unsigned p)
{
    const std::size_t count = int_pow(p, static_cast<unsigned>(gens.size()));
    std::vector<Element> seq(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        auto m = exponent_digits(idx, p, gens.size());
        Element e = 0;
        for (std::size_t j = gens.size(); j-- > 0;)
            e = g.mul(e, g.power(gens[j], m[j]));
        seq[idx] = e;
    }
    return seq;
}

// ---------------------------------------------------------------- generators

std::vector<Element> greedy_generators(const FiniteGroup& g, const std::vector<Element>& candidates,
                                  const std::vector<Element>& base, std::size_t target)
{
    std::vector<Element> chosen;
    std::vector<Element> gens = base;
    Subgroup span = generated_subgroup(g, gens);
    for (Element x : candidates) {
        if (span.size() == target)
            break;
        if (span.contains(x))
            continue;
        chosen.push_back(x);
        gens.push_back(x);
        span = generated_subgroup(g, gens);
    }
    if (span.size() != target)
        throw InvariantError("greedy generator scan did not reach full rank");
    return chosen;
}

namespace {

bool elementary_mod(const FiniteGroup& g, const Subgroup& h, const Subgroup& z, unsigned p)
{
    for (Element a : h.members) {
        if (!z.contains(g.power(a, p)))
            return false;
        for (Element b : h.members)
            if (!z.contains(g.commutator(a, b)))
                return false;
    }
    return true;
}

} // namespace

CentralGenerators central_generators(const FiniteGroup& g)
{
    Subgroup z = center(g);
    if (z.size() == 1)
        throw ScopeError("center is trivial");
    auto pp = prime_power(z.size());
    if (!pp)
        throw ScopeError("center is not a p-group");
    const unsigned p = pp->first;
    Subgroup triv = trivial_subgroup(g);
    if (!elementary_mod(g, z, triv, p))
        throw ScopeError("center is not elementary abelian");
    CentralGenerators out;
    out.p = p;
    std::vector<Element> zc(z.members.begin() + 1, z.members.end());
    out.z = greedy_generators(g, zc, {}, z.size());
    if (nilpotency_class(g).value_or(0) == 3) {
        Subgroup d = derived_subgroup(g);
        if (!elementary_mod(g, d, z, p))
            throw ScopeError("G'/Z(G) is not elementary abelian");
        std::vector<Element> dc;
        for (Element x : d.members)
            if (!z.contains(x))
                dc.push_back(x);
        out.g = greedy_generators(g, dc, z.members, d.size());
    }
    return out;
}

void validate_generators(const FiniteGroup& g, const CentralGenerators& gens)
{
    Subgroup z = center(g);
    if (!is_prime(gens.p) || int_pow(gens.p, static_cast<unsigned>(gens.z.size())) != z.size())
        throw PreconditionError("z-generators do not match the order of the center");
    for (Element x : gens.z)
        if (x >= g.order() || !z.contains(x))
            throw PreconditionError("z-generator is not central");
    if (generated_subgroup(g, gens.z).size() != z.size())
        throw PreconditionError("z-generators do not generate the center");
    if (nilpotency_class(g).value_or(0) == 3) {
        Subgroup d = derived_subgroup(g);
        if (int_pow(gens.p, static_cast<unsigned>(gens.g.size())) * z.size() != d.size())
            throw PreconditionError("g-generators do not match [G':Z(G)]");
        std::vector<Element> all = z.members;
        for (Element x : gens.g) {
            if (x >= g.order() || !d.contains(x) || z.contains(x))
                throw PreconditionError("g-generator must lie in G' outside Z(G)");
            all.push_back(x);
        }
        if (generated_subgroup(g, all).size() != d.size())
            throw PreconditionError("g-generators do not generate G'/Z(G)");
    } else if (!gens.g.empty()) {
        throw PreconditionError("g-generators only apply to class-3 groups");
    }
}

// ---------------------------------------------------------------- layout

CycloMatrix ClassLayout::relation_block(std::size_t c, std::span<const Element> rows, std::span<const Element> cols) const
{
    CycloMatrix b(rows.size(), cols.size(), p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Element xi = group->inv(rows[r]);
        for (std::size_t s = 0; s < cols.size(); ++s)
            if (class_of[group->mul(cols[s], xi)] == c)
                b.entry(r, s)[0] = 1;
    }
    return b;
}

CycloMatrix ClassLayout::block(std::size_t c, std::size_t i, std::size_t j) const
{
    if (c >= size() || i >= size() || j >= size())
        throw PreconditionError("class index out of range");
    return relation_block(c, classes[i], classes[j]);
}

std::vector<char> ClassLayout::product_mask(std::size_t i, std::size_t c) const
{
    std::vector<char> mask(group->order());
    for (Element a : classes.at(i))
        for (Element b : classes.at(c))
            mask[group->mul(a, b)] = 1;
    return mask;
}

bool ClassLayout::subset_of(std::size_t j, const std::vector<char>& mask) const
{
    return std::all_of(classes.at(j).begin(), classes.at(j).end(), [&](Element x) { return mask[x] != 0; });
}

ClassBlocks class_blocks_on(const ClassLayout& layout, std::size_t class_index, std::span<const Element> members,
                            bool outer)
{
    ClassBlocks b;
    b.class_index = class_index;
    b.outer = outer;
    b.p = layout.p;
    b.k = layout.k;
    b.n = outer ? layout.n : 0;
    for (Element z : layout.sigma) {
        std::size_t c = layout.class_of[z];
        b.central_class.push_back(c);
        b.central.push_back(layout.relation_block(c, members, members));
    }
    if (outer) {
        b.derived.emplace_back();
        b.derived_class.push_back(kNoClass);
        b.derived_class_size.push_back(0);
        for (std::size_t s = 1; s < layout.upsilon.size(); ++s) {
            std::size_t c = layout.class_of[layout.upsilon[s]];
            b.derived_class.push_back(c);
            b.derived_class_size.push_back(layout.classes[c].size());
            b.derived.push_back(layout.relation_block(c, members, members));
        }
    }
    return b;
}

// ---------------------------------------------------------------- context

TerwilligerContext TerwilligerContext::build(const GroupScheme& s, std::optional<CentralGenerators> gens)
{
    TerwilligerContext ctx;
    ctx.scheme_ = std::make_shared<GroupScheme>(s);
    const FiniteGroup& g = ctx.scheme_->group;
    const std::size_t n = g.order();
    ctx.profile_ = camina_profile(g);
    const auto& pr = ctx.profile_;
    const unsigned nil = pr.nilpotency_class.value_or(0);

    ClassLayout& L = ctx.layout_;
    L.group = std::shared_ptr<const FiniteGroup>(ctx.scheme_, &ctx.scheme_->group);
    L.nil_class = nil;
    if (pr.is_p_group) {
        L.p = pr.p;
    } else {
        unsigned q = 2;
        while (n > 1 && n % q != 0)
            ++q;
        L.p = q;
    }

    ctx.camina_scope_ = pr.is_nonabelian_camina_p_group && (nil == 2 || nil == 3) && pr.center_elementary_abelian &&
                        (nil == 2 || pr.derived_over_center_elementary);
    if (gens && !ctx.camina_scope_)
        throw ScopeError("generator choice applies only to nonabelian Camina p-groups of class 2 or 3");
    if (ctx.camina_scope_) {
        if (gens)
            validate_generators(g, *gens);
        else
            gens = central_generators(g);
        ctx.ordering_.generators = gens;
        L.z_gens = gens->z;
        L.g_gens = gens->g;
        L.k = static_cast<unsigned>(gens->z.size());
        L.n = nil == 2 ? pr.n_param : static_cast<unsigned>(gens->g.size());
        L.sigma = exponent_sequence(g, L.z_gens, L.p);
        if (nil == 3)
            L.upsilon = exponent_sequence(g, L.g_gens, L.p);
    }

    Subgroup z = center(g);
    Subgroup d = derived_subgroup(g);
    const auto& classes = ctx.scheme_->conj.classes;
    for (const auto& cls : classes) {
        ClassKind kind = ClassKind::Outer;
        if (std::all_of(cls.begin(), cls.end(), [&](Element x) { return z.contains(x); }))
            kind = ClassKind::Central;
        else if (std::all_of(cls.begin(), cls.end(), [&](Element x) { return d.contains(x); }))
            kind = ClassKind::Middle;
        L.kind.push_back(kind);

        std::vector<Element> members = cls;
        if (ctx.camina_scope_ && kind != ClassKind::Central) {
            const Element x = cls.front();
            members.clear();
            if (nil == 3 && kind == ClassKind::Outer) {
                for (Element u : L.upsilon)
                    for (Element sg : L.sigma)
                        members.push_back(g.mul(g.mul(x, u), sg));
            } else {
                for (Element sg : L.sigma)
                    members.push_back(g.mul(x, sg));
            }
            std::vector<Element> sorted = members;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != cls)
                throw InvariantError("exponent ordering does not enumerate the class");
        }
        L.classes.push_back(std::move(members));
    }
    L.class_of = ctx.scheme_->conj.class_of;

    ElementOrdering& o = ctx.ordering_;
    o.position.assign(n, 0);
    for (const auto& cls : L.classes) {
        o.class_offset.push_back(o.order.size());
        o.order.insert(o.order.end(), cls.begin(), cls.end());
    }
    for (std::size_t r = 0; r < n; ++r)
        o.position[o.order[r]] = r;

    ctx.relpos_.assign(n * n, 0);
    ctx.adj_.assign(L.size(), std::vector<std::vector<std::uint32_t>>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::uint32_t i = ctx.scheme_->rel(o.order[r], o.order[c]);
            ctx.relpos_[r * n + c] = i;
            ctx.adj_[i][r].push_back(static_cast<std::uint32_t>(c));
        }
    for (std::size_t r = 0; r < n; ++r) {
        if (ctx.adj_[0][r].size() != 1 || ctx.adj_[0][r][0] != r)
            throw InvariantError("A_0 is not the identity");
        for (std::size_t i = 0; i < L.size(); ++i)
            if (ctx.adj_[i][r].size() != L.classes[i].size())
                throw InvariantError("adjacency row sum differs from class size");
    }
    return ctx;
}

CycloMatrix TerwilligerContext::adjacency(std::size_t i) const
{
    CycloMatrix a(size(), size(), prime());
    for (std::size_t r = 0; r < size(); ++r)
        for (std::uint32_t c : adj_.at(i)[r])
            a.entry(r, c)[0] = 1;
    return a;
}

CycloMatrix TerwilligerContext::dual_idempotent(std::size_t i) const
{
    CycloMatrix e(size(), size(), prime());
    for (std::size_t r = 0; r < class_size(i); ++r)
        e.entry(class_offset(i) + r, class_offset(i) + r)[0] = 1;
    return e;
}

CycloMatrix TerwilligerContext::block(const CycloMatrix& m, std::size_t i, std::size_t j) const
{
    return m.submatrix(class_offset(i), class_offset(j), class_size(i), class_size(j));
}

CycloMatrix TerwilligerContext::adjacency_block(std::size_t c, std::size_t i, std::size_t j) const
{
    return layout_.block(c, i, j);
}

CycloMatrix TerwilligerContext::embed(std::size_t i, const CycloMatrix& b) const
{
    CycloMatrix m(size(), size(), prime());
    m.set_block(class_offset(i), class_offset(i), b);
    return m;
}

CycloMatrix TerwilligerContext::to_element_indexing(const CycloMatrix& m) const
{
    CycloMatrix out(m.rows(), m.cols(), m.prime());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            auto src = m.entry(r, c);
            std::copy(src.begin(), src.end(), out.entry(ordering_.order[r], ordering_.order[c]).begin());
        }
    return out;
}

ClassBlocks TerwilligerContext::class_blocks(std::size_t i) const
{
    if (!camina_scope_)
        throw ScopeError("class blocks require a nonabelian Camina p-group of class 2 or 3");
    return class_blocks_on(layout_, i, layout_.classes.at(i), nil_class() == 3 && kind(i) == ClassKind::Outer);
}

std::size_t TerwilligerContext::central_class(std::size_t idx) const { return layout_.class_of[layout_.sigma.at(idx)]; }

std::size_t TerwilligerContext::derived_class(std::size_t idx) const
{
    return layout_.class_of[layout_.upsilon.at(idx)];
}

// ---------------------------------------------------------------- dimensions

std::size_t dim_by_triples(const TerwilligerContext& ctx)
{
    IntersectionTensor t = intersection_numbers(ctx.scheme());
    if (!is_almost_commutative(t).almost_commutative)
        throw PreconditionError("dim_by_triples requires an almost-commutative scheme");
    return t.nonzero_triples();
}

BlockClosure block_closure(const TerwilligerContext& ctx)
{
    const std::size_t m = ctx.class_count();
    const unsigned p = ctx.prime();

    struct Gen {
        std::size_t target;
        CycloMatrix block;
    };
    std::vector<std::vector<Gen>> from(m);
    std::vector<char> seen(m);
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t t = 0; t < m; ++t) {
            std::fill(seen.begin(), seen.end(), 0);
            for (std::size_t r = 0; r < ctx.class_size(h); ++r)
                for (std::size_t c = 0; c < ctx.class_size(t); ++c)
                    seen[ctx.rel(ctx.class_offset(h) + r, ctx.class_offset(t) + c)] = 1;
            for (std::size_t j = 0; j < m; ++j)
                if (seen[j])
                    from[h].push_back(Gen{t, ctx.adjacency_block(j, h, t)});
        }

    BlockClosure out;
    out.basis.assign(m, std::vector<std::vector<CycloMatrix>>(m));
    std::vector<std::vector<std::optional<LinearSpan>>> spaces(m, std::vector<std::optional<LinearSpan>>(m));
    struct Item {
        std::size_t i, h, idx;
    };
    std::deque<Item> queue;
    auto insert = [&](std::size_t i, std::size_t t, CycloMatrix b) {
        auto& sp = spaces[i][t];
        if (!sp)
            sp.emplace(ctx.class_size(i) * ctx.class_size(t), p);
        if (sp->insert(b)) {
            out.basis[i][t].push_back(std::move(b));
            queue.push_back(Item{i, t, out.basis[i][t].size() - 1});
        }
    };
    for (std::size_t i = 0; i < m; ++i)
        for (const Gen& g : from[i])
            insert(i, g.target, g.block);
    while (!queue.empty()) {
        Item it = queue.front();
        queue.pop_front();
        for (const Gen& g : from[it.h]) {
            CycloMatrix w = out.basis[it.i][it.h][it.idx] * g.block;
            insert(it.i, g.target, std::move(w));
        }
    }
    for (const auto& row : out.basis)
        for (const auto& b : row)
            out.dimension += b.size();
    return out;
}

std::size_t dim_by_closure(const TerwilligerContext& ctx) { return block_closure(ctx).dimension; }

std::vector<CycloMatrix> closure_basis(const TerwilligerContext& ctx, const BlockClosure& c)
{
    std::vector<CycloMatrix> out;
    for (std::size_t i = 0; i < c.basis.size(); ++i)
        for (std::size_t h = 0; h < c.basis[i].size(); ++h)
            for (const auto& b : c.basis[i][h]) {
                CycloMatrix m(ctx.size(), ctx.size(), ctx.prime());
                m.set_block(ctx.class_offset(i), ctx.class_offset(h), b);
                out.push_back(std::move(m));
            }
    return out;
}

std::size_t class2_dimension_formula(unsigned p, unsigned n, unsigned k)
{
    if (k > n)
        throw PreconditionError("class-2 formula requires k <= n");
    const long long a = static_cast<long long>(int_pow(p, n - k) + int_pow(p, k));
    return static_cast<std::size_t>((a - 1) * (a - 2) + static_cast<long long>(int_pow(p, n)));
}

std::size_t class3_dimension_formula(unsigned p, unsigned n, unsigned k)
{
    auto P = [p](unsigned e) { return static_cast<long long>(int_pow(p, e)); };
    long long v = 3 * P(k + n) + 3 * P(k + 2 * n) + P(2 * k) - 6 * P(k) + P(4 * n) + 3 * P(3 * n) - 5 * P(2 * n) -
                  6 * P(n) + 7;
    return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------- reports

void VerificationReport::add(std::string check, std::string case_label, std::vector<std::size_t> indices, bool pass)
{
    entries.push_back(CheckEntry{std::move(check), std::move(case_label), std::move(indices), pass});
}

void VerificationReport::append(const VerificationReport& other)
{
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool VerificationReport::all_pass() const
{
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

std::size_t VerificationReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return !e.pass; }));
}

std::map<std::string, std::pair<std::size_t, std::size_t>> VerificationReport::summary() const
{
    std::map<std::string, std::pair<std::size_t, std::size_t>> s;
    for (const auto& e : entries) {
        auto& v = s[e.check];
        v.first += e.pass ? 1 : 0;
        v.second += 1;
    }
    return s;
}

// ---------------------------------------------------------------- lemma checks

namespace {

bool all_entries(const CycloMatrix& b, int value)
{
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            bool zero = b.entry_is_zero(r, c);
            if (value == 0 && !zero)
                return false;
            if (value == 1 && b.at(r, c) != CycloScalar(b.prime(), Rational(1)))
                return false;
        }
    return true;
}

bool row_counts(const CycloMatrix& b, std::size_t count)
{
    for (std::size_t r = 0; r < b.rows(); ++r) {
        std::size_t nz = 0;
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (!b.entry_is_zero(r, c)) {
                if (b.at(r, c) != CycloScalar(b.prime(), Rational(1)))
                    return false;
                ++nz;
            }
        if (nz != count)
            return false;
    }
    return true;
}

bool inner(ClassKind k) { return k == ClassKind::Central || k == ClassKind::Middle; }

void require_scope(const TerwilligerContext& ctx)
{
    if (!ctx.camina_scope())
        throw ScopeError("verification requires a nonabelian Camina p-group of class 2 or 3");
}

} // namespace

void check_outer_blocks_constant(const ClassLayout& L, VerificationReport& r)
{
    for (std::size_t k = 0; k < L.size(); ++k) {
        if (L.kind[k] != ClassKind::Outer)
            continue;
        for (std::size_t i = 0; i < L.size(); ++i) {
            auto mask = L.product_mask(i, k);
            for (std::size_t j = 0; j < L.size(); ++j) {
                bool contained = L.subset_of(j, mask);
                r.add("outer_class_blocks_constant", contained ? "all_ones" : "all_zeros", {i, j, k},
                      all_entries(L.block(k, i, j), contained ? 1 : 0));
            }
        }
    }
}

void check_central_blocks(const ClassLayout& L, VerificationReport& r)
{
    auto in_scope = [&](std::size_t i) { return L.nil_class != 3 || inner(L.kind[i]); };
    for (std::size_t k = 0; k < L.size(); ++k) {
        if (L.kind[k] != ClassKind::Central)
            continue;
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (!in_scope(i))
                continue;
            auto mask = L.product_mask(i, k);
            for (std::size_t j = 0; j < L.size(); ++j) {
                if (!in_scope(j))
                    continue;
                bool ci = L.kind[i] == ClassKind::Central;
                bool cj = L.kind[j] == ClassKind::Central;
                CycloMatrix b = L.block(k, i, j);
                if (ci && cj) {
                    bool equal = L.subset_of(j, mask);
                    r.add("central_class_blocks", "central_pair", {i, j, k}, all_entries(b, equal ? 1 : 0));
                } else if (i != j) {
                    r.add("central_class_blocks", "mixed_zero", {i, j, k}, all_entries(b, 0));
                } else {
                    r.add("central_class_blocks", "single_per_row", {i, j, k}, row_counts(b, 1));
                }
            }
        }
    }
}

void check_derived_blocks(const ClassLayout& L, VerificationReport& r)
{
    for (std::size_t k = 0; k < L.size(); ++k) {
        if (!inner(L.kind[k]))
            continue;
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t j = 0; j < L.size(); ++j) {
                bool oi = L.kind[i] == ClassKind::Outer;
                bool oj = L.kind[j] == ClassKind::Outer;
                if (i != j && (oi || oj))
                    r.add("derived_class_blocks", "mixed_zero", {i, j, k}, all_entries(L.block(k, i, j), 0));
                else if (i == j && oi)
                    r.add("derived_class_blocks", "row_count", {i, j, k},
                          row_counts(L.block(k, i, j), L.classes[k].size()));
            }
    }
}

void check_inner_blocks_constant(const ClassLayout& L, VerificationReport& r)
{
    for (std::size_t k = 0; k < L.size(); ++k) {
        if (L.kind[k] != ClassKind::Middle)
            continue;
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (!inner(L.kind[i]))
                continue;
            auto mask = L.product_mask(i, k);
            for (std::size_t j = 0; j < L.size(); ++j) {
                if (!inner(L.kind[j]))
                    continue;
                bool contained = L.subset_of(j, mask);
                r.add("inner_class_blocks_constant", contained ? "all_ones" : "all_zeros", {i, j, k},
                      all_entries(L.block(k, i, j), contained ? 1 : 0));
            }
        }
    }
}

void check_outer_row_counts(const ClassBlocks& b, VerificationReport& r)
{
    for (std::size_t idx = 0; idx < b.central.size(); ++idx)
        r.add("derived_class_blocks", "row_count", {b.class_index, b.central_class[idx]}, row_counts(b.central[idx], 1));
    for (std::size_t idx = 1; idx < b.derived.size(); ++idx)
        r.add("derived_class_blocks", "row_count", {b.class_index, b.derived_class[idx]},
              row_counts(b.derived[idx], b.derived_class_size[idx]));
}

void check_central_power_laws(const ClassBlocks& b, VerificationReport& r)
{
    const std::string power = b.outer ? "outer_central_power_law" : "central_power_law";
    const std::string product = b.outer ? "outer_central_product_law" : "central_product_law";
    std::vector<CycloMatrix> gen;
    for (unsigned m = 1; m <= b.k; ++m) {
        const std::size_t step = int_pow(b.p, m - 1);
        gen.push_back(b.central[step]);
        CycloMatrix pw = CycloMatrix::identity(b.size(), b.p);
        for (unsigned j = 0; j < b.p; ++j) {
            r.add(power, "z" + std::to_string(m) + "^" + std::to_string(j), {b.class_index, m, j},
                  pw == b.central[j * step]);
            pw = pw * gen.back();
        }
    }
    for (std::size_t idx = 0; idx < b.central.size(); ++idx) {
        auto m = exponent_digits(idx, b.p, b.k);
        CycloMatrix prod = CycloMatrix::identity(b.size(), b.p);
        for (unsigned j = 0; j < b.k; ++j)
            prod = prod * gen[j].power(m[j]);
        r.add(product, "central_class", {b.class_index, b.central_class[idx]}, prod == b.central[idx]);
    }
}

void check_derived_power_laws(const ClassBlocks& b, VerificationReport& r)
{
    if (!b.outer)
        return;
    const Rational pk = Rational(static_cast<long>(int_pow(b.p, b.k)));
    std::vector<CycloMatrix> gen;
    for (unsigned m = 1; m <= b.n; ++m) {
        const std::size_t step = int_pow(b.p, m - 1);
        gen.push_back(b.derived[step]);
        CycloMatrix pw = gen.back();
        Rational scale = 1;
        for (unsigned j = 1; j < b.p; ++j) {
            r.add("derived_power_law", "g" + std::to_string(m) + "^" + std::to_string(j), {b.class_index, m, j},
                  pw == b.derived[j * step] * scale);
            pw = pw * gen.back();
            scale *= pk;
        }
    }
    for (std::size_t idx = 1; idx < b.derived.size(); ++idx) {
        auto m = exponent_digits(idx, b.p, b.n);
        CycloMatrix prod = CycloMatrix::identity(b.size(), b.p);
        Rational scale = pk;
        for (unsigned j = 0; j < b.n; ++j) {
            prod = prod * gen[j].power(m[j]);
            for (unsigned e = 0; e < m[j]; ++e)
                scale /= pk;
        }
        r.add("derived_product_law", "derived_class", {b.class_index, b.derived_class[idx]},
              prod * scale == b.derived[idx]);
    }
}

CycloMatrix shift_kronecker(unsigned p, unsigned factors, unsigned slot)
{
    CycloMatrix out = CycloMatrix::identity(1, p);
    for (unsigned m = 1; m <= factors; ++m)
        out = kron(out, m == slot ? shift_matrix(p) : CycloMatrix::identity(p, p));
    return out;
}

void check_kronecker_forms(const ClassBlocks& b, VerificationReport& r)
{
    if (!b.outer) {
        for (unsigned i = 1; i <= b.k; ++i)
            r.add("central_kronecker_form", "z" + std::to_string(i), {b.class_index, i},
                  b.central[int_pow(b.p, i - 1)] == shift_kronecker(b.p, b.k, b.k - i + 1));
        return;
    }
    for (unsigned i = 1; i <= b.k; ++i)
        r.add("outer_central_kronecker_form", "z" + std::to_string(i), {b.class_index, i},
              b.central[int_pow(b.p, i - 1)] == shift_kronecker(b.p, b.n + b.k, b.n + b.k - i + 1));
    const CycloMatrix J = CycloMatrix::all_ones(int_pow(b.p, b.k), b.p);
    const CycloMatrix P = shift_matrix(b.p);
    for (std::size_t idx = 1; idx < b.derived.size(); ++idx) {
        auto m = exponent_digits(idx, b.p, b.n);
        CycloMatrix f = CycloMatrix::identity(1, b.p);
        for (unsigned t = 1; t <= b.n; ++t)
            f = kron(f, P.power(m[b.n - t]));
        f = kron(f, J);
        r.add("derived_kronecker_form", "derived_class", {b.class_index, b.derived_class[idx]}, f == b.derived[idx]);
    }
    CycloMatrix sum(b.size(), b.size(), b.p);
    for (const auto& c : b.central)
        sum += c;
    r.add("central_sum_kronecker_form", "sum", {b.class_index},
          sum == kron(CycloMatrix::identity(int_pow(b.p, b.n), b.p), J));
}

VerificationReport verify_block_lemmas(const TerwilligerContext& ctx)
{
    require_scope(ctx);
    VerificationReport r;
    check_outer_blocks_constant(ctx.layout(), r);
    check_central_blocks(ctx.layout(), r);
    if (ctx.nil_class() == 3) {
        check_derived_blocks(ctx.layout(), r);
        check_inner_blocks_constant(ctx.layout(), r);
    }
    return r;
}

VerificationReport verify_power_product_lemmas(const TerwilligerContext& ctx)
{
    require_scope(ctx);
    VerificationReport r;
    for (std::size_t i = 0; i < ctx.class_count(); ++i) {
        ClassKind k = ctx.kind(i);
        bool w_type = (ctx.nil_class() == 2 && k == ClassKind::Outer) || (ctx.nil_class() == 3 && k == ClassKind::Middle);
        bool outer3 = ctx.nil_class() == 3 && k == ClassKind::Outer;
        if (!w_type && !outer3)
            continue;
        ClassBlocks b = ctx.class_blocks(i);
        check_central_power_laws(b, r);
        if (outer3)
            check_derived_power_laws(b, r);
    }
    return r;
}

VerificationReport verify_kronecker_decompositions(const TerwilligerContext& ctx)
{
    require_scope(ctx);
    VerificationReport r;
    for (std::size_t i = 0; i < ctx.class_count(); ++i) {
        ClassKind k = ctx.kind(i);
        bool w_type = (ctx.nil_class() == 2 && k == ClassKind::Outer) || (ctx.nil_class() == 3 && k == ClassKind::Middle);
        bool outer3 = ctx.nil_class() == 3 && k == ClassKind::Outer;
        if (!w_type && !outer3)
            continue;
        check_kronecker_forms(ctx.class_blocks(i), r);
    }
    return r;
}

} // namespace camina
