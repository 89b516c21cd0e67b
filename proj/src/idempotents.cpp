#include "camina/idempotents.hpp"

#include "camina/error.hpp"

#include <algorithm>

namespace camina {

std::string to_string(Family f)
{
    switch (f) {
    case Family::W: return "W";
    case Family::X: return "X";
    case Family::Y: return "Y";
    }
    return "W";
}

std::string IdempotentLabel::to_string() const
{
    std::string s = camina::to_string(family) + "_" + std::to_string(class_index) + "(";
    for (std::size_t j = 0; j < alpha.size(); ++j)
        s += (j ? "," : "") + std::to_string(alpha[j]);
    return s + ")";
}

namespace {

CycloScalar zeta(unsigned p, std::size_t e) { return CycloScalar::zeta_pow(p, static_cast<long>(e % p)); }

/* table[j][e] = gens[j]^e, e < p */
std::vector<std::vector<CycloMatrix>> power_table(const std::vector<CycloMatrix>& gens, unsigned p)
{
    std::vector<std::vector<CycloMatrix>> t;
    for (const auto& g : gens) {
        std::vector<CycloMatrix> row{CycloMatrix::identity(g.rows(), p)};
        for (unsigned e = 1; e < p; ++e)
            row.push_back(row.back() * g);
        t.push_back(std::move(row));
    }
    return t;
}

CycloMatrix monomial(const std::vector<std::vector<CycloMatrix>>& pw, const std::vector<unsigned>& a, std::size_t size,
                     unsigned p)
{
    CycloMatrix prod = CycloMatrix::identity(size, p);
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j])
            prod = prod * pw[j][a[j]];
    return prod;
}

std::size_t dot(std::span<const unsigned> x, const std::vector<unsigned>& a)
{
    std::size_t s = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        s += static_cast<std::size_t>(x[j]) * a[j];
    return s;
}

Rational rational_pow(std::size_t base, unsigned e) { return Rational(static_cast<long>(int_pow(base, e))); }

bool has_family(const std::vector<Family>& fs, Family f) { return std::find(fs.begin(), fs.end(), f) != fs.end(); }

void require_digits(std::span<const unsigned> a, std::size_t len, unsigned p, const char* what)
{
    if (a.size() != len)
        throw PreconditionError(std::string(what) + " has length " + std::to_string(a.size()) + ", expected " +
                                std::to_string(len));
    for (unsigned x : a)
        if (x >= p)
            throw PreconditionError(std::string(what) + " entries must lie in 0..p-1");
}

} // namespace

CycloMatrix w_block(const ClassBlocks& b, std::span<const unsigned> alpha)
{
    require_digits(alpha, b.k, b.p, "alpha");
    std::vector<CycloMatrix> gens;
    for (unsigned j = 1; j <= b.k; ++j)
        gens.push_back(b.central[int_pow(b.p, j - 1)]);
    auto pw = power_table(gens, b.p);
    CycloMatrix sum(b.size(), b.size(), b.p);
    for (std::size_t idx = 0; idx < b.central.size(); ++idx) {
        auto a = exponent_digits(idx, b.p, b.k);
        sum += monomial(pw, a, b.size(), b.p) * zeta(b.p, dot(alpha, a));
    }
    return sum * Rational(1, static_cast<unsigned long>(int_pow(b.p, b.k)));
}

CycloMatrix y_block(const ClassBlocks& b, std::span<const unsigned> gamma)
{
    if (!b.outer)
        throw ScopeError("Y requires a class outside G' in a class-3 group");
    require_digits(gamma, b.n, b.p, "gamma");
    CycloMatrix sum(b.size(), b.size(), b.p);
    for (const auto& c : b.central)
        sum += c;
    std::vector<CycloMatrix> gens;
    for (unsigned j = 1; j <= b.n; ++j)
        gens.push_back(b.derived[int_pow(b.p, j - 1)]);
    auto pw = power_table(gens, b.p);
    const Rational pk = rational_pow(b.p, b.k);
    for (std::size_t idx = 1; idx < b.derived.size(); ++idx) {
        auto a = exponent_digits(idx, b.p, b.n);
        Rational scale = pk;
        for (unsigned aj : a)
            for (unsigned e = 0; e < aj; ++e)
                scale /= pk;
        sum += monomial(pw, a, b.size(), b.p) * (zeta(b.p, dot(gamma, a)) * scale);
    }
    return sum * (Rational(1) / rational_pow(b.p, b.n + b.k));
}

std::vector<Family> families_for(const TerwilligerContext& ctx, std::size_t i)
{
    if (!ctx.camina_scope())
        return {};
    ClassKind k = ctx.kind(i);
    if (ctx.nil_class() == 2)
        return k == ClassKind::Outer ? std::vector<Family>{Family::W} : std::vector<Family>{};
    if (k == ClassKind::Middle)
        return {Family::W};
    if (k == ClassKind::Outer)
        return {Family::X, Family::Y};
    return {};
}

namespace {

CycloMatrix build_family(const TerwilligerContext& ctx, Family f, std::size_t i, std::span<const unsigned> a)
{
    if (i >= ctx.class_count())
        throw PreconditionError("class index out of range");
    if (!has_family(families_for(ctx, i), f))
        throw ScopeError(to_string(f) + " does not apply to class " + std::to_string(i) + " (" +
                         to_string(ctx.kind(i)) + ", nilpotency class " + std::to_string(ctx.nil_class()) + ")");
    ClassBlocks b = ctx.class_blocks(i);
    return ctx.embed(i, f == Family::Y ? y_block(b, a) : w_block(b, a));
}

} // namespace

CycloMatrix build_W(const TerwilligerContext& ctx, std::size_t i, std::span<const unsigned> alpha)
{
    return build_family(ctx, Family::W, i, alpha);
}

CycloMatrix build_X(const TerwilligerContext& ctx, std::size_t i, std::span<const unsigned> beta)
{
    return build_family(ctx, Family::X, i, beta);
}

CycloMatrix build_Y(const TerwilligerContext& ctx, std::size_t i, std::span<const unsigned> gamma)
{
    return build_family(ctx, Family::Y, i, gamma);
}

std::vector<Idempotent> block_inventory(const ClassBlocks& b)
{
    std::vector<Idempotent> out;
    const Family first = b.outer ? Family::X : Family::W;
    for (std::size_t idx = 1; idx < int_pow(b.p, b.k); ++idx) {
        auto a = exponent_digits(idx, b.p, b.k);
        out.push_back(Idempotent{IdempotentLabel{first, b.class_index, a}, w_block(b, a)});
    }
    if (b.outer)
        for (std::size_t idx = 1; idx < int_pow(b.p, b.n); ++idx) {
            auto a = exponent_digits(idx, b.p, b.n);
            out.push_back(Idempotent{IdempotentLabel{Family::Y, b.class_index, a}, y_block(b, a)});
        }
    return out;
}

std::vector<Idempotent> inventory(const TerwilligerContext& ctx)
{
    std::vector<Idempotent> out;
    for (std::size_t i = 0; i < ctx.class_count(); ++i) {
        if (families_for(ctx, i).empty())
            continue;
        auto part = block_inventory(ctx.class_blocks(i));
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

std::size_t expected_inventory_size(const TerwilligerContext& ctx)
{
    if (!ctx.camina_scope())
        return 0;
    const std::size_t p = ctx.prime();
    const unsigned k = ctx.k(), n = ctx.n_param();
    if (ctx.nil_class() == 2)
        return (int_pow(p, k) - 1) * (int_pow(p, n - k) - 1);
    return (int_pow(p, k) - 1) * (int_pow(p, n) - 1) + (int_pow(p, k) - 1) * (int_pow(p, 2 * n) - 1) +
           (int_pow(p, n) - 1) * (int_pow(p, 2 * n) - 1);
}

CycloMatrix embed(const TerwilligerContext& ctx, const Idempotent& e) { return ctx.embed(e.label.class_index, e.block); }

CycloMatrix primary_idempotent(const TerwilligerContext& ctx, const std::vector<Idempotent>& inv)
{
    if (inv.size() != expected_inventory_size(ctx))
        throw PreconditionError("incomplete inventory: " + std::to_string(inv.size()) + " of " +
                                std::to_string(expected_inventory_size(ctx)) + " idempotents");
    CycloMatrix ev = CycloMatrix::identity(ctx.size(), ctx.prime());
    for (const auto& e : inv) {
        const std::size_t off = ctx.class_offset(e.label.class_index);
        CycloMatrix cur = ev.submatrix(off, off, e.block.rows(), e.block.cols());
        ev.set_block(off, off, cur - e.block);
    }
    return ev;
}

CentralityResult verify_centrality(const TerwilligerContext& ctx, const CycloMatrix& m)
{
    for (std::size_t h = 0; h < ctx.class_count(); ++h) {
        CycloMatrix e = ctx.dual_idempotent(h);
        if (m * e != e * m)
            return CentralityResult{false, "E*", h};
    }
    for (std::size_t j = 0; j < ctx.class_count(); ++j) {
        CycloMatrix a = ctx.adjacency(j);
        if (m * a != a * m)
            return CentralityResult{false, "A", j};
    }
    return {};
}

std::size_t ideal_dimension(const CycloMatrix& m, const std::vector<CycloMatrix>& basis)
{
    LinearSpan span(m.rows() * m.cols(), m.prime());
    for (const auto& b : basis)
        span.insert(m * b * m);
    return span.dimension();
}

bool verify_primitivity(const CycloMatrix& m, const std::vector<CycloMatrix>& basis)
{
    return ideal_dimension(m, basis) == 1;
}

VerificationReport verify_orthogonality(const std::vector<Idempotent>& inv)
{
    VerificationReport r;
    for (std::size_t a = 0; a < inv.size(); ++a) {
        const auto& A = inv[a];
        CycloMatrix J = CycloMatrix::all_ones(A.block.rows(), A.block.prime());
        r.add("primary_orthogonality", A.label.to_string(), {a}, inner_product(A.block, J).is_zero());
        for (std::size_t b = a + 1; b < inv.size(); ++b) {
            const auto& B = inv[b];
            if (A.label.class_index != B.label.class_index)
                continue;
            const std::string pair = A.label.to_string() + "," + B.label.to_string();
            r.add("product_orthogonality", pair, {a, b}, (A.block * B.block).is_zero() && (B.block * A.block).is_zero());
            r.add("inner_product_orthogonality", pair, {a, b}, inner_product(A.block, B.block).is_zero());
        }
    }
    return r;
}

void check_block_idempotents(const ClassBlocks& b, const std::vector<Idempotent>& members, VerificationReport& r)
{
    const unsigned p = b.p;
    const std::size_t sz = b.size();
    const CycloMatrix I = CycloMatrix::identity(sz, p);
    const CycloMatrix J = CycloMatrix::all_ones(sz, p);
    const Rational pk = rational_pow(p, b.k);
    const std::vector<std::size_t> at{b.class_index};

    for (const auto& m : members) {
        r.add("idempotency", m.label.to_string(), at, m.block * m.block == m.block);
        if (m.label.family == Family::Y)
            r.add("y_trace_one", m.label.to_string(), at, m.block.trace() == CycloScalar(p, Rational(1)));
    }

    const std::vector<unsigned> zk(b.k, 0);
    CycloMatrix first0 = w_block(b, zk);
    CycloMatrix total = first0;
    for (const auto& m : members)
        if (m.label.family != Family::Y)
            total += m.block;
    if (!b.outer) {
        r.add("partition_of_unity", "W", at, total == I);
        r.add("zero_label_normalization", "W", at, first0 * pk == J);
    } else {
        r.add("partition_of_unity", "X", at, total == I);
        CycloMatrix IJ = kron(CycloMatrix::identity(int_pow(p, b.n), p), CycloMatrix::all_ones(int_pow(p, b.k), p));
        r.add("zero_label_normalization", "X", at, first0 == IJ * (Rational(1) / pk));

        CycloMatrix gsum(sz, sz, p);
        for (const auto& c : b.central)
            gsum += c;
        for (std::size_t idx = 1; idx < b.derived.size(); ++idx)
            gsum += b.derived[idx];
        r.add("g_prime_blocks_sum_all_ones", "Y", at, gsum == J);
        CycloMatrix y0 = y_block(b, std::vector<unsigned>(b.n, 0));
        r.add("zero_label_normalization", "Y", at, y0 == gsum * (Rational(1) / rational_pow(p, b.n + b.k)));
        CycloMatrix ysum = y0;
        for (const auto& m : members)
            if (m.label.family == Family::Y)
                ysum += m.block;
        r.add("partition_of_unity", "Y", at, ysum == first0);
    }
    r.append(verify_orthogonality(members));
}

bool WedderburnReport::all_pass() const
{
    return details.all_pass() &&
           std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

namespace {

struct BlockRef {
    std::size_t other;
    CycloMatrix block;
};

/* nonzero blocks A_j[i,t] (out) and A_j[t,i] (in) for every j,t */
struct Incident {
    std::vector<BlockRef> out;
    std::vector<BlockRef> in;
};

Incident incident_blocks(const TerwilligerContext& ctx, std::size_t i)
{
    Incident inc;
    const std::size_t m = ctx.class_count();
    std::vector<char> seen(m);
    for (int dir = 0; dir < 2; ++dir)
        for (std::size_t t = 0; t < m; ++t) {
            std::size_t r0 = dir == 0 ? i : t, c0 = dir == 0 ? t : i;
            std::fill(seen.begin(), seen.end(), 0);
            for (std::size_t r = 0; r < ctx.class_size(r0); ++r)
                for (std::size_t c = 0; c < ctx.class_size(c0); ++c)
                    seen[ctx.rel(ctx.class_offset(r0) + r, ctx.class_offset(c0) + c)] = 1;
            for (std::size_t j = 0; j < m; ++j)
                if (seen[j])
                    (dir == 0 ? inc.out : inc.in).push_back(BlockRef{t, ctx.adjacency_block(j, r0, c0)});
        }
    return inc;
}

/* commutation of an operator supported on C_i,C_i with every A_j and E_h* */
bool central_on_class(std::size_t i, const CycloMatrix& d, const Incident& inc)
{
    for (const auto& o : inc.out) {
        CycloMatrix left = d * o.block;
        if (o.other == i) {
            if (left != o.block * d)
                return false;
        } else if (!left.is_zero()) {
            return false;
        }
    }
    for (const auto& o : inc.in)
        if (o.other != i && !(o.block * d).is_zero())
            return false;
    return true;
}

std::size_t block_ideal_dimension(const CycloMatrix& ds, const std::vector<CycloMatrix>& basis, const CycloMatrix& dt)
{
    if (basis.empty())
        return 0;
    LinearSpan span(ds.rows() * dt.cols(), ds.prime());
    for (const auto& b : basis)
        span.insert(ds * b * dt);
    return span.dimension();
}

} // namespace

WedderburnReport wedderburn_report(const TerwilligerContext& ctx, const WedderburnOptions& opt)
{
    if (!ctx.camina_scope())
        throw ScopeError("Wedderburn decomposition requires a nonabelian Camina p-group of class 2 or 3");
    return wedderburn_report(ctx, inventory(ctx), opt);
}

WedderburnReport wedderburn_report(const TerwilligerContext& ctx, const std::vector<Idempotent>& inv,
                                   const WedderburnOptions& opt)
{
    if (!ctx.camina_scope())
        throw ScopeError("Wedderburn decomposition requires a nonabelian Camina p-group of class 2 or 3");
    const unsigned p = ctx.prime();
    const std::size_t m = ctx.class_count();
    WedderburnReport rep;
    rep.class_count = m;
    rep.dim_T = dim_by_triples(ctx);
    rep.dim_formula = ctx.nil_class() == 2 ? class2_dimension_formula(p, ctx.n_param(), ctx.k())
                                           : class3_dimension_formula(p, ctx.n_param(), ctx.k());
    rep.dim_primary = m * m;
    rep.one_dim_ideal_count = inv.size();
    rep.expected_count = expected_inventory_size(ctx);
    for (const auto& e : inv)
        rep.idempotent_inventory.push_back(e.label);

    std::vector<std::vector<std::size_t>> by_class(m);
    for (std::size_t a = 0; a < inv.size(); ++a)
        by_class.at(inv[a].label.class_index).push_back(a);

    std::optional<BlockClosure> closure;
    if (opt.closure == ClosureMode::Always ||
        (opt.closure == ClosureMode::Auto && ctx.size() <= opt.closure_order_limit))
        closure = block_closure(ctx);

    VerificationReport& r = rep.details;
    std::vector<CycloMatrix> ev;
    for (std::size_t s = 0; s < m; ++s)
        ev.push_back(CycloMatrix::identity(ctx.class_size(s), p));

    for (std::size_t i = 0; i < m; ++i) {
        if (by_class[i].empty())
            continue;
        std::vector<Idempotent> members;
        for (std::size_t a : by_class[i])
            members.push_back(inv[a]);
        check_block_idempotents(ctx.class_blocks(i), members, r);
        Incident inc = incident_blocks(ctx, i);
        for (std::size_t a : by_class[i]) {
            const auto& e = inv[a];
            r.add("centrality", e.label.to_string(), {i, a}, central_on_class(i, e.block, inc));
            if (closure)
                r.add("primitivity", e.label.to_string(), {i, a},
                      block_ideal_dimension(e.block, closure->basis[i][i], e.block) == 1);
            ev[i] -= e.block;
        }
        for (std::size_t a : by_class[i])
            r.add("primary_annihilates_inventory", inv[a].label.to_string(), {i, a},
                  (ev[i] * inv[a].block).is_zero() && (inv[a].block * ev[i]).is_zero());
    }

    bool idem = true, resolution = true;
    CycloScalar tr(p);
    for (std::size_t s = 0; s < m; ++s) {
        idem = idem && ev[s] * ev[s] == ev[s];
        tr += ev[s].trace();
        CycloMatrix sum = ev[s];
        for (std::size_t a : by_class[s])
            sum += inv[a].block;
        resolution = resolution && sum == CycloMatrix::identity(ctx.class_size(s), p);
    }
    bool central = true;
    for (std::size_t s = 0; s < m && central; ++s) {
        Incident inc = incident_blocks(ctx, s);
        for (const auto& o : inc.out)
            if (ev[s] * o.block != o.block * ev[o.other]) {
                central = false;
                break;
            }
    }
    rep.checks["primary_idempotent"] = idem;
    rep.checks["primary_trace"] = tr == CycloScalar(p, Rational(static_cast<long>(m)));
    rep.checks["primary_central"] = central;
    rep.checks["resolution_of_identity"] = resolution;
    rep.checks["inventory_count"] = rep.one_dim_ideal_count == rep.expected_count;
    rep.checks["dimension_identity"] = rep.dim_T == rep.dim_primary + rep.one_dim_ideal_count;
    rep.checks["dimension_formula"] = rep.dim_T == rep.dim_formula;
    if (closure) {
        rep.dim_closure = closure->dimension;
        rep.checks["closure_matches_triples"] = closure->dimension == rep.dim_T;
        std::size_t dim = 0;
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t)
                dim += block_ideal_dimension(ev[s], closure->basis[s][t], ev[t]);
        rep.checks["primary_ideal_dimension"] = dim == rep.dim_primary;
    }
    for (const auto& [name, counts] : r.summary())
        rep.checks[name] = counts.first == counts.second;
    return rep;
}

std::optional<std::vector<std::size_t>> galois_permutation(const std::vector<Idempotent>& inv, unsigned t)
{
    std::vector<std::size_t> perm(inv.size());
    std::vector<char> used(inv.size());
    for (std::size_t a = 0; a < inv.size(); ++a) {
        CycloMatrix img = inv[a].block.galois(t);
        bool found = false;
        for (std::size_t b = 0; b < inv.size() && !found; ++b)
            if (!used[b] && inv[b].label.class_index == inv[a].label.class_index && inv[b].block == img) {
                perm[a] = b;
                used[b] = 1;
                found = true;
            }
        if (!found)
            return std::nullopt;
    }
    return perm;
}

std::vector<CycloMatrix> element_indexed_inventory(const TerwilligerContext& ctx, const std::vector<Idempotent>& inv)
{
    std::vector<CycloMatrix> out;
    for (const auto& e : inv)
        out.push_back(ctx.to_element_indexing(embed(ctx, e)));
    return out;
}

bool same_matrix_set(const std::vector<CycloMatrix>& a, const std::vector<CycloMatrix>& b)
{
    if (a.size() != b.size())
        return false;
    std::vector<char> used(b.size());
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && b[j] == x) {
                used[j] = 1;
                found = true;
            }
        if (!found)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- synthetic

SyntheticClass3 synth_class3_context(unsigned p, unsigned n, unsigned k, bool twisted)
{
    if (!is_prime(p))
        throw PreconditionError("p must be prime");
    if (n < 1 || k < 1)
        throw PreconditionError("n and k must be at least 1");
    if (n + k > 12 || int_pow(p, n + k) > 4096)
        throw PreconditionError("p^(n+k) exceeds the synthetic size cap 4096");
    const std::size_t pk = int_pow(p, k);
    const std::size_t N = int_pow(p, n + k);

    std::vector<std::vector<Element>> rows(N, std::vector<Element>(N));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            auto za = exponent_digits(a % pk, p, k), zb = exponent_digits(b % pk, p, k);
            auto ua = exponent_digits(a / pk, p, n), ub = exponent_digits(b / pk, p, n);
            std::vector<unsigned> z(k), u(n);
            for (unsigned j = 0; j < k; ++j)
                z[j] = za[j] + zb[j];
            for (unsigned j = 0; j < n; ++j) {
                u[j] = ua[j] + ub[j];
                if (u[j] >= p) {
                    u[j] -= p;
                    if (twisted)
                        z[j % k] += 1;
                }
            }
            for (auto& x : z)
                x %= p;
            rows[a][b] = static_cast<Element>(exponent_index(z, p) + pk * exponent_index(u, p));
        }

    SyntheticClass3 s;
    s.p = p;
    s.n = n;
    s.k = k;
    s.twisted = twisted;
    s.h = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(rows));
    const FiniteGroup& H = *s.h;

    std::vector<Element> zc, zall, gc;
    for (Element x = 0; x < N; ++x) {
        if (x < pk) {
            zall.push_back(x);
            if (x)
                zc.push_back(x);
        } else {
            gc.push_back(x);
        }
    }
    ClassLayout& L = s.layout;
    L.group = s.h;
    L.p = p;
    L.k = k;
    L.n = n;
    L.nil_class = 3;
    L.z_gens = greedy_generators(H, zc, {}, pk);
    L.g_gens = greedy_generators(H, gc, zall, N);
    L.sigma = exponent_sequence(H, L.z_gens, p);
    L.upsilon = exponent_sequence(H, L.g_gens, p);
    L.class_of.assign(N, kNoClass);
    for (Element z : L.sigma) {
        L.class_of[z] = L.classes.size();
        L.classes.push_back({z});
        L.kind.push_back(ClassKind::Central);
    }
    std::vector<Element> all;
    for (std::size_t si = 0; si < L.upsilon.size(); ++si) {
        std::vector<Element> coset;
        for (Element z : L.sigma)
            coset.push_back(H.mul(L.upsilon[si], z));
        all.insert(all.end(), coset.begin(), coset.end());
        if (si == 0)
            continue;
        for (Element x : coset)
            L.class_of[x] = L.classes.size();
        L.classes.push_back(std::move(coset));
        L.kind.push_back(ClassKind::Middle);
    }
    if (std::any_of(L.class_of.begin(), L.class_of.end(), [](std::size_t c) { return c == kNoClass; }))
        throw InvariantError("synthetic layout does not cover H");
    s.outer = class_blocks_on(L, L.size(), all, true);
    return s;
}

SyntheticReport synth_class3_report(const SyntheticClass3& s)
{
    SyntheticReport rep;
    const ClassLayout& L = s.layout;
    check_central_blocks(L, rep.lemmas);
    check_inner_blocks_constant(L, rep.lemmas);
    check_outer_row_counts(s.outer, rep.lemmas);
    check_central_power_laws(s.outer, rep.lemmas);
    check_derived_power_laws(s.outer, rep.lemmas);
    check_kronecker_forms(s.outer, rep.lemmas);
    for (std::size_t c = 0; c < L.size(); ++c) {
        if (L.kind[c] != ClassKind::Middle)
            continue;
        ++rep.middle_classes;
        ClassBlocks mb = class_blocks_on(L, c, L.classes[c], false);
        check_central_power_laws(mb, rep.lemmas);
        check_kronecker_forms(mb, rep.lemmas);
        auto members = block_inventory(mb);
        rep.w_count += members.size();
        check_block_idempotents(mb, members, rep.idempotents);
    }
    auto members = block_inventory(s.outer);
    for (const auto& m : members)
        (m.label.family == Family::X ? rep.x_count : rep.y_count) += 1;
    check_block_idempotents(s.outer, members, rep.idempotents);
    const std::size_t expected = (int_pow(s.p, s.k) - 1) + (int_pow(s.p, s.n) - 1);
    rep.idempotents.add("outer_inventory_count", "X+Y", {s.outer.class_index}, members.size() == expected);
    return rep;
}

} // namespace camina
