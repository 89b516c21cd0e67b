#include "camina/group.hpp"

#include "camina/cyclotomic.hpp"
#include "camina/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace camina {

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& rows,
                                    std::vector<std::string> labels, Validation mode,
                                    std::uint64_t seed)
{
    const std::size_t n = rows.size();
    if (n == 0)
        throw ValidationError("empty multiplication table");
    if (!labels.empty() && labels.size() != n)
        throw ValidationError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));

    std::vector<char> seen(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n)
            throw ValidationError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                      " entries, expected " + std::to_string(n),
                                  static_cast<long>(r));
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t c = 0; c < n; ++c) {
            Element v = rows[r][c];
            if (v >= n)
                throw ValidationError("entry out of range at row " + std::to_string(r) + ", column " +
                                          std::to_string(c),
                                      static_cast<long>(r), static_cast<long>(c));
            if (seen[v])
                throw ValidationError("Latin-square violation at row " + std::to_string(r) + ", column " +
                                          std::to_string(c) + ": value " + std::to_string(v) + " repeated",
                                      static_cast<long>(r), static_cast<long>(c));
            seen[v] = 1;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t r = 0; r < n; ++r) {
            Element v = rows[r][c];
            if (seen[v])
                throw ValidationError("Latin-square violation at column " + std::to_string(c) + ", row " +
                                          std::to_string(r) + ": value " + std::to_string(v) + " repeated",
                                      static_cast<long>(r), static_cast<long>(c));
            seen[v] = 1;
        }
    }

    std::size_t e = n;
    for (std::size_t x = 0; x < n && e == n; ++x) {
        bool ok = true;
        for (std::size_t y = 0; y < n && ok; ++y)
            ok = rows[x][y] == y && rows[y][x] == y;
        if (ok)
            e = x;
    }
    if (e == n)
        throw ValidationError("missing identity element");

    auto pi = [e](std::size_t x) -> Element {
        if (x == e)
            return 0;
        if (x == 0)
            return static_cast<Element>(e);
        return static_cast<Element>(x);
    };

    FiniteGroup g;
    g.n_ = n;
    g.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            g.table_[pi(a) * n + pi(b)] = pi(rows[a][b]);
    if (!labels.empty()) {
        std::swap(labels[0], labels[e]);
        g.labels_ = std::move(labels);
    }

    g.inv_.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
        Element y = 0;
        while (g.mul(x, y) != 0)
            ++y;
        if (g.mul(y, x) != 0)
            throw ValidationError("element " + std::to_string(x) + " has no two-sided inverse",
                                  static_cast<long>(x));
        g.inv_[x] = y;
    }

    if (mode == Validation::Full) {
        auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
            throw ValidationError("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) +
                                      ", " + std::to_string(c) + ")",
                                  static_cast<long>(a), static_cast<long>(b));
        };
        if (n <= kExhaustiveAssociativityLimit) {
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b) {
                    Element ab = g.mul(a, b);
                    for (Element c = 0; c < n; ++c)
                        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                            fail(a, b, c);
                }
        } else {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
            for (std::size_t t = 0; t < kSampledAssociativityTriples; ++t) {
                Element a = pick(rng), b = pick(rng), c = pick(rng);
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    fail(a, b, c);
            }
        }
    }
    return g;
}

Element FiniteGroup::power(Element x, std::uint64_t e) const
{
    Element r = 0;
    Element b = x;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::size_t FiniteGroup::element_order(Element x) const
{
    std::size_t k = 1;
    for (Element y = x; y != 0; y = mul(y, x))
        ++k;
    return k;
}

bool FiniteGroup::is_abelian() const
{
    for (Element a = 0; a < n_; ++a)
        for (Element b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::string FiniteGroup::label(Element x) const
{
    return labels_.empty() ? std::to_string(x) : labels_[x];
}

// ---------------------------------------------------------------- text format

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t)
        out.push_back(t);
    return out;
}

unsigned long parse_index(const std::string& tok, std::size_t line)
{
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ValidationError("line " + std::to_string(line) + ": expected a non-negative integer, got '" + tok + "'");
    try {
        return std::stoul(tok);
    } catch (const std::exception&) {
        throw ValidationError("line " + std::to_string(line) + ": integer out of range '" + tok + "'");
    }
}

} // namespace

FiniteGroup load_cayley_table(std::istream& in, std::uint64_t seed)
{
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#')
            continue;
        lines.emplace_back(lineno, t);
    }
    if (lines.empty())
        throw ValidationError("empty Cayley table input");
    auto head = split_ws(lines[0].second);
    if (head.size() != 1)
        throw ValidationError("line " + std::to_string(lines[0].first) + ": expected the group order");
    const unsigned long n = parse_index(head[0], lines[0].first);
    if (n == 0)
        throw ValidationError("group order must be positive");
    if (lines.size() < n + 1)
        throw ValidationError("expected " + std::to_string(n) + " table rows, found " + std::to_string(lines.size() - 1));
    if (lines.size() > n + 2)
        throw ValidationError("line " + std::to_string(lines[n + 2].first) + ": unexpected trailing content");

    std::vector<std::vector<Element>> rows(n);
    for (std::size_t r = 0; r < n; ++r) {
        auto toks = split_ws(lines[r + 1].second);
        if (toks.size() != n)
            throw ValidationError("line " + std::to_string(lines[r + 1].first) + ": row " + std::to_string(r) +
                                      " has " + std::to_string(toks.size()) + " entries, expected " +
                                      std::to_string(n),
                                  static_cast<long>(r));
        rows[r].reserve(n);
        for (std::size_t c = 0; c < n; ++c) {
            unsigned long v = parse_index(toks[c], lines[r + 1].first);
            if (v >= n)
                throw ValidationError("entry out of range at row " + std::to_string(r) + ", column " +
                                          std::to_string(c),
                                      static_cast<long>(r), static_cast<long>(c));
            rows[r].push_back(static_cast<Element>(v));
        }
    }
    std::vector<std::string> labels;
    if (lines.size() == n + 2) {
        labels = split_ws(lines[n + 1].second);
        if (labels.size() != n)
            throw ValidationError("line " + std::to_string(lines[n + 1].first) + ": expected " + std::to_string(n) +
                                  " labels");
    }
    return FiniteGroup::from_table(rows, std::move(labels), Validation::Full, seed);
}

FiniteGroup load_cayley_table_text(std::string_view text, std::uint64_t seed)
{
    std::istringstream is{std::string(text)};
    return load_cayley_table(is, seed);
}

FiniteGroup load_cayley_table_file(const std::string& path, std::uint64_t seed)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open table file '" + path + "'");
    return load_cayley_table(in, seed);
}

std::string write_cayley_table(const FiniteGroup& g)
{
    std::ostringstream os;
    const std::size_t n = g.order();
    os << n << "\n";
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b)
            os << (b ? " " : "") << g.mul(a, b);
        os << "\n";
    }
    if (g.has_labels()) {
        for (Element a = 0; a < n; ++a)
            os << (a ? " " : "") << g.label(a);
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- subgroups

bool Subgroup::contains(Element x) const
{
    return std::binary_search(members.begin(), members.end(), x);
}

ConjugacyData conjugacy_classes(const FiniteGroup& g)
{
    const std::size_t n = g.order();
    ConjugacyData d;
    std::vector<char> seen(n);
    for (Element x = 0; x < n; ++x) {
        if (seen[x])
            continue;
        std::vector<Element> cls;
        for (Element h = 0; h < n; ++h) {
            Element y = g.conjugate(x, h);
            if (!seen[y]) {
                seen[y] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        d.classes.push_back(std::move(cls));
    }
    std::stable_sort(d.classes.begin(), d.classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.front() < b.front();
    });
    d.class_of.assign(n, 0);
    for (std::size_t i = 0; i < d.classes.size(); ++i)
        for (Element x : d.classes[i])
            d.class_of[x] = i;
    return d;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h)
{
    for (Element x : h.members)
        for (Element a = 0; a < g.order(); ++a)
            if (!h.contains(g.conjugate(x, a)))
                return false;
    return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> members)
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup h{std::move(members), false};
    if (h.members.empty() || h.members.front() != 0)
        throw PreconditionError("subgroup must contain the identity");
    for (Element a : h.members) {
        if (a >= g.order())
            throw PreconditionError("subgroup member out of range");
        if (!h.contains(g.inv(a)))
            throw PreconditionError("subgroup not closed under inverses");
        for (Element b : h.members)
            if (!h.contains(g.mul(a, b)))
                throw PreconditionError("subgroup not closed under multiplication");
    }
    h.is_normal = is_normal(g, h);
    return h;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens)
{
    std::vector<char> in(g.order());
    std::vector<Element> members{0};
    in[0] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (Element s : gens) {
            Element y = g.mul(members[i], s);
            if (!in[y]) {
                in[y] = 1;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    Subgroup h{std::move(members), false};
    h.is_normal = is_normal(g, h);
    return h;
}

Subgroup whole_group(const FiniteGroup& g)
{
    std::vector<Element> all(g.order());
    std::iota(all.begin(), all.end(), Element{0});
    return Subgroup{std::move(all), true};
}

Subgroup trivial_subgroup(const FiniteGroup&) { return Subgroup{{0}, true}; }

Subgroup center(const FiniteGroup& g)
{
    std::vector<Element> z;
    for (Element x = 0; x < g.order(); ++x) {
        bool central = true;
        for (Element a = 0; a < g.order() && central; ++a)
            central = g.mul(x, a) == g.mul(a, x);
        if (central)
            z.push_back(x);
    }
    return Subgroup{std::move(z), true};
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k)
{
    std::vector<char> in(g.order());
    std::vector<Element> gens;
    for (Element a : h.members)
        for (Element b : k.members) {
            Element c = g.commutator(a, b);
            if (!in[c]) {
                in[c] = 1;
                gens.push_back(c);
            }
        }
    return generated_subgroup(g, gens);
}

Subgroup derived_subgroup(const FiniteGroup& g)
{
    Subgroup all = whole_group(g);
    return commutator_subgroup(g, all, all);
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g)
{
    Subgroup all = whole_group(g);
    std::vector<Subgroup> series{all};
    while (true) {
        Subgroup next = commutator_subgroup(g, series.back(), all);
        if (next == series.back())
            break;
        series.push_back(std::move(next));
    }
    return series;
}

std::optional<unsigned> nilpotency_class(const FiniteGroup& g)
{
    if (g.order() == 1)
        return 0u;
    auto series = lower_central_series(g);
    if (series.back().size() != 1)
        return std::nullopt;
    return static_cast<unsigned>(series.size() - 1);
}

std::size_t centralizer_order(const FiniteGroup& g, Element x)
{
    std::size_t c = 0;
    for (Element a = 0; a < g.order(); ++a)
        if (g.mul(a, x) == g.mul(x, a))
            ++c;
    return c;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::size_t n)
{
    if (n < 2)
        return std::nullopt;
    std::size_t p = 2;
    while (n % p != 0)
        ++p;
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1)
        return std::nullopt;
    return std::make_pair(static_cast<unsigned>(p), e);
}

Quotient quotient(const FiniteGroup& g, const Subgroup& nsub)
{
    if (!is_normal(g, nsub))
        throw PreconditionError("quotient by a non-normal subgroup");
    const std::size_t n = g.order();
    Quotient q;
    q.coset_of.assign(n, static_cast<Element>(n));
    for (Element x = 0; x < n; ++x) {
        if (q.coset_of[x] != n)
            continue;
        auto idx = static_cast<Element>(q.representative.size());
        q.representative.push_back(x);
        for (Element k : nsub.members)
            q.coset_of[g.mul(x, k)] = idx;
    }
    const std::size_t m = q.representative.size();
    std::vector<std::vector<Element>> rows(m, std::vector<Element>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            rows[a][b] = q.coset_of[g.mul(q.representative[a], q.representative[b])];
    q.group = FiniteGroup::from_table(rows, {}, Validation::Trusted);
    return q;
}

std::vector<Subgroup> normal_subgroups_within(const FiniteGroup& g, const Subgroup& h)
{
    auto cd = conjugacy_classes(g);
    std::vector<std::size_t> inside;
    for (std::size_t i = 1; i < cd.size(); ++i)
        if (std::all_of(cd.classes[i].begin(), cd.classes[i].end(), [&](Element x) { return h.contains(x); }))
            inside.push_back(i);
    if (inside.size() > 20)
        throw ScopeError("too many classes inside the subgroup to enumerate normal subgroups");
    std::vector<Subgroup> out;
    for (std::uint32_t mask = 0; mask < (1u << inside.size()); ++mask) {
        std::vector<Element> members{0};
        for (std::size_t b = 0; b < inside.size(); ++b)
            if (mask & (1u << b))
                members.insert(members.end(), cd.classes[inside[b]].begin(), cd.classes[inside[b]].end());
        if (g.order() % members.size() != 0)
            continue;
        std::sort(members.begin(), members.end());
        Subgroup s{members, true};
        bool closed = true;
        for (Element a : s.members) {
            for (Element b : s.members)
                if (!s.contains(g.mul(a, b))) {
                    closed = false;
                    break;
                }
            if (!closed)
                break;
        }
        if (closed)
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

// ---------------------------------------------------------------- predicates

namespace {

std::vector<Element> coset(const FiniteGroup& g, Element x, const Subgroup& h)
{
    std::vector<Element> c;
    c.reserve(h.size());
    for (Element y : h.members)
        c.push_back(g.mul(x, y));
    std::sort(c.begin(), c.end());
    return c;
}

unsigned log_p(std::size_t v, unsigned p)
{
    unsigned e = 0;
    while (v > 1) {
        if (v % p != 0)
            throw InvariantError("value is not a power of p");
        v /= p;
        ++e;
    }
    return e;
}

std::size_t ipow(std::size_t b, unsigned e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

bool exponent_divides(const FiniteGroup& g, const Subgroup& h, unsigned p)
{
    return std::all_of(h.members.begin(), h.members.end(), [&](Element x) { return g.power(x, p) == 0; });
}

} // namespace

bool is_camina(const FiniteGroup& g)
{
    Subgroup d = derived_subgroup(g);
    auto cd = conjugacy_classes(g);
    for (const auto& cls : cd.classes) {
        if (std::all_of(cls.begin(), cls.end(), [&](Element x) { return d.contains(x); }))
            continue;
        for (Element x : cls)
            if (coset(g, x, d) != cls)
                return false;
    }
    return true;
}

CaminaPairResult is_camina_pair(const FiniteGroup& g, const Subgroup& k)
{
    if (k.size() <= 1)
        throw PreconditionError("Camina pair requires a nontrivial normal subgroup");
    if (!is_normal(g, k))
        throw PreconditionError("Camina pair requires a normal subgroup");
    const std::size_t n = g.order();
    auto cd = conjugacy_classes(g);
    Quotient q = quotient(g, k);
    auto qcd = conjugacy_classes(q.group);

    CaminaPairResult r;

    r.decision = true;
    for (std::size_t c = 1; c < qcd.size() && r.decision; ++c) {
        std::size_t target = n;
        for (Element x = 0; x < n; ++x) {
            if (qcd.class_of[q.coset_of[x]] != c)
                continue;
            if (target == n)
                target = cd.class_of[x];
            else if (cd.class_of[x] != target) {
                r.decision = false;
                break;
            }
        }
    }

    r.definition = true;
    for (Element x = 0; x < n && r.definition; ++x) {
        if (k.contains(x))
            continue;
        for (Element y : k.members)
            if (cd.class_of[g.mul(x, y)] != cd.class_of[x]) {
                r.definition = false;
                break;
            }
    }

    r.centralizer_orders = true;
    for (Element x = 0; x < n && r.centralizer_orders; ++x)
        if (!k.contains(x))
            r.centralizer_orders = centralizer_order(g, x) == centralizer_order(q.group, q.coset_of[x]);

    r.class_products = true;
    for (std::size_t i = 0; i < cd.size() && r.class_products; ++i) {
        const auto& ci = cd.classes[i];
        if (!std::all_of(ci.begin(), ci.end(), [&](Element x) { return k.contains(x); }))
            continue;
        for (const auto& cj : cd.classes) {
            if (std::all_of(cj.begin(), cj.end(), [&](Element x) { return k.contains(x); }))
                continue;
            std::vector<Element> prod;
            for (Element a : ci)
                for (Element b : cj)
                    prod.push_back(g.mul(a, b));
            std::sort(prod.begin(), prod.end());
            prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
            if (prod != cj) {
                r.class_products = false;
                break;
            }
        }
    }
    return r;
}

CaminaProfile camina_profile(const FiniteGroup& g)
{
    CaminaProfile pr;
    pr.order = g.order();
    auto cd = conjugacy_classes(g);
    pr.class_count = cd.size();
    pr.is_abelian = g.is_abelian();
    pr.is_camina = is_camina(g);
    pr.nilpotency_class = nilpotency_class(g);
    Subgroup z = center(g);
    Subgroup d = derived_subgroup(g);
    pr.center_order = z.size();
    pr.derived_order = d.size();
    pr.center_in_derived = std::all_of(z.members.begin(), z.members.end(), [&](Element x) { return d.contains(x); });

    auto pp = prime_power(g.order());
    if (!pp)
        return pr;
    pr.is_p_group = true;
    pr.p = pp->first;
    const unsigned p = pr.p;
    pr.k = log_p(z.size(), p);
    pr.center_elementary_abelian = exponent_divides(g, z, p);
    pr.is_nonabelian_camina_p_group = pr.is_camina && !pr.is_abelian;

    const unsigned cls = pr.nilpotency_class.value_or(0);
    if (cls == 3) {
        pr.n_param = log_p(d.size() / z.size(), p);
        pr.n_param_valid = pr.n_param > 0 && pr.n_param % 2 == 0 &&
                           g.order() / d.size() == ipow(p, 2 * pr.n_param);
        bool ok = true;
        for (Element a : d.members) {
            if (!z.contains(g.power(a, p)))
                ok = false;
            for (Element b : d.members)
                if (!z.contains(g.commutator(a, b)))
                    ok = false;
        }
        pr.derived_over_center_elementary = ok;
    } else {
        pr.n_param = pp->second;
        pr.n_param_valid = true;
    }

    if (pr.is_nonabelian_camina_p_group && (cls == 2 || cls == 3)) {
        auto series = lower_central_series(g);
        const Subgroup& g2 = series[1];
        const Subgroup& g3 = series[2];
        pr.shapes_checked = true;
        pr.outer_shape = pr.middle_shape = pr.inner_shape = true;
        for (const auto& c : cd.classes) {
            Element x = c.front();
            if (!g2.contains(x))
                pr.outer_shape = pr.outer_shape && coset(g, x, g2) == c;
            else if (!g3.contains(x))
                pr.middle_shape = pr.middle_shape && coset(g, x, g3) == c;
            else
                pr.inner_shape = pr.inner_shape && c.size() == 1;
        }
    }
    return pr;
}

std::string to_string(AcFamily f)
{
    switch (f) {
    case AcFamily::None: return "none";
    case AcFamily::Abelian: return "abelian";
    case AcFamily::FrobeniusAffine: return "frobenius_affine";
    case AcFamily::FrobeniusQ8: return "frobenius_q8";
    case AcFamily::CaminaPGroup: return "camina_p_group";
    }
    return "none";
}

AcFamily classification_family(const FiniteGroup& g)
{
    if (g.is_abelian())
        return AcFamily::Abelian;
    const std::size_t n = g.order();
    if (prime_power(n) && is_camina(g))
        return AcFamily::CaminaPGroup;

    for (unsigned p = 2; p <= n; ++p) {
        if (n % p != 0 || !is_prime(p))
            continue;
        for (std::size_t q = p; q * (q - 1) <= n; q *= p) {
            if (q * (q - 1) != n)
                continue;
            std::vector<Element> sylow;
            for (Element x = 0; x < n; ++x)
                if (prime_power(g.element_order(x)).value_or(std::make_pair(0u, 0u)).first == p || x == 0)
                    sylow.push_back(x);
            if (sylow.size() != q)
                continue;
            Subgroup nsub{sylow, false};
            bool subgroup = true;
            for (Element a : sylow)
                for (Element b : sylow)
                    if (!nsub.contains(g.mul(a, b)))
                        subgroup = false;
            if (!subgroup)
                continue;
            nsub.is_normal = is_normal(g, nsub);
            bool elementary = nsub.is_normal && exponent_divides(g, nsub, p);
            for (Element a : sylow)
                for (Element b : sylow)
                    if (g.mul(a, b) != g.mul(b, a))
                        elementary = false;
            if (!elementary)
                continue;
            bool frobenius = true;
            for (Element x : sylow)
                if (x != 0 && centralizer_order(g, x) != q)
                    frobenius = false;
            if (!frobenius)
                continue;
            Quotient quo = quotient(g, nsub);
            const FiniteGroup& h = quo.group;
            bool cyclic = false;
            std::size_t involutions = 0;
            for (Element x = 0; x < h.order(); ++x) {
                std::size_t o = h.element_order(x);
                if (o == h.order())
                    cyclic = true;
                if (o == 2)
                    ++involutions;
            }
            if (cyclic)
                return AcFamily::FrobeniusAffine;
            if (q == 9 && h.order() == 8 && involutions == 1)
                return AcFamily::FrobeniusQ8;
        }
    }
    return AcFamily::None;
}

} // namespace camina
