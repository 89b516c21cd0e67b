#include "camina/report.hpp"

#include "camina/error.hpp"

#include <iomanip>
#include <sstream>

namespace camina {

Json to_json(const CycloScalar& s)
{
    Json a = Json::array();
    for (const auto& c : s.coeffs())
        a.push_back(rational_to_string(c));
    return a;
}

Json to_json(const CycloMatrix& m)
{
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Json e = Json::array();
            for (const auto& x : m.entry(r, c))
                e.push_back(rational_to_string(x));
            row.push_back(std::move(e));
        }
        entries.push_back(std::move(row));
    }
    return Json{{"p", m.prime()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CycloMatrix matrix_from_json(const Json& j)
{
    try {
        const unsigned p = j.at("p").get<unsigned>();
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const Json& e = j.at("entries");
        if (!is_prime(p) || e.size() != rows)
            throw ValidationError("matrix JSON: bad prime or row count");
        CycloMatrix m(rows, cols, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (e[r].size() != cols)
                throw ValidationError("matrix JSON: bad column count", static_cast<long>(r));
            for (std::size_t c = 0; c < cols; ++c) {
                const Json& coeffs = e[r][c];
                if (coeffs.size() != p - 1)
                    throw ValidationError("matrix JSON: entry needs p-1 coefficients", static_cast<long>(r),
                                          static_cast<long>(c));
                auto dst = m.entry(r, c);
                for (std::size_t t = 0; t + 1 < p; ++t)
                    dst[t] = parse_rational(coeffs[t].get<std::string>());
            }
        }
        return m;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("matrix JSON: ") + ex.what());
    }
}

Json to_json(const CaminaProfile& p)
{
    Json j;
    j["order"] = p.order;
    j["class_count"] = p.class_count;
    j["is_abelian"] = p.is_abelian;
    j["is_camina"] = p.is_camina;
    j["is_p_group"] = p.is_p_group;
    j["p"] = p.is_p_group ? Json(p.p) : Json(nullptr);
    if (!p.nilpotency_class)
        j["nilpotency_class"] = "not nilpotent";
    else if (*p.nilpotency_class <= 1)
        j["nilpotency_class"] = "abelian";
    else
        j["nilpotency_class"] = *p.nilpotency_class;
    j["center_order"] = p.center_order;
    j["derived_order"] = p.derived_order;
    j["k"] = p.k;
    j["n_param"] = p.n_param;
    j["is_nonabelian_camina_p_group"] = p.is_nonabelian_camina_p_group;
    j["center_elementary_abelian"] = p.center_elementary_abelian;
    j["center_in_derived"] = p.center_in_derived;
    j["derived_over_center_elementary"] = p.derived_over_center_elementary;
    j["n_param_valid"] = p.n_param_valid;
    if (p.shapes_checked)
        j["class_shapes"] = Json{{"outer", p.outer_shape}, {"middle", p.middle_shape}, {"inner", p.inner_shape}};
    return j;
}

Json to_json(const CaminaPairResult& r)
{
    return Json{{"decision", r.decision},
                {"definition", r.definition},
                {"centralizer_orders", r.centralizer_orders},
                {"class_products", r.class_products},
                {"conditions_agree", r.agree()}};
}

Json to_json(const IdempotentLabel& l)
{
    return Json{{"family", to_string(l.family)}, {"class", l.class_index}, {"alpha", l.alpha}};
}

Json to_json(const VerificationReport& r)
{
    Json checks = Json::object();
    for (const auto& e : r.entries)
        checks[e.check].push_back(Json{{"case", e.case_label}, {"indices", e.indices}, {"pass", e.pass}});
    Json summary = Json::object();
    for (const auto& [name, counts] : r.summary())
        summary[name] = Json{{"passed", counts.first}, {"total", counts.second}};
    return Json{{"all_pass", r.all_pass()}, {"summary", std::move(summary)}, {"checks", std::move(checks)}};
}

Json to_json(const WedderburnReport& r)
{
    Json j;
    j["dim_T"] = r.dim_T;
    j["dim_formula"] = r.dim_formula;
    j["dim_closure"] = r.dim_closure ? Json(*r.dim_closure) : Json(nullptr);
    j["dim_primary"] = r.dim_primary;
    j["one_dim_ideal_count"] = r.one_dim_ideal_count;
    j["expected_count"] = r.expected_count;
    j["class_count"] = r.class_count;
    Json inv = Json::array();
    for (const auto& l : r.idempotent_inventory)
        inv.push_back(to_json(l));
    j["idempotent_inventory"] = std::move(inv);
    j["checks"] = r.checks;
    j["all_pass"] = r.all_pass();
    Json failures = Json::array();
    for (const auto& e : r.details.entries)
        if (!e.pass)
            failures.push_back(Json{{"check", e.check}, {"case", e.case_label}, {"indices", e.indices}});
    j["failures"] = std::move(failures);
    return j;
}

Json class_sizes_json(const ConjugacyData& c)
{
    Json a = Json::array();
    for (const auto& cls : c.classes)
        a.push_back(cls.size());
    return a;
}

Json scheme_json(const GroupScheme& s, const IntersectionTensor& t, const AcResult& ac)
{
    Json j;
    j["classes"] = class_sizes_json(s.conj);
    j["d"] = s.d;
    j["almost_commutative"] = ac.almost_commutative;
    if (ac.certificate)
        j["certificate"] = Json{{"h", ac.certificate->h}, {"i", ac.certificate->i}, {"nonzero_j", ac.certificate->nonzero_j}};
    j["nonzero_triples"] = t.nonzero_triples();
    return j;
}

Json ordering_json(const TerwilligerContext& ctx)
{
    Json j;
    j["order"] = ctx.ordering().order;
    j["class_offsets"] = ctx.ordering().class_offset;
    Json kinds = Json::array();
    for (std::size_t i = 0; i < ctx.class_count(); ++i)
        kinds.push_back(to_string(ctx.kind(i)));
    j["class_kinds"] = std::move(kinds);
    if (const auto& g = ctx.ordering().generators)
        j["generators"] = Json{{"p", g->p}, {"z", g->z}, {"g", g->g}};
    return j;
}

Json inventory_json(const TerwilligerContext& ctx, const std::vector<Idempotent>& inv, bool include_matrices)
{
    Json a = Json::array();
    for (const auto& e : inv) {
        Json j = to_json(e.label);
        j["offset"] = ctx.class_offset(e.label.class_index);
        if (include_matrices)
            j["block"] = to_json(e.block);
        a.push_back(std::move(j));
    }
    return a;
}

Json synthetic_json(const SyntheticClass3& s, const SyntheticReport& r)
{
    Json j;
    j["p"] = s.p;
    j["n"] = s.n;
    j["k"] = s.k;
    j["twisted"] = s.twisted;
    j["block_size"] = s.outer.size();
    j["middle_classes"] = r.middle_classes;
    j["z_generators"] = s.layout.z_gens;
    j["g_generators"] = s.layout.g_gens;
    j["counts"] = Json{{"W_per_middle_class", r.middle_classes ? r.w_count / r.middle_classes : 0},
                       {"X", r.x_count},
                       {"Y", r.y_count}};
    j["lemmas"] = to_json(r.lemmas);
    j["idempotents"] = to_json(r.idempotents);
    j["all_pass"] = r.all_pass();
    return j;
}

std::string summary_table(const VerificationReport& r)
{
    std::ostringstream os;
    for (const auto& [name, counts] : r.summary())
        os << "  " << std::left << std::setw(36) << name << std::right << std::setw(8) << counts.first << "/"
           << counts.second << (counts.first == counts.second ? "" : "  FAIL") << "\n";
    return os.str();
}

} // namespace camina
