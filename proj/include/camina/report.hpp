#pragma once

#include "camina/idempotents.hpp"

#include <json.hpp>

namespace camina {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/* power-basis coefficients as "num/den" strings */
Json to_json(const CycloScalar& s);
/* {"p", "rows", "cols", "entries": [[[coeffs...], ...], ...]} */
Json to_json(const CycloMatrix& m);
CycloMatrix matrix_from_json(const Json& j);

Json to_json(const CaminaProfile& p);
Json to_json(const CaminaPairResult& r);
Json to_json(const IdempotentLabel& l);
/* per-check arrays of {case, indices, pass} plus a passed/total summary */
Json to_json(const VerificationReport& r);
Json to_json(const WedderburnReport& r);

Json class_sizes_json(const ConjugacyData& c);
Json scheme_json(const GroupScheme& s, const IntersectionTensor& t, const AcResult& ac);
Json ordering_json(const TerwilligerContext& ctx);
Json inventory_json(const TerwilligerContext& ctx, const std::vector<Idempotent>& inv, bool include_matrices);
Json synthetic_json(const SyntheticClass3& s, const SyntheticReport& r);

/* fixed-width "name  passed/total" lines */
std::string summary_table(const VerificationReport& r);

} // namespace camina
