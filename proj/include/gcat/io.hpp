#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gcat/admissible.hpp"
#include "gcat/base_change.hpp"
#include "gcat/groebner.hpp"
#include "gcat/polynomial.hpp"
#include "gcat/rank_oracle.hpp"

namespace gcat {

using json = nlohmann::json;

json to_json(const FinMap& f);
FinMap finmap_from_json(const json& j);

json to_json(const Element<OsCategory>& v);
Element<OsCategory> os_element_from_json(const json& j);

/// Monoid elements travel as {"poly": "..."}; the characteristic comes from
/// the surrounding context.
json to_json(const Element<NatMonoid>& v);
Element<NatMonoid> nat_element_from_json(const json& j, int p);

json to_json(const GroebnerBasis<OsCategory>& gb);
GroebnerBasis<OsCategory> os_basis_from_json(const json& j);

json to_json(const GroebnerBasis<NatMonoid>& gb);
GroebnerBasis<NatMonoid> nat_basis_from_json(const json& j);

json to_json(const ZqMatrix& mx);
ZqMatrix zq_matrix_from_json(const json& j);

json to_json(const AdmissibilityReport<OsCategory>& report);
json to_json(const AdmissibilityReport<NatMonoid>& report);

json hilbert_rows_to_json(const std::vector<HilbertRow>& rows);
std::string hilbert_rows_to_csv(const std::vector<HilbertRow>& rows);

std::vector<FinMap> finmap_sequence_from_json(const json& j);
json to_json(const std::vector<FinMap>& maps);

std::string read_text_file(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace gcat
