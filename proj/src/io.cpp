#include "gcat/io.hpp"

#include <fstream>
#include <sstream>

namespace gcat {

json to_json(const FinMap& f) {
    return json{{"m", f.domain_size()}, {"n", f.codomain_size()}, {"values", f.values()}};
}

FinMap finmap_from_json(const json& j) {
    auto values = j.at("values").get<std::vector<int>>();
    int m = j.at("m").get<int>();
    int n = j.at("n").get<int>();
    if (static_cast<int>(values.size()) != m)
        throw std::invalid_argument("FinMap json: m disagrees with values length");
    return FinMap(std::move(values), n);
}

json to_json(const Element<OsCategory>& v) {
    json terms = json::array();
    for (const auto& [mono, coeff] : v.terms())
        terms.push_back(json{{"mono", to_json(mono.mor)}, {"coord", mono.coord}, {"coeff", coeff}});
    return json{{"target", v.target()}, {"k", v.coords()}, {"p", v.prime()},
                {"level", v.level()}, {"terms", std::move(terms)}};
}

Element<OsCategory> os_element_from_json(const json& j) {
    Element<OsCategory> v(j.at("target").get<int>(), j.at("k").get<int>(), j.at("p").get<int>());
    for (const auto& t : j.at("terms")) {
        FinMap mor = finmap_from_json(t.at("mono"));
        if (mor.codomain_size() != v.target() || !is_ordered_surjection(mor))
            throw std::invalid_argument("element json: monomial is not an ordered surjection to the target");
        v.add_term(Mono<OsCategory>{std::move(mor), t.at("coord").get<int>()},
                   t.at("coeff").get<long long>());
    }
    if (j.contains("level") && !v.zero() && v.level() != j.at("level").get<int>())
        throw std::invalid_argument("element json: stated level disagrees with terms");
    return v;
}

json to_json(const Element<NatMonoid>& v) {
    return json{{"poly", poly_print(element_to_poly(v))}};
}

Element<NatMonoid> nat_element_from_json(const json& j, int p) {
    return poly_to_element(poly_parse(j.at("poly").get<std::string>(), p), p);
}

json to_json(const GroebnerBasis<OsCategory>& gb) {
    json elements = json::array();
    for (const auto& e : gb.elements) elements.push_back(to_json(e));
    return json{{"width", gb.width},   {"category", gb.category}, {"target", gb.target},
                {"k", gb.coords},      {"p", gb.prime},           {"elements", std::move(elements)}};
}

GroebnerBasis<OsCategory> os_basis_from_json(const json& j) {
    GroebnerBasis<OsCategory> gb;
    gb.width = j.at("width").get<int>();
    gb.category = j.value("category", "gamma_os");
    gb.target = j.at("target").get<int>();
    gb.coords = j.at("k").get<int>();
    gb.prime = j.at("p").get<int>();
    for (const auto& e : j.at("elements")) gb.elements.push_back(os_element_from_json(e));
    return gb;
}

json to_json(const GroebnerBasis<NatMonoid>& gb) {
    json elements = json::array();
    for (const auto& e : gb.elements) elements.push_back(to_json(e));
    return json{{"width", gb.width}, {"category", gb.category}, {"k", gb.coords},
                {"p", gb.prime},     {"elements", std::move(elements)}};
}

GroebnerBasis<NatMonoid> nat_basis_from_json(const json& j) {
    GroebnerBasis<NatMonoid> gb;
    gb.width = j.at("width").get<int>();
    gb.category = j.value("category", "nat_monoid");
    gb.coords = j.value("k", 1);
    gb.prime = j.at("p").get<int>();
    for (const auto& e : j.at("elements"))
        gb.elements.push_back(nat_element_from_json(e, gb.prime));
    return gb;
}

json to_json(const ZqMatrix& mx) {
    json entries = json::array();
    for (int r = 0; r < mx.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < mx.cols(); ++c) row.push_back(mx.at(r, c));
        entries.push_back(std::move(row));
    }
    return json{{"q", mx.modulus()}, {"rows", mx.rows()}, {"cols", mx.cols()},
                {"entries", std::move(entries)}};
}

ZqMatrix zq_matrix_from_json(const json& j) {
    ZqMatrix mx(j.at("rows").get<int>(), j.at("cols").get<int>(), j.at("q").get<int>());
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != mx.rows())
        throw std::invalid_argument("matrix json: row count mismatch");
    for (int r = 0; r < mx.rows(); ++r) {
        const auto& row = entries[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != mx.cols())
            throw std::invalid_argument("matrix json: column count mismatch");
        for (int c = 0; c < mx.cols(); ++c) mx.set(r, c, row[static_cast<std::size_t>(c)].get<int>());
    }
    return mx;
}

namespace {

template <CategoryOracle Cat>
json violation_to_json(const AdmissibilityViolation<Cat>& v) {
    json j{{"kind", violation_kind_name(v.kind)}};
    if constexpr (std::is_same_v<typename Cat::Morphism, FinMap>) {
        j["f"] = to_json(v.f);
        j["g"] = to_json(v.g);
        if (v.has_extra) j["e"] = to_json(v.extra);
    } else {
        j["f"] = v.f;
        j["g"] = v.g;
        if (v.has_extra) j["e"] = v.extra;
    }
    return j;
}

template <CategoryOracle Cat>
json report_to_json(const AdmissibilityReport<Cat>& report) {
    json axiom1 = json::array();
    for (const auto& v : report.axiom1) axiom1.push_back(violation_to_json<Cat>(v));
    json axiom2 = json::array();
    for (const auto& v : report.axiom2) axiom2.push_back(violation_to_json<Cat>(v));
    json cancellation = json::array();
    for (const auto& v : report.cancellation) cancellation.push_back(violation_to_json<Cat>(v));
    return json{{"bound", report.bound},
                {"pairs_checked", report.pairs_checked},
                {"actions_checked", report.actions_checked},
                {"pass", report.pass()},
                {"axiom1_violations", std::move(axiom1)},
                {"axiom2_violations", std::move(axiom2)},
                {"cancellation_violations", std::move(cancellation)}};
}

} // namespace

json to_json(const AdmissibilityReport<OsCategory>& report) { return report_to_json(report); }
json to_json(const AdmissibilityReport<NatMonoid>& report) { return report_to_json(report); }

json hilbert_rows_to_json(const std::vector<HilbertRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back(json{{"level", r.level},
                           {"dim_standard_monomials", r.standard_monomials},
                           {"dim_rank_oracle", r.rank},
                           {"agree", r.agree() ? 1 : 0}});
    return out;
}

std::string hilbert_rows_to_csv(const std::vector<HilbertRow>& rows) {
    std::ostringstream out;
    out << "level,dim_standard_monomials,dim_rank_oracle,agree\n";
    for (const auto& r : rows)
        out << r.level << ',' << r.standard_monomials << ',' << r.rank << ','
            << (r.agree() ? 1 : 0) << '\n';
    return out.str();
}

std::vector<FinMap> finmap_sequence_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("sequence json: expected a list of maps");
    std::vector<FinMap> out;
    for (const auto& item : j) out.push_back(finmap_from_json(item));
    return out;
}

json to_json(const std::vector<FinMap>& maps) {
    json out = json::array();
    for (const auto& f : maps) out.push_back(to_json(f));
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json read_json_file(const std::filesystem::path& path) {
    return json::parse(read_text_file(path));
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
    out << content;
}

} // namespace gcat
