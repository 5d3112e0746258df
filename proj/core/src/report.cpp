#include "fibercalc/report.hpp"

#include <sstream>

#include "fibercalc/certificates.hpp"
#include "fibercalc/error.hpp"
#include "fibercalc/ledger.hpp"

namespace fibercalc {

using nlohmann::json;

namespace {

json header(const char* command) {
    return {{"schema", kReportSchema}, {"command", command}};
}

json record_json(const StabilizationRecord& r) {
    return {{"alpha_plus", r.alpha_plus},
            {"alpha_minus", r.alpha_minus},
            {"beta_plus", r.beta_plus},
            {"beta_minus", r.beta_minus}};
}

std::string half_text(const json& h) {
    std::ostringstream os;
    os << h.at("num").get<std::int64_t>();
    if (h.at("den").get<std::int64_t>() != 1) os << "/" << h.at("den").get<std::int64_t>();
    return os.str();
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object() && v.contains("num")) return half_text(v);
    return v.dump();
}

void render_matrix(std::ostringstream& os, const char* name, const json& m) {
    os << name << ":\n";
    for (const auto& row : m) {
        os << "  [";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << scalar_text(row[j]);
        os << "]\n";
    }
}

}  // namespace

json to_json(const BigInt& v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
    return v.str();
}

json to_json(HalfInteger h) { return {{"num", h.numerator()}, {"den", h.denominator()}}; }

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (const auto& x : m.row(i)) row.push_back(to_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

json invariants_report(const Scene& scene) {
    if (!scene.state) throw FeasibilityError("scene has no state block");
    const FiberState& s = *scene.state;
    const FiberState m = mirror(s);
    json j = header("invariants");
    j["label"] = scene.label;
    j["chi"] = s.euler_char;
    j["hopf"] = s.hopf;
    j["d3"] = to_json(d3(s));
    j["lambda"] = lambda_invariant(s);
    j["mirror_hopf"] = m.hopf;
    j["height_lower_bound"] = height_lower_bound(s);
    if (scene.genus) {
        Surface surf = Surface::from_genus_and_euler(static_cast<std::int64_t>(*scene.genus), s.euler_char);
        j["genus"] = surf.genus();
        j["boundary_components"] = surf.boundary_components();
        j["b1"] = surf.first_betti();
    }
    return j;
}

json family_table_report(const FiberedFamily& fam, std::int64_t n_from, std::int64_t n_to) {
    json rows = json::array();
    for (const auto& r : family_table(fam, n_from, n_to)) {
        rows.push_back({{"n", r.n},
                        {"hopf", r.hopf},
                        {"d3", to_json(r.d3)},
                        {"lambda", r.lambda},
                        {"h_lower_bound", r.height_lb},
                        {"word_length", r.word_length}});
    }
    json j = header("family-table");
    j["label"] = fam.base_state.label;
    j["chi"] = fam.base_state.euler_char;
    j["twist_type"] = fam.twist_type;
    j["homological_placeholder"] = fam.homological_placeholder;
    j["from"] = n_from;
    j["to"] = n_to;
    j["rows"] = std::move(rows);
    j["note"] = "h_lower_bound is a lower bound on the stabilization height, not its value";
    return j;
}

json alexander_report(const Scene& scene) {
    const CurveTable& curves = scene.require_curves();
    for (const auto& c : curves.curves()) {
        if (!c.homology.is_zero() && !c.homology.is_primitive())
            throw DomainError("NotPrimitive: curve '" + c.name + "' is neither primitive nor separating");
    }
    SymplecticMatrix m = evaluate_word(scene.word, curves);
    AlexanderReport a = alexander_polynomial(m);
    json j = header("alexander");
    j["label"] = scene.label;
    j["genus"] = curves.genus();
    j["monodromy"] = to_json(m.matrix());
    j["coefficients"] = to_json(a.normalized);
    j["laurent_shift"] = a.laurent_shift;
    j["delta_at_1"] = to_json(a.at_one);
    j["delta_at_minus_1"] = to_json(a.at_minus_one);
    j["palindromic"] = a.normalized.is_palindromic();
    return j;
}

json certify_report(const FiberedFamily& fam, std::int64_t n, std::optional<std::int64_t> cl0) {
    SclBoundReport r = scl_upper_bound(fam, n, cl0);
    const CommutatorCertificate& c = r.certificate;
    json j = header("certify");
    j["label"] = fam.base_state.label;
    j["n"] = n;
    j["loop1"] = fam.loop1;
    j["loop2"] = fam.loop2;
    j["transporter"] = to_json(c.transporter.matrix());
    j["lhs"] = to_json(c.lhs.matrix());
    j["rhs"] = to_json(c.rhs.matrix());
    j["verified"] = c.verified;
    j["certificate_kind"] = "homological certificate";
    j["bound_form"] = r.bound_form;
    j["numeric_bound"] = r.numeric_bound ? json(*r.numeric_bound) : json(nullptr);
    j["uniform_in_n"] = r.uniform_in_n;
    j["remark"] =
        "cl(ψ₀) is an input; a single Dehn twist is never a single commutator (Korkmaz-Ozbagci)";
    return j;
}

json bound_report(std::int64_t chi, std::int64_t hopf, std::optional<std::int64_t> budget) {
    FiberState s(chi, hopf);
    json j = header("bound");
    j["chi"] = chi;
    j["hopf"] = hopf;
    j["mirror_hopf"] = mirror(s).hopf;
    j["closed_form"] = height_lower_bound(s);
    if (budget) {
        BoundReport b = height_lower_bound_oracle(s, *budget);
        j["budget"] = *budget;
        j["brute_force"] = *b.brute_force;
        j["witness"] = record_json(*b.witness);
    }
    return j;
}

std::string canonical_dump(const json& report) { return report.dump() + "\n"; }

std::string render_text(const json& report) {
    std::ostringstream os;
    const std::string cmd = report.at("command").get<std::string>();
    if (cmd == "family-table") {
        os << "family " << report.at("label").get<std::string>() << " (chi = " << report.at("chi")
           << ", twist type " << report.at("twist_type").get<std::string>() << ")\n";
        os << "n | H | d3 | lambda | h_lower_bound\n";
        for (const auto& r : report.at("rows")) {
            os << r.at("n") << " | " << r.at("hopf") << " | " << half_text(r.at("d3")) << " | "
               << r.at("lambda") << " | " << r.at("h_lower_bound") << "\n";
        }
        os << report.at("note").get<std::string>() << "\n";
        return os.str();
    }
    for (const auto& [key, value] : report.items()) {
        if (key == "schema" || key == "command") continue;
        if (key == "transporter" || key == "lhs" || key == "rhs" || key == "monodromy") {
            render_matrix(os, key.c_str(), value);
        } else if (key == "witness") {
            os << "witness: (" << value.at("alpha_plus") << ", " << value.at("alpha_minus") << ", "
               << value.at("beta_plus") << ", " << value.at("beta_minus") << ")\n";
        } else if (value.is_array()) {
            os << key << ": [";
            for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
            os << "]\n";
        } else {
            os << key << ": " << scalar_text(value) << "\n";
        }
    }
    return os.str();
}

}  // namespace fibercalc
