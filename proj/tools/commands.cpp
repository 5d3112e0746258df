#include "commands.hpp"

#include <cstdint>
#include <optional>

#include <CLI11.hpp>

#include "fibercalc/error.hpp"
#include "fibercalc/report.hpp"
#include "fibercalc/scene.hpp"

namespace fibercalc::cli {

namespace {

constexpr int kUsageExit = 4;

void emit(std::ostream& out, const nlohmann::json& report, bool json) {
    out << (json ? canonical_dump(report) : render_text(report));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of fibered links: Hopf invariants, stabilization-height "
                 "bounds, homological monodromy and commutator certificates",
                 "fibercalc"};
    app.require_subcommand(1);

    std::string scene_path;
    bool json = false;
    std::int64_t n_from = 0, n_to = 0, n = 0, chi = 0, hopf = 0;
    std::optional<std::int64_t> cl0, budget;

    auto* inv = app.add_subcommand("invariants", "chi, b1, H, d3, lambda, mirror H and height bound");
    inv->add_option("scene", scene_path, "scene file")->required();
    inv->add_flag("--json", json, "canonical JSON output");

    auto* table = app.add_subcommand("family-table", "invariants of the twisted family over a range of n");
    table->add_option("scene", scene_path, "scene file")->required();
    table->add_option("--from", n_from, "first n")->required();
    table->add_option("--to", n_to, "last n")->required();
    table->add_flag("--json", json, "canonical JSON output");

    auto* alex = app.add_subcommand("alexander", "characteristic polynomial of the homological monodromy");
    alex->add_option("scene", scene_path, "scene file")->required();
    alex->add_flag("--json", json, "canonical JSON output");

    auto* cert = app.add_subcommand("certify", "homological single-commutator certificate and scl bound");
    cert->add_option("scene", scene_path, "scene file")->required();
    cert->add_option("-n", n, "twisting order")->required();
    cert->add_option("--cl0", cl0, "upper bound on cl(psi_0)");
    cert->add_flag("--json", json, "canonical JSON output");

    auto* bound = app.add_subcommand("bound", "stabilization-height lower bound for a (chi, H) state");
    bound->add_option("--chi", chi, "euler characteristic")->required();
    bound->add_option("--hopf", hopf, "Hopf invariant")->required();
    bound->add_option("--budget", budget, "also run the exhaustive oracle up to this b1 growth");
    bound->add_flag("--json", json, "canonical JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "fibercalc: " << e.what() << "\n";
        return kUsageExit;
    }

    try {
        if (inv->parsed()) {
            emit(out, invariants_report(load_scene(scene_path)), json);
        } else if (table->parsed()) {
            emit(out, family_table_report(load_scene(scene_path).to_family(), n_from, n_to), json);
        } else if (alex->parsed()) {
            emit(out, alexander_report(load_scene(scene_path)), json);
        } else if (cert->parsed()) {
            emit(out, certify_report(load_scene(scene_path).to_family(), n, cl0), json);
        } else if (bound->parsed()) {
            emit(out, bound_report(chi, hopf, budget), json);
        }
    } catch (const Error& e) {
        err << "fibercalc: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    }
    return 0;
}

}  // namespace fibercalc::cli
