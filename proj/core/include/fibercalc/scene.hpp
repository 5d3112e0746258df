#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fibercalc/family.hpp"
#include "fibercalc/fiber_state.hpp"
#include "fibercalc/homology.hpp"

namespace fibercalc {

inline constexpr std::string_view kSceneSchema = "fibercalc-scene/1";
inline constexpr std::string_view kReportSchema = "fibercalc-report/1";

struct FamilySpec {
    std::string loop1;
    std::string loop2;
    HopfUpdatePolicy policy;
    std::string twist_type = "unspecified";
};

// A scene file: optional surface data, named curves, a monodromy word, an
// optional (chi, H) state and an optional twisted-family block.
struct Scene {
    std::string label;
    std::optional<std::size_t> genus;
    std::optional<CurveTable> curves;
    MonodromyWord word;
    std::optional<FiberState> state;
    std::optional<FamilySpec> family;

    // Throws FeasibilityError when the scene has no family block.
    FiberedFamily to_family() const;
    // Throws FeasibilityError when genus or curves are absent.
    const CurveTable& require_curves() const;
};

// Syntax errors and schema violations (unknown or mistyped fields) raise
// ParseError; values that break a type invariant raise DomainError.
Scene parse_scene(std::string_view text);
Scene load_scene(const std::filesystem::path& path);

nlohmann::json scene_to_json(const Scene& scene);

}  // namespace fibercalc
