#include "fibercalc/scene.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fibercalc/error.hpp"

namespace fibercalc {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
    throw ParseError("scene" + path + ": " + msg);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : obj.items())
        if (!ok.count(key)) schema_error(path, "unknown field '" + key + "'");
}

const json& require(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(path, std::string("missing field '") + key + "'");
    return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) schema_error(path, "expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        schema_error(path, "integer out of range");
    return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) schema_error(path, "expected a string");
    return v.get<std::string>();
}

const json& as_object(const json& v, const std::string& path) {
    if (!v.is_object()) schema_error(path, "expected an object");
    return v;
}

const json& as_array(const json& v, const std::string& path) {
    if (!v.is_array()) schema_error(path, "expected an array");
    return v;
}

HopfUpdatePolicy parse_policy(const json& v, const std::string& path) {
    if (v.is_string()) {
        if (v.get<std::string>() == "preserve") return HopfUpdatePolicy::preserve();
        schema_error(path, "unknown policy '" + v.get<std::string>() + "'");
    }
    as_object(v, path);
    reject_unknown(v, path, {"quadratic"});
    const json& q = as_array(require(v, path, "quadratic"), path + "/quadratic");
    if (q.size() != 3) schema_error(path + "/quadratic", "expected [c2, c1, c0]");
    return HopfUpdatePolicy::quadratic(as_int(q[0], path + "/quadratic/0"),
                                       as_int(q[1], path + "/quadratic/1"),
                                       as_int(q[2], path + "/quadratic/2"));
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json big_to_json(const BigInt& v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
    return v.str();
}

}  // namespace

const CurveTable& Scene::require_curves() const {
    if (!curves) throw FeasibilityError("scene has no genus/curves block");
    return *curves;
}

FiberedFamily Scene::to_family() const {
    if (!family) throw FeasibilityError("scene has no family block");
    if (!state) throw FeasibilityError("family scenes need a state block");
    FiberedFamily fam;
    fam.base_state = *state;
    fam.base_word = word;
    fam.loop1 = family->loop1;
    fam.loop2 = family->loop2;
    fam.policy = family->policy;
    fam.scene = require_curves();
    fam.twist_type = family->twist_type;
    fam.validate();
    return fam;
}

Scene parse_scene(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte);
        std::ostringstream os;
        os << "JSON syntax error at line " << line << ", column " << column << ": " << e.what();
        throw ParseError(os.str(), line, column);
    }
    as_object(root, "");
    reject_unknown(root, "", {"schema", "label", "genus", "curves", "word", "state", "family"});
    if (as_string(require(root, "", "schema"), "/schema") != kSceneSchema)
        schema_error("/schema", "expected \"" + std::string(kSceneSchema) + "\"");

    Scene scene;
    if (root.contains("label")) scene.label = as_string(root["label"], "/label");

    if (root.contains("genus")) {
        std::int64_t g = as_int(root["genus"], "/genus");
        if (g < 1) throw DomainError("scene genus must be positive, got " + std::to_string(g));
        scene.genus = static_cast<std::size_t>(g);
        scene.curves = CurveTable(*scene.genus);
    }

    if (root.contains("curves")) {
        const json& arr = as_array(root["curves"], "/curves");
        if (!arr.empty() && !scene.curves) throw DomainError("curves given without a genus");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "/curves/" + std::to_string(i);
            const json& c = as_object(arr[i], path);
            reject_unknown(c, path, {"name", "class"});
            std::string name = as_string(require(c, path, "name"), path + "/name");
            const json& cls = as_array(require(c, path, "class"), path + "/class");
            IntVector v;
            for (std::size_t k = 0; k < cls.size(); ++k)
                v.emplace_back(as_int(cls[k], path + "/class/" + std::to_string(k)));
            if (v.size() != 2 * *scene.genus) {
                std::ostringstream os;
                os << "GenusMismatch: curve '" << name << "' has " << v.size()
                   << " coordinates, genus " << *scene.genus << " needs " << 2 * *scene.genus;
                throw DomainError(os.str());
            }
            scene.curves->add(std::move(name), HomologyClass(std::move(v)));
        }
    }

    if (root.contains("word")) {
        const json& arr = as_array(root["word"], "/word");
        std::vector<WordLetter> letters;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "/word/" + std::to_string(i);
            const json& l = as_object(arr[i], path);
            reject_unknown(l, path, {"curve", "power"});
            WordLetter letter{as_string(require(l, path, "curve"), path + "/curve"),
                              l.contains("power") ? as_int(l["power"], path + "/power") : 1};
            if (!scene.curves) throw DomainError("word given without a genus/curves block");
            scene.curves->at(letter.curve);
            letters.push_back(std::move(letter));
        }
        scene.word = MonodromyWord(std::move(letters));
    }

    if (root.contains("state")) {
        const json& s = as_object(root["state"], "/state");
        reject_unknown(s, "/state", {"chi", "hopf"});
        std::int64_t chi = as_int(require(s, "/state", "chi"), "/state/chi");
        std::int64_t hopf = as_int(require(s, "/state", "hopf"), "/state/hopf");
        scene.state = FiberState(chi, hopf, scene.label);
        if (scene.genus) Surface::from_genus_and_euler(static_cast<std::int64_t>(*scene.genus), chi);
    }

    if (root.contains("family")) {
        const json& f = as_object(root["family"], "/family");
        reject_unknown(f, "/family", {"loop1", "loop2", "policy", "twist_type"});
        FamilySpec spec;
        spec.loop1 = as_string(require(f, "/family", "loop1"), "/family/loop1");
        spec.loop2 = as_string(require(f, "/family", "loop2"), "/family/loop2");
        spec.policy = parse_policy(require(f, "/family", "policy"), "/family/policy");
        if (f.contains("twist_type")) spec.twist_type = as_string(f["twist_type"], "/family/twist_type");
        scene.family = std::move(spec);
        // Surface invariant violations (missing loops, bad policy) now.
        scene.to_family();
    }
    return scene;
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open scene file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

json scene_to_json(const Scene& scene) {
    json j;
    j["schema"] = kSceneSchema;
    if (!scene.label.empty()) j["label"] = scene.label;
    if (scene.genus) j["genus"] = *scene.genus;
    if (scene.curves) {
        json arr = json::array();
        for (const auto& c : scene.curves->curves()) {
            json cls = json::array();
            for (const auto& x : c.homology.coords()) cls.push_back(big_to_json(x));
            arr.push_back({{"name", c.name}, {"class", cls}});
        }
        j["curves"] = arr;
    }
    json word = json::array();
    for (const auto& l : scene.word.letters()) word.push_back({{"curve", l.curve}, {"power", l.exponent}});
    j["word"] = word;
    if (scene.state) j["state"] = {{"chi", scene.state->euler_char}, {"hopf", scene.state->hopf}};
    if (scene.family) {
        json f{{"loop1", scene.family->loop1},
               {"loop2", scene.family->loop2},
               {"twist_type", scene.family->twist_type}};
        if (const auto* q = scene.family->policy.as_quadratic())
            f["policy"] = {{"quadratic", {q->c2, q->c1, q->c0}}};
        else
            f["policy"] = "preserve";
        j["family"] = f;
    }
    return j;
}

}  // namespace fibercalc
