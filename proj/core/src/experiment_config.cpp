#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wrlab/error.hpp"
#include "wrlab/experiment.hpp"

namespace wrlab {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& what)
{
    fail(Errc::ConfigError, what);
}

template <typename Enum, std::size_t N>
Enum parse_enum(const json& j, const char* key, const std::pair<std::string_view, Enum> (&table)[N])
{
    const std::string name = j.get<std::string>();
    for (const auto& [text, value] : table)
        if (text == name)
            return value;
    config_error(std::string("unknown ") + key + " '" + name + "'");
}

constexpr std::pair<std::string_view, Method> kMethods[] = {
    {"DNWR", Method::Dnwr}, {"NNWR", Method::Nnwr}, {"NNWR2D", Method::Nnwr2D}, {"SWR", Method::Swr}};
constexpr std::pair<std::string_view, KappaSelector> kKappas[] = {
    {"one", KappaSelector::One}, {"one_plus_exp", KappaSelector::OnePlusExp}};
constexpr std::pair<std::string_view, ProblemSelector> kProblems[] = {
    {"model", ProblemSelector::Model}, {"error_equations", ProblemSelector::ErrorEquations}};
constexpr std::pair<std::string_view, GuessSelector> kGuesses[] = {
    {"t_squared", GuessSelector::TSquared}, {"zero", GuessSelector::Zero}};
constexpr std::pair<std::string_view, SwrOrdering> kOrderings[] = {
    {"gauss_seidel", SwrOrdering::GaussSeidel}, {"jacobi", SwrOrdering::Jacobi}};
constexpr std::pair<std::string_view, BoundMode> kBounds[] = {
    {"superlinear", BoundMode::Superlinear}, {"linear", BoundMode::Linear}, {"none", BoundMode::None}};

const std::vector<std::string> kKnownKeys = {
    "method", "domain", "interfaces", "a", "widths", "dx", "dt", "T", "thetas", "theta",
    "kappa", "problem", "initial_guess", "max_iters", "tol", "n_y", "overlap",
    "swr_ordering", "bound", "geometry_id", "output"};

ExperimentConfig from_json(const json& j)
{
    if (!j.is_object())
        config_error("config must be a JSON object");
    for (const auto& item : j.items())
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), item.key()) == kKnownKeys.end())
            config_error("unknown config key '" + item.key() + "'");

    ExperimentConfig c;
    if (j.contains("method"))
        c.method = parse_enum(j.at("method"), "method", kMethods);
    if (j.contains("domain")) {
        const auto d = j.at("domain").get<std::vector<double>>();
        if (d.size() != 2)
            config_error("domain must be [x_left, x_right]");
        c.x_left = d[0];
        c.x_right = d[1];
    }
    const int placements = int(j.contains("interfaces")) + int(j.contains("a")) + int(j.contains("widths"));
    if (placements > 1)
        config_error("give only one of interfaces, a, widths");
    if (j.contains("interfaces"))
        c.interfaces = j.at("interfaces").get<std::vector<double>>();
    if (j.contains("a"))
        c.interfaces = {c.x_left + j.at("a").get<double>()};
    if (j.contains("widths")) {
        const auto w = j.at("widths").get<std::vector<double>>();
        if (w.size() < 2)
            config_error("widths needs at least two entries");
        c.interfaces.clear();
        double x = c.x_left;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            c.interfaces.push_back(x += w[i]);
    }
    if (j.contains("dx")) c.dx = j.at("dx").get<double>();
    if (j.contains("dt")) c.dt = j.at("dt").get<double>();
    if (j.contains("T")) c.t_final = j.at("T").get<double>();
    if (j.contains("thetas") && j.contains("theta"))
        config_error("give only one of theta, thetas");
    if (j.contains("thetas")) c.thetas = j.at("thetas").get<std::vector<double>>();
    if (j.contains("theta")) c.thetas = {j.at("theta").get<double>()};
    if (j.contains("kappa")) c.kappa = parse_enum(j.at("kappa"), "kappa", kKappas);
    if (j.contains("problem")) c.problem = parse_enum(j.at("problem"), "problem", kProblems);
    if (j.contains("initial_guess")) {
        const json& g = j.at("initial_guess");
        if (g.is_object()) {
            if (!g.contains("custom") || g.size() != 1)
                config_error("initial_guess object must be {\"custom\": [...]}");
            c.guess = GuessSelector::Custom;
            c.custom_guess = g.at("custom").get<std::vector<double>>();
        } else {
            c.guess = parse_enum(g, "initial_guess", kGuesses);
        }
    }
    if (j.contains("max_iters")) c.max_iters = j.at("max_iters").get<int>();
    if (j.contains("tol")) c.tol = j.at("tol").get<double>();
    if (j.contains("n_y")) c.n_y = j.at("n_y").get<int>();
    if (j.contains("overlap")) c.overlap = j.at("overlap").get<double>();
    if (j.contains("swr_ordering"))
        c.swr_ordering = parse_enum(j.at("swr_ordering"), "swr_ordering", kOrderings);
    if (j.contains("bound")) c.bound = parse_enum(j.at("bound"), "bound", kBounds);
    if (j.contains("geometry_id")) c.geometry_id = j.at("geometry_id").get<std::string>();
    if (j.contains("output")) c.output_path = j.at("output").get<std::string>();
    c.validate();
    return c;
}

json to_json_value(const ExperimentConfig& c)
{
    json j;
    j["method"] = std::string(to_string(c.method));
    j["domain"] = {c.x_left, c.x_right};
    j["interfaces"] = c.interfaces;
    j["dx"] = c.dx;
    j["dt"] = c.dt;
    j["T"] = c.t_final;
    j["thetas"] = c.thetas;
    j["kappa"] = std::string(to_string(c.kappa));
    j["problem"] = std::string(to_string(c.problem));
    if (c.guess == GuessSelector::Custom)
        j["initial_guess"] = {{"custom", c.custom_guess}};
    else
        j["initial_guess"] = std::string(to_string(c.guess));
    j["max_iters"] = c.max_iters;
    j["tol"] = c.tol;
    if (c.method == Method::Nnwr2D)
        j["n_y"] = c.n_y;
    if (c.method == Method::Swr) {
        j["overlap"] = c.overlap;
        j["swr_ordering"] = std::string(to_string(c.swr_ordering));
    }
    j["bound"] = std::string(to_string(c.bound));
    if (!c.geometry_id.empty())
        j["geometry_id"] = c.geometry_id;
    if (!c.output_path.empty())
        j["output"] = c.output_path;
    return j;
}

json parse_text(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        config_error(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text)
{
    try {
        return from_json(parse_text(json_text));
    } catch (const json::exception& e) {
        config_error(std::string("bad config value: ") + e.what());
    }
}

std::vector<ExperimentConfig> parse_config_set(std::string_view json_text, std::string* output)
{
    const json j = parse_text(json_text);
    std::vector<ExperimentConfig> out;
    try {
        if (j.is_object() && j.contains("runs")) {
            for (const auto& item : j.items())
                if (item.key() != "runs" && item.key() != "output")
                    config_error("unknown top-level key '" + item.key() + "'");
            if (!j.at("runs").is_array() || j.at("runs").empty())
                config_error("runs must be a nonempty array");
            for (const auto& run : j.at("runs"))
                out.push_back(from_json(run));
            if (output && j.contains("output"))
                *output = j.at("output").get<std::string>();
        } else {
            out.push_back(from_json(j));
            if (output)
                *output = out.back().output_path;
        }
    } catch (const json::exception& e) {
        config_error(std::string("bad config value: ") + e.what());
    }
    return out;
}

std::vector<ExperimentConfig> load_config_file(const std::string& path, std::string* output)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::IoError, "cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_set(ss.str(), output);
}

std::string to_json(const ExperimentConfig& config)
{
    return to_json_value(config).dump(2);
}

std::string to_json(std::span<const ExperimentConfig> configs, const std::string& output)
{
    json j;
    j["runs"] = json::array();
    for (const auto& c : configs)
        j["runs"].push_back(to_json_value(c));
    if (!output.empty())
        j["output"] = output;
    return j.dump(2);
}

}  // namespace wrlab
