#include "sosa/config.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "sosa/errors.hpp"

namespace sosa {
namespace {

std::vector<std::string> read_names(const YAML::Node& node, const char* section)
{
    if (node.IsScalar())
        return split_list(node.as<std::string>());
    if (!node.IsSequence())
        throw ConfigError(std::string("section '") + section + "' must be a list");
    std::vector<std::string> out;
    for (const auto& item : node)
        out.push_back(item.as<std::string>());
    return out;
}

template <typename T>
T read_scalar(const YAML::Node& node, const std::string& key)
{
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError("experiment." + key + " has the wrong type");
    }
}

} // namespace

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        const auto last = item.find_last_not_of(" \t");
        out.push_back(item.substr(first, last - first + 1));
    }
    return out;
}

ExperimentConfig parse_experiment_config(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("config is not valid YAML: ") + e.what());
    }
    ExperimentConfig cfg;
    if (root.IsNull())
        return cfg;
    if (!root.IsMap())
        throw ConfigError("config must be a mapping of sections");

    for (const auto& section : root) {
        const auto name = section.first.as<std::string>();
        const YAML::Node& body = section.second;
        if (name == "algorithms") {
            cfg.spec.algorithms = read_names(body, "algorithms");
        } else if (name == "problems") {
            cfg.spec.problems = read_names(body, "problems");
        } else if (name == "experiment") {
            if (!body.IsMap())
                throw ConfigError("section 'experiment' must be a mapping");
            for (const auto& entry : body) {
                const auto key = entry.first.as<std::string>();
                const YAML::Node& value = entry.second;
                if (key == "trials")
                    cfg.spec.trials = read_scalar<std::size_t>(value, key);
                else if (key == "budget")
                    cfg.spec.budget = read_scalar<std::size_t>(value, key);
                else if (key == "seed")
                    cfg.spec.base_seed = read_scalar<std::uint64_t>(value, key);
                else if (key == "instance_seed")
                    cfg.spec.instance_seed = read_scalar<std::uint64_t>(value, key);
                else if (key == "jobs")
                    cfg.spec.jobs = read_scalar<std::size_t>(value, key);
                else if (key == "out")
                    cfg.out_dir = read_scalar<std::string>(value, key);
                else
                    throw ConfigError("unknown key experiment." + key);
            }
        } else {
            throw ConfigError("unknown config section '" + name + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

} // namespace sosa
