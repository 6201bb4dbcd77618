#include "plab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plab {

using nlohmann::json;

json instance_to_json(const OspInstance& inst) {
    return json{{"problem", "osp"},
                {"C", inst.capacity},
                {"L", inst.bounds.L},
                {"U", inst.bounds.U},
                {"valuations", inst.valuations}};
}

json instance_to_json(const OapInstance& inst) {
    std::vector<double> lows;
    std::vector<double> highs;
    for (const auto& b : inst.bounds) {
        lows.push_back(b.L);
        highs.push_back(b.U);
    }
    return json{{"problem", "oap"},
                {"C_k", inst.capacities},
                {"L", lows},
                {"U", highs},
                {"valuations", inst.valuations}};
}

json instance_to_json(const OsccInstance& inst) {
    return json{{"problem", "oscc"},
                {"C", inst.capacity()},
                {"L", inst.bounds.L},
                {"U", inst.bounds.U},
                {"valuations", inst.valuations},
                {"cost", inst.cost.cumulative()}};
}

json instance_to_json(const AnyInstance& inst) {
    return std::visit([](const auto& i) { return instance_to_json(i); }, inst);
}

namespace {

[[noreturn]] void fail_at(const std::string& origin, std::size_t byte, const std::string& text,
                          const std::string& what) {
    const std::size_t line =
        1 + static_cast<std::size_t>(
                std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(
                                                            std::min(byte, text.size())),
                           '\n'));
    throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

AnyInstance parse_instance(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at(origin, e.byte, text, e.what());
    }
    try {
        const std::string problem = doc.at("problem").get<std::string>();
        if (problem == "osp") {
            OspInstance inst;
            inst.capacity = doc.at("C").get<int>();
            inst.bounds = Bounds::of(doc.at("L").get<double>(), doc.at("U").get<double>());
            inst.valuations = doc.at("valuations").get<std::vector<double>>();
            inst.validate();
            return inst;
        }
        if (problem == "oap") {
            OapInstance inst;
            inst.capacities = doc.at("C_k").get<std::vector<int>>();
            const auto lows = doc.at("L").get<std::vector<double>>();
            const auto highs = doc.at("U").get<std::vector<double>>();
            if (lows.size() != highs.size() || lows.size() != inst.capacities.size())
                throw std::invalid_argument("oap instance: C_k/L/U lengths differ");
            for (std::size_t k = 0; k < lows.size(); ++k)
                inst.bounds.push_back(Bounds::of(lows[k], highs[k]));
            inst.valuations = doc.at("valuations").get<std::vector<std::vector<double>>>();
            inst.validate();
            return inst;
        }
        if (problem == "oscc") {
            OsccInstance inst;
            inst.cost = ConvexCost::from_cumulative(doc.at("cost").get<std::vector<double>>());
            if (doc.contains("C") && doc.at("C").get<int>() != inst.capacity())
                throw std::invalid_argument("oscc instance: C disagrees with cost table length");
            inst.bounds = Bounds::of(doc.at("L").get<double>(), doc.at("U").get<double>());
            inst.valuations = doc.at("valuations").get<std::vector<double>>();
            inst.validate();
            return inst;
        }
        throw std::invalid_argument("unknown problem tag: " + problem);
    } catch (const json::exception& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }
}

AnyInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), path);
}

void save_instance(const AnyInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << instance_to_json(inst).dump(2) << '\n';
}

const char* problem_tag(const AnyInstance& inst) {
    switch (inst.index()) {
        case 0: return "osp";
        case 1: return "oap";
        default: return "oscc";
    }
}

}  // namespace plab
